#include "lipext/nets.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

namespace {

void check_index(int idx, int n, const char* what) {
    if (idx < 0 || idx >= n) {
        std::ostringstream msg;
        msg << what << " " << idx << " is outside 0.." << n - 1;
        throw IndexOutOfRange(msg.str());
    }
}

} // namespace

SeparatedNet greedy_maximal_separated(const FiniteMetricSpace& space, double t,
                                      const std::vector<int>& seed_indices) {
    if (!std::isfinite(t) || t <= 0.0)
        throw NonpositiveInput("net separation parameter must be positive");

    const int n = space.size();
    std::vector<char> member(n, 0);
    SeparatedNet net;
    net.t = t;

    for (int s : seed_indices) {
        check_index(s, n, "seed index");
        if (member[s]) {
            std::ostringstream msg;
            msg << "seed index " << s << " appears twice";
            throw BadParameters(msg.str());
        }
        for (int other : net.indices)
            if (space.dist(s, other) < t) {
                std::ostringstream msg;
                msg << "seed indices " << other << " and " << s << " are at distance "
                    << space.dist(s, other) << " < t = " << t;
                throw SeedsTooClose(msg.str());
            }
        member[s] = 1;
        net.indices.push_back(s);
    }

    // Greedy scan: a point joins iff it keeps the separation invariant.
    // Distance exactly t counts as separated.
    for (int i = 0; i < n; ++i) {
        if (member[i]) continue;
        bool far_enough = true;
        for (int s : net.indices)
            if (space.dist(i, s) < t) {
                far_enough = false;
                break;
            }
        if (far_enough) {
            member[i] = 1;
            net.indices.push_back(i);
        }
    }

    double covering = 0.0;
    for (int i = 0; i < n; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int s : net.indices) nearest = std::min(nearest, space.dist(i, s));
        covering = std::max(covering, nearest);
    }
    net.covering_radius = covering;
    return net;
}

NetReport verify_net(const FiniteMetricSpace& space, const SeparatedNet& net) {
    if (!std::isfinite(net.t) || net.t <= 0.0)
        throw NonpositiveInput("net separation parameter must be positive");
    const int n = space.size();
    for (int s : net.indices) check_index(s, n, "net index");

    NetReport report;

    // Separation: comparisons are exact; the convention is >= t.
    report.separation_ok = true;
    double closest = std::numeric_limits<double>::infinity();
    const std::size_t m = net.indices.size();
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b) {
            const double d = space.dist(net.indices[a], net.indices[b]);
            if (d < closest) {
                closest = d;
                report.worst_pair = {net.indices[a], net.indices[b]};
                report.worst_pair_dist = d;
            }
        }
    if (m >= 2 && closest < net.t) report.separation_ok = false;

    // Covering: every point strictly within t of some member.
    report.covering_ok = true;
    double farthest = -1.0;
    for (int i = 0; i < n; ++i) {
        double nearest = std::numeric_limits<double>::infinity();
        for (int s : net.indices) nearest = std::min(nearest, space.dist(i, s));
        if (nearest > farthest) {
            farthest = nearest;
            report.worst_uncovered = i;
            report.worst_uncovered_dist = nearest;
        }
    }
    if (m == 0 || farthest >= net.t) report.covering_ok = false;

    return report;
}

} // namespace lipext
