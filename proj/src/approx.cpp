#include "lipext/approx.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "lipext/errors.hpp"

namespace lipext {

namespace {

constexpr double rel_tol = 1e-9;

void check_epsilon(double epsilon) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw NonpositiveInput("epsilon must be positive");
}

void check_sizes(const FiniteMetricSpace& space, const SampledFunction& f) {
    if (f.values.size() != static_cast<std::size_t>(space.size()))
        throw DimensionMismatch("function value count does not match the space");
}

// Non-strict comparison with slack 1e-9 relative to the bound's scale; the
// mathematical statements are inequalities between exactly representable
// bounds and measured maxima, so only accumulated rounding needs absorbing.
bool leq_tol(double value, double bound) {
    return value <= bound + rel_tol * std::max(1.0, std::abs(bound));
}

} // namespace

std::string_view value_mode_name(ValueMode m) {
    return m == ValueMode::real ? "real" : "complex";
}

std::optional<ValueMode> value_mode_from_name(std::string_view name) {
    if (name == "real") return ValueMode::real;
    if (name == "complex") return ValueMode::complex;
    return std::nullopt;
}

StarModulus star_modulus(const FiniteMetricSpace& space, const SampledFunction& f,
                         double epsilon) {
    check_epsilon(epsilon);
    check_sizes(space, f);

    StarModulus result;
    result.epsilon = epsilon;
    const int n = space.size();
    if (n < 2) return result; // c_star = 0, no pair to witness

    // The witness is the maximizing pair of the raw ratio, recorded even when
    // the maximum is negative (then c_star clamps to 0 and the witness is the
    // pair closest to forcing a positive constant).
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double ratio = (std::abs(f.values[i] - f.values[j]) - epsilon) / space.dist(i, j);
            if (ratio > best) {
                best = ratio;
                result.witness = {i, j};
            }
        }
    result.c_star = std::max(0.0, best);
    return result;
}

UCModulus uc_modulus(const FiniteMetricSpace& space, const SampledFunction& f, double epsilon) {
    check_epsilon(epsilon);
    check_sizes(space, f);

    UCModulus result;
    result.epsilon = epsilon;
    const int n = space.size();

    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(f.values[i] - f.values[j]) < epsilon) continue;
            const double d = space.dist(i, j);
            if (d < best) {
                best = d;
                result.witness = {i, j};
            }
        }

    if (result.witness) {
        result.delta = best;
    } else {
        // Every pair oscillates below epsilon. Any positive delta works; the
        // diameter is the natural finite sentinel (1 for a one-point space,
        // whose diameter is 0).
        result.no_violation = true;
        const double diam = diameter(space);
        result.delta = diam > 0.0 ? diam : 1.0;
    }
    return result;
}

ModulusTable star_modulus_table(const FiniteMetricSpace& space, const SampledFunction& f,
                                const std::vector<double>& epsilons) {
    ModulusTable table;
    table.reserve(epsilons.size());
    for (double epsilon : epsilons) {
        const StarModulus sm = star_modulus(space, f, epsilon);
        const UCModulus uc = uc_modulus(space, f, epsilon);
        ModulusRow row;
        row.epsilon = epsilon;
        row.c_star = sm.c_star;
        row.witness = sm.witness;
        if (!uc.no_violation) row.delta = uc.delta;
        table.push_back(row);
    }
    return table;
}

double prop2_constant(double epsilon, double delta) {
    if (!std::isfinite(epsilon) || epsilon <= 0.0)
        throw NonpositiveInput("epsilon must be positive");
    if (!std::isfinite(delta) || delta <= 0.0)
        throw NonpositiveInput("delta must be positive");
    return epsilon / delta;
}

StarCheckReport check_star(const FiniteMetricSpace& space, const SampledFunction& f,
                           double epsilon, double c) {
    check_epsilon(epsilon);
    check_sizes(space, f);
    if (!std::isfinite(c) || c < 0.0)
        throw NonpositiveInput("the pair-check constant must be non-negative");

    StarCheckReport report;
    const int n = space.size();
    const double diam = diameter(space);
    report.tol = rel_tol * std::max(1.0, epsilon + c * diam);

    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double lhs = std::abs(f.values[i] - f.values[j]);
            const double rhs = epsilon + c * space.dist(i, j);
            if (lhs > rhs + report.tol) {
                ++report.violation_count;
                if (report.violations.size() <
                    static_cast<std::size_t>(StarCheckReport::max_listed))
                    report.violations.push_back({i, j, lhs - rhs});
            }
        }
    report.holds = report.violation_count == 0;
    return report;
}

GrowthReport growth_bound_check(const FiniteMetricSpace& space, const SampledFunction& f,
                                int base_index, double epsilon, double c) {
    check_epsilon(epsilon);
    check_sizes(space, f);
    if (!std::isfinite(c) || c < 0.0)
        throw NonpositiveInput("the pair-check constant must be non-negative");
    const int n = space.size();
    if (base_index < 0 || base_index >= n) {
        std::ostringstream msg;
        msg << "base index " << base_index << " is outside 0.." << n - 1;
        throw IndexOutOfRange(msg.str());
    }

    GrowthReport report;
    report.tol = rel_tol * std::max(1.0, epsilon + c * diameter(space));
    report.worst_slack = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
        if (x == base_index) continue;
        const double slack = epsilon + c * space.dist(base_index, x) -
                             std::abs(f.values[x] - f.values[base_index]);
        if (slack < report.worst_slack) {
            report.worst_slack = slack;
            report.worst_index = x;
        }
    }
    report.holds = report.worst_slack >= -report.tol;
    return report;
}

bool certificate_ok(const ApproximationCertificate& cert) {
    if (cert.epsilon <= 0.0 || cert.c_used <= 0.0) return false;
    if (cert.net_size != static_cast<int>(cert.net.indices.size())) return false;
    if (cert.net_size < 1) return false;

    const double lip_factor = cert.mode == ValueMode::complex ? 4.0 : 2.0;
    const double err_factor = cert.mode == ValueMode::complex ? 6.0 : 4.0;
    if (!leq_tol(cert.extension_lip_bound, lip_factor * cert.c_used) ||
        !leq_tol(lip_factor * cert.c_used, cert.extension_lip_bound))
        return false;
    if (!leq_tol(cert.proven_sup_error, err_factor * cert.epsilon) ||
        !leq_tol(err_factor * cert.epsilon, cert.proven_sup_error))
        return false;

    return leq_tol(cert.restriction_lip, 2.0 * cert.c_used) &&
           leq_tol(cert.measured_extension_lip, cert.extension_lip_bound) &&
           leq_tol(cert.achieved_sup_error, cert.proven_sup_error);
}

ApproximationResult theorem1_approximant(const FiniteMetricSpace& space, const SampledFunction& f,
                                         double epsilon, std::optional<double> c_override,
                                         ValueMode mode) {
    check_epsilon(epsilon);
    check_sizes(space, f);
    if (mode == ValueMode::real && !f.is_real())
        throw BadParameters("real mode needs real function values");

    const int n = space.size();
    const double lip_factor = mode == ValueMode::complex ? 4.0 : 2.0;
    const double err_factor = mode == ValueMode::complex ? 6.0 : 4.0;

    if (n == 1) {
        // Degenerate space: f is its own approximant at every epsilon.
        ApproximationResult result;
        result.values = f;
        auto& cert = result.certificate;
        cert.epsilon = epsilon;
        cert.c_used = 1.0;
        cert.t = epsilon;
        cert.net = SeparatedNet{epsilon, {0}, 0.0};
        cert.net_size = 1;
        cert.restriction_lip = 0.0;
        cert.extension_lip_bound = lip_factor;
        cert.proven_sup_error = err_factor * epsilon;
        cert.achieved_sup_error = 0.0;
        cert.measured_extension_lip = 0.0;
        cert.mode = mode;
        return result;
    }

    const double diam = diameter(space);
    double c_used = 0.0;
    if (c_override) {
        if (!std::isfinite(*c_override) || *c_override <= 0.0)
            throw NonpositiveInput("the supplied pipeline constant must be positive");
        const StarCheckReport report = check_star(space, f, epsilon, *c_override);
        if (!report.holds) {
            const StarViolation& v = report.violations.front();
            std::ostringstream msg;
            msg << "the supplied constant " << *c_override
                << " fails the pair condition at epsilon " << epsilon << ": pair (" << v.i
                << ", " << v.j << ") exceeds the bound by " << v.excess;
            throw StarViolated(msg.str());
        }
        c_used = *c_override;
    } else {
        // Minimal measured constant, nudged to make the strict form hold, and
        // kept above epsilon / diameter so the net has at least two points.
        const StarModulus sm = star_modulus(space, f, epsilon);
        c_used = std::max(sm.c_star, epsilon / diam) * (1.0 + star_margin);
    }

    const double t = epsilon / c_used;
    const SeparatedNet net = greedy_maximal_separated(space, t, {0});
    const RestrictedFunction restriction = restrict_to(f, net.indices);
    const double restriction_lip = lipschitz_constant(space, restriction);

    // The extension constant is the measured constant of the restriction. It
    // never exceeds the certified 2 c_used, every proven bound holds a
    // fortiori, and a constant restriction comes back as a constant function.
    SampledFunction extended = mode == ValueMode::complex
                                   ? extend_complex(space, restriction, restriction_lip)
                                   : mcshane_extend_real(space, restriction, restriction_lip);

    ApproximationResult result;
    result.values = std::move(extended);
    auto& cert = result.certificate;
    cert.epsilon = epsilon;
    cert.c_used = c_used;
    cert.t = t;
    cert.net = net;
    cert.net_size = static_cast<int>(net.indices.size());
    cert.restriction_lip = restriction_lip;
    cert.extension_lip_bound = lip_factor * c_used;
    cert.proven_sup_error = err_factor * epsilon;
    cert.achieved_sup_error = sup_distance(result.values, f);
    cert.measured_extension_lip = lipschitz_constant(space, result.values);
    cert.mode = mode;
    return result;
}

} // namespace lipext
