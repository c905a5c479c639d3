#include "lipext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "lipext/errors.hpp"

namespace lipext {

namespace {

bool all_real(const std::vector<std::complex<double>>& values) {
    for (const auto& v : values)
        if (v.imag() != 0.0) return false;
    return true;
}

void check_finite(const std::vector<std::complex<double>>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        if (!std::isfinite(values[i].real()) || !std::isfinite(values[i].imag())) {
            std::ostringstream msg;
            msg << "function value " << i << " is not finite";
            throw NonFiniteValue(msg.str());
        }
}

void check_subset(const RestrictedFunction& f, int n) {
    if (f.indices.empty()) throw EmptySubset("the subset must contain at least one point");
    if (f.values.size() != f.indices.size())
        throw DimensionMismatch("restricted function has mismatched index and value counts");
    std::vector<char> seen(n, 0);
    for (int idx : f.indices) {
        if (idx < 0 || idx >= n) {
            std::ostringstream msg;
            msg << "subset index " << idx << " is outside 0.." << n - 1;
            throw IndexOutOfRange(msg.str());
        }
        if (seen[idx]) {
            std::ostringstream msg;
            msg << "subset index " << idx << " appears twice";
            throw BadParameters(msg.str());
        }
        seen[idx] = 1;
    }
    check_finite(f.values);
}

} // namespace

bool SampledFunction::is_real() const { return all_real(values); }

SampledFunction SampledFunction::from_real(const std::vector<double>& v) {
    SampledFunction f;
    f.values.reserve(v.size());
    for (double x : v) f.values.emplace_back(x, 0.0);
    return f;
}

std::vector<double> SampledFunction::real_parts() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.real());
    return out;
}

std::vector<double> SampledFunction::imag_parts() const {
    std::vector<double> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(v.imag());
    return out;
}

bool RestrictedFunction::is_real() const { return all_real(values); }

RestrictedFunction restrict_to(const SampledFunction& f, const std::vector<int>& indices) {
    RestrictedFunction r;
    r.indices = indices;
    r.values.reserve(indices.size());
    const int n = static_cast<int>(f.values.size());
    if (indices.empty()) throw EmptySubset("the subset must contain at least one point");
    std::vector<char> seen(n, 0);
    for (int idx : indices) {
        if (idx < 0 || idx >= n) {
            std::ostringstream msg;
            msg << "subset index " << idx << " is outside 0.." << n - 1;
            throw IndexOutOfRange(msg.str());
        }
        if (seen[idx]) {
            std::ostringstream msg;
            msg << "subset index " << idx << " appears twice";
            throw BadParameters(msg.str());
        }
        seen[idx] = 1;
        r.values.push_back(f.values[idx]);
    }
    return r;
}

double lipschitz_constant(const FiniteMetricSpace& space, const SampledFunction& f) {
    const int n = space.size();
    if (f.values.size() != static_cast<std::size_t>(n))
        throw DimensionMismatch("function value count does not match the space");
    check_finite(f.values);
    double lip = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            lip = std::max(lip, std::abs(f.values[i] - f.values[j]) / space.dist(i, j));
    return lip;
}

double lipschitz_constant(const FiniteMetricSpace& space, const RestrictedFunction& f) {
    check_subset(f, space.size());
    const std::size_t m = f.indices.size();
    double lip = 0.0;
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = a + 1; b < m; ++b)
            lip = std::max(lip, std::abs(f.values[a] - f.values[b]) /
                                    space.dist(f.indices[a], f.indices[b]));
    return lip;
}

namespace {

// Shared core of the two extremal formulas: sign = +1 gives the greatest
// extension (min of f + C d), sign = -1 the least (max of f - C d, computed
// as -min of (-f) + C d).
SampledFunction extend_real_signed(const FiniteMetricSpace& space, const RestrictedFunction& f,
                                   double c, double sign) {
    if (!f.is_real())
        throw BadParameters("real extension needs real values; use the complex extension instead");
    check_subset(f, space.size());
    if (!std::isfinite(c) || c < 0.0)
        throw BadParameters("extension constant must be finite and non-negative");
    const double lip = lipschitz_constant(space, f);
    if (c < lip) {
        std::ostringstream msg;
        msg << "extension constant " << c << " is below the restriction's Lipschitz constant "
            << lip << "; the result would not agree with the data on the subset";
        throw CTooSmall(msg.str());
    }

    const int n = space.size();
    const std::size_t m = f.indices.size();
    std::vector<double> out(n);
    for (int x = 0; x < n; ++x) {
        double best = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < m; ++k)
            best = std::min(best, sign * f.values[k].real() + c * space.dist(x, f.indices[k]));
        out[x] = sign * best;
    }
    return SampledFunction::from_real(out);
}

} // namespace

SampledFunction mcshane_extend_real(const FiniteMetricSpace& space, const RestrictedFunction& f,
                                    double c) {
    return extend_real_signed(space, f, c, 1.0);
}

SampledFunction mcshane_extend_real_min(const FiniteMetricSpace& space, const RestrictedFunction& f,
                                        double c) {
    return extend_real_signed(space, f, c, -1.0);
}

SampledFunction extend_complex(const FiniteMetricSpace& space, const RestrictedFunction& f,
                               double c) {
    check_subset(f, space.size());
    if (!std::isfinite(c) || c < 0.0)
        throw BadParameters("extension constant must be finite and non-negative");

    // Exactly-real data takes the real path unchanged. Extending the zero
    // imaginary part with the greatest-extension formula would manufacture a
    // nonzero imaginary component (c times the distance to the subset).
    if (f.is_real()) return mcshane_extend_real(space, f, c);

    RestrictedFunction re;
    RestrictedFunction im;
    re.indices = im.indices = f.indices;
    re.values.reserve(f.values.size());
    im.values.reserve(f.values.size());
    for (const auto& v : f.values) {
        re.values.emplace_back(v.real(), 0.0);
        im.values.emplace_back(v.imag(), 0.0);
    }

    // Each component is at most as steep as the complex values, so one
    // up-front check gives a clearer error than whichever component trips.
    const double lip = std::max(lipschitz_constant(space, re), lipschitz_constant(space, im));
    if (c < lip) {
        std::ostringstream msg;
        msg << "extension constant " << c
            << " is below the restriction's componentwise Lipschitz constant " << lip;
        throw CTooSmall(msg.str());
    }

    const SampledFunction fre = mcshane_extend_real(space, re, c);
    const SampledFunction fim = mcshane_extend_real(space, im, c);
    SampledFunction out;
    out.values.reserve(fre.values.size());
    for (std::size_t i = 0; i < fre.values.size(); ++i)
        out.values.emplace_back(fre.values[i].real(), fim.values[i].real());
    return out;
}

double sup_distance(const SampledFunction& a, const SampledFunction& b) {
    if (a.values.size() != b.values.size())
        throw DimensionMismatch("functions are sampled on different point counts");
    double sup = 0.0;
    for (std::size_t i = 0; i < a.values.size(); ++i)
        sup = std::max(sup, std::abs(a.values[i] - b.values[i]));
    return sup;
}

} // namespace lipext
