#pragma once

/**
 * Lipschitz-constant measurement and extension of functions from a subset S
 * to the whole space.
 *
 * The real extension is F(x) = min over s in S of f(s) + C * dist(x, s); it
 * agrees with f on S and is the greatest C-Lipschitz extension. The dual
 * G(x) = max over s of f(s) - C * dist(x, s) is the least one and serves as
 * the extremality oracle. Complex values are extended componentwise, which
 * multiplies the Lipschitz constant by at most sqrt(2).
 */

#include <complex>
#include <vector>

#include "lipext/metric_space.hpp"

namespace lipext {

struct SampledFunction {
    std::vector<std::complex<double>> values; // one per point of the space

    bool is_real() const;
    static SampledFunction from_real(const std::vector<double>& v);
    std::vector<double> real_parts() const;
    std::vector<double> imag_parts() const;
};

struct RestrictedFunction {
    std::vector<int> indices; // subset S, distinct, in range
    std::vector<std::complex<double>> values;

    bool is_real() const;
};

RestrictedFunction restrict_to(const SampledFunction& f, const std::vector<int>& indices);

// max over distinct pairs of |f(x) - f(y)| / dist(x, y); 0 for one point.
double lipschitz_constant(const FiniteMetricSpace& space, const SampledFunction& f);
double lipschitz_constant(const FiniteMetricSpace& space, const RestrictedFunction& f);

// Real-valued inputs only. Requires C >= lipschitz_constant of the
// restriction (CTooSmall otherwise; with a smaller C the result would not
// agree with f on S).
SampledFunction mcshane_extend_real(const FiniteMetricSpace& space, const RestrictedFunction& f,
                                    double c);

// Dual formula; least C-Lipschitz extension, pointwise below the greatest one.
SampledFunction mcshane_extend_real_min(const FiniteMetricSpace& space, const RestrictedFunction& f,
                                        double c);

// Componentwise extension of a complex restriction; the result is Lipschitz
// with constant at most sqrt(2) * C (and in particular 2C).
SampledFunction extend_complex(const FiniteMetricSpace& space, const RestrictedFunction& f,
                               double c);

// max over points of |a(x) - b(x)|.
double sup_distance(const SampledFunction& a, const SampledFunction& b);

} // namespace lipext
