#pragma once

/**
 * Certified Lipschitz approximation on a finite metric space.
 *
 * For a sampled function f and a target epsilon, the pipeline
 *
 *   1. measures the smallest constant c_star with
 *      |f(x) - f(y)| <= epsilon + c_star * dist(x, y) for all pairs,
 *   2. picks the working constant C slightly above c_star (and strictly
 *      above epsilon / diameter so nets stay non-trivial),
 *   3. builds a maximal t-separated net with t = epsilon / C,
 *   4. restricts f to the net, whose Lipschitz constant is at most 2C,
 *   5. extends the restriction back to the whole space,
 *
 * and certifies: extension Lipschitz constant at most 4C (complex input,
 * componentwise extension) or 2C (real input), and uniform error at most
 * 6 * epsilon (complex) or 4 * epsilon (real). The certificate reports both
 * the proven bounds and the achieved values so slack is visible data.
 *
 * The companion moduli: uc_modulus measures the largest delta such that
 * dist < delta forces |f(x) - f(y)| < epsilon, and prop2_constant(epsilon,
 * delta) = epsilon / delta is the constant a geodesic subdivision argument
 * would produce from it on a length space.
 */

#include <optional>
#include <utility>
#include <vector>

#include "lipext/extension.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/nets.hpp"

namespace lipext {

enum class ValueMode { real, complex };

std::string_view value_mode_name(ValueMode m);
std::optional<ValueMode> value_mode_from_name(std::string_view name);

struct StarModulus {
    double epsilon = 0.0;
    double c_star = 0.0; // minimal non-strict constant, clamped at 0
    std::optional<std::pair<int, int>> witness; // pair achieving the sup (n >= 2)
};

struct UCModulus {
    double epsilon = 0.0;
    double delta = 0.0;        // sentinel (diameter) when no_violation
    bool no_violation = false; // no pair with |f(x) - f(y)| >= epsilon
    std::optional<std::pair<int, int>> witness; // closest violating pair
};

struct ModulusRow {
    double epsilon = 0.0;
    double c_star = 0.0;
    std::optional<std::pair<int, int>> witness;
    std::optional<double> delta; // nullopt when no pair reaches epsilon
};

using ModulusTable = std::vector<ModulusRow>;

StarModulus star_modulus(const FiniteMetricSpace& space, const SampledFunction& f, double epsilon);
UCModulus uc_modulus(const FiniteMetricSpace& space, const SampledFunction& f, double epsilon);

// One row per epsilon, star and uniform-continuity moduli side by side.
// c_star is non-increasing and delta non-decreasing in epsilon.
ModulusTable star_modulus_table(const FiniteMetricSpace& space, const SampledFunction& f,
                                const std::vector<double>& epsilons);

// epsilon / delta, both strictly positive.
double prop2_constant(double epsilon, double delta);

struct StarViolation {
    int i = -1;
    int j = -1;
    double excess = 0.0; // |f(i) - f(j)| - epsilon - c * dist(i, j)
};

struct StarCheckReport {
    bool holds = false;
    std::vector<StarViolation> violations; // capped at max_listed
    long long violation_count = 0;
    double tol = 0.0;
    static constexpr int max_listed = 100;
};

// Exhaustive pair check of |f(x) - f(y)| <= epsilon + c * dist(x, y), with
// tolerance 1e-9 relative to the right-hand side's scale.
StarCheckReport check_star(const FiniteMetricSpace& space, const SampledFunction& f, double epsilon,
                           double c);

struct GrowthReport {
    bool holds = false;
    double worst_slack = 0.0; // min over x of epsilon + c * dist(a, x) - |f(x) - f(a)|
    int worst_index = -1;
    double tol = 0.0;
};

// The x-vs-base-point instance of the pair check: growth of f away from a
// is limited to epsilon + c * dist(a, x).
GrowthReport growth_bound_check(const FiniteMetricSpace& space, const SampledFunction& f,
                                int base_index, double epsilon, double c);

struct ApproximationCertificate {
    double epsilon = 0.0;
    double c_used = 0.0;              // working constant C
    double t = 0.0;                   // epsilon / c_used
    int net_size = 0;
    double restriction_lip = 0.0;     // measured Lipschitz constant of f on the net
    double extension_lip_bound = 0.0; // 4 * c_used (complex) or 2 * c_used (real)
    double proven_sup_error = 0.0;    // 6 * epsilon (complex) or 4 * epsilon (real)
    double achieved_sup_error = 0.0;  // measured max |F - f|
    double measured_extension_lip = 0.0;
    ValueMode mode = ValueMode::complex;
    SeparatedNet net;
};

// restriction_lip <= 2 c_used, measured_extension_lip <= extension_lip_bound,
// achieved_sup_error <= proven_sup_error, all within relative 1e-9 slack.
bool certificate_ok(const ApproximationCertificate& cert);

struct ApproximationResult {
    SampledFunction values;
    ApproximationCertificate certificate;
};

// Net-restrict-extend pipeline. When c_override is given it must satisfy the
// pair check for this epsilon (StarViolated otherwise); when absent the
// working constant is c_star * (1 + margin) clamped strictly above
// epsilon / diameter. One-point spaces return f unchanged with a zero-error
// certificate (c_used = 1, net = {0}).
//
// The extension step uses the measured Lipschitz constant of the net
// restriction as the McShane constant. It never exceeds 2 c_used, so every
// certified bound holds, and an f whose restriction is constant comes back
// constant with zero error.
ApproximationResult theorem1_approximant(const FiniteMetricSpace& space, const SampledFunction& f,
                                         double epsilon,
                                         std::optional<double> c_override = std::nullopt,
                                         ValueMode mode = ValueMode::complex);

// Margin applied above c_star when auto-selecting the working constant.
inline constexpr double star_margin = 1e-6;

} // namespace lipext
