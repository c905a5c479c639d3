/**
 * End-to-end acceptance gate for the toolkit. Nine numbered criteria run in
 * sequence, each printing exactly one [PASS] or [FAIL] line; failures also
 * list the first few offending checks. The process exits non-zero when any
 * criterion fails, so the binary doubles as a CI gate.
 */

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lipext/approx.hpp"
#include "lipext/disk.hpp"
#include "lipext/errors.hpp"
#include "lipext/extension.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/nets.hpp"
#include "lipext/rng.hpp"
#include "test_support.hpp"

namespace {

using namespace lipext;
using Clock = std::chrono::steady_clock;

int g_checks = 0;
int g_failed = 0;
std::vector<std::string> g_details;

void expect(bool ok, const std::string& what) {
    ++g_checks;
    if (ok) return;
    ++g_failed;
    if (g_details.size() < 8) g_details.push_back(what);
}

std::string num(double v) {
    std::ostringstream out;
    out.precision(17);
    out << v;
    return out.str();
}

bool run_criterion(int number, const char* label, const std::function<void()>& body) {
    g_checks = 0;
    g_failed = 0;
    g_details.clear();
    const auto start = Clock::now();
    body();
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    const bool pass = g_failed == 0;
    std::printf("[%s] criterion %d: %s (%d checks, %.2f s)\n", pass ? "PASS" : "FAIL", number,
                label, g_checks, elapsed);
    if (!pass) {
        std::printf("       %d of %d checks failed; first failures:\n", g_failed, g_checks);
        for (const std::string& d : g_details) std::printf("       - %s\n", d.c_str());
    }
    return pass;
}

// Moduli tables recorded by criteria 4-6 and replayed by criterion 7.
struct RecordedTable {
    std::string source;
    ModulusTable table;
};
std::vector<RecordedTable> g_tables;

double value_scale(const std::vector<std::complex<double>>& values) {
    double scale = 1.0;
    for (const auto& v : values) scale = std::max(scale, std::abs(v));
    return scale;
}

// Criterion 1: greatest and least real extensions on a 100-space corpus.
void extension_suite() {
    const auto start = Clock::now();
    for (int i = 0; i < 100; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 200, 9000 + i);
        auto rng = make_rng(500 + i);
        const int subset = 1 + uniform_index(rng, space.size());
        const RestrictedFunction f = testsupport::random_real_restriction(rng, space, subset);
        const double c = lipschitz_constant(space, f);
        const SampledFunction upper = mcshane_extend_real(space, f, c);
        const SampledFunction lower = mcshane_extend_real_min(space, f, c);

        const double scale = value_scale(f.values);
        double agreement = 0.0;
        for (std::size_t k = 0; k < f.indices.size(); ++k) {
            const int idx = f.indices[k];
            agreement = std::max(agreement, std::abs(upper.values[idx] - f.values[k]));
            agreement = std::max(agreement, std::abs(lower.values[idx] - f.values[k]));
        }
        expect(agreement <= 1e-12 * scale,
               "instance " + std::to_string(i) + ": subset agreement " + num(agreement));
        const double upper_lip = lipschitz_constant(space, upper);
        const double lower_lip = lipschitz_constant(space, lower);
        expect(upper_lip <= c + 1e-9, "instance " + std::to_string(i) + ": greatest extension has "
                                          "constant " + num(upper_lip) + " > " + num(c));
        expect(lower_lip <= c + 1e-9, "instance " + std::to_string(i) + ": least extension has "
                                          "constant " + num(lower_lip) + " > " + num(c));

        const double lambdas[3] = {uniform_unit(rng), uniform_unit(rng), uniform_unit(rng)};
        bool ordered = true;
        bool dominates_mixes = true;
        for (int x = 0; x < space.size(); ++x) {
            const double hi = upper.values[x].real();
            const double lo = lower.values[x].real();
            const double tol = 1e-9 * std::max(1.0, std::abs(hi));
            if (lo > hi + tol) ordered = false;
            for (double lambda : lambdas)
                if (lambda * lo + (1.0 - lambda) * hi > hi + tol) dominates_mixes = false;
        }
        expect(ordered, "instance " + std::to_string(i) + ": least extension exceeds greatest");
        expect(dominates_mixes,
               "instance " + std::to_string(i) + ": a convex mix exceeds the greatest extension");
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    expect(elapsed < 10.0, "corpus runtime " + num(elapsed) + " s reached the 10 s budget");
}

// Criterion 2: componentwise complex extension contracts within sqrt(2) * C.
void complex_extension_bound() {
    for (int i = 0; i < 100; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 200, 9000 + i);
        auto rng = make_rng(1500 + i);
        const int subset = 1 + uniform_index(rng, space.size());
        const RestrictedFunction f = testsupport::random_complex_restriction(rng, space, subset);
        const double c = lipschitz_constant(space, f);
        const SampledFunction out = extend_complex(space, f, c);

        const double scale = value_scale(f.values);
        double agreement = 0.0;
        for (std::size_t k = 0; k < f.indices.size(); ++k)
            agreement = std::max(agreement, std::abs(out.values[f.indices[k]] - f.values[k]));
        expect(agreement <= 1e-12 * scale,
               "instance " + std::to_string(i) + ": subset agreement " + num(agreement));
        const double lip = lipschitz_constant(space, out);
        expect(lip <= std::numbers::sqrt2 * c + 1e-9,
               "instance " + std::to_string(i) + ": extension constant " + num(lip) +
                   " exceeds sqrt(2) * " + num(c));
        expect(lip <= 2.0 * c + 1e-9,
               "instance " + std::to_string(i) + ": extension constant exceeds 2 * C");
    }
}

// Criterion 3: greedy nets are exactly separated, covering, and idempotent.
void net_suite() {
    for (int i = 0; i < 100; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 120, 333 + i);
        auto rng = make_rng(2400 + i);
        const double t = uniform_in(rng, 0.1, 1.0) * diameter(space);
        const SeparatedNet net = greedy_maximal_separated(space, t);
        const NetReport report = verify_net(space, net);
        expect(report.separation_ok, "instance " + std::to_string(i) + ": net pair (" +
                                         std::to_string(report.worst_pair.first) + ", " +
                                         std::to_string(report.worst_pair.second) +
                                         ") closer than t");
        expect(report.covering_ok, "instance " + std::to_string(i) + ": point " +
                                       std::to_string(report.worst_uncovered) +
                                       " farther than t from the net");
        const SeparatedNet again = greedy_maximal_separated(space, t, net.indices);
        expect(again.indices == net.indices,
               "instance " + std::to_string(i) + ": rerunning greedy changed the net");
        expect(again.covering_radius == net.covering_radius,
               "instance " + std::to_string(i) + ": rerunning greedy changed the covering radius");
    }
}

// Criterion 4: certified pipeline error bounds on perturbed Lipschitz inputs.
void certified_error_suite() {
    const auto start = Clock::now();
    for (int i = 0; i < 50; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 200, 7100 + i);
        auto rng = make_rng(6200 + i);
        const double eps = uniform_in(rng, 0.05, 0.5);
        const double lip = uniform_in(rng, 0.5, 3.0);
        const SampledFunction f =
            testsupport::perturbed_lipschitz_function(rng, space, lip, 0.45 * eps);

        const ApproximationResult as_complex =
            theorem1_approximant(space, f, eps, std::nullopt, ValueMode::complex);
        const ApproximationResult as_real =
            theorem1_approximant(space, f, eps, std::nullopt, ValueMode::real);
        const ApproximationCertificate& cc = as_complex.certificate;
        const ApproximationCertificate& rc = as_real.certificate;

        expect(cc.achieved_sup_error <= 6.0 * eps + 1e-9,
               "instance " + std::to_string(i) + ": complex error " + num(cc.achieved_sup_error) +
                   " above 6 * " + num(eps));
        expect(rc.achieved_sup_error <= 4.0 * eps + 1e-9,
               "instance " + std::to_string(i) + ": real error " + num(rc.achieved_sup_error) +
                   " above 4 * " + num(eps));
        expect(cc.restriction_lip <= 2.0 * cc.c_used + 1e-9,
               "instance " + std::to_string(i) + ": restriction constant above 2 * C");
        expect(rc.restriction_lip <= 2.0 * rc.c_used + 1e-9,
               "instance " + std::to_string(i) + ": restriction constant above 2 * C (real)");
        expect(cc.measured_extension_lip <= 4.0 * cc.c_used + 1e-9,
               "instance " + std::to_string(i) + ": complex extension constant above 4 * C");
        expect(rc.measured_extension_lip <= 2.0 * rc.c_used + 1e-9,
               "instance " + std::to_string(i) + ": real extension constant above 2 * C");
        expect(certificate_ok(cc) && certificate_ok(rc),
               "instance " + std::to_string(i) + ": certificate self-check failed");

        g_tables.push_back({"pipeline instance " + std::to_string(i),
                            star_modulus_table(space, f, {eps / 2.0, eps, 2.0 * eps})});
    }

    // Complex-valued inputs exercise the same bound through both components.
    for (int i = 0; i < 10; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 120, 7600 + i);
        auto rng = make_rng(6900 + i);
        const double eps = uniform_in(rng, 0.05, 0.5);
        const double lip = uniform_in(rng, 0.5, 3.0);
        const SampledFunction re =
            testsupport::perturbed_lipschitz_function(rng, space, lip, 0.45 * eps);
        const SampledFunction im =
            testsupport::perturbed_lipschitz_function(rng, space, lip, 0.45 * eps);
        SampledFunction f;
        f.values.reserve(re.values.size());
        for (std::size_t x = 0; x < re.values.size(); ++x)
            f.values.emplace_back(re.values[x].real(), im.values[x].real());

        const ApproximationResult res = theorem1_approximant(space, f, eps);
        expect(res.certificate.achieved_sup_error <= 6.0 * eps + 1e-9,
               "complex instance " + std::to_string(i) + ": error " +
                   num(res.certificate.achieved_sup_error) + " above 6 * " + num(eps));
        expect(certificate_ok(res.certificate),
               "complex instance " + std::to_string(i) + ": certificate self-check failed");
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    expect(elapsed < 30.0, "pipeline runtime " + num(elapsed) + " s reached the 30 s budget");
}

// Criterion 5: a Lipschitz core plus a sub-epsilon perturbation keeps the
// star modulus below the core's constant.
void forward_direction_suite() {
    for (int i = 0; i < 50; ++i) {
        const FiniteMetricSpace space = testsupport::corpus_space(i, 150, 2025 + i);
        auto rng = make_rng(8800 + i);
        const double eps = uniform_in(rng, 0.05, 0.6);
        const double target_lip = uniform_in(rng, 0.3, 4.0);
        const SampledFunction core = testsupport::random_lipschitz_function(rng, space, target_lip);
        const double measured_lip = lipschitz_constant(space, core);
        SampledFunction f = core;
        for (auto& v : f.values) v += uniform_in(rng, -0.45 * eps, 0.45 * eps);

        const StarModulus sm = star_modulus(space, f, eps);
        expect(sm.c_star <= measured_lip,
               "instance " + std::to_string(i) + ": c_star " + num(sm.c_star) +
                   " above the core constant " + num(measured_lip));

        if (i % 5 == 0)
            g_tables.push_back({"forward instance " + std::to_string(i),
                                star_modulus_table(space, f, {eps / 2.0, eps, 2.0 * eps})});
    }
}

// Criterion 6: quantitative targets for sqrt on the fine unit grid.
void sqrt_grid_targets() {
    const FiniteMetricSpace space = testsupport::sqrt_grid_space(1001);
    const SampledFunction f = testsupport::sqrt_grid_function(1001);

    const StarModulus sm = star_modulus(space, f, 0.1);
    expect(std::abs(sm.c_star - 2.5) <= 0.05,
           "c_star(0.1) = " + num(sm.c_star) + " outside 2.5 +/- 0.05");

    const UCModulus uc = uc_modulus(space, f, 0.1);
    expect(!uc.no_violation, "no pair reaches the 0.1 oscillation");
    expect(std::abs(uc.delta - 0.01) <= 0.001,
           "delta(0.1) = " + num(uc.delta) + " outside 0.01 +/- 0.001");

    const double subdivision_c = prop2_constant(0.1, uc.delta);
    expect(std::abs(subdivision_c - 10.0) <= 1.0,
           "epsilon / delta = " + num(subdivision_c) + " outside 10 +/- 1");
    const StarCheckReport report = check_star(space, f, 0.1, subdivision_c);
    expect(report.holds, "pair check fails for the subdivision constant; " +
                             std::to_string(report.violation_count) + " violations");

    g_tables.push_back({"sqrt grid", star_modulus_table(space, f, {0.05, 0.1, 0.2})});
}

// Criterion 7: every recorded table is monotone in epsilon.
void modulus_monotonicity() {
    expect(!g_tables.empty(), "no moduli tables were recorded by earlier criteria");
    for (const RecordedTable& rec : g_tables) {
        const ModulusTable& table = rec.table;
        for (std::size_t r = 1; r < table.size(); ++r) {
            const ModulusRow& prev = table[r - 1];
            const ModulusRow& cur = table[r];
            expect(prev.epsilon < cur.epsilon, rec.source + ": epsilon ladder out of order");
            expect(cur.c_star <= prev.c_star,
                   rec.source + ": c_star rose from " + num(prev.c_star) + " to " +
                       num(cur.c_star));
            // An absent delta means no pair reaches epsilon; that state can
            // only persist as epsilon grows.
            if (!prev.delta.has_value())
                expect(!cur.delta.has_value(),
                       rec.source + ": delta became finite as epsilon grew");
            else if (cur.delta.has_value())
                expect(*prev.delta <= *cur.delta,
                       rec.source + ": delta fell from " + num(*prev.delta) + " to " +
                           num(*cur.delta));
        }
    }
}

// Criterion 8: disk sampling statistics and hyperbolic metric validation.
void disk_geometry_suite() {
    const MomentEstimate moment = disk_moment_stats(1.0, 1'000'000, 99);
    expect(moment.n_samples == 1'000'000, "moment sample count mismatch");
    expect(moment.std_error > 0.0 && moment.std_error < 0.01,
           "moment standard error " + num(moment.std_error) + " out of range");
    expect(std::abs(moment.mean - 1.0) <= 5.0 * moment.std_error,
           "moment mean " + num(moment.mean) + " more than 5 standard errors from 1");

    const ComparisonStats ratio = disk_comparison_stats(100'000, 17);
    expect(ratio.n_pairs == 100'000, "comparison pair count mismatch");
    expect(ratio.max_ratio <= 2.0,
           "euclidean-to-hyperbolic ratio " + num(ratio.max_ratio) + " above 2");
    expect(ratio.max_ratio > 0.5, "comparison ratio implausibly small");

    for (std::uint64_t seed : {4242u, 4243u, 4244u}) {
        const FiniteMetricSpace hyp = testsupport::separated_poincare(200, 0.02, seed);
        expect(hyp.size() == 200, "hyperbolic corpus space came up short");
        const ValidationReport vr = validate_metric(hyp);
        expect(vr.is_metric, "hyperbolic space " + std::to_string(seed) +
                                 " failed validation; worst triangle slack " +
                                 num(vr.worst_triangle_violation));
    }
}

// Criterion 9: degenerate inputs take their documented paths.
void degenerate_inputs() {
    const FiniteMetricSpace single = matrix_space({{0.0}});
    const SampledFunction one = SampledFunction::from_real({2.5});
    const ApproximationResult res = theorem1_approximant(single, one, 0.4);
    expect(res.values.values == one.values, "one-point pipeline changed the value");
    expect(res.certificate.achieved_sup_error == 0.0, "one-point pipeline reported error");
    expect(certificate_ok(res.certificate), "one-point certificate self-check failed");

    const FiniteMetricSpace space = testsupport::corpus_space(4, 60, 11);
    const SampledFunction flat =
        SampledFunction::from_real(std::vector<double>(space.size(), 1.25));
    expect(star_modulus(space, flat, 0.2).c_star == 0.0, "constant function has c_star > 0");
    const ApproximationResult fres = theorem1_approximant(space, flat, 0.2);
    expect(fres.certificate.achieved_sup_error == 0.0,
           "constant function approximant is not exact; error " +
               num(fres.certificate.achieved_sup_error));

    const FiniteMetricSpace pair_space = matrix_space({{0.0, 1.0}, {1.0, 0.0}});
    RestrictedFunction steep;
    steep.indices = {0, 1};
    steep.values = {{0.0, 0.0}, {1.0, 0.0}};
    bool threw = false;
    try {
        mcshane_extend_real(pair_space, steep, 0.5);
    } catch (const CTooSmall&) {
        threw = true;
    }
    expect(threw, "a constant below the restriction slope was accepted");

    threw = false;
    try {
        greedy_maximal_separated(pair_space, 2.0, {0, 1});
    } catch (const SeedsTooClose&) {
        threw = true;
    }
    expect(threw, "seeds closer than t were accepted");
}

} // namespace

int main() {
    int failed = 0;
    failed += !run_criterion(1, "greatest and least real extensions", extension_suite);
    failed += !run_criterion(2, "complex extension constant bound", complex_extension_bound);
    failed += !run_criterion(3, "net separation, covering, idempotence", net_suite);
    failed += !run_criterion(4, "certified approximation error", certified_error_suite);
    failed += !run_criterion(5, "star modulus of perturbed Lipschitz data", forward_direction_suite);
    failed += !run_criterion(6, "square-root grid quantitative targets", sqrt_grid_targets);
    failed += !run_criterion(7, "moduli monotone in epsilon", modulus_monotonicity);
    failed += !run_criterion(8, "disk statistics and hyperbolic validation", disk_geometry_suite);
    failed += !run_criterion(9, "degenerate inputs", degenerate_inputs);

    std::printf("%d of 9 criteria passed\n", 9 - failed);
    return failed == 0 ? 0 : 1;
}
