/**
 * Command-line driver: generate example spaces, extend restricted functions,
 * build nets, compute moduli, run the certified approximation pipeline, and
 * print hyperbolic-disk statistics.
 *
 * Exit codes: 0 success, 1 mathematical violation (failed certificate,
 * constant too small, broken metric, ...), 2 usage or file error.
 */

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "lipext/approx.hpp"
#include "lipext/disk.hpp"
#include "lipext/errors.hpp"
#include "lipext/extension.hpp"
#include "lipext/generators.hpp"
#include "lipext/io.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/nets.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

// Input mistakes and file problems are usage errors; everything else thrown
// by the library is a mathematical contract violation.
int classify(const lipext::Error& e) {
    if (dynamic_cast<const lipext::ParseError*>(&e) ||
        dynamic_cast<const lipext::InvalidKind*>(&e) ||
        dynamic_cast<const lipext::BadParameters*>(&e) ||
        dynamic_cast<const lipext::NonpositiveInput*>(&e) ||
        dynamic_cast<const lipext::InvalidP*>(&e) ||
        dynamic_cast<const lipext::IndexOutOfRange*>(&e))
        return exit_usage;
    return exit_math;
}

std::filesystem::path csv_sibling(const std::filesystem::path& out) {
    std::filesystem::path csv = out;
    csv.replace_extension(".csv");
    return csv;
}

std::vector<double> sorted_epsilons(std::vector<double> epsilons) {
    for (double e : epsilons)
        if (!(e > 0.0)) throw lipext::BadParameters("every epsilon must be positive");
    std::sort(epsilons.begin(), epsilons.end());
    epsilons.erase(std::unique(epsilons.begin(), epsilons.end()), epsilons.end());
    return epsilons;
}

lipext::ValueMode parse_mode(const std::string& name) {
    const auto mode = lipext::value_mode_from_name(name);
    if (!mode) throw lipext::BadParameters("mode must be \"real\" or \"complex\"");
    return *mode;
}

struct GenOptions {
    std::string kind;
    int n = 100;
    int dim = 2;
    double avg_degree = 4.0;
    double scale = 1.0;
    std::uint64_t seed = 0;
    std::string out;
};

int run_gen(const GenOptions& opt) {
    lipext::SpaceSpec spec;
    if (opt.kind == "euclidean-random") spec = lipext::gen_euclidean_random(opt.n, opt.dim, opt.seed);
    else if (opt.kind == "grid-1d") spec = lipext::gen_grid_1d(opt.n);
    else if (opt.kind == "graph-random") spec = lipext::gen_graph_random(opt.n, opt.avg_degree, opt.seed);
    else if (opt.kind == "poincare-random") spec = lipext::gen_poincare_random(opt.n, opt.seed, opt.scale);
    else throw lipext::InvalidKind("unknown generator kind \"" + opt.kind + "\"");

    // Building the space validates it (connectivity, disk membership, the
    // metric axioms) before anything is written.
    const lipext::FiniteMetricSpace space = spec.to_space();
    lipext::write_space_file(opt.out, spec);
    std::cout << "wrote " << opt.out << " (" << space.size() << " points, kind " << opt.kind
              << ")\n";
    return exit_ok;
}

struct ExtendOptions {
    std::string space_path;
    std::string function_path;
    double constant = 0.0;
    std::string mode = "complex";
    std::string out;
};

int run_extend(const ExtendOptions& opt) {
    const lipext::FiniteMetricSpace space = lipext::read_space_file(opt.space_path).to_space();
    const lipext::RestrictedFunction f = lipext::read_restricted_function_file(opt.function_path);
    const lipext::ValueMode mode = parse_mode(opt.mode);

    const lipext::SampledFunction extended =
        mode == lipext::ValueMode::complex
            ? lipext::extend_complex(space, f, opt.constant)
            : lipext::mcshane_extend_real(space, f, opt.constant);

    double agreement = 0.0;
    for (std::size_t k = 0; k < f.indices.size(); ++k)
        agreement = std::max(agreement, std::abs(extended.values[f.indices[k]] - f.values[k]));

    if (!opt.out.empty()) lipext::write_sampled_function_file(opt.out, extended);
    std::cout << "lipschitz_constant " << lipext::format_double(lipext::lipschitz_constant(space, extended))
              << "\n"
              << "agreement_error " << lipext::format_double(agreement) << "\n";
    return exit_ok;
}

struct NetOptions {
    std::string space_path;
    double t = 0.0;
    std::vector<int> seeds;
    std::string out;
};

int run_net(const NetOptions& opt) {
    const lipext::FiniteMetricSpace space = lipext::read_space_file(opt.space_path).to_space();
    const std::vector<int> seeds = opt.seeds.empty() ? std::vector<int>{0} : opt.seeds;
    const lipext::SeparatedNet net = lipext::greedy_maximal_separated(space, opt.t, seeds);
    const lipext::NetReport report = lipext::verify_net(space, net);

    if (!opt.out.empty()) lipext::write_net_file(opt.out, net);
    std::cout << "net_size " << net.indices.size() << "\n"
              << "covering_radius " << lipext::format_double(net.covering_radius) << "\n"
              << "separation_ok " << (report.separation_ok ? "true" : "false") << "\n"
              << "covering_ok " << (report.covering_ok ? "true" : "false") << "\n";
    return report.separation_ok && report.covering_ok ? exit_ok : exit_math;
}

struct ApproxOptions {
    std::string space_path;
    std::string function_path;
    std::vector<double> epsilons;
    std::string mode = "complex";
    std::optional<double> constant;
    std::uint64_t seed = 0;
    std::string out;
    bool csv = false;
    bool emit_values = false;
};

int run_approx(const ApproxOptions& opt) {
    const lipext::FiniteMetricSpace space = lipext::read_space_file(opt.space_path).to_space();
    const lipext::SampledFunction f = lipext::read_sampled_function_file(opt.function_path);
    const lipext::ValueMode mode = parse_mode(opt.mode);
    const std::vector<double> epsilons = sorted_epsilons(opt.epsilons);
    if (epsilons.empty()) throw lipext::BadParameters("at least one --epsilon is required");

    std::vector<lipext::ApproximationCertificate> certs;
    nlohmann::json cert_array = nlohmann::json::array();
    bool all_ok = true;
    for (double epsilon : epsilons) {
        const lipext::ApproximationResult result =
            lipext::theorem1_approximant(space, f, epsilon, opt.constant, mode);
        const bool ok = lipext::certificate_ok(result.certificate);
        all_ok = all_ok && ok;
        certs.push_back(result.certificate);
        cert_array.push_back(lipext::certificate_to_json(
            result.certificate, opt.emit_values ? &result.values : nullptr));
        std::cout << "epsilon " << lipext::format_double(epsilon) << ": net_size "
                  << result.certificate.net_size << ", achieved_sup_error "
                  << lipext::format_double(result.certificate.achieved_sup_error)
                  << ", proven_sup_error "
                  << lipext::format_double(result.certificate.proven_sup_error) << ", "
                  << (ok ? "ok" : "VIOLATED") << "\n";
    }

    if (!opt.out.empty()) {
        nlohmann::json doc;
        doc["certificates"] = std::move(cert_array);
        lipext::atomic_write_text(opt.out, lipext::dump_json(doc));
        if (opt.csv)
            lipext::atomic_write_text(csv_sibling(opt.out), lipext::certificates_to_csv(certs));
    }
    return all_ok ? exit_ok : exit_math;
}

struct ModulusOptions {
    std::string space_path;
    std::string function_path;
    std::vector<double> epsilons;
    std::string out;
    bool csv = false;
};

int run_modulus(const ModulusOptions& opt) {
    const lipext::FiniteMetricSpace space = lipext::read_space_file(opt.space_path).to_space();
    const lipext::SampledFunction f = lipext::read_sampled_function_file(opt.function_path);
    const std::vector<double> epsilons = sorted_epsilons(opt.epsilons);
    if (epsilons.empty()) throw lipext::BadParameters("at least one --epsilon is required");

    const lipext::ModulusTable table = lipext::star_modulus_table(space, f, epsilons);
    for (const lipext::ModulusRow& row : table) {
        std::cout << "epsilon " << lipext::format_double(row.epsilon) << ": c_star "
                  << lipext::format_double(row.c_star) << ", delta ";
        if (row.delta) std::cout << lipext::format_double(*row.delta);
        else std::cout << "none";
        std::cout << "\n";
    }

    if (!opt.out.empty()) {
        lipext::atomic_write_text(opt.out, lipext::dump_json(lipext::modulus_table_to_json(table)));
        if (opt.csv)
            lipext::atomic_write_text(csv_sibling(opt.out), lipext::modulus_table_to_csv(table));
    }
    return exit_ok;
}

struct DiskDemoOptions {
    std::vector<double> p_values;
    long long samples = 1000000;
    long long pairs = 100000;
    std::uint64_t seed = 0;
    std::string out;
};

int run_disk_demo(const DiskDemoOptions& opt) {
    const std::vector<double> ps = opt.p_values.empty() ? std::vector<double>{1.0} : opt.p_values;

    std::string report;
    for (double p : ps) {
        const lipext::MomentEstimate est = lipext::disk_moment_stats(p, opt.samples, opt.seed);
        report += "moment p=" + lipext::format_double(p) + ": " + lipext::format_double(est.mean) +
                  " +/- " + lipext::format_double(est.std_error) + " (" +
                  std::to_string(est.n_samples) + " samples)\n";
    }
    const lipext::ComparisonStats stats = lipext::disk_comparison_stats(opt.pairs, opt.seed);
    report += "max_euclidean_to_hyperbolic_ratio " + lipext::format_double(stats.max_ratio) +
              " over " + std::to_string(stats.n_pairs) + " pairs (bound 2)\n";

    std::cout << report;
    if (!opt.out.empty()) lipext::atomic_write_text(opt.out, report);
    return stats.max_ratio <= 2.0 ? exit_ok : exit_math;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lipschitz extension and certified approximation toolkit"};
    app.require_subcommand(1);

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "Generate an example space file");
    gen->add_option("--kind", gen_opt.kind,
                    "euclidean-random | grid-1d | graph-random | poincare-random")
        ->required();
    gen->add_option("--n", gen_opt.n, "Point count");
    gen->add_option("--dim", gen_opt.dim, "Dimension (euclidean-random)");
    gen->add_option("--avg-degree", gen_opt.avg_degree, "Average degree (graph-random)");
    gen->add_option("--scale", gen_opt.scale, "Hyperbolic scale (poincare-random)");
    gen->add_option("--seed", gen_opt.seed, "RNG seed");
    gen->add_option("--out", gen_opt.out, "Output space file")->required();

    ExtendOptions extend_opt;
    auto* extend = app.add_subcommand("extend", "Extend a restricted function to the whole space");
    extend->add_option("--space", extend_opt.space_path, "Space file")->required();
    extend->add_option("--function", extend_opt.function_path, "Restricted function file")
        ->required();
    extend->add_option("--constant", extend_opt.constant, "Extension Lipschitz constant")
        ->required();
    extend->add_option("--mode", extend_opt.mode, "real | complex (default complex)");
    extend->add_option("--out", extend_opt.out, "Output function file");

    NetOptions net_opt;
    auto* net = app.add_subcommand("net", "Build a maximal separated net");
    net->add_option("--space", net_opt.space_path, "Space file")->required();
    net->add_option("--t", net_opt.t, "Separation parameter")->required();
    net->add_option("--seed-index", net_opt.seeds, "Seed point index (repeatable; default 0)");
    net->add_option("--out", net_opt.out, "Output net file");

    ApproxOptions approx_opt;
    auto* approx = app.add_subcommand("approx", "Run the certified approximation pipeline");
    approx->add_option("--space", approx_opt.space_path, "Space file")->required();
    approx->add_option("--function", approx_opt.function_path, "Function file")->required();
    approx->add_option("--epsilon", approx_opt.epsilons, "Target epsilon (repeatable)")
        ->required();
    approx->add_option("--mode", approx_opt.mode, "real | complex (default complex)");
    approx->add_option("--constant", approx_opt.constant,
                       "Override the working constant (must satisfy the pair condition)");
    approx->add_option("--seed", approx_opt.seed, "Recorded for bookkeeping; unused");
    approx->add_option("--out", approx_opt.out, "Output certificate file");
    approx->add_flag("--csv", approx_opt.csv, "Also write a CSV next to --out");
    approx->add_flag("--emit-values", approx_opt.emit_values,
                     "Include approximant values in the certificates");

    ModulusOptions modulus_opt;
    auto* modulus = app.add_subcommand("modulus", "Compute the pair-condition moduli table");
    modulus->add_option("--space", modulus_opt.space_path, "Space file")->required();
    modulus->add_option("--function", modulus_opt.function_path, "Function file")->required();
    modulus->add_option("--epsilon", modulus_opt.epsilons, "Target epsilon (repeatable)")
        ->required();
    modulus->add_option("--out", modulus_opt.out, "Output table file");
    modulus->add_flag("--csv", modulus_opt.csv, "Also write a CSV next to --out");

    DiskDemoOptions disk_opt;
    auto* disk = app.add_subcommand("disk-demo", "Hyperbolic disk Monte-Carlo statistics");
    disk->add_option("--p", disk_opt.p_values, "Moment exponent (repeatable; default 1)");
    disk->add_option("--samples", disk_opt.samples, "Monte-Carlo sample count");
    disk->add_option("--pairs", disk_opt.pairs, "Comparison pair count");
    disk->add_option("--seed", disk_opt.seed, "RNG seed");
    disk->add_option("--out", disk_opt.out, "Also write the report to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gen) return run_gen(gen_opt);
        if (*extend) return run_extend(extend_opt);
        if (*net) return run_net(net_opt);
        if (*approx) return run_approx(approx_opt);
        if (*modulus) return run_modulus(modulus_opt);
        if (*disk) return run_disk_demo(disk_opt);
    } catch (const lipext::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return classify(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
