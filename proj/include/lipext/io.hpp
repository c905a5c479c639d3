#pragma once

/**
 * JSON file formats and deterministic serialization.
 *
 * All files are UTF-8 JSON with keys in fixed (alphabetical) order and floats
 * in shortest round-trip form, so identical inputs produce byte-identical
 * outputs. Writers go through an atomic temp-file-plus-rename.
 *
 * Space file:    {"kind": "matrix"|"euclidean"|"graph"|"poincare_disk", ...}
 *                with exactly the fields its kind requires ("distances",
 *                "coords", "edges"+"n", or "points"[+"scale"]), plus optional
 *                "labels".
 * Function file: {"values_re": [...], "values_im": [...]?}; a restricted
 *                function adds {"indices": [...]}.
 * Net file:      {"t": ..., "indices": [...], "covering_radius": ...}.
 * Certificates:  {"certificates": [{...certificate..., "net": {...},
 *                "values_re"/"values_im"?}]}.
 * Modulus table: [{"epsilon": ..., "c_star": ..., "delta": number|null,
 *                "witness": [i, j]|null}, ...].
 */

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "lipext/approx.hpp"
#include "lipext/disk.hpp"
#include "lipext/extension.hpp"
#include "lipext/metric_space.hpp"
#include "lipext/nets.hpp"

namespace lipext {

// What a space file holds: the defining data for one construction, kept
// verbatim so generated files round-trip unchanged.
struct SpaceSpec {
    OriginKind kind = OriginKind::matrix;
    std::optional<std::vector<std::string>> labels;

    std::vector<std::vector<double>> distances; // kind == matrix
    std::vector<std::vector<double>> coords;    // kind == euclidean
    int graph_n = 0;                            // kind == graph
    std::vector<GraphEdge> edges;
    std::vector<DiskPoint> points;              // kind == poincare_disk
    double scale = 1.0;

    FiniteMetricSpace to_space(double tol_metric = -1.0) const;
};

nlohmann::json space_spec_to_json(const SpaceSpec& spec);
SpaceSpec space_spec_from_json(const nlohmann::json& j);

nlohmann::json sampled_function_to_json(const SampledFunction& f);
SampledFunction sampled_function_from_json(const nlohmann::json& j);

nlohmann::json restricted_function_to_json(const RestrictedFunction& f);
RestrictedFunction restricted_function_from_json(const nlohmann::json& j);

nlohmann::json net_to_json(const SeparatedNet& net);
SeparatedNet net_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const ApproximationCertificate& cert,
                                   const SampledFunction* values = nullptr);
ApproximationCertificate certificate_from_json(const nlohmann::json& j,
                                               SampledFunction* values_out = nullptr);

nlohmann::json modulus_table_to_json(const ModulusTable& table);
ModulusTable modulus_table_from_json(const nlohmann::json& j);

// Shortest round-trip decimal form of a double (also used for CSV and
// report lines).
std::string format_double(double v);

// CSV mirrors for plotting.
std::string certificates_to_csv(const std::vector<ApproximationCertificate>& certs);
std::string modulus_table_to_csv(const ModulusTable& table);

// -- files -----------------------------------------------------------------

std::string read_text_file(const std::filesystem::path& path);
void atomic_write_text(const std::filesystem::path& path, const std::string& text);

// Serialize with 2-space indent and trailing newline.
std::string dump_json(const nlohmann::json& j);

// Parse wrappers; JSON syntax errors surface as ParseError with the
// originating line/column in the message.
nlohmann::json parse_json_file(const std::filesystem::path& path);

SpaceSpec read_space_file(const std::filesystem::path& path);
void write_space_file(const std::filesystem::path& path, const SpaceSpec& spec);
SampledFunction read_sampled_function_file(const std::filesystem::path& path);
void write_sampled_function_file(const std::filesystem::path& path, const SampledFunction& f);
RestrictedFunction read_restricted_function_file(const std::filesystem::path& path);
void write_restricted_function_file(const std::filesystem::path& path, const RestrictedFunction& f);
SeparatedNet read_net_file(const std::filesystem::path& path);
void write_net_file(const std::filesystem::path& path, const SeparatedNet& net);

} // namespace lipext
