#include "lipext/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lipext/errors.hpp"

namespace lipext {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const json& require_key(const json& j, const char* key, const char* what) {
    const auto it = j.find(key);
    if (it == j.end()) fail(std::string(what) + " is missing required key \"" + key + "\"");
    return *it;
}

void reject_unknown_keys(const json& j, std::initializer_list<const char*> allowed,
                         const char* what) {
    for (const auto& item : j.items()) {
        bool known = false;
        for (const char* key : allowed)
            if (item.key() == key) {
                known = true;
                break;
            }
        if (!known) fail(std::string(what) + " has unsupported key \"" + item.key() + "\"");
    }
}

void expect_object(const json& j, const char* what) {
    if (!j.is_object()) fail(std::string(what) + " must be a JSON object");
}

double as_double(const json& j, const std::string& what) {
    if (!j.is_number()) fail(what + " must be a number");
    return j.get<double>();
}

int as_int(const json& j, const std::string& what) {
    if (!j.is_number_integer()) fail(what + " must be an integer");
    return j.get<int>();
}

std::vector<double> as_double_vector(const json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of numbers");
    std::vector<double> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_double(v, what + " entry"));
    return out;
}

std::vector<int> as_int_vector(const json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of integers");
    std::vector<int> out;
    out.reserve(j.size());
    for (const auto& v : j) out.push_back(as_int(v, what + " entry"));
    return out;
}

std::vector<std::vector<double>> as_double_matrix(const json& j, const std::string& what) {
    if (!j.is_array()) fail(what + " must be an array of arrays of numbers");
    std::vector<std::vector<double>> out;
    out.reserve(j.size());
    for (const auto& row : j) out.push_back(as_double_vector(row, what + " row"));
    return out;
}

std::optional<std::vector<std::string>> read_labels(const json& j) {
    const auto it = j.find("labels");
    if (it == j.end()) return std::nullopt;
    if (!it->is_array()) fail("\"labels\" must be an array of strings");
    std::vector<std::string> labels;
    labels.reserve(it->size());
    for (const auto& v : *it) {
        if (!v.is_string()) fail("\"labels\" must be an array of strings");
        labels.push_back(v.get<std::string>());
    }
    return labels;
}

// Writes values_re, and values_im only when some imaginary part is nonzero.
void complex_values_to_json(const std::vector<std::complex<double>>& values, json& target) {
    json re = json::array();
    json im = json::array();
    bool any_imag = false;
    for (const auto& v : values) {
        re.push_back(v.real());
        im.push_back(v.imag());
        if (v.imag() != 0.0) any_imag = true;
    }
    target["values_re"] = std::move(re);
    if (any_imag) target["values_im"] = std::move(im);
}

std::vector<std::complex<double>> complex_values_from_json(const json& j, const char* what) {
    const std::vector<double> re =
        as_double_vector(require_key(j, "values_re", what), "\"values_re\"");
    std::vector<double> im;
    if (const auto it = j.find("values_im"); it != j.end()) {
        im = as_double_vector(*it, "\"values_im\"");
        if (im.size() != re.size())
            fail("\"values_im\" and \"values_re\" have different lengths");
    } else {
        im.assign(re.size(), 0.0);
    }
    std::vector<std::complex<double>> values;
    values.reserve(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values.emplace_back(re[i], im[i]);
    return values;
}

} // namespace

FiniteMetricSpace SpaceSpec::to_space(double tol_metric) const {
    switch (kind) {
        case OriginKind::matrix: return matrix_space(distances, labels, tol_metric);
        case OriginKind::euclidean: return euclidean_space(coords, labels);
        case OriginKind::graph: return graph_space(graph_n, edges, labels);
        case OriginKind::poincare_disk: return poincare_disk_space(points, scale, labels);
    }
    throw BadParameters("space has no recognizable kind");
}

nlohmann::json space_spec_to_json(const SpaceSpec& spec) {
    json j;
    j["kind"] = std::string(origin_kind_name(spec.kind));
    if (spec.labels) j["labels"] = *spec.labels;
    switch (spec.kind) {
        case OriginKind::matrix:
            j["distances"] = spec.distances;
            break;
        case OriginKind::euclidean:
            j["coords"] = spec.coords;
            break;
        case OriginKind::graph: {
            j["n"] = spec.graph_n;
            json edges = json::array();
            for (const auto& e : spec.edges) edges.push_back(json::array({e.u, e.v, e.w}));
            j["edges"] = std::move(edges);
            break;
        }
        case OriginKind::poincare_disk: {
            json points = json::array();
            for (const auto& p : spec.points) points.push_back(json::array({p.re, p.im}));
            j["points"] = std::move(points);
            j["scale"] = spec.scale;
            break;
        }
    }
    return j;
}

SpaceSpec space_spec_from_json(const nlohmann::json& j) {
    expect_object(j, "a space file");
    const json& kind_node = require_key(j, "kind", "a space file");
    if (!kind_node.is_string()) fail("\"kind\" must be a string");
    const auto kind = origin_kind_from_name(kind_node.get<std::string>());
    if (!kind) throw InvalidKind("unknown space kind \"" + kind_node.get<std::string>() + "\"");

    SpaceSpec spec;
    spec.kind = *kind;
    spec.labels = read_labels(j);

    switch (spec.kind) {
        case OriginKind::matrix:
            reject_unknown_keys(j, {"kind", "labels", "distances"}, "a matrix space file");
            spec.distances =
                as_double_matrix(require_key(j, "distances", "a matrix space file"),
                                 "\"distances\"");
            break;
        case OriginKind::euclidean:
            reject_unknown_keys(j, {"kind", "labels", "coords"}, "a euclidean space file");
            spec.coords = as_double_matrix(require_key(j, "coords", "a euclidean space file"),
                                           "\"coords\"");
            break;
        case OriginKind::graph: {
            reject_unknown_keys(j, {"kind", "labels", "edges", "n"}, "a graph space file");
            spec.graph_n = as_int(require_key(j, "n", "a graph space file"), "\"n\"");
            const json& edges = require_key(j, "edges", "a graph space file");
            if (!edges.is_array()) fail("\"edges\" must be an array of [u, v, weight] triples");
            for (const auto& e : edges) {
                if (!e.is_array() || e.size() != 3)
                    fail("\"edges\" must be an array of [u, v, weight] triples");
                spec.edges.push_back({as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"),
                                      as_double(e[2], "edge weight")});
            }
            break;
        }
        case OriginKind::poincare_disk: {
            reject_unknown_keys(j, {"kind", "labels", "points", "scale"},
                                "a hyperbolic space file");
            const json& points = require_key(j, "points", "a hyperbolic space file");
            if (!points.is_array()) fail("\"points\" must be an array of [re, im] pairs");
            for (const auto& p : points) {
                if (!p.is_array() || p.size() != 2)
                    fail("\"points\" must be an array of [re, im] pairs");
                spec.points.push_back(
                    {as_double(p[0], "point coordinate"), as_double(p[1], "point coordinate")});
            }
            if (const auto it = j.find("scale"); it != j.end())
                spec.scale = as_double(*it, "\"scale\"");
            break;
        }
    }
    return spec;
}

nlohmann::json sampled_function_to_json(const SampledFunction& f) {
    json j;
    complex_values_to_json(f.values, j);
    return j;
}

SampledFunction sampled_function_from_json(const nlohmann::json& j) {
    expect_object(j, "a function file");
    reject_unknown_keys(j, {"values_re", "values_im"}, "a function file");
    SampledFunction f;
    f.values = complex_values_from_json(j, "a function file");
    return f;
}

nlohmann::json restricted_function_to_json(const RestrictedFunction& f) {
    json j;
    j["indices"] = f.indices;
    complex_values_to_json(f.values, j);
    return j;
}

RestrictedFunction restricted_function_from_json(const nlohmann::json& j) {
    expect_object(j, "a restricted function file");
    reject_unknown_keys(j, {"indices", "values_re", "values_im"}, "a restricted function file");
    RestrictedFunction f;
    f.indices = as_int_vector(require_key(j, "indices", "a restricted function file"),
                              "\"indices\"");
    f.values = complex_values_from_json(j, "a restricted function file");
    if (f.values.size() != f.indices.size())
        fail("\"indices\" and \"values_re\" have different lengths");
    return f;
}

nlohmann::json net_to_json(const SeparatedNet& net) {
    json j;
    j["t"] = net.t;
    j["indices"] = net.indices;
    j["covering_radius"] = net.covering_radius;
    return j;
}

SeparatedNet net_from_json(const nlohmann::json& j) {
    expect_object(j, "a net file");
    reject_unknown_keys(j, {"t", "indices", "covering_radius"}, "a net file");
    SeparatedNet net;
    net.t = as_double(require_key(j, "t", "a net file"), "\"t\"");
    net.indices = as_int_vector(require_key(j, "indices", "a net file"), "\"indices\"");
    net.covering_radius =
        as_double(require_key(j, "covering_radius", "a net file"), "\"covering_radius\"");
    return net;
}

nlohmann::json certificate_to_json(const ApproximationCertificate& cert,
                                   const SampledFunction* values) {
    json j;
    j["epsilon"] = cert.epsilon;
    j["c_used"] = cert.c_used;
    j["t"] = cert.t;
    j["net_size"] = cert.net_size;
    j["restriction_lip"] = cert.restriction_lip;
    j["extension_lip_bound"] = cert.extension_lip_bound;
    j["proven_sup_error"] = cert.proven_sup_error;
    j["achieved_sup_error"] = cert.achieved_sup_error;
    j["measured_extension_lip"] = cert.measured_extension_lip;
    j["mode"] = std::string(value_mode_name(cert.mode));
    j["net"] = net_to_json(cert.net);
    if (values) complex_values_to_json(values->values, j);
    return j;
}

ApproximationCertificate certificate_from_json(const nlohmann::json& j,
                                               SampledFunction* values_out) {
    expect_object(j, "a certificate");
    reject_unknown_keys(j,
                        {"epsilon", "c_used", "t", "net_size", "restriction_lip",
                         "extension_lip_bound", "proven_sup_error", "achieved_sup_error",
                         "measured_extension_lip", "mode", "net", "values_re", "values_im"},
                        "a certificate");
    ApproximationCertificate cert;
    cert.epsilon = as_double(require_key(j, "epsilon", "a certificate"), "\"epsilon\"");
    cert.c_used = as_double(require_key(j, "c_used", "a certificate"), "\"c_used\"");
    cert.t = as_double(require_key(j, "t", "a certificate"), "\"t\"");
    cert.net_size = as_int(require_key(j, "net_size", "a certificate"), "\"net_size\"");
    cert.restriction_lip =
        as_double(require_key(j, "restriction_lip", "a certificate"), "\"restriction_lip\"");
    cert.extension_lip_bound = as_double(require_key(j, "extension_lip_bound", "a certificate"),
                                         "\"extension_lip_bound\"");
    cert.proven_sup_error =
        as_double(require_key(j, "proven_sup_error", "a certificate"), "\"proven_sup_error\"");
    cert.achieved_sup_error =
        as_double(require_key(j, "achieved_sup_error", "a certificate"), "\"achieved_sup_error\"");
    cert.measured_extension_lip = as_double(
        require_key(j, "measured_extension_lip", "a certificate"), "\"measured_extension_lip\"");
    const json& mode_node = require_key(j, "mode", "a certificate");
    if (!mode_node.is_string()) fail("\"mode\" must be \"real\" or \"complex\"");
    const auto mode = value_mode_from_name(mode_node.get<std::string>());
    if (!mode) fail("\"mode\" must be \"real\" or \"complex\"");
    cert.mode = *mode;
    cert.net = net_from_json(require_key(j, "net", "a certificate"));
    if (values_out) {
        if (j.contains("values_re")) values_out->values = complex_values_from_json(j, "a certificate");
        else values_out->values.clear();
    }
    return cert;
}

nlohmann::json modulus_table_to_json(const ModulusTable& table) {
    json rows = json::array();
    for (const ModulusRow& row : table) {
        json r;
        r["epsilon"] = row.epsilon;
        r["c_star"] = row.c_star;
        if (row.delta) r["delta"] = *row.delta;
        else r["delta"] = nullptr;
        if (row.witness) r["witness"] = json::array({row.witness->first, row.witness->second});
        else r["witness"] = nullptr;
        rows.push_back(std::move(r));
    }
    return rows;
}

ModulusTable modulus_table_from_json(const nlohmann::json& j) {
    if (!j.is_array()) fail("a modulus table file must be a JSON array of rows");
    ModulusTable table;
    table.reserve(j.size());
    for (const auto& r : j) {
        expect_object(r, "a modulus table row");
        reject_unknown_keys(r, {"epsilon", "c_star", "delta", "witness"}, "a modulus table row");
        ModulusRow row;
        row.epsilon = as_double(require_key(r, "epsilon", "a modulus table row"), "\"epsilon\"");
        row.c_star = as_double(require_key(r, "c_star", "a modulus table row"), "\"c_star\"");
        const json& delta = require_key(r, "delta", "a modulus table row");
        if (!delta.is_null()) row.delta = as_double(delta, "\"delta\"");
        const json& witness = require_key(r, "witness", "a modulus table row");
        if (!witness.is_null()) {
            if (!witness.is_array() || witness.size() != 2)
                fail("\"witness\" must be null or a pair of indices");
            row.witness = {as_int(witness[0], "witness index"), as_int(witness[1], "witness index")};
        }
        table.push_back(row);
    }
    return table;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc()) return "0";
    return std::string(buf, ptr);
}

std::string certificates_to_csv(const std::vector<ApproximationCertificate>& certs) {
    std::ostringstream out;
    out << "epsilon,c_used,t,net_size,achieved_sup_error,proven_sup_error,"
           "measured_extension_lip\n";
    for (const auto& cert : certs) {
        out << format_double(cert.epsilon) << ',' << format_double(cert.c_used) << ','
            << format_double(cert.t) << ',' << cert.net_size << ','
            << format_double(cert.achieved_sup_error) << ','
            << format_double(cert.proven_sup_error) << ','
            << format_double(cert.measured_extension_lip) << '\n';
    }
    return out.str();
}

std::string modulus_table_to_csv(const ModulusTable& table) {
    std::ostringstream out;
    out << "epsilon,c_star,delta,witness_i,witness_j\n";
    for (const ModulusRow& row : table) {
        out << format_double(row.epsilon) << ',' << format_double(row.c_star) << ',';
        if (row.delta) out << format_double(*row.delta);
        out << ',';
        if (row.witness) out << row.witness->first << ',' << row.witness->second;
        else out << ',';
        out << '\n';
    }
    return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) fail("cannot read file: " + path.string());
    return buffer.str();
}

void atomic_write_text(const std::filesystem::path& path, const std::string& text) {
    const std::filesystem::path tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open file for writing: " + tmp.string());
        out << text;
        out.flush();
        if (!out) throw Error("cannot write file: " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

std::string dump_json(const nlohmann::json& j) { return j.dump(2) + "\n"; }

nlohmann::json parse_json_file(const std::filesystem::path& path) {
    const std::string text = read_text_file(path);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(path.string() + ": " + e.what());
    }
}

SpaceSpec read_space_file(const std::filesystem::path& path) {
    return space_spec_from_json(parse_json_file(path));
}

void write_space_file(const std::filesystem::path& path, const SpaceSpec& spec) {
    atomic_write_text(path, dump_json(space_spec_to_json(spec)));
}

SampledFunction read_sampled_function_file(const std::filesystem::path& path) {
    return sampled_function_from_json(parse_json_file(path));
}

void write_sampled_function_file(const std::filesystem::path& path, const SampledFunction& f) {
    atomic_write_text(path, dump_json(sampled_function_to_json(f)));
}

RestrictedFunction read_restricted_function_file(const std::filesystem::path& path) {
    return restricted_function_from_json(parse_json_file(path));
}

void write_restricted_function_file(const std::filesystem::path& path,
                                    const RestrictedFunction& f) {
    atomic_write_text(path, dump_json(restricted_function_to_json(f)));
}

SeparatedNet read_net_file(const std::filesystem::path& path) {
    return net_from_json(parse_json_file(path));
}

void write_net_file(const std::filesystem::path& path, const SeparatedNet& net) {
    atomic_write_text(path, dump_json(net_to_json(net)));
}

} // namespace lipext
