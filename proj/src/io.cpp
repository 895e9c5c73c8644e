#include "gff/io.hpp"

#include <cmath>
#include <fstream>

#include "gff/errors.hpp"
#include "gff/rng.hpp"
#include "gff/version.hpp"

namespace gff::io {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key, const std::string& path) {
    if (!j.is_object())
        throw ParseError(path.empty() ? std::string("document is not an object")
                                      : path + " is not an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path + "/" + key + " is missing");
    return *it;
}

double parse_real(const json& v, const std::string& path) {
    if (!v.is_number()) throw ParseError(path + " must be a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ParseError(path + " must be finite");
    return d;
}

std::size_t parse_count(const json& v, const std::string& path) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(path + " must be a nonnegative integer");
    return static_cast<std::size_t>(v.get<long long>());
}

// complex numbers are two-element [re, im] arrays, never strings
cplx parse_complex(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2)
        throw ParseError(path + " must be a two-element [re, im] array");
    return {parse_real(v[0], path + "/0"), parse_real(v[1], path + "/1")};
}

ojson complex_to_json(const cplx& z) { return ojson::array({z.real(), z.imag()}); }

std::vector<cplx> parse_complex_array(const json& v, const std::string& path) {
    if (!v.is_array()) throw ParseError(path + " must be an array");
    std::vector<cplx> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(parse_complex(v[i], path + "/" + std::to_string(i)));
    return out;
}

ComplexMatrix parse_operator(const json& v, std::size_t ambient,
                             const std::string& path) {
    const std::size_t rows = parse_count(require(v, "rows", path), path + "/rows");
    const std::size_t cols = parse_count(require(v, "cols", path), path + "/cols");
    if (rows == 0) throw ParseError(path + "/rows must be positive");
    if (cols != ambient)
        throw DimensionMismatch(path + "/cols is " + std::to_string(cols) +
                                ", ambient_dim is " + std::to_string(ambient));
    auto entries =
        parse_complex_array(require(v, "entries", path), path + "/entries");
    if (entries.size() != rows * cols)
        throw ParseError(path + "/entries has " + std::to_string(entries.size()) +
                         " entries for a " + std::to_string(rows) + "x" +
                         std::to_string(cols) + " operator");
    return ComplexMatrix(rows, cols, std::move(entries));
}

}  // namespace

nlohmann::json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return doc;
}

void save_json(const ojson& doc, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << doc.dump(2) << '\n';
    if (!out) throw IoError("short write to " + path.string());
}

GFusionSystem system_from_json(const nlohmann::json& doc, const Tolerance& tol,
                               const std::string& root_path) {
    const std::size_t ambient = parse_count(
        require(doc, "ambient_dim", root_path), root_path + "/ambient_dim");
    if (ambient == 0)
        throw ParseError(root_path + "/ambient_dim must be positive");

    const json& comps = require(doc, "components", root_path);
    if (!comps.is_array() || comps.empty())
        throw ParseError(root_path + "/components must be a nonempty array");

    std::vector<GFusionComponent> components;
    components.reserve(comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
        const std::string path =
            root_path + "/components/" + std::to_string(i);
        const json& comp = comps[i];

        const double weight =
            parse_real(require(comp, "weight", path), path + "/weight");
        if (!(weight > 0.0))
            throw NonPositiveWeight("component " + std::to_string(i) +
                                    " has weight " + std::to_string(weight));

        const json& basis_doc = require(comp, "subspace_basis", path);
        if (!basis_doc.is_array())
            throw ParseError(path + "/subspace_basis must be an array");
        ComplexMatrix spanning(ambient, basis_doc.size());
        for (std::size_t jcol = 0; jcol < basis_doc.size(); ++jcol) {
            const std::string vec_path =
                path + "/subspace_basis/" + std::to_string(jcol);
            auto vec = parse_complex_array(basis_doc[jcol], vec_path);
            if (vec.size() != ambient)
                throw ParseError(vec_path + " has length " +
                                 std::to_string(vec.size()) +
                                 ", ambient_dim is " + std::to_string(ambient));
            for (std::size_t r = 0; r < ambient; ++r)
                spanning.at(r, jcol) = vec[r];
        }
        // declared tolerances govern the rank decisions made here
        ClosedSubspace subspace = ClosedSubspace::span_of(spanning, tol);

        ComplexMatrix op = parse_operator(require(comp, "operator", path),
                                          ambient, path + "/operator");
        components.push_back(
            GFusionComponent{std::move(subspace), std::move(op), weight});
    }
    return GFusionSystem(ambient, std::move(components));
}

ojson system_to_json(const GFusionSystem& sys) {
    ojson doc;
    doc["ambient_dim"] = sys.ambient_dim();
    doc["components"] = ojson::array();
    for (const auto& comp : sys.components()) {
        ojson c;
        c["weight"] = comp.weight;
        ojson basis = ojson::array();
        for (std::size_t j = 0; j < comp.subspace.rank(); ++j) {
            ojson vec = ojson::array();
            for (std::size_t i = 0; i < comp.subspace.ambient_dim(); ++i)
                vec.push_back(complex_to_json(comp.subspace.basis().at(i, j)));
            basis.push_back(std::move(vec));
        }
        c["subspace_basis"] = std::move(basis);
        c["operator"] = matrix_to_json(comp.op);
        doc["components"].push_back(std::move(c));
    }
    return doc;
}

GFusionSystem load_system(const std::filesystem::path& path,
                          const Tolerance& tol) {
    return system_from_json(load_json(path), tol, "");
}

void save_system(const GFusionSystem& sys, const std::filesystem::path& path) {
    save_json(system_to_json(sys), path);
}

ojson matrix_to_json(const ComplexMatrix& a) {
    ojson doc;
    doc["rows"] = a.rows();
    doc["cols"] = a.cols();
    ojson entries = ojson::array();
    for (const cplx& z : a.entries()) entries.push_back(complex_to_json(z));
    doc["entries"] = std::move(entries);
    return doc;
}

ComplexMatrix matrix_from_json(const nlohmann::json& doc,
                               const std::string& root_path) {
    const std::size_t rows =
        parse_count(require(doc, "rows", root_path), root_path + "/rows");
    const std::size_t cols =
        parse_count(require(doc, "cols", root_path), root_path + "/cols");
    auto entries = parse_complex_array(require(doc, "entries", root_path),
                                       root_path + "/entries");
    if (entries.size() != rows * cols)
        throw ParseError(root_path + "/entries has " +
                         std::to_string(entries.size()) + " entries for a " +
                         std::to_string(rows) + "x" + std::to_string(cols) +
                         " matrix");
    return ComplexMatrix(rows, cols, std::move(entries));
}

ojson vector_to_json(const ComplexMatrix& v) {
    ojson doc;
    ojson entries = ojson::array();
    for (const cplx& z : v.entries()) entries.push_back(complex_to_json(z));
    doc["entries"] = std::move(entries);
    return doc;
}

ComplexMatrix vector_from_json(const nlohmann::json& doc,
                               const std::string& root_path) {
    auto entries = parse_complex_array(require(doc, "entries", root_path),
                                       root_path + "/entries");
    if (entries.empty()) throw ParseError(root_path + "/entries is empty");
    return ComplexMatrix::column(std::move(entries));
}

ojson coefficients_to_json(const CoefficientFamily& c) {
    ojson doc;
    ojson blocks = ojson::array();
    for (const auto& block : c.blocks) {
        ojson entries = ojson::array();
        for (const cplx& z : block.entries()) entries.push_back(complex_to_json(z));
        blocks.push_back(std::move(entries));
    }
    doc["blocks"] = std::move(blocks);
    return doc;
}

CoefficientFamily coefficients_from_json(const nlohmann::json& doc,
                                         const std::string& root_path) {
    const json& blocks = require(doc, "blocks", root_path);
    if (!blocks.is_array())
        throw ParseError(root_path + "/blocks must be an array");
    CoefficientFamily out;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        auto entries = parse_complex_array(
            blocks[i], root_path + "/blocks/" + std::to_string(i));
        out.blocks.push_back(ComplexMatrix::column(std::move(entries)));
    }
    return out;
}

ojson report_to_json(const std::optional<FrameBounds>& bounds,
                     const std::vector<CheckResult>& checks,
                     std::optional<std::uint64_t> seed) {
    ojson doc;
    if (bounds) {
        ojson b;
        b["lower"] = bounds->lower;
        b["upper"] = bounds->upper;
        b["kind"] = to_string(bounds->kind);
        doc["bounds"] = std::move(b);
    } else {
        doc["bounds"] = nullptr;
    }
    ojson residuals, thresholds;
    for (const auto& c : checks) {
        residuals[c.name] = c.residual;
        thresholds[c.name] = c.threshold;
    }
    doc["residuals"] = std::move(residuals);
    doc["thresholds"] = std::move(thresholds);
    doc["pass"] = all_pass(checks);
    if (seed)
        doc["seed"] = *seed;
    else
        doc["seed"] = nullptr;
    doc["tool_version"] = kToolVersion;
    return doc;
}

GFusionSystem random_system(const RandomSystemParams& params) {
    const std::size_t n = params.ambient_dim;
    const std::size_t m = params.n_components;
    if (n < 1) throw BadParams("ambient_dim must be >= 1");
    if (m < 1) throw BadParams("n_components must be >= 1");
    if (params.local_dims.size() != m)
        throw BadParams("local_dims has " +
                        std::to_string(params.local_dims.size()) +
                        " entries for " + std::to_string(m) + " components");
    for (std::size_t d : params.local_dims)
        if (d < 1) throw BadParams("local dimensions must be >= 1");
    if (!(params.weight_lo > 0.0) || !(params.weight_hi >= params.weight_lo) ||
        !std::isfinite(params.weight_hi))
        throw BadParams("weight range must satisfy 0 < lo <= hi");

    GaussianRng rng(params.seed);
    std::vector<GFusionComponent> components;
    components.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t rank = 1 + static_cast<std::size_t>(rng.uniform_index(n));
        const ComplexMatrix spanning = rng.normal_matrix(n, rank);
        ClosedSubspace subspace = ClosedSubspace::span_of(spanning);
        ComplexMatrix op = rng.normal_matrix(params.local_dims[i], n);
        const double weight = rng.uniform(params.weight_lo, params.weight_hi);
        components.push_back(
            GFusionComponent{std::move(subspace), std::move(op), weight});
    }
    return GFusionSystem(n, std::move(components));
}

}  // namespace gff::io
