#ifndef GFF_IO_HPP
#define GFF_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "gff/gfusion.hpp"
#include "gff/report.hpp"

namespace gff::io {

using ojson = nlohmann::ordered_json;

// ---- system files ----------------------------------------------------
//
// A system file is a JSON document:
//   { "ambient_dim": n,
//     "components": [ { "weight": w,
//                       "subspace_basis": [ [[re,im], ...], ... ],
//                       "operator": {"rows": d, "cols": n,
//                                    "entries": [[re,im], ...]} }, ... ] }
// subspace_basis holds spanning vectors of length ambient_dim (not
// necessarily orthonormal; orthonormalized on load); an empty array is the
// zero subspace. Complex numbers are always two-element [re, im] arrays.

GFusionSystem load_system(const std::filesystem::path& path,
                          const Tolerance& tol = {});
void save_system(const GFusionSystem& sys, const std::filesystem::path& path);

GFusionSystem system_from_json(const nlohmann::json& doc,
                               const Tolerance& tol = {},
                               const std::string& root_path = "");
ojson system_to_json(const GFusionSystem& sys);

// ---- matrices, vectors, coefficient families --------------------------

ojson matrix_to_json(const ComplexMatrix& a);
ComplexMatrix matrix_from_json(const nlohmann::json& doc,
                               const std::string& root_path = "");

// {"entries": [[re,im], ...]} <-> n x 1 column vector.
ojson vector_to_json(const ComplexMatrix& v);
ComplexMatrix vector_from_json(const nlohmann::json& doc,
                               const std::string& root_path = "");

// {"blocks": [[[re,im], ...], ...]}
ojson coefficients_to_json(const CoefficientFamily& c);
CoefficientFamily coefficients_from_json(const nlohmann::json& doc,
                                         const std::string& root_path = "");

nlohmann::json load_json(const std::filesystem::path& path);
void save_json(const ojson& doc, const std::filesystem::path& path);

// ---- verification reports ---------------------------------------------
//
// { "bounds": {"lower": a, "upper": b, "kind": k} | null,
//   "residuals": {name: value, ...}, "thresholds": {name: value, ...},
//   "pass": bool, "seed": integer | null, "tool_version": string }

ojson report_to_json(const std::optional<FrameBounds>& bounds,
                     const std::vector<CheckResult>& checks,
                     std::optional<std::uint64_t> seed);

// ---- random systems ----------------------------------------------------

struct RandomSystemParams {
    std::uint64_t seed = 0;
    std::size_t ambient_dim = 1;
    std::size_t n_components = 1;
    std::vector<std::size_t> local_dims;  // one entry per component
    double weight_lo = 0.5;
    double weight_hi = 2.0;
};

// Deterministic for a fixed seed. Per component, in order: subspace rank
// uniform in 1..n, spanning basis entries (n x rank standard complex
// Gaussian, row-major, orthonormalized on construction), operator entries
// (d_i x n, same discipline), then the weight uniform in [lo, hi]. The
// generator is GaussianRng (documented in gff/rng.hpp).
GFusionSystem random_system(const RandomSystemParams& params);

}  // namespace gff::io

#endif  // GFF_IO_HPP
