#ifndef GFF_TENSOR_HPP
#define GFF_TENSOR_HPP

#include <cstdint>
#include <optional>

#include "gff/gfusion.hpp"
#include "gff/report.hpp"

namespace gff {

// Element budget for any single assembled product matrix; the environment
// variable GFF_MAX_ELEMENTS overrides it.
inline constexpr std::size_t kDefaultMaxElements = std::size_t{1} << 20;

// ||f kron g|| = ||f|| ||g||.
ComplexMatrix tensor_vector(const ComplexMatrix& f, const ComplexMatrix& g);

// Operator tensor Q kron T acting on the product space.
ComplexMatrix tensor_operator(const ComplexMatrix& q, const ComplexMatrix& t);

// Product system over H kron K. Components are indexed by pairs (i, j) in
// row-major order (i outer over the left factors, j inner): component
// i*|J| + j = (V_i kron W_j, Lambda_i kron Gamma_j, v_i * w_j). This matches
// kron's block convention, so every factorization below is an exact entrywise
// Kronecker identity.
struct TensorSystem {
    GFusionSystem left;
    GFusionSystem right;
    GFusionSystem product;
};

// Builds the product system; throws SizeLimit when the assembled matrices
// would exceed the element budget.
TensorSystem tensor_system(const GFusionSystem& left,
                           const GFusionSystem& right);

// Named residuals of the tensor-product identities, each with its threshold;
// pass iff every reported residual is within threshold. Checks that need the
// factors to be frames, or a primed system, are absent when not applicable.
struct TensorVerificationReport {
    std::vector<CheckResult> checks;
    bool pass = true;

    const CheckResult* find(const std::string& name) const;
};

// Verifies, against dense Kronecker assembly:
//   (a) eigen-extreme factorization of the product frame operator,
//   (b) S_{product} = kron(S_left, S_right),
//   (c) synthesis action on `trials` random simple coefficient families,
//   (d) canonical dual of the product: frame operator equals S^{-1}, and its
//       optimal bounds lie in [1/(B D), B D/(A^2 C^2)] up to tol,
// and, when a primed tensor system is given,
//   (e) pair operator factorization and its norm bound sqrt(B1 B2),
//   (f) dual-pairing premises ||S_{primed,unprimed} - I|| per factor and the
//       induced lower bound 1/(D F) for the product.
// Deterministic for a fixed seed.
TensorVerificationReport verify_tensor_identities(
    const TensorSystem& ts, int trials, const Tolerance& tol,
    const std::optional<TensorSystem>& primed = std::nullopt,
    std::uint64_t seed = 0);

}  // namespace gff

#endif  // GFF_TENSOR_HPP
