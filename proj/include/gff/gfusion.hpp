#ifndef GFF_GFUSION_HPP
#define GFF_GFUSION_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "gff/matrix.hpp"
#include "gff/subspace.hpp"

namespace gff {

// Classification threshold, relative to the largest eigenvalue of the frame
// operator: lower <= kDefaultClassTol * upper classifies as bessel_only.
inline constexpr double kDefaultClassTol = 1e-8;

// One weighted triple (V_i, Lambda_i, v_i): a subspace of the ambient space,
// a bounded operator from the ambient space into the local space C^{d_i}, and
// a strictly positive weight.
struct GFusionComponent {
    ClosedSubspace subspace;
    ComplexMatrix op;  // d_i x n
    double weight;

    std::size_t local_dim() const { return op.rows(); }
};

// Ordered finite family {(V_i, Lambda_i, v_i)}. Component order is
// significant: all sums are evaluated sequentially in this order, so results
// are deterministic.
class GFusionSystem {
public:
    GFusionSystem(std::size_t ambient_dim,
                  std::vector<GFusionComponent> components);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t size() const { return components_.size(); }
    const std::vector<GFusionComponent>& components() const {
        return components_;
    }
    const GFusionComponent& component(std::size_t i) const {
        return components_[i];
    }

private:
    std::size_t ambient_dim_;
    std::vector<GFusionComponent> components_;
};

// Finite stand-in for the l2 space over the local spaces: block i lives in
// C^{d_i}, stored as a d_i x 1 matrix.
struct CoefficientFamily {
    std::vector<ComplexMatrix> blocks;
};

double l2_norm(const CoefficientFamily& c);
cplx l2_inner(const CoefficientFamily& a, const CoefficientFamily& b);

enum class FrameKind { frame, tight, parseval, bessel_only };

std::string to_string(FrameKind kind);

// Optimal constants of the frame inequality: the eigen-extremes of the frame
// operator, plus the classification at class_tol.
struct FrameBounds {
    double lower;
    double upper;
    FrameKind kind;
};

// Analysis: block i = v_i . Lambda_i . P_{V_i} . f.
CoefficientFamily analysis(const GFusionSystem& sys, const ComplexMatrix& f);

// Synthesis: sum_i v_i . P_{V_i} . Lambda_i^* . f_i; the adjoint of analysis.
ComplexMatrix synthesis(const GFusionSystem& sys, const CoefficientFamily& c);

// S = sum_i v_i^2 . P_{V_i} . Lambda_i^* . Lambda_i . P_{V_i}; Hermitian
// positive-semidefinite, reduced in fixed component order.
ComplexMatrix frame_operator(const GFusionSystem& sys);

FrameBounds optimal_bounds(const GFusionSystem& sys,
                           double class_tol = kDefaultClassTol);

// S^{-1} from the Hermitian eigendecomposition of a frame operator; the
// assembled inverse stays self-adjoint. Throws NotAFrame when
// lambda_min <= class_tol * lambda_max.
ComplexMatrix invert_frame_operator(const ComplexMatrix& s,
                                    double class_tol = kDefaultClassTol);

// Canonical dual {(S^{-1} V_i, Lambda_i P_{V_i} S^{-1}, v_i)}. S^{-1} comes
// from the Hermitian eigendecomposition of S and is rejected (NotAFrame) when
// lambda_min <= class_tol * lambda_max.
GFusionSystem canonical_dual(const GFusionSystem& sys,
                             double class_tol = kDefaultClassTol);

struct Reconstruction {
    ComplexMatrix f_rec;
    double rel_err;  // larger of the two sum orders, relative to max(||f||, 1)
};

// f_rec = sum_i v_i^2 P Lambda^* Lambda P S^{-1} f; the commuted variant
// sum_i v_i^2 S^{-1} P Lambda^* Lambda P f is evaluated too and the larger
// relative error reported.
Reconstruction reconstruct(const GFusionSystem& sys, const ComplexMatrix& f,
                           double class_tol = kDefaultClassTol);

// Pair frame operator S_{AB} = sum_i v_i v'_i P_{V_i} A_i^* B_i P_{V'_i}.
// Requires equal ambient dimension and component count (DimensionMismatch)
// and componentwise equal local dimensions (LocalSpaceMismatch).
ComplexMatrix pair_frame_operator(const GFusionSystem& a,
                                  const GFusionSystem& b);

}  // namespace gff

#endif  // GFF_GFUSION_HPP
