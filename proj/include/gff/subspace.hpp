#ifndef GFF_SUBSPACE_HPP
#define GFF_SUBSPACE_HPP

#include <optional>

#include "gff/linalg.hpp"
#include "gff/matrix.hpp"

namespace gff {

// Closed subspace of a finite-dimensional Hilbert space, stored as an
// ambient_dim x r matrix with orthonormal columns. The zero subspace (r = 0)
// is a first-class value. Subspace equality means projector closeness, never
// basis equality.
class ClosedSubspace {
public:
    // basis must already have orthonormal columns (validated).
    ClosedSubspace(std::size_t ambient_dim, ComplexMatrix basis);

    static ClosedSubspace zero(std::size_t ambient_dim);
    // Orthonormalizes a spanning set; a fully deflating span yields the zero
    // subspace instead of an error.
    static ClosedSubspace span_of(const ComplexMatrix& spanning,
                                  const Tolerance& tol = {});

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t rank() const { return basis_.cols(); }
    const ComplexMatrix& basis() const { return basis_; }

private:
    std::size_t ambient_dim_;
    ComplexMatrix basis_;
};

// P = basis . basis^*: Hermitian idempotent with trace = rank.
ComplexMatrix projection(const ClosedSubspace& v);

// Subspace spanned by T . basis (closure is automatic in finite dimensions);
// rank may drop, down to the zero subspace when T annihilates V.
ClosedSubspace image_under(const ComplexMatrix& t, const ClosedSubspace& v,
                           const Tolerance& tol = {});

struct SwapResiduals {
    double general;                     // ||P_V T^* - P_V T^* P_{TV}||_2
    std::optional<double> unitary;      // ||P_{TV} T - T P_V||_2, unitary T only
};

// Residuals of the projection swap identities; the unitary branch is reported
// only when max_abs(T^* T - I) <= eq_tol.
SwapResiduals projection_swap_residual(const ComplexMatrix& t,
                                       const ClosedSubspace& v,
                                       const Tolerance& tol = {});

}  // namespace gff

#endif  // GFF_SUBSPACE_HPP
