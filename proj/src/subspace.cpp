#include "gff/subspace.hpp"

#include <utility>

#include "gff/errors.hpp"

namespace gff {

ClosedSubspace::ClosedSubspace(std::size_t ambient_dim, ComplexMatrix basis)
    : ambient_dim_(ambient_dim), basis_(std::move(basis)) {
    if (ambient_dim_ == 0)
        throw DimensionMismatch("subspace ambient dimension must be positive");
    if (basis_.rows() != ambient_dim_)
        throw DimensionMismatch("basis has " + std::to_string(basis_.rows()) +
                                " rows in ambient dimension " +
                                std::to_string(ambient_dim_));
    if (basis_.cols() > ambient_dim_)
        throw DimensionMismatch("basis rank exceeds ambient dimension");
    if (!basis_.all_finite())
        throw DimensionMismatch("basis has non-finite entries");
    if (basis_.cols() > 0) {
        const ComplexMatrix gram = adjoint(basis_) * basis_;
        const double res =
            max_abs(gram - ComplexMatrix::identity(basis_.cols()));
        if (res > 10.0 * Tolerance{}.eq_tol)
            throw DimensionMismatch(
                "basis columns are not orthonormal (residual " +
                std::to_string(res) + ")");
    }
}

ClosedSubspace ClosedSubspace::zero(std::size_t ambient_dim) {
    return ClosedSubspace(ambient_dim, ComplexMatrix(ambient_dim, 0));
}

ClosedSubspace ClosedSubspace::span_of(const ComplexMatrix& spanning,
                                       const Tolerance& tol) {
    if (spanning.rows() == 0)
        throw DimensionMismatch("spanning set has zero ambient dimension");
    if (spanning.cols() == 0) return zero(spanning.rows());
    try {
        return ClosedSubspace(spanning.rows(), orthonormalize(spanning, tol));
    } catch (const EmptySpan&) {
        return zero(spanning.rows());
    }
}

ComplexMatrix projection(const ClosedSubspace& v) {
    if (v.rank() == 0)
        return ComplexMatrix(v.ambient_dim(), v.ambient_dim());
    return v.basis() * adjoint(v.basis());
}

ClosedSubspace image_under(const ComplexMatrix& t, const ClosedSubspace& v,
                           const Tolerance& tol) {
    if (t.cols() != v.ambient_dim())
        throw DimensionMismatch("operator has " + std::to_string(t.cols()) +
                                " columns, subspace ambient dimension is " +
                                std::to_string(v.ambient_dim()));
    if (t.rows() == 0) throw DimensionMismatch("operator has zero rows");
    if (v.rank() == 0) return ClosedSubspace::zero(t.rows());
    return ClosedSubspace::span_of(t * v.basis(), tol);
}

SwapResiduals projection_swap_residual(const ComplexMatrix& t,
                                       const ClosedSubspace& v,
                                       const Tolerance& tol) {
    if (!t.square() || t.rows() != v.ambient_dim())
        throw DimensionMismatch(
            "projection swap needs a square operator matching the ambient "
            "dimension");
    const ComplexMatrix pv = projection(v);
    const ComplexMatrix ptv = projection(image_under(t, v, tol));
    const ComplexMatrix pvt = pv * adjoint(t);

    SwapResiduals res{};
    res.general = operator_norm_2(pvt - pvt * ptv);
    const ComplexMatrix gram = adjoint(t) * t;
    if (max_abs(gram - ComplexMatrix::identity(t.rows())) <= tol.eq_tol)
        res.unitary = operator_norm_2(ptv * t - t * pv);
    return res;
}

}  // namespace gff
