#ifndef GFF_LINALG_HPP
#define GFF_LINALG_HPP

#include <vector>

#include "gff/matrix.hpp"

namespace gff {

// Numerical contracts used throughout. rank_tol is relative: a column whose
// deflated norm falls at or below rank_tol * (largest input column norm) is
// treated as dependent and dropped. eq_tol is the residual cutoff for
// identity checks (Hermiticity, orthonormality, unitarity).
struct Tolerance {
    double rank_tol = 1e-10;
    double eq_tol = 1e-9;
};

// Modified Gram-Schmidt with one reorthogonalization pass, columns processed
// left to right; deterministic for a fixed input. Returns a matrix with
// orthonormal columns spanning the same column space. Throws EmptySpan when
// every column deflates to zero.
ComplexMatrix orthonormalize(const ComplexMatrix& spanning,
                             const Tolerance& tol = {});

struct HermitianEig {
    std::vector<double> values;  // ascending
    ComplexMatrix vectors;       // column k pairs with values[k]
};

// Full eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
// rotations. The input must satisfy max_abs(A - A^*) <= eq_tol (else
// NotHermitian); it is symmetrized to (A + A^*)/2 before solving.
HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerance& tol = {});

struct EigExtremes {
    double lambda_min;
    double lambda_max;
};

EigExtremes hermitian_eig_extremes(const ComplexMatrix& a,
                                   const Tolerance& tol = {});

struct Svd {
    std::vector<double> values;  // descending, all >= 0
    ComplexMatrix left;          // m x n; column k is u_k (zero when s_k = 0)
    ComplexMatrix right;         // n x n unitary; a = left . diag(values) . right^*
};

// One-sided (Hestenes) Jacobi SVD; deterministic cyclic pair order.
Svd svd(const ComplexMatrix& a);

// Largest singular value (0 for empty matrices).
double operator_norm_2(const ComplexMatrix& a);

}  // namespace gff

#endif  // GFF_LINALG_HPP
