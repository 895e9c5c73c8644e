#ifndef GFF_MATRIX_HPP
#define GFF_MATRIX_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace gff {

using cplx = std::complex<double>;

// Dense row-major complex matrix: the universal carrier for operators, bases
// and vectors (a vector is an n x 1 matrix). Value semantics; every operation
// on it is a pure function. Degenerate shapes (0 rows or columns) are legal
// and carry no entries; they represent zero-rank bases and empty products.
class ComplexMatrix {
public:
    ComplexMatrix() = default;

    // Zero-filled rows x cols.
    ComplexMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, cplx{0.0, 0.0}) {}

    // Row-major entries; entries.size() must equal rows*cols.
    ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diag(const std::vector<double>& d);
    // n x 1 column vector.
    static ComplexMatrix column(std::vector<cplx> v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    bool square() const { return rows_ == cols_; }

    cplx& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const cplx& at(std::size_t i, std::size_t j) const {
        return entries_[i * cols_ + j];
    }

    std::span<const cplx> entries() const { return entries_; }
    cplx* data() { return entries_.data(); }
    const cplx* data() const { return entries_.data(); }

    // Copy of column j as an n x 1 matrix.
    ComplexMatrix col(std::size_t j) const;

    bool all_finite() const;

    bool operator==(const ComplexMatrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> entries_;
};

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(cplx s, const ComplexMatrix& a);
ComplexMatrix operator*(double s, const ComplexMatrix& a);

// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);

// Kronecker product: block (i,j) of the result equals a(i,j) * b.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

// Largest entry magnitude (0 for empty matrices).
double max_abs(const ComplexMatrix& a);
// Frobenius norm; for column vectors this is the Euclidean norm.
double frobenius_norm(const ComplexMatrix& a);
// Entrywise inner product sum_ij a_ij * conj(b_ij); for column vectors this
// is the Hilbert-space inner product <a, b>, linear in the first argument.
cplx inner(const ComplexMatrix& a, const ComplexMatrix& b);
// max_abs(a - a^*); 0 means exactly Hermitian.
double hermitian_residual(const ComplexMatrix& a);

}  // namespace gff

#endif  // GFF_MATRIX_HPP
