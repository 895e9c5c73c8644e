#include "gff/matrix.hpp"

#include <cmath>
#include <utility>

#include "gff/errors.hpp"
#include "gff/kernels.hpp"

namespace gff {

namespace {

// Below this many fused multiply-adds the OpenMP fork/join is pure overhead.
constexpr std::size_t kParallelFlops = 1u << 15;

std::string shape(const ComplexMatrix& a) {
    return std::to_string(a.rows()) + "x" + std::to_string(a.cols());
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_)
        throw DimensionMismatch("entry count " +
                                std::to_string(entries_.size()) +
                                " does not match shape " + shape(*this));
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diag(const std::vector<double>& d) {
    ComplexMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

ComplexMatrix ComplexMatrix::column(std::vector<cplx> v) {
    const std::size_t n = v.size();
    return ComplexMatrix(n, 1, std::move(v));
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const {
    ComplexMatrix out(rows_, 1);
    for (std::size_t i = 0; i < rows_; ++i) out.at(i, 0) = at(i, j);
    return out;
}

bool ComplexMatrix::all_finite() const {
    for (const cplx& z : entries_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return false;
    return true;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("add " + shape(a) + " vs " + shape(b));
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("subtract " + shape(a) + " vs " + shape(b));
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows())
        throw DimensionMismatch("multiply " + shape(a) + " by " + shape(b));
    ComplexMatrix c(a.rows(), b.cols());
    const std::size_t flops = a.rows() * a.cols() * b.cols();
    if (flops >= kParallelFlops)
        kernels::matmul_parallel(a.data(), a.rows(), a.cols(), b.data(),
                                 b.cols(), c.data());
    else
        kernels::matmul_serial(a.data(), a.rows(), a.cols(), b.data(),
                               b.cols(), c.data());
    return c;
}

ComplexMatrix operator*(cplx s, const ComplexMatrix& a) {
    ComplexMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i) c.data()[i] = s * a.data()[i];
    return c;
}

ComplexMatrix operator*(double s, const ComplexMatrix& a) {
    return cplx{s, 0.0} * a;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix c(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            c.at(j, i) = std::conj(a.at(i, j));
    return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
    if (c.empty()) return c;
    if (c.size() >= kParallelFlops)
        kernels::kron_parallel(a.data(), a.rows(), a.cols(), b.data(),
                               b.rows(), b.cols(), c.data());
    else
        kernels::kron_serial(a.data(), a.rows(), a.cols(), b.data(), b.rows(),
                             b.cols(), c.data());
    return c;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const cplx& z : a.entries()) m = std::max(m, std::abs(z));
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const cplx& z : a.entries()) s += std::norm(z);
    return std::sqrt(s);
}

cplx inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch("inner " + shape(a) + " vs " + shape(b));
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a.data()[i] * std::conj(b.data()[i]);
    return s;
}

double hermitian_residual(const ComplexMatrix& a) {
    if (!a.square())
        throw DimensionMismatch("hermitian_residual on " + shape(a));
    double m = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = i; j < a.cols(); ++j)
            m = std::max(m, std::abs(a.at(i, j) - std::conj(a.at(j, i))));
    return m;
}

}  // namespace gff
