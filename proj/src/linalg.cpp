#include "gff/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "gff/errors.hpp"

namespace gff {

namespace {

constexpr int kMaxSweeps = 64;

double col_norm(const ComplexMatrix& a, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::norm(a.at(i, j));
    return std::sqrt(s);
}

// Unitary 2x2 rotation diagonalizing the Hermitian block [[app, apq],
// [conj(apq), aqq]]: a phase factor u = conj(apq)/|apq| folds the block to a
// real symmetric one, then the classic stable Jacobi angle applies.
struct JacobiRotation {
    double c;
    double s;
    cplx u;
};

JacobiRotation make_rotation(double app, double aqq, cplx apq) {
    const double r = std::abs(apq);
    const cplx u = std::conj(apq) / r;
    const double tau = (aqq - app) / (2.0 * r);
    double t;
    if (tau >= 0.0)
        t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
    else
        t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    return {c, t * c, u};
}

// Column update shared by M <- M J, V <- V J and the one-sided SVD sweep.
void rotate_columns(ComplexMatrix& m, std::size_t p, std::size_t q,
                    const JacobiRotation& rot) {
    for (std::size_t k = 0; k < m.rows(); ++k) {
        const cplx mp = m.at(k, p);
        const cplx mq = m.at(k, q);
        m.at(k, p) = rot.c * mp - rot.s * rot.u * mq;
        m.at(k, q) = rot.s * mp + rot.c * rot.u * mq;
    }
}

void rotate_rows(ComplexMatrix& m, std::size_t p, std::size_t q,
                 const JacobiRotation& rot) {
    const cplx ubar = std::conj(rot.u);
    for (std::size_t k = 0; k < m.cols(); ++k) {
        const cplx mp = m.at(p, k);
        const cplx mq = m.at(q, k);
        m.at(p, k) = rot.c * mp - rot.s * ubar * mq;
        m.at(q, k) = rot.s * mp + rot.c * ubar * mq;
    }
}

double off_diagonal_norm(const ComplexMatrix& m) {
    double s = 0.0;
    for (std::size_t p = 0; p + 1 < m.rows(); ++p)
        for (std::size_t q = p + 1; q < m.cols(); ++q) s += std::norm(m.at(p, q));
    return std::sqrt(2.0 * s);
}

}  // namespace

ComplexMatrix orthonormalize(const ComplexMatrix& spanning,
                             const Tolerance& tol) {
    const std::size_t n = spanning.rows();
    const std::size_t m = spanning.cols();
    if (n == 0 || m == 0) throw EmptySpan("no spanning columns");

    double max_col = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        max_col = std::max(max_col, col_norm(spanning, j));
    if (max_col == 0.0) throw EmptySpan("all spanning columns are zero");
    const double cutoff = tol.rank_tol * max_col;

    std::vector<std::vector<cplx>> accepted;
    std::vector<cplx> v(n);
    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t i = 0; i < n; ++i) v[i] = spanning.at(i, j);
        // MGS deflation plus one reorthogonalization pass, fixed order
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : accepted) {
                cplx proj{0.0, 0.0};
                for (std::size_t i = 0; i < n; ++i) proj += v[i] * std::conj(q[i]);
                for (std::size_t i = 0; i < n; ++i) v[i] -= proj * q[i];
            }
        }
        double nrm = 0.0;
        for (std::size_t i = 0; i < n; ++i) nrm += std::norm(v[i]);
        nrm = std::sqrt(nrm);
        if (nrm > cutoff) {
            std::vector<cplx> q(n);
            for (std::size_t i = 0; i < n; ++i) q[i] = v[i] / nrm;
            accepted.push_back(std::move(q));
        }
    }
    if (accepted.empty()) throw EmptySpan("every column deflated below rank_tol");

    ComplexMatrix out(n, accepted.size());
    for (std::size_t j = 0; j < accepted.size(); ++j)
        for (std::size_t i = 0; i < n; ++i) out.at(i, j) = accepted[j][i];
    return out;
}

HermitianEig hermitian_eig(const ComplexMatrix& a, const Tolerance& tol) {
    if (!a.square())
        throw DimensionMismatch("hermitian_eig on " + std::to_string(a.rows()) +
                                "x" + std::to_string(a.cols()));
    const double herm_res = hermitian_residual(a);
    if (herm_res > tol.eq_tol)
        throw NotHermitian("residual " + std::to_string(herm_res) +
                           " exceeds eq_tol");

    const std::size_t n = a.rows();
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));
    ComplexMatrix vecs = ComplexMatrix::identity(n);

    const double scale = frobenius_norm(m);
    if (scale > 0.0) {
        const double converged = 1e-15 * scale;
        const double skip = 1e-18 * scale;
        for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
            if (off_diagonal_norm(m) <= converged) break;
            for (std::size_t p = 0; p + 1 < n; ++p) {
                for (std::size_t q = p + 1; q < n; ++q) {
                    const cplx apq = m.at(p, q);
                    if (std::abs(apq) <= skip) continue;
                    const auto rot = make_rotation(m.at(p, p).real(),
                                                   m.at(q, q).real(), apq);
                    rotate_columns(m, p, q, rot);
                    rotate_rows(m, p, q, rot);
                    rotate_columns(vecs, p, q, rot);
                    // the rotation zeroes (p,q) exactly in theory; enforce it
                    m.at(p, q) = 0.0;
                    m.at(q, p) = 0.0;
                    m.at(p, p) = m.at(p, p).real();
                    m.at(q, q) = m.at(q, q).real();
                }
            }
        }
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return m.at(i, i).real() < m.at(j, j).real();
    });

    HermitianEig result;
    result.values.resize(n);
    result.vectors = ComplexMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        result.values[k] = m.at(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            result.vectors.at(i, k) = vecs.at(i, order[k]);
    }
    return result;
}

EigExtremes hermitian_eig_extremes(const ComplexMatrix& a,
                                   const Tolerance& tol) {
    const auto eig = hermitian_eig(a, tol);
    if (eig.values.empty()) return {0.0, 0.0};
    return {eig.values.front(), eig.values.back()};
}

Svd svd(const ComplexMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    Svd out;
    out.left = ComplexMatrix(m, n);
    out.right = ComplexMatrix::identity(n);
    if (m == 0 || n == 0) return out;

    ComplexMatrix b = a;
    // One-sided Jacobi: orthogonalize column pairs until a full sweep makes
    // no rotation. The same rotation that diagonalizes the 2x2 Gram block is
    // applied to the columns of b and accumulated into right.
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool changed = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0, beta = 0.0;
                cplx gamma{0.0, 0.0};
                for (std::size_t k = 0; k < m; ++k) {
                    const cplx bp = b.at(k, p);
                    const cplx bq = b.at(k, q);
                    alpha += std::norm(bp);
                    beta += std::norm(bq);
                    gamma += std::conj(bp) * bq;
                }
                if (alpha == 0.0 || beta == 0.0) continue;
                if (std::abs(gamma) <= 1e-15 * std::sqrt(alpha * beta)) continue;
                const auto rot = make_rotation(alpha, beta, gamma);
                rotate_columns(b, p, q, rot);
                rotate_columns(out.right, p, q, rot);
                changed = true;
            }
        }
        if (!changed) break;
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) sigma[j] = col_norm(b, j);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return sigma[i] > sigma[j]; });

    out.values.resize(n);
    ComplexMatrix right_sorted(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        out.values[k] = sigma[j];
        for (std::size_t i = 0; i < n; ++i)
            right_sorted.at(i, k) = out.right.at(i, j);
        if (sigma[j] > 0.0)
            for (std::size_t i = 0; i < m; ++i)
                out.left.at(i, k) = b.at(i, j) / sigma[j];
    }
    out.right = std::move(right_sorted);
    return out;
}

double operator_norm_2(const ComplexMatrix& a) {
    if (a.empty()) return 0.0;
    // work on the side with fewer columns; a and a^* share singular values
    if (a.rows() < a.cols()) return svd(adjoint(a)).values.front();
    return svd(a).values.front();
}

}  // namespace gff
