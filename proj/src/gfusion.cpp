#include "gff/gfusion.hpp"

#include <cmath>
#include <cstdint>
#include <utility>

#include "gff/errors.hpp"
#include "gff/linalg.hpp"

namespace gff {

namespace {

// Lambda_i P_{V_i} as a dense d_i x n matrix, built from the basis so the
// projection is never formed on its own.
ComplexMatrix local_operator(const GFusionComponent& comp) {
    if (comp.subspace.rank() == 0)
        return ComplexMatrix(comp.op.rows(), comp.subspace.ambient_dim());
    const ComplexMatrix ob = comp.op * comp.subspace.basis();  // d x r
    return ob * adjoint(comp.subspace.basis());                // d x n
}

// v^2 P Lambda^* Lambda P applied to a vector.
ComplexMatrix apply_term(const GFusionComponent& comp, const ComplexMatrix& x) {
    const std::size_t n = comp.subspace.ambient_dim();
    if (comp.subspace.rank() == 0) return ComplexMatrix(n, 1);
    const ComplexMatrix& b = comp.subspace.basis();
    const ComplexMatrix px = b * (adjoint(b) * x);
    const ComplexMatrix y = comp.op * px;
    const ComplexMatrix z = adjoint(comp.op) * y;
    return (comp.weight * comp.weight) * (b * (adjoint(b) * z));
}

}  // namespace

GFusionSystem::GFusionSystem(std::size_t ambient_dim,
                             std::vector<GFusionComponent> components)
    : ambient_dim_(ambient_dim), components_(std::move(components)) {
    if (ambient_dim_ == 0)
        throw DimensionMismatch("ambient dimension must be positive");
    if (components_.empty())
        throw DimensionMismatch("a system needs at least one component");
    for (std::size_t i = 0; i < components_.size(); ++i) {
        const auto& c = components_[i];
        const std::string where = "component " + std::to_string(i);
        if (c.subspace.ambient_dim() != ambient_dim_)
            throw DimensionMismatch(where + " lives in dimension " +
                                    std::to_string(c.subspace.ambient_dim()) +
                                    ", system ambient is " +
                                    std::to_string(ambient_dim_));
        if (c.op.cols() != ambient_dim_)
            throw DimensionMismatch(where + " operator has " +
                                    std::to_string(c.op.cols()) +
                                    " columns, expected " +
                                    std::to_string(ambient_dim_));
        if (c.op.rows() == 0)
            throw DimensionMismatch(where + " operator has zero rows");
        if (!c.op.all_finite())
            throw DimensionMismatch(where + " operator has non-finite entries");
        if (!(c.weight > 0.0) || !std::isfinite(c.weight))
            throw NonPositiveWeight(where + " has weight " +
                                    std::to_string(c.weight));
    }
}

double l2_norm(const CoefficientFamily& c) {
    double s = 0.0;
    for (const auto& block : c.blocks) {
        const double b = frobenius_norm(block);
        s += b * b;
    }
    return std::sqrt(s);
}

cplx l2_inner(const CoefficientFamily& a, const CoefficientFamily& b) {
    if (a.blocks.size() != b.blocks.size())
        throw DimensionMismatch("coefficient families have different block counts");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.blocks.size(); ++i)
        s += inner(a.blocks[i], b.blocks[i]);
    return s;
}

std::string to_string(FrameKind kind) {
    switch (kind) {
        case FrameKind::frame: return "frame";
        case FrameKind::tight: return "tight";
        case FrameKind::parseval: return "parseval";
        case FrameKind::bessel_only: return "bessel_only";
    }
    return "unknown";
}

CoefficientFamily analysis(const GFusionSystem& sys, const ComplexMatrix& f) {
    if (f.cols() != 1 || f.rows() != sys.ambient_dim())
        throw DimensionMismatch("analysis input must be a vector of length " +
                                std::to_string(sys.ambient_dim()));
    CoefficientFamily out;
    out.blocks.reserve(sys.size());
    for (const auto& comp : sys.components()) {
        if (comp.subspace.rank() == 0) {
            out.blocks.emplace_back(comp.local_dim(), 1);
            continue;
        }
        const ComplexMatrix& b = comp.subspace.basis();
        const ComplexMatrix pf = b * (adjoint(b) * f);
        out.blocks.push_back(comp.weight * (comp.op * pf));
    }
    return out;
}

ComplexMatrix synthesis(const GFusionSystem& sys, const CoefficientFamily& c) {
    if (c.blocks.size() != sys.size())
        throw DimensionMismatch("coefficient family has " +
                                std::to_string(c.blocks.size()) +
                                " blocks for " + std::to_string(sys.size()) +
                                " components");
    ComplexMatrix out(sys.ambient_dim(), 1);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        const auto& comp = sys.component(i);
        const auto& block = c.blocks[i];
        if (block.cols() != 1 || block.rows() != comp.local_dim())
            throw DimensionMismatch("block " + std::to_string(i) +
                                    " has length " + std::to_string(block.rows()) +
                                    ", local dimension is " +
                                    std::to_string(comp.local_dim()));
        if (comp.subspace.rank() == 0) continue;
        const ComplexMatrix& b = comp.subspace.basis();
        const ComplexMatrix lifted = adjoint(comp.op) * block;
        out = out + comp.weight * (b * (adjoint(b) * lifted));
    }
    return out;
}

ComplexMatrix frame_operator(const GFusionSystem& sys) {
    const std::size_t n = sys.ambient_dim();
    const auto count = static_cast<std::int64_t>(sys.size());
    std::vector<ComplexMatrix> terms(sys.size());
    // terms are independent; the reduction below stays in component order
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto& comp = sys.component(static_cast<std::size_t>(i));
        if (comp.subspace.rank() == 0) {
            terms[static_cast<std::size_t>(i)] = ComplexMatrix(n, n);
            continue;
        }
        const ComplexMatrix m = local_operator(comp);
        terms[static_cast<std::size_t>(i)] =
            (comp.weight * comp.weight) * (adjoint(m) * m);
    }
    ComplexMatrix s(n, n);
    for (const auto& term : terms) s = s + term;
    return s;
}

FrameBounds optimal_bounds(const GFusionSystem& sys, double class_tol) {
    const auto ext = hermitian_eig_extremes(frame_operator(sys));
    const double upper = std::max(ext.lambda_max, 0.0);
    // the frame operator is positive semidefinite; tiny negative lambda_min
    // is roundoff
    const double lower = std::min(std::max(ext.lambda_min, 0.0), upper);

    FrameKind kind;
    if (lower <= class_tol * upper)
        kind = FrameKind::bessel_only;
    else if (upper - lower <= class_tol * upper)
        kind = std::abs(upper - 1.0) <= class_tol ? FrameKind::parseval
                                                  : FrameKind::tight;
    else
        kind = FrameKind::frame;
    return {lower, upper, kind};
}

ComplexMatrix invert_frame_operator(const ComplexMatrix& s, double class_tol) {
    const auto eig = hermitian_eig(s);
    const double lambda_min = eig.values.front();
    const double lambda_max = eig.values.back();
    if (lambda_min <= class_tol * lambda_max || lambda_max <= 0.0)
        throw NotAFrame(lambda_min);
    // S^{-1} = V diag(1/lambda) V^*
    const std::size_t n = s.rows();
    ComplexMatrix scaled(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i)
            scaled.at(i, j) = eig.vectors.at(i, j) / eig.values[j];
    return scaled * adjoint(eig.vectors);
}

GFusionSystem canonical_dual(const GFusionSystem& sys, double class_tol) {
    const ComplexMatrix s_inv =
        invert_frame_operator(frame_operator(sys), class_tol);
    std::vector<GFusionComponent> duals;
    duals.reserve(sys.size());
    for (const auto& comp : sys.components()) {
        ClosedSubspace dual_space = image_under(s_inv, comp.subspace);
        // Lambda_i P_{V_i} S^{-1}, stored dense so duals round-trip through
        // the file format
        ComplexMatrix dual_op = local_operator(comp) * s_inv;
        duals.push_back(GFusionComponent{std::move(dual_space),
                                         std::move(dual_op), comp.weight});
    }
    return GFusionSystem(sys.ambient_dim(), std::move(duals));
}

Reconstruction reconstruct(const GFusionSystem& sys, const ComplexMatrix& f,
                           double class_tol) {
    if (f.cols() != 1 || f.rows() != sys.ambient_dim())
        throw DimensionMismatch("reconstruct input must be a vector of length " +
                                std::to_string(sys.ambient_dim()));
    const ComplexMatrix s_inv =
        invert_frame_operator(frame_operator(sys), class_tol);
    const ComplexMatrix g = s_inv * f;

    ComplexMatrix rec_a(sys.ambient_dim(), 1);  // sum v^2 P L*L P S^{-1} f
    ComplexMatrix acc(sys.ambient_dim(), 1);    // sum v^2 P L*L P f
    for (const auto& comp : sys.components()) {
        rec_a = rec_a + apply_term(comp, g);
        acc = acc + apply_term(comp, f);
    }
    const ComplexMatrix rec_b = s_inv * acc;

    const double denom = std::max(frobenius_norm(f), 1.0);
    const double err_a = frobenius_norm(rec_a - f) / denom;
    const double err_b = frobenius_norm(rec_b - f) / denom;
    return {rec_a, std::max(err_a, err_b)};
}

ComplexMatrix pair_frame_operator(const GFusionSystem& a,
                                  const GFusionSystem& b) {
    if (a.ambient_dim() != b.ambient_dim())
        throw DimensionMismatch("paired systems have ambient dimensions " +
                                std::to_string(a.ambient_dim()) + " and " +
                                std::to_string(b.ambient_dim()));
    if (a.size() != b.size())
        throw DimensionMismatch("paired systems have " +
                                std::to_string(a.size()) + " and " +
                                std::to_string(b.size()) + " components");
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a.component(i).local_dim() != b.component(i).local_dim())
            throw LocalSpaceMismatch(
                "component " + std::to_string(i) + " maps into dimensions " +
                std::to_string(a.component(i).local_dim()) + " and " +
                std::to_string(b.component(i).local_dim()));

    const std::size_t n = a.ambient_dim();
    const auto count = static_cast<std::int64_t>(a.size());
    std::vector<ComplexMatrix> terms(a.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        const auto& ca = a.component(idx);
        const auto& cb = b.component(idx);
        if (ca.subspace.rank() == 0 || cb.subspace.rank() == 0) {
            terms[idx] = ComplexMatrix(n, n);
            continue;
        }
        const ComplexMatrix ma = local_operator(ca);
        const ComplexMatrix mb = local_operator(cb);
        terms[idx] = (ca.weight * cb.weight) * (adjoint(ma) * mb);
    }
    ComplexMatrix s(n, n);
    for (const auto& term : terms) s = s + term;
    return s;
}

}  // namespace gff
