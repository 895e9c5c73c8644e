#include "gff/tensor.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "gff/errors.hpp"
#include "gff/linalg.hpp"
#include "gff/rng.hpp"

namespace gff {

namespace {

std::size_t element_budget() {
    if (const char* env = std::getenv("GFF_MAX_ELEMENTS")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
        throw BadParams("GFF_MAX_ELEMENTS must be a positive integer, got '" +
                        std::string(env) + "'");
    }
    return kDefaultMaxElements;
}

}  // namespace

ComplexMatrix tensor_vector(const ComplexMatrix& f, const ComplexMatrix& g) {
    return kron(f, g);
}

ComplexMatrix tensor_operator(const ComplexMatrix& q, const ComplexMatrix& t) {
    return kron(q, t);
}

TensorSystem tensor_system(const GFusionSystem& left,
                           const GFusionSystem& right) {
    const std::size_t nm = left.ambient_dim() * right.ambient_dim();
    std::size_t local_left = 0, local_right = 0;
    for (const auto& c : left.components()) local_left += c.local_dim();
    for (const auto& c : right.components()) local_right += c.local_dim();

    const std::size_t budget = element_budget();
    const std::size_t synthesis_elems = nm * local_left * local_right;
    if (synthesis_elems > budget || nm * nm > budget)
        throw SizeLimit("product system needs " +
                        std::to_string(std::max(synthesis_elems, nm * nm)) +
                        " matrix entries, budget is " + std::to_string(budget));

    std::vector<GFusionComponent> comps;
    comps.reserve(left.size() * right.size());
    for (const auto& cl : left.components()) {
        for (const auto& cr : right.components()) {
            ComplexMatrix basis = kron(cl.subspace.basis(), cr.subspace.basis());
            comps.push_back(GFusionComponent{
                ClosedSubspace(nm, std::move(basis)),
                kron(cl.op, cr.op), cl.weight * cr.weight});
        }
    }
    return TensorSystem{left, right, GFusionSystem(nm, std::move(comps))};
}

const CheckResult* TensorVerificationReport::find(const std::string& name) const {
    for (const auto& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

TensorVerificationReport verify_tensor_identities(
    const TensorSystem& ts, int trials, const Tolerance& tol,
    const std::optional<TensorSystem>& primed, std::uint64_t seed) {
    if (trials < 0) throw BadParams("trials must be nonnegative");
    const double t = tol.eq_tol;
    TensorVerificationReport report;
    auto add = [&](std::string name, double residual, double threshold) {
        report.checks.push_back({std::move(name), residual, threshold});
    };

    const ComplexMatrix s_left = frame_operator(ts.left);
    const ComplexMatrix s_right = frame_operator(ts.right);
    const ComplexMatrix s_prod = frame_operator(ts.product);
    const auto ext_left = hermitian_eig_extremes(s_left);
    const auto ext_right = hermitian_eig_extremes(s_right);
    const auto ext_prod = hermitian_eig_extremes(s_prod);

    // (a) eigen-extremes of the product frame operator factorize
    const double lo_expect = ext_left.lambda_min * ext_right.lambda_min;
    const double hi_expect = ext_left.lambda_max * ext_right.lambda_max;
    add("bound_factorization_lower",
        std::abs(ext_prod.lambda_min - lo_expect) / std::max(1.0, lo_expect), t);
    add("bound_factorization_upper",
        std::abs(ext_prod.lambda_max - hi_expect) / std::max(1.0, hi_expect), t);

    // (b) S_prod = kron(S_left, S_right)
    const double factor_scale =
        operator_norm_2(s_left) * operator_norm_2(s_right);
    add("frame_op_factorization", operator_norm_2(s_prod - kron(s_left, s_right)),
        t * std::max(1.0, factor_scale));

    // (c) synthesis action on random simple coefficient families
    {
        GaussianRng rng(seed);
        double worst = 0.0;
        for (int trial = 0; trial < trials; ++trial) {
            CoefficientFamily cf_left, cf_right, cf_prod;
            for (const auto& c : ts.left.components())
                cf_left.blocks.push_back(rng.normal_matrix(c.local_dim(), 1));
            for (const auto& c : ts.right.components())
                cf_right.blocks.push_back(rng.normal_matrix(c.local_dim(), 1));
            for (const auto& fl : cf_left.blocks)
                for (const auto& fr : cf_right.blocks)
                    cf_prod.blocks.push_back(kron(fl, fr));
            const ComplexMatrix lhs = synthesis(ts.product, cf_prod);
            const ComplexMatrix rhs = kron(synthesis(ts.left, cf_left),
                                           synthesis(ts.right, cf_right));
            worst = std::max(worst, frobenius_norm(lhs - rhs) /
                                        std::max(1.0, frobenius_norm(rhs)));
        }
        add("synthesis_factorization", worst, t);
    }

    // (d) canonical dual of the product, when both factors are frames
    const bool factors_are_frames =
        optimal_bounds(ts.left).kind != FrameKind::bessel_only &&
        optimal_bounds(ts.right).kind != FrameKind::bessel_only;
    if (factors_are_frames) {
        const GFusionSystem dual = canonical_dual(ts.product);
        const ComplexMatrix s_inv = invert_frame_operator(s_prod);
        add("dual_frame_op_is_inverse",
            operator_norm_2(frame_operator(dual) - s_inv),
            t * std::max(1.0, operator_norm_2(s_inv)));

        const auto dual_ext = hermitian_eig_extremes(frame_operator(dual));
        const double interval_lo =
            1.0 / (ext_left.lambda_max * ext_right.lambda_max);
        const double interval_hi =
            (ext_left.lambda_max * ext_right.lambda_max) /
            (ext_left.lambda_min * ext_left.lambda_min * ext_right.lambda_min *
             ext_right.lambda_min);
        const double violation =
            std::max({0.0, interval_lo - dual_ext.lambda_min,
                      dual_ext.lambda_max - interval_hi});
        add("dual_bounds_margin", violation, t);
    }

    if (primed) {
        // (e) pair operator factorization and norm bound
        const ComplexMatrix s_pair =
            pair_frame_operator(ts.product, primed->product);
        const ComplexMatrix s_pair_left =
            pair_frame_operator(ts.left, primed->left);
        const ComplexMatrix s_pair_right =
            pair_frame_operator(ts.right, primed->right);
        const double pair_norm = operator_norm_2(s_pair);
        add("pair_op_factorization",
            operator_norm_2(s_pair - kron(s_pair_left, s_pair_right)),
            t * (1.0 + pair_norm));
        const double b1 = ext_prod.lambda_max;
        const double b2 =
            hermitian_eig_extremes(frame_operator(primed->product)).lambda_max;
        add("pair_norm_bound_margin", std::max(0.0, pair_norm - std::sqrt(b1 * b2)),
            t);

        // (f) dual-pairing premises and the induced lower bound
        const std::size_t n_left = ts.left.ambient_dim();
        const std::size_t n_right = ts.right.ambient_dim();
        const double res_left = operator_norm_2(
            pair_frame_operator(primed->left, ts.left) -
            ComplexMatrix::identity(n_left));
        const double res_right = operator_norm_2(
            pair_frame_operator(primed->right, ts.right) -
            ComplexMatrix::identity(n_right));
        add("dual_pairing_left", res_left, t);
        add("dual_pairing_right", res_right, t);
        if (res_left <= t && res_right <= t) {
            const double d_opt =
                hermitian_eig_extremes(frame_operator(primed->left)).lambda_max;
            const double f_opt =
                hermitian_eig_extremes(frame_operator(primed->right)).lambda_max;
            add("dual_pairing_lower_bound_margin",
                std::max(0.0, 1.0 / (d_opt * f_opt) - ext_prod.lambda_min), t);
        }
    }

    report.pass = all_pass(report.checks);
    return report;
}

}  // namespace gff
