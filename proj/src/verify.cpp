#include "gff/verify.hpp"

#include <cmath>

#include "gff/errors.hpp"
#include "gff/linalg.hpp"
#include "gff/rng.hpp"

namespace gff {

SystemVerificationReport verify_system(const GFusionSystem& sys, int trials,
                                       const Tolerance& tol,
                                       std::uint64_t seed) {
    if (trials < 1) throw BadParams("trials must be positive");
    const double t = tol.eq_tol;
    const std::size_t n = sys.ambient_dim();

    SystemVerificationReport report;
    auto add = [&](std::string name, double residual, double threshold) {
        report.checks.push_back({std::move(name), residual, threshold});
    };

    const ComplexMatrix s = frame_operator(sys);
    const auto eig = hermitian_eig(s);
    report.bounds = optimal_bounds(sys);

    GaussianRng rng(seed);
    double worst_energy = 0.0;
    double worst_factorization = 0.0;
    double worst_adjoint = 0.0;
    double worst_sandwich = 0.0;
    for (int trial = 0; trial < trials; ++trial) {
        const ComplexMatrix f = rng.normal_matrix(n, 1);
        const double f2 = std::pow(frobenius_norm(f), 2);

        // <Sf, f> = sum v_i^2 ||Lambda_i P_i f||^2 = ||analysis(f)||^2
        const ComplexMatrix sf = s * f;
        const double quad = inner(sf, f).real();
        const CoefficientFamily coeffs = analysis(sys, f);
        double direct = 0.0;
        for (const auto& block : coeffs.blocks) {
            const double b = frobenius_norm(block);
            direct += b * b;
        }
        worst_energy =
            std::max(worst_energy, std::abs(quad - direct) / (1.0 + f2));

        worst_factorization = std::max(
            worst_factorization, frobenius_norm(synthesis(sys, coeffs) - sf) /
                                     std::max(1.0, frobenius_norm(f)));

        // <synthesis(c), f> = <c, analysis(f)>
        CoefficientFamily c;
        for (const auto& comp : sys.components())
            c.blocks.push_back(rng.normal_matrix(comp.local_dim(), 1));
        const cplx lhs = inner(synthesis(sys, c), f);
        const cplx rhs = l2_inner(c, coeffs);
        worst_adjoint = std::max(
            worst_adjoint,
            std::abs(lhs - rhs) / (1.0 + l2_norm(c) * frobenius_norm(f)));

        const double unit = frobenius_norm(f);
        if (unit > 0.0) {
            const double q = quad / (unit * unit);
            worst_sandwich = std::max(
                worst_sandwich,
                std::max({0.0, report.bounds.lower - q, q - report.bounds.upper}));
        }
    }
    add("energy_identity", worst_energy, t);
    add("analysis_synthesis_factorization", worst_factorization,
        t * std::max(1.0, report.bounds.upper));
    add("adjoint_identity", worst_adjoint, t);
    add("loewner_sandwich", worst_sandwich, t);

    // attainment of both extremes by their eigenvectors
    const double scale = std::max(1.0, report.bounds.upper);
    const ComplexMatrix v_min = eig.vectors.col(0);
    const ComplexMatrix v_max = eig.vectors.col(n - 1);
    const double attained_min =
        std::abs(inner(s * v_min, v_min).real() - eig.values.front());
    const double attained_max =
        std::abs(inner(s * v_max, v_max).real() - eig.values.back());
    add("bound_attainment", std::max(attained_min, attained_max) / scale,
        10.0 * t);

    if (report.bounds.kind != FrameKind::bessel_only) {
        const double cond = report.bounds.upper / report.bounds.lower;
        const double dual_tol = t * std::max(1.0, cond);

        double worst_rec = 0.0;
        GaussianRng rec_rng(seed + 1);
        for (int trial = 0; trial < trials; ++trial) {
            const ComplexMatrix f = rec_rng.normal_matrix(n, 1);
            worst_rec = std::max(worst_rec, reconstruct(sys, f).rel_err);
        }
        add("reconstruction", worst_rec, dual_tol);

        const GFusionSystem dual = canonical_dual(sys);
        const ComplexMatrix id = ComplexMatrix::identity(n);
        add("dual_pair_identity",
            operator_norm_2(pair_frame_operator(sys, dual) - id), dual_tol);
        add("dual_involution",
            operator_norm_2(frame_operator(dual) * s - id), dual_tol);
    }

    report.pass = all_pass(report.checks);
    return report;
}

}  // namespace gff
