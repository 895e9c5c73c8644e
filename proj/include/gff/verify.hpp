#ifndef GFF_VERIFY_HPP
#define GFF_VERIFY_HPP

#include <cstdint>

#include "gff/gfusion.hpp"
#include "gff/report.hpp"

namespace gff {

// Single-system verification: energy identity, S = synthesis(analysis(.)),
// adjoint identity, Loewner sandwich with eigenvector attainment, and, for
// frames, reconstruction plus the canonical-dual identities. Residuals over
// `trials` random vectors; deterministic for a fixed seed.
struct SystemVerificationReport {
    FrameBounds bounds;
    std::vector<CheckResult> checks;
    bool pass = true;
};

SystemVerificationReport verify_system(const GFusionSystem& sys, int trials,
                                       const Tolerance& tol,
                                       std::uint64_t seed = 0);

}  // namespace gff

#endif  // GFF_VERIFY_HPP
