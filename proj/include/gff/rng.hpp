#ifndef GFF_RNG_HPP
#define GFF_RNG_HPP

#include <cstdint>
#include <random>

#include "gff/matrix.hpp"

namespace gff {

// Deterministic random source: mt19937_64 plus fixed mappings, so a seed
// reproduces the same values on every platform (std::*_distribution is
// implementation-defined and deliberately avoided). Uniform doubles take the
// top 53 bits of one engine draw; normals come from Box-Muller on two
// uniforms, cosine branch first, sine branch cached for the next call.
class GaussianRng {
public:
    explicit GaussianRng(std::uint64_t seed) : engine_(seed) {}

    // [0, 1)
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // {0, ..., n-1}; n must be >= 1.
    std::uint64_t uniform_index(std::uint64_t n) {
        auto k = static_cast<std::uint64_t>(uniform() * static_cast<double>(n));
        return k < n ? k : n - 1;
    }

    double normal();

    cplx normal_complex() {
        const double re = normal();
        const double im = normal();
        return {re, im};
    }

    // Entries drawn in row-major order, real part before imaginary part.
    ComplexMatrix normal_matrix(std::size_t rows, std::size_t cols);

private:
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

}  // namespace gff

#endif  // GFF_RNG_HPP
