#include "gff/kernels.hpp"

#include <cstdint>

namespace gff::kernels {

namespace {

// Shared per-row body: row i of c accumulates a(i,k)*b(k,:) with k ascending,
// so every output element sees the same addition order in both variants.
inline void matmul_row(const cplx* a, std::size_t ac, const cplx* b,
                       std::size_t bc, cplx* c, std::size_t i) {
    cplx* crow = c + i * bc;
    for (std::size_t j = 0; j < bc; ++j) crow[j] = cplx{0.0, 0.0};
    const cplx* arow = a + i * ac;
    for (std::size_t k = 0; k < ac; ++k) {
        const cplx aik = arow[k];
        const cplx* brow = b + k * bc;
        for (std::size_t j = 0; j < bc; ++j) crow[j] += aik * brow[j];
    }
}

inline void kron_row(const cplx* a, std::size_t ac, const cplx* b,
                     std::size_t br, std::size_t bc, cplx* c, std::size_t r) {
    const std::size_t ia = r / br;
    const std::size_t ib = r % br;
    const cplx* arow = a + ia * ac;
    const cplx* brow = b + ib * bc;
    cplx* crow = c + r * (ac * bc);
    for (std::size_t ja = 0; ja < ac; ++ja) {
        const cplx av = arow[ja];
        cplx* block = crow + ja * bc;
        for (std::size_t jb = 0; jb < bc; ++jb) block[jb] = av * brow[jb];
    }
}

}  // namespace

void matmul_serial(const cplx* a, std::size_t ar, std::size_t ac,
                   const cplx* b, std::size_t bc, cplx* c) {
    for (std::size_t i = 0; i < ar; ++i) matmul_row(a, ac, b, bc, c, i);
}

void matmul_parallel(const cplx* a, std::size_t ar, std::size_t ac,
                     const cplx* b, std::size_t bc, cplx* c) {
    const auto rows = static_cast<std::int64_t>(ar);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < rows; ++i)
        matmul_row(a, ac, b, bc, c, static_cast<std::size_t>(i));
}

void kron_serial(const cplx* a, std::size_t ar, std::size_t ac,
                 const cplx* b, std::size_t br, std::size_t bc, cplx* c) {
    for (std::size_t r = 0; r < ar * br; ++r) kron_row(a, ac, b, br, bc, c, r);
}

void kron_parallel(const cplx* a, std::size_t ar, std::size_t ac,
                   const cplx* b, std::size_t br, std::size_t bc, cplx* c) {
    const auto rows = static_cast<std::int64_t>(ar * br);
#pragma omp parallel for schedule(static)
    for (std::int64_t r = 0; r < rows; ++r)
        kron_row(a, ac, b, br, bc, c, static_cast<std::size_t>(r));
}

}  // namespace gff::kernels
