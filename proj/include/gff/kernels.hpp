#ifndef GFF_KERNELS_HPP
#define GFF_KERNELS_HPP

#include <cstddef>

#include "gff/matrix.hpp"

// Low-level dense kernels. Each kernel exists twice: a serial reference and
// an OpenMP variant parallelized over independent output elements, so the two
// produce bit-identical results (the per-element arithmetic and accumulation
// order are the same). Tests assert exact equality; tools/bench compares
// their throughput.
namespace gff::kernels {

// c (ar x bc) = a (ar x ac) . b (ac x bc); c is overwritten.
void matmul_serial(const cplx* a, std::size_t ar, std::size_t ac,
                   const cplx* b, std::size_t bc, cplx* c);
void matmul_parallel(const cplx* a, std::size_t ar, std::size_t ac,
                     const cplx* b, std::size_t bc, cplx* c);

// c ((ar*br) x (ac*bc)) = a kron b; c is overwritten.
void kron_serial(const cplx* a, std::size_t ar, std::size_t ac,
                 const cplx* b, std::size_t br, std::size_t bc, cplx* c);
void kron_parallel(const cplx* a, std::size_t ar, std::size_t ac,
                   const cplx* b, std::size_t br, std::size_t bc, cplx* c);

}  // namespace gff::kernels

#endif  // GFF_KERNELS_HPP
