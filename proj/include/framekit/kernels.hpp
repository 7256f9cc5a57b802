#pragma once

#include <complex>
#include <cstddef>

namespace framekit {

using cplx = std::complex<double>;

// Dense kernels on row-major buffers. Every kernel exists twice: the
// OpenMP-parallel production path in framekit::kernels and a plain serial
// twin in framekit::kernels::ref with a fixed left-to-right summation
// order. The parallel paths never split the accumulation of a single
// output entry across threads (reductions use fixed-size chunks combined
// in index order), so results do not depend on the thread count.
namespace kernels {

namespace ref {

/// c (m x n) = a (m x k) * b (k x n)
void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n);

/// y (m) = a (m x n) * x (n)
void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t m, std::size_t n);

/// out (ar*br x ac*bc) = a (ar x ac) kron b (br x bc)
void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* out);

/// sum_i a[i] * conj(b[i]), left-to-right
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);

/// s (d x d) += sum_n x_n x_n^H for the `count` rows x_n of xs (count x d)
void outer_accumulate(const cplx* xs, std::size_t count, std::size_t d, cplx* s);

/// out (len) = sum_n coeffs[n] * elems[n*len .. n*len+len)
void weighted_accumulate(const cplx* coeffs, const cplx* elems,
                         std::size_t count, std::size_t len, cplx* out);

} // namespace ref

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n);
void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t m, std::size_t n);
void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* out);
cplx dot_conj(const cplx* a, const cplx* b, std::size_t n);
void outer_accumulate(const cplx* xs, std::size_t count, std::size_t d, cplx* s);
void weighted_accumulate(const cplx* coeffs, const cplx* elems,
                         std::size_t count, std::size_t len, cplx* out);

} // namespace kernels

} // namespace framekit
