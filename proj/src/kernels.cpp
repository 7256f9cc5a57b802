#include "framekit/kernels.hpp"

#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace framekit::kernels {

namespace {

// Work thresholds below which the parallel paths fall back to a plain loop.
// Thresholds depend only on problem size, never on the thread count, so a
// given input always takes the same code path.
constexpr std::size_t par_threshold = 1 << 15;

// Reductions are chunked at a fixed width; chunk partial sums are combined
// in index order, one chunk per task, so the summation tree is independent
// of scheduling.
constexpr std::size_t chunk = 1 << 12;

using ssize = long long;

} // namespace

namespace ref {

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t l = 0; l < k; ++l)
                acc += a[i * k + l] * b[l * n + j];
            c[i * n + j] = acc;
        }
    }
}

void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t m, std::size_t n) {
    for (std::size_t i = 0; i < m; ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += a[i * n + j] * x[j];
        y[i] = acc;
    }
}

void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* out) {
    const std::size_t cols = ac * bc;
    for (std::size_t i = 0; i < ar; ++i)
        for (std::size_t p = 0; p < br; ++p)
            for (std::size_t j = 0; j < ac; ++j)
                for (std::size_t q = 0; q < bc; ++q)
                    out[(i * br + p) * cols + (j * bc + q)] =
                        a[i * ac + j] * b[p * bc + q];
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i)
        acc += a[i] * std::conj(b[i]);
    return acc;
}

void outer_accumulate(const cplx* xs, std::size_t count, std::size_t d, cplx* s) {
    for (std::size_t nidx = 0; nidx < count; ++nidx) {
        const cplx* x = xs + nidx * d;
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                s[i * d + j] += x[i] * std::conj(x[j]);
    }
}

void weighted_accumulate(const cplx* coeffs, const cplx* elems,
                         std::size_t count, std::size_t len, cplx* out) {
    for (std::size_t nidx = 0; nidx < count; ++nidx)
        for (std::size_t i = 0; i < len; ++i)
            out[i] += coeffs[nidx] * elems[nidx * len + i];
}

} // namespace ref

void matmul(const cplx* a, const cplx* b, cplx* c,
            std::size_t m, std::size_t k, std::size_t n) {
    if (m * n * k < par_threshold) {
        ref::matmul(a, b, c, m, k, n);
        return;
    }
#pragma omp parallel for schedule(static)
    for (ssize i = 0; i < static_cast<ssize>(m); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t l = 0; l < k; ++l)
                acc += a[i * k + l] * b[l * n + j];
            c[i * n + j] = acc;
        }
    }
}

void matvec(const cplx* a, const cplx* x, cplx* y,
            std::size_t m, std::size_t n) {
    if (m * n < par_threshold) {
        ref::matvec(a, x, y, m, n);
        return;
    }
#pragma omp parallel for schedule(static)
    for (ssize i = 0; i < static_cast<ssize>(m); ++i) {
        cplx acc{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j)
            acc += a[i * n + j] * x[j];
        y[i] = acc;
    }
}

void kron(const cplx* a, std::size_t ar, std::size_t ac,
          const cplx* b, std::size_t br, std::size_t bc, cplx* out) {
    if (ar * ac * br * bc < par_threshold) {
        ref::kron(a, ar, ac, b, br, bc, out);
        return;
    }
    const std::size_t cols = ac * bc;
#pragma omp parallel for collapse(2) schedule(static)
    for (ssize i = 0; i < static_cast<ssize>(ar); ++i) {
        for (ssize p = 0; p < static_cast<ssize>(br); ++p) {
            for (std::size_t j = 0; j < ac; ++j)
                for (std::size_t q = 0; q < bc; ++q)
                    out[(i * br + p) * cols + (j * bc + q)] =
                        a[i * ac + j] * b[p * bc + q];
        }
    }
}

cplx dot_conj(const cplx* a, const cplx* b, std::size_t n) {
    if (n < 2 * chunk)
        return ref::dot_conj(a, b, n);
    const std::size_t nchunks = (n + chunk - 1) / chunk;
    std::vector<cplx> partial(nchunks, cplx{0.0, 0.0});
#pragma omp parallel for schedule(static)
    for (ssize ci = 0; ci < static_cast<ssize>(nchunks); ++ci) {
        const std::size_t lo = static_cast<std::size_t>(ci) * chunk;
        const std::size_t hi = lo + chunk < n ? lo + chunk : n;
        cplx acc{0.0, 0.0};
        for (std::size_t i = lo; i < hi; ++i)
            acc += a[i] * std::conj(b[i]);
        partial[ci] = acc;
    }
    cplx total{0.0, 0.0};
    for (const cplx& p : partial)
        total += p;
    return total;
}

void outer_accumulate(const cplx* xs, std::size_t count, std::size_t d, cplx* s) {
    if (count * d * d < par_threshold) {
        ref::outer_accumulate(xs, count, d, s);
        return;
    }
    // Parallel over output rows; each entry still accumulates in n order,
    // matching the reference path bit for bit.
#pragma omp parallel for schedule(static)
    for (ssize i = 0; i < static_cast<ssize>(d); ++i) {
        for (std::size_t nidx = 0; nidx < count; ++nidx) {
            const cplx* x = xs + nidx * d;
            const cplx xi = x[i];
            for (std::size_t j = 0; j < d; ++j)
                s[i * d + j] += xi * std::conj(x[j]);
        }
    }
}

void weighted_accumulate(const cplx* coeffs, const cplx* elems,
                         std::size_t count, std::size_t len, cplx* out) {
    if (count * len < par_threshold) {
        ref::weighted_accumulate(coeffs, elems, count, len, out);
        return;
    }
#pragma omp parallel for schedule(static)
    for (ssize i = 0; i < static_cast<ssize>(len); ++i) {
        cplx acc = out[i];
        for (std::size_t nidx = 0; nidx < count; ++nidx)
            acc += coeffs[nidx] * elems[nidx * len + i];
        out[i] = acc;
    }
}

} // namespace framekit::kernels
