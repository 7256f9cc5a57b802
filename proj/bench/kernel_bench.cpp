#include <chrono>
#include <cmath>
#include <cstdio>
#include <vector>

#include "framekit/kernels.hpp"
#include "framekit/rng.hpp"

namespace {

using framekit::cplx;
namespace k = framekit::kernels;

std::vector<cplx> random_buffer(std::size_t n, framekit::Rng& rng) {
    std::vector<cplx> b(n);
    for (auto& z : b)
        z = rng.cgaussian();
    return b;
}

template <typename Fn>
double best_of(int reps, Fn&& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

double max_abs_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i)
        worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

void report(const char* name, double t_ref, double t_par, double diff) {
    std::printf("%-20s %10.4f ms %10.4f ms %8.2fx   max|diff| %.3e\n", name,
                t_ref * 1e3, t_par * 1e3, t_ref / t_par, diff);
}

} // namespace

int main() {
    framekit::Rng rng(7);
    const int reps = 5;
    std::printf("%-20s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    {
        const std::size_t m = 192, kk = 192, n = 192;
        const auto a = random_buffer(m * kk, rng);
        const auto b = random_buffer(kk * n, rng);
        std::vector<cplx> c1(m * n), c2(m * n);
        const double tr = best_of(reps, [&] { k::ref::matmul(a.data(), b.data(), c1.data(), m, kk, n); });
        const double tp = best_of(reps, [&] { k::matmul(a.data(), b.data(), c2.data(), m, kk, n); });
        report("matmul 192^3", tr, tp, max_abs_diff(c1, c2));
    }
    {
        const std::size_t ar = 64, ac = 64, br = 16, bc = 16;
        const auto a = random_buffer(ar * ac, rng);
        const auto b = random_buffer(br * bc, rng);
        std::vector<cplx> c1(ar * br * ac * bc), c2(c1.size());
        const double tr = best_of(reps, [&] { k::ref::kron(a.data(), ar, ac, b.data(), br, bc, c1.data()); });
        const double tp = best_of(reps, [&] { k::kron(a.data(), ar, ac, b.data(), br, bc, c2.data()); });
        report("kron 64x64 x 16x16", tr, tp, max_abs_diff(c1, c2));
    }
    {
        const std::size_t n = 1u << 21;
        const auto a = random_buffer(n, rng);
        const auto b = random_buffer(n, rng);
        cplx r1, r2;
        const double tr = best_of(reps, [&] { r1 = k::ref::dot_conj(a.data(), b.data(), n); });
        const double tp = best_of(reps, [&] { r2 = k::dot_conj(a.data(), b.data(), n); });
        report("dot_conj 2^21", tr, tp, std::abs(r1 - r2) / std::abs(r1));
    }
    {
        const std::size_t count = 512, d = 192;
        const auto xs = random_buffer(count * d, rng);
        std::vector<cplx> s1(d * d), s2(d * d);
        const double tr = best_of(reps, [&] {
            std::fill(s1.begin(), s1.end(), cplx{});
            k::ref::outer_accumulate(xs.data(), count, d, s1.data());
        });
        const double tp = best_of(reps, [&] {
            std::fill(s2.begin(), s2.end(), cplx{});
            k::outer_accumulate(xs.data(), count, d, s2.data());
        });
        report("outer_acc 512x192", tr, tp, max_abs_diff(s1, s2));
    }
    {
        const std::size_t count = 512, len = 1u << 14;
        const auto elems = random_buffer(count * len, rng);
        const auto coeffs = random_buffer(count, rng);
        std::vector<cplx> o1(len), o2(len);
        const double tr = best_of(reps, [&] {
            k::ref::weighted_accumulate(coeffs.data(), elems.data(), count, len, o1.data());
        });
        const double tp = best_of(reps, [&] {
            k::weighted_accumulate(coeffs.data(), elems.data(), count, len, o2.data());
        });
        report("weighted 512x16384", tr, tp, max_abs_diff(o1, o2));
    }
    return 0;
}
