#include "framekit/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "framekit/tolerances.hpp"

namespace framekit {

double Rng::uniform() {
    // 53 random bits mapped to (0, 1]; never returns 0, so log() is safe.
    return static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;
}

double Rng::uniform(double lo, double hi) {
    return lo + (hi - lo) * (uniform() - 0x1.0p-53);
}

double Rng::gaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
}

cplx Rng::cgaussian() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * std::numbers::pi * u2;
    return cplx{r * std::cos(phi), r * std::sin(phi)};
}

CVector Rng::gaussian_vector(std::size_t dim) {
    CVector v(dim);
    for (std::size_t i = 0; i < dim; ++i)
        v[i] = cgaussian();
    return v;
}

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed) {
    Rng rng(seed);
    return random_gaussian_matrix(rows, cols, rng);
}

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    CMatrix m(rows, cols);
    for (std::size_t i = 0; i < m.size(); ++i)
        m.data()[i] = rng.cgaussian();
    return m;
}

CMatrix orthonormal_columns(const CMatrix& a) {
    if (a.rows() < a.cols())
        throw ShapeError("orthonormal_columns: need rows >= cols, got " +
                         std::to_string(a.rows()) + "x" + std::to_string(a.cols()));
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    CMatrix q = a;

    auto col_inner = [&](std::size_t j1, std::size_t j2) {
        cplx acc{0.0, 0.0};
        for (std::size_t i = 0; i < m; ++i)
            acc += q(i, j2) * std::conj(q(i, j1));
        return acc;
    };

    for (std::size_t j = 0; j < n; ++j) {
        // Two MGS projection passes against the finished columns.
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t k = 0; k < j; ++k) {
                const cplx proj = col_inner(k, j);
                for (std::size_t i = 0; i < m; ++i)
                    q(i, j) -= proj * q(i, k);
            }
        }
        const double nrm = std::sqrt(col_inner(j, j).real());
        if (nrm < tol::rank_collapse)
            throw RankDeficientError("orthonormal_columns: column " + std::to_string(j) +
                                     " collapsed during orthogonalization");
        for (std::size_t i = 0; i < m; ++i)
            q(i, j) /= nrm;
    }
    return q;
}

} // namespace framekit
