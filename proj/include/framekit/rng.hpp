#pragma once

#include <cstdint>
#include <random>

#include "framekit/matrix.hpp"

namespace framekit {

/// Seeded generator with pinned Gaussian sampling (Box-Muller over raw
/// mt19937_64 bits), so a fixed seed reproduces the same stream on every
/// run. Passed explicitly; there is no ambient generator state.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in (0, 1].
    double uniform();
    /// Uniform in [lo, hi).
    double uniform(double lo, double hi);
    /// Standard normal.
    double gaussian();
    /// Real and imaginary parts independent standard normals.
    cplx cgaussian();

    CVector gaussian_vector(std::size_t dim);

private:
    std::mt19937_64 gen_;
};

CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, std::uint64_t seed);
CMatrix random_gaussian_matrix(std::size_t rows, std::size_t cols, Rng& rng);

/// Orthonormalize the columns of a (modified Gram-Schmidt with one
/// reorthogonalization pass). Requires rows >= cols; throws
/// RankDeficientError when a column collapses below 1e-12.
CMatrix orthonormal_columns(const CMatrix& a);

} // namespace framekit
