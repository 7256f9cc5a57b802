#pragma once

#include <cstdint>
#include <vector>

#include "framekit/matrix.hpp"

namespace framekit {

// A finite sequence of vectors in C^dim, candidates for a frame.
class Frame {
public:
    Frame(std::size_t dim, std::vector<CVector> elements);

    std::size_t dim() const { return dim_; }
    std::size_t count() const { return elements_.size(); }
    const CVector& operator[](std::size_t n) const { return elements_[n]; }
    const std::vector<CVector>& elements() const { return elements_; }

private:
    std::size_t dim_;
    std::vector<CVector> elements_;
};

struct FrameBounds {
    double lower = 0.0;             // optimal lower bound (smallest eigenvalue of S)
    double upper = 0.0;             // optimal upper bound (largest eigenvalue of S)
    bool is_frame = false;          // lower bound bounded away from zero
    bool is_tight = false;          // lower == upper within tolerance
    bool is_normalized_tight = false;
};

struct Reconstruction {
    CVector via_dual_coefficients;    // sum <x, S^-1 x_n> x_n
    CVector via_dual_elements;        // sum <x, x_n> S^-1 x_n
    double residual = 0.0;            // max relative error of the two sums
};

// S = sum_n x_n x_n^H, the positive operator whose spectrum carries the bounds.
CMatrix frame_operator(const Frame& f);

FrameBounds frame_bounds(const Frame& f);

// Coefficient map x -> (<x, x_n>)_n.
CVector analysis(const Frame& f, const CVector& x);

// Adjoint of analysis: coefficients -> sum_n c_n x_n.
CVector synthesis(const Frame& f, const CVector& coeffs);

// {S^-1 x_n}; throws NotAFrameError when the operator is singular.
Frame canonical_dual(const Frame& f);

// Recovers x through both dual expansions and reports how far they land from x.
Reconstruction reconstruct(const Frame& f, const CVector& x);

// {scalar * x_n}; throws ZeroScalarError for scalar == 0.
Frame scale_frame(const Frame& f, cplx scalar);

// Gaussian vectors; a frame with probability one when count >= dim.
Frame random_frame(std::size_t dim, std::size_t count, std::uint64_t seed);

// count >= dim vectors whose frame operator is exactly the identity.
Frame random_tight_frame(std::size_t dim, std::size_t count, std::uint64_t seed);

} // namespace framekit
