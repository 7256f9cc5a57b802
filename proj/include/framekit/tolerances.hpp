#pragma once

#include <cstddef>

namespace framekit::tol {

// All tolerances are relative to the Frobenius norm of the operand unless
// noted; abs_floor guards the near-zero case.
inline constexpr double abs_floor = 1e-14;

// Eigensolver: reconstruction residual target and Jacobi stopping criterion.
inline constexpr double eig = 1e-10;
inline constexpr double jacobi_off = 1e-14;
inline constexpr int jacobi_max_sweeps = 60;

// Hermitian asymmetry allowed before symmetrization refuses the input.
inline constexpr double herm = 1e-12;

// Cholesky pivot threshold (relative to ||a||_F).
inline constexpr double hpd_pivot = 1e-13;

// Orthonormality target for Gram-Schmidt output and rank-collapse cutoff.
inline constexpr double ortho = 1e-12;
inline constexpr double rank_collapse = 1e-12;

// Frame classification: is_frame iff lower > frame_eps * upper,
// is_tight iff (upper - lower) <= tight_eps * upper,
// is_normalized_tight additionally requires |upper - 1| <= tight_eps.
inline constexpr double frame_eps = 1e-10;
inline constexpr double tight_eps = 1e-10;

// Invertibility cutoff for operator transforms: sigma_min > invert_eps * sigma_max.
inline constexpr double invert_eps = 1e-12;

// Default cap on the entry count of Kronecker/tensor results.
inline constexpr std::size_t size_cap = std::size_t{1} << 20;

} // namespace framekit::tol
