#include "framekit/frame.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "framekit/eig.hpp"
#include "framekit/kernels.hpp"
#include "framekit/rng.hpp"
#include "framekit/tolerances.hpp"

namespace framekit {

namespace {

// Frame elements packed row-wise into one contiguous buffer for the kernels.
std::vector<cplx> pack(const Frame& f) {
    std::vector<cplx> flat(f.count() * f.dim());
    for (std::size_t n = 0; n < f.count(); ++n)
        std::copy(f[n].begin(), f[n].end(), flat.begin() + n * f.dim());
    return flat;
}

} // namespace

Frame::Frame(std::size_t dim, std::vector<CVector> elements)
    : dim_(dim), elements_(std::move(elements)) {
    if (dim_ == 0)
        throw ShapeError("Frame: dimension must be positive");
    if (elements_.empty())
        throw ShapeError("Frame: element sequence is empty");
    for (std::size_t n = 0; n < elements_.size(); ++n) {
        if (elements_[n].dim() != dim_)
            throw ShapeError("Frame: element " + std::to_string(n) + " has dimension " +
                             std::to_string(elements_[n].dim()) + ", expected " +
                             std::to_string(dim_));
        if (!elements_[n].is_finite())
            throw Error("Frame: element " + std::to_string(n) + " has a non-finite entry");
    }
}

CMatrix frame_operator(const Frame& f) {
    const std::vector<cplx> flat = pack(f);
    CMatrix s(f.dim(), f.dim());
    kernels::outer_accumulate(flat.data(), f.count(), f.dim(), s.data());
    return s;
}

FrameBounds frame_bounds(const Frame& f) {
    const HermitianEig eig = hermitian_eig(frame_operator(f));
    FrameBounds b;
    b.lower = eig.eigenvalues.front();
    b.upper = eig.eigenvalues.back();
    const double scale = std::max(b.upper, tol::abs_floor);
    b.is_frame = b.lower > tol::frame_eps * scale;
    b.is_tight = b.is_frame && (b.upper - b.lower) <= tol::tight_eps * scale;
    b.is_normalized_tight = b.is_tight &&
                            std::abs(b.lower - 1.0) <= tol::tight_eps &&
                            std::abs(b.upper - 1.0) <= tol::tight_eps;
    return b;
}

CVector analysis(const Frame& f, const CVector& x) {
    if (x.dim() != f.dim())
        throw ShapeError("analysis: vector dimension does not match the frame");
    CVector c(f.count());
    for (std::size_t n = 0; n < f.count(); ++n)
        c[n] = kernels::dot_conj(x.data(), f[n].data(), f.dim());
    return c;
}

CVector synthesis(const Frame& f, const CVector& coeffs) {
    if (coeffs.dim() != f.count())
        throw ShapeError("synthesis: coefficient count does not match the frame");
    const std::vector<cplx> flat = pack(f);
    CVector out(f.dim());
    kernels::weighted_accumulate(coeffs.data(), flat.data(), f.count(), f.dim(), out.data());
    return out;
}

Frame canonical_dual(const Frame& f) {
    const CMatrix s = frame_operator(f);
    const FrameBounds b = frame_bounds(f);
    if (!b.is_frame)
        throw NotAFrameError("canonical_dual: lower frame bound " + std::to_string(b.lower) +
                             " is numerically zero");
    CMatrix rhs(f.dim(), f.count());
    for (std::size_t n = 0; n < f.count(); ++n)
        for (std::size_t i = 0; i < f.dim(); ++i)
            rhs(i, n) = f[n][i];
    const CMatrix solved = hpd_solve(s, rhs);
    std::vector<CVector> dual;
    dual.reserve(f.count());
    for (std::size_t n = 0; n < f.count(); ++n)
        dual.push_back(solved.col(n));
    return Frame(f.dim(), std::move(dual));
}

Reconstruction reconstruct(const Frame& f, const CVector& x) {
    const Frame dual = canonical_dual(f);
    Reconstruction r;
    r.via_dual_coefficients = synthesis(f, analysis(dual, x));
    r.via_dual_elements = synthesis(dual, analysis(f, x));
    const double scale = std::max(x.norm(), tol::abs_floor);
    r.residual = std::max((r.via_dual_coefficients - x).norm(),
                          (r.via_dual_elements - x).norm()) /
                 scale;
    return r;
}

Frame scale_frame(const Frame& f, cplx scalar) {
    if (scalar == cplx{0.0, 0.0})
        throw ZeroScalarError("scale_frame: scalar must be nonzero");
    std::vector<CVector> scaled;
    scaled.reserve(f.count());
    for (std::size_t n = 0; n < f.count(); ++n)
        scaled.push_back(scalar * f[n]);
    return Frame(f.dim(), std::move(scaled));
}

Frame random_frame(std::size_t dim, std::size_t count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<CVector> elems;
    elems.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        elems.push_back(rng.gaussian_vector(dim));
    return Frame(dim, std::move(elems));
}

Frame random_tight_frame(std::size_t dim, std::size_t count, std::uint64_t seed) {
    if (count < dim)
        throw ShapeError("random_tight_frame: need count >= dim to span the space");
    Rng rng(seed);
    // Rows of a count x dim matrix with orthonormal columns: the frame
    // operator of the rows is Q^T conj(Q) = conj(Q^H Q) = I.
    const CMatrix q = orthonormal_columns(random_gaussian_matrix(count, dim, rng));
    std::vector<CVector> elems;
    elems.reserve(count);
    for (std::size_t n = 0; n < count; ++n)
        elems.push_back(q.row(n));
    return Frame(dim, std::move(elems));
}

} // namespace framekit
