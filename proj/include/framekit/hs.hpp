#pragma once

#include "framekit/frame.hpp"
#include "framekit/matrix.hpp"

namespace framekit {

// An element of the tensor product of C^dim_h and C^dim_k, modeled as the
// antilinear map y -> m * conj(y). Under this encoding a simple tensor is a
// plain outer product, the adjoint is the plain transpose, and the
// Hilbert-Schmidt inner product is the Frobenius form.
class HSElement {
public:
    explicit HSElement(CMatrix m);

    std::size_t dim_h() const { return m_.rows(); }
    std::size_t dim_k() const { return m_.cols(); }
    const CMatrix& matrix() const { return m_; }

    bool operator==(const HSElement& other) const { return m_ == other.m_; }

private:
    CMatrix m_;
};

// (x tensor y)(y') = <y, y'> x; matrix form x * y^T, no conjugation.
HSElement simple_tensor(const CVector& x, const CVector& y);

// Evaluates the map: m * conj(y). Antilinear in y.
CVector apply(const HSElement& t, const CVector& y);

// The map T* with <T* x, y> = <T y, x>; matrix form is the plain transpose.
HSElement adjoint(const HSElement& t);

cplx hs_inner(const HSElement& q, const HSElement& t);
double hs_norm(const HSElement& t);

// Two independent reconstructions of the same element.
struct HSExpansion {
    HSElement over_range;    // sum_i e_i tensor T* e_i
    HSElement over_domain;   // sum_j (T u_j) tensor u_j
};

// Expands t against the standard bases of both spaces.
HSExpansion expand_basis(const HSElement& t);

// Expands t against normalized tight frames fh (range space) and fk (domain
// space); throws NotNormalizedTightError when either frame fails the check.
HSExpansion expand_tight(const HSElement& t, const Frame& fh, const Frame& fk);

// sum_m <Q y_m, T y_m> over a normalized tight frame of the domain space;
// equals hs_inner(q, t) for any such frame.
cplx tight_inner(const HSElement& q, const HSElement& t, const Frame& fk);

// sum_m ||T y_m||^2; frame-independent across normalized tight frames and
// equal to hs_norm(t)^2.
double tight_energy(const HSElement& t, const Frame& fk);

} // namespace framekit
