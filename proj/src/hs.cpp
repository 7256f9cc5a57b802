#include "framekit/hs.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "framekit/errors.hpp"
#include "framekit/kernels.hpp"

namespace framekit {

namespace {

void check_shapes(const HSElement& q, const HSElement& t, const char* who) {
    if (q.dim_h() != t.dim_h() || q.dim_k() != t.dim_k())
        throw ShapeError(std::string(who) + ": shapes " + std::to_string(q.dim_h()) + "x" +
                         std::to_string(q.dim_k()) + " and " + std::to_string(t.dim_h()) +
                         "x" + std::to_string(t.dim_k()) + " do not match");
}

void require_normalized_tight(const Frame& f, const char* who) {
    if (!frame_bounds(f).is_normalized_tight)
        throw NotNormalizedTightError(std::string(who) +
                                      ": frame is not normalized tight");
}

} // namespace

HSElement::HSElement(CMatrix m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.cols() == 0)
        throw ShapeError("HSElement: both dimensions must be positive");
    if (!m_.is_finite())
        throw Error("HSElement: matrix has a non-finite entry");
}

HSElement simple_tensor(const CVector& x, const CVector& y) {
    return HSElement(outer(x, y));
}

CVector apply(const HSElement& t, const CVector& y) {
    if (y.dim() != t.dim_k())
        throw ShapeError("apply: vector dimension " + std::to_string(y.dim()) +
                         " does not match map domain " + std::to_string(t.dim_k()));
    CVector yc(y.dim());
    for (std::size_t j = 0; j < y.dim(); ++j)
        yc[j] = std::conj(y[j]);
    CVector out(t.dim_h());
    kernels::matvec(t.matrix().data(), yc.data(), out.data(), t.dim_h(), t.dim_k());
    return out;
}

HSElement adjoint(const HSElement& t) {
    return HSElement(transpose(t.matrix()));
}

cplx hs_inner(const HSElement& q, const HSElement& t) {
    check_shapes(q, t, "hs_inner");
    return frobenius_inner(q.matrix(), t.matrix());
}

double hs_norm(const HSElement& t) {
    return frobenius_norm(t.matrix());
}

HSExpansion expand_basis(const HSElement& t) {
    const std::size_t dh = t.dim_h();
    const std::size_t dk = t.dim_k();
    const HSElement ts = adjoint(t);

    CMatrix range_sum(dh, dk);
    for (std::size_t i = 0; i < dh; ++i) {
        const CVector ei = CVector::unit(dh, i);
        range_sum = range_sum + outer(ei, apply(ts, ei));
    }
    CMatrix domain_sum(dh, dk);
    for (std::size_t j = 0; j < dk; ++j) {
        const CVector uj = CVector::unit(dk, j);
        domain_sum = domain_sum + outer(apply(t, uj), uj);
    }
    return HSExpansion{HSElement(std::move(range_sum)), HSElement(std::move(domain_sum))};
}

HSExpansion expand_tight(const HSElement& t, const Frame& fh, const Frame& fk) {
    if (fh.dim() != t.dim_h())
        throw ShapeError("expand_tight: range frame dimension does not match the element");
    if (fk.dim() != t.dim_k())
        throw ShapeError("expand_tight: domain frame dimension does not match the element");
    require_normalized_tight(fh, "expand_tight");
    require_normalized_tight(fk, "expand_tight");

    const HSElement ts = adjoint(t);
    CMatrix range_sum(t.dim_h(), t.dim_k());
    for (std::size_t n = 0; n < fh.count(); ++n)
        range_sum = range_sum + outer(fh[n], apply(ts, fh[n]));
    CMatrix domain_sum(t.dim_h(), t.dim_k());
    for (std::size_t m = 0; m < fk.count(); ++m)
        domain_sum = domain_sum + outer(apply(t, fk[m]), fk[m]);
    return HSExpansion{HSElement(std::move(range_sum)), HSElement(std::move(domain_sum))};
}

cplx tight_inner(const HSElement& q, const HSElement& t, const Frame& fk) {
    check_shapes(q, t, "tight_inner");
    if (fk.dim() != t.dim_k())
        throw ShapeError("tight_inner: frame dimension does not match the map domain");
    require_normalized_tight(fk, "tight_inner");
    cplx acc{0.0, 0.0};
    for (std::size_t m = 0; m < fk.count(); ++m)
        acc += inner(apply(q, fk[m]), apply(t, fk[m]));
    return acc;
}

double tight_energy(const HSElement& t, const Frame& fk) {
    if (fk.dim() != t.dim_k())
        throw ShapeError("tight_energy: frame dimension does not match the map domain");
    require_normalized_tight(fk, "tight_energy");
    double acc = 0.0;
    for (std::size_t m = 0; m < fk.count(); ++m) {
        const double nrm = apply(t, fk[m]).norm();
        acc += nrm * nrm;
    }
    return acc;
}

} // namespace framekit
