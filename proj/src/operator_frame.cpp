#include "framekit/operator_frame.hpp"

#include <string>
#include <utility>

#include "framekit/eig.hpp"
#include "framekit/kernels.hpp"
#include "framekit/tolerances.hpp"

namespace framekit {

namespace {

// Kronecker product of coordinate vectors, outer index on the left factor.
CVector kron_vec(const CVector& a, const CVector& b) {
    CVector out(a.dim() * b.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            out[i * b.dim() + j] = a[i] * b[j];
    return out;
}

Frame binary_tensor(const Frame& f1, const Frame& f2) {
    const std::size_t dim = f1.dim() * f2.dim();
    std::vector<CVector> elems;
    elems.reserve(f1.count() * f2.count());
    for (std::size_t n = 0; n < f1.count(); ++n)
        for (std::size_t m = 0; m < f2.count(); ++m)
            elems.push_back(kron_vec(f1[n], f2[m]));
    return Frame(dim, std::move(elems));
}

void check_cap(std::size_t have, std::size_t next, const char* who) {
    if (next == 0 || have > tol::size_cap / next)
        throw SizeCapError(std::string(who) + ": product size exceeds the cap of " +
                           std::to_string(tol::size_cap) + " entries");
}

std::vector<cplx> pack_elements(const OperatorFrame& of) {
    const std::size_t len = of.dim_h() * of.dim_k();
    std::vector<cplx> flat(of.count() * len);
    for (std::size_t n = 0; n < of.count(); ++n) {
        const CMatrix& m = of[n].matrix();
        std::copy(m.data(), m.data() + len, flat.begin() + n * len);
    }
    return flat;
}

void require_invertible(const CMatrix& a, std::size_t expected_dim, const char* side) {
    if (a.rows() != a.cols())
        throw ShapeError(std::string("transform: ") + side + " factor must be square");
    if (a.rows() != expected_dim)
        throw ShapeError(std::string("transform: ") + side + " factor has size " +
                         std::to_string(a.rows()) + ", expected " +
                         std::to_string(expected_dim));
    const double top = operator_norm_2(a);
    if (smallest_singular_value(a) <= tol::invert_eps * std::max(top, tol::abs_floor))
        throw NotInvertibleError(std::string("transform: ") + side +
                                 " factor is numerically singular");
}

} // namespace

OperatorFrame::OperatorFrame(std::vector<HSElement> elements)
    : elements_(std::move(elements)) {
    if (elements_.empty())
        throw ShapeError("OperatorFrame: element sequence is empty");
    for (std::size_t n = 1; n < elements_.size(); ++n)
        if (elements_[n].dim_h() != dim_h() || elements_[n].dim_k() != dim_k())
            throw ShapeError("OperatorFrame: element " + std::to_string(n) +
                             " has a different shape than element 0");
}

OperatorFrame::OperatorFrame(std::vector<HSElement> elements,
                             std::vector<std::pair<std::size_t, std::size_t>> index_labels)
    : OperatorFrame(std::move(elements)) {
    if (index_labels.size() != elements_.size())
        throw ShapeError("OperatorFrame: label count does not match element count");
    index_labels_ = std::move(index_labels);
}

Frame tensor_frame(const std::vector<Frame>& factors) {
    if (factors.empty())
        throw ShapeError("tensor_frame: need at least one factor");
    std::size_t dim = factors.front().dim();
    std::size_t count = factors.front().count();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        check_cap(dim, factors[i].dim(), "tensor_frame");
        check_cap(count, factors[i].count(), "tensor_frame");
        dim *= factors[i].dim();
        count *= factors[i].count();
    }
    Frame acc = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i)
        acc = binary_tensor(acc, factors[i]);
    return acc;
}

OperatorFrame tensor_operator_frame(const Frame& f1, const Frame& f2) {
    check_cap(f1.dim(), f2.dim(), "tensor_operator_frame");
    check_cap(f1.count(), f2.count(), "tensor_operator_frame");
    std::vector<HSElement> elems;
    std::vector<std::pair<std::size_t, std::size_t>> labels;
    elems.reserve(f1.count() * f2.count());
    labels.reserve(f1.count() * f2.count());
    for (std::size_t n = 0; n < f1.count(); ++n)
        for (std::size_t m = 0; m < f2.count(); ++m) {
            elems.push_back(simple_tensor(f1[n], f2[m]));
            labels.emplace_back(n, m);
        }
    return OperatorFrame(std::move(elems), std::move(labels));
}

Frame flatten(const OperatorFrame& of) {
    std::vector<CVector> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        elems.push_back(vec(of[n].matrix()));
    return Frame(of.dim_h() * of.dim_k(), std::move(elems));
}

OperatorFrame unflatten(const Frame& f, std::size_t dim_h, std::size_t dim_k) {
    if (f.dim() != dim_h * dim_k)
        throw ShapeError("unflatten: frame dimension " + std::to_string(f.dim()) +
                         " is not " + std::to_string(dim_h) + "*" + std::to_string(dim_k));
    std::vector<HSElement> elems;
    elems.reserve(f.count());
    for (std::size_t n = 0; n < f.count(); ++n)
        elems.push_back(HSElement(unvec(f[n], dim_h, dim_k)));
    return OperatorFrame(std::move(elems));
}

FrameBounds op_frame_bounds(const OperatorFrame& of) {
    return frame_bounds(flatten(of));
}

Frame slice_left(const OperatorFrame& of, const CVector& y0) {
    if (y0.dim() != of.dim_k())
        throw ShapeError("slice_left: vector dimension does not match the map domain");
    std::vector<CVector> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        elems.push_back(apply(of[n], y0));
    return Frame(of.dim_h(), std::move(elems));
}

Frame slice_right(const OperatorFrame& of, const CVector& x0) {
    if (x0.dim() != of.dim_h())
        throw ShapeError("slice_right: vector dimension does not match the map range");
    std::vector<CVector> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        elems.push_back(apply(adjoint(of[n]), x0));
    return Frame(of.dim_k(), std::move(elems));
}

OperatorFrame sandwich_frame(const OperatorFrame& of, const CVector& y0, const CVector& x0) {
    if (y0.dim() != of.dim_k())
        throw ShapeError("sandwich_frame: y0 dimension does not match the map domain");
    if (x0.dim() != of.dim_h())
        throw ShapeError("sandwich_frame: x0 dimension does not match the map range");
    check_cap(of.count(), of.count(), "sandwich_frame");
    std::vector<CVector> left, right;
    left.reserve(of.count());
    right.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n) {
        left.push_back(apply(of[n], y0));
        right.push_back(apply(adjoint(of[n]), x0));
    }
    std::vector<HSElement> elems;
    std::vector<std::pair<std::size_t, std::size_t>> labels;
    elems.reserve(of.count() * of.count());
    labels.reserve(of.count() * of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        for (std::size_t m = 0; m < of.count(); ++m) {
            elems.push_back(simple_tensor(left[n], right[m]));
            labels.emplace_back(n, m);
        }
    return OperatorFrame(std::move(elems), std::move(labels));
}

OperatorFrame transform(const OperatorFrame& of,
                        const std::optional<CMatrix>& q,
                        const std::optional<CMatrix>& r) {
    if (q)
        require_invertible(*q, of.dim_h(), "left");
    std::optional<CMatrix> rc;
    if (r) {
        require_invertible(*r, of.dim_k(), "right");
        rc = conjugate(*r);
    }
    std::vector<HSElement> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n) {
        CMatrix m = of[n].matrix();
        if (q)
            m = (*q) * m;
        if (rc)
            m = m * (*rc);
        elems.push_back(HSElement(std::move(m)));
    }
    if (of.has_labels())
        return OperatorFrame(std::move(elems), of.index_labels());
    return OperatorFrame(std::move(elems));
}

OperatorFrame adjoint_frame(const OperatorFrame& of) {
    std::vector<HSElement> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        elems.push_back(adjoint(of[n]));
    if (of.has_labels()) {
        std::vector<std::pair<std::size_t, std::size_t>> swapped;
        swapped.reserve(of.count());
        for (const auto& [n, m] : of.index_labels())
            swapped.emplace_back(m, n);
        return OperatorFrame(std::move(elems), std::move(swapped));
    }
    return OperatorFrame(std::move(elems));
}

HSElement op_frame_operator_apply(const OperatorFrame& of, const HSElement& t) {
    if (t.dim_h() != of.dim_h() || t.dim_k() != of.dim_k())
        throw ShapeError("op_frame_operator_apply: element shape does not match the family");
    const std::size_t len = of.dim_h() * of.dim_k();
    const std::vector<cplx> flat = pack_elements(of);
    std::vector<cplx> coeffs(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        coeffs[n] = kernels::dot_conj(t.matrix().data(), flat.data() + n * len, len);
    CMatrix out(of.dim_h(), of.dim_k());
    kernels::weighted_accumulate(coeffs.data(), flat.data(), of.count(), len, out.data());
    return HSElement(std::move(out));
}

HSElement factored_frame_operator(const Frame& f1, const Frame& f2, const HSElement& t) {
    if (f1.dim() != t.dim_h() || f2.dim() != t.dim_k())
        throw ShapeError("factored_frame_operator: component dimensions do not match the element");
    const CMatrix s1 = frame_operator(f1);
    const CMatrix s2 = frame_operator(f2);
    return HSElement(s1 * t.matrix() * transpose(s2));
}

OperatorFrame op_canonical_dual(const OperatorFrame& of) {
    const Frame dual = canonical_dual(flatten(of));
    std::vector<HSElement> elems;
    elems.reserve(of.count());
    for (std::size_t n = 0; n < of.count(); ++n)
        elems.push_back(HSElement(unvec(dual[n], of.dim_h(), of.dim_k())));
    if (of.has_labels())
        return OperatorFrame(std::move(elems), of.index_labels());
    return OperatorFrame(std::move(elems));
}

} // namespace framekit
