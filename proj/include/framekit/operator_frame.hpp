#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "framekit/frame.hpp"
#include "framekit/hs.hpp"

namespace framekit {

// A finite sequence of tensor-product elements, all of one shape. Families
// built from two component frames carry (n, m) index labels so product
// structure survives further constructions.
class OperatorFrame {
public:
    explicit OperatorFrame(std::vector<HSElement> elements);
    OperatorFrame(std::vector<HSElement> elements,
                  std::vector<std::pair<std::size_t, std::size_t>> index_labels);

    std::size_t dim_h() const { return elements_.front().dim_h(); }
    std::size_t dim_k() const { return elements_.front().dim_k(); }
    std::size_t count() const { return elements_.size(); }
    const HSElement& operator[](std::size_t n) const { return elements_[n]; }
    const std::vector<HSElement>& elements() const { return elements_; }

    bool has_labels() const { return !index_labels_.empty(); }
    const std::vector<std::pair<std::size_t, std::size_t>>& index_labels() const {
        return index_labels_;
    }

private:
    std::vector<HSElement> elements_;
    std::vector<std::pair<std::size_t, std::size_t>> index_labels_;
};

// Kronecker products of the factors' elements over the full Cartesian index
// product, ordered lexicographically (leftmost factor outermost). Optimal
// bounds multiply across factors.
Frame tensor_frame(const std::vector<Frame>& factors);

// The family {x_n tensor y_m} in lexicographic (n, m) order, labels set.
OperatorFrame tensor_operator_frame(const Frame& f1, const Frame& f2);

// Row-major flattening turns tensor-product frame questions into plain
// frame questions; the flattening is an isometry.
Frame flatten(const OperatorFrame& of);
OperatorFrame unflatten(const Frame& f, std::size_t dim_h, std::size_t dim_k);

FrameBounds op_frame_bounds(const OperatorFrame& of);

// {T_n y0}: a frame for the range space with bounds inside
// [A ||y0||^2, B ||y0||^2]. Zero y0 is accepted and yields a non-frame.
Frame slice_left(const OperatorFrame& of, const CVector& y0);

// {T_n* x0}: same statement on the domain side.
Frame slice_right(const OperatorFrame& of, const CVector& x0);

// The pair family {(T_n y0) tensor (T_m* x0)} over all (n, m), labels set.
OperatorFrame sandwich_frame(const OperatorFrame& of, const CVector& y0, const CVector& x0);

// {Q T_n R} for invertible q and/or r; matrix form q * m_n * conj(r) since
// the right factor composes with an antilinear map. Either factor may be
// absent. Throws NotInvertibleError when a supplied factor is singular.
OperatorFrame transform(const OperatorFrame& of,
                        const std::optional<CMatrix>& q,
                        const std::optional<CMatrix>& r);

// {T_n*}: a frame for the swapped tensor product with identical bounds.
OperatorFrame adjoint_frame(const OperatorFrame& of);

// sum_n <t, T_n> T_n, the frame operator of the family acting on t.
HSElement op_frame_operator_apply(const OperatorFrame& of, const HSElement& t);

// For the product family of f1 and f2 the frame operator factors through
// the components: S1 * m * S2^T.
HSElement factored_frame_operator(const Frame& f1, const Frame& f2, const HSElement& t);

// Canonical dual computed through the flattened frame; labels carry over.
OperatorFrame op_canonical_dual(const OperatorFrame& of);

} // namespace framekit
