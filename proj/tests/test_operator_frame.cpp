#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "framekit/eig.hpp"
#include "framekit/operator_frame.hpp"
#include "framekit/rng.hpp"

using namespace framekit;

namespace {

const cplx I{0.0, 1.0};

Frame onb(std::size_t d) {
    std::vector<CVector> es;
    for (std::size_t k = 0; k < d; ++k)
        es.push_back(CVector::unit(d, k));
    return Frame(d, std::move(es));
}

Frame doubled_e2() {
    return Frame(2, {CVector::unit(2, 0), CVector::unit(2, 1), CVector::unit(2, 1)});
}

Frame mercedes() {
    const double s = std::sqrt(3.0) / 2.0;
    return Frame(2, {CVector{cplx{1, 0}, cplx{0, 0}},
                     CVector{cplx{-0.5, 0}, cplx{s, 0}},
                     CVector{cplx{-0.5, 0}, cplx{-s, 0}}});
}

// all four rank-one matrix units of the 2x2 space, an orthonormal basis
OperatorFrame matrix_units() {
    return tensor_operator_frame(onb(2), onb(2));
}

HSElement random_element(std::size_t dh, std::size_t dk, Rng& rng) {
    CMatrix m(dh, dk);
    for (std::size_t i = 0; i < dh; ++i)
        for (std::size_t j = 0; j < dk; ++j)
            m(i, j) = rng.cgaussian();
    return HSElement(std::move(m));
}

double dist(const HSElement& a, const HSElement& b) {
    return frobenius_norm(a.matrix() - b.matrix());
}

} // namespace

TEST_CASE("tensor_frame forms Kronecker products in lexicographic order") {
    const Frame f = doubled_e2();
    const Frame t = tensor_frame({f, f});
    REQUIRE(t.dim() == 4);
    REQUIRE(t.count() == 9);
    // element (n, m) is kron(x_n, x_m); spot-check (0, 1) = e1 kron e2 = u_1
    CHECK((t[1] - CVector::unit(4, 1)).norm() == 0.0);
    CHECK((t[3] - CVector::unit(4, 2)).norm() == 0.0); // (1, 0) -> e2 kron e1
    const FrameBounds b = frame_bounds(t);
    CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(b.upper == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("tensor_frame bounds multiply across factors") {
    SUBCASE("orthonormal bases stay normalized tight") {
        const Frame t = tensor_frame({onb(2), onb(3)});
        CHECK(frame_bounds(t).is_normalized_tight);
    }
    SUBCASE("tight times tight is tight with the product constant") {
        const Frame t = tensor_frame({mercedes(), mercedes()});
        const FrameBounds b = frame_bounds(t);
        CHECK(b.lower == doctest::Approx(2.25).epsilon(1e-12));
        CHECK(b.upper == doctest::Approx(2.25).epsilon(1e-12));
        CHECK(b.is_tight);
    }
    SUBCASE("three factors") {
        const Frame t = tensor_frame({doubled_e2(), onb(2), mercedes()});
        const FrameBounds b = frame_bounds(t);
        CHECK(b.lower == doctest::Approx(1.5).epsilon(1e-10));
        CHECK(b.upper == doctest::Approx(3.0).epsilon(1e-10));
    }
    SUBCASE("a single factor passes through unchanged") {
        const Frame t = tensor_frame({mercedes()});
        for (std::size_t n = 0; n < 3; ++n)
            CHECK((t[n] - mercedes()[n]).norm() == 0.0);
    }
    SUBCASE("empty factor list is rejected") {
        CHECK_THROWS_AS(tensor_frame({}), ShapeError);
    }
}

TEST_CASE("tensor_frame enforces the size cap") {
    std::vector<CVector> one{CVector::unit(128, 0)};
    const Frame big(128, one);
    CHECK_THROWS_AS(tensor_frame({big, big, big}), SizeCapError);
}

TEST_CASE("tensor_operator_frame builds labeled simple tensors") {
    const OperatorFrame of = tensor_operator_frame(doubled_e2(), onb(2));
    REQUIRE(of.count() == 6);
    REQUIRE(of.has_labels());
    CHECK(of.index_labels()[5] == std::pair<std::size_t, std::size_t>{2, 1});
    // element (n, m) has matrix x_n y_m^T
    CHECK(dist(of[3], simple_tensor(CVector::unit(2, 1), CVector::unit(2, 1))) == 0.0);

    // flattening matches the kronecker tensor frame exactly
    const Frame flat = flatten(of);
    const Frame kron_version = tensor_frame({doubled_e2(), onb(2)});
    REQUIRE(flat.count() == kron_version.count());
    for (std::size_t n = 0; n < flat.count(); ++n)
        CHECK((flat[n] - kron_version[n]).norm() == 0.0);

    // unflatten inverts flatten
    const OperatorFrame back = unflatten(flat, 2, 2);
    for (std::size_t n = 0; n < of.count(); ++n)
        CHECK(dist(back[n], of[n]) == 0.0);
}

TEST_CASE("operator frame bounds") {
    SUBCASE("matrix units form a normalized tight family") {
        const FrameBounds b = op_frame_bounds(matrix_units());
        CHECK(b.is_normalized_tight);
    }
    SUBCASE("bounds are the products of the component bounds") {
        const OperatorFrame of = tensor_operator_frame(doubled_e2(), mercedes());
        const FrameBounds b = op_frame_bounds(of);
        CHECK(b.lower == doctest::Approx(1.5).epsilon(1e-10));
        CHECK(b.upper == doctest::Approx(3.0).epsilon(1e-10));
    }
    SUBCASE("a single zero element is not a frame") {
        const OperatorFrame of({HSElement(CMatrix(2, 2))});
        const FrameBounds b = op_frame_bounds(of);
        CHECK_FALSE(b.is_frame);
        CHECK(b.upper == doctest::Approx(0.0));
    }
}

TEST_CASE("slices through a fixed vector") {
    const OperatorFrame units = matrix_units();
    SUBCASE("unit-norm slice of a normalized tight family is normalized tight") {
        const double r = 1.0 / std::sqrt(2.0);
        const CVector y0{cplx{r, 0}, cplx{r, 0}};
        const FrameBounds b = frame_bounds(slice_left(units, y0));
        CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-10));
    }
    SUBCASE("slicing matrix units at a basis vector keeps half the family") {
        const Frame s = slice_left(units, CVector::unit(2, 0));
        REQUIRE(s.count() == 4);
        // (e_i tensor e_j)(e1) = <e_j, e1> e_i
        CHECK((s[0] - CVector::unit(2, 0)).norm() == 0.0);
        CHECK(s[1].norm() == 0.0);
        CHECK((s[2] - CVector::unit(2, 1)).norm() == 0.0);
        CHECK(s[3].norm() == 0.0);
        CHECK(frame_bounds(s).is_normalized_tight);
    }
    SUBCASE("right slice mirrors the statement through adjoints") {
        Rng rng(61);
        const OperatorFrame of = tensor_operator_frame(mercedes(), doubled_e2());
        const CVector x0 = rng.gaussian_vector(2);
        const Frame s = slice_right(of, x0);
        REQUIRE(s.dim() == 2); // lands in the domain space
        const FrameBounds ofb = op_frame_bounds(of);
        const FrameBounds sb = frame_bounds(s);
        const double w = x0.norm() * x0.norm();
        CHECK(sb.lower >= ofb.lower * w - 1e-10);
        CHECK(sb.upper <= ofb.upper * w + 1e-10);
    }
    SUBCASE("zero vector yields a non-frame") {
        CHECK_FALSE(frame_bounds(slice_left(units, CVector(2))).is_frame);
        CHECK_FALSE(frame_bounds(slice_right(units, CVector(2))).is_frame);
    }
}

TEST_CASE("sandwich pairs left and right slices") {
    const OperatorFrame units = matrix_units();
    const OperatorFrame sw = sandwich_frame(units, CVector::unit(2, 0), CVector::unit(2, 0));
    REQUIRE(sw.count() == 16);
    REQUIRE(sw.has_labels());
    // element (n, m) is (T_n e1) tensor (T_m* e1)
    const Frame left = slice_left(units, CVector::unit(2, 0));
    const Frame right = slice_right(units, CVector::unit(2, 0));
    for (std::size_t n = 0; n < 4; ++n)
        for (std::size_t m = 0; m < 4; ++m)
            CHECK(dist(sw[n * 4 + m], simple_tensor(left[n], right[m])) == 0.0);

    SUBCASE("each pair element is the composition T_n (y0 tensor x0) T_m") {
        // composing the three antilinear maps turns the middle T_m into its
        // adjoint, which is exactly what the pair family encodes
        Rng rng(62);
        const CVector y0 = rng.gaussian_vector(2);
        const CVector x0 = rng.gaussian_vector(2);
        const OperatorFrame sw2 = sandwich_frame(units, y0, x0);
        const HSElement bridge = simple_tensor(y0, x0);
        for (std::size_t n = 0; n < 4; ++n)
            for (std::size_t m = 0; m < 4; ++m) {
                const HSElement& e = sw2[n * 4 + m];
                for (std::size_t j = 0; j < 2; ++j) {
                    const CVector ej = CVector::unit(2, j);
                    const CVector direct = apply(units[n], apply(bridge, apply(units[m], ej)));
                    CHECK((apply(e, ej) - direct).norm() < 1e-12);
                }
            }
    }

    SUBCASE("tight input gives tight sandwich with squared weight") {
        const FrameBounds b = op_frame_bounds(sw);
        CHECK(b.lower == doctest::Approx(1.0).epsilon(1e-10));
        CHECK(b.upper == doctest::Approx(1.0).epsilon(1e-10));
    }

    SUBCASE("zero anchors give a non-frame") {
        CHECK_FALSE(op_frame_bounds(sandwich_frame(units, CVector(2), CVector::unit(2, 0)))
                        .is_frame);
    }
}

TEST_CASE("transform composes invertible operators around each element") {
    const OperatorFrame units = matrix_units();
    SUBCASE("scaling by 2 scales bounds by 4") {
        const CMatrix q = 2.0 * CMatrix::identity(2);
        const FrameBounds b = op_frame_bounds(transform(units, q, std::nullopt));
        CHECK(b.lower == doctest::Approx(4.0).epsilon(1e-10));
        CHECK(b.upper == doctest::Approx(4.0).epsilon(1e-10));
    }
    SUBCASE("unitaries on both sides preserve the bounds") {
        Rng rng(63);
        const CMatrix q = orthonormal_columns(random_gaussian_matrix(2, 2, 7));
        const CMatrix r = orthonormal_columns(random_gaussian_matrix(2, 2, 8));
        const OperatorFrame of = tensor_operator_frame(doubled_e2(), mercedes());
        const FrameBounds before = op_frame_bounds(of);
        const FrameBounds after = op_frame_bounds(transform(of, q, r));
        CHECK(after.lower == doctest::Approx(before.lower).epsilon(1e-9));
        CHECK(after.upper == doctest::Approx(before.upper).epsilon(1e-9));
    }
    SUBCASE("identity factors leave elements untouched") {
        const OperatorFrame t = transform(units, CMatrix::identity(2), CMatrix::identity(2));
        for (std::size_t n = 0; n < 4; ++n)
            CHECK(dist(t[n], units[n]) == 0.0);
        CHECK(t.has_labels());
    }
    SUBCASE("transformed elements act as Q after T_n after R on vectors") {
        Rng rng(64);
        const CMatrix q = random_gaussian_matrix(2, 2, 91);
        const CMatrix r = random_gaussian_matrix(2, 2, 92);
        const OperatorFrame t = transform(units, q, r);
        const CVector y = rng.gaussian_vector(2);
        for (std::size_t n = 0; n < 4; ++n) {
            const CVector composed = q * apply(units[n], r * y);
            CHECK((apply(t[n], y) - composed).norm() < 1e-12);
        }
    }
    SUBCASE("singular factors are rejected") {
        const CMatrix singular(2, 2, {cplx{1, 0}, cplx{1, 0}, cplx{1, 0}, cplx{1, 0}});
        CHECK_THROWS_AS(transform(units, singular, std::nullopt), NotInvertibleError);
        CHECK_THROWS_AS(transform(units, std::nullopt, singular), NotInvertibleError);
    }
}

TEST_CASE("adjoint_frame swaps the factors and keeps the bounds") {
    const OperatorFrame of = tensor_operator_frame(doubled_e2(), mercedes());
    const OperatorFrame adj = adjoint_frame(of);
    CHECK(adj.dim_h() == of.dim_k());
    CHECK(adj.dim_k() == of.dim_h());
    REQUIRE(adj.has_labels());
    CHECK(adj.index_labels()[1] == std::pair<std::size_t, std::size_t>{1, 0});

    const FrameBounds a = op_frame_bounds(of);
    const FrameBounds b = op_frame_bounds(adj);
    CHECK(a.lower == doctest::Approx(b.lower).epsilon(1e-12));
    CHECK(a.upper == doctest::Approx(b.upper).epsilon(1e-12));

    // involution is exact entry by entry
    const OperatorFrame back = adjoint_frame(adj);
    for (std::size_t n = 0; n < of.count(); ++n)
        CHECK(dist(back[n], of[n]) == 0.0);

    // the bracket moves the adjoint to the other slot
    Rng rng(65);
    const HSElement t = random_element(2, 2, rng);
    for (std::size_t n = 0; n < of.count(); ++n)
        CHECK(std::abs(hs_inner(adjoint(t), adj[n]) - hs_inner(t, adjoint(adj[n]))) < 1e-12);
}

TEST_CASE("frame operator acting on tensor elements") {
    SUBCASE("matrix units give the identity operator") {
        Rng rng(66);
        const HSElement t = random_element(2, 2, rng);
        CHECK(dist(op_frame_operator_apply(matrix_units(), t), t) < 1e-13);
    }
    SUBCASE("factored form against the direct sum") {
        const Frame f1 = doubled_e2();
        const Frame f2 = onb(2);
        const OperatorFrame of = tensor_operator_frame(f1, f2);
        CMatrix ones(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                ones(i, j) = cplx{1, 0};
        const HSElement t(ones);
        const HSElement direct = op_frame_operator_apply(of, t);
        const HSElement factored = factored_frame_operator(f1, f2, t);
        CHECK(dist(direct, factored) < 1e-12);
        // S1 = diag(1,2), S2 = I: the action doubles the second row
        CHECK(std::abs(direct.matrix()(0, 0) - cplx{1, 0}) < 1e-13);
        CHECK(std::abs(direct.matrix()(1, 0) - cplx{2, 0}) < 1e-13);
        CHECK(std::abs(direct.matrix()(1, 1) - cplx{2, 0}) < 1e-13);
    }
    SUBCASE("factored form matches on random input") {
        Rng rng(67);
        const Frame f1 = random_frame(2, 4, 301);
        const Frame f2 = random_frame(3, 4, 302);
        const OperatorFrame of = tensor_operator_frame(f1, f2);
        for (int rep = 0; rep < 5; ++rep) {
            const HSElement t = random_element(2, 3, rng);
            CHECK(dist(op_frame_operator_apply(of, t), factored_frame_operator(f1, f2, t)) <
                  1e-10 * hs_norm(t));
        }
    }
    SUBCASE("zero element maps to zero") {
        const HSElement z(CMatrix(2, 2));
        CHECK(hs_norm(op_frame_operator_apply(matrix_units(), z)) == 0.0);
    }
}

TEST_CASE("canonical dual of operator frames") {
    SUBCASE("matrix units are self-dual") {
        const OperatorFrame units = matrix_units();
        const OperatorFrame dual = op_canonical_dual(units);
        for (std::size_t n = 0; n < 4; ++n)
            CHECK(dist(dual[n], units[n]) < 1e-12);
    }
    SUBCASE("product family dual is the product of duals") {
        const OperatorFrame of = tensor_operator_frame(doubled_e2(), onb(2));
        const OperatorFrame dual = op_canonical_dual(of);
        const Frame d1 = canonical_dual(doubled_e2());
        const OperatorFrame expected = tensor_operator_frame(d1, onb(2));
        for (std::size_t n = 0; n < of.count(); ++n)
            CHECK(dist(dual[n], expected[n]) < 1e-12);
        CHECK(dual.has_labels());
    }
    SUBCASE("dual reconstruction") {
        Rng rng(68);
        const OperatorFrame of = tensor_operator_frame(mercedes(), doubled_e2());
        const OperatorFrame dual = op_canonical_dual(of);
        const HSElement t = random_element(2, 2, rng);
        // t = sum_n <t, dual_n> T_n
        CMatrix m(2, 2);
        for (std::size_t n = 0; n < of.count(); ++n) {
            const cplx c = hs_inner(t, dual[n]);
            m = m + c * of[n].matrix();
        }
        CHECK(frobenius_norm(m - t.matrix()) < 1e-10);
    }
    SUBCASE("dual commutes with the adjoint construction") {
        const OperatorFrame of = tensor_operator_frame(doubled_e2(), mercedes());
        const OperatorFrame a = op_canonical_dual(adjoint_frame(of));
        const OperatorFrame b = adjoint_frame(op_canonical_dual(of));
        for (std::size_t n = 0; n < of.count(); ++n)
            CHECK(dist(a[n], b[n]) < 1e-11);
    }
    SUBCASE("non-frame families have no dual") {
        const OperatorFrame zero({HSElement(CMatrix(2, 2))});
        CHECK_THROWS_AS(op_canonical_dual(zero), NotAFrameError);
    }
}
