#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "framekit/matrix.hpp"
#include "framekit/rng.hpp"

using namespace framekit;

namespace {

const cplx I{0.0, 1.0};

CVector random_vector(std::size_t n, Rng& rng) {
    CVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = rng.cgaussian();
    return v;
}

} // namespace

TEST_CASE("inner product is linear in the first slot and conjugate symmetric") {
    const CVector x{cplx{1, 2}, cplx{0, -1}};
    const CVector y{cplx{3, 0}, cplx{1, 1}};
    const cplx expected = cplx{1, 2} * std::conj(cplx{3, 0}) + cplx{0, -1} * std::conj(cplx{1, 1});
    CHECK(inner(x, y) == expected);
    CHECK(inner(y, x) == std::conj(inner(x, y)));
    CHECK(inner(I * x, y) == I * inner(x, y));
    CHECK(std::abs(inner(x, I * y) - (-I) * inner(x, y)) == 0.0);
    CHECK(inner(x, x).real() == doctest::Approx(x.norm() * x.norm()));
}

TEST_CASE("outer builds x y^T without conjugating y") {
    const CVector x{cplx{1, 0}, cplx{0, 1}};
    const CVector y{cplx{0, 2}, cplx{3, 0}};
    const CMatrix m = outer(x, y);
    CHECK(m(0, 0) == cplx{0, 2});
    CHECK(m(0, 1) == cplx{3, 0});
    CHECK(m(1, 0) == cplx{-2, 0});
    CHECK(m(1, 1) == cplx{0, 3});
}

TEST_CASE("matrix product against a hand example") {
    const CMatrix a(2, 2, {cplx{1, 0}, cplx{2, 0}, cplx{0, 0}, I});
    const CMatrix b(2, 2, {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}});
    const CMatrix c = a * b;
    CHECK(c(0, 0) == cplx{2, 0});
    CHECK(c(0, 1) == cplx{1, 0});
    CHECK(c(1, 0) == I);
    CHECK(c(1, 1) == cplx{0, 0});
    CHECK((CMatrix::identity(2) * a) == a);
}

TEST_CASE("transpose, conjugate and dagger compose as expected") {
    Rng rng(21);
    CMatrix a(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            a(i, j) = rng.cgaussian();
    CHECK(transpose(transpose(a)) == a);
    CHECK(dagger(a) == conjugate(transpose(a)));
    CHECK(dagger(dagger(a)) == a);
    // <Ax, y> = <x, A^H y>
    const CVector x = random_vector(2, rng);
    const CVector y = random_vector(3, rng);
    CHECK(std::abs(inner(a * x, y) - inner(x, dagger(a) * y)) < 1e-13);
}

TEST_CASE("frobenius inner product matches the entrywise definition") {
    const CMatrix a(2, 2, {cplx{1, 1}, cplx{0, 0}, cplx{2, 0}, I});
    const CMatrix b(2, 2, {cplx{0, 1}, cplx{5, 0}, cplx{1, 0}, cplx{0, -1}});
    cplx expected{0, 0};
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            expected += a(i, j) * std::conj(b(i, j));
    CHECK(frobenius_inner(a, b) == expected);
    CHECK(frobenius_norm(a) == doctest::Approx(std::sqrt(frobenius_inner(a, a).real())));
}

TEST_CASE("kron against a hand example") {
    const CMatrix a(2, 2, {cplx{1, 0}, cplx{2, 0}, cplx{3, 0}, cplx{4, 0}});
    const CMatrix b(1, 2, {cplx{0, 1}, cplx{1, 0}});
    const CMatrix k = kron(a, b);
    REQUIRE(k.rows() == 2);
    REQUIRE(k.cols() == 4);
    CHECK(k(0, 0) == cplx{0, 1});
    CHECK(k(0, 1) == cplx{1, 0});
    CHECK(k(0, 2) == cplx{0, 2});
    CHECK(k(0, 3) == cplx{2, 0});
    CHECK(k(1, 0) == cplx{0, 3});
    CHECK(k(1, 3) == cplx{4, 0});
}

TEST_CASE("kron refuses results above the entry cap") {
    const CMatrix a(8, 8);
    const CMatrix b(8, 8);
    CHECK_THROWS_AS(kron(a, b, 1000), SizeCapError);
    CHECK_NOTHROW(kron(a, b, 4096));
}

TEST_CASE("vec flattens row-major and unvec inverts it") {
    const CMatrix m(2, 3, {cplx{1, 0}, cplx{2, 0}, cplx{3, 0}, cplx{4, 0}, cplx{5, 0}, cplx{6, 0}});
    const CVector v = vec(m);
    REQUIRE(v.dim() == 6);
    CHECK(v[0] == cplx{1, 0});
    CHECK(v[2] == cplx{3, 0});
    CHECK(v[3] == cplx{4, 0});
    CHECK(unvec(v, 2, 3) == m);
    CHECK_THROWS_AS(unvec(v, 3, 3), ShapeError);
}

TEST_CASE("vec of a rank-one matrix is the Kronecker product of its factors") {
    Rng rng(22);
    const CVector x = random_vector(3, rng);
    const CVector y = random_vector(2, rng);
    CMatrix xm(3, 1), ym(2, 1);
    for (std::size_t i = 0; i < 3; ++i)
        xm(i, 0) = x[i];
    for (std::size_t j = 0; j < 2; ++j)
        ym(j, 0) = y[j];
    const CVector lhs = vec(outer(x, y));
    const CMatrix rhs = kron(xm, ym);
    REQUIRE(rhs.cols() == 1);
    for (std::size_t i = 0; i < lhs.dim(); ++i)
        CHECK(lhs[i] == rhs(i, 0));
}

TEST_CASE("vec intertwines two-sided multiplication with kron") {
    Rng rng(23);
    CMatrix q(3, 3), r(2, 2), m(3, 2);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            q(i, j) = rng.cgaussian();
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            r(i, j) = rng.cgaussian();
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            m(i, j) = rng.cgaussian();
    const CVector lhs = vec(q * m * transpose(r));
    const CVector rhs = kron(q, r) * vec(m);
    CHECK((lhs - rhs).norm() < 1e-13);
}

TEST_CASE("shape mismatches are rejected") {
    const CMatrix a(2, 3);
    const CMatrix b(3, 2);
    CHECK_THROWS_AS(a + b, ShapeError);
    CHECK_THROWS_AS(frobenius_inner(a, b), ShapeError);
    CHECK_THROWS_AS(CMatrix(2, 2, {cplx{1, 0}}), ShapeError);
    const CVector x(2);
    CHECK_THROWS_AS(a * x, ShapeError);
}
