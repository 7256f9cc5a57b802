#include "framekit/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "framekit/tolerances.hpp"

namespace framekit {

namespace {

double off_diagonal_mass(const CMatrix& a) {
    double sum = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (i != j)
                sum += std::norm(a(i, j));
    return std::sqrt(sum);
}

// One Jacobi rotation annihilating a(p, q). The rotation G acts on the
// (p, q) plane as [[c, s], [-s*ph, c*ph]] with c, s real and ph the unit
// phase of a(p, q); a <- G^H a G and v <- v G.
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q) {
    const cplx apq = a(p, q);
    const double abs_apq = std::abs(apq);
    if (abs_apq == 0.0)
        return;
    const cplx ph = apq / abs_apq;

    const double app = a(p, p).real();
    const double aqq = a(q, q).real();
    const double tau = (aqq - app) / (2.0 * abs_apq);
    const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                  : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;

    // Phase factor conj(ph) makes the rotated off-diagonal entry real; the
    // real pair (c, s) then annihilates it.
    const std::size_t n = a.rows();
    const cplx gqp = -s * std::conj(ph); // G(q, p)
    const cplx gqq = c * std::conj(ph);  // G(q, q)

    // columns: a <- a G
    for (std::size_t k = 0; k < n; ++k) {
        const cplx akp = a(k, p);
        const cplx akq = a(k, q);
        a(k, p) = c * akp + gqp * akq;
        a(k, q) = s * akp + gqq * akq;
    }
    // rows: a <- G^H a
    for (std::size_t k = 0; k < n; ++k) {
        const cplx apk = a(p, k);
        const cplx aqk = a(q, k);
        a(p, k) = c * apk + std::conj(gqp) * aqk;
        a(q, k) = s * apk + std::conj(gqq) * aqk;
    }
    a(p, q) = cplx{0.0, 0.0};
    a(q, p) = cplx{0.0, 0.0};
    a(p, p) = cplx{a(p, p).real(), 0.0};
    a(q, q) = cplx{a(q, q).real(), 0.0};

    for (std::size_t k = 0; k < n; ++k) {
        const cplx vkp = v(k, p);
        const cplx vkq = v(k, q);
        v(k, p) = c * vkp + gqp * vkq;
        v(k, q) = s * vkp + gqq * vkq;
    }
}

// Forward substitution L y = b, then back substitution L^H x = y.
// L is lower triangular with real positive diagonal.
void cholesky_solve_inplace(const CMatrix& l, CVector& x) {
    const std::size_t n = l.rows();
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = x[i];
        for (std::size_t j = 0; j < i; ++j)
            acc -= l(i, j) * x[j];
        x[i] = acc / l(i, i);
    }
    for (std::size_t ii = n; ii-- > 0;) {
        cplx acc = x[ii];
        for (std::size_t j = ii + 1; j < n; ++j)
            acc -= std::conj(l(j, ii)) * x[j];
        x[ii] = acc / l(ii, ii);
    }
}

CMatrix cholesky_factor(const CMatrix& a) {
    const std::size_t n = a.rows();
    const double pivot_floor =
        tol::hpd_pivot * std::max(frobenius_norm(a), tol::abs_floor);
    CMatrix l(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            cplx acc = a(i, j);
            for (std::size_t k = 0; k < j; ++k)
                acc -= l(i, k) * std::conj(l(j, k));
            if (i == j) {
                const double d = acc.real();
                if (d <= pivot_floor)
                    throw NotHpdError("hpd_solve: pivot " + std::to_string(d) +
                                      " at column " + std::to_string(i) +
                                      " below positive-definiteness threshold");
                l(i, j) = cplx{std::sqrt(d), 0.0};
            } else {
                l(i, j) = acc / l(j, j);
            }
        }
    }
    return l;
}

} // namespace

HermitianEig hermitian_eig(const CMatrix& a) {
    if (a.rows() != a.cols())
        throw ShapeError("hermitian_eig: matrix is " + std::to_string(a.rows()) +
                         "x" + std::to_string(a.cols()) + ", not square");
    const std::size_t n = a.rows();
    const double norm_a = frobenius_norm(a);

    const double asym = frobenius_norm(a - dagger(a)) / 2.0;
    if (asym > tol::herm * std::max(norm_a, tol::abs_floor))
        throw NotHermitianError("hermitian_eig: asymmetry " + std::to_string(asym) +
                                " exceeds tolerance");

    CMatrix work = cplx{0.5, 0.0} * (a + dagger(a));
    CMatrix v = CMatrix::identity(n);

    const double stop = tol::jacobi_off * std::max(norm_a, tol::abs_floor);
    int sweep = 0;
    while (off_diagonal_mass(work) > stop) {
        if (++sweep > tol::jacobi_max_sweeps)
            throw ConvergenceError("hermitian_eig: no convergence after " +
                                   std::to_string(tol::jacobi_max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p)
            for (std::size_t q = p + 1; q < n; ++q)
                rotate(work, v, p, q);
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
        return work(i, i).real() < work(j, j).real();
    });

    HermitianEig out;
    out.eigenvalues.resize(n);
    out.eigenvectors = CMatrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        out.eigenvalues[k] = work(order[k], order[k]).real();
        for (std::size_t i = 0; i < n; ++i)
            out.eigenvectors(i, k) = v(i, order[k]);
    }
    return out;
}

CMatrix hpd_solve(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != a.cols())
        throw ShapeError("hpd_solve: coefficient matrix not square");
    if (a.cols() != b.rows())
        throw ShapeError("hpd_solve: rhs has " + std::to_string(b.rows()) +
                         " rows, expected " + std::to_string(a.cols()));
    const CMatrix l = cholesky_factor(a);
    CMatrix x(b.rows(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        CVector col = b.col(j);
        cholesky_solve_inplace(l, col);
        for (std::size_t i = 0; i < b.rows(); ++i)
            x(i, j) = col[i];
    }
    return x;
}

CVector hpd_solve(const CMatrix& a, const CVector& b) {
    if (a.rows() != a.cols())
        throw ShapeError("hpd_solve: coefficient matrix not square");
    if (a.cols() != b.dim())
        throw ShapeError("hpd_solve: rhs dimension mismatch");
    const CMatrix l = cholesky_factor(a);
    CVector x = b;
    cholesky_solve_inplace(l, x);
    return x;
}

CMatrix hpd_inverse(const CMatrix& a) {
    return hpd_solve(a, CMatrix::identity(a.rows()));
}

double operator_norm_2(const CMatrix& a) {
    if (a.size() == 0)
        return 0.0;
    const CMatrix gram = dagger(a) * a;
    const HermitianEig eig = hermitian_eig(gram);
    return std::sqrt(std::max(eig.eigenvalues.back(), 0.0));
}

double smallest_singular_value(const CMatrix& a) {
    if (a.size() == 0)
        return 0.0;
    const CMatrix gram = dagger(a) * a;
    const HermitianEig eig = hermitian_eig(gram);
    return std::sqrt(std::max(eig.eigenvalues.front(), 0.0));
}

} // namespace framekit
