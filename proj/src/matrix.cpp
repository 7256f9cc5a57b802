#include "framekit/matrix.hpp"

#include <cmath>
#include <string>

namespace framekit {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw ShapeError(std::string(what) + ": dimension mismatch (" +
                         std::to_string(a) + " vs " + std::to_string(b) + ")");
}

} // namespace

CVector CVector::unit(std::size_t dim, std::size_t k) {
    CVector e(dim);
    e[k] = cplx{1.0, 0.0};
    return e;
}

double CVector::norm() const {
    return std::sqrt(kernels::dot_conj(data(), data(), dim()).real());
}

bool CVector::is_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries)
    : rows_(rows), cols_(cols), data_(entries) {
    if (data_.size() != rows * cols)
        throw ShapeError("CMatrix: entry count does not match rows*cols");
}

CMatrix::CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows * cols)
        throw ShapeError("CMatrix: entry count does not match rows*cols");
}

CMatrix CMatrix::identity(std::size_t n) {
    CMatrix id(n, n);
    for (std::size_t i = 0; i < n; ++i)
        id(i, i) = cplx{1.0, 0.0};
    return id;
}

CMatrix CMatrix::diagonal(const std::vector<cplx>& d) {
    CMatrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i)
        m(i, i) = d[i];
    return m;
}

CVector CMatrix::row(std::size_t i) const {
    CVector r(cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r[j] = (*this)(i, j);
    return r;
}

CVector CMatrix::col(std::size_t j) const {
    CVector c(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        c[i] = (*this)(i, j);
    return c;
}

bool CMatrix::is_finite() const {
    for (const cplx& z : data_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

CVector operator+(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector add");
    CVector c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        c[i] = a[i] + b[i];
    return c;
}

CVector operator-(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "vector sub");
    CVector c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        c[i] = a[i] - b[i];
    return c;
}

CVector operator*(const cplx& s, const CVector& a) {
    CVector c(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i)
        c[i] = s * a[i];
    return c;
}

cplx inner(const CVector& a, const CVector& b) {
    require_same_dim(a.dim(), b.dim(), "inner product");
    return kernels::dot_conj(a.data(), b.data(), a.dim());
}

CMatrix operator+(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix add: shape mismatch");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        c.data()[i] = a.data()[i] + b.data()[i];
    return c;
}

CMatrix operator-(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("matrix sub: shape mismatch");
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        c.data()[i] = a.data()[i] - b.data()[i];
    return c;
}

CMatrix operator*(const cplx& s, const CMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        c.data()[i] = s * a.data()[i];
    return c;
}

CMatrix operator*(const CMatrix& a, const CMatrix& b) {
    require_same_dim(a.cols(), b.rows(), "matmul");
    CMatrix c(a.rows(), b.cols());
    kernels::matmul(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    return c;
}

CVector operator*(const CMatrix& a, const CVector& x) {
    require_same_dim(a.cols(), x.dim(), "matvec");
    CVector y(a.rows());
    kernels::matvec(a.data(), x.data(), y.data(), a.rows(), a.cols());
    return y;
}

CMatrix transpose(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = a(i, j);
    return t;
}

CMatrix conjugate(const CMatrix& a) {
    CMatrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.size(); ++i)
        c.data()[i] = std::conj(a.data()[i]);
    return c;
}

CMatrix dagger(const CMatrix& a) {
    CMatrix t(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            t(j, i) = std::conj(a(i, j));
    return t;
}

CMatrix outer(const CVector& x, const CVector& y) {
    CMatrix m(x.dim(), y.dim());
    for (std::size_t i = 0; i < x.dim(); ++i)
        for (std::size_t j = 0; j < y.dim(); ++j)
            m(i, j) = x[i] * y[j];
    return m;
}

cplx frobenius_inner(const CMatrix& a, const CMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("frobenius_inner: shape mismatch");
    return kernels::dot_conj(a.data(), b.data(), a.size());
}

double frobenius_norm(const CMatrix& a) {
    return std::sqrt(kernels::dot_conj(a.data(), a.data(), a.size()).real());
}

CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t cap) {
    const std::size_t rows = a.rows() * b.rows();
    const std::size_t cols = a.cols() * b.cols();
    if (a.size() != 0 && b.size() != 0 && rows > cap / cols)
        throw SizeCapError("kron: result of " + std::to_string(rows) + "x" +
                           std::to_string(cols) + " exceeds the size cap of " +
                           std::to_string(cap) + " entries");
    CMatrix out(rows, cols);
    kernels::kron(a.data(), a.rows(), a.cols(), b.data(), b.rows(), b.cols(), out.data());
    return out;
}

CVector vec(const CMatrix& a) {
    CVector v(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        v[i] = a.data()[i];
    return v;
}

CMatrix unvec(const CVector& v, std::size_t rows, std::size_t cols) {
    if (v.dim() != rows * cols)
        throw ShapeError("unvec: vector length does not match rows*cols");
    CMatrix a(rows, cols);
    for (std::size_t i = 0; i < v.dim(); ++i)
        a.data()[i] = v[i];
    return a;
}

} // namespace framekit
