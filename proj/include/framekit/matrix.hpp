#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "framekit/errors.hpp"
#include "framekit/kernels.hpp"
#include "framekit/tolerances.hpp"

namespace framekit {

/// Dense complex vector, double precision.
class CVector {
public:
    CVector() = default;
    explicit CVector(std::size_t dim) : data_(dim, cplx{0.0, 0.0}) {}
    CVector(std::initializer_list<cplx> entries) : data_(entries) {}
    explicit CVector(std::vector<cplx> entries) : data_(std::move(entries)) {}

    /// k-th standard basis vector of C^dim.
    static CVector unit(std::size_t dim, std::size_t k);

    std::size_t dim() const { return data_.size(); }
    cplx& operator[](std::size_t i) { return data_[i]; }
    const cplx& operator[](std::size_t i) const { return data_[i]; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    auto begin() const { return data_.begin(); }
    auto end() const { return data_.end(); }

    double norm() const;
    bool is_finite() const;

    bool operator==(const CVector& other) const { return data_ == other.data_; }

private:
    std::vector<cplx> data_;
};

/// Dense complex matrix, row-major.
class CMatrix {
public:
    CMatrix() = default;
    CMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, cplx{0.0, 0.0}) {}
    CMatrix(std::size_t rows, std::size_t cols, std::initializer_list<cplx> entries);
    CMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);

    static CMatrix identity(std::size_t n);
    static CMatrix diagonal(const std::vector<cplx>& d);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    cplx* data() { return data_.data(); }
    const cplx* data() const { return data_.data(); }

    CVector row(std::size_t i) const;
    CVector col(std::size_t j) const;

    bool is_finite() const;

    bool operator==(const CMatrix& other) const {
        return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<cplx> data_;
};

// ---- vector algebra ----

CVector operator+(const CVector& a, const CVector& b);
CVector operator-(const CVector& a, const CVector& b);
CVector operator*(const cplx& s, const CVector& a);

/// Inner product, linear in the FIRST argument: sum_i a_i * conj(b_i).
cplx inner(const CVector& a, const CVector& b);

// ---- matrix algebra ----

CMatrix operator+(const CMatrix& a, const CMatrix& b);
CMatrix operator-(const CMatrix& a, const CMatrix& b);
CMatrix operator*(const cplx& s, const CMatrix& a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, const CVector& x);

CMatrix transpose(const CMatrix& a);
CMatrix conjugate(const CMatrix& a);
/// Conjugate transpose a^H.
CMatrix dagger(const CMatrix& a);

/// Rank-one matrix x * y^T (no conjugation on y).
CMatrix outer(const CVector& x, const CVector& y);

/// sum_ij a_ij * conj(b_ij); shapes must match.
cplx frobenius_inner(const CMatrix& a, const CMatrix& b);
double frobenius_norm(const CMatrix& a);

/// Kronecker product; throws SizeCapError when the result would exceed
/// `cap` entries.
CMatrix kron(const CMatrix& a, const CMatrix& b, std::size_t cap = tol::size_cap);

/// Row-major flattening of a into a vector of length rows*cols. Under this
/// convention vec(x y^T) = kron(x, y) and vec(Q M R^T) = kron(Q, R) vec(M).
CVector vec(const CMatrix& a);
CMatrix unvec(const CVector& v, std::size_t rows, std::size_t cols);

} // namespace framekit
