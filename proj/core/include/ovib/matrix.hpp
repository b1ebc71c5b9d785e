#pragma once

#include <cstddef>
#include <vector>

namespace ovib {

/// Dense row-major matrix of doubles. Desk-scale sizes only; all arithmetic
/// is plain 64-bit with fixed accumulation order so results are reproducible.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    double* data() { return data_.data(); }
    const double* data() const { return data_.data(); }

    double* row(std::size_t i) { return data_.data() + i * cols_; }
    const double* row(std::size_t i) const { return data_.data() + i * cols_; }

    bool operator==(const Matrix& other) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Standard product a*b; throws ShapeError on a.cols != b.rows.
Matrix matmul(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

/// y = m*x for a column vector x (x.size() == m.cols()).
std::vector<double> matvec(const Matrix& m, const std::vector<double>& x);

/// Largest eigenvalue of a symmetric matrix (cyclic Jacobi sweeps). For PSD
/// inputs this is the spectral norm.
double max_sym_eigenvalue(const Matrix& s);

/// Frobenius norm squared of (w*w^T - I).
double gram_identity_residual(const Matrix& w);

}  // namespace ovib
