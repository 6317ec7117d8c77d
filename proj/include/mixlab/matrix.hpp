#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mixlab {

/// Dense row-major matrix of doubles. The universal carrier for batches,
/// weights and hidden states.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), v_(rows * cols, fill) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<double> values);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return v_.size(); }
    bool empty() const { return v_.empty(); }

    double& operator()(std::size_t i, std::size_t j) { return v_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return v_[i * cols_ + j]; }

    double* data() { return v_.data(); }
    const double* data() const { return v_.data(); }
    double* row(std::size_t i) { return v_.data() + i * cols_; }
    const double* row(std::size_t i) const { return v_.data() + i * cols_; }

    std::vector<double>& values() { return v_; }
    const std::vector<double>& values() const { return v_; }

    bool same_shape(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_; }
    std::string shape_str() const;

    bool all_finite() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> v_;
};

/// Standard matrix product; throws ShapeError naming both shapes on mismatch.
Matrix matmul(const Matrix& a, const Matrix& b);
/// a * b^T
Matrix matmul_nt(const Matrix& a, const Matrix& b);
/// a^T * b
Matrix matmul_tn(const Matrix& a, const Matrix& b);

Matrix transpose(const Matrix& m);

double frobenius_norm(const Matrix& m);

/// Throws ShapeError with a caller-supplied context string on mismatch.
void require_same_shape(const Matrix& a, const Matrix& b, const char* what);

} // namespace mixlab
