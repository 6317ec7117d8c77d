#include "mixlab/matrix.hpp"

#include <cmath>
#include <utility>

#include "mixlab/errors.hpp"
#include "mixlab/kernels.hpp"

namespace mixlab {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> values)
    : rows_(rows), cols_(cols), v_(std::move(values)) {
    if (v_.size() != rows_ * cols_)
        throw ShapeError("Matrix: " + std::to_string(v_.size()) + " values for shape " +
                         shape_str());
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    v_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw ShapeError("Matrix: ragged initializer rows");
        v_.insert(v_.end(), r.begin(), r.end());
    }
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::string Matrix::shape_str() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

bool Matrix::all_finite() const {
    for (double x : v_)
        if (!std::isfinite(x)) return false;
    return true;
}

namespace {

void check_result_finite(const Matrix& m, const char* op) {
    if (!m.all_finite())
        throw NumericError(std::string(op) + ": non-finite entries in result");
}

} // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw ShapeError("matmul: inner dimensions differ, " + a.shape_str() + " vs " +
                         b.shape_str());
    Matrix c(a.rows(), b.cols());
    kernels::matmul_omp(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    check_result_finite(c, "matmul");
    return c;
}

Matrix matmul_nt(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw ShapeError("matmul_nt: inner dimensions differ, " + a.shape_str() + " vs " +
                         b.shape_str() + "^T");
    Matrix c(a.rows(), b.rows());
    kernels::matmul_nt_omp(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.rows());
    check_result_finite(c, "matmul_nt");
    return c;
}

Matrix matmul_tn(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows())
        throw ShapeError("matmul_tn: inner dimensions differ, " + a.shape_str() + "^T vs " +
                         b.shape_str());
    Matrix c(a.cols(), b.cols());
    kernels::matmul_tn_omp(a.data(), b.data(), c.data(), a.rows(), a.cols(), b.cols());
    check_result_finite(c, "matmul_tn");
    return c;
}

Matrix transpose(const Matrix& m) {
    Matrix t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = m(i, j);
    return t;
}

double frobenius_norm(const Matrix& m) {
    double s = 0.0;
    for (double x : m.values()) s += x * x;
    return std::sqrt(s);
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
    if (!a.same_shape(b))
        throw ShapeError(std::string(what) + ": shape mismatch, " + a.shape_str() + " vs " +
                         b.shape_str());
}

} // namespace mixlab
