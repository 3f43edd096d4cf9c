#include "bhepn/complex_matrix.hpp"

#include <cmath>

namespace bhepn {

ComplexMatrix::ComplexMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
    if (rows < 0 || cols < 0) {
        throw DimensionError("matrix dimensions must be nonnegative");
    }
    entries_.assign(static_cast<size_t>(rows) * cols, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(int n) {
    ComplexMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(
    std::initializer_list<std::initializer_list<Complex>> rows) {
    const int n_rows = static_cast<int>(rows.size());
    const int n_cols = n_rows == 0 ? 0 : static_cast<int>(rows.begin()->size());
    ComplexMatrix m(n_rows, n_cols);
    int i = 0;
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n_cols) {
            throw DimensionError("ragged initializer: all rows must have equal length");
        }
        int j = 0;
        for (const Complex& v : row) m(i, j++) = v;
        ++i;
    }
    if (!m.all_finite()) {
        throw DimensionError("matrix entries must be finite");
    }
    return m;
}

ComplexMatrix ComplexMatrix::transpose() const {
    ComplexMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

ComplexMatrix ComplexMatrix::conjugate() const {
    ComplexMatrix c(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) c(i, j) = std::conj((*this)(i, j));
    return c;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix a(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) a(j, i) = std::conj((*this)(i, j));
    return a;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix sum: shape " + shape_string() + " vs " +
                             other.shape_string());
    }
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw DimensionError("matrix difference: shape " + shape_string() + " vs " +
                             other.shape_string());
    }
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
    return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
    for (Complex& e : entries_) e *= scale;
    return *this;
}

bool ComplexMatrix::all_finite() const {
    for (const Complex& e : entries_) {
        if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) return false;
    }
    return true;
}

std::string ComplexMatrix::shape_string() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex scale, ComplexMatrix m) { return m *= scale; }

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw DimensionError("matmul: inner dimensions differ, " + a.shape_string() +
                             " times " + b.shape_string());
    }
    ComplexMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int k = 0; k < a.cols(); ++k) {
            const Complex aik = a(i, k);
            if (aik == Complex{0.0, 0.0}) continue;
            for (int j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

double frobenius_norm(const ComplexMatrix& m) {
    double sum = 0.0;
    for (const Complex& e : m.entries()) sum += std::norm(e);
    return std::sqrt(sum);
}

}  // namespace bhepn
