#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace bhepn {

using Complex = std::complex<double>;

/// Shape or argument violations detected before any numerics run.
struct DimensionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// An iterative kernel (QR sweep, Jacobi sweep) exceeded its iteration budget.
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear system had no solution, or a computed factor failed a numerical gate.
struct NumericalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense row-major complex matrix. The single value type carried through the
/// whole toolkit; all entries are kept finite (no NaN/Inf).
class ComplexMatrix {
public:
    ComplexMatrix() = default;
    ComplexMatrix(int rows, int cols);

    static ComplexMatrix identity(int n);
    static ComplexMatrix zero(int n) { return ComplexMatrix(n, n); }
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Complex& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * cols_ + j]; }
    const Complex& operator()(int i, int j) const {
        return entries_[static_cast<size_t>(i) * cols_ + j];
    }

    const std::vector<Complex>& entries() const { return entries_; }

    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    ComplexMatrix adjoint() const;

    ComplexMatrix& operator+=(const ComplexMatrix& other);
    ComplexMatrix& operator-=(const ComplexMatrix& other);
    ComplexMatrix& operator*=(Complex scale);

    bool all_finite() const;

    std::string shape_string() const;

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scale, ComplexMatrix m);

/// Standard matrix product; throws DimensionError naming both shapes on mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

inline ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    return matmul(a, b);
}

/// sqrt(sum |entry|^2).
double frobenius_norm(const ComplexMatrix& m);

}  // namespace bhepn
