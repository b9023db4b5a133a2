#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace blockgate {

using Complex = std::complex<double>;

/// Entrywise absolute tolerance used for approximate comparisons repo-wide.
inline constexpr double kEntryTol = 1e-10;

/// Per-side cap on matrix dimensions. Defaults to 16384 and can be raised or
/// lowered through the BLOCKGATE_MAX_DIM environment variable.
std::size_t max_matrix_dim();

/// d^k as a size, rejected with a guard error once it exceeds max_matrix_dim().
std::size_t checked_power(std::size_t base, std::size_t exponent);

/// Dense row-major complex matrix. The carrier type for every gate, operator,
/// projector and density matrix in this library. Values are treated as
/// immutable once built; all operations below are pure functions.
class ComplexMatrix {
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix from_data(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Complex& operator()(std::size_t r, std::size_t c) noexcept { return entries_[r * cols_ + c]; }
    const Complex& operator()(std::size_t r, std::size_t c) const noexcept {
        return entries_[r * cols_ + c];
    }

    std::span<const Complex> entries() const noexcept { return entries_; }
    std::span<Complex> entries() noexcept { return entries_; }

    /// "RxC", used in error messages.
    std::string shape() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> entries_;
};

/// Tensor (Kronecker) product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Matrix product. Throws std::invalid_argument naming both shapes on mismatch.
ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);

/// Conjugate transpose.
ComplexMatrix dagger(const ComplexMatrix& a);

/// Sum of diagonal entries. Requires a square matrix.
Complex trace(const ComplexMatrix& a);

/// True iff max|a·a† − I| <= tol and max|a†·a − I| <= tol. Requires square.
bool is_unitary(const ComplexMatrix& a, double tol = kEntryTol);

/// Largest entrywise absolute difference; requires equal shapes.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

/// Entrywise comparison within an absolute tolerance. False on shape mismatch.
bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol = kEntryTol);

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a);

}  // namespace blockgate
