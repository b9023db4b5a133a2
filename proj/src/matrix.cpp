#include "blockgate/matrix.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace blockgate {

namespace {

constexpr std::size_t kDefaultMaxDim = 16384;

void check_finite(std::span<const Complex> entries) {
    for (const Complex& z : entries) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw std::invalid_argument("matrix entries must be finite (NaN/Inf rejected)");
        }
    }
}

void check_shape(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("matrix dimensions must be positive");
    }
    const std::size_t limit = max_matrix_dim();
    if (rows > limit || cols > limit) {
        throw std::runtime_error("matrix size guard exceeded: " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " with limit " + std::to_string(limit) +
                                 " per side (set BLOCKGATE_MAX_DIM to override)");
    }
}

}  // namespace

std::size_t max_matrix_dim() {
    if (const char* raw = std::getenv("BLOCKGATE_MAX_DIM")) {
        char* end = nullptr;
        const unsigned long long parsed = std::strtoull(raw, &end, 10);
        if (end != raw && *end == '\0' && parsed > 0) {
            return static_cast<std::size_t>(parsed);
        }
    }
    return kDefaultMaxDim;
}

std::size_t checked_power(std::size_t base, std::size_t exponent) {
    const std::size_t limit = max_matrix_dim();
    std::size_t value = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (value > limit / base) {
            throw std::runtime_error("matrix size guard exceeded: " + std::to_string(base) + "^" +
                                     std::to_string(exponent) + " is above the limit " +
                                     std::to_string(limit) +
                                     " per side (set BLOCKGATE_MAX_DIM to override)");
        }
        value *= base;
    }
    return value;
}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
    check_shape(rows, cols);
    entries_.assign(rows * cols, Complex{0.0, 0.0});
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
    ComplexMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    ComplexMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw std::invalid_argument("ragged rows in matrix literal");
        }
        std::size_t j = 0;
        for (const Complex& z : row) {
            m(i, j++) = z;
        }
        ++i;
    }
    check_finite(m.entries());
    return m;
}

ComplexMatrix ComplexMatrix::from_data(std::size_t rows, std::size_t cols,
                                       std::vector<Complex> entries) {
    check_shape(rows, cols);
    if (entries.size() != rows * cols) {
        throw std::invalid_argument("entry count " + std::to_string(entries.size()) +
                                    " does not match " + std::to_string(rows) + "x" +
                                    std::to_string(cols));
    }
    check_finite(entries);
    ComplexMatrix m(rows, cols);
    m.entries_ = std::move(entries);
    return m;
}

std::string ComplexMatrix::shape() const {
    return std::to_string(rows_) + "x" + std::to_string(cols_);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Complex aij = a(i, j);
            if (aij == Complex{}) {
                continue;
            }
            for (std::size_t p = 0; p < b.rows(); ++p) {
                for (std::size_t q = 0; q < b.cols(); ++q) {
                    out(i * b.rows() + p, j * b.cols() + q) = aij * b(p, q);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw std::invalid_argument("matmul: dimension mismatch (" + a.shape() + ")·(" + b.shape() +
                                    ")");
    }
    ComplexMatrix out(a.rows(), b.cols());
    // Row-accumulating loop order; exact zeros in the left factor skip their
    // whole inner pass, so products against permutation-like operators stay
    // quadratic while remaining a plain dense multiply.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* out_row = &out(i, 0);
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const Complex ail = a(i, l);
            if (ail == Complex{}) {
                continue;
            }
            const Complex* b_row = &b(l, 0);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                out_row[j] += ail * b_row[j];
            }
        }
    }
    return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

Complex trace(const ComplexMatrix& a) {
    if (!a.square()) {
        throw std::invalid_argument("trace requires a square matrix, got " + a.shape());
    }
    Complex sum{};
    for (std::size_t i = 0; i < a.rows(); ++i) {
        sum += a(i, i);
    }
    return sum;
}

bool is_unitary(const ComplexMatrix& a, double tol) {
    if (!a.square()) {
        throw std::invalid_argument("is_unitary requires a square matrix, got " + a.shape());
    }
    const ComplexMatrix adj = dagger(a);
    const ComplexMatrix eye = ComplexMatrix::identity(a.rows());
    return max_abs_diff(matmul(a, adj), eye) <= tol && max_abs_diff(matmul(adj, a), eye) <= tol;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch: " + a.shape() + " vs " + b.shape());
    }
    double worst = 0.0;
    const auto ea = a.entries();
    const auto eb = b.entries();
    for (std::size_t i = 0; i < ea.size(); ++i) {
        worst = std::max(worst, std::abs(ea[i] - eb[i]));
    }
    return worst;
}

bool approx_equal(const ComplexMatrix& a, const ComplexMatrix& b, double tol) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        return false;
    }
    return max_abs_diff(a, b) <= tol;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch: " + a.shape() + " vs " + b.shape());
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.entries()[i] + b.entries()[i];
    }
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw std::invalid_argument("shape mismatch: " + a.shape() + " vs " + b.shape());
    }
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = a.entries()[i] - b.entries()[i];
    }
    return out;
}

ComplexMatrix operator*(Complex scalar, const ComplexMatrix& a) {
    ComplexMatrix out(a.rows(), a.cols());
    for (std::size_t i = 0; i < out.entries().size(); ++i) {
        out.entries()[i] = scalar * a.entries()[i];
    }
    return out;
}

}  // namespace blockgate
