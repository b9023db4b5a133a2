#include "blockgate/gates.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace blockgate {

namespace {

std::string lowercase(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

ComplexMatrix pauli_x_matrix() {
    return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

ComplexMatrix cnot_matrix() {
    return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
}

ComplexMatrix toffoli_matrix() {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(6, 6) = 0;
    m(7, 7) = 0;
    m(6, 7) = 1;
    m(7, 6) = 1;
    return m;
}

ComplexMatrix fredkin_matrix() {
    ComplexMatrix m = ComplexMatrix::identity(8);
    m(5, 5) = 0;
    m(6, 6) = 0;
    m(5, 6) = 1;
    m(6, 5) = 1;
    return m;
}

ComplexMatrix sqrt_swap_matrix() {
    const Complex p{0.5, 0.5};   // (1+i)/2
    const Complex n{0.5, -0.5};  // (1-i)/2
    return ComplexMatrix::from_rows({{1, 0, 0, 0}, {0, p, n, 0}, {0, n, p, 0}, {0, 0, 0, 1}});
}

// The 9×9 two-qutrit square root of swap, assembled from its nine 3×3 blocks.
ComplexMatrix qutrit_sqrt_swap_matrix() {
    const Complex p{0.5, 0.5};
    const Complex n{0.5, -0.5};
    ComplexMatrix m(9, 9);
    const auto block = [&m](std::size_t bi, std::size_t bj, std::size_t r, std::size_t c,
                            Complex v) { m(bi * 3 + r, bj * 3 + c) = v; };
    // diagonal blocks
    block(0, 0, 0, 0, 1);
    block(0, 0, 1, 1, p);
    block(0, 0, 2, 2, p);
    block(1, 1, 0, 0, p);
    block(1, 1, 1, 1, 1);
    block(1, 1, 2, 2, p);
    block(2, 2, 0, 0, p);
    block(2, 2, 1, 1, p);
    block(2, 2, 2, 2, 1);
    // off-diagonal blocks carry a single (1-i)/2 each
    block(0, 1, 1, 0, n);
    block(0, 2, 2, 0, n);
    block(1, 0, 0, 1, n);
    block(1, 2, 2, 1, n);
    block(2, 0, 0, 2, n);
    block(2, 1, 1, 2, n);
    return m;
}

GateSpec build_standard(const std::string& name, std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    if (name == "identity") {
        return make_gate(name, d, 1, ComplexMatrix::identity(d));
    }
    if (name == "swap") {
        return make_gate(name, d, 2, qudit_swap(d));
    }
    if (name == "sqrt_swap") {
        if (d == 2) {
            return make_gate(name, d, 2, sqrt_swap_matrix());
        }
        if (d == 3) {
            return make_gate(name, d, 2, qutrit_sqrt_swap_matrix());
        }
        throw std::invalid_argument("gate 'sqrt_swap' is only available for d = 2 and d = 3");
    }
    if (name == "cnot" || name == "toffoli" || name == "fredkin" || name == "pauli_x") {
        if (d != 2) {
            throw std::invalid_argument("gate '" + name + "' is only available for d = 2");
        }
        if (name == "cnot") {
            return make_gate(name, d, 2, cnot_matrix());
        }
        if (name == "toffoli") {
            return make_gate(name, d, 3, toffoli_matrix());
        }
        if (name == "fredkin") {
            return make_gate(name, d, 3, fredkin_matrix());
        }
        return make_gate(name, d, 1, pauli_x_matrix());
    }
    throw std::invalid_argument("unknown gate name '" + name + "'");
}

}  // namespace

GateSpec make_gate(std::string name, std::size_t d, std::size_t arity, ComplexMatrix matrix) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    if (arity < 1) {
        throw std::invalid_argument("gate arity must be at least 1");
    }
    const std::size_t side = checked_power(d, arity);
    if (matrix.rows() != side || matrix.cols() != side) {
        throw std::invalid_argument("gate matrix is " + matrix.shape() + " but d^arity = " +
                                    std::to_string(side));
    }
    if (!is_unitary(matrix, kEntryTol)) {
        throw std::invalid_argument("gate matrix for '" + name + "' is not unitary");
    }
    return GateSpec{std::move(name), d, arity, std::move(matrix)};
}

ComplexMatrix projector(std::size_t d, std::size_t j, std::size_t k) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    if (j >= d || k >= d) {
        throw std::out_of_range("projector indices (" + std::to_string(j) + "," +
                                std::to_string(k) + ") out of range for d = " + std::to_string(d));
    }
    ComplexMatrix m(d, d);
    m(j, k) = Complex{1.0, 0.0};
    return m;
}

ComplexMatrix qudit_swap(std::size_t d) {
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    ComplexMatrix m(d * d, d * d);
    // (i, j) block is |b_j⟩⟨b_i|, i.e. a 1 at entry (i*d + j, j*d + i).
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            m(i * d + j, j * d + i) = Complex{1.0, 0.0};
        }
    }
    return m;
}

GateSpec standard_gate(std::string_view name, std::size_t d) {
    const std::string key = lowercase(name);
    static std::mutex mutex;
    static std::map<std::pair<std::string, std::size_t>, GateSpec> catalog;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = catalog.find({key, d});
    if (it == catalog.end()) {
        it = catalog.emplace(std::make_pair(key, d), build_standard(key, d)).first;
    }
    return it->second;
}

std::vector<std::string> standard_gate_names(std::size_t d) {
    if (d == 2) {
        return {"identity", "swap", "sqrt_swap", "cnot", "toffoli", "fredkin", "pauli_x"};
    }
    if (d == 3) {
        return {"identity", "swap", "sqrt_swap"};
    }
    return {"identity", "swap"};
}

}  // namespace blockgate
