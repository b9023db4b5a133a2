#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "blockgate/matrix.hpp"

namespace blockgate {

/// A named unitary together with the qudit dimension and wire count it acts on.
/// The matrix side is always d^arity and unitarity is validated on construction.
struct GateSpec {
    std::string name;
    std::size_t d = 2;
    std::size_t arity = 1;
    ComplexMatrix matrix;
};

/// Validating constructor for GateSpec.
GateSpec make_gate(std::string name, std::size_t d, std::size_t arity, ComplexMatrix matrix);

/// d×d matrix with a single 1 at row j, column k: |b_j⟩⟨b_k|. For d = 2 this
/// covers the projectors (j == k) and the ladder operators (j != k).
ComplexMatrix projector(std::size_t d, std::size_t j, std::size_t k);

/// Exchange of two adjacent d-level wires: the d²×d² operator whose (i, j)
/// d×d block is projector(d, j, i). Maps x⊗y to y⊗x.
ComplexMatrix qudit_swap(std::size_t d);

/// Catalog lookup, case-insensitive. Supported: identity, swap, sqrt_swap,
/// cnot, toffoli, fredkin, pauli_x for d = 2; identity and swap for any d;
/// sqrt_swap additionally for d = 3. Throws on unknown (name, d) pairs.
GateSpec standard_gate(std::string_view name, std::size_t d);

/// Names accepted by standard_gate for the given dimension.
std::vector<std::string> standard_gate_names(std::size_t d);

}  // namespace blockgate
