#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "blockgate/gates.hpp"
#include "blockgate/matrix.hpp"

namespace blockgate {

/// Where a gate sits inside a k-wire, dimension-d register. Positions are
/// 1-based, wire 1 being the leftmost tensor factor (the most significant
/// digit of a basis index). Order is semantic: positions[i] feeds the gate's
/// i-th input.
struct WirePositions {
    std::size_t k = 1;
    std::size_t d = 2;
    std::vector<std::size_t> positions;
};

/// Validated pairing of a gate with wire positions (arity, dimension, range
/// and distinctness checks, plus the d^k size guard).
struct GatePlacement {
    GateSpec gate;
    WirePositions wires;
};

WirePositions make_wire_positions(std::size_t k, std::size_t d, std::vector<std::size_t> positions);
GatePlacement make_placement(GateSpec gate, WirePositions wires);

/// Identity-padded placement of a gate on wires m .. m+arity-1:
/// I_{d^(m-1)} ⊗ U ⊗ I_{d^(k-arity-m+1)}.
ComplexMatrix embed_adjacent(const GateSpec& gate, std::size_t m, std::size_t k);

/// Exchange of the first and last of n wires, assembled as the d×d grid of
/// identity-padded single-entry blocks: block (i, j) is I_{d^(n-2)} ⊗ |b_j⟩⟨b_i|.
/// Maps |x_1, x_2, ..., x_n⟩ to |x_n, x_2, ..., x_1⟩. Requires n >= 2.
ComplexMatrix swap_first_last(std::size_t n, std::size_t d);

/// Exchange of wires m and q (m < q) inside k wires, identity elsewhere:
/// I_{d^(m-1)} ⊗ swap_first_last(q-m+1, d) ⊗ I_{d^(k-q)}.
ComplexMatrix swap_pair(std::size_t k, std::size_t m, std::size_t q, std::size_t d);

/// Two-wire gate placed on wires m and q with no full-size multiplication:
/// the gate's d×d sub-blocks U_ij are padded to I_{d^(n-1)} ⊗ U_ij (n = q-m)
/// and tiled into a d×d grid, then sandwiched in identities. The first listed
/// wire receives the gate's first input; for q < m the gate is conjugated by
/// the adjacent swap and placed at (q, m).
ComplexMatrix embed_binary(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q);

/// Arbitrary-arity placement at arbitrary distinct positions: conjugates the
/// adjacently-placed gate by a wire permutation built from pair swaps.
ComplexMatrix embed_nary(const GateSpec& gate, const WirePositions& wires);

struct OracleResult {
    ComplexMatrix op;
    std::size_t swap_count = 0;
};

/// Reference construction: bubbles the target wires together with adjacent
/// transpositions, applies the gate, and unwinds the chain, composing
/// everything with full-size matrix products. Returns the operator and the
/// number of adjacent swaps used.
OracleResult swap_chain_oracle(const GateSpec& gate, const WirePositions& wires);

/// Adjacent-swap count 2·Σ_{i>=2} (α_i - (α_1 + i - 1)) for strictly
/// increasing positions. Matches swap_chain_oracle's count on sorted input.
std::size_t count_adjacent_swaps(std::span<const std::size_t> positions);

struct ComposedSwaps {
    ComplexMatrix op;
    bool factored = false;  // true when the single-block fast path applied
};

/// Product swap_pair(k, a) · swap_pair(k, b). When a.first >= b.first and
/// a's span is at least b's span, the product is assembled inside one
/// identity-padded block instead of multiplying two full-size operators.
ComposedSwaps compose_swaps(std::size_t k, std::size_t d, std::pair<std::size_t, std::size_t> a,
                            std::pair<std::size_t, std::size_t> b);

/// Dispatch helper used by the circuit builder: adjacent runs go through
/// embed_adjacent, two-wire placements through embed_binary, everything else
/// through embed_nary.
ComplexMatrix embed_placement(const GatePlacement& placement);

}  // namespace blockgate
