#include "blockgate/embed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace blockgate {

namespace {

std::string positions_str(std::span<const std::size_t> positions) {
    std::string out = "(";
    for (std::size_t i = 0; i < positions.size(); ++i) {
        if (i) {
            out += ",";
        }
        out += std::to_string(positions[i]);
    }
    return out + ")";
}

/// Tile the D×D matrix `gate` (D = d·d) as a d×d grid whose (i, j) block is
/// I_pad ⊗ G_ij, G_ij being the d×d sub-blocks of `gate`. Output side D·pad.
ComplexMatrix pad_block_grid(const ComplexMatrix& gate, std::size_t d, std::size_t pad) {
    const std::size_t block = d * pad;  // side of one padded block
    ComplexMatrix out(d * block, d * block);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            for (std::size_t a = 0; a < d; ++a) {
                for (std::size_t b = 0; b < d; ++b) {
                    const Complex v = gate(i * d + a, j * d + b);
                    if (v == Complex{}) {
                        continue;
                    }
                    for (std::size_t t = 0; t < pad; ++t) {
                        out(i * block + t * d + a, j * block + t * d + b) = v;
                    }
                }
            }
        }
    }
    return out;
}

/// I_{d^(left)} ⊗ core ⊗ I_{d^(right)} with 1×1 factors skipped.
ComplexMatrix sandwich(const ComplexMatrix& core, std::size_t d, std::size_t left,
                       std::size_t right) {
    ComplexMatrix out = core;
    if (left > 0) {
        out = kron(ComplexMatrix::identity(checked_power(d, left)), out);
    }
    if (right > 0) {
        out = kron(out, ComplexMatrix::identity(checked_power(d, right)));
    }
    return out;
}

/// Tracks which original wire sits at which position while swaps are replayed.
class WireTracker {
public:
    explicit WireTracker(std::size_t k) : at_position_(k + 1), position_of_(k + 1) {
        std::iota(at_position_.begin(), at_position_.end(), 0);
        std::iota(position_of_.begin(), position_of_.end(), 0);
    }

    std::size_t position_of(std::size_t wire) const { return position_of_[wire]; }

    void swap_positions(std::size_t a, std::size_t b) {
        std::swap(position_of_[at_position_[a]], position_of_[at_position_[b]]);
        std::swap(at_position_[a], at_position_[b]);
    }

private:
    std::vector<std::size_t> at_position_;
    std::vector<std::size_t> position_of_;
};

}  // namespace

WirePositions make_wire_positions(std::size_t k, std::size_t d,
                                  std::vector<std::size_t> positions) {
    if (k < 1) {
        throw std::invalid_argument("wire count must be at least 1");
    }
    if (d < 2) {
        throw std::invalid_argument("qudit dimension must be at least 2");
    }
    if (positions.empty()) {
        throw std::invalid_argument("placement needs at least one wire position");
    }
    std::unordered_set<std::size_t> seen;
    for (std::size_t p : positions) {
        if (p < 1 || p > k) {
            throw std::invalid_argument("wire position " + std::to_string(p) +
                                        " out of range 1.." + std::to_string(k));
        }
        if (!seen.insert(p).second) {
            throw std::invalid_argument("duplicate wire position " + std::to_string(p));
        }
    }
    return WirePositions{k, d, std::move(positions)};
}

GatePlacement make_placement(GateSpec gate, WirePositions wires) {
    if (gate.d != wires.d) {
        throw std::invalid_argument("gate dimension d = " + std::to_string(gate.d) +
                                    " does not match register dimension d = " +
                                    std::to_string(wires.d));
    }
    if (gate.arity != wires.positions.size()) {
        throw std::invalid_argument("gate arity " + std::to_string(gate.arity) + " but " +
                                    std::to_string(wires.positions.size()) +
                                    " wire positions given");
    }
    checked_power(wires.d, wires.k);  // size guard
    return GatePlacement{std::move(gate), std::move(wires)};
}

ComplexMatrix embed_adjacent(const GateSpec& gate, std::size_t m, std::size_t k) {
    const std::size_t n = gate.arity;
    if (m < 1 || m + n - 1 > k) {
        throw std::invalid_argument("adjacent placement at wire " + std::to_string(m) +
                                    " of an arity-" + std::to_string(n) +
                                    " gate does not fit in k = " + std::to_string(k));
    }
    checked_power(gate.d, k);
    return sandwich(gate.matrix, gate.d, m - 1, k - n - (m - 1));
}

ComplexMatrix swap_first_last(std::size_t n, std::size_t d) {
    if (n < 2) {
        throw std::invalid_argument("swap_first_last needs at least 2 wires, got n = " +
                                    std::to_string(n));
    }
    checked_power(d, n);
    return pad_block_grid(qudit_swap(d), d, checked_power(d, n - 2));
}

ComplexMatrix swap_pair(std::size_t k, std::size_t m, std::size_t q, std::size_t d) {
    if (m < 1 || m >= q || q > k) {
        throw std::invalid_argument("swap_pair requires 1 <= m < q <= k, got m = " +
                                    std::to_string(m) + ", q = " + std::to_string(q) +
                                    ", k = " + std::to_string(k));
    }
    checked_power(d, k);
    return sandwich(swap_first_last(q - m + 1, d), d, m - 1, k - q);
}

ComplexMatrix embed_binary(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q) {
    if (gate.arity != 2) {
        throw std::invalid_argument("embed_binary needs an arity-2 gate, got arity " +
                                    std::to_string(gate.arity));
    }
    if (m == q) {
        throw std::invalid_argument("embed_binary positions must differ, got m = q = " +
                                    std::to_string(m));
    }
    if (m < 1 || q < 1 || m > k || q > k) {
        throw std::invalid_argument("embed_binary positions (" + std::to_string(m) + "," +
                                    std::to_string(q) + ") out of range 1.." + std::to_string(k));
    }
    checked_power(gate.d, k);
    if (q < m) {
        // Reversed listing: exchange the gate's two inputs, then place at (q, m).
        const ComplexMatrix s = qudit_swap(gate.d);
        GateSpec flipped = gate;
        flipped.matrix = matmul(matmul(s, gate.matrix), s);
        return embed_binary(flipped, k, q, m);
    }
    const std::size_t n = q - m;
    const ComplexMatrix middle = pad_block_grid(gate.matrix, gate.d, checked_power(gate.d, n - 1));
    return sandwich(middle, gate.d, m - 1, k - q);
}

ComplexMatrix embed_nary(const GateSpec& gate, const WirePositions& wires) {
    const GatePlacement placement = make_placement(gate, wires);
    const std::size_t k = wires.k;
    const std::size_t d = wires.d;
    const auto& pos = placement.wires.positions;
    const std::size_t n = pos.size();
    const std::size_t anchor = *std::min_element(pos.begin(), pos.end());

    if (n == 1) {
        return embed_adjacent(gate, pos[0], k);
    }

    // Pair transpositions that bring the listed wires to anchor..anchor+n-1
    // in listed order.
    WireTracker tracker(k);
    std::vector<std::pair<std::size_t, std::size_t>> transpositions;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t target = anchor + i;
        const std::size_t current = tracker.position_of(pos[i]);
        if (current != target) {
            transpositions.emplace_back(std::min(target, current), std::max(target, current));
            tracker.swap_positions(target, current);
        }
    }

    const ComplexMatrix gate_adjacent = embed_adjacent(gate, anchor, k);
    if (transpositions.empty()) {
        return gate_adjacent;
    }
    ComplexMatrix pi = swap_pair(k, transpositions[0].first, transpositions[0].second, d);
    for (std::size_t i = 1; i < transpositions.size(); ++i) {
        pi = matmul(swap_pair(k, transpositions[i].first, transpositions[i].second, d), pi);
    }
    return matmul(dagger(pi), matmul(gate_adjacent, pi));
}

OracleResult swap_chain_oracle(const GateSpec& gate, const WirePositions& wires) {
    const GatePlacement placement = make_placement(gate, wires);
    const std::size_t k = wires.k;
    const std::size_t d = wires.d;
    const auto& pos = placement.wires.positions;
    const std::size_t anchor = *std::min_element(pos.begin(), pos.end());

    // Adjacent transposition indices, in application order: bubble the wire
    // feeding input i down to anchor+i-1, one neighbour exchange at a time.
    WireTracker tracker(k);
    std::vector<std::size_t> chain;
    for (std::size_t i = 0; i < pos.size(); ++i) {
        const std::size_t target = anchor + i;
        for (std::size_t j = tracker.position_of(pos[i]); j > target; --j) {
            chain.push_back(j - 1);
            tracker.swap_positions(j - 1, j);
        }
    }

    const GateSpec adjacent_swap = standard_gate("swap", d);
    const auto swap_at = [&](std::size_t i) { return embed_adjacent(adjacent_swap, i, k); };

    if (chain.empty()) {
        return OracleResult{embed_adjacent(gate, anchor, k), 0};
    }
    ComplexMatrix forward = swap_at(chain[0]);
    for (std::size_t i = 1; i < chain.size(); ++i) {
        forward = matmul(swap_at(chain[i]), forward);
    }
    ComplexMatrix op = matmul(embed_adjacent(gate, anchor, k), forward);
    for (std::size_t i = chain.size(); i-- > 0;) {
        op = matmul(swap_at(chain[i]), op);
    }
    return OracleResult{std::move(op), 2 * chain.size()};
}

std::size_t count_adjacent_swaps(std::span<const std::size_t> positions) {
    if (positions.empty()) {
        throw std::invalid_argument("count_adjacent_swaps needs at least one position");
    }
    for (std::size_t i = 1; i < positions.size(); ++i) {
        if (positions[i] <= positions[i - 1]) {
            throw std::invalid_argument("positions must be strictly increasing, got " +
                                        positions_str(positions));
        }
    }
    std::size_t total = 0;
    for (std::size_t i = 1; i < positions.size(); ++i) {
        total += positions[i] - (positions[0] + i);
    }
    return 2 * total;
}

ComposedSwaps compose_swaps(std::size_t k, std::size_t d, std::pair<std::size_t, std::size_t> a,
                            std::pair<std::size_t, std::size_t> b) {
    const auto [m, q] = a;
    const auto [m2, q2] = b;
    if (m < 1 || m >= q || q > k || m2 < 1 || m2 >= q2 || q2 > k) {
        throw std::invalid_argument("compose_swaps pairs must satisfy 1 <= m < q <= k");
    }
    const std::size_t n = q - m;
    const std::size_t n2 = q2 - m2;
    if (m >= m2 && n >= n2) {
        const ComplexMatrix lhs = sandwich(swap_first_last(n + 1, d), d, m - m2, 0);
        const ComplexMatrix rhs = sandwich(swap_first_last(n2 + 1, d), d, 0, (m - m2) + (n - n2));
        return ComposedSwaps{sandwich(matmul(lhs, rhs), d, m2 - 1, k - q), true};
    }
    return ComposedSwaps{matmul(swap_pair(k, m, q, d), swap_pair(k, m2, q2, d)), false};
}

ComplexMatrix embed_placement(const GatePlacement& placement) {
    const auto& pos = placement.wires.positions;
    const std::size_t k = placement.wires.k;
    bool contiguous = true;
    for (std::size_t i = 1; i < pos.size(); ++i) {
        contiguous = contiguous && pos[i] == pos[0] + i;
    }
    if (contiguous) {
        return embed_adjacent(placement.gate, pos[0], k);
    }
    if (pos.size() == 2) {
        return embed_binary(placement.gate, k, pos[0], pos[1]);
    }
    return embed_nary(placement.gate, placement.wires);
}

}  // namespace blockgate
