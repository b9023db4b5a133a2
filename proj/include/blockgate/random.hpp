#pragma once

#include <cstdint>
#include <random>

#include "blockgate/matrix.hpp"
#include "blockgate/qcl.hpp"

namespace blockgate {

/// Deterministic source for randomized verification; a fixed seed yields the
/// same draws on every run.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::mt19937_64& engine() { return engine_; }

    double normal() { return normal_(engine_); }
    std::size_t uniform(std::size_t lo, std::size_t hi);  // inclusive bounds

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Random n×n unitary from Gram-Schmidt orthonormalisation of a complex
/// Gaussian matrix.
ComplexMatrix random_unitary(std::size_t n, Rng& rng);

/// Haar-ish random normalised state over (C^d)^⊗k.
StateVector random_state(std::size_t d, std::size_t k, Rng& rng);

/// Random mixture of `terms` random pure states with random weights.
DensityOperator random_density(std::size_t d, std::size_t k, std::size_t terms, Rng& rng);

/// `count` distinct positions drawn from 1..k, in random order.
std::vector<std::size_t> random_positions(std::size_t k, std::size_t count, Rng& rng);

}  // namespace blockgate
