#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "blockgate/gates.hpp"
#include "blockgate/matrix.hpp"

namespace blockgate {

/// Normalised pure state over (C^d)^⊗k, wire 1 being the most significant
/// digit of the amplitude index.
struct StateVector {
    std::size_t d = 2;
    std::size_t k = 1;
    std::vector<Complex> amplitudes;
};

/// Mixed state over (C^d)^⊗k: Hermitian, unit trace, and positivity-sanity
/// checked (non-negative diagonal after symmetrisation, Tr(ρ²) <= 1).
struct DensityOperator {
    std::size_t d = 2;
    std::size_t k = 1;
    ComplexMatrix matrix;
};

/// Wires whose output is required to read "true" (1) when evaluating a
/// multi-target truth probability; every other wire is a control position.
struct TargetMask {
    std::size_t k = 1;
    std::set<std::size_t> targets;
};

StateVector make_state(std::size_t d, std::size_t k, std::vector<Complex> amplitudes);
DensityOperator make_density(std::size_t d, std::size_t k, ComplexMatrix matrix);
TargetMask make_target_mask(std::size_t k, std::set<std::size_t> targets);

/// Promotion of a pure state to its rank-one density operator |x⟩⟨x|.
DensityOperator density_from_state(const StateVector& state);

/// Unitary channel ρ ↦ UρU†. Validates that U is unitary and shape-compatible.
DensityOperator apply_channel(const ComplexMatrix& unitary, const DensityOperator& rho);

/// Probability that the last wire reads 1: Tr((I ⊗ P₁)ρ). Qubit registers only.
double truth_probability(const DensityOperator& rho);
double truth_probability(const StateVector& state);

/// Multi-target probability Tr[(⊗ᵢ 𝒫ᵢ)·UρU†] with 𝒫ᵢ = P₁ on target wires
/// and I elsewhere. Qubit registers only.
double mt_probability(const ComplexMatrix& unitary, const DensityOperator& rho,
                      const TargetMask& mask);
double mt_probability(const ComplexMatrix& unitary, const StateVector& state,
                      const TargetMask& mask);

/// Conjugated two-target projector for a two-qubit gate placed with gap
/// parameter n >= 1: the 2^(n+1)-dimensional Hermitian block grid built from
/// the gate's lower sub-blocks V₀ = U₂₁, V₁ = U₂₂ as block (a, b) =
/// I_{2^(n-1)} ⊗ (V_a† P₁ V_b).
ComplexMatrix lambda_operator(const GateSpec& gate, std::size_t n);

/// Fast path for a two-qubit gate on wires m < q with both wires targeted:
/// Tr[(I ⊗ Λ ⊗ I)ρ], never building the 2^k embedded unitary.
double mt_probability_fast(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q,
                           const DensityOperator& rho);
double mt_probability_fast(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q,
                           const StateVector& state);

}  // namespace blockgate
