#include "blockgate/qcl.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace blockgate {

namespace {

// Range violations beyond this are reported as errors instead of clamped.
constexpr double kProbabilitySlack = 1e-8;

double finalize_probability(Complex value) {
    if (std::abs(value.imag()) > kProbabilitySlack) {
        throw std::runtime_error("probability has a non-real trace (imaginary part " +
                                 std::to_string(value.imag()) + ")");
    }
    const double p = value.real();
    if (p < -kProbabilitySlack || p > 1.0 + kProbabilitySlack) {
        throw std::runtime_error("probability " + std::to_string(p) + " outside [0,1]");
    }
    return std::clamp(p, 0.0, 1.0);
}

ComplexMatrix mask_projector(const TargetMask& mask) {
    const ComplexMatrix p1 = projector(2, 1, 1);
    const ComplexMatrix eye = ComplexMatrix::identity(2);
    ComplexMatrix out = mask.targets.count(1) ? p1 : eye;
    for (std::size_t wire = 2; wire <= mask.k; ++wire) {
        out = kron(out, mask.targets.count(wire) ? p1 : eye);
    }
    return out;
}

void require_qubits(std::size_t d, const char* what) {
    if (d != 2) {
        throw std::invalid_argument(std::string(what) +
                                    " is defined for qubit registers (d = 2), got d = " +
                                    std::to_string(d));
    }
}

}  // namespace

StateVector make_state(std::size_t d, std::size_t k, std::vector<Complex> amplitudes) {
    if (d < 2 || k < 1) {
        throw std::invalid_argument("state needs d >= 2 and k >= 1");
    }
    const std::size_t dim = checked_power(d, k);
    if (amplitudes.size() != dim) {
        throw std::invalid_argument("state needs " + std::to_string(dim) + " amplitudes, got " +
                                    std::to_string(amplitudes.size()));
    }
    double norm_sq = 0.0;
    for (const Complex& a : amplitudes) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw std::invalid_argument("state amplitudes must be finite");
        }
        norm_sq += std::norm(a);
    }
    if (std::abs(std::sqrt(norm_sq) - 1.0) > kEntryTol) {
        throw std::invalid_argument("state is not normalised (norm " +
                                    std::to_string(std::sqrt(norm_sq)) + ")");
    }
    return StateVector{d, k, std::move(amplitudes)};
}

DensityOperator make_density(std::size_t d, std::size_t k, ComplexMatrix matrix) {
    if (d < 2 || k < 1) {
        throw std::invalid_argument("density operator needs d >= 2 and k >= 1");
    }
    const std::size_t dim = checked_power(d, k);
    if (matrix.rows() != dim || matrix.cols() != dim) {
        throw std::invalid_argument("density operator must be " + std::to_string(dim) + "x" +
                                    std::to_string(dim) + ", got " + matrix.shape());
    }
    if (max_abs_diff(matrix, dagger(matrix)) > kEntryTol) {
        throw std::invalid_argument("density operator is not Hermitian within tolerance");
    }
    const Complex tr = trace(matrix);
    if (std::abs(tr - Complex{1.0, 0.0}) > kEntryTol) {
        throw std::invalid_argument("density operator trace is not 1 (got " +
                                    std::to_string(tr.real()) + ")");
    }
    double purity = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        if (matrix(i, i).real() < -kEntryTol) {
            throw std::invalid_argument("density operator has a negative diagonal entry");
        }
        for (std::size_t j = 0; j < dim; ++j) {
            purity += (matrix(i, j) * matrix(j, i)).real();
        }
    }
    if (purity > 1.0 + kEntryTol) {
        throw std::invalid_argument("density operator purity exceeds 1 (got " +
                                    std::to_string(purity) + ")");
    }
    return DensityOperator{d, k, std::move(matrix)};
}

TargetMask make_target_mask(std::size_t k, std::set<std::size_t> targets) {
    if (targets.empty()) {
        throw std::invalid_argument("target mask must name at least one wire");
    }
    for (std::size_t t : targets) {
        if (t < 1 || t > k) {
            throw std::invalid_argument("target wire " + std::to_string(t) +
                                        " out of range 1.." + std::to_string(k));
        }
    }
    return TargetMask{k, std::move(targets)};
}

DensityOperator density_from_state(const StateVector& state) {
    const std::size_t dim = state.amplitudes.size();
    ComplexMatrix rho(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            rho(i, j) = state.amplitudes[i] * std::conj(state.amplitudes[j]);
        }
    }
    return make_density(state.d, state.k, std::move(rho));
}

DensityOperator apply_channel(const ComplexMatrix& unitary, const DensityOperator& rho) {
    if (unitary.rows() != rho.matrix.rows() || unitary.cols() != rho.matrix.cols()) {
        throw std::invalid_argument("channel operator is " + unitary.shape() +
                                    " but the state is " + rho.matrix.shape());
    }
    if (!is_unitary(unitary, kEntryTol)) {
        throw std::invalid_argument("channel operator is not unitary within tolerance");
    }
    return make_density(rho.d, rho.k, matmul(matmul(unitary, rho.matrix), dagger(unitary)));
}

double truth_probability(const DensityOperator& rho) {
    require_qubits(rho.d, "truth_probability");
    TargetMask last{rho.k, {rho.k}};
    return finalize_probability(trace(matmul(mask_projector(last), rho.matrix)));
}

double truth_probability(const StateVector& state) {
    return truth_probability(density_from_state(state));
}

double mt_probability(const ComplexMatrix& unitary, const DensityOperator& rho,
                      const TargetMask& mask) {
    require_qubits(rho.d, "mt_probability");
    if (mask.k != rho.k) {
        throw std::invalid_argument("target mask covers " + std::to_string(mask.k) +
                                    " wires but the state has " + std::to_string(rho.k));
    }
    const DensityOperator evolved = apply_channel(unitary, rho);
    return finalize_probability(trace(matmul(mask_projector(mask), evolved.matrix)));
}

double mt_probability(const ComplexMatrix& unitary, const StateVector& state,
                      const TargetMask& mask) {
    return mt_probability(unitary, density_from_state(state), mask);
}

ComplexMatrix lambda_operator(const GateSpec& gate, std::size_t n) {
    if (gate.d != 2 || gate.arity != 2) {
        throw std::invalid_argument("lambda_operator needs a two-qubit gate");
    }
    if (n < 1) {
        throw std::invalid_argument("lambda_operator needs a gap parameter n >= 1");
    }
    // Lower sub-blocks of the 4×4 gate matrix.
    ComplexMatrix lower0(2, 2);  // U21
    ComplexMatrix lower1(2, 2);  // U22
    for (std::size_t r = 0; r < 2; ++r) {
        for (std::size_t c = 0; c < 2; ++c) {
            lower0(r, c) = gate.matrix(2 + r, c);
            lower1(r, c) = gate.matrix(2 + r, 2 + c);
        }
    }
    const ComplexMatrix p1 = projector(2, 1, 1);
    const ComplexMatrix pad = ComplexMatrix::identity(checked_power(2, n - 1));
    const ComplexMatrix blocks[2] = {lower0, lower1};
    ComplexMatrix out(checked_power(2, n + 1), checked_power(2, n + 1));
    for (std::size_t a = 0; a < 2; ++a) {
        for (std::size_t b = 0; b < 2; ++b) {
            const ComplexMatrix cell = matmul(matmul(dagger(blocks[a]), p1), blocks[b]);
            out = out + kron(projector(2, a, b), kron(pad, cell));
        }
    }
    return out;
}

double mt_probability_fast(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q,
                           const DensityOperator& rho) {
    require_qubits(rho.d, "mt_probability_fast");
    if (m < 1 || m >= q || q > k) {
        throw std::invalid_argument("mt_probability_fast requires 1 <= m < q <= k");
    }
    if (rho.k != k) {
        throw std::invalid_argument("state has " + std::to_string(rho.k) + " wires, expected " +
                                    std::to_string(k));
    }
    ComplexMatrix observable = lambda_operator(gate, q - m);
    if (m > 1) {
        observable = kron(ComplexMatrix::identity(checked_power(2, m - 1)), observable);
    }
    if (q < k) {
        observable = kron(observable, ComplexMatrix::identity(checked_power(2, k - q)));
    }
    return finalize_probability(trace(matmul(observable, rho.matrix)));
}

double mt_probability_fast(const GateSpec& gate, std::size_t k, std::size_t m, std::size_t q,
                           const StateVector& state) {
    return mt_probability_fast(gate, k, m, q, density_from_state(state));
}

}  // namespace blockgate
