#include "blockgate/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace blockgate {

std::size_t Rng::uniform(std::size_t lo, std::size_t hi) {
    std::uniform_int_distribution<std::size_t> dist(lo, hi);
    return dist(engine_);
}

ComplexMatrix random_unitary(std::size_t n, Rng& rng) {
    ComplexMatrix m(n, n);
    for (Complex& z : m.entries()) {
        z = Complex{rng.normal(), rng.normal()};
    }
    // Column-wise modified Gram-Schmidt with one reorthogonalisation pass.
    for (std::size_t j = 0; j < n; ++j) {
        for (int pass = 0; pass < 2; ++pass) {
            for (std::size_t prev = 0; prev < j; ++prev) {
                Complex dot{};
                for (std::size_t r = 0; r < n; ++r) {
                    dot += std::conj(m(r, prev)) * m(r, j);
                }
                for (std::size_t r = 0; r < n; ++r) {
                    m(r, j) -= dot * m(r, prev);
                }
            }
        }
        double norm_sq = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            norm_sq += std::norm(m(r, j));
        }
        const double norm = std::sqrt(norm_sq);
        if (norm < 1e-8) {
            throw std::runtime_error("degenerate draw while orthonormalising a random matrix");
        }
        for (std::size_t r = 0; r < n; ++r) {
            m(r, j) /= norm;
        }
    }
    return m;
}

StateVector random_state(std::size_t d, std::size_t k, Rng& rng) {
    const std::size_t dim = checked_power(d, k);
    std::vector<Complex> amps(dim);
    double norm_sq = 0.0;
    for (Complex& a : amps) {
        a = Complex{rng.normal(), rng.normal()};
        norm_sq += std::norm(a);
    }
    const double norm = std::sqrt(norm_sq);
    for (Complex& a : amps) {
        a /= norm;
    }
    return make_state(d, k, std::move(amps));
}

DensityOperator random_density(std::size_t d, std::size_t k, std::size_t terms, Rng& rng) {
    if (terms < 1) {
        throw std::invalid_argument("mixture needs at least one term");
    }
    const std::size_t dim = checked_power(d, k);
    std::vector<double> weights(terms);
    double total = 0.0;
    for (double& w : weights) {
        w = std::abs(rng.normal()) + 1e-3;
        total += w;
    }
    ComplexMatrix rho(dim, dim);
    for (std::size_t t = 0; t < terms; ++t) {
        const StateVector psi = random_state(d, k, rng);
        const double w = weights[t] / total;
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t j = 0; j < dim; ++j) {
                rho(i, j) += w * psi.amplitudes[i] * std::conj(psi.amplitudes[j]);
            }
        }
    }
    return make_density(d, k, std::move(rho));
}

std::vector<std::size_t> random_positions(std::size_t k, std::size_t count, Rng& rng) {
    if (count > k) {
        throw std::invalid_argument("cannot draw " + std::to_string(count) +
                                    " distinct positions from 1.." + std::to_string(k));
    }
    std::vector<std::size_t> all(k);
    std::iota(all.begin(), all.end(), 1);
    std::shuffle(all.begin(), all.end(), rng.engine());
    all.resize(count);
    return all;
}

}  // namespace blockgate
