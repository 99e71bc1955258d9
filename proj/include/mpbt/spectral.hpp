#pragma once

// Exact spectrum of the port-sum operator rho: eigenvalues lambda_mu(alpha),
// their unnormalised counterparts gamma = d^N * lambda, and degeneracies
// tr F_mu(alpha) = m_{mu/alpha} * m_alpha * d_mu. The empty diagram (k = N)
// uses the convention m_empty = d_empty = 1.

#include "mpbt/bigint.hpp"
#include "mpbt/partition.hpp"
#include "mpbt/partition_table.hpp"
#include "mpbt/paths.hpp"

#include <stdexcept>
#include <vector>

namespace mpbt {

struct SpectrumEntry {
    Partition alpha;     // |- N-k
    Partition mu;        // |- N, reachable from alpha by k additions
    Rational lambda;     // eigenvalue of rho
    Rational gamma;      // d^N * lambda
    BigInt degeneracy;   // m_{mu/alpha} * m_alpha * d_mu
};

// lambda_mu(alpha) = (k! C(N,k) / d^N) * (m_mu / m_alpha) * (d_alpha / d_mu)
inline Rational rho_eigenvalue(const Partition& alpha, const Partition& mu,
                               int N, int k, int d) {
    if (k < 1 || k > N)
        throw std::invalid_argument("rho_eigenvalue: need 1 <= k <= N");
    if (alpha.weight() != N - k || mu.weight() != N)
        throw std::invalid_argument("rho_eigenvalue: weights must be N-k and N");
    if (path_count(mu, alpha, k, d) == 0)
        throw std::invalid_argument("rho_eigenvalue: mu not reachable from alpha");
    const BigInt measurements = factorial(static_cast<unsigned>(N)) /
                                factorial(static_cast<unsigned>(N - k));
    Rational lambda(measurements, pow_int(d, static_cast<unsigned>(N)));
    lambda *= Rational(mult_sw(mu, d), mult_sw(alpha, d));
    lambda *= Rational(dim_sym(alpha), dim_sym(mu));
    return lambda;
}

inline Rational rho_gamma(const Partition& alpha, const Partition& mu,
                          int N, int k, int d) {
    return rho_eigenvalue(alpha, mu, N, k, d) *
           Rational(pow_int(d, static_cast<unsigned>(N)));
}

// One entry per (alpha |- N-k, mu in alpha) pair with h <= d, in table order.
inline std::vector<SpectrumEntry> spectrum_table(int N, int k, int d) {
    if (k < 1 || k > N)
        throw std::invalid_argument("spectrum_table: need 1 <= k <= N");
    const auto lower = partition_table(N - k, d);
    const auto upper = partition_table(N, d);
    std::vector<SpectrumEntry> out;
    for (const auto& a : lower->entries()) {
        const auto reachable = path_counts_from(a.shape, k, d);
        for (const auto& m : upper->entries()) {
            auto it = reachable.find(m.shape);
            if (it == reachable.end()) continue;
            SpectrumEntry e;
            e.alpha = a.shape;
            e.mu = m.shape;
            e.lambda = rho_eigenvalue(a.shape, m.shape, N, k, d);
            e.gamma = e.lambda * Rational(pow_int(d, static_cast<unsigned>(N)));
            e.degeneracy = it->second * a.mult * m.dim;
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace mpbt
