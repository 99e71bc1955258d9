#pragma once

// Box-addition chains through the Young lattice. m_{mu/alpha} counts the
// length-k chains from alpha to mu whose every intermediate diagram has
// height <= d (the Schur-Weyl support condition). No closed form exists
// beyond two rows, so the DP is the authoritative path and the d=2
// determinant is a cross-check only.

#include "mpbt/bigint.hpp"
#include "mpbt/partition.hpp"

#include <map>
#include <stdexcept>

namespace mpbt {

// m_{mu/alpha}: number of k-step box-addition chains alpha -> mu with the
// height cap applied at every step. 0 when no chain exists.
inline BigInt path_count(const Partition& mu, const Partition& alpha, int k, int d) {
    if (k < 0 || mu.weight() != alpha.weight() + k)
        throw std::invalid_argument("path_count: weight(mu) must equal weight(alpha) + k");
    std::map<Partition, BigInt> level{{alpha, 1}};
    for (int step = 0; step < k; ++step) {
        std::map<Partition, BigInt> next;
        for (const auto& [p, cnt] : level)
            for (const Partition& q : add_box_targets(p, d))
                next[q] += cnt;
        level = std::move(next);
    }
    auto it = level.find(mu);
    return it == level.end() ? BigInt(0) : it->second;
}

// All counts m_{mu/alpha} for mu = alpha + k boxes at once; keys are the
// reachable targets only.
inline std::map<Partition, BigInt> path_counts_from(const Partition& alpha, int k, int d) {
    std::map<Partition, BigInt> level{{alpha, 1}};
    for (int step = 0; step < k; ++step) {
        std::map<Partition, BigInt> next;
        for (const auto& [p, cnt] : level)
            for (const Partition& q : add_box_targets(p, d))
                next[q] += cnt;
        level = std::move(next);
    }
    return level;
}

// Two-row determinant evaluation of m_{mu/alpha} (Aitken-type):
//   k! * det [ 1/(mu_i - alpha_j - i + j)! ]_{i,j=1..2},
// with 1/x! = 0 for x < 0, evaluated in exact rationals. For height <= 2
// every intermediate diagram is automatically sandwiched between alpha and
// mu, so this must agree with path_count(..., d=2).
inline BigInt path_count_det_d2(const Partition& mu, const Partition& alpha, int k) {
    if (mu.height() > 2 || alpha.height() > 2)
        throw std::invalid_argument("path_count_det_d2: height must be <= 2");
    if (k < 0 || mu.weight() != alpha.weight() + k)
        throw std::invalid_argument("path_count_det_d2: weight mismatch");
    auto invFact = [](int x) -> Rational {
        if (x < 0) return 0;
        return Rational(1, factorial(static_cast<unsigned>(x)));
    };
    // entry (i,j): 1 / (mu_i - alpha_j - i + j)!  with i,j in {1,2}
    const Rational a11 = invFact(mu.row(0) - alpha.row(0));
    const Rational a12 = invFact(mu.row(0) - alpha.row(1) + 1);
    const Rational a21 = invFact(mu.row(1) - alpha.row(0) - 1);
    const Rational a22 = invFact(mu.row(1) - alpha.row(1));
    const Rational det = a11 * a22 - a12 * a21;
    const Rational result = Rational(factorial(static_cast<unsigned>(k))) * det;
    if (denominator(result) != 1)
        throw std::logic_error("path_count_det_d2: non-integer determinant value");
    return numerator(result);
}

}  // namespace mpbt
