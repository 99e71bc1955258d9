#pragma once

// Multiplicity identities of the swap representation: the squared-mult sum
// evaluated both directly and through the character sum over conjugacy
// classes, and the k-step ratio that turns the sum into the closed-form
// success probability.

#include "mpbt/bigint.hpp"
#include "mpbt/partition.hpp"
#include "mpbt/partition_table.hpp"

#include <stdexcept>
#include <utility>

namespace mpbt {

// |conjugacy class| of cycle type t in S(n): n! / prod_j j^{c_j} c_j!
inline BigInt conjugacy_class_size(const Partition& cycleType) {
    const int n = cycleType.weight();
    BigInt denom = 1;
    int runLength = 0;
    const auto& rows = cycleType.rows();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ++runLength;
        denom *= rows[i];
        if (i + 1 == rows.size() || rows[i + 1] != rows[i]) {
            denom *= factorial(static_cast<unsigned>(runLength));
            runLength = 0;
        }
    }
    return factorial(static_cast<unsigned>(n)) / denom;
}

// Sum of m_nu^2 over nu |- n, h <= d, from the multiplicities themselves.
inline BigInt sum_squared_mults_direct(int n, int d) {
    return partition_table(n, d)->sum_squared_mults();
}

// Same sum as (1/n!) * sum over classes of |class| * d^(2 * cycles), where
// the cycle count includes fixed points. Conjugacy classes are enumerated
// as cycle types, i.e. unrestricted partitions of n.
inline BigInt sum_squared_mults_characters(int n, int d) {
    BigInt total = 0;
    for (const Partition& t : enumerate_partitions(n, n == 0 ? 1 : n))
        total += conjugacy_class_size(t) *
                 pow_int(d, 2 * static_cast<unsigned>(t.height()));
    const BigInt nf = factorial(static_cast<unsigned>(n));
    if (total % nf != 0)
        throw std::logic_error("sum_squared_mults_characters: non-integer character sum");
    return total / nf;
}

// Both evaluation paths, checked against each other.
inline BigInt sum_squared_mults(int n, int d) {
    const BigInt direct = sum_squared_mults_direct(n, d);
    const BigInt viaCharacters = sum_squared_mults_characters(n, d);
    if (direct != viaCharacters)
        throw std::logic_error("sum_squared_mults: evaluation paths disagree");
    return direct;
}

// lhs = sum m_nu^2 (nu |- N) / sum m_alpha^2 (alpha |- N-k),
// rhs = prod_{j=0}^{k-1} (d^2 + N - 1 - j)/(N - j).
// Returned as a pair so callers can test the identity itself.
inline std::pair<Rational, Rational> ratio_identity_check(int N, int k, int d) {
    if (k < 1 || k > N - 1)
        throw std::invalid_argument("ratio_identity_check: need 1 <= k <= N-1");
    const Rational lhs(sum_squared_mults_direct(N, d),
                       sum_squared_mults_direct(N - k, d));
    Rational rhs = 1;
    for (int j = 0; j < k; ++j)
        rhs *= Rational(d * d + N - 1 - j, N - j);
    return {lhs, rhs};
}

}  // namespace mpbt
