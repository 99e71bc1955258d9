#pragma once

// Exact integer/rational arithmetic used throughout the library.
// All combinatorial quantities (dimensions, multiplicities, path counts)
// are exact; floating point appears only at API edges.

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpbt {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

inline BigInt factorial(unsigned n) {
    // thread_local: callers may evaluate grids from a work pool
    thread_local std::vector<BigInt> table{1};
    while (table.size() <= n)
        table.push_back(table.back() * static_cast<unsigned>(table.size()));
    return table[n];
}

inline BigInt binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;  // exact at every step
    }
    return r;
}

inline BigInt pow_int(const BigInt& base, unsigned exp) {
    BigInt r = 1, b = base;
    while (exp) {
        if (exp & 1) r *= b;
        b *= b;
        exp >>= 1;
    }
    return r;
}

// double(q) via 50-digit intermediate so huge numerators/denominators
// do not lose the quotient.
inline double to_double(const Rational& q) {
    const BigFloat num(boost::multiprecision::numerator(q));
    const BigFloat den(boost::multiprecision::denominator(q));
    return static_cast<double>(num / den);
}

inline double sqrt_to_double(const BigInt& n) {
    if (n < 0) throw std::domain_error("sqrt_to_double: negative radicand");
    return static_cast<double>(sqrt(BigFloat(n)));
}

inline std::string to_string(const Rational& q) {
    return numerator(q).str() + "/" + denominator(q).str();
}

// 15 significant digits, the CLI float convention
inline std::string format_float(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.15g", x);
    return buf;
}

}  // namespace mpbt
