#pragma once

// Closed-form performance metrics for the four protocol variants, the
// optimizer coefficients behind the optimal schemes, and asymptotic scans
// of k(N). Success probabilities are exact rationals; fidelities carry
// square roots of integers and are evaluated in compensated floating point
// with extended-precision radicands (documented accuracy 1e-12).

#include "mpbt/bigint.hpp"
#include "mpbt/identities.hpp"
#include "mpbt/partition.hpp"
#include "mpbt/partition_table.hpp"
#include "mpbt/paths.hpp"
#include "mpbt/spectral.hpp"
#include "mpbt/telematrix.hpp"

#include <array>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>
#include <utility>
#include <vector>

namespace mpbt {

namespace detail {

inline void check_Nk(int N, int k, const char* who) {
    if (k < 1 || k > N)
        throw std::invalid_argument(std::string(who) + ": need 1 <= k <= N");
}

struct KahanSum {
    double total = 0, carry = 0;
    void add(double x) {
        const double y = x - carry;
        const double t = total + y;
        carry = (t - total) - y;
        total = t;
    }
};

}  // namespace detail

// --- optimal probabilistic success probability, three evaluation routes ---

inline Rational prob_opt_factorial(int N, int k, int d) {
    detail::check_Nk(N, k, "prob_opt");
    const unsigned dd = static_cast<unsigned>(d) * static_cast<unsigned>(d);
    return Rational(factorial(N) * factorial(dd + N - k - 1),
                    factorial(N - k) * factorial(dd + N - 1));
}

inline Rational prob_opt_binomial(int N, int k, int d) {
    detail::check_Nk(N, k, "prob_opt");
    return Rational(binomial(N, k), binomial(N + d * d - 1, k));
}

inline Rational prob_opt_product(long long N, long long k, int d) {
    if (k < 1 || k > N)
        throw std::invalid_argument("prob_opt_product: need 1 <= k <= N");
    BigInt num = 1, den = 1;
    for (int i = 2; i <= d * d; ++i) {
        num *= BigInt(N - 1 + i - k);
        den *= BigInt(N - 1 + i);
    }
    return Rational(num, den);
}

inline Rational prob_opt(int N, int k, int d) {
    return prob_opt_factorial(N, k, d);
}

// --- non-optimal probabilistic success probability ---
// p = (k! C(N,k) / d^(2N)) * sum over alpha of min over mu in alpha of
// m_alpha d_alpha / lambda_mu(alpha); the min lands on the largest
// eigenvalue in the alpha block, compared exactly.
inline Rational prob_nonopt(int N, int k, int d) {
    detail::check_Nk(N, k, "prob_nonopt");
    Rational sum = 0;
    for (const auto& a : partition_table(N - k, d)->entries()) {
        bool first = true;
        Rational lambdaMax;
        for (const auto& [mu, count] : path_counts_from(a.shape, k, d)) {
            const Rational lambda = rho_eigenvalue(a.shape, mu, N, k, d);
            if (first || lambda > lambdaMax) lambdaMax = lambda;
            first = false;
        }
        if (first) continue;  // no reachable mu with h <= d
        sum += Rational(a.mult * a.dim) / lambdaMax;
    }
    const BigInt measurements = factorial(N) / factorial(N - k);
    return Rational(measurements, pow_int(d, 2 * static_cast<unsigned>(N))) * sum;
}

// --- non-optimal deterministic entanglement fidelity ---
// F = (1/d^(N+2k)) * sum over alpha of (sum over mu of m_{mu/alpha}
// sqrt(m_mu d_mu))^2.
inline double fid_nonopt(int N, int k, int d) {
    detail::check_Nk(N, k, "fid_nonopt");
    const auto upper = partition_table(N, d);
    detail::KahanSum outer;
    for (const auto& a : partition_table(N - k, d)->entries()) {
        detail::KahanSum inner;
        for (const auto& [mu, count] : path_counts_from(a.shape, k, d)) {
            const auto& m = upper->find(mu);
            inner.add(static_cast<double>(count) * sqrt_to_double(m.mult * m.dim));
        }
        outer.add(inner.total * inner.total);
    }
    return outer.total /
           static_cast<double>(BigFloat(pow_int(d, static_cast<unsigned>(N + 2 * k))));
}

// --- combined report -------------------------------------------------------

struct ProtocolReport {
    int N = 0, k = 0, d = 0;
    Rational p_opt;
    Rational p_nonopt;
    double f_opt = 0;
    double f_nonopt = 0;
};

inline ProtocolReport protocol_report(int N, int k, int d) {
    detail::check_Nk(N, k, "protocol_report");
    ProtocolReport r;
    r.N = N;
    r.k = k;
    r.d = d;
    r.p_opt = prob_opt(N, k, d);
    r.p_nonopt = prob_nonopt(N, k, d);
    r.f_opt = fidelity_opt(N, k, d);
    r.f_nonopt = fid_nonopt(N, k, d);
    return r;
}

// Sweep cells run in a small work pool; the returned order matches the
// input order regardless of completion order.
inline std::vector<ProtocolReport> run_sweep(const std::vector<std::array<int, 3>>& cells) {
    std::vector<ProtocolReport> out(cells.size());
    const unsigned workers =
        std::max(1u, std::min(std::thread::hardware_concurrency(),
                              static_cast<unsigned>(cells.size())));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < cells.size(); i += workers)
                out[i] = protocol_report(cells[i][0], cells[i][1], cells[i][2]);
        });
    for (auto& t : pool) t.join();
    return out;
}

// --- optimizer coefficients -------------------------------------------------

enum class Scheme { probabilistic, deterministic };

struct OptimizerCoefficients {
    Scheme scheme = Scheme::probabilistic;

    // probabilistic scheme (exact)
    Rational g;                                              // 1 / sum m_nu^2
    std::map<Partition, Rational> u;                         // alpha -> u(alpha)
    std::map<Partition, Rational> c;                         // mu -> c_mu
    std::map<std::pair<Partition, Partition>, Rational> x;   // (alpha,mu) -> x_mu(alpha)

    // deterministic scheme (floats; v from the Perron eigenvector)
    std::map<Partition, double> v;                               // mu -> v_mu
    std::map<Partition, double> c_det;                           // mu -> c_mu
    std::map<std::pair<Partition, Partition>, double> p_coeff;   // (alpha,mu) -> p_mu(alpha)
};

// u(alpha) = d^(N+k) g m_alpha / (k! C(N,k) d_alpha),  c_mu = d^N g m_mu / d_mu,
// x_mu(alpha) = d^k p m_mu / (m_{mu/alpha} m_alpha).
// The defining relation u(alpha) gamma_mu(alpha) = d^k c_mu is re-derived for
// every pair before returning; a violation is an implementation bug.
inline OptimizerCoefficients coeffs_prob(int N, int k, int d) {
    detail::check_Nk(N, k, "coeffs_prob");
    OptimizerCoefficients out;
    out.scheme = Scheme::probabilistic;
    const auto lower = partition_table(N - k, d);
    const auto upper = partition_table(N, d);
    const BigInt measurements = factorial(N) / factorial(N - k);
    const BigInt dN = pow_int(d, static_cast<unsigned>(N));
    const BigInt dNk = pow_int(d, static_cast<unsigned>(N + k));
    const BigInt dk = pow_int(d, static_cast<unsigned>(k));

    out.g = Rational(1, upper->sum_squared_mults());
    for (const auto& a : lower->entries())
        out.u[a.shape] = Rational(dNk * a.mult, measurements * a.dim) * out.g;
    for (const auto& m : upper->entries())
        out.c[m.shape] = Rational(dN * m.mult, m.dim) * out.g;

    const Rational p = prob_opt(N, k, d);
    for (const auto& a : lower->entries())
        for (const auto& [mu, count] : path_counts_from(a.shape, k, d)) {
            const auto& m = upper->find(mu);
            out.x[{a.shape, mu}] = Rational(dk * m.mult, count * a.mult) * p;
            const Rational gamma = rho_gamma(a.shape, mu, N, k, d);
            if (out.u[a.shape] * gamma != Rational(dk) * out.c[mu])
                throw std::logic_error("coeffs_prob: relation u*gamma = d^k*c violated");
        }
    return out;
}

// p_mu(alpha) = (d^N / sqrt(k! C(N,k))) sqrt(m_alpha/d_alpha) v_mu / m_mu,
// c_mu = d^N v_mu^2 / (m_mu d_mu), with v the unit Perron eigenvector of
// the teleportation matrix for the same (N,k,d).
inline OptimizerCoefficients coeffs_det(int N, int k, int d, const EigenResult& eig) {
    detail::check_Nk(N, k, "coeffs_det");
    const TeleMatrix m = build_telematrix(N, k, d);
    if (eig.vector.size() != m.dim())
        throw std::invalid_argument("coeffs_det: eigenvector size mismatch");
    double norm2 = 0;
    for (double x : eig.vector) {
        if (!(x > 0))
            throw std::invalid_argument("coeffs_det: eigenvector must be strictly positive");
        norm2 += x * x;
    }
    OptimizerCoefficients out;
    out.scheme = Scheme::deterministic;
    const auto upper = partition_table(N, d);
    const double dN = static_cast<double>(pow_int(d, static_cast<unsigned>(N)));
    const double sqrtMeasurements =
        std::sqrt(static_cast<double>(factorial(N) / factorial(N - k)));
    std::vector<double> v = eig.vector;
    for (double& x : v) x /= std::sqrt(norm2);  // enforce sum v^2 = 1

    for (std::size_t i = 0; i < m.dim(); ++i) {
        const auto& e = upper->find(m.order()[i]);
        out.v[e.shape] = v[i];
        out.c_det[e.shape] =
            dN * v[i] * v[i] / static_cast<double>(e.mult * e.dim);
    }
    for (const auto& a : partition_table(N - k, d)->entries()) {
        const double rootRatio = std::sqrt(static_cast<double>(a.mult) /
                                           static_cast<double>(a.dim));
        for (const auto& [mu, count] : path_counts_from(a.shape, k, d)) {
            const auto& e = upper->find(mu);
            out.p_coeff[{a.shape, mu}] = dN / sqrtMeasurements * rootRatio *
                                         out.v[mu] / static_cast<double>(e.mult);
        }
    }
    return out;
}

// --- asymptotics ------------------------------------------------------------

struct AsymptoticPoint {
    long long N = 0;
    long long k = 0;
    Rational p;
    double p_float = 0;
    bool increased = false;  // strictly larger than the previous scan point
};

// Evaluates p through the product form, which stays cheap at N ~ 1e6 where
// the factorial route would be enormous.
inline std::vector<AsymptoticPoint> asymptotic_scan(
    const std::function<long long(long long)>& kOfN,
    const std::vector<long long>& Ns, int d) {
    std::vector<AsymptoticPoint> out;
    for (long long N : Ns) {
        AsymptoticPoint pt;
        pt.N = N;
        pt.k = kOfN(N);
        if (pt.k < 1 || pt.k > N)
            throw std::invalid_argument("asymptotic_scan: k(N) out of range");
        pt.p = prob_opt_product(N, pt.k, d);
        pt.p_float = to_double(pt.p);
        pt.increased = !out.empty() && pt.p > out.back().p;
        out.push_back(std::move(pt));
    }
    return out;
}

}  // namespace mpbt
