#pragma once

// Generalised teleportation matrix M_F^{d,k}: partition-indexed, symmetric,
// non-negative integer entries
//   (M)_{mu,nu} = sum over common k-subtractable alpha of
//                 m_{mu/alpha} * m_{nu/alpha},
// so M = P^T P for the path-count matrix P[alpha][mu] = m_{mu/alpha}.
// Its maximal eigenvalue over d^{2k} is the optimal deterministic fidelity.

#include "mpbt/bigint.hpp"
#include "mpbt/partition.hpp"
#include "mpbt/partition_table.hpp"
#include "mpbt/paths.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace mpbt {

class TeleMatrix {
  public:
    // Entries above this dimension are kept as symmetric sparse triples.
    static constexpr std::size_t kDenseLimit = 512;

    TeleMatrix(int N, int k, int d, std::vector<Partition> order,
               std::map<std::pair<int, int>, BigInt> upper)
        : N_(N), k_(k), d_(d), order_(std::move(order)) {
        dense_ = order_.size() <= kDenseLimit;
        if (dense_) {
            values_.assign(order_.size() * order_.size(), BigInt(0));
            for (auto& [ij, v] : upper) {
                values_[index(ij.first, ij.second)] = v;
                values_[index(ij.second, ij.first)] = v;
            }
        } else {
            for (auto& [ij, v] : upper)
                triples_.emplace_back(ij.first, ij.second, std::move(v));
        }
    }

    int N() const { return N_; }
    int k() const { return k_; }
    int d() const { return d_; }
    const std::vector<Partition>& order() const { return order_; }
    std::size_t dim() const { return order_.size(); }

    BigInt entry(std::size_t i, std::size_t j) const {
        if (dense_) return values_[index(i, j)];
        if (i > j) std::swap(i, j);
        for (const auto& [a, b, v] : triples_)
            if (a == static_cast<int>(i) && b == static_cast<int>(j)) return v;
        return 0;
    }

    // symmetric triples with i <= j, nonzero entries only
    std::vector<std::tuple<int, int, BigInt>> nonzeros() const {
        if (!dense_) return triples_;
        std::vector<std::tuple<int, int, BigInt>> out;
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = i; j < dim(); ++j)
                if (values_[index(i, j)] != 0)
                    out.emplace_back(static_cast<int>(i), static_cast<int>(j),
                                     values_[index(i, j)]);
        return out;
    }

    // nonzero count of the full symmetric matrix
    std::size_t nnz() const {
        std::size_t count = 0;
        for (const auto& [i, j, v] : nonzeros()) count += (i == j) ? 1 : 2;
        return count;
    }

  private:
    std::size_t index(std::size_t i, std::size_t j) const { return i * dim() + j; }

    int N_, k_, d_;
    std::vector<Partition> order_;
    bool dense_ = true;
    std::vector<BigInt> values_;                       // dense storage
    std::vector<std::tuple<int, int, BigInt>> triples_;  // sparse storage
};

inline TeleMatrix build_telematrix(int N, int k, int d) {
    if (k < 1 || k > N)
        throw std::invalid_argument("build_telematrix: need 1 <= k <= N");
    const auto upperTable = partition_table(N, d);
    std::vector<Partition> order;
    std::map<Partition, int> position;
    for (const auto& e : upperTable->entries()) {
        position.emplace(e.shape, static_cast<int>(order.size()));
        order.push_back(e.shape);
    }
    std::map<std::pair<int, int>, BigInt> upper;
    for (const auto& a : partition_table(N - k, d)->entries()) {
        const auto counts = path_counts_from(a.shape, k, d);
        for (auto it = counts.begin(); it != counts.end(); ++it)
            for (auto jt = it; jt != counts.end(); ++jt) {
                int i = position.at(it->first);
                int j = position.at(jt->first);
                if (i > j) std::swap(i, j);
                upper[{i, j}] += it->second * jt->second;
            }
    }
    return TeleMatrix(N, k, d, std::move(order), std::move(upper));
}

struct EigenResult {
    double lambda_max = 0;
    std::vector<double> vector;  // unit-norm Perron vector, order-indexed
    long iterations = 0;
    double residual = 0;
    bool strictly_positive = true;
};

namespace detail {

struct MatvecMatrix {
    std::size_t dim;
    std::vector<std::tuple<int, int, double>> triples;  // i <= j

    explicit MatvecMatrix(const TeleMatrix& m) : dim(m.dim()) {
        for (const auto& [i, j, v] : m.nonzeros())
            triples.emplace_back(i, j, static_cast<double>(v));
    }

    std::vector<double> apply(const std::vector<double>& v) const {
        std::vector<double> w(dim, 0.0);
        for (const auto& [i, j, x] : triples) {
            w[i] += x * v[j];
            if (i != j) w[j] += x * v[i];
        }
        return w;
    }

    double max_row_sum() const {
        std::vector<double> sums(dim, 0.0);
        for (const auto& [i, j, x] : triples) {
            sums[i] += x;
            if (i != j) sums[j] += x;
        }
        double r = 0;
        for (double s : sums) r = std::max(r, s);
        return r;
    }

    double max_diagonal() const {
        double r = 0;
        for (const auto& [i, j, x] : triples)
            if (i == j) r = std::max(r, x);
        return r;
    }
};

inline double dense_lambda_max(const MatvecMatrix& m) {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(m.dim),
                                              static_cast<Eigen::Index>(m.dim));
    for (const auto& [i, j, x] : m.triples) {
        a(i, j) = x;
        a(j, i) = x;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    return solver.eigenvalues().maxCoeff();
}

}  // namespace detail

// Dominant eigenpair by power iteration on the Gershgorin-shifted matrix,
// all-ones start. The shift keeps a negative eigenvalue of matching modulus
// from stalling the iteration; the Rayleigh quotient is still taken against
// the unshifted matrix.
inline EigenResult lambda_max(const TeleMatrix& m) {
    if (m.dim() == 0) throw std::invalid_argument("lambda_max: empty matrix");
    constexpr double kRayleighTol = 1e-12;
    constexpr long kMaxIterations = 1000000;

    const detail::MatvecMatrix a(m);
    const double shift = a.max_row_sum();

    std::vector<double> v(m.dim(), 1.0 / std::sqrt(static_cast<double>(m.dim())));
    double lambda = 0, prev = 0, residual = 0;
    long iter = 0;
    for (; iter < kMaxIterations; ++iter) {
        std::vector<double> av = a.apply(v);
        lambda = 0;
        for (std::size_t i = 0; i < v.size(); ++i) lambda += v[i] * av[i];
        residual = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            const double r = av[i] - lambda * v[i];
            residual += r * r;
        }
        residual = std::sqrt(residual);
        if (iter > 0 && std::abs(lambda - prev) <= kRayleighTol * std::max(1.0, std::abs(lambda)) &&
            residual <= 1e-10 * std::max(lambda, 1e-300))
            break;
        prev = lambda;
        // w = (A + shift I) v, normalized
        double norm = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            av[i] += shift * v[i];
            norm += av[i] * av[i];
        }
        norm = std::sqrt(norm);
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = av[i] / norm;
    }
    if (iter == kMaxIterations)
        throw std::runtime_error("lambda_max: power iteration did not converge, residual " +
                                 std::to_string(residual));

    EigenResult result;
    result.lambda_max = lambda;
    result.vector = v;
    result.iterations = iter;
    result.residual = residual;
    for (double x : v)
        if (!(x > 1e-12)) result.strictly_positive = false;

    // Perron bounds, checked on every solve
    const double slack = 1e-9 * std::max(1.0, lambda);
    if (lambda < a.max_diagonal() - slack || lambda > a.max_row_sum() + slack)
        throw std::logic_error("lambda_max: Perron bounds violated");
    // dense cross-check at small dimension
    if (m.dim() <= 64) {
        const double dense = detail::dense_lambda_max(a);
        if (std::abs(dense - lambda) > 1e-10 * std::max(1.0, std::abs(dense)))
            throw std::logic_error("lambda_max: power iteration disagrees with dense solver");
    }
    return result;
}

// Optimal deterministic entanglement fidelity: lambda_max(M_F^{d,k}) / d^{2k}.
inline double fidelity_opt(int N, int k, int d) {
    const TeleMatrix m = build_telematrix(N, k, d);
    return lambda_max(m).lambda_max /
           static_cast<double>(pow_int(d, 2 * static_cast<unsigned>(k)));
}

}  // namespace mpbt
