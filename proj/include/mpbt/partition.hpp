#pragma once

// Integer partitions / Young diagrams: the universal index type for
// symmetric-group irreps, plus hook-length dimension and Schur-Weyl
// multiplicity formulas.

#include "mpbt/bigint.hpp"

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mpbt {

class Partition {
  public:
    Partition() = default;

    Partition(std::initializer_list<int> rows) : rows_(rows) { validate(); }

    explicit Partition(std::vector<int> rows) : rows_(std::move(rows)) { validate(); }

    const std::vector<int>& rows() const { return rows_; }
    int height() const { return static_cast<int>(rows_.size()); }
    bool empty() const { return rows_.empty(); }

    int row(int i) const { return i < height() ? rows_[i] : 0; }

    int weight() const {
        int n = 0;
        for (int r : rows_) n += r;
        return n;
    }

    auto operator<=>(const Partition&) const = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(rows_[i]);
        }
        return s + "]";
    }

  private:
    void validate() const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (rows_[i] <= 0)
                throw std::invalid_argument("Partition: rows must be positive");
            if (i + 1 < rows_.size() && rows_[i] < rows_[i + 1])
                throw std::invalid_argument("Partition: rows must be weakly decreasing");
        }
    }

    std::vector<int> rows_;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << p.str();
}

// All partitions of n with height <= d, strongly decreasing lexicographic:
// (n) first, heights weakly increasing along the list.
inline std::vector<Partition> enumerate_partitions(int n, int d) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
    if (d < 1) throw std::invalid_argument("enumerate_partitions: d < 1");
    std::vector<Partition> out;
    std::vector<int> rows;
    auto rec = [&](auto&& self, int rest, int maxPart, int rowsLeft) -> void {
        if (rest == 0) {
            out.emplace_back(rows);
            return;
        }
        if (rowsLeft == 0) return;
        // descending first part => descending lexicographic output
        int lo = (rest + rowsLeft - 1) / rowsLeft;  // ceil: must fit in rowsLeft rows
        for (int a = std::min(rest, maxPart); a >= lo; --a) {
            rows.push_back(a);
            self(self, rest - a, a, rowsLeft - 1);
            rows.pop_back();
        }
    };
    rec(rec, n, n, d);
    return out;
}

inline BigInt hook_product(const Partition& p) {
    const auto& r = p.rows();
    const int h = p.height();
    std::vector<int> colHeights(h ? r[0] : 0, 0);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < r[i]; ++j) ++colHeights[j];
    BigInt prod = 1;
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < r[i]; ++j)
            prod *= (r[i] - j) + (colHeights[j] - i) - 1;
    return prod;
}

// Dimension of the S(n) irrep labelled by p (hook length formula).
// The empty diagram gets dimension 1 so that identities stay valid at k = N.
inline BigInt dim_sym(const Partition& p) {
    if (p.empty()) return 1;
    return factorial(static_cast<unsigned>(p.weight())) / hook_product(p);
}

// Multiplicity of the irrep p in the swap representation on (C^d)^{x n},
// i.e. the GL(d) Weyl dimension: prod over cells (d + col - row) / hook.
// Vanishes automatically when h(p) > d (zero content factor).
inline BigInt mult_sw(const Partition& p, int d) {
    if (d < 1) throw std::invalid_argument("mult_sw: d < 1");
    if (p.height() > d) return 0;
    BigInt num = 1;
    const auto& r = p.rows();
    for (int i = 0; i < p.height(); ++i)
        for (int j = 0; j < r[i]; ++j)
            num *= d + j - i;
    return num / hook_product(p);
}

// Diagrams one box larger, height capped at d; generated row by row from
// the top, which is strongly decreasing lexicographic order.
inline std::vector<Partition> add_box_targets(const Partition& p, int d) {
    std::vector<Partition> out;
    const int h = p.height();
    for (int i = 0; i < h; ++i) {
        if (i > 0 && p.row(i) == p.row(i - 1)) continue;  // would break monotonicity
        std::vector<int> rows = p.rows();
        ++rows[i];
        out.emplace_back(std::move(rows));
    }
    if (h < d) {
        std::vector<int> rows = p.rows();
        rows.push_back(1);
        out.emplace_back(std::move(rows));
    }
    return out;
}

// Diagrams one box smaller, generated row by row from the top.
inline std::vector<Partition> remove_box_targets(const Partition& p) {
    std::vector<Partition> out;
    const int h = p.height();
    for (int i = 0; i < h; ++i) {
        if (i + 1 < h && p.row(i) == p.row(i + 1)) continue;
        std::vector<int> rows = p.rows();
        if (--rows[i] == 0) rows.pop_back();
        out.emplace_back(std::move(rows));
    }
    return out;
}

}  // namespace mpbt
