#include <catch2/catch_amalgamated.hpp>

#include "mpbt/identities.hpp"
#include "mpbt/partition.hpp"
#include "mpbt/partition_table.hpp"
#include "mpbt/paths.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <vector>

using namespace mpbt;

namespace {

// Independent oracle: count standard Young tableaux of shape p by brute
// force (recursively place 1..n in row-and-column increasing positions).
long syt_count_brute(const Partition& p) {
    const int h = p.height();
    std::vector<int> filled(h, 0);  // boxes already placed per row
    auto rec = [&](auto&& self, int placed) -> long {
        if (placed == p.weight()) return 1;
        long total = 0;
        for (int i = 0; i < h; ++i) {
            if (filled[i] == p.row(i)) continue;
            if (i > 0 && filled[i - 1] <= filled[i]) continue;  // column violation
            ++filled[i];
            total += self(self, placed + 1);
            --filled[i];
        }
        return total;
    };
    return rec(rec, 0);
}

// Independent oracle: count semistandard tableaux with entries in 1..d
// (rows weakly increasing, columns strictly increasing).
long ssyt_count_brute(const Partition& p, int d) {
    const int h = p.height();
    std::vector<std::vector<int>> cell(h);
    for (int i = 0; i < h; ++i) cell[i].assign(p.row(i), 0);
    auto rec = [&](auto&& self, int i, int j) -> long {
        if (i == h) return 1;
        const int ni = (j + 1 == p.row(i)) ? i + 1 : i;
        const int nj = (j + 1 == p.row(i)) ? 0 : j + 1;
        long total = 0;
        for (int v = 1; v <= d; ++v) {
            if (j > 0 && v < cell[i][j - 1]) continue;
            if (i > 0 && j < p.row(i - 1) && v <= cell[i - 1][j]) continue;
            cell[i][j] = v;
            total += self(self, ni, nj);
        }
        cell[i][j] = 0;
        return total;
    };
    return rec(rec, 0, 0);
}

// Independent oracle: enumerate k-step box-addition chains directly on row
// vectors, without going through add_box_targets.
long chains_brute(const Partition& mu, const Partition& alpha, int k, int d) {
    auto rec = [&](auto&& self, std::vector<int> rows, int left) -> long {
        if (left == 0) {
            std::vector<int> target = mu.rows();
            return rows == target ? 1 : 0;
        }
        long total = 0;
        for (std::size_t i = 0; i <= rows.size(); ++i) {
            std::vector<int> next = rows;
            if (i == rows.size())
                next.push_back(1);
            else
                ++next[i];
            bool ok = static_cast<int>(next.size()) <= d;
            for (std::size_t r = 0; ok && r + 1 < next.size(); ++r)
                ok = next[r] >= next[r + 1];
            if (ok) total += self(self, std::move(next), left - 1);
        }
        return total;
    };
    return rec(rec, alpha.rows(), k);
}

}  // namespace

TEST_CASE("partition invariants and validation") {
    CHECK(Partition{}.weight() == 0);
    CHECK(Partition{4, 2, 1}.weight() == 7);
    CHECK(Partition{4, 2, 1}.height() == 3);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition{3, 1}.str() == "[3,1]");
}

TEST_CASE("enumerate: hand examples") {
    CHECK(enumerate_partitions(4, 2) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}});
    CHECK(enumerate_partitions(0, 3) == std::vector<Partition>{{}});
    CHECK(enumerate_partitions(3, 1) == std::vector<Partition>{{3}});
    CHECK(enumerate_partitions(4, 4) ==
          std::vector<Partition>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
}

TEST_CASE("enumerate: strictly decreasing lexicographic, heights <= d") {
    for (int n = 0; n <= 12; ++n)
        for (int d = 1; d <= 4; ++d) {
            const auto list = enumerate_partitions(n, d);
            for (std::size_t i = 0; i < list.size(); ++i) {
                CHECK(list[i].height() <= d);
                CHECK(list[i].weight() == n);
                if (i + 1 < list.size())
                    CHECK(list[i].rows() > list[i + 1].rows());  // strict desc lex
            }
            if (n >= 1) CHECK(list.front() == Partition{n});
        }
}

TEST_CASE("dim_sym: hook lengths vs standard tableaux count") {
    CHECK(dim_sym(Partition{2, 1}) == 2);
    CHECK(dim_sym(Partition{5}) == 1);
    CHECK(dim_sym(Partition{1, 1, 1}) == 1);
    for (int n = 1; n <= 7; ++n)
        for (const auto& p : enumerate_partitions(n, n))
            CHECK(dim_sym(p) == syt_count_brute(p));
}

TEST_CASE("mult_sw: Weyl formula vs semistandard tableaux count") {
    CHECK(mult_sw(Partition{2}, 2) == 3);
    CHECK(mult_sw(Partition{1, 1}, 2) == 1);
    CHECK(mult_sw(Partition{1, 1, 1}, 2) == 0);
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 3; ++d)
            for (const auto& p : enumerate_partitions(n, n))
                CHECK(mult_sw(p, d) == ssyt_count_brute(p, d));
}

TEST_CASE("box addition and removal targets") {
    CHECK(add_box_targets(Partition{2, 1}, 2) ==
          std::vector<Partition>{{3, 1}, {2, 2}});
    CHECK(add_box_targets(Partition{2, 1}, 3) ==
          std::vector<Partition>{{3, 1}, {2, 2}, {2, 1, 1}});
    CHECK(remove_box_targets(Partition{3, 1}) ==
          std::vector<Partition>{{2, 1}, {3}});
    CHECK(remove_box_targets(Partition{1}) == std::vector<Partition>{{}});
    CHECK(add_box_targets(Partition{}, 2) == std::vector<Partition>{{1}});

    // add and remove are adjoint relations on the Young lattice
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const int d = 1 + static_cast<int>(rng() % 4);
        const auto shapes = enumerate_partitions(n, d);
        const auto& p = shapes[rng() % shapes.size()];
        for (const auto& q : add_box_targets(p, d)) {
            const auto back = remove_box_targets(q);
            CHECK(std::find(back.begin(), back.end(), p) != back.end());
        }
    }
}

TEST_CASE("path_count: paper example and brute-force agreement") {
    CHECK(path_count(Partition{3, 1}, Partition{2}, 2, 2) == 2);
    CHECK(path_count(Partition{2}, Partition{2}, 0, 2) == 1);
    CHECK(path_count(Partition{2}, Partition{1}, 1, 2) == 1);
    CHECK_THROWS_AS(path_count(Partition{3}, Partition{1}, 1, 2),
                    std::invalid_argument);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 120; ++trial) {
        const int d = 1 + static_cast<int>(rng() % 4);
        const int na = static_cast<int>(rng() % 5);
        const int k = static_cast<int>(rng() % 4);
        const auto lowers = enumerate_partitions(na, d);
        const auto uppers = enumerate_partitions(na + k, d);
        if (lowers.empty() || uppers.empty()) continue;
        const auto& alpha = lowers[rng() % lowers.size()];
        const auto& mu = uppers[rng() % uppers.size()];
        CHECK(path_count(mu, alpha, k, d) == chains_brute(mu, alpha, k, d));
    }
}

TEST_CASE("path_count: k=1 counts are 0 or 1") {
    for (int n = 1; n <= 8; ++n)
        for (int d = 2; d <= 3; ++d)
            for (const auto& alpha : enumerate_partitions(n - 1, d))
                for (const auto& mu : enumerate_partitions(n, d)) {
                    const BigInt c = path_count(mu, alpha, 1, d);
                    CHECK((c == 0 || c == 1));
                }
}

TEST_CASE("path_count: removal recurrence self-consistency") {
    for (int n = 2; n <= 9; ++n)
        for (int d = 2; d <= 4; ++d)
            for (int k = 1; k <= std::min(3, n); ++k)
                for (const auto& alpha : enumerate_partitions(n - k, d))
                    for (const auto& mu : enumerate_partitions(n, d)) {
                        BigInt viaRemoval = 0;
                        if (k == 0) continue;
                        for (const auto& beta : remove_box_targets(mu))
                            if (beta.height() <= d)
                                viaRemoval += path_count(beta, alpha, k - 1, d);
                        CHECK(path_count(mu, alpha, k, d) == viaRemoval);
                    }
}

TEST_CASE("path_count_det_d2: determinant equals DP") {
    CHECK(path_count_det_d2(Partition{3, 1}, Partition{2}, 2) == 2);
    CHECK(path_count_det_d2(Partition{4}, Partition{2}, 2) == 1);
    CHECK(path_count_det_d2(Partition{2, 2}, Partition{2}, 2) == 1);
    CHECK_THROWS_AS(path_count_det_d2(Partition{2, 1, 1}, Partition{1}, 3),
                    std::invalid_argument);

    for (int n = 0; n <= 10; ++n)
        for (int k = 0; k <= 10 - n; ++k)
            for (const auto& alpha : enumerate_partitions(n, 2))
                for (const auto& mu : enumerate_partitions(n + k, 2))
                    CHECK(path_count_det_d2(mu, alpha, k) ==
                          path_count(mu, alpha, k, 2));
}

TEST_CASE("partition table: dimension count and ordering") {
    for (int n = 0; n <= 12; ++n)
        for (int d = 1; d <= 4; ++d) {
            const auto t = partition_table(n, d);
            BigInt total = 0;
            for (const auto& e : t->entries()) total += e.mult * e.dim;
            CHECK(total == pow_int(d, n));  // checked in ctor too
        }
    const auto t = partition_table(2, 2);
    CHECK(t->size() == 2);
    CHECK(t->at(0).shape == Partition{2});
    CHECK(t->at(0).mult == 3);
    CHECK(t->at(1).mult == 1);
}

TEST_CASE("partition table: memoized and JSON round-trip") {
    const auto a = partition_table(6, 3);
    const auto b = partition_table(6, 3);
    CHECK(a.get() == b.get());

    const PartitionTable t(5, 2);
    const auto parsed = PartitionTable::from_json(t.to_json());
    REQUIRE(parsed.size() == t.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
        CHECK(parsed.at(i).shape == t.at(i).shape);
        CHECK(parsed.at(i).dim == t.at(i).dim);
        CHECK(parsed.at(i).mult == t.at(i).mult);
    }
}

TEST_CASE("conjugacy class sizes partition the group") {
    for (int n = 1; n <= 8; ++n) {
        BigInt total = 0;
        for (const auto& t : enumerate_partitions(n, n))
            total += conjugacy_class_size(t);
        CHECK(total == factorial(n));
    }
    CHECK(conjugacy_class_size(Partition{1, 1, 1}) == 1);   // identity of S(3)
    CHECK(conjugacy_class_size(Partition{2, 1}) == 3);      // transpositions
    CHECK(conjugacy_class_size(Partition{3}) == 2);         // 3-cycles
}

TEST_CASE("sum of squared multiplicities: two paths") {
    CHECK(sum_squared_mults(2, 2) == 10);
    CHECK(sum_squared_mults(3, 2) == 20);
    for (int d = 1; d <= 4; ++d)
        CHECK(sum_squared_mults(1, d) == d * d);
    for (int n = 0; n <= 10; ++n)
        for (int d = 1; d <= 4; ++d)
            CHECK(sum_squared_mults_direct(n, d) ==
                  sum_squared_mults_characters(n, d));
}

TEST_CASE("ratio identity") {
    auto [l1, r1] = ratio_identity_check(2, 1, 2);
    CHECK(l1 == Rational(5, 2));
    CHECK(r1 == Rational(5, 2));
    auto [l2, r2] = ratio_identity_check(3, 1, 2);
    CHECK(l2 == 2);
    CHECK(r2 == 2);
    auto [l3, r3] = ratio_identity_check(3, 2, 2);
    CHECK(l3 == 5);
    CHECK(r3 == 5);
    for (int N = 2; N <= 10; ++N)
        for (int k = 1; k < N; ++k)
            for (int d = 1; d <= 3; ++d) {
                auto [lhs, rhs] = ratio_identity_check(N, k, d);
                CHECK(lhs == rhs);
            }
}
