#include <catch2/catch_amalgamated.hpp>

#include "mpbt/telematrix.hpp"

#include <cmath>

using namespace mpbt;

TEST_CASE("build: hand examples") {
    const auto m212 = build_telematrix(2, 1, 2);
    REQUIRE(m212.order() == std::vector<Partition>{{2}, {1, 1}});
    CHECK(m212.entry(0, 0) == 1);
    CHECK(m212.entry(0, 1) == 1);
    CHECK(m212.entry(1, 0) == 1);
    CHECK(m212.entry(1, 1) == 1);

    const auto m312 = build_telematrix(3, 1, 2);
    REQUIRE(m312.order() == std::vector<Partition>{{3}, {2, 1}});
    CHECK(m312.entry(0, 0) == 1);
    CHECK(m312.entry(0, 1) == 1);
    CHECK(m312.entry(1, 1) == 2);  // (2,1) reachable from (2) and (1,1)

    const auto m322 = build_telematrix(3, 2, 2);
    REQUIRE(m322.order() == std::vector<Partition>{{3}, {2, 1}});
    CHECK(m322.entry(0, 0) == 1);
    CHECK(m322.entry(0, 1) == 2);
    CHECK(m322.entry(1, 1) == 4);
}

TEST_CASE("build: symmetry, diagonal, k=1 adjacency structure") {
    for (int N = 1; N <= 12; ++N) {
        const auto m = build_telematrix(N, 1, 2);
        const auto& order = m.order();
        for (std::size_t i = 0; i < m.dim(); ++i) {
            CHECK(m.entry(i, i) >= 1);
            for (std::size_t j = i + 1; j < m.dim(); ++j) {
                CHECK(m.entry(i, j) == m.entry(j, i));
                const BigInt v = m.entry(i, j);
                CHECK((v == 0 || v == 1));  // k=1 off-diagonals are 0/1
                // d=2, k=1: partitions (N-r, r) are coupled iff adjacent r
                const bool adjacent =
                    order[i].row(1) + 1 == order[j].row(1) && j == i + 1;
                CHECK((v == 1) == adjacent);
            }
        }
    }
}

TEST_CASE("lambda_max: anchors") {
    CHECK(lambda_max(build_telematrix(2, 1, 2)).lambda_max ==
          Catch::Approx(2.0).epsilon(1e-12));
    CHECK(lambda_max(build_telematrix(3, 1, 2)).lambda_max ==
          Catch::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    const auto one = lambda_max(build_telematrix(1, 1, 5));
    CHECK(one.lambda_max == Catch::Approx(1.0));
    CHECK(one.vector.size() == 1);
}

TEST_CASE("lambda_max: Perron vector properties and residual") {
    for (int N = 2; N <= 10; ++N)
        for (int k = 1; k <= std::min(3, N); ++k)
            for (int d = 2; d <= 3; ++d) {
                const auto m = build_telematrix(N, k, d);
                const auto eig = lambda_max(m);
                CHECK(eig.residual <= 1e-10 * eig.lambda_max);
                CHECK(eig.strictly_positive);
                double norm2 = 0;
                for (double x : eig.vector) {
                    CHECK(x >= 0);
                    norm2 += x * x;
                }
                CHECK(norm2 == Catch::Approx(1.0).epsilon(1e-12));
            }
}

TEST_CASE("fidelity_opt: anchors and dominance vs diagonal bound") {
    CHECK(fidelity_opt(2, 1, 2) == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity_opt(3, 1, 2) ==
          Catch::Approx((3 + std::sqrt(5.0)) / 8).epsilon(1e-12));
    CHECK(fidelity_opt(1, 1, 2) == Catch::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("sparsity grows with k (qubits)") {
    for (int N : {10, 20}) {
        const auto n1 = build_telematrix(N, 1, 2).nnz();
        const auto n2 = build_telematrix(N, 2, 2).nnz();
        const auto n3 = build_telematrix(N, 3, 2).nnz();
        CHECK(n1 < n2);
        CHECK(n2 < n3);
    }
}
