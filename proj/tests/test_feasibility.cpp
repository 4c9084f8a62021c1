#include <doctest.h>

#include <numeric>

#include "fixtures.hpp"
#include "symgraph/degree_sequence.hpp"
#include "symgraph/feasibility.hpp"

using namespace symgraph;

TEST_CASE("build_system on the three-cluster quotient") {
    auto sys = build_system(fixtures::three_cluster_b());
    auto m = sys.matrix();
    CHECK(m == std::vector<std::vector<long long>>{{4, -1, 0}, {2, 0, -2}});
    CHECK(sys.x_lower == std::vector<long long>{1, 3, 1});
    CHECK(sys.doubled == std::vector<bool>{true, false, false});
}

TEST_CASE("build_system on the two-cluster quotient") {
    auto sys = build_system(fixtures::two_cluster_quotient());
    CHECK(sys.matrix() == std::vector<std::vector<long long>>{{2, -6}});
    CHECK(sys.x_lower == std::vector<long long>{3, 1});
}

TEST_CASE("build_system with no pair edges") {
    auto sys = build_system(QuotientGraph({2, 3}, {}));
    CHECK(sys.rows.empty());
    CHECK(is_feasible(sys).feasible);
}

TEST_CASE("row sign structure") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto sys = build_system(fixtures::random_feasible_quotient(5, 4, seed));
        for (const auto& row : sys.matrix()) {
            int pos = 0, neg = 0;
            for (long long v : row) {
                if (v > 0) ++pos;
                if (v < 0) ++neg;
            }
            CHECK(pos == 1);
            CHECK(neg == 1);
        }
    }
}

TEST_CASE("is_feasible certificates") {
    SUBCASE("three clusters") {
        auto res = is_feasible(build_system(fixtures::three_cluster_b()));
        REQUIRE(res.feasible);
        CHECK(res.certificate == std::vector<long long>{1, 4, 1});
    }
    SUBCASE("two clusters") {
        auto res = is_feasible(build_system(fixtures::two_cluster_quotient()));
        REQUIRE(res.feasible);
        CHECK(res.certificate == std::vector<long long>{3, 1});
    }
}

TEST_CASE("inconsistent ratio cycle is infeasible with a witness") {
    FeasibilitySystem sys;
    sys.p = 3;
    // x_1 = 2 x_0, x_2 = 2 x_1, but x_2 = 2 x_0: ratio product 8 != 1.
    sys.rows = {{0, 1, 2, -1}, {1, 2, 2, -1}, {0, 2, 2, -1}};
    sys.x_lower = {1, 1, 1};
    sys.doubled = {false, false, false};
    auto res = is_feasible(sys);
    REQUIRE_FALSE(res.feasible);
    CHECK(res.witness_cycle ==
          std::vector<std::pair<ClusterId, ClusterId>>{{0, 1}, {0, 2}, {1, 2}});
}

TEST_CASE("certificate properties on random feasible systems") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        auto sys = build_system(fixtures::random_feasible_quotient(5, 4, seed));
        auto res = is_feasible(sys);
        REQUIRE(res.feasible);
        for (long long v : res.certificate) CHECK(v >= 1);
        // A x = 0 exactly.
        for (const auto& row : sys.rows)
            CHECK(row.coef_j * res.certificate[row.j] +
                      row.coef_k * res.certificate[row.k] ==
                  0);
        // Componentwise gcd 1.
        std::vector<long long> comp_gcd(sys.p, 0);
        for (int i = 0; i < sys.p; ++i)
            comp_gcd[res.component[i]] =
                std::gcd(comp_gcd[res.component[i]], res.certificate[i]);
        for (int i = 0; i < sys.p; ++i) CHECK(comp_gcd[res.component[i]] == 1);
    }
}

TEST_CASE("erdos-gallai") {
    CHECK(check_erdos_gallai({2, 2, 2, 2}));
    CHECK_FALSE(check_erdos_gallai({3, 3, 3}));
    CHECK(check_erdos_gallai({3, 1, 1, 1}));
    CHECK(check_erdos_gallai({}));
    CHECK_THROWS_AS(check_erdos_gallai({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(check_erdos_gallai({-1}), std::invalid_argument);
}

TEST_CASE("gale-ryser") {
    CHECK(check_gale_ryser({2, 2, 2}, {3, 3}));
    CHECK(check_gale_ryser({1}, {1}));
    CHECK_FALSE(check_gale_ryser({2}, {1, 1, 1}));
    CHECK_THROWS_AS(check_gale_ryser({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("constant-sequence closed forms agree with the full chains") {
    // Regular graphs: n >= r+1 and r*n even.
    for (long long r = 0; r <= 30; ++r) {
        for (long long n = 1; n <= 30; ++n) {
            bool closed = n >= r + 1 && (r * n) % 2 == 0;
            CHECK(check_erdos_gallai(std::vector<long long>(n, r)) == closed);
        }
    }
    // Biregular bipartite: r1 <= n2, r2 <= n1, r1 n1 = r2 n2.
    long long mismatches = 0;
    for (long long r1 = 0; r1 <= 30; ++r1)
        for (long long n1 = 1; n1 <= 30; ++n1)
            for (long long r2 = 0; r2 <= 30; ++r2)
                for (long long n2 = 1; n2 <= 30; ++n2) {
                    bool closed = r1 <= n2 && r2 <= n1 && r1 * n1 == r2 * n2;
                    bool full = check_gale_ryser(std::vector<long long>(n1, r1),
                                                 std::vector<long long>(n2, r2));
                    if (full != closed) ++mismatches;
                }
    CHECK(mismatches == 0);
}
