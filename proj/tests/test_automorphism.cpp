#include <doctest.h>

#include "fixtures.hpp"
#include "symgraph/automorphism.hpp"
#include "symgraph/cardinality.hpp"
#include "symgraph/quotient.hpp"
#include "symgraph/wiring.hpp"

using namespace symgraph;

TEST_CASE("orbits_bruteforce basics") {
    auto c4 = orbits_bruteforce(fixtures::cycle(4));
    CHECK(c4.partition.num_clusters() == 1);

    auto p3 = orbits_bruteforce(fixtures::path3());
    CHECK(p3.partition.num_clusters() == 2);
    CHECK(p3.partition.cluster_of(0) == p3.partition.cluster_of(2));

    // Smallest asymmetric tree: paths of lengths 1, 2, 3 joined at a root.
    Graph tree(7, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
    auto o = orbits_bruteforce(tree);
    CHECK(o.partition.num_clusters() == 7);
    CHECK(o.generators.empty());

    CHECK_THROWS_AS(orbits_bruteforce(fixtures::cycle(9)),
                    std::invalid_argument);
}

TEST_CASE("orbits basics") {
    CHECK(orbits(fixtures::complete(5)).partition.num_clusters() == 1);
    auto o = orbits(fixtures::path3());
    CHECK(o.partition.num_clusters() == 2);
}

TEST_CASE("rigid fixture has all-singleton orbits") {
    auto o = orbits(fixtures::rigid_graph());
    CHECK(o.partition.num_clusters() == 10);
    CHECK(o.generators.empty());
}

TEST_CASE("deterministic three-cluster orbits coincide with the clusters") {
    auto q = fixtures::three_cluster_b();
    auto gen = generate(q, scale(solve_minimal(build_system(q)), 2));
    auto o = orbits(gen.graph);
    CHECK(o.partition == gen.partition);
    // The simultaneous rotation generator certifies the merges.
    for (const auto& g : o.generators) CHECK(is_automorphism(gen.graph, g));
    auto mbc = coarsest_equitable(gen.graph);
    CHECK(refines(o.partition, mbc));
    CHECK(mbc == gen.partition);
}

TEST_CASE("orbit partitions are equitable") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        auto g = fixtures::random_graph(2 + seed % 9, 0.4, seed);
        auto o = orbits(g);
        CHECK(orbit_partition_is_equitable(g, o));
    }
    // Negative control: merging a path endpoint with its middle vertex.
    OrbitPartition corrupted;
    corrupted.partition = Partition({0, 0, 1});
    CHECK_FALSE(orbit_partition_is_equitable(fixtures::path3(), corrupted));
}

TEST_CASE("oracle equivalence on random graphs") {
    for (std::uint64_t seed = 0; seed < 2000; ++seed) {
        int n = 1 + static_cast<int>(seed % 8);
        double density = 0.1 + 0.8 * ((seed / 11) % 10) / 10.0;
        auto g = fixtures::random_graph(n, density, seed);
        auto fast = orbits(g);
        auto slow = orbits_bruteforce(g);
        REQUIRE(fast.partition == slow.partition);
        for (const auto& gen : fast.generators)
            CHECK(is_automorphism(g, gen));
    }
}

TEST_CASE("orbits refine the coarsest equitable partition") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        auto g = fixtures::random_graph(2 + seed % 10, 0.5, seed);
        CHECK(refines(orbits(g).partition, coarsest_equitable(g)));
    }
}

TEST_CASE("determinism of orbit labeling") {
    auto g = fixtures::random_graph(9, 0.5, 3);
    auto a = orbits(g);
    auto b = orbits(g);
    CHECK(a.partition == b.partition);
    // Clusters ordered by smallest member.
    std::vector<int> first(a.partition.num_clusters(), -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v)
        if (first[a.partition.cluster_of(v)] == -1)
            first[a.partition.cluster_of(v)] = v;
    for (size_t k = 1; k < first.size(); ++k) CHECK(first[k - 1] < first[k]);
}

TEST_CASE("search budget is a hard error") {
    auto q = fixtures::three_cluster_b();
    auto gen = generate(q, scale(solve_minimal(build_system(q)), 2));
    SearchLimits limits;
    limits.max_nodes = 0;
    CHECK_THROWS_AS(orbits(gen.graph, limits), std::runtime_error);
}
