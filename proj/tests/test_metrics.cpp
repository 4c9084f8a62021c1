#include <doctest.h>

#include <sstream>

#include "fixtures.hpp"
#include "symgraph/automorphism.hpp"
#include "symgraph/cardinality.hpp"
#include "symgraph/metrics.hpp"
#include "symgraph/rewire.hpp"
#include "symgraph/wiring.hpp"

using namespace symgraph;

TEST_CASE("alignment_metric") {
    CHECK(alignment_metric(10, 2, 10) == Ratio{0, 1});
    CHECK(alignment_metric(10, 2, 2) == Ratio{1, 1});
    CHECK(alignment_metric(14, 3, 3) == Ratio{1, 1});
    CHECK(alignment_metric(10, 2, 6) == Ratio{1, 2});
    CHECK(alignment_metric(5, 5, 5) == Ratio{1, 1});  // degenerate rule
    CHECK_THROWS_AS(alignment_metric(10, 4, 2), std::domain_error);
}

TEST_CASE("deterministic three-cluster pipeline yields f = 1") {
    auto q = fixtures::three_cluster_b();
    auto gen = generate(q, scale(solve_minimal(build_system(q)), 2));
    auto mbc = coarsest_equitable(gen.graph);
    auto oag = orbits(gen.graph);
    auto f = alignment_metric(14, mbc.num_clusters(), oag.partition.num_clusters());
    CHECK(f == Ratio{1, 1});
}

TEST_CASE("rigid fixture yields f = 0") {
    auto g = fixtures::rigid_graph();
    auto f = alignment_metric(g.num_vertices(),
                              coarsest_equitable(g).num_clusters(),
                              orbits(g).partition.num_clusters());
    CHECK(f == Ratio{0, 1});
}

TEST_CASE("f is invariant under vertex relabeling") {
    auto g = fixtures::rigid_graph();
    int n = g.num_vertices();
    auto rng = make_stream(17, "relabel", 0);
    std::vector<Vertex> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = 0; i < n - 1; ++i) {
        auto j = i + static_cast<int>(bounded(rng, n - i));
        std::swap(perm[i], perm[j]);
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
    Graph h(n, std::move(edges));
    auto f_g = alignment_metric(n, coarsest_equitable(g).num_clusters(),
                                orbits(g).partition.num_clusters());
    auto f_h = alignment_metric(n, coarsest_equitable(h).num_clusters(),
                                orbits(h).partition.num_clusters());
    CHECK(f_g == f_h);
}

TEST_CASE("sweep basics") {
    auto q = fixtures::two_cluster_quotient();
    SweepConfig cfg;
    cfg.scales = {1};
    cfg.trials = 10;
    cfg.seed = 4;
    auto records = sweep(q, cfg);
    REQUIRE(records.size() == 10);
    for (const auto& r : records) {
        CHECK(r.s == 1);
        CHECK(r.n == 5);
        CHECK(r.f == Ratio{1, 1});
        CHECK(r.f.value() >= 0.0);
        CHECK(r.f.value() <= 1.0);
    }

    cfg.trials = 0;
    CHECK(sweep(q, cfg).empty());
}

TEST_CASE("sweep is reproducible and thread-schedule independent") {
    auto q = fixtures::two_cluster_quotient();
    SweepConfig cfg;
    cfg.scales = {1, 2};
    cfg.trials = 8;
    cfg.seed = 11;
    cfg.threads = 1;
    auto a = sweep(q, cfg);
    cfg.threads = 4;
    auto b = sweep(q, cfg);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].s == b[i].s);
        CHECK(a[i].trial == b[i].trial);
        CHECK(a[i].f == b[i].f);
    }
}

TEST_CASE("sweep rejects infeasible quotients") {
    // Two parallel constraints with incompatible ratios cannot come from one
    // QuotientGraph, so force infeasibility through a ratio cycle.
    QuotientGraph q({0, 0, 0},
                    {{0, 1, 1, 2}, {1, 2, 1, 2}, {0, 2, 2, 1}});
    SweepConfig cfg;
    cfg.scales = {1};
    cfg.trials = 1;
    CHECK_THROWS_AS(sweep(q, cfg), std::domain_error);
}

TEST_CASE("csv output") {
    std::vector<AlignmentRecord> records = {
        {1, 0, 5, 2, 2, Ratio{1, 1}, false},
        {1, 1, 5, 2, 5, Ratio{0, 1}, false},
    };
    std::ostringstream out;
    write_records_csv(out, records);
    CHECK(out.str() ==
          "s,trial,n,mbc,oag,f\n1,0,5,2,2,1.000000\n1,1,5,2,5,0.000000\n");

    auto summaries = summarize(records);
    REQUIRE(summaries.size() == 1);
    CHECK(summaries[0].trials == 2);
    CHECK(summaries[0].mean_f == doctest::Approx(0.5));
    std::ostringstream sum;
    write_summary_csv(sum, summaries);
    CHECK(sum.str().rfind("s,mean_f,std_f,trials\n1,0.500000,", 0) == 0);
}
