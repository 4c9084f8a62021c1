#include "symgraph/metrics.hpp"

#include <atomic>
#include <cmath>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "symgraph/automorphism.hpp"
#include "symgraph/cardinality.hpp"
#include "symgraph/rewire.hpp"
#include "symgraph/rng.hpp"
#include "symgraph/wiring.hpp"

namespace symgraph {

Ratio alignment_metric(int n, int mbc_size, int oag_size) {
    if (oag_size < mbc_size)
        throw std::domain_error("orbit partition cannot be coarser than the MBC");
    if (oag_size > n || mbc_size < 0)
        throw std::invalid_argument("partition sizes out of range");
    if (n == mbc_size) return Ratio{1, 1};  // degenerate, both trivial
    long long num = n - oag_size, den = n - mbc_size;
    long long g = std::gcd(num, den);
    if (g == 0) return Ratio{0, 1};
    return Ratio{num / g, den / g};
}

namespace {

AlignmentRecord run_trial(const QuotientGraph& q, const CardinalitySolution& scaled,
                          int s, int trial, std::uint64_t master_seed,
                          double swaps_per_edge) {
    auto gen = generate(q, scaled);
    std::uint64_t trial_seed =
        derive_seed(master_seed, "trial",
                    (static_cast<std::uint64_t>(s) << 32) |
                        static_cast<std::uint64_t>(trial));
    Graph g = randomize(gen.graph, gen.partition, trial_seed, swaps_per_edge);
    Partition mbc = coarsest_equitable(g);
    OrbitPartition oag = orbits(g);
    AlignmentRecord rec;
    rec.s = s;
    rec.trial = trial;
    rec.n = g.num_vertices();
    rec.mbc_size = mbc.num_clusters();
    rec.oag_size = oag.partition.num_clusters();
    rec.degenerate = (rec.n == rec.mbc_size);
    rec.f = alignment_metric(rec.n, rec.mbc_size, rec.oag_size);
    return rec;
}

}  // namespace

std::vector<AlignmentRecord> sweep(const QuotientGraph& q, const SweepConfig& cfg) {
    auto sys = build_system(q);
    CardinalitySolution base = solve_minimal(sys);  // throws when infeasible

    struct Job {
        int s, trial;
        CardinalitySolution scaled;
    };
    std::vector<Job> jobs;
    for (int s : cfg.scales) {
        CardinalitySolution scaled = scale(base, s);
        for (int t = 0; t < cfg.trials; ++t) jobs.push_back({s, t, scaled});
    }

    std::vector<AlignmentRecord> records(jobs.size());
    unsigned threads = cfg.threads > 0 ? cfg.threads
                                       : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<size_t>(jobs.size(), 1));
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < jobs.size(); i = next.fetch_add(1)) {
            const Job& job = jobs[i];
            records[i] = run_trial(q, job.scaled, job.s, job.trial, cfg.seed,
                                   cfg.swaps_per_edge);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    return records;  // already in (s, trial) order
}

std::vector<SweepSummary> summarize(const std::vector<AlignmentRecord>& records) {
    std::vector<SweepSummary> out;
    size_t i = 0;
    while (i < records.size()) {
        size_t j = i;
        while (j < records.size() && records[j].s == records[i].s) ++j;
        SweepSummary s;
        s.s = records[i].s;
        s.trials = static_cast<int>(j - i);
        double mean = 0;
        for (size_t k = i; k < j; ++k) mean += records[k].f.value();
        mean /= s.trials;
        double var = 0;
        for (size_t k = i; k < j; ++k) {
            double d = records[k].f.value() - mean;
            var += d * d;
        }
        s.mean_f = mean;
        s.std_f = s.trials > 1 ? std::sqrt(var / (s.trials - 1)) : 0.0;
        out.push_back(s);
        i = j;
    }
    return out;
}

void write_records_csv(std::ostream& out,
                       const std::vector<AlignmentRecord>& records) {
    out << "s,trial,n,mbc,oag,f\n";
    char buf[32];
    for (const auto& r : records) {
        std::snprintf(buf, sizeof buf, "%.6f", r.f.value());
        out << r.s << "," << r.trial << "," << r.n << "," << r.mbc_size << ","
            << r.oag_size << "," << buf << "\n";
    }
}

void write_summary_csv(std::ostream& out,
                       const std::vector<SweepSummary>& summaries) {
    out << "s,mean_f,std_f,trials\n";
    char buf[64];
    for (const auto& s : summaries) {
        std::snprintf(buf, sizeof buf, "%.6f,%.6f", s.mean_f, s.std_f);
        out << s.s << "," << buf << "," << s.trials << "\n";
    }
}

}  // namespace symgraph
