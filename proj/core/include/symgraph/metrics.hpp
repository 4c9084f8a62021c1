#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "symgraph/quotient.hpp"

namespace symgraph {

// Exact reduced rational in [0, 1].
struct Ratio {
    long long num = 0;
    long long den = 1;
    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Ratio&) const = default;
};

// Alignment metric f = (n - |O|) / (n - |C|). The degenerate n = |C| case
// (every cluster a singleton) is defined as 1 and flagged on the record.
Ratio alignment_metric(int n, int mbc_size, int oag_size);

struct AlignmentRecord {
    int s = 1;
    int trial = 0;
    int n = 0;
    int mbc_size = 0;
    int oag_size = 0;
    Ratio f;
    bool degenerate = false;
};

struct SweepSummary {
    int s = 1;
    double mean_f = 0;
    double std_f = 0;
    int trials = 0;
};

struct SweepConfig {
    std::vector<int> scales;
    int trials = 100;
    std::uint64_t seed = 0;
    double swaps_per_edge = 10.0;
    int threads = 0;  // 0 = hardware concurrency
};

// For each scale s and trial: solve, scale, generate, randomize with a
// trial-derived seed, then measure |C| (coarsest equitable) and |O| (orbits).
// Reproducible for a fixed (seed, parameters) regardless of thread count.
std::vector<AlignmentRecord> sweep(const QuotientGraph& q, const SweepConfig& cfg);

std::vector<SweepSummary> summarize(const std::vector<AlignmentRecord>& records);

// CSV: header `s,trial,n,mbc,oag,f`, f with 6 decimal digits.
void write_records_csv(std::ostream& out, const std::vector<AlignmentRecord>& records);
// CSV: header `s,mean_f,std_f,trials`.
void write_summary_csv(std::ostream& out, const std::vector<SweepSummary>& summaries);

}  // namespace symgraph
