#include "symgraph/degree_sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace symgraph {

namespace {

void require_non_increasing(const std::vector<long long>& seq) {
    for (size_t i = 0; i + 1 < seq.size(); ++i)
        if (seq[i] < seq[i + 1])
            throw std::invalid_argument("sequence must be non-increasing");
    for (long long a : seq)
        if (a < 0) throw std::invalid_argument("sequence must be non-negative");
}

}  // namespace

bool check_erdos_gallai(const std::vector<long long>& seq) {
    require_non_increasing(seq);
    long long n = static_cast<long long>(seq.size());
    long long total = 0;
    for (long long a : seq) total += a;
    if (total % 2 != 0) return false;
    long long prefix = 0;
    for (long long k = 1; k <= n; ++k) {
        prefix += seq[k - 1];
        long long rhs = k * (k - 1);
        for (long long i = k; i < n; ++i) rhs += std::min(seq[i], k);
        if (prefix > rhs) return false;
    }
    return true;
}

bool check_gale_ryser(const std::vector<long long>& a,
                      const std::vector<long long>& b) {
    require_non_increasing(a);
    require_non_increasing(b);
    long long sum_a = 0, sum_b = 0;
    for (long long x : a) sum_a += x;
    for (long long x : b) sum_b += x;
    if (sum_a != sum_b) return false;
    long long prefix = 0;
    for (size_t k = 1; k <= a.size(); ++k) {
        prefix += a[k - 1];
        long long rhs = 0;
        for (long long x : b) rhs += std::min<long long>(x, k);
        if (prefix > rhs) return false;
    }
    return true;
}

}  // namespace symgraph
