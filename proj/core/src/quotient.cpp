#include "symgraph/quotient.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace symgraph {

QuotientGraph::QuotientGraph(std::vector<long long> self_loops,
                             std::vector<QuotientPair> pairs)
    : self_loops_(std::move(self_loops)), pairs_(std::move(pairs)) {
    int p = num_clusters();
    for (long long d : self_loops_)
        if (d < 0) throw std::invalid_argument("negative self-loop count");
    std::sort(pairs_.begin(), pairs_.end(),
              [](const QuotientPair& a, const QuotientPair& b) {
                  return std::pair(a.j, a.k) < std::pair(b.j, b.k);
              });
    for (size_t i = 0; i < pairs_.size(); ++i) {
        const auto& e = pairs_[i];
        if (e.j < 0 || e.k >= p || e.j >= e.k)
            throw std::invalid_argument("invalid cluster pair");
        if (e.w_low < 1 || e.w_high < 1)
            throw std::invalid_argument("pair weights must be >= 1");
        if (i > 0 && pairs_[i - 1].j == e.j && pairs_[i - 1].k == e.k)
            throw std::invalid_argument("duplicate pair edge");
    }
}

long long QuotientGraph::entry(ClusterId i, ClusterId j) const {
    if (i < 0 || j < 0 || i >= num_clusters() || j >= num_clusters())
        throw std::invalid_argument("cluster index out of range");
    if (i == j) return self_loops_[i];
    ClusterId lo = std::min(i, j), hi = std::max(i, j);
    for (const auto& e : pairs_)
        if (e.j == lo && e.k == hi) return i < j ? e.w_low : e.w_high;
    return 0;
}

std::vector<std::vector<long long>> q_matrix(const QuotientGraph& q) {
    int p = q.num_clusters();
    std::vector<std::vector<long long>> m(p, std::vector<long long>(p, 0));
    for (int i = 0; i < p; ++i) m[i][i] = q.self_loop(i);
    for (const auto& e : q.pairs()) {
        m[e.j][e.k] = e.w_low;
        m[e.k][e.j] = e.w_high;
    }
    return m;
}

namespace {

// Per-vertex vector of edge counts toward each cluster.
std::vector<int> cluster_signature(const Graph& g, Vertex v,
                                   const Partition& part) {
    std::vector<int> sig(part.num_clusters(), 0);
    for (Vertex a : g.neighbors(v)) ++sig[part.cluster_of(a)];
    return sig;
}

}  // namespace

bool is_equitable(const Graph& g, const Partition& part) {
    if (part.num_vertices() != g.num_vertices())
        throw std::invalid_argument("partition/graph size mismatch");
    std::vector<std::vector<int>> rep(part.num_clusters());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto sig = cluster_signature(g, v, part);
        auto& r = rep[part.cluster_of(v)];
        if (r.empty())
            r = std::move(sig);
        else if (r != sig)
            return false;
    }
    return true;
}

QuotientGraph extract_quotient(const Graph& g, const Partition& part) {
    if (part.num_vertices() != g.num_vertices())
        throw std::invalid_argument("partition/graph size mismatch");
    int p = part.num_clusters();
    std::vector<std::vector<int>> rep(p);
    std::vector<Vertex> rep_vertex(p, -1);
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        auto sig = cluster_signature(g, v, part);
        ClusterId c = part.cluster_of(v);
        if (rep_vertex[c] == -1) {
            rep[c] = std::move(sig);
            rep_vertex[c] = v;
        } else {
            for (int k = 0; k < p; ++k) {
                if (rep[c][k] != sig[k]) {
                    std::ostringstream msg;
                    msg << "partition not equitable: vertices " << rep_vertex[c]
                        << " and " << v << " in cluster " << c
                        << " have different edge counts toward cluster " << k;
                    throw std::domain_error(msg.str());
                }
            }
        }
    }
    std::vector<long long> self(p);
    for (int i = 0; i < p; ++i) self[i] = rep[i][i];
    std::vector<QuotientPair> pairs;
    for (int j = 0; j < p; ++j)
        for (int k = j + 1; k < p; ++k)
            if (rep[j][k] > 0)
                pairs.push_back({j, k, rep[j][k], rep[k][j]});
    return QuotientGraph(std::move(self), std::move(pairs));
}

std::vector<int> refine_colors(const Graph& g, std::vector<int> colors) {
    int n = g.num_vertices();
    if (static_cast<int>(colors.size()) != n)
        throw std::invalid_argument("color vector size mismatch");
    while (true) {
        // Signature: own color plus sorted multiset of neighbor colors.
        std::vector<std::pair<std::vector<int>, Vertex>> sigs(n);
        for (Vertex v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(colors[v]);
            for (Vertex a : g.neighbors(v)) s.push_back(colors[a]);
            std::sort(s.begin() + 1, s.end());
            sigs[v] = {std::move(s), v};
        }
        std::vector<std::pair<std::vector<int>, Vertex>> sorted = sigs;
        std::sort(sorted.begin(), sorted.end());
        std::map<std::vector<int>, int> id;
        for (const auto& [s, v] : sorted)
            id.emplace(s, static_cast<int>(id.size()));
        std::vector<int> next(n);
        for (Vertex v = 0; v < n; ++v) next[v] = id[sigs[v].first];
        int old_count = 0, new_count = static_cast<int>(id.size());
        {
            std::vector<int> c = colors;
            std::sort(c.begin(), c.end());
            old_count = static_cast<int>(std::unique(c.begin(), c.end()) -
                                         c.begin());
        }
        bool stable = (new_count == old_count);
        colors = std::move(next);
        if (stable) return colors;
    }
}

Partition colors_to_partition(const std::vector<int>& colors) {
    // Clusters numbered by smallest contained vertex.
    std::map<int, int> order;
    for (int c : colors)
        if (!order.count(c)) order[c] = static_cast<int>(order.size());
    std::vector<ClusterId> out(colors.size());
    for (size_t v = 0; v < colors.size(); ++v) out[v] = order[colors[v]];
    return Partition(std::move(out));
}

Partition coarsest_equitable(const Graph& g) {
    if (g.num_vertices() == 0) return Partition();
    std::vector<int> colors(g.num_vertices(), 0);
    colors = refine_colors(g, std::move(colors));
    return colors_to_partition(colors);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

}  // namespace

QuotientGraph parse_quotient(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int p = -1;
    std::vector<long long> self;
    std::vector<bool> self_seen;
    std::vector<QuotientPair> pairs;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "quotient") {
            if (p != -1) parse_fail(lineno, "duplicate quotient header");
            if (!(ls >> p) || p < 0) parse_fail(lineno, "bad cluster count");
            self.assign(p, 0);
            self_seen.assign(p, false);
        } else if (p == -1) {
            parse_fail(lineno, "expected 'quotient <p>' header first");
        } else if (tok == "self") {
            int i;
            long long d;
            if (!(ls >> i >> d)) parse_fail(lineno, "bad self declaration");
            if (i < 1 || i > p) parse_fail(lineno, "cluster index out of range");
            if (d < 0) parse_fail(lineno, "negative self-loop count");
            if (self_seen[i - 1]) parse_fail(lineno, "duplicate self declaration");
            self_seen[i - 1] = true;
            self[i - 1] = d;
        } else if (tok == "edge") {
            int j, k;
            long long w0, w1;
            if (!(ls >> j >> k >> w0 >> w1)) parse_fail(lineno, "bad edge declaration");
            if (j < 1 || j > p || k < 1 || k > p)
                parse_fail(lineno, "cluster index out of range");
            if (j == k) parse_fail(lineno, "self-pair not allowed");
            if (j > k) parse_fail(lineno, "edge requires j < k");
            if (w0 < 1 || w1 < 1) parse_fail(lineno, "pair weights must be >= 1");
            for (const auto& e : pairs)
                if (e.j == j - 1 && e.k == k - 1)
                    parse_fail(lineno, "duplicate edge declaration");
            pairs.push_back({j - 1, k - 1, w0, w1});
        } else {
            parse_fail(lineno, "unknown directive '" + tok + "'");
        }
    }
    if (p == -1) parse_fail(lineno, "missing 'quotient <p>' header");
    return QuotientGraph(std::move(self), std::move(pairs));
}

std::string serialize_quotient(const QuotientGraph& q) {
    std::ostringstream out;
    out << "quotient " << q.num_clusters() << "\n";
    for (int i = 0; i < q.num_clusters(); ++i)
        if (q.self_loop(i) > 0)
            out << "self " << i + 1 << " " << q.self_loop(i) << "\n";
    for (const auto& e : q.pairs())
        out << "edge " << e.j + 1 << " " << e.k + 1 << " " << e.w_low << " "
            << e.w_high << "\n";
    return out.str();
}

}  // namespace symgraph
