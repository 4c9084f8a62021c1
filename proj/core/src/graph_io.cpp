#include "symgraph/graph_io.hpp"

#include <sstream>

namespace symgraph {

bool GraphFile::fully_assigned() const {
    for (ClusterId c : cluster_of)
        if (c < 0) return false;
    return !cluster_of.empty() || graph.num_vertices() == 0;
}

Partition GraphFile::partition() const {
    if (!fully_assigned() && graph.num_vertices() > 0)
        throw std::invalid_argument("graph file has unassigned vertices");
    return Partition(cluster_of);
}

namespace {

[[noreturn]] void parse_fail(int line, const std::string& msg) {
    throw std::runtime_error("line " + std::to_string(line) + ": " + msg);
}

std::optional<Provenance> parse_provenance(int lineno, const std::string& s) {
    if (s.rfind("self:", 0) == 0) {
        int i = 0;
        try {
            i = std::stoi(s.substr(5));
        } catch (...) {
            parse_fail(lineno, "bad provenance '" + s + "'");
        }
        if (i < 1) parse_fail(lineno, "bad provenance cluster index");
        return Provenance::self_loop(i - 1);
    }
    if (s.rfind("edge:", 0) == 0) {
        auto dash = s.find('-', 5);
        if (dash == std::string::npos)
            parse_fail(lineno, "bad provenance '" + s + "'");
        int j = 0, k = 0;
        try {
            j = std::stoi(s.substr(5, dash - 5));
            k = std::stoi(s.substr(dash + 1));
        } catch (...) {
            parse_fail(lineno, "bad provenance '" + s + "'");
        }
        if (j < 1 || k < 1 || j == k)
            parse_fail(lineno, "bad provenance cluster pair");
        return Provenance::pair_edge(j - 1, k - 1);
    }
    parse_fail(lineno, "bad provenance '" + s + "'");
}

std::string provenance_str(const Provenance& pr) {
    if (pr.kind == Provenance::Kind::SelfLoop)
        return "self:" + std::to_string(pr.a + 1);
    return "edge:" + std::to_string(pr.a + 1) + "-" + std::to_string(pr.b + 1);
}

}  // namespace

GraphFile parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<ClusterId> cluster_of;
    std::vector<Edge> edges;
    std::vector<std::optional<Provenance>> prov;
    bool any_prov = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "graph") {
            if (n != -1) parse_fail(lineno, "duplicate graph header");
            if (!(ls >> n) || n < 0) parse_fail(lineno, "bad vertex count");
            cluster_of.assign(n, -1);
        } else if (n == -1) {
            parse_fail(lineno, "expected 'graph <n>' header first");
        } else if (tok == "node") {
            int id, c;
            if (!(ls >> id >> c)) parse_fail(lineno, "bad node declaration");
            if (id < 1 || id > n) parse_fail(lineno, "vertex index out of range");
            if (c < 0) parse_fail(lineno, "negative cluster index");
            cluster_of[id - 1] = c - 1;  // cluster 0 means unassigned
        } else if (tok == "edge") {
            int u, v;
            if (!(ls >> u >> v)) parse_fail(lineno, "bad edge declaration");
            if (u < 1 || v < 1 || u > n || v > n)
                parse_fail(lineno, "vertex index out of range");
            if (u >= v) parse_fail(lineno, "edge requires u < v");
            std::string ps;
            if (ls >> ps) {
                prov.resize(edges.size());
                prov.push_back(parse_provenance(lineno, ps));
                any_prov = true;
            } else if (any_prov) {
                prov.push_back(std::nullopt);
            }
            edges.push_back({u - 1, v - 1});
        } else {
            parse_fail(lineno, "unknown directive '" + tok + "'");
        }
    }
    if (n == -1) parse_fail(lineno, "missing 'graph <n>' header");
    if (any_prov) prov.resize(edges.size());
    Graph g(n, std::move(edges), any_prov ? std::move(prov)
                                          : std::vector<std::optional<Provenance>>{});
    return GraphFile{std::move(g), std::move(cluster_of)};
}

std::string serialize_graph(const Graph& g,
                            const std::vector<ClusterId>& cluster_of) {
    std::ostringstream out;
    out << "graph " << g.num_vertices() << "\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        ClusterId c = v < static_cast<int>(cluster_of.size()) ? cluster_of[v] : -1;
        out << "node " << v + 1 << " " << c + 1 << "\n";
    }
    const auto& prov = g.provenance();
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [u, v] = g.edges()[i];
        out << "edge " << u + 1 << " " << v + 1;
        if (!prov.empty() && prov[i]) out << " " << provenance_str(*prov[i]);
        out << "\n";
    }
    return out.str();
}

std::string serialize_graph(const Graph& g, const Partition& part) {
    return serialize_graph(g, part.assignment());
}

std::string to_dot(const Graph& g, const std::vector<ClusterId>& cluster_of) {
    static const char* palette[] = {"lightcoral", "lightblue",  "palegreen",
                                    "khaki",      "plum",       "orange",
                                    "cyan",       "lightgray"};
    static const char* styles[] = {"solid", "dashed", "dotted", "bold"};
    std::ostringstream out;
    out << "graph G {\n  node [style=filled];\n";
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
        ClusterId c = v < static_cast<int>(cluster_of.size()) ? cluster_of[v] : -1;
        out << "  v" << v + 1;
        if (c >= 0) out << " [fillcolor=" << palette[c % 8] << "]";
        out << ";\n";
    }
    const auto& prov = g.provenance();
    for (int i = 0; i < g.num_edges(); ++i) {
        auto [u, v] = g.edges()[i];
        out << "  v" << u + 1 << " -- v" << v + 1;
        if (!prov.empty() && prov[i]) {
            // Style index per quotient feature: self-loops first, then pairs.
            int idx = prov[i]->kind == Provenance::Kind::SelfLoop
                          ? prov[i]->a
                          : prov[i]->a + prov[i]->b;
            out << " [style=" << styles[idx % 4] << "]";
        }
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace symgraph
