#include "wedge/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace wedge {

WeightedGraph::WeightedGraph(int n, std::vector<WeightedEdge> edges) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph: vertex count must be >= 1");
    std::set<std::pair<int, int>> seen;
    for (WeightedEdge& e : edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 1 || e.v > n || e.u == e.v) {
            throw std::invalid_argument("graph: bad edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "} on " + std::to_string(n) +
                                        " vertices");
        }
        if (e.w < 1) throw std::invalid_argument("graph: edge weight must be >= 1");
        if (!seen.insert({e.u, e.v}).second) {
            throw std::invalid_argument("graph: parallel edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
        }
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    edges_ = std::move(edges);
}

bool WeightedGraph::has_edge(int u, int v) const { return weight(u, v) != 0; }

Exponent WeightedGraph::weight(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (const WeightedEdge& e : edges_) {
        if (e.u == u && e.v == v) return e.w;
    }
    return 0;
}

int WeightedGraph::degree(int v) const {
    int d = 0;
    for (const WeightedEdge& e : edges_) d += (e.u == v || e.v == v);
    return d;
}

int WeightedGraph::nontrivial_edge_count() const {
    int c = 0;
    for (const WeightedEdge& e : edges_) c += (e.w >= 2);
    return c;
}

WeightedGraph build_cycle(int n, const std::vector<Exponent>& weights) {
    if (n < 3) throw std::invalid_argument("build_cycle: need n >= 3");
    if (static_cast<int>(weights.size()) != n) {
        throw std::invalid_argument("build_cycle: need exactly n weights");
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(n);
    for (int i = 1; i <= n; ++i) {
        int u = i, v = (i == n) ? 1 : i + 1;
        edges.push_back({u, v, weights[i - 1]});
    }
    return WeightedGraph(n, std::move(edges));
}

WeightedGraph build_path(int n, const std::vector<Exponent>& weights) {
    if (n < 2) throw std::invalid_argument("build_path: need n >= 2");
    if (static_cast<int>(weights.size()) != n - 1) {
        throw std::invalid_argument("build_path: need exactly n-1 weights");
    }
    std::vector<WeightedEdge> edges;
    edges.reserve(n - 1);
    for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, weights[i - 1]});
    return WeightedGraph(n, std::move(edges));
}

MonomialIdeal edge_ideal(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<Monomial> gens;
    gens.reserve(g.edges().size());
    for (const WeightedEdge& e : g.edges()) {
        std::vector<Exponent> exps(n, 0);
        exps[e.u - 1] = e.w;
        exps[e.v - 1] = e.w;
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal::of(n, std::move(gens));
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (v < 1 || v > g.vertex_count()) {
            throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));
        }
    }
    std::vector<int> old_to_new(g.vertex_count() + 1, 0);
    for (std::size_t i = 0; i < vertices.size(); ++i) old_to_new[vertices[i]] = static_cast<int>(i) + 1;
    std::vector<WeightedEdge> edges;
    for (const WeightedEdge& e : g.edges()) {
        if (old_to_new[e.u] && old_to_new[e.v]) {
            edges.push_back({old_to_new[e.u], old_to_new[e.v], e.w});
        }
    }
    return InducedSubgraph{WeightedGraph(static_cast<int>(vertices.size()), std::move(edges)),
                           std::move(vertices)};
}

InducedSubgraph delete_vertex(const WeightedGraph& g, int v) {
    if (v < 1 || v > g.vertex_count()) {
        throw std::invalid_argument("delete_vertex: unknown vertex " + std::to_string(v));
    }
    std::vector<int> keep;
    for (int u = 1; u <= g.vertex_count(); ++u) {
        if (u != v) keep.push_back(u);
    }
    return induced_subgraph(g, std::move(keep));
}

GraphClosureCheck is_integrally_closed_graph(const WeightedGraph& g) {
    std::vector<WeightedEdge> nt;
    for (const WeightedEdge& e : g.edges()) {
        if (e.w >= 2) nt.push_back(e);
    }
    // Pattern 1: two adjacent non-trivial edges whose third side is absent.
    for (std::size_t i = 0; i < nt.size(); ++i) {
        for (std::size_t j = i + 1; j < nt.size(); ++j) {
            int shared = 0, a = 0, b = 0;
            if (nt[i].u == nt[j].u) { shared = nt[i].u; a = nt[i].v; b = nt[j].v; }
            else if (nt[i].u == nt[j].v) { shared = nt[i].u; a = nt[i].v; b = nt[j].u; }
            else if (nt[i].v == nt[j].u) { shared = nt[i].v; a = nt[i].u; b = nt[j].v; }
            else if (nt[i].v == nt[j].v) { shared = nt[i].v; a = nt[i].u; b = nt[j].u; }
            if (shared && !g.has_edge(a, b)) {
                std::vector<int> vs{shared, a, b};
                std::sort(vs.begin(), vs.end());
                return {false, ClosureViolation{1, std::move(vs)}};
            }
        }
    }
    // Pattern 2: two disjoint non-trivial edges, endpoints inducing exactly
    // those two edges.
    for (std::size_t i = 0; i < nt.size(); ++i) {
        for (std::size_t j = i + 1; j < nt.size(); ++j) {
            int a = nt[i].u, b = nt[i].v, c = nt[j].u, d = nt[j].v;
            if (a == c || a == d || b == c || b == d) continue;
            if (!g.has_edge(a, c) && !g.has_edge(a, d) && !g.has_edge(b, c) && !g.has_edge(b, d)) {
                std::vector<int> vs{a, b, c, d};
                std::sort(vs.begin(), vs.end());
                return {false, ClosureViolation{2, std::move(vs)}};
            }
        }
    }
    // Pattern 3: a triangle of non-trivial edges.
    for (std::size_t i = 0; i < nt.size(); ++i) {
        for (std::size_t j = i + 1; j < nt.size(); ++j) {
            if (nt[i].u == nt[j].u || nt[i].u == nt[j].v || nt[i].v == nt[j].u ||
                nt[i].v == nt[j].v) {
                int shared = (nt[i].u == nt[j].u || nt[i].u == nt[j].v) ? nt[i].u : nt[i].v;
                int a = nt[i].u == shared ? nt[i].v : nt[i].u;
                int b = nt[j].u == shared ? nt[j].v : nt[j].u;
                if (g.weight(a, b) >= 2) {
                    std::vector<int> vs{shared, a, b};
                    std::sort(vs.begin(), vs.end());
                    return {false, ClosureViolation{3, std::move(vs)}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

std::string cycle_class_name(CycleClass c) {
    switch (c) {
        case CycleClass::Trivial: return "trivial";
        case CycleClass::OneEdge: return "one-edge";
        case CycleClass::TwoEdge: return "two-edge";
        case CycleClass::ThreeEdgeSix: return "three-edge-n6";
    }
    return "?";
}

namespace {

// Cyclic weight sequence of a cycle graph, walking from vertex 1 toward
// its smaller neighbor.
std::vector<Exponent> cycle_weight_walk(const WeightedGraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<int>> adj(n + 1);
    for (const WeightedEdge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (int v = 1; v <= n; ++v) {
        if (adj[v].size() != 2) throw std::invalid_argument("classify_cycle: not a cycle");
        std::sort(adj[v].begin(), adj[v].end());
    }
    std::vector<int> order{1, adj[1][0]};
    while (static_cast<int>(order.size()) < n) {
        int cur = order.back(), prev = order[order.size() - 2];
        int nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
        if (nxt == 1) throw std::invalid_argument("classify_cycle: not a cycle");
        order.push_back(nxt);
    }
    // A degree-2 graph on n vertices whose walk closes after visiting all n
    // is a single cycle.
    if (!g.has_edge(order.back(), 1)) throw std::invalid_argument("classify_cycle: not a cycle");
    std::vector<Exponent> w(n);
    for (int i = 0; i < n; ++i) w[i] = g.weight(order[i], order[(i + 1) % n]);
    return w;
}

bool matches_canonical_pattern(const std::vector<Exponent>& w, CycleClass tag) {
    int n = static_cast<int>(w.size());
    auto nontrivial_exactly_at = [&](std::vector<int> idx) {
        for (int i = 0; i < n; ++i) {
            bool want = std::find(idx.begin(), idx.end(), i) != idx.end();
            if ((w[i] >= 2) != want) return false;
        }
        return true;
    };
    switch (tag) {
        case CycleClass::Trivial: return nontrivial_exactly_at({});
        case CycleClass::OneEdge: return nontrivial_exactly_at({0});
        case CycleClass::TwoEdge: return nontrivial_exactly_at({0, 2}) && w[0] >= w[2];
        case CycleClass::ThreeEdgeSix:
            return nontrivial_exactly_at({0, 2, 4}) && w[0] >= w[2] && w[2] >= w[4];
    }
    return false;
}

} // namespace

CycleFamily classify_cycle(const WeightedGraph& g) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("classify_cycle: not a cycle");
    std::vector<Exponent> walk = cycle_weight_walk(g);
    GraphClosureCheck check = is_integrally_closed_graph(g);
    if (!check.closed) {
        throw std::invalid_argument("classify_cycle: cycle is not integrally closed (pattern " +
                                    std::to_string(check.violation->pattern) + ")");
    }
    int c = g.nontrivial_edge_count();
    CycleClass tag;
    if (c == 0) tag = CycleClass::Trivial;
    else if (c == 1) tag = CycleClass::OneEdge;
    else if (c == 2) tag = CycleClass::TwoEdge;
    else tag = CycleClass::ThreeEdgeSix; // closure already forces c <= 3 and n = 6

    // Scan the dihedral orbit of the weight sequence and keep the
    // lex-greatest rotation/reflection matching the canonical layout.
    std::vector<Exponent> best;
    std::vector<Exponent> rev(walk.rbegin(), walk.rend());
    for (const std::vector<Exponent>* seq : {&walk, &rev}) {
        for (int r = 0; r < n; ++r) {
            std::vector<Exponent> cand(n);
            for (int i = 0; i < n; ++i) cand[i] = (*seq)[(i + r) % n];
            if (matches_canonical_pattern(cand, tag) && cand > best) best = std::move(cand);
        }
    }
    if (best.empty()) {
        throw std::invalid_argument("classify_cycle: no canonical form (unexpected weight layout)");
    }
    return CycleFamily{n, std::move(best), c, tag};
}

WeightedGraph family_graph(const CycleFamily& f) { return build_cycle(f.n, f.weights); }

WeightedGraphEnumeration::WeightedGraphEnumeration(int n, Exponent max_w) : n_(n), max_w_(max_w) {
    if (n < 1 || n > 6) throw std::invalid_argument("enumeration: need 1 <= n <= 6");
    if (max_w < 1 || max_w > 3) throw std::invalid_argument("enumeration: need 1 <= max_w <= 3");
    for (int u = 1; u <= n; ++u) {
        for (int v = u + 1; v <= n; ++v) slots_.emplace_back(u, v);
    }
    size_ = 1;
    for (std::size_t i = 0; i < slots_.size(); ++i) size_ *= (max_w + 1);
}

WeightedGraph WeightedGraphEnumeration::at(std::size_t index) const {
    if (index >= size_) throw std::out_of_range("enumeration index");
    std::vector<WeightedEdge> edges;
    std::size_t rem = index;
    for (const auto& [u, v] : slots_) {
        auto state = static_cast<Exponent>(rem % (max_w_ + 1));
        rem /= (max_w_ + 1);
        if (state > 0) edges.push_back({u, v, state});
    }
    return WeightedGraph(n_, std::move(edges));
}

nlohmann::json graph_to_json(const WeightedGraph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const WeightedEdge& e : g.edges()) edges.push_back({e.u, e.v, e.w});
    return nlohmann::json{{"kind", "general"}, {"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

WeightedGraph graph_from_json(const nlohmann::json& j) {
    std::string kind = j.at("kind").get<std::string>();
    int n = j.at("n").get<int>();
    if (kind == "cycle") return build_cycle(n, j.at("weights").get<std::vector<Exponent>>());
    if (kind == "path") return build_path(n, j.at("weights").get<std::vector<Exponent>>());
    if (kind == "general") {
        std::vector<WeightedEdge> edges;
        for (const auto& row : j.at("edges")) {
            if (row.size() != 3) throw std::invalid_argument("graph_from_json: edge needs [u,v,w]");
            edges.push_back({row[0].get<int>(), row[1].get<int>(), row[2].get<Exponent>()});
        }
        return WeightedGraph(n, std::move(edges));
    }
    throw std::invalid_argument("graph_from_json: unknown kind '" + kind + "'");
}

} // namespace wedge
