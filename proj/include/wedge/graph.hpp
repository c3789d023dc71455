#ifndef WEDGE_GRAPH_HPP
#define WEDGE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wedge/monomial.hpp"

namespace wedge {

// Edge {u, v} with 1 <= u < v <= n and weight w >= 1.
struct WeightedEdge {
    int u;
    int v;
    Exponent w;
    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

// Simple edge-weighted graph on vertices 1..n. No loops, no parallel
// edges; every weight >= 1. Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph(int n, std::vector<WeightedEdge> edges);

    int vertex_count() const { return n_; }
    const std::vector<WeightedEdge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;
    // 0 when the edge is absent.
    Exponent weight(int u, int v) const;
    int degree(int v) const;
    int nontrivial_edge_count() const;
    bool is_trivially_weighted() const { return nontrivial_edge_count() == 0; }

    friend bool operator==(const WeightedGraph&, const WeightedGraph&) = default;

private:
    int n_ = 0;
    std::vector<WeightedEdge> edges_; // sorted by (u, v)
};

// Cycle with edges e_i = {i, i+1}, indices mod n (e_n = {n, 1}); weights[i-1] = w(e_i).
WeightedGraph build_cycle(int n, const std::vector<Exponent>& weights);
// Path with edges e_i = {i, i+1}; weights has length n-1.
WeightedGraph build_path(int n, const std::vector<Exponent>& weights);

// One generator x_u^w x_v^w per edge {u,v} of weight w; ring arity equals
// the vertex count, isolated vertices included.
MonomialIdeal edge_ideal(const WeightedGraph& g);

struct InducedSubgraph {
    WeightedGraph graph;
    // vertex_map[i-1] = original label of new vertex i.
    std::vector<int> vertex_map;
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, std::vector<int> vertices);
InducedSubgraph delete_vertex(const WeightedGraph& g, int v);

// The three weight patterns whose presence as an induced subgraph is
// equivalent to the edge ideal not being integrally closed:
//   1 - a 2-edge path with both edges non-trivial,
//   2 - two vertex-disjoint non-trivial edges whose endpoints induce
//       exactly those two edges,
//   3 - a triangle with all three edges non-trivial.
struct ClosureViolation {
    int pattern;
    std::vector<int> vertices;
};

struct GraphClosureCheck {
    bool closed;
    std::optional<ClosureViolation> violation;
};

GraphClosureCheck is_integrally_closed_graph(const WeightedGraph& g);

enum class CycleClass { Trivial, OneEdge, TwoEdge, ThreeEdgeSix };

std::string cycle_class_name(CycleClass c);

// An integrally closed weighted cycle, with weights rotated/reflected to
// the canonical form: non-trivial weights at positions 1 (one edge),
// 1 and 3 (two edges, w1 >= w3), or 1, 3, 5 (three edges, n = 6,
// w1 >= w3 >= w5).
struct CycleFamily {
    int n;
    std::vector<Exponent> weights;
    int nontrivial_count;
    CycleClass tag;
};

// Requires g to be a cycle and integrally closed; throws std::invalid_argument
// otherwise.
CycleFamily classify_cycle(const WeightedGraph& g);

// Convenience: the canonical cycle of a family and its edge ideal.
WeightedGraph family_graph(const CycleFamily& f);

// All simple graphs on exactly n labeled vertices with every potential
// edge absent or carrying a weight in {1..max_w}. Restartable and
// random-access; graphs are decoded from an index.
class WeightedGraphEnumeration {
public:
    WeightedGraphEnumeration(int n, Exponent max_w);

    std::size_t size() const { return size_; }
    WeightedGraph at(std::size_t index) const;

    class iterator {
    public:
        iterator(const WeightedGraphEnumeration* e, std::size_t i) : e_(e), i_(i) {}
        WeightedGraph operator*() const { return e_->at(i_); }
        iterator& operator++() { ++i_; return *this; }
        bool operator!=(const iterator& o) const { return i_ != o.i_; }
    private:
        const WeightedGraphEnumeration* e_;
        std::size_t i_;
    };
    iterator begin() const { return iterator(this, 0); }
    iterator end() const { return iterator(this, size_); }

private:
    int n_;
    Exponent max_w_;
    std::vector<std::pair<int, int>> slots_; // all pairs (u, v), u < v
    std::size_t size_;
};

// Graph JSON: {"kind":"cycle"|"path","n":int,"weights":[...]} or
// {"kind":"general","n":int,"edges":[[u,v,w],...]}.
nlohmann::json graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const nlohmann::json& j);

} // namespace wedge

#endif
