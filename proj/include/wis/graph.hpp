#pragma once

#include "wis/rational.hpp"

#include <map>
#include <span>
#include <utility>
#include <vector>

namespace wis {

/// Vertex identity. Files use dense ids 1..n; induced subgraphs keep the
/// ids of their parent graph.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
/// Sorted ascending, no duplicates.
using VertexSet = std::vector<Vertex>;

/// Simple undirected graph over an explicit set of vertex ids.
/// Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Vertices 1..n, no edges.
    explicit Graph(int n);

    /// Throws std::invalid_argument on unknown endpoints or loops.
    /// Duplicate edges (in either orientation) are merged.
    Graph(VertexSet vertices, std::span<const Edge> edges);

    /// Convenience for dense graphs on 1..n.
    static Graph from_edges(int n, std::span<const Edge> edges);

    std::size_t size() const noexcept { return vertices_.size(); }
    bool empty() const noexcept { return vertices_.empty(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> vertices() const noexcept { return vertices_; }
    bool has_vertex(Vertex v) const noexcept;

    /// Sorted neighbor ids. Throws std::out_of_range for unknown v.
    std::span<const Vertex> neighbors(Vertex v) const;
    std::size_t degree(Vertex v) const { return neighbors(v).size(); }
    bool adjacent(Vertex u, Vertex v) const noexcept;

    /// Edges as (u, v) with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    /// True when the vertex set is exactly 1..n.
    bool is_dense() const noexcept;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    int local(Vertex v) const noexcept;

    VertexSet vertices_;
    std::vector<int> index_of_; // id -> local index, -1 when absent
    std::vector<std::vector<Vertex>> adjacency_;
    std::vector<std::vector<bool>> matrix_;
    std::size_t edge_count_ = 0;
};

/// G[U]. Throws std::invalid_argument when U names a vertex outside G.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset);

/// G \ v.
Graph remove_vertex(const Graph& g, Vertex v);

struct Neighborhoods {
    VertexSet first;  // N(v)
    VertexSet second; // vertices at distance exactly 2
};

Neighborhoods neighborhoods(const Graph& g, Vertex v);

/// G[U, W]: vertex set U ∪ W, only the edges with one end in each class.
/// Throws std::invalid_argument when the classes overlap or leave G.
Graph bipartite_between(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right);

Graph complement(const Graph& g);

/// Components as sorted vertex sets, ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);

/// Nonnegative rational weight per vertex. Missing vertices read as 1 only
/// through the file reader; lookups of unknown vertices throw.
class WeightFunction {
public:
    WeightFunction() = default;

    static WeightFunction uniform(const Graph& g, const Rational& value);
    static WeightFunction ones(const Graph& g) { return uniform(g, Rational(1)); }

    void set(Vertex v, const Rational& value);
    bool contains(Vertex v) const { return weights_.count(v) != 0; }

    /// Throws DomainError for a vertex without a weight.
    const Rational& at(Vertex v) const;
    const Rational& operator[](Vertex v) const { return at(v); }

    /// w|_U
    WeightFunction restrict_to(std::span<const Vertex> subset) const;

    /// True when every vertex of g has a weight > 0.
    bool positive_on(const Graph& g) const;

    const std::map<Vertex, Rational>& entries() const noexcept { return weights_; }

    friend bool operator==(const WeightFunction&, const WeightFunction&) = default;

private:
    std::map<Vertex, Rational> weights_;
};

/// Weight vector ordered like g.vertices(); this is the input vector of a
/// counting circuit built for g.
std::vector<Rational> weight_vector(const Graph& g, const WeightFunction& w);

} // namespace wis
