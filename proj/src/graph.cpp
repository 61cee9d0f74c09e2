#include "wis/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace wis {

Graph::Graph(int n)
    : Graph([n] {
          VertexSet vs(static_cast<std::size_t>(std::max(n, 0)));
          for (int i = 0; i < n; ++i)
              vs[i] = i + 1;
          return vs;
      }(), {})
{
}

Graph::Graph(VertexSet vertices, std::span<const Edge> edges)
    : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end())
        throw std::invalid_argument("duplicate vertex id");
    if (!vertices_.empty() && vertices_.front() < 0)
        throw std::invalid_argument("negative vertex id");

    int max_id = vertices_.empty() ? -1 : vertices_.back();
    index_of_.assign(static_cast<std::size_t>(max_id + 1), -1);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        index_of_[vertices_[i]] = static_cast<int>(i);

    const auto n = vertices_.size();
    adjacency_.assign(n, {});
    matrix_.assign(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) {
        int a = local(u), b = local(v);
        if (a < 0 || b < 0)
            throw std::invalid_argument("edge {" + std::to_string(u) + "," + std::to_string(v) +
                                        "} has an unknown endpoint");
        if (a == b)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (matrix_[a][b])
            continue;
        matrix_[a][b] = matrix_[b][a] = true;
        adjacency_[a].push_back(v);
        adjacency_[b].push_back(u);
        ++edge_count_;
    }
    for (auto& adj : adjacency_)
        std::sort(adj.begin(), adj.end());
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    VertexSet vs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        vs[i] = i + 1;
    return Graph(std::move(vs), edges);
}

int Graph::local(Vertex v) const noexcept
{
    if (v < 0 || static_cast<std::size_t>(v) >= index_of_.size())
        return -1;
    return index_of_[v];
}

bool Graph::has_vertex(Vertex v) const noexcept { return local(v) >= 0; }

std::span<const Vertex> Graph::neighbors(Vertex v) const
{
    int a = local(v);
    if (a < 0)
        throw std::out_of_range("unknown vertex " + std::to_string(v));
    return adjacency_[a];
}

bool Graph::adjacent(Vertex u, Vertex v) const noexcept
{
    int a = local(u), b = local(v);
    return a >= 0 && b >= 0 && matrix_[a][b];
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        for (Vertex v : adjacency_[i])
            if (vertices_[i] < v)
                out.emplace_back(vertices_[i], v);
    return out;
}

bool Graph::is_dense() const noexcept
{
    return vertices_.empty() || (vertices_.front() == 1 && vertices_.back() == static_cast<int>(size()));
}

bool operator==(const Graph& a, const Graph& b)
{
    return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> subset)
{
    VertexSet keep(subset.begin(), subset.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    for (Vertex v : keep)
        if (!g.has_vertex(v))
            throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));

    std::vector<Edge> edges;
    for (Vertex u : keep)
        for (Vertex v : g.neighbors(u))
            if (u < v && std::binary_search(keep.begin(), keep.end(), v))
                edges.emplace_back(u, v);
    return Graph(std::move(keep), edges);
}

Graph remove_vertex(const Graph& g, Vertex v)
{
    if (!g.has_vertex(v))
        throw std::invalid_argument("remove_vertex: unknown vertex " + std::to_string(v));
    VertexSet rest;
    rest.reserve(g.size() - 1);
    for (Vertex u : g.vertices())
        if (u != v)
            rest.push_back(u);
    return induced_subgraph(g, rest);
}

Neighborhoods neighborhoods(const Graph& g, Vertex v)
{
    auto first = g.neighbors(v);
    Neighborhoods out;
    out.first.assign(first.begin(), first.end());
    for (Vertex u : first)
        for (Vertex x : g.neighbors(u))
            if (x != v && !g.adjacent(v, x))
                out.second.push_back(x);
    std::sort(out.second.begin(), out.second.end());
    out.second.erase(std::unique(out.second.begin(), out.second.end()), out.second.end());
    return out;
}

Graph bipartite_between(const Graph& g, std::span<const Vertex> left, std::span<const Vertex> right)
{
    VertexSet l(left.begin(), left.end()), r(right.begin(), right.end());
    std::sort(l.begin(), l.end());
    std::sort(r.begin(), r.end());
    VertexSet both;
    std::set_intersection(l.begin(), l.end(), r.begin(), r.end(), std::back_inserter(both));
    if (!both.empty())
        throw std::invalid_argument("bipartite_between: classes overlap at vertex " + std::to_string(both.front()));
    for (const auto* side : {&l, &r})
        for (Vertex v : *side)
            if (!g.has_vertex(v))
                throw std::invalid_argument("bipartite_between: unknown vertex " + std::to_string(v));

    std::vector<Edge> edges;
    for (Vertex u : l)
        for (Vertex v : g.neighbors(u))
            if (std::binary_search(r.begin(), r.end(), v))
                edges.emplace_back(u, v);
    VertexSet all = l;
    all.insert(all.end(), r.begin(), r.end());
    return Graph(std::move(all), edges);
}

Graph complement(const Graph& g)
{
    std::vector<Edge> edges;
    auto vs = g.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!g.adjacent(vs[i], vs[j]))
                edges.emplace_back(vs[i], vs[j]);
    return Graph(VertexSet(vs.begin(), vs.end()), edges);
}

std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    std::map<Vertex, bool> seen;
    for (Vertex s : g.vertices()) {
        if (seen[s])
            continue;
        VertexSet comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex x : g.neighbors(comp[head]))
                if (!seen[x]) {
                    seen[x] = true;
                    comp.push_back(x);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

WeightFunction WeightFunction::uniform(const Graph& g, const Rational& value)
{
    WeightFunction w;
    for (Vertex v : g.vertices())
        w.set(v, value);
    return w;
}

void WeightFunction::set(Vertex v, const Rational& value)
{
    if (value < 0)
        throw DomainError("negative weight for vertex " + std::to_string(v));
    weights_[v] = value;
}

const Rational& WeightFunction::at(Vertex v) const
{
    auto it = weights_.find(v);
    if (it == weights_.end())
        throw DomainError("missing weight for vertex " + std::to_string(v));
    return it->second;
}

WeightFunction WeightFunction::restrict_to(std::span<const Vertex> subset) const
{
    WeightFunction out;
    for (Vertex v : subset)
        out.weights_[v] = at(v);
    return out;
}

bool WeightFunction::positive_on(const Graph& g) const
{
    for (Vertex v : g.vertices()) {
        auto it = weights_.find(v);
        if (it == weights_.end() || it->second <= 0)
            return false;
    }
    return true;
}

std::vector<Rational> weight_vector(const Graph& g, const WeightFunction& w)
{
    std::vector<Rational> x;
    x.reserve(g.size());
    for (Vertex v : g.vertices())
        x.push_back(w.at(v));
    return x;
}

} // namespace wis
