#pragma once

#include "wis/graph.hpp"

#include <vector>

namespace fixtures {

inline wis::Graph path(int n)
{
    std::vector<wis::Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(v, v + 1);
    return wis::Graph::from_edges(n, edges);
}

inline wis::Graph cycle(int n)
{
    std::vector<wis::Edge> edges;
    for (int v = 1; v <= n; ++v)
        edges.emplace_back(v, v % n + 1);
    return wis::Graph::from_edges(n, edges);
}

inline wis::Graph complete(int n)
{
    std::vector<wis::Edge> edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return wis::Graph::from_edges(n, edges);
}

// Centre 1, leaves 2..n.
inline wis::Graph star(int n)
{
    std::vector<wis::Edge> edges;
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(1, v);
    return wis::Graph::from_edges(n, edges);
}

} // namespace fixtures
