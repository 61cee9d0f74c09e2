#pragma once

#include "wis/graph.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace wis {

/// A vertex order v_1..v_n with its inverse. Construction only checks that
/// the order is a permutation of the given graph's vertices; strongness is
/// established by verify_strong_ordering.
class StrongOrdering {
public:
    StrongOrdering() = default;

    /// Throws std::invalid_argument when `order` is not a permutation of
    /// g.vertices().
    StrongOrdering(const Graph& g, std::vector<Vertex> order);

    std::span<const Vertex> order() const noexcept { return order_; }
    std::size_t size() const noexcept { return order_.size(); }
    Vertex first() const { return order_.front(); }
    std::size_t position(Vertex v) const { return position_.at(v); }

    /// The order on the remaining vertices after removing the first one.
    StrongOrdering without_first() const;

    /// Restriction to the vertices of g (which must be a subset).
    StrongOrdering restricted_to(const Graph& g) const;

    friend bool operator==(const StrongOrdering& a, const StrongOrdering& b) { return a.order_ == b.order_; }

private:
    std::vector<Vertex> order_;
    std::unordered_map<Vertex, std::size_t> position_;
};

/// Violated instance of the strong-ordering condition, as vertices:
/// pos(i) < pos(j), pos(k) < pos(l), ik, il, kj are edges, jl is not, j != l.
struct Quadruple {
    Vertex i, j, k, l;
};

struct OrderingCheck {
    bool ok = true;
    std::optional<Quadruple> witness;
    explicit operator bool() const noexcept { return ok; }
};

OrderingCheck verify_strong_ordering(const Graph& g, const StrongOrdering& order);

struct SearchOptions {
    std::uint64_t node_budget = 1'000'000;
};

/// Backtracking over prefixes. Returns nullopt only after exhausting the
/// search; throws BudgetExceeded when the node budget runs out first.
std::optional<StrongOrdering> find_strong_ordering(const Graph& g, SearchOptions options = {});

/// N(v) sorted by position in `order`.
std::vector<Vertex> chain_order(const Graph& g, const StrongOrdering& order, Vertex v);

/// True when N_H(order[0]) ⊆ N_H(order[1]) ⊆ ... in h. Throws
/// std::invalid_argument when `order` repeats a vertex or names one outside h.
bool verify_chain(const Graph& h, std::span<const Vertex> order);

struct FirstVertexReport {
    bool cograph_ok = false;
    bool chain_ok = false;
};

/// With u = order.first(): is G[N(u)] P4-free, and is G[N(u), N²(u)] a chain
/// graph along chain_order(u)?
FirstVertexReport verify_first_vertex_properties(const Graph& g, const StrongOrdering& order);

/// Ordering file: one line of space-separated vertex ids.
StrongOrdering parse_ordering(std::string_view text, const Graph& g);
std::string serialize_ordering(const StrongOrdering& order);

} // namespace wis
