#pragma once

#include "wis/cliquewidth.hpp"
#include "wis/cograph.hpp"
#include "wis/graph.hpp"
#include "wis/ordering.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

// Brute-force oracles and deterministic instance generators.
namespace wis::testkit {

inline constexpr std::size_t oracle_vertex_limit = 25;
inline constexpr std::size_t ordering_oracle_limit = 8;

/// Sum over all independent sets S of prod_{v in S} w(v), by include/exclude
/// branching on the lowest-id remaining vertex. Throws BudgetExceeded for
/// more than 25 vertices.
Rational oracle_count(const Graph& g, const WeightFunction& w);

/// Entry k = number of independent sets of size k, trailing zeros trimmed.
std::vector<BigInt> oracle_coeffs(const Graph& g);

/// Every strong ordering, by filtering all permutations (n <= 8).
std::vector<StrongOrdering> oracle_orderings(const Graph& g);
bool oracle_has_strong_ordering(const Graph& g);

enum class Kind { tree, chain_graph, cograph, bipartite_permutation, complete_bipartite, random_cw_expr };

std::string_view kind_name(Kind k);
std::optional<Kind> parse_kind(std::string_view name);

struct InstanceSpec {
    Kind kind = Kind::tree;
    int size = 1;
    std::uint64_t seed = 0;
};

using Instance = std::variant<Graph, CwExpression>;

/// Deterministic in (kind, size, seed). Graph kinds use vertices 1..size;
/// `cograph` emits chordal cographs (every join has a clique side), which
/// keeps every graph kind strongly orderable. Throws std::invalid_argument
/// for sizes outside 1..2000 (random_cw_expr: 1..64).
Instance generate(const InstanceSpec& spec);
/// The graph of generate(spec); expressions are realized.
Graph generate_graph(const InstanceSpec& spec);

/// Random cotree on the given vertices; `chordal` restricts joins as above.
Cotree random_cotree(std::span<const Vertex> vertices, std::uint64_t seed, bool chordal = false);

/// Expression with 2 labels describing the cotree's graph.
CwExpression cotree_expression(const Cotree& t);

/// Random positive rational weights with numerators and denominators in
/// 1..max_part.
WeightFunction random_positive_weights(const Graph& g, std::uint64_t seed, int max_part = 16);

/// Weights drawn from {0, 1/2, 1, 2, 3}.
WeightFunction random_small_weights(const Graph& g, std::uint64_t seed);

/// Chain graph on sides {1..a} and {a+1..n}: left vertex i sees the first
/// `reach[i-1]` right vertices (reach nondecreasing). Also returns a
/// 3-label expression for it.
struct ChainGraphInstance {
    Graph graph;
    CwExpression expression;
};
ChainGraphInstance chain_graph_with_expression(const std::vector<int>& reach, int right_size);

} // namespace wis::testkit
