#pragma once

#include "wis/graph.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace wis {

/// Label in 1..labels of the owning expression.
using Label = int;

/// Subset of labels; bit (l - 1) stands for label l.
using LabelSet = std::uint32_t;

inline constexpr int max_labels = 20;

/// Λ-expression stored as an arena of nodes. Children always precede their
/// parent, so a forward pass over `nodes` is a valid bottom-up order, and a
/// node index is the node's identity.
struct CwExpression {
    enum class Op { create, disjoint_union, add_edges, relabel };

    struct Node {
        Op op = Op::create;
        Label i = 0;          // create: label; add_edges/relabel: first label
        Label j = 0;          // add_edges/relabel: second label (relabel i -> j)
        Vertex vertex = 0;    // create
        std::size_t left = 0; // union: left; add_edges/relabel: child
        std::size_t right = 0;
    };

    int labels = 0;
    std::vector<Node> nodes;

    std::size_t root() const { return nodes.size() - 1; }
    std::size_t size() const { return nodes.size(); }

    // Builders append a node and return its index. They enforce i != j and
    // label range but not vertex distinctness; validate() checks the whole tree.
    std::size_t create(Label label, Vertex v);
    std::size_t disjoint_union(std::size_t left, std::size_t right);
    std::size_t add_edges(Label i, Label j, std::size_t child);
    std::size_t relabel(Label from, Label to, std::size_t child);

    /// Throws std::invalid_argument when labels are out of range, i == j,
    /// a create-vertex repeats, or the arena has unreachable nodes.
    void validate() const;
};

/// Parses
///   labels <l>
///   expr := (v <label> <vertex>) | (u <expr> <expr>) | (e <i> <j> <expr>) | (r <i> <j> <expr>)
/// Errors report line and column.
CwExpression parse_cw(std::string_view text);
std::string serialize_cw(const CwExpression& e);

struct LabeledGraph {
    Graph graph;
    std::map<Vertex, Label> label;
};

LabeledGraph realize(const CwExpression& e);

/// c(node, Γ) for every node and every Γ ⊆ Λ.
struct DpTable {
    int labels = 0;
    std::vector<std::vector<Rational>> rows; // rows[node][Γ]
    std::uint64_t evaluations = 0;

    const Rational& at(std::size_t node, LabelSet gamma) const { return rows.at(node).at(gamma); }
};

/// Fills the table bottom-up with
///   create_i(v): 1 + w(v) if i ∈ Γ, else 1
///   σ1 ⊕ σ2:     c(σ1, Γ) · c(σ2, Γ)
///   η_{i,j}(σ):  c(σ, Γ∖i) + c(σ, Γ∖j) − c(σ, Γ∖{i,j})
///   ρ_{i→j}(σ):  c(σ, Γ ∪ {i}) if j ∈ Γ, else c(σ, Γ∖i)
/// Weights may be zero; a missing weight throws DomainError.
DpTable count_cw_table(const CwExpression& e, const WeightFunction& w);

/// nbWIS of the described graph: c(root, Λ).
Rational count_cw(const CwExpression& e, const WeightFunction& w);

} // namespace wis
