#pragma once

#include "wis/circuit.hpp"
#include "wis/graph.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace wis {

/// Union/join decomposition tree of a cograph. Internal nodes are k-ary with
/// at least two children; the only exception is the empty graph, whose
/// cotree is a childless union.
struct Cotree {
    enum class Kind { leaf, disjoint_union, join };

    Kind kind = Kind::disjoint_union;
    Vertex vertex = 0; // leaves only
    std::vector<Cotree> children;

    static Cotree leaf(Vertex v) { return {Kind::leaf, v, {}}; }
    static Cotree make(Kind kind, std::vector<Cotree> children) { return {kind, 0, std::move(children)}; }

    std::size_t leaf_count() const;
    VertexSet leaves() const;

    /// Debug s-expression, e.g. `(J 1 (U 2 3))`.
    std::string to_string() const;
};

/// An induced P4 a-b-c-d: ab, bc, cd are edges, ac, bd, ad are not.
struct NotCograph {
    std::array<Vertex, 4> path;
};

std::variant<Cotree, NotCograph> build_cotree(const Graph& g);

/// Any induced P4, scanning middle edges.
std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g);

bool is_cograph(const Graph& g);

/// The graph a cotree describes: union = disjoint union, join = complete join.
Graph realize(const Cotree& t);

/// nbWIS of the realized graph through Q = P - 1: leaf Q = w(v),
/// union Q = Q1 Q2 + Q1 + Q2, join Q = Q1 + Q2; the result is Q + 1.
Rational cograph_count(const Cotree& t, const WeightFunction& w);

/// Emits gates computing P - 1 for t into `out`, reading each leaf weight from
/// `weight_gate(v)`. Returns the P - 1 gate, or nullopt for the empty cotree
/// (P - 1 = 0). Uses only add and mul gates.
std::optional<GateId> emit_cograph_q(CircuitBuilder& out, const Cotree& t,
                                     const std::function<GateId(Vertex)>& weight_gate);

/// Standalone positive circuit for P_G with input `input_of.at(v)` per leaf.
/// Throws std::invalid_argument when a leaf has no input or indices collide.
Circuit cograph_circuit(const Cotree& t, const std::map<Vertex, std::size_t>& input_of);

} // namespace wis
