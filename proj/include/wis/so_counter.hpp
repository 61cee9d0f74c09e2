#pragma once

#include "wis/circuit.hpp"
#include "wis/graph.hpp"
#include "wis/ordering.hpp"
#include "wis/soft_eval.hpp"

#include <optional>
#include <vector>

namespace wis {

/// One peel of the first vertex v of a strong ordering.
struct ReweightStep {
    Vertex v = 0;
    std::vector<Vertex> chain;          // N(v) in ordering position
    std::vector<VertexSet> prefix_sets; // for chain[i]: {chain[0..i)} \ N(chain[i])
    Rational factor;                    // 1 + w(v)
    WeightFunction next;                // w' on G \ v
};

/// Peels order.first() and reweights its neighbors so that
/// nbWIS(G, w) = (1 + w(v)) · nbWIS(G \ v, w'):
///   w'(v_i) = w(v_i) · nbWIS(G_i, w) / ((1 + w(v)) · nbWIS(G_i, w'))
/// in chain order, with both counts over the cograph G_i. `order` must be a
/// strong ordering of g (not rechecked here) and w must be positive on g.
ReweightStep reweight_first(const Graph& g, const StrongOrdering& order, const WeightFunction& w);

/// nbWIS(g, w) for positive w by repeated peeling. Finds an ordering when
/// none is given; verifies a given one. Throws DomainError when no strong
/// ordering exists or the given one fails, or for a nonpositive weight.
Rational count_so(const Graph& g, const WeightFunction& w, const std::optional<StrongOrdering>& order = std::nullopt,
                  SearchOptions search = {});

/// Positive circuit with input i = weight of g.vertices()[i] computing P_G.
/// Throws DomainError when `order` is not a strong ordering of g.
Circuit build_counting_circuit(const Graph& g, const StrongOrdering& order);

/// Number of independent sets of each size 0..alpha(G), through count_so at
/// uniform weights 1..n+1 and interpolation.
std::vector<BigInt> count_by_size(const Graph& g, const std::optional<StrongOrdering>& order = std::nullopt,
                                  SearchOptions search = {});

/// Precision plan for evaluating build_counting_circuit(g, ·) at w:
/// n_b from the weights and the bound prod(1 + w(v)), d = |V|, D = lcm of
/// weight denominators.
EvalPlan plan_for_weights(const Circuit& c, const Graph& g, const WeightFunction& w);

/// The full certified pipeline: plan, soft evaluation, exact recovery.
Rational count_via_soft_circuit(const Circuit& c, const Graph& g, const WeightFunction& w);

} // namespace wis
