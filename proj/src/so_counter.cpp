#include "wis/so_counter.hpp"

#include "wis/cograph.hpp"
#include "wis/interpolate.hpp"

#include <map>
#include <stdexcept>

namespace wis {

namespace {

Cotree cotree_of(const Graph& g, std::span<const Vertex> subset)
{
    auto result = build_cotree(induced_subgraph(g, subset));
    if (auto* t = std::get_if<Cotree>(&result))
        return std::move(*t);
    // G_i lies inside G[N(v)], which is P4-free for the first vertex of a
    // strong ordering.
    const auto& p = std::get<NotCograph>(result).path;
    throw std::logic_error("neighborhood subgraph has induced P4 " + std::to_string(p[0]) + "-" +
                           std::to_string(p[1]) + "-" + std::to_string(p[2]) + "-" + std::to_string(p[3]) +
                           "; ordering is not strong");
}

VertexSet prefix_set(const Graph& g, std::span<const Vertex> chain, std::size_t i)
{
    VertexSet out;
    for (std::size_t j = 0; j < i; ++j)
        if (!g.adjacent(chain[j], chain[i]))
            out.push_back(chain[j]);
    std::sort(out.begin(), out.end());
    return out;
}

void require_positive(const Graph& g, const WeightFunction& w)
{
    for (Vertex v : g.vertices())
        if (w.at(v) <= 0)
            throw DomainError("weight of vertex " + std::to_string(v) + " is not positive");
}

StrongOrdering resolve_ordering(const Graph& g, const std::optional<StrongOrdering>& order, SearchOptions search)
{
    if (order) {
        auto check = verify_strong_ordering(g, *order);
        if (!check) {
            const auto& q = *check.witness;
            throw DomainError("not a strong ordering: edges " + std::to_string(q.i) + "-" + std::to_string(q.k) +
                              ", " + std::to_string(q.i) + "-" + std::to_string(q.l) + ", " +
                              std::to_string(q.k) + "-" + std::to_string(q.j) + " present but " +
                              std::to_string(q.j) + "-" + std::to_string(q.l) + " missing");
        }
        return *order;
    }
    auto found = find_strong_ordering(g, search);
    if (!found)
        throw DomainError("graph has no strong ordering");
    return std::move(*found);
}

} // namespace

ReweightStep reweight_first(const Graph& g, const StrongOrdering& order, const WeightFunction& w)
{
    if (g.empty())
        throw std::invalid_argument("reweight_first: empty graph");
    ReweightStep step;
    step.v = order.first();
    const Rational& wv = w.at(step.v);
    if (wv <= 0)
        throw DomainError("weight of vertex " + std::to_string(step.v) + " is not positive");
    step.factor = 1 + wv;
    step.chain = chain_order(g, order, step.v);

    for (Vertex u : g.vertices())
        if (u != step.v)
            step.next.set(u, w.at(u));

    for (std::size_t i = 0; i < step.chain.size(); ++i) {
        const Vertex vi = step.chain[i];
        step.prefix_sets.push_back(prefix_set(g, step.chain, i));
        const auto& gi = step.prefix_sets.back();

        Rational ratio = 1;
        if (!gi.empty()) {
            const Cotree t = cotree_of(g, gi);
            ratio = cograph_count(t, w) / cograph_count(t, step.next);
        }
        step.next.set(vi, w.at(vi) * ratio / step.factor);
    }
    return step;
}

Rational count_so(const Graph& g, const WeightFunction& w, const std::optional<StrongOrdering>& order,
                  SearchOptions search)
{
    require_positive(g, w);
    StrongOrdering current_order = resolve_ordering(g, order, search);

    Graph current = g;
    WeightFunction current_w = w.restrict_to(g.vertices());
    Rational result = 1;
    while (!current.empty()) {
        auto step = reweight_first(current, current_order, current_w);
        result *= step.factor;
        current = remove_vertex(current, step.v);
        current_order = current_order.without_first();
        current_w = std::move(step.next);
    }
    return result;
}

Circuit build_counting_circuit(const Graph& g, const StrongOrdering& order)
{
    StrongOrdering current_order = resolve_ordering(g, order, {});

    CircuitBuilder b(g.size());
    std::map<Vertex, GateId> weight_gate;
    for (std::size_t i = 0; i < g.size(); ++i)
        weight_gate[g.vertices()[i]] = b.input(i);
    const GateId one = b.constant(1);

    // P_H + 1 gate over weights `gates`, or nullopt when H is empty (P_H = 1).
    auto emit_count = [&](const Cotree& t, const std::map<Vertex, GateId>& gates) -> std::optional<GateId> {
        auto q = emit_cograph_q(b, t, [&](Vertex v) { return gates.at(v); });
        if (!q)
            return std::nullopt;
        return b.add(*q, one);
    };

    Graph current = g;
    std::optional<GateId> product;
    while (!current.empty()) {
        const Vertex v = current_order.first();
        const GateId factor = b.add(one, weight_gate.at(v));
        const auto chain = chain_order(current, current_order, v);

        std::map<Vertex, GateId> next_gate = weight_gate;
        for (std::size_t i = 0; i < chain.size(); ++i) {
            const Vertex vi = chain[i];
            const auto gi = prefix_set(current, chain, i);
            GateId numerator = weight_gate.at(vi);
            GateId denominator = factor;
            if (!gi.empty()) {
                const Cotree t = cotree_of(current, gi);
                numerator = b.mul(numerator, *emit_count(t, weight_gate));
                denominator = b.mul(denominator, *emit_count(t, next_gate));
            }
            next_gate[vi] = b.div(numerator, denominator);
        }
        next_gate.erase(v);
        weight_gate = std::move(next_gate);

        product = product ? b.mul(*product, factor) : factor;
        current = remove_vertex(current, v);
        current_order = current_order.without_first();
    }
    b.output(product ? *product : one);
    return std::move(b).build();
}

std::vector<BigInt> count_by_size(const Graph& g, const std::optional<StrongOrdering>& order, SearchOptions search)
{
    const StrongOrdering ord = resolve_ordering(g, order, search);
    const std::size_t n = g.size();
    std::vector<SamplePoint> points;
    for (std::size_t lambda = 1; lambda <= n + 1; ++lambda) {
        Rational at(static_cast<unsigned long>(lambda));
        points.push_back({at, count_so(g, WeightFunction::uniform(g, at), ord)});
    }
    auto coeffs = interpolate_coeffs(points, n);

    std::vector<BigInt> counts;
    for (const auto& c : coeffs) {
        if (c.get_den() != 1 || c < 0)
            throw std::logic_error("count_by_size: non-integral coefficient " + to_string(c));
        counts.push_back(c.get_num());
    }
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
    return counts;
}

EvalPlan plan_for_weights(const Circuit& c, const Graph& g, const WeightFunction& w)
{
    const auto x = weight_vector(g, w);
    Rational bound = 1;
    for (const auto& q : x)
        bound *= 1 + q;
    return plan_precision(c, input_bits_for(x, bound), g.size(), denominator_lcm(x));
}

Rational count_via_soft_circuit(const Circuit& c, const Graph& g, const WeightFunction& w)
{
    require_positive(g, w);
    const auto plan = plan_for_weights(c, g, w);
    const auto x = weight_vector(g, w);
    auto soft = eval_soft(c, x, plan);
    if (soft.size() != 1)
        throw std::invalid_argument("count_via_soft_circuit: expected a single-output circuit");
    return recover_exact(soft.front(), plan);
}

} // namespace wis
