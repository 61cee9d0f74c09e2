#include "wis/cograph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace wis {

std::size_t Cotree::leaf_count() const
{
    if (kind == Kind::leaf)
        return 1;
    std::size_t n = 0;
    for (const auto& c : children)
        n += c.leaf_count();
    return n;
}

VertexSet Cotree::leaves() const
{
    VertexSet out;
    std::vector<const Cotree*> stack{this};
    while (!stack.empty()) {
        const Cotree* t = stack.back();
        stack.pop_back();
        if (t->kind == Kind::leaf)
            out.push_back(t->vertex);
        for (const auto& c : t->children)
            stack.push_back(&c);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string Cotree::to_string() const
{
    if (kind == Kind::leaf)
        return std::to_string(vertex);
    std::string out = kind == Kind::join ? "(J" : "(U";
    for (const auto& c : children)
        out += ' ' + c.to_string();
    return out + ')';
}

std::optional<std::array<Vertex, 4>> find_induced_p4(const Graph& g)
{
    // Middle edge b-c, then a in N(b) \ N[c] and d in N(c) \ N[b], a !~ d.
    for (auto [b, c] : g.edges()) {
        for (int flip = 0; flip < 2; ++flip) {
            if (flip)
                std::swap(b, c);
            for (Vertex a : g.neighbors(b)) {
                if (a == c || g.adjacent(a, c))
                    continue;
                for (Vertex d : g.neighbors(c)) {
                    if (d == b || d == a || g.adjacent(d, b) || g.adjacent(a, d))
                        continue;
                    return std::array<Vertex, 4>{a, b, c, d};
                }
            }
        }
    }
    return std::nullopt;
}

bool is_cograph(const Graph& g) { return !find_induced_p4(g).has_value(); }

namespace {

struct NotCographSignal {
    std::array<Vertex, 4> path;
};

Cotree decompose(const Graph& g)
{
    if (g.size() == 1)
        return Cotree::leaf(g.vertices().front());

    auto parts = connected_components(g);
    auto kind = Cotree::Kind::disjoint_union;
    if (parts.size() == 1) {
        parts = connected_components(complement(g));
        kind = Cotree::Kind::join;
    }
    if (parts.size() == 1) {
        // Connected and co-connected on >= 2 vertices: contains a P4.
        auto p4 = find_induced_p4(g);
        if (!p4)
            throw std::logic_error("connected, co-connected graph without an induced P4");
        throw NotCographSignal{*p4};
    }

    std::vector<Cotree> children;
    children.reserve(parts.size());
    for (const auto& part : parts) {
        auto child = decompose(induced_subgraph(g, part));
        // A child of the same kind cannot occur: its parts would be parts here.
        children.push_back(std::move(child));
    }
    return Cotree::make(kind, std::move(children));
}

void realize_into(const Cotree& t, std::vector<Edge>& edges)
{
    for (const auto& c : t.children)
        realize_into(c, edges);
    if (t.kind != Cotree::Kind::join)
        return;
    for (std::size_t i = 0; i < t.children.size(); ++i)
        for (std::size_t j = i + 1; j < t.children.size(); ++j)
            for (Vertex a : t.children[i].leaves())
                for (Vertex b : t.children[j].leaves())
                    edges.emplace_back(a, b);
}

Rational count_q(const Cotree& t, const WeightFunction& w)
{
    if (t.kind == Cotree::Kind::leaf)
        return w.at(t.vertex);
    Rational q = 0;
    for (const auto& c : t.children) {
        Rational qc = count_q(c, w);
        if (t.kind == Cotree::Kind::join)
            q += qc;
        else
            q = q * qc + q + qc;
    }
    return q;
}

} // namespace

std::variant<Cotree, NotCograph> build_cotree(const Graph& g)
{
    if (g.empty())
        return Cotree::make(Cotree::Kind::disjoint_union, {});
    try {
        return decompose(g);
    } catch (const NotCographSignal& s) {
        return NotCograph{s.path};
    }
}

Graph realize(const Cotree& t)
{
    std::vector<Edge> edges;
    realize_into(t, edges);
    return Graph(t.leaves(), edges);
}

Rational cograph_count(const Cotree& t, const WeightFunction& w) { return count_q(t, w) + 1; }

std::optional<GateId> emit_cograph_q(CircuitBuilder& out, const Cotree& t,
                                     const std::function<GateId(Vertex)>& weight_gate)
{
    if (t.kind == Cotree::Kind::leaf)
        return weight_gate(t.vertex);

    std::optional<GateId> acc;
    for (const auto& c : t.children) {
        auto q = emit_cograph_q(out, c, weight_gate);
        if (!q)
            continue;
        if (!acc) {
            acc = q;
        } else if (t.kind == Cotree::Kind::join) {
            acc = out.add(*acc, *q);
        } else {
            auto prod = out.mul(*acc, *q);
            acc = out.add(out.add(prod, *acc), *q);
        }
    }
    return acc;
}

Circuit cograph_circuit(const Cotree& t, const std::map<Vertex, std::size_t>& input_of)
{
    std::set<std::size_t> used;
    for (Vertex v : t.leaves()) {
        auto it = input_of.find(v);
        if (it == input_of.end())
            throw std::invalid_argument("cograph_circuit: no input index for vertex " + std::to_string(v));
        if (!used.insert(it->second).second)
            throw std::invalid_argument("cograph_circuit: input index " + std::to_string(it->second) +
                                        " assigned twice");
    }

    CircuitBuilder b;
    // Inputs first so that input gate ids do not depend on cotree shape.
    for (std::size_t i : used)
        b.input(i);
    auto q = emit_cograph_q(b, t, [&](Vertex v) { return b.input(input_of.at(v)); });
    auto one = b.constant(1);
    b.output(q ? b.add(*q, one) : one);
    return std::move(b).build();
}

} // namespace wis
