#include "wis/testkit.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

namespace wis::testkit {

namespace {

using Mask = std::uint32_t;

struct LocalGraph {
    std::vector<Vertex> ids;
    std::vector<Mask> closed; // closed neighborhood per local index
};

LocalGraph localize(const Graph& g)
{
    if (g.size() > oracle_vertex_limit)
        throw BudgetExceeded("oracle: " + std::to_string(g.size()) + " vertices exceeds the limit of " +
                             std::to_string(oracle_vertex_limit));
    LocalGraph lg;
    lg.ids.assign(g.vertices().begin(), g.vertices().end());
    lg.closed.assign(lg.ids.size(), 0);
    for (std::size_t a = 0; a < lg.ids.size(); ++a) {
        lg.closed[a] |= Mask{1} << a;
        for (std::size_t b = 0; b < lg.ids.size(); ++b)
            if (g.adjacent(lg.ids[a], lg.ids[b]))
                lg.closed[a] |= Mask{1} << b;
    }
    return lg;
}

Rational count_rec(const LocalGraph& lg, const std::vector<Rational>& w, Mask remaining)
{
    if (remaining == 0)
        return 1;
    const int v = std::countr_zero(remaining);
    return count_rec(lg, w, remaining & ~(Mask{1} << v)) + w[v] * count_rec(lg, w, remaining & ~lg.closed[v]);
}

void sizes_rec(const LocalGraph& lg, Mask remaining, std::size_t size, std::vector<std::uint64_t>& counts)
{
    if (remaining == 0) {
        ++counts[size];
        return;
    }
    const int v = std::countr_zero(remaining);
    sizes_rec(lg, remaining & ~(Mask{1} << v), size, counts);
    sizes_rec(lg, remaining & ~lg.closed[v], size + 1, counts);
}

Mask full_mask(std::size_t n) { return n == 0 ? 0 : (n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1); }

using Rng = std::mt19937_64;

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

std::vector<Vertex> shuffled_ids(int n, Rng& rng)
{
    std::vector<Vertex> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 1);
    std::shuffle(ids.begin(), ids.end(), rng);
    return ids;
}

Graph relabeled(int n, const std::vector<Edge>& edges, const std::vector<Vertex>& ids)
{
    std::vector<Edge> mapped;
    for (auto [u, v] : edges)
        mapped.emplace_back(ids[u - 1], ids[v - 1]);
    return Graph::from_edges(n, mapped);
}

Graph random_tree(int n, Rng& rng)
{
    std::vector<Edge> edges;
    for (int v = 2; v <= n; ++v)
        edges.emplace_back(uniform(rng, 1, v - 1), v);
    return relabeled(n, edges, shuffled_ids(n, rng));
}

std::vector<int> random_reach(int left, int right, Rng& rng)
{
    std::vector<int> reach(static_cast<std::size_t>(left));
    for (auto& r : reach)
        r = uniform(rng, 0, right);
    std::sort(reach.begin(), reach.end());
    return reach;
}

Graph random_bipartite_permutation(int n, Rng& rng)
{
    // Union of two increasing sequences avoids the pattern 321, so the
    // inversion graph is bipartite.
    const int k = uniform(rng, 0, n);
    auto pick = [&](int count) {
        std::vector<int> all(static_cast<std::size_t>(n));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<bool> chosen(static_cast<std::size_t>(n), false);
        for (int i = 0; i < count; ++i)
            chosen[all[i]] = true;
        return chosen;
    };
    auto pos_in_first = pick(k);
    auto val_in_first = pick(k);
    std::vector<int> first_vals, second_vals;
    for (int v = 0; v < n; ++v)
        (val_in_first[v] ? first_vals : second_vals).push_back(v);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::size_t a = 0, b = 0;
    for (int p = 0; p < n; ++p)
        perm[p] = pos_in_first[p] ? first_vals[a++] : second_vals[b++];

    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (perm[i] > perm[j])
                edges.emplace_back(i + 1, j + 1);
    return Graph::from_edges(n, edges);
}

Graph random_complete_bipartite(int n, Rng& rng)
{
    if (n == 1)
        return Graph(1);
    const int a = uniform(rng, 1, n - 1);
    std::vector<Edge> edges;
    for (int u = 1; u <= a; ++u)
        for (int v = a + 1; v <= n; ++v)
            edges.emplace_back(u, v);
    return relabeled(n, edges, shuffled_ids(n, rng));
}

struct BuiltCotree {
    Cotree tree;
    bool clique;
};

BuiltCotree cotree_rec(std::span<const Vertex> vs, Rng& rng, bool chordal)
{
    if (vs.size() == 1)
        return {Cotree::leaf(vs.front()), true};
    const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(vs.size()) - 1));
    auto left = cotree_rec(vs.subspan(0, k), rng, chordal);
    auto right = cotree_rec(vs.subspan(k), rng, chordal);
    bool join = uniform(rng, 0, 1) == 1;
    if (chordal && !left.clique && !right.clique)
        join = false;
    const auto kind = join ? Cotree::Kind::join : Cotree::Kind::disjoint_union;

    std::vector<Cotree> children;
    for (auto* part : {&left.tree, &right.tree}) {
        if (part->kind == kind)
            for (auto& c : part->children)
                children.push_back(std::move(c));
        else
            children.push_back(std::move(*part));
    }
    return {Cotree::make(kind, std::move(children)), join && left.clique && right.clique};
}

std::size_t cotree_expression_rec(const Cotree& t, CwExpression& e)
{
    if (t.kind == Cotree::Kind::leaf)
        return e.create(1, t.vertex);
    std::size_t acc = cotree_expression_rec(t.children.front(), e);
    for (std::size_t c = 1; c < t.children.size(); ++c) {
        std::size_t next = cotree_expression_rec(t.children[c], e);
        if (t.kind == Cotree::Kind::join) {
            next = e.relabel(1, 2, next);
            acc = e.relabel(2, 1, e.add_edges(1, 2, e.disjoint_union(acc, next)));
        } else {
            acc = e.disjoint_union(acc, next);
        }
    }
    return acc;
}

CwExpression random_expression(int n, Rng& rng)
{
    CwExpression e;
    e.labels = uniform(rng, 1, 4);
    auto ids = shuffled_ids(n, rng);

    std::function<std::size_t(std::span<const Vertex>)> build = [&](std::span<const Vertex> vs) -> std::size_t {
        std::size_t node;
        if (vs.size() == 1) {
            node = e.create(uniform(rng, 1, e.labels), vs.front());
        } else {
            const auto k = static_cast<std::size_t>(uniform(rng, 1, static_cast<int>(vs.size()) - 1));
            std::size_t left = build(vs.subspan(0, k));
            std::size_t right = build(vs.subspan(k));
            node = e.disjoint_union(left, right);
        }
        if (e.labels >= 2) {
            const int ops = uniform(rng, 0, 2);
            for (int o = 0; o < ops; ++o) {
                Label i = uniform(rng, 1, e.labels);
                Label j = uniform(rng, 1, e.labels - 1);
                if (j >= i)
                    ++j;
                node = uniform(rng, 0, 2) > 0 ? e.add_edges(i, j, node) : e.relabel(i, j, node);
            }
        }
        return node;
    };
    build(ids);
    return e;
}

} // namespace

Rational oracle_count(const Graph& g, const WeightFunction& w)
{
    auto lg = localize(g);
    std::vector<Rational> weights;
    for (Vertex v : lg.ids)
        weights.push_back(w.at(v));
    return count_rec(lg, weights, full_mask(lg.ids.size()));
}

std::vector<BigInt> oracle_coeffs(const Graph& g)
{
    auto lg = localize(g);
    std::vector<std::uint64_t> counts(lg.ids.size() + 1, 0);
    sizes_rec(lg, full_mask(lg.ids.size()), 0, counts);
    while (counts.size() > 1 && counts.back() == 0)
        counts.pop_back();
    std::vector<BigInt> out;
    for (auto c : counts)
        out.emplace_back(static_cast<unsigned long>(c));
    return out;
}

std::vector<StrongOrdering> oracle_orderings(const Graph& g)
{
    if (g.size() > ordering_oracle_limit)
        throw BudgetExceeded("oracle_orderings: more than " + std::to_string(ordering_oracle_limit) + " vertices");
    std::vector<Vertex> perm(g.vertices().begin(), g.vertices().end());
    std::vector<StrongOrdering> out;
    do {
        StrongOrdering order(g, perm);
        if (verify_strong_ordering(g, order))
            out.push_back(std::move(order));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

bool oracle_has_strong_ordering(const Graph& g) { return !oracle_orderings(g).empty(); }

std::string_view kind_name(Kind k)
{
    switch (k) {
    case Kind::tree: return "tree";
    case Kind::chain_graph: return "chain_graph";
    case Kind::cograph: return "cograph";
    case Kind::bipartite_permutation: return "bipartite_permutation";
    case Kind::complete_bipartite: return "complete_bipartite";
    case Kind::random_cw_expr: return "random_cw_expr";
    }
    return "?";
}

std::optional<Kind> parse_kind(std::string_view name)
{
    for (auto k : {Kind::tree, Kind::chain_graph, Kind::cograph, Kind::bipartite_permutation,
                   Kind::complete_bipartite, Kind::random_cw_expr})
        if (kind_name(k) == name)
            return k;
    return std::nullopt;
}

Instance generate(const InstanceSpec& spec)
{
    const int max_size = spec.kind == Kind::random_cw_expr ? 64 : 2000;
    if (spec.size < 1 || spec.size > max_size)
        throw std::invalid_argument("generate: size " + std::to_string(spec.size) + " outside 1.." +
                                    std::to_string(max_size) + " for " + std::string(kind_name(spec.kind)));
    // Mix the kind into the seed so different kinds with one seed differ.
    Rng rng(spec.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(spec.kind) + 1);
    const int n = spec.size;
    switch (spec.kind) {
    case Kind::tree: return random_tree(n, rng);
    case Kind::chain_graph: {
        if (n == 1)
            return Graph(1);
        const int left = uniform(rng, 1, n - 1);
        return chain_graph_with_expression(random_reach(left, n - left, rng), n - left).graph;
    }
    case Kind::cograph: {
        std::vector<Vertex> ids(static_cast<std::size_t>(n));
        std::iota(ids.begin(), ids.end(), 1);
        return realize(random_cotree(ids, rng(), true));
    }
    case Kind::bipartite_permutation: return random_bipartite_permutation(n, rng);
    case Kind::complete_bipartite: return random_complete_bipartite(n, rng);
    case Kind::random_cw_expr: return random_expression(n, rng);
    }
    throw std::invalid_argument("generate: unknown kind");
}

Graph generate_graph(const InstanceSpec& spec)
{
    auto inst = generate(spec);
    if (auto* g = std::get_if<Graph>(&inst))
        return std::move(*g);
    return realize(std::get<CwExpression>(inst)).graph;
}

Cotree random_cotree(std::span<const Vertex> vertices, std::uint64_t seed, bool chordal)
{
    if (vertices.empty())
        return Cotree::make(Cotree::Kind::disjoint_union, {});
    Rng rng(seed);
    std::vector<Vertex> vs(vertices.begin(), vertices.end());
    std::shuffle(vs.begin(), vs.end(), rng);
    return cotree_rec(vs, rng, chordal).tree;
}

CwExpression cotree_expression(const Cotree& t)
{
    CwExpression e;
    e.labels = 2;
    cotree_expression_rec(t, e);
    return e;
}

WeightFunction random_positive_weights(const Graph& g, std::uint64_t seed, int max_part)
{
    Rng rng(seed);
    WeightFunction w;
    for (Vertex v : g.vertices()) {
        const int num = uniform(rng, 1, max_part);
        const int den = uniform(rng, 1, max_part);
        w.set(v, make_rational(num, den));
    }
    return w;
}

WeightFunction random_small_weights(const Graph& g, std::uint64_t seed)
{
    static const Rational choices[] = {Rational(0), Rational(1, 2), Rational(1), Rational(2), Rational(3)};
    Rng rng(seed);
    WeightFunction w;
    for (Vertex v : g.vertices())
        w.set(v, choices[uniform(rng, 0, 4)]);
    return w;
}

ChainGraphInstance chain_graph_with_expression(const std::vector<int>& reach, int right_size)
{
    if (!std::is_sorted(reach.begin(), reach.end()))
        throw std::invalid_argument("chain graph reach must be nondecreasing");
    const int left = static_cast<int>(reach.size());
    const int n = left + right_size;
    std::vector<Edge> edges;
    for (int i = 0; i < left; ++i) {
        if (reach[i] < 0 || reach[i] > right_size)
            throw std::invalid_argument("chain graph reach out of range");
        for (int r = 1; r <= reach[i]; ++r)
            edges.emplace_back(i + 1, left + r);
    }

    // Labels: 1 = right vertex still collecting neighbors, 2 = left vertex
    // being attached, 3 = finished.
    CwExpression e;
    e.labels = 3;
    std::optional<std::size_t> acc;
    auto join_in = [&](std::size_t node) { acc = acc ? e.disjoint_union(*acc, node) : node; };
    for (int i = 0; i < left; ++i)
        if (reach[i] == 0)
            join_in(e.create(3, i + 1));
    for (int r = 1; r <= right_size; ++r) {
        join_in(e.create(1, left + r));
        for (int i = 0; i < left; ++i) {
            if (reach[i] != r)
                continue;
            join_in(e.create(2, i + 1));
            acc = e.relabel(2, 3, e.add_edges(1, 2, *acc));
        }
    }
    return {Graph::from_edges(n, edges), std::move(e)};
}

} // namespace wis::testkit
