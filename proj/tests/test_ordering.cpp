#include "doctest.h"
#include "fixtures.hpp"

#include "wis/ordering.hpp"
#include "wis/testkit.hpp"

#include <random>

using namespace wis;
namespace tk = wis::testkit;

TEST_CASE("strong ordering verification")
{
    const Graph c4 = fixtures::cycle(4);
    CHECK(verify_strong_ordering(c4, StrongOrdering(c4, {1, 2, 3, 4})));
    const Graph p4 = fixtures::path(4);
    CHECK(verify_strong_ordering(p4, StrongOrdering(p4, {1, 2, 3, 4})));

    const Graph c6 = fixtures::cycle(6);
    auto check = verify_strong_ordering(c6, StrongOrdering(c6, {1, 2, 3, 4, 5, 6}));
    REQUIRE_FALSE(check);
    REQUIRE(check.witness);
    auto [i, j, k, l] = *check.witness;
    const StrongOrdering order(c6, {1, 2, 3, 4, 5, 6});
    CHECK(order.position(i) < order.position(j));
    CHECK(order.position(k) < order.position(l));
    CHECK(c6.adjacent(i, k));
    CHECK(c6.adjacent(i, l));
    CHECK(c6.adjacent(k, j));
    CHECK_FALSE(c6.adjacent(j, l));
    CHECK(j != l);
}

TEST_CASE("a violation needs j distinct from l")
{
    // With j = l allowed, i=1, k=2, j=l=3 would reject every order of K3.
    const Graph k3 = fixtures::complete(3);
    CHECK(verify_strong_ordering(k3, StrongOrdering(k3, {1, 2, 3})));
    CHECK(tk::oracle_orderings(k3).size() == 6);
    CHECK(tk::oracle_orderings(fixtures::complete(2)).size() == 2);
}

TEST_CASE("ordering construction rejects non-permutations")
{
    const Graph p3 = fixtures::path(3);
    CHECK_THROWS_AS(StrongOrdering(p3, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrongOrdering(p3, {1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(StrongOrdering(p3, {1, 2, 4}), std::invalid_argument);

    StrongOrdering o(p3, {3, 1, 2});
    CHECK(o.first() == 3);
    CHECK(o.position(2) == 2);
    auto rest = o.without_first();
    CHECK(rest.first() == 1);
    CHECK(rest.position(2) == 1);
    const Vertex keep[] = {2, 3};
    auto restricted = o.restricted_to(induced_subgraph(p3, keep));
    CHECK(std::vector<Vertex>(restricted.order().begin(), restricted.order().end()) == std::vector<Vertex>{3, 2});
}

TEST_CASE("search finds orderings or proves there are none")
{
    const Graph tree = tk::generate_graph({tk::Kind::tree, 6, 4});
    auto found = find_strong_ordering(tree);
    REQUIRE(found);
    CHECK(verify_strong_ordering(tree, *found));

    CHECK_FALSE(find_strong_ordering(fixtures::cycle(6)));
    CHECK_FALSE(find_strong_ordering(fixtures::cycle(8)));

    auto single = find_strong_ordering(Graph(1));
    REQUIRE(single);
    CHECK(single->size() == 1);
    auto none = find_strong_ordering(Graph(0));
    REQUIRE(none);
    CHECK(none->size() == 0);
}

TEST_CASE("search agrees with the permutation oracle")
{
    std::mt19937_64 rng(17);
    int with = 0, without = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 6);
        std::vector<Edge> edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() % 2)
                    edges.emplace_back(u, v);
        const Graph g = Graph::from_edges(n, edges);
        const bool expected = tk::oracle_has_strong_ordering(g);
        auto found = find_strong_ordering(g);
        CHECK(found.has_value() == expected);
        if (found)
            CHECK(verify_strong_ordering(g, *found));
        (expected ? with : without)++;
    }
    CHECK(with > 0);
    CHECK(without > 0);
}

TEST_CASE("budget exhaustion is reported")
{
    // C8 plus isolated vertices has no strong ordering, so a tiny budget
    // cannot finish the search.
    std::vector<Edge> edges;
    for (int v = 1; v <= 8; ++v)
        edges.emplace_back(v, v % 8 + 1);
    const Graph g = Graph::from_edges(12, edges);
    CHECK_THROWS_AS(find_strong_ordering(g, {5}), BudgetExceeded);
}

TEST_CASE("large generated graphs are ordered quickly")
{
    for (auto kind : {tk::Kind::tree, tk::Kind::chain_graph, tk::Kind::bipartite_permutation,
                      tk::Kind::complete_bipartite, tk::Kind::cograph}) {
        const Graph g = tk::generate_graph({kind, 150, 2});
        auto found = find_strong_ordering(g);
        REQUIRE(found);
        CHECK(verify_strong_ordering(g, *found));
    }
}

TEST_CASE("chain order of a neighbourhood")
{
    const Graph p3 = fixtures::path(3);
    StrongOrdering centre_first(p3, {2, 1, 3});
    CHECK(chain_order(p3, centre_first, 2) == std::vector<Vertex>{1, 3});
    const Graph p4 = fixtures::path(4);
    CHECK(chain_order(p4, StrongOrdering(p4, {1, 2, 3, 4}), 1) == std::vector<Vertex>{2});
}

TEST_CASE("chain graph check")
{
    // Left {1, 2}, right {3, 4}: N(1) = {3}, N(2) = {3, 4}.
    const Edge nested[] = {{1, 3}, {2, 3}, {2, 4}};
    const Graph h = Graph::from_edges(4, nested);
    const Vertex order[] = {1, 2};
    CHECK(verify_chain(h, order));
    const Vertex reversed[] = {2, 1};
    CHECK_FALSE(verify_chain(h, reversed));

    const Edge disjoint[] = {{1, 3}, {2, 4}};
    CHECK_FALSE(verify_chain(Graph::from_edges(4, disjoint), order));
    CHECK(verify_chain(Graph(0), std::vector<Vertex>{}));

    const Vertex repeated[] = {1, 1};
    CHECK_THROWS_AS(verify_chain(h, repeated), std::invalid_argument);
    const Vertex unknown[] = {1, 9};
    CHECK_THROWS_AS(verify_chain(h, unknown), std::invalid_argument);
}

TEST_CASE("first vertex properties")
{
    const Graph k3 = fixtures::complete(3);
    auto r = verify_first_vertex_properties(k3, StrongOrdering(k3, {1, 2, 3}));
    CHECK(r.cograph_ok);
    CHECK(r.chain_ok);

    const Graph p3 = fixtures::path(3);
    r = verify_first_vertex_properties(p3, StrongOrdering(p3, {2, 1, 3}));
    CHECK(r.cograph_ok);
    CHECK(r.chain_ok);

    // A vertex adjacent to a whole P4 has a non-cograph neighbourhood.
    const Edge fan[] = {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    const Graph g = Graph::from_edges(5, fan);
    r = verify_first_vertex_properties(g, StrongOrdering(g, {5, 1, 2, 3, 4}));
    CHECK_FALSE(r.cograph_ok);

    // N(1) = {2, 3} in that order, 2 sees 4 and 3 does not: not nested.
    const Edge broken[] = {{1, 2}, {1, 3}, {2, 4}};
    const Graph b = Graph::from_edges(4, broken);
    r = verify_first_vertex_properties(b, StrongOrdering(b, {1, 2, 3, 4}));
    CHECK(r.cograph_ok);
    CHECK_FALSE(r.chain_ok);
}

TEST_CASE("first vertex properties hold at every peel of generated graphs")
{
    for (int seed = 0; seed < 40; ++seed) {
        Graph g = tk::generate_graph({static_cast<tk::Kind>(seed % 5), 4 + seed % 9, static_cast<std::uint64_t>(seed)});
        auto order = find_strong_ordering(g);
        REQUIRE(order);
        while (!g.empty()) {
            auto r = verify_first_vertex_properties(g, *order);
            CHECK(r.cograph_ok);
            CHECK(r.chain_ok);
            CHECK(verify_strong_ordering(g, *order));
            g = remove_vertex(g, order->first());
            order = order->without_first();
        }
    }
}

TEST_CASE("ordering files")
{
    const Graph p4 = fixtures::path(4);
    auto o = parse_ordering("c order\n4 3 2 1\n", p4);
    CHECK(o.first() == 4);
    CHECK(serialize_ordering(o) == "4 3 2 1\n");
    CHECK(parse_ordering(serialize_ordering(o), p4) == o);
    CHECK_THROWS_AS(parse_ordering("1 2 3\n", p4), ParseError);
    CHECK_THROWS_AS(parse_ordering("1 2 3 x\n", p4), ParseError);
    CHECK_THROWS_AS(parse_ordering("1 2 3 3\n", p4), ParseError);
}
