#include "doctest.h"
#include "fixtures.hpp"

#include "wis/so_counter.hpp"
#include "wis/testkit.hpp"

using namespace wis;
namespace tk = wis::testkit;

TEST_CASE("reweighting an edge")
{
    const Graph k2 = fixtures::complete(2);
    const auto step = reweight_first(k2, StrongOrdering(k2, {1, 2}), WeightFunction::ones(k2));
    CHECK(step.v == 1);
    CHECK(step.factor == 2);
    CHECK(step.chain == std::vector<Vertex>{2});
    CHECK(step.next[2] == Rational(1, 2));
    CHECK(step.factor * (1 + step.next[2]) == 3);
}

TEST_CASE("reweighting the centre of a path")
{
    const Graph p3 = fixtures::path(3);
    const auto w = WeightFunction::ones(p3);
    const auto step = reweight_first(p3, StrongOrdering(p3, {2, 1, 3}), w);
    CHECK(step.chain == std::vector<Vertex>{1, 3});
    REQUIRE(step.prefix_sets.size() == 2);
    CHECK(step.prefix_sets[0].empty());
    CHECK(step.prefix_sets[1] == VertexSet{1});
    CHECK(step.next[1] == Rational(1, 2));
    CHECK(step.next[3] == Rational(2, 3));
    CHECK(step.factor * tk::oracle_count(remove_vertex(p3, 2), step.next) == 5);
}

TEST_CASE("reweighting a triangle")
{
    const Graph k3 = fixtures::complete(3);
    const auto step = reweight_first(k3, StrongOrdering(k3, {1, 2, 3}), WeightFunction::ones(k3));
    CHECK(step.next[2] == Rational(1, 2));
    CHECK(step.next[3] == Rational(1, 2));
    CHECK(step.factor * (1 + step.next[2] + step.next[3]) == 4);
}

TEST_CASE("reweighting leaves vertices outside the neighbourhood alone")
{
    const Graph p4 = fixtures::path(4);
    auto w = tk::random_positive_weights(p4, 3);
    const auto step = reweight_first(p4, StrongOrdering(p4, {1, 2, 3, 4}), w);
    CHECK(step.next[3] == w[3]);
    CHECK(step.next[4] == w[4]);
    CHECK_FALSE(step.next.contains(1));
    CHECK(step.next.positive_on(remove_vertex(p4, 1)));
}

TEST_CASE("counting examples")
{
    CHECK(count_so(Graph(0), WeightFunction{}) == 1);
    const Graph p4 = fixtures::path(4);
    CHECK(count_so(p4, WeightFunction::ones(p4)) == 8);
    const Graph c4 = fixtures::cycle(4);
    CHECK(count_so(c4, WeightFunction::uniform(c4, 2)) == 17);
    const Graph k5 = fixtures::complete(5);
    CHECK(count_so(k5, WeightFunction::ones(k5)) == 6);
    CHECK(count_so(Graph(3), WeightFunction::uniform(Graph(3), Rational(1, 2))) == Rational(27, 8));
}

TEST_CASE("counting rejects bad input")
{
    const Graph p3 = fixtures::path(3);
    auto w = WeightFunction::ones(p3);
    w.set(2, 0);
    CHECK_THROWS_AS(count_so(p3, w), DomainError);
    CHECK_THROWS_AS(count_so(fixtures::cycle(6), WeightFunction::ones(fixtures::cycle(6))), DomainError);

    // Any order of the 5-vertex fan that starts at the hub has a non-cograph
    // neighbourhood, so it is not strong.
    const Edge fan[] = {{1, 2}, {2, 3}, {3, 4}, {5, 1}, {5, 2}, {5, 3}, {5, 4}};
    const Graph g = Graph::from_edges(5, fan);
    CHECK_THROWS_AS(count_so(g, WeightFunction::ones(g), StrongOrdering(g, {5, 1, 2, 3, 4})), DomainError);
}

TEST_CASE("any strong ordering gives the same count")
{
    const Graph g = tk::generate_graph({tk::Kind::tree, 7, 12});
    const auto w = tk::random_positive_weights(g, 9);
    const Rational expected = tk::oracle_count(g, w);
    const auto orders = tk::oracle_orderings(g);
    REQUIRE(orders.size() > 1);
    for (std::size_t i = 0; i < orders.size(); i += 97)
        CHECK(count_so(g, w, orders[i]) == expected);
}

TEST_CASE("count_so agrees with the oracle on generated graphs")
{
    for (int i = 0; i < 60; ++i) {
        const Graph g = tk::generate_graph({static_cast<tk::Kind>(i % 5), 1 + i % 14, static_cast<std::uint64_t>(i)});
        CHECK(count_so(g, WeightFunction::ones(g)) == tk::oracle_count(g, WeightFunction::ones(g)));
        const auto w = tk::random_positive_weights(g, i + 100);
        CHECK(count_so(g, w) == tk::oracle_count(g, w));
    }
}

TEST_CASE("the peel identity holds exactly")
{
    for (int i = 0; i < 40; ++i) {
        const Graph g = tk::generate_graph({static_cast<tk::Kind>(i % 5), 2 + i % 12, static_cast<std::uint64_t>(i + 7)});
        const auto w = tk::random_positive_weights(g, i);
        const auto order = find_strong_ordering(g);
        REQUIRE(order);
        const auto step = reweight_first(g, *order, w);
        CHECK(tk::oracle_count(g, w) == step.factor * tk::oracle_count(remove_vertex(g, step.v), step.next));
    }
}

TEST_CASE("counting circuits")
{
    const Graph k1 = Graph(1);
    const auto single = build_counting_circuit(k1, StrongOrdering(k1, {1}));
    CHECK(check_positive(single));
    CHECK(eval_exact(single, std::vector<Rational>{Rational(2, 5)}).front() == Rational(7, 5));

    const Graph k2 = fixtures::complete(2);
    const auto edge = build_counting_circuit(k2, StrongOrdering(k2, {1, 2}));
    const Rational xy[] = {Rational(3, 7), Rational(11, 4)};
    CHECK(eval_exact(edge, xy).front() == 1 + xy[0] + xy[1]);

    const auto empty = build_counting_circuit(Graph(0), StrongOrdering());
    CHECK(eval_exact(empty, std::vector<Rational>{}).front() == 1);

    const Graph c6 = fixtures::cycle(6);
    CHECK_THROWS_AS(build_counting_circuit(c6, StrongOrdering(c6, {1, 2, 3, 4, 5, 6})), DomainError);
}

TEST_CASE("counting circuits agree with count_so")
{
    for (int i = 0; i < 30; ++i) {
        const Graph g = tk::generate_graph({static_cast<tk::Kind>(i % 5), 1 + i % 10, static_cast<std::uint64_t>(i + 50)});
        const auto order = *find_strong_ordering(g);
        const auto c = build_counting_circuit(g, order);
        CHECK(check_positive(c));
        CHECK(c.input_count() == g.size());
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            const auto w = tk::random_positive_weights(g, seed * 31 + i);
            CHECK(eval_exact(c, weight_vector(g, w)).front() == count_so(g, w, order));
        }
    }
}

TEST_CASE("per-size counts")
{
    CHECK(count_by_size(fixtures::path(4)) == std::vector<BigInt>{1, 4, 3});
    CHECK(count_by_size(fixtures::complete(3)) == std::vector<BigInt>{1, 3});
    CHECK(count_by_size(fixtures::cycle(4)) == std::vector<BigInt>{1, 4, 2});
    CHECK(count_by_size(Graph(0)) == std::vector<BigInt>{1});
    CHECK(count_by_size(Graph(3)) == std::vector<BigInt>{1, 3, 3, 1});
    CHECK_THROWS_AS(count_by_size(fixtures::cycle(6)), DomainError);

    for (int i = 0; i < 30; ++i) {
        const Graph g = tk::generate_graph({static_cast<tk::Kind>(i % 5), 1 + i % 12, static_cast<std::uint64_t>(i)});
        const auto counts = count_by_size(g);
        CHECK(counts == tk::oracle_coeffs(g));
        BigInt total = 0;
        for (const auto& c : counts)
            total += c;
        CHECK(Rational(total) == count_so(g, WeightFunction::ones(g)));
        CHECK(counts[1] == static_cast<unsigned long>(g.size()));
    }
}
