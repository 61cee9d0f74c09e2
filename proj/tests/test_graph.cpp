#include "doctest.h"
#include "fixtures.hpp"

#include "wis/graph_io.hpp"

using namespace wis;

TEST_CASE("rational text forms")
{
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-8/4")) == "-2");
    CHECK(to_fraction_string(Rational(5)) == "5/1");
    CHECK(to_string(make_rational(10, -4)) == "-5/2");
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(bit_length(0) == 0);
    CHECK(bit_length(1) == 1);
    CHECK(bit_length(255) == 8);
    CHECK(bit_length(-256) == 9);
}

TEST_CASE("graph construction")
{
    const Edge edges[] = {{1, 2}, {2, 1}, {3, 2}};
    Graph g = Graph::from_edges(4, edges);
    CHECK(g.size() == 4);
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 2));
    CHECK(g.adjacent(2, 3));
    CHECK_FALSE(g.adjacent(1, 3));
    CHECK_FALSE(g.adjacent(1, 9));
    CHECK(g.degree(2) == 2);
    CHECK(g.degree(4) == 0);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}, {2, 3}});
    CHECK(g.is_dense());
    CHECK_THROWS_AS(g.neighbors(5), std::out_of_range);

    const Edge loop[] = {{1, 1}};
    CHECK_THROWS_AS(Graph::from_edges(2, loop), std::invalid_argument);
    const Edge unknown[] = {{1, 3}};
    CHECK_THROWS_AS(Graph::from_edges(2, unknown), std::invalid_argument);

    Graph sparse(VertexSet{2, 5, 9}, std::vector<Edge>{{5, 9}});
    CHECK_FALSE(sparse.is_dense());
    CHECK(sparse.has_vertex(5));
    CHECK_FALSE(sparse.has_vertex(3));
    CHECK(Graph(0).empty());
}

TEST_CASE("induced subgraphs keep vertex ids")
{
    const Graph p4 = fixtures::path(4);
    const Vertex ac[] = {1, 3};
    Graph h = induced_subgraph(p4, ac);
    CHECK(h.size() == 2);
    CHECK(h.edge_count() == 0);

    const Vertex ab[] = {1, 2};
    CHECK(induced_subgraph(p4, ab).edges() == std::vector<Edge>{{1, 2}});
    CHECK(induced_subgraph(p4, std::vector<Vertex>{}).empty());

    const Vertex bad[] = {1, 7};
    CHECK_THROWS_AS(induced_subgraph(p4, bad), std::invalid_argument);

    Graph rest = remove_vertex(p4, 2);
    CHECK(rest.vertices().size() == 3);
    CHECK(rest.edges() == std::vector<Edge>{{3, 4}});
}

TEST_CASE("first and second neighbourhoods")
{
    auto nb = neighborhoods(fixtures::path(4), 1);
    CHECK(nb.first == VertexSet{2});
    CHECK(nb.second == VertexSet{3});

    nb = neighborhoods(fixtures::star(4), 1);
    CHECK(nb.first == VertexSet{2, 3, 4});
    CHECK(nb.second.empty());

    nb = neighborhoods(Graph(1), 1);
    CHECK(nb.first.empty());
    CHECK(nb.second.empty());
}

TEST_CASE("bipartite subgraph between two classes")
{
    const Vertex u[] = {1, 3}, w[] = {2, 4};
    CHECK(bipartite_between(fixtures::cycle(4), u, w).edge_count() == 4);

    const Vertex a[] = {1}, b[] = {2};
    Graph h = bipartite_between(fixtures::complete(3), a, b);
    CHECK(h.size() == 2);
    CHECK(h.edges() == std::vector<Edge>{{1, 2}});

    const Vertex bc[] = {2, 3};
    Graph only_w = bipartite_between(fixtures::complete(3), std::vector<Vertex>{}, bc);
    CHECK(only_w.size() == 2);
    CHECK(only_w.edge_count() == 0);

    const Vertex overlap[] = {1, 2};
    CHECK_THROWS_AS(bipartite_between(fixtures::cycle(4), overlap, w), std::invalid_argument);
}

TEST_CASE("complement and components")
{
    Graph c = complement(fixtures::path(4));
    CHECK(c.edges() == std::vector<Edge>{{1, 3}, {1, 4}, {2, 4}});
    CHECK(complement(c) == fixtures::path(4));

    const Edge edges[] = {{1, 4}, {2, 3}};
    auto comps = connected_components(Graph::from_edges(5, edges));
    CHECK(comps == std::vector<VertexSet>{{1, 4}, {2, 3}, {5}});
}

TEST_CASE("weight functions")
{
    Graph g = fixtures::path(3);
    auto w = WeightFunction::uniform(g, Rational(2));
    CHECK(w[3] == 2);
    CHECK(w.positive_on(g));
    w.set(2, Rational(0));
    CHECK_FALSE(w.positive_on(g));
    CHECK_THROWS_AS(w.set(1, Rational(-1)), DomainError);
    CHECK_THROWS_AS(w.at(4), DomainError);

    const Vertex keep[] = {1, 3};
    auto r = w.restrict_to(keep);
    CHECK(r.contains(1));
    CHECK_FALSE(r.contains(2));

    w.set(1, Rational(1, 3));
    CHECK(weight_vector(g, w) == std::vector<Rational>{Rational(1, 3), 0, 2});
}

TEST_CASE("graph file parsing")
{
    Graph g = parse_graph("p is 2 1\ne 1 2\n");
    CHECK(g.size() == 2);
    CHECK(g.edges() == std::vector<Edge>{{1, 2}});
    CHECK(parse_graph("c no edges\np is 3 0\n").edge_count() == 0);

    auto error_line = [](std::string_view text) {
        try {
            parse_graph(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return std::size_t{0};
    };
    CHECK(error_line("p is 2 1\ne 1 1\n") == 2);
    CHECK(error_line("c header\np is 2 1\ne 1 3\n") == 3);
    CHECK(error_line("p 2 1\n") == 1);
    CHECK(error_line("p is 2 1\np is 2 1\n") == 2);
    CHECK(error_line("p is 3 2\ne 1 2\n") == 2);
    CHECK(error_line("e 1 2\n") == 1);
    CHECK(error_line("p is 2 1\ne 1 x\n") == 2);
    CHECK(error_line("p is 2 1\nq 1 2\n") == 2);
    CHECK_THROWS_AS(parse_graph(""), ParseError);
}

TEST_CASE("graph serialization is canonical")
{
    const std::string text = "p is 4 3\ne 1 2\ne 1 4\ne 2 3\n";
    CHECK(serialize_graph(parse_graph(text)) == text);
    CHECK(serialize_graph(parse_graph("p is 4 3\ne 4 1\ne 3 2\ne 2 1\n")) == text);
    CHECK_THROWS_AS(serialize_graph(Graph(VertexSet{2}, {})), std::invalid_argument);
}

TEST_CASE("weight file parsing")
{
    Graph g = fixtures::path(3);
    auto w = parse_weights("c weights\nw 2 3/6\nw 3 4\n", g);
    CHECK(w[1] == 1);
    CHECK(w[2] == Rational(1, 2));
    CHECK(w[3] == 4);
    CHECK(serialize_weights(w) == "w 1 1\nw 2 1/2\nw 3 4\n");
    CHECK(parse_weights(serialize_weights(w), g) == w);

    CHECK_THROWS_AS(parse_weights("w 4 1\n", g), ParseError);
    CHECK_THROWS_AS(parse_weights("w 1 -1\n", g), ParseError);
    CHECK_THROWS_AS(parse_weights("w 1 1/0\n", g), ParseError);
    CHECK_THROWS_AS(parse_weights("w 1\n", g), ParseError);
}
