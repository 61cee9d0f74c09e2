#include "doctest.h"

#include "cli.hpp"
#include "wis/graph_io.hpp"
#include "wis/testkit.hpp"

#include <filesystem>
#include <sstream>
#include <unistd.h>

namespace fs = std::filesystem;
namespace tk = wis::testkit;

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = wis::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct Workdir {
    fs::path dir;
    Workdir()
    {
        dir = fs::temp_directory_path() / ("wiscount-test-" + std::to_string(::getpid()));
        fs::create_directories(dir);
    }
    ~Workdir() { fs::remove_all(dir); }
    std::string file(const std::string& name, const std::string& contents) const
    {
        auto path = (dir / name).string();
        wis::write_file(path, contents);
        return path;
    }
    std::string path(const std::string& name) const { return (dir / name).string(); }
};

const char* const p4_graph = "p is 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const char* const p4_expr = "labels 3\n"
                            "(e 1 2 (u (r 2 3 (e 1 2 (u (r 1 3 (e 1 2 (u (v 1 1) (v 2 2)))) (v 1 3)))) (v 2 4)))\n";

} // namespace

TEST_CASE("counting P4 by every method")
{
    Workdir w;
    const auto g = w.file("p4.gr", p4_graph);
    const auto e = w.file("p4.cw", p4_expr);
    for (const char* method : {"so", "circuit-exact", "circuit-float", "oracle"}) {
        auto r = run({"count", "--graph", g, "--method", method});
        CHECK(r.code == 0);
        CHECK(r.out == "8\n");
    }
    auto r = run({"count", "--graph", g, "--method", "cwd", "--expr", e});
    CHECK(r.code == 0);
    CHECK(r.out == "8\n");
    CHECK(run({"count", "--graph", g}).out == "8\n");
    CHECK(run({"coeffs", "--graph", g}).out == "1 4 3\n");
}

TEST_CASE("weighted counts print exact rationals")
{
    Workdir w;
    const auto g = w.file("p4.gr", p4_graph);
    const auto wt = w.file("p4.w", "w 1 1/2\nw 2 2/3\nw 4 3\n");
    std::string expected;
    for (const char* method : {"so", "circuit-exact", "circuit-float", "oracle"}) {
        auto r = run({"count", "--graph", g, "--weights", wt, "--method", method});
        CHECK(r.code == 0);
        if (expected.empty())
            expected = r.out;
        CHECK(r.out == expected);
    }
    const wis::Graph p4 = wis::parse_graph(p4_graph);
    CHECK(expected == wis::to_string(tk::oracle_count(p4, wis::parse_weights(wis::read_file(wt), p4))) + "\n");
    CHECK(expected.find('/') != std::string::npos);
}

TEST_CASE("orderings on the command line")
{
    Workdir w;
    const auto g = w.file("p4.gr", p4_graph);
    const auto good = w.file("good.ord", "1 2 3 4\n");
    auto r = run({"verify-order", "--graph", g, "--order", good});
    CHECK(r.code == 0);
    CHECK(r.out == "strong\n");

    r = run({"find-order", "--graph", g});
    CHECK(r.code == 0);
    const auto found = w.file("found.ord", r.out);
    CHECK(run({"verify-order", "--graph", g, "--order", found}).code == 0);
    CHECK(run({"count", "--graph", g, "--order", found}).out == "8\n");

    const auto c6 = w.file("c6.gr", "p is 6 6\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 6\ne 6 1\n");
    r = run({"find-order", "--graph", c6});
    CHECK(r.code == 1);
    CHECK(r.out == "none\n");
    const auto bad = w.file("bad.ord", "1 2 3 4 5 6\n");
    r = run({"verify-order", "--graph", c6, "--order", bad});
    CHECK(r.code == 1);
    CHECK(r.out.rfind("not strong: ", 0) == 0);
    CHECK(run({"count", "--graph", c6}).code == 1);
    CHECK(run({"count", "--graph", c6, "--method", "oracle"}).out == "18\n");
}

TEST_CASE("circuit build and eval")
{
    Workdir w;
    const auto g = w.file("p4.gr", p4_graph);
    const auto c = w.path("p4.circ");
    REQUIRE(run({"circuit", "build", "--graph", g, "--out", c}).code == 0);
    const auto text = wis::read_file(c);
    CHECK(text.find("output g") != std::string::npos);
    CHECK(text.find("sub") == std::string::npos);

    CHECK(run({"circuit", "eval", "--circuit", c}).out == "8\n");
    CHECK(run({"circuit", "eval", "--circuit", c, "--exact"}).out == "8\n");
    CHECK(run({"circuit", "eval", "--circuit", c, "--float"}).out == "8\n");
    const auto wt = w.file("w", "w 1 2\nw 2 3\nw 3 1/2\nw 4 5\n");
    auto exact = run({"circuit", "eval", "--circuit", c, "--weights", wt, "--exact"});
    auto soft = run({"circuit", "eval", "--circuit", c, "--weights", wt, "--float"});
    CHECK(exact.code == 0);
    CHECK(exact.out == soft.out);
    CHECK(run({"circuit", "eval", "--circuit", c, "--exact", "--float"}).code == 2);

    const auto hand = w.file("hand.circ", "g0 input 0\ng1 const 1/1\ng2 sub g0 g1\noutput g2\n");
    const auto x = w.file("x", "w 1 1/4\n");
    CHECK(run({"circuit", "eval", "--circuit", hand, "--weights", x}).out == "-3/4\n");
}

TEST_CASE("clique-width counting")
{
    Workdir w;
    const auto e = w.file("p4.cw", p4_expr);
    CHECK(run({"cwd", "count", "--expr", e}).out == "8\n");
    const auto wt = w.file("w", "w 2 0\nw 3 0\n");
    CHECK(run({"cwd", "count", "--expr", e, "--weights", wt}).out == "4\n");

    const auto k3 = w.file("k3.gr", "p is 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(run({"count", "--graph", k3, "--method", "cwd", "--expr", e}).code == 2);
    CHECK(run({"count", "--graph", k3, "--method", "cwd"}).code == 2);
}

TEST_CASE("generated instances can be counted")
{
    Workdir w;
    const auto out = w.path("tree.gr");
    REQUIRE(run({"gen", "--kind", "tree", "--size", "12", "--seed", "5", "--out", out}).code == 0);
    const auto text = wis::read_file(out);
    CHECK(text == wis::serialize_graph(tk::generate_graph({tk::Kind::tree, 12, 5})));
    auto so = run({"count", "--graph", out, "--method", "so"});
    CHECK(so.code == 0);
    CHECK(so.out == run({"count", "--graph", out, "--method", "oracle"}).out);

    const auto expr = w.path("x.cw");
    REQUIRE(run({"gen", "--kind", "random_cw_expr", "--size", "8", "--seed", "2", "--out", expr}).code == 0);
    CHECK(run({"cwd", "count", "--expr", expr}).code == 0);
    CHECK(run({"gen", "--kind", "wheel", "--size", "8", "--seed", "2", "--out", expr}).code == 2);
    CHECK(run({"gen", "--kind", "tree", "--size", "0", "--seed", "2", "--out", expr}).code == 2);
}

TEST_CASE("usage, file and parse errors")
{
    Workdir w;
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"count"}).code == 2);
    CHECK(run({"count", "--graph", w.path("missing.gr")}).code == 2);
    const auto g = w.file("p4.gr", p4_graph);
    CHECK(run({"count", "--graph", g, "--method", "magic"}).code == 2);

    const auto broken = w.file("broken.gr", "p is 2 1\ne 1 1\n");
    auto r = run({"count", "--graph", broken});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
    CHECK(r.out.empty());

    const auto zero = w.file("zero.w", "w 2 0\n");
    CHECK(run({"count", "--graph", g, "--weights", zero}).code == 1);
    CHECK(run({"count", "--graph", g, "--weights", zero, "--method", "oracle"}).out == "6\n");

    const auto tree = w.path("big.gr");
    REQUIRE(run({"gen", "--kind", "tree", "--size", "40", "--seed", "1", "--out", tree}).code == 0);
    CHECK(run({"count", "--graph", tree, "--method", "oracle"}).code == 1);
    CHECK(run({"--help"}).code == 0);
}
