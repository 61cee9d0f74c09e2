#include "wis/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace wis {

namespace {

std::vector<std::string_view> split_words(std::string_view line)
{
    std::vector<std::string_view> words;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
            ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
            ++i;
        if (i > start)
            words.push_back(line.substr(start, i - start));
    }
    return words;
}

long long parse_int(std::string_view word, std::size_t line, const char* what)
{
    long long value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, std::string("expected integer ") + what + ", got '" + std::string(word) + "'");
    return value;
}

// Calls fn(line_number, words) for each non-blank, non-comment line.
template <class Fn>
void for_each_record(std::string_view text, Fn&& fn)
{
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        auto words = split_words(line);
        if (words.empty() || words.front() == "c")
            continue;
        fn(line_no, words);
    }
}

} // namespace

Graph parse_graph(std::string_view text)
{
    long long n = -1, m = -1;
    std::vector<Edge> edges;
    std::size_t last_line = 0;

    for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
        last_line = line;
        if (words.front() == "p") {
            if (n >= 0)
                throw ParseError(line, "duplicate header");
            if (words.size() != 4 || words[1] != "is")
                throw ParseError(line, "malformed header, expected 'p is <n> <m>'");
            n = parse_int(words[2], line, "vertex count");
            m = parse_int(words[3], line, "edge count");
            if (n < 0 || m < 0)
                throw ParseError(line, "negative count in header");
            return;
        }
        if (words.front() != "e")
            throw ParseError(line, "unknown record '" + std::string(words.front()) + "'");
        if (n < 0)
            throw ParseError(line, "edge before header");
        if (words.size() != 3)
            throw ParseError(line, "malformed edge, expected 'e <u> <v>'");
        auto u = parse_int(words[1], line, "vertex id");
        auto v = parse_int(words[2], line, "vertex id");
        if (u < 1 || u > n || v < 1 || v > n)
            throw ParseError(line, "vertex id out of range 1.." + std::to_string(n));
        if (u == v)
            throw ParseError(line, "loop edge at vertex " + std::to_string(u));
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    });

    if (n < 0)
        throw ParseError(last_line, "missing header 'p is <n> <m>'");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(last_line, "header declares " + std::to_string(m) + " edges, found " +
                                        std::to_string(edges.size()));
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string serialize_graph(const Graph& g)
{
    if (!g.is_dense())
        throw std::invalid_argument("serialize_graph: vertex ids must be 1..n");
    std::ostringstream out;
    out << "p is " << g.size() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u << ' ' << v << '\n';
    return out.str();
}

WeightFunction parse_weights(std::string_view text, const Graph& g)
{
    WeightFunction w = WeightFunction::ones(g);
    for_each_record(text, [&](std::size_t line, const std::vector<std::string_view>& words) {
        if (words.front() != "w" || words.size() != 3)
            throw ParseError(line, "malformed weight, expected 'w <v> <num>[/<den>]'");
        auto v = parse_int(words[1], line, "vertex id");
        if (!g.has_vertex(static_cast<Vertex>(v)))
            throw ParseError(line, "unknown vertex " + std::to_string(v));
        Rational value;
        try {
            value = parse_rational(words[2]);
        } catch (const std::invalid_argument& e) {
            throw ParseError(line, e.what());
        }
        if (value < 0)
            throw ParseError(line, "negative weight");
        w.set(static_cast<Vertex>(v), value);
    });
    return w;
}

std::string serialize_weights(const WeightFunction& w)
{
    std::string out;
    for (const auto& [v, q] : w.entries())
        out += "w " + std::to_string(v) + ' ' + to_string(q) + '\n';
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, std::string_view contents)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

} // namespace wis
