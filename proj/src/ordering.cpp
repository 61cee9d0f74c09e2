#include "wis/ordering.hpp"

#include "wis/cograph.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace wis {

StrongOrdering::StrongOrdering(const Graph& g, std::vector<Vertex> order)
    : order_(std::move(order))
{
    if (order_.size() != g.size())
        throw std::invalid_argument("ordering has " + std::to_string(order_.size()) + " vertices, graph has " +
                                    std::to_string(g.size()));
    for (std::size_t p = 0; p < order_.size(); ++p) {
        Vertex v = order_[p];
        if (!g.has_vertex(v))
            throw std::invalid_argument("ordering names unknown vertex " + std::to_string(v));
        if (!position_.emplace(v, p).second)
            throw std::invalid_argument("ordering repeats vertex " + std::to_string(v));
    }
}

StrongOrdering StrongOrdering::without_first() const
{
    StrongOrdering out;
    out.order_.assign(order_.begin() + 1, order_.end());
    for (std::size_t p = 0; p < out.order_.size(); ++p)
        out.position_.emplace(out.order_[p], p);
    return out;
}

StrongOrdering StrongOrdering::restricted_to(const Graph& g) const
{
    std::vector<Vertex> kept;
    for (Vertex v : order_)
        if (g.has_vertex(v))
            kept.push_back(v);
    return StrongOrdering(g, std::move(kept));
}

OrderingCheck verify_strong_ordering(const Graph& g, const StrongOrdering& order)
{
    if (order.size() != g.size())
        throw std::invalid_argument("verify_strong_ordering: ordering does not match graph");
    auto pos = [&](Vertex v) { return order.position(v); };

    for (Vertex i : g.vertices()) {
        std::vector<Vertex> nbrs(g.neighbors(i).begin(), g.neighbors(i).end());
        std::sort(nbrs.begin(), nbrs.end(), [&](Vertex a, Vertex b) { return pos(a) < pos(b); });
        for (std::size_t a = 0; a < nbrs.size(); ++a) {
            Vertex k = nbrs[a];
            for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
                Vertex l = nbrs[b];
                for (Vertex j : g.neighbors(k)) {
                    if (j == l || pos(j) <= pos(i))
                        continue;
                    if (!g.adjacent(j, l))
                        return {false, Quadruple{i, j, k, l}};
                }
            }
        }
    }
    return {};
}

namespace {

std::optional<std::pair<std::vector<Vertex>, std::vector<Vertex>>> bipartition(const Graph& g)
{
    std::unordered_map<Vertex, int> side;
    std::vector<Vertex> sides[2];
    for (Vertex root : g.vertices()) {
        if (side.contains(root))
            continue;
        side[root] = 0;
        std::vector<Vertex> queue{root};
        for (std::size_t q = 0; q < queue.size(); ++q) {
            Vertex u = queue[q];
            sides[side[u]].push_back(u);
            for (Vertex x : g.neighbors(u)) {
                auto [it, fresh] = side.emplace(x, 1 - side[u]);
                if (fresh)
                    queue.push_back(x);
                else if (it->second == side[u])
                    return std::nullopt;
            }
        }
    }
    return std::pair{std::move(sides[0]), std::move(sides[1])};
}

// Sorts `items` so their rows, read along `along`, are lexicographically
// nonincreasing. Returns whether the order changed.
bool lex_sort(const Graph& g, std::vector<Vertex>& items, const std::vector<Vertex>& along, bool closed)
{
    auto row = [&](Vertex v) {
        std::vector<char> r(along.size());
        for (std::size_t p = 0; p < along.size(); ++p)
            r[p] = g.adjacent(v, along[p]) || (closed && v == along[p]);
        return r;
    };
    std::vector<std::pair<std::vector<char>, Vertex>> keyed;
    for (Vertex v : items)
        keyed.emplace_back(row(v), v);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    bool changed = false;
    for (std::size_t p = 0; p < items.size(); ++p) {
        changed |= items[p] != keyed[p].second;
        items[p] = keyed[p].second;
    }
    return changed;
}

std::vector<std::vector<Vertex>> lexical_candidates(const Graph& g)
{
    const std::size_t rounds = 4 * g.size() + 8;
    std::vector<std::vector<Vertex>> out;
    if (auto parts = bipartition(g)) {
        auto [rows, cols] = *parts;
        for (std::size_t r = 0; r < rounds; ++r) {
            bool changed = lex_sort(g, rows, cols, false);
            if (!lex_sort(g, cols, rows, false) && !changed)
                break;
        }
        std::vector<Vertex> order(rows);
        order.insert(order.end(), cols.begin(), cols.end());
        out.push_back(order);
        std::reverse(order.begin(), order.end());
        out.push_back(std::move(order));
    }
    std::vector<Vertex> order(g.vertices().begin(), g.vertices().end());
    for (std::size_t r = 0; r < rounds && lex_sort(g, order, order, true); ++r) {
    }
    out.push_back(order);
    std::reverse(order.begin(), order.end());
    out.push_back(std::move(order));
    return out;
}

class OrderingSearch {
public:
    OrderingSearch(const Graph& g, SearchOptions options) : g_(g), options_(options)
    {
        for (Vertex v : g.vertices())
            pos_[v] = unplaced;
        candidates_.assign(g.vertices().begin(), g.vertices().end());
        std::stable_sort(candidates_.begin(), candidates_.end(),
                         [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
    }

    std::optional<StrongOrdering> run()
    {
        if (extend())
            return StrongOrdering(g_, prefix_);
        return std::nullopt;
    }

private:
    static constexpr std::size_t unplaced = std::numeric_limits<std::size_t>::max();

    bool placed(Vertex v) const { return pos_.at(v) != unplaced; }

    // Checks every quadruple whose i and k are placed and whose later member
    // of {i, k} is x, the vertex just placed. Unplaced vertices sit after
    // the whole prefix in any completion, so these checks are final.
    bool consistent_after_placing(Vertex x) const
    {
        const auto px = pos_.at(x);
        // x plays i.
        for (Vertex k : g_.neighbors(x)) {
            if (!placed(k) || k == x)
                continue;
            for (Vertex l : g_.neighbors(x)) {
                if (l == k || pos_.at(l) <= pos_.at(k))
                    continue;
                for (Vertex j : g_.neighbors(k))
                    if (j != l && !placed(j) && !g_.adjacent(j, l))
                        return false;
            }
        }
        // x plays k.
        for (Vertex i : g_.neighbors(x)) {
            if (!placed(i) || pos_.at(i) >= px)
                continue;
            for (Vertex l : g_.neighbors(i)) {
                if (placed(l))
                    continue;
                for (Vertex j : g_.neighbors(x))
                    if (j != l && pos_.at(j) > pos_.at(i) && !g_.adjacent(j, l))
                        return false;
            }
        }
        return true;
    }

    bool extend()
    {
        if (prefix_.size() == g_.size())
            return true;
        for (Vertex x : candidates_) {
            if (placed(x))
                continue;
            if (++nodes_ > options_.node_budget)
                throw BudgetExceeded("find_strong_ordering: node budget of " +
                                     std::to_string(options_.node_budget) + " exhausted");
            pos_[x] = prefix_.size();
            prefix_.push_back(x);
            if (consistent_after_placing(x) && extend())
                return true;
            prefix_.pop_back();
            pos_[x] = unplaced;
        }
        return false;
    }

    const Graph& g_;
    SearchOptions options_;
    std::vector<Vertex> candidates_;
    std::vector<Vertex> prefix_;
    std::unordered_map<Vertex, std::size_t> pos_;
    std::uint64_t nodes_ = 0;
};

} // namespace

std::optional<StrongOrdering> find_strong_ordering(const Graph& g, SearchOptions options)
{
    for (auto& candidate : lexical_candidates(g)) {
        StrongOrdering order(g, std::move(candidate));
        if (verify_strong_ordering(g, order))
            return order;
    }
    return OrderingSearch(g, options).run();
}

std::vector<Vertex> chain_order(const Graph& g, const StrongOrdering& order, Vertex v)
{
    auto nbrs = g.neighbors(v);
    std::vector<Vertex> out(nbrs.begin(), nbrs.end());
    std::sort(out.begin(), out.end(),
              [&](Vertex a, Vertex b) { return order.position(a) < order.position(b); });
    return out;
}

bool verify_chain(const Graph& h, std::span<const Vertex> order)
{
    std::vector<Vertex> seen(order.begin(), order.end());
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw std::invalid_argument("verify_chain: order repeats a vertex");
    for (Vertex v : order)
        if (!h.has_vertex(v))
            throw std::invalid_argument("verify_chain: unknown vertex " + std::to_string(v));

    for (std::size_t p = 0; p + 1 < order.size(); ++p) {
        auto smaller = h.neighbors(order[p]);
        auto larger = h.neighbors(order[p + 1]);
        if (!std::includes(larger.begin(), larger.end(), smaller.begin(), smaller.end()))
            return false;
    }
    return true;
}

FirstVertexReport verify_first_vertex_properties(const Graph& g, const StrongOrdering& order)
{
    FirstVertexReport report;
    if (g.empty())
        return {true, true};
    Vertex u = order.first();
    auto nb = neighborhoods(g, u);
    report.cograph_ok = is_cograph(induced_subgraph(g, nb.first));
    auto h = bipartite_between(g, nb.first, nb.second);
    report.chain_ok = verify_chain(h, chain_order(g, order, u));
    return report;
}

StrongOrdering parse_ordering(std::string_view text, const Graph& g)
{
    std::vector<Vertex> order;
    std::istringstream in{std::string(text)};
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        std::istringstream ls(line);
        for (std::string word; ls >> word;) {
            if (word == "c")
                break;
            int v = 0;
            auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), v);
            if (ec != std::errc() || ptr != word.data() + word.size())
                throw ParseError(line_no, "expected vertex id, got '" + word + "'");
            order.push_back(v);
        }
    }
    try {
        return StrongOrdering(g, std::move(order));
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

std::string serialize_ordering(const StrongOrdering& order)
{
    std::string out;
    for (std::size_t p = 0; p < order.size(); ++p) {
        if (p)
            out += ' ';
        out += std::to_string(order.order()[p]);
    }
    return out + '\n';
}

} // namespace wis
