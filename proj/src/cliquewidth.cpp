#include "wis/cliquewidth.hpp"

#include <cctype>
#include <set>
#include <stdexcept>

namespace wis {

namespace {

LabelSet bit(Label l) { return LabelSet{1} << (l - 1); }

void check_label(int labels, Label l)
{
    if (l < 1 || l > labels)
        throw std::invalid_argument("label " + std::to_string(l) + " outside 1.." + std::to_string(labels));
}

} // namespace

std::size_t CwExpression::create(Label label, Vertex v)
{
    check_label(labels, label);
    nodes.push_back({Op::create, label, 0, v, 0, 0});
    return nodes.size() - 1;
}

std::size_t CwExpression::disjoint_union(std::size_t left, std::size_t right)
{
    if (left >= nodes.size() || right >= nodes.size() || left == right)
        throw std::invalid_argument("union: bad operands");
    nodes.push_back({Op::disjoint_union, 0, 0, 0, left, right});
    return nodes.size() - 1;
}

std::size_t CwExpression::add_edges(Label i, Label j, std::size_t child)
{
    check_label(labels, i);
    check_label(labels, j);
    if (i == j)
        throw std::invalid_argument("add_edges needs two different labels");
    if (child >= nodes.size())
        throw std::invalid_argument("add_edges: bad operand");
    nodes.push_back({Op::add_edges, i, j, 0, child, 0});
    return nodes.size() - 1;
}

std::size_t CwExpression::relabel(Label from, Label to, std::size_t child)
{
    check_label(labels, from);
    check_label(labels, to);
    if (from == to)
        throw std::invalid_argument("relabel needs two different labels");
    if (child >= nodes.size())
        throw std::invalid_argument("relabel: bad operand");
    nodes.push_back({Op::relabel, from, to, 0, child, 0});
    return nodes.size() - 1;
}

void CwExpression::validate() const
{
    if (labels < 1 || labels > max_labels)
        throw std::invalid_argument("label count must be in 1.." + std::to_string(max_labels));
    if (nodes.empty())
        throw std::invalid_argument("empty expression");
    std::vector<int> parents(nodes.size(), 0);
    std::set<Vertex> vertices;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const auto& n = nodes[k];
        switch (n.op) {
        case Op::create:
            check_label(labels, n.i);
            if (!vertices.insert(n.vertex).second)
                throw std::invalid_argument("vertex " + std::to_string(n.vertex) + " created twice");
            break;
        case Op::disjoint_union:
            if (n.left >= k || n.right >= k)
                throw std::invalid_argument("union operand does not precede it");
            ++parents[n.left];
            ++parents[n.right];
            break;
        case Op::add_edges:
        case Op::relabel:
            check_label(labels, n.i);
            check_label(labels, n.j);
            if (n.i == n.j)
                throw std::invalid_argument("operation needs two different labels");
            if (n.left >= k)
                throw std::invalid_argument("operand does not precede it");
            ++parents[n.left];
            break;
        }
    }
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k)
        if (parents[k] != 1)
            throw std::invalid_argument("node " + std::to_string(k) + " is not used exactly once");
    if (parents.back() != 0)
        throw std::invalid_argument("root is used as an operand");
}

namespace {

class CwParser {
public:
    explicit CwParser(std::string_view text) : text_(text) {}

    CwExpression parse()
    {
        CwExpression e;
        if (word() != "labels")
            fail("expected header 'labels <l>'");
        e.labels = static_cast<int>(number());
        if (e.labels < 1 || e.labels > max_labels)
            fail("label count must be in 1.." + std::to_string(max_labels));
        expr(e);
        skip_space();
        if (pos_ != text_.size())
            fail("trailing input after expression");
        try {
            e.validate();
        } catch (const std::invalid_argument& ex) {
            fail(ex.what());
        }
        return e;
    }

private:
    std::size_t expr(CwExpression& e)
    {
        expect('(');
        const auto op = word();
        const auto at_line = line_, at_col = col_;
        std::size_t node = 0;
        try {
            if (op == "v") {
                auto label = label_number();
                auto v = number();
                node = e.create(label, static_cast<Vertex>(v));
            } else if (op == "u") {
                auto left = expr(e);
                auto right = expr(e);
                node = e.disjoint_union(left, right);
            } else if (op == "e" || op == "r") {
                auto i = label_number();
                auto j = label_number();
                if (i == j)
                    throw std::invalid_argument("labels of '" + std::string(op) + "' must differ");
                auto child = expr(e);
                node = op == "e" ? e.add_edges(i, j, child) : e.relabel(i, j, child);
            } else {
                fail("unknown operation '" + std::string(op) + "'");
            }
        } catch (const std::invalid_argument& ex) {
            throw ParseError(at_line, "column " + std::to_string(at_col) + ": " + ex.what());
        }
        expect(')');
        return node;
    }

    Label label_number() { return static_cast<Label>(number()); }

    long long number()
    {
        auto w = word();
        if (w.empty())
            fail("expected a number");
        long long value = 0;
        for (char c : w) {
            if (!std::isdigit(static_cast<unsigned char>(c)))
                fail("expected a number, got '" + std::string(w) + "'");
            value = value * 10 + (c - '0');
            if (value > (1LL << 40))
                fail("number too large");
        }
        return value;
    }

    std::string_view word()
    {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')')
            advance();
        return text_.substr(start, pos_ - start);
    }

    void expect(char c)
    {
        skip_space();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        advance();
    }

    void skip_space()
    {
        while (pos_ < text_.size()) {
            if (text_[pos_] == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n')
                    advance();
            } else if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance()
    {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError(line_, "column " + std::to_string(col_) + ": " + what);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

void write_node(const CwExpression& e, std::size_t k, std::string& out)
{
    const auto& n = e.nodes[k];
    switch (n.op) {
    case CwExpression::Op::create:
        out += "(v " + std::to_string(n.i) + ' ' + std::to_string(n.vertex) + ')';
        return;
    case CwExpression::Op::disjoint_union:
        out += "(u ";
        write_node(e, n.left, out);
        out += ' ';
        write_node(e, n.right, out);
        out += ')';
        return;
    case CwExpression::Op::add_edges:
    case CwExpression::Op::relabel:
        out += n.op == CwExpression::Op::add_edges ? "(e " : "(r ";
        out += std::to_string(n.i) + ' ' + std::to_string(n.j) + ' ';
        write_node(e, n.left, out);
        out += ')';
        return;
    }
}

} // namespace

CwExpression parse_cw(std::string_view text) { return CwParser(text).parse(); }

std::string serialize_cw(const CwExpression& e)
{
    std::string out = "labels " + std::to_string(e.labels) + '\n';
    write_node(e, e.root(), out);
    return out + '\n';
}

LabeledGraph realize(const CwExpression& e)
{
    e.validate();
    // Members of each subtree, grouped by their current label.
    std::vector<std::map<Label, std::vector<Vertex>>> members(e.size());
    std::set<Edge> edges;
    for (std::size_t k = 0; k < e.size(); ++k) {
        const auto& n = e.nodes[k];
        switch (n.op) {
        case CwExpression::Op::create:
            members[k][n.i].push_back(n.vertex);
            break;
        case CwExpression::Op::disjoint_union:
            members[k] = std::move(members[n.left]);
            for (auto& [l, vs] : members[n.right])
                members[k][l].insert(members[k][l].end(), vs.begin(), vs.end());
            members[n.right].clear();
            break;
        case CwExpression::Op::add_edges:
            members[k] = std::move(members[n.left]);
            if (members[k].count(n.i) && members[k].count(n.j))
                for (Vertex a : members[k][n.i])
                    for (Vertex b : members[k][n.j])
                        edges.insert({std::min(a, b), std::max(a, b)});
            break;
        case CwExpression::Op::relabel:
            members[k] = std::move(members[n.left]);
            if (auto it = members[k].find(n.i); it != members[k].end()) {
                auto moved = std::move(it->second);
                members[k].erase(it);
                auto& target = members[k][n.j];
                target.insert(target.end(), moved.begin(), moved.end());
            }
            break;
        }
    }

    LabeledGraph out;
    VertexSet vertices;
    for (const auto& [l, vs] : members[e.root()])
        for (Vertex v : vs) {
            out.label[v] = l;
            vertices.push_back(v);
        }
    std::vector<Edge> edge_list(edges.begin(), edges.end());
    out.graph = Graph(std::move(vertices), edge_list);
    return out;
}

DpTable count_cw_table(const CwExpression& e, const WeightFunction& w)
{
    e.validate();
    const LabelSet subsets = LabelSet{1} << e.labels;
    DpTable table;
    table.labels = e.labels;
    table.rows.resize(e.size());

    for (std::size_t k = 0; k < e.size(); ++k) {
        const auto& n = e.nodes[k];
        auto& row = table.rows[k];
        row.resize(subsets);
        const Rational* weight = n.op == CwExpression::Op::create ? &w.at(n.vertex) : nullptr;
        for (LabelSet gamma = 0; gamma < subsets; ++gamma) {
            ++table.evaluations;
            switch (n.op) {
            case CwExpression::Op::create:
                row[gamma] = (gamma & bit(n.i)) ? 1 + *weight : Rational(1);
                break;
            case CwExpression::Op::disjoint_union:
                row[gamma] = table.rows[n.left][gamma] * table.rows[n.right][gamma];
                break;
            case CwExpression::Op::add_edges: {
                const auto& child = table.rows[n.left];
                row[gamma] = child[gamma & ~bit(n.i)] + child[gamma & ~bit(n.j)] -
                             child[gamma & ~(bit(n.i) | bit(n.j))];
                break;
            }
            case CwExpression::Op::relabel: {
                const auto& child = table.rows[n.left];
                row[gamma] = (gamma & bit(n.j)) ? child[gamma | bit(n.i)] : child[gamma & ~bit(n.i)];
                break;
            }
            }
        }
    }
    return table;
}

Rational count_cw(const CwExpression& e, const WeightFunction& w)
{
    auto table = count_cw_table(e, w);
    const LabelSet all = (LabelSet{1} << e.labels) - 1;
    return table.at(e.root(), all);
}

} // namespace wis
