#include "wis/circuit.hpp"

#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace wis {

std::string_view gate_kind_name(GateKind kind)
{
    switch (kind) {
    case GateKind::input: return "input";
    case GateKind::constant: return "const";
    case GateKind::add: return "add";
    case GateKind::sub: return "sub";
    case GateKind::mul: return "mul";
    case GateKind::div: return "div";
    }
    return "?";
}

CircuitBuilder::CircuitBuilder(std::size_t input_count, bool intern) : intern_(intern)
{
    circuit_.inputs_ = input_count;
}

GateId CircuitBuilder::push(Gate g)
{
    circuit_.gates_.push_back(std::move(g));
    return GateId{static_cast<std::uint32_t>(circuit_.gates_.size() - 1)};
}

GateId CircuitBuilder::input(std::size_t index)
{
    if (auto it = inputs_.find(index); intern_ && it != inputs_.end())
        return it->second;
    Gate g;
    g.kind = GateKind::input;
    g.input = index;
    auto id = push(std::move(g));
    inputs_.emplace(index, id);
    circuit_.inputs_ = std::max(circuit_.inputs_, index + 1);
    return id;
}

GateId CircuitBuilder::constant(Rational value)
{
    value.canonicalize();
    if (auto it = constants_.find(value); intern_ && it != constants_.end())
        return it->second;
    Gate g;
    g.kind = GateKind::constant;
    g.value = value;
    auto id = push(std::move(g));
    constants_.emplace(value, id);
    return id;
}

GateId CircuitBuilder::binary(GateKind kind, GateId a, GateId b)
{
    if (kind == GateKind::input || kind == GateKind::constant)
        throw std::invalid_argument("binary: not an arithmetic gate kind");
    if (a.index >= size() || b.index >= size())
        throw std::invalid_argument("binary: operand refers to a gate not yet built");
    Gate g;
    g.kind = kind;
    g.lhs = a;
    g.rhs = b;
    return push(std::move(g));
}

void CircuitBuilder::output(GateId g)
{
    if (g.index >= size())
        throw std::invalid_argument("output: unknown gate");
    circuit_.outputs_.push_back(g);
}

Circuit CircuitBuilder::build() && { return std::move(circuit_); }

bool check_positive(const Circuit& c)
{
    for (const auto& g : c.gates()) {
        if (g.kind == GateKind::sub)
            return false;
        if (g.kind == GateKind::constant && g.value < 0)
            return false;
    }
    return true;
}

std::vector<Rational> eval_exact_all(const Circuit& c, std::span<const Rational> x)
{
    if (x.size() != c.input_count())
        throw std::invalid_argument("eval_exact: expected " + std::to_string(c.input_count()) + " inputs, got " +
                                    std::to_string(x.size()));
    std::vector<Rational> value(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& g = c.gates()[i];
        switch (g.kind) {
        case GateKind::input: value[i] = x[g.input]; break;
        case GateKind::constant: value[i] = g.value; break;
        case GateKind::add: value[i] = value[g.lhs.index] + value[g.rhs.index]; break;
        case GateKind::sub: value[i] = value[g.lhs.index] - value[g.rhs.index]; break;
        case GateKind::mul: value[i] = value[g.lhs.index] * value[g.rhs.index]; break;
        case GateKind::div:
            if (value[g.rhs.index] == 0)
                throw EvalError(GateId{static_cast<std::uint32_t>(i)}, "division by zero");
            value[i] = value[g.lhs.index] / value[g.rhs.index];
            break;
        }
    }
    return value;
}

std::vector<Rational> eval_exact(const Circuit& c, std::span<const Rational> x)
{
    auto all = eval_exact_all(c, x);
    std::vector<Rational> out;
    out.reserve(c.outputs().size());
    for (auto g : c.outputs())
        out.push_back(all[g.index]);
    return out;
}

namespace {

GateKind binary_kind(std::string_view word)
{
    if (word == "add") return GateKind::add;
    if (word == "sub") return GateKind::sub;
    if (word == "mul") return GateKind::mul;
    if (word == "div") return GateKind::div;
    return GateKind::input; // sentinel: not binary
}

std::size_t parse_index(std::string_view word, std::size_t line)
{
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    if (word.empty() || ec != std::errc() || ptr != word.data() + word.size())
        throw ParseError(line, "expected a nonnegative integer, got '" + std::string(word) + "'");
    return value;
}

std::size_t parse_gate_ref(std::string_view word, std::size_t line)
{
    if (word.size() < 2 || word.front() != 'g')
        throw ParseError(line, "expected a gate reference g<k>, got '" + std::string(word) + "'");
    return parse_index(word.substr(1), line);
}

} // namespace

Circuit parse_circuit(std::string_view text)
{
    CircuitBuilder builder(0, false);
    std::unordered_map<std::size_t, GateId> id_map;
    std::optional<std::size_t> last_id;
    std::size_t line_no = 0;

    auto resolve = [&](std::string_view word, std::size_t line) {
        auto k = parse_gate_ref(word, line);
        auto it = id_map.find(k);
        if (it == id_map.end())
            throw ParseError(line, "reference to undefined or later gate g" + std::to_string(k));
        return it->second;
    };

    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream ls(raw);
        std::vector<std::string> words;
        for (std::string w; ls >> w;)
            words.push_back(w);
        if (words.empty() || words.front() == "c")
            continue;

        if (words.front() == "output") {
            if (words.size() != 2)
                throw ParseError(line_no, "malformed output line");
            builder.output(resolve(words[1], line_no));
            continue;
        }

        auto k = parse_gate_ref(words.front(), line_no);
        if (last_id && k <= *last_id)
            throw ParseError(line_no, "gate ids must be strictly increasing");
        last_id = k;
        if (words.size() < 2)
            throw ParseError(line_no, "missing gate kind");

        GateId id;
        if (words[1] == "input" && words.size() == 3) {
            id = builder.input(parse_index(words[2], line_no));
        } else if (words[1] == "const" && words.size() == 3) {
            try {
                id = builder.constant(parse_rational(words[2]));
            } catch (const std::invalid_argument& e) {
                throw ParseError(line_no, e.what());
            }
        } else if (auto kind = binary_kind(words[1]); kind != GateKind::input && words.size() == 4) {
            auto a = resolve(words[2], line_no);
            auto b = resolve(words[3], line_no);
            id = builder.binary(kind, a, b);
        } else {
            throw ParseError(line_no, "malformed gate '" + raw + "'");
        }
        id_map.emplace(k, id);
    }
    return std::move(builder).build();
}

std::string serialize_circuit(const Circuit& c)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& g = c.gates()[i];
        out += 'g' + std::to_string(i) + ' ' + std::string(gate_kind_name(g.kind));
        switch (g.kind) {
        case GateKind::input: out += ' ' + std::to_string(g.input); break;
        case GateKind::constant: out += ' ' + to_fraction_string(g.value); break;
        default: out += " g" + std::to_string(g.lhs.index) + " g" + std::to_string(g.rhs.index); break;
        }
        out += '\n';
    }
    for (auto g : c.outputs())
        out += "output g" + std::to_string(g.index) + '\n';
    return out;
}

} // namespace wis
