#pragma once

#include "wis/rational.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wis {

/// Index of a gate inside its circuit.
struct GateId {
    std::uint32_t index = 0;
    friend auto operator<=>(GateId, GateId) = default;
};

enum class GateKind { input, constant, add, sub, mul, div };

std::string_view gate_kind_name(GateKind kind);

struct Gate {
    GateKind kind = GateKind::constant;
    GateId lhs{};            // binary gates
    GateId rhs{};            // binary gates
    std::size_t input = 0;   // input gates
    Rational value;          // constant gates

    bool is_binary() const noexcept { return kind != GateKind::input && kind != GateKind::constant; }
    friend bool operator==(const Gate&, const Gate&) = default;
};

/// Arithmetic circuit in topological order: every binary gate references
/// strictly earlier gates, so acyclicity holds by construction.
class Circuit {
public:
    std::span<const Gate> gates() const noexcept { return gates_; }
    const Gate& gate(GateId id) const { return gates_.at(id.index); }
    std::size_t size() const noexcept { return gates_.size(); }
    std::size_t input_count() const noexcept { return inputs_; }
    std::span<const GateId> outputs() const noexcept { return outputs_; }

    friend bool operator==(const Circuit&, const Circuit&) = default;

private:
    friend class CircuitBuilder;

    std::vector<Gate> gates_;
    std::vector<GateId> outputs_;
    std::size_t inputs_ = 0;
};

/// Appends gates one at a time. With interning on, repeated `constant(q)` or
/// `input(i)` calls share one gate.
class CircuitBuilder {
public:
    explicit CircuitBuilder(std::size_t input_count = 0, bool intern = true);

    GateId input(std::size_t index);
    GateId constant(Rational value);
    GateId add(GateId a, GateId b) { return binary(GateKind::add, a, b); }
    GateId sub(GateId a, GateId b) { return binary(GateKind::sub, a, b); }
    GateId mul(GateId a, GateId b) { return binary(GateKind::mul, a, b); }
    GateId div(GateId a, GateId b) { return binary(GateKind::div, a, b); }
    GateId binary(GateKind kind, GateId a, GateId b);

    void output(GateId g);
    std::size_t size() const noexcept { return circuit_.gates_.size(); }

    Circuit build() &&;

private:
    GateId push(Gate g);

    Circuit circuit_;
    std::map<Rational, GateId> constants_;
    std::map<std::size_t, GateId> inputs_;
    bool intern_;
};

/// No sub gates and no negative constants.
bool check_positive(const Circuit& c);

class EvalError : public std::runtime_error {
public:
    EvalError(GateId gate, const std::string& what)
        : std::runtime_error("gate g" + std::to_string(gate.index) + ": " + what), gate_(gate) {}
    GateId gate() const noexcept { return gate_; }

private:
    GateId gate_;
};

/// Exact value of every gate. Throws EvalError on division by zero and
/// std::invalid_argument when |x| != input_count.
std::vector<Rational> eval_exact_all(const Circuit& c, std::span<const Rational> x);

/// Exact value of each output.
std::vector<Rational> eval_exact(const Circuit& c, std::span<const Rational> x);

// Circuit file, one gate per line:
//   g<k> input <i> | g<k> const <num>/<den> | g<k> add|sub|mul|div g<a> g<b> | output g<k>
// Gate ids must increase and references point backward. Ids are renumbered
// densely on read; the writer emits g0, g1, ... so written files round-trip
// byte for byte.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& c);

} // namespace wis
