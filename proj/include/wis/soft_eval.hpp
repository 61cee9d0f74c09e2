#pragma once

#include "wis/circuit.hpp"

#include <cstdint>
#include <vector>

namespace wis {

/// Positive binary floating-point value mantissa · 2^exponent, with the
/// mantissa held to at most `mantissa_bits` bits by round-to-nearest-even.
struct SoftFloat {
    BigInt mantissa;
    std::int64_t exponent = 0;

    Rational value() const;

    /// e such that value ∈ [2^(e-1), 2^e); 0 for zero.
    std::int64_t magnitude() const;
};

/// Precision parameters for certified evaluation of a positive circuit.
///
/// With eps = 2^-mantissa_bits and K = (1 + eps)/(1 - eps), every gate of a
/// circuit of size |C| is within a factor K^(3^|C|) of its exact value, and
/// mantissa_bits >= log2(3)(|C| + 1) + n_b·n·d + 1 makes that error smaller
/// than 1/(2 D^d) for outputs below 2^(n_b·n·d + n_b).
struct EvalPlan {
    std::size_t input_bits = 1;    // n_b
    std::size_t input_count = 0;   // n
    std::size_t degree = 0;        // d
    std::size_t circuit_size = 0;  // |C|
    std::size_t mantissa_bits = 1; // b_m
    std::size_t exponent_bits = 1; // b_e
    BigInt denominator_lcm = 1;    // D
};

/// Smallest b_m, b_e meeting the bounds above (logs base 2, ceilinged).
/// Throws std::invalid_argument for a non-positive circuit, n_b = 0 or D < 1.
EvalPlan plan_precision(const Circuit& c, std::size_t input_bits, std::size_t degree, const BigInt& denominator_lcm);

/// Smallest n_b covering every numerator and denominator of x and the bit
/// length of `output_bound`, an upper bound on the circuit's output.
std::size_t input_bits_for(std::span<const Rational> x, const Rational& output_bound);

/// lcm of the denominators of x.
BigInt denominator_lcm(std::span<const Rational> x);

class SoftOverflow : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rounded arithmetic at a fixed mantissa width; each operation returns a
/// value within a factor (1 ± 2^-mantissa_bits) of the exact result of its
/// operands.
class SoftArithmetic {
public:
    SoftArithmetic(std::size_t mantissa_bits, std::size_t exponent_bits);

    SoftFloat from_rational(const Rational& q) const;
    SoftFloat add(const SoftFloat& a, const SoftFloat& b) const;
    SoftFloat mul(const SoftFloat& a, const SoftFloat& b) const;
    SoftFloat div(const SoftFloat& a, const SoftFloat& b) const;

    std::size_t mantissa_bits() const noexcept { return mantissa_bits_; }

private:
    SoftFloat round(BigInt mantissa, std::int64_t exponent) const;
    SoftFloat round_with_sticky(BigInt mantissa, std::int64_t exponent, bool sticky) const;

    std::size_t mantissa_bits_;
    std::int64_t exponent_limit_;
};

/// Evaluates a positive circuit on x > 0 in soft floats sized by `plan`.
/// Throws std::invalid_argument for non-positive circuits or inputs,
/// SoftOverflow if an exponent leaves the planned range.
std::vector<SoftFloat> eval_soft(const Circuit& c, std::span<const Rational> x, const EvalPlan& plan);

/// round(D^d · approx) / D^d.
Rational recover_exact(const SoftFloat& approx, const EvalPlan& plan);

/// Whether approx lies in [y·K^-(3^|C|), y·K^(3^|C|)] for eps = 2^-b_m.
/// K^(3^|C|) is replaced by rational bounds that are never looser than the
/// true envelope, so a `true` answer certifies membership.
bool within_error_envelope(const Rational& approx, const Rational& exact, const EvalPlan& plan);

} // namespace wis
