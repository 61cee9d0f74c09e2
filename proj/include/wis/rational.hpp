#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace wis {

using BigInt = mpz_class;

// mpq_class arithmetic keeps values canonical; only construction from a raw
// numerator/denominator pair needs an explicit canonicalize().
using Rational = mpq_class;

/// Thrown for malformed input text. `line` is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// A well-formed request that has no answer in the domain
/// (no strong ordering, nonpositive weight, ...).
class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A search or enumeration hit its configured work limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(const BigInt& num, const BigInt& den);

/// Parses `<int>` or `<int>/<int>` (optional leading '-'); throws
/// std::invalid_argument on bad syntax or zero denominator.
Rational parse_rational(std::string_view text);

/// `num/den`, or just `num` when the denominator is 1.
std::string to_string(const Rational& q);

/// Always `num/den`, even for integers.
std::string to_fraction_string(const Rational& q);

/// Number of bits of |x|; 0 for x = 0.
std::size_t bit_length(const BigInt& x);

} // namespace wis
