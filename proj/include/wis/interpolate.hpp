#pragma once

#include "wis/rational.hpp"

#include <span>
#include <utility>
#include <vector>

namespace wis {

struct SamplePoint {
    Rational at;
    Rational value;
};

/// Coefficients c_0..c_d of the unique polynomial of degree <= d through
/// the first d + 1 points (Newton divided differences, exact). Throws
/// std::invalid_argument on fewer than d + 1 points or repeated abscissae.
std::vector<Rational> interpolate_coeffs(std::span<const SamplePoint> points, std::size_t degree);

/// Horner evaluation of c_0 + c_1 t + ... .
Rational evaluate_polynomial(std::span<const Rational> coeffs, const Rational& t);

} // namespace wis
