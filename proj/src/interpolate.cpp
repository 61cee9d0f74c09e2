#include "wis/interpolate.hpp"

#include <stdexcept>

namespace wis {

std::vector<Rational> interpolate_coeffs(std::span<const SamplePoint> points, std::size_t degree)
{
    const std::size_t m = degree + 1;
    if (points.size() < m)
        throw std::invalid_argument("interpolate_coeffs: need " + std::to_string(m) + " points, got " +
                                    std::to_string(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].at == points[j].at)
                throw std::invalid_argument("interpolate_coeffs: repeated abscissa " + to_string(points[i].at));

    // Divided differences in place: after pass k, diff[i] = f[t_{i-k}..t_i].
    std::vector<Rational> diff(m);
    for (std::size_t i = 0; i < m; ++i)
        diff[i] = points[i].value;
    for (std::size_t k = 1; k < m; ++k)
        for (std::size_t i = m - 1; i >= k; --i)
            diff[i] = (diff[i] - diff[i - 1]) / (points[i].at - points[i - k].at);

    // Expand the Newton form from the innermost term outward:
    // p = diff[d]; p = p·(t - t_k) + diff[k] for k = d-1..0.
    std::vector<Rational> coeffs(m);
    coeffs[0] = diff[m - 1];
    std::size_t len = 1;
    for (std::size_t k = m - 1; k-- > 0;) {
        // coeffs <- coeffs·(t - t_k)
        coeffs[len] = coeffs[len - 1];
        for (std::size_t i = len - 1; i > 0; --i)
            coeffs[i] = coeffs[i - 1] - points[k].at * coeffs[i];
        coeffs[0] = -points[k].at * coeffs[0];
        ++len;
        coeffs[0] += diff[k];
    }
    return coeffs;
}

Rational evaluate_polynomial(std::span<const Rational> coeffs, const Rational& t)
{
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

} // namespace wis
