#include "wis/rational.hpp"

#include <cctype>

namespace wis {

namespace {

bool is_integer_text(std::string_view s)
{
    if (!s.empty() && s.front() == '-')
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Rational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::invalid_argument("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Rational parse_rational(std::string_view text)
{
    auto slash = text.find('/');
    auto num_text = text.substr(0, slash);
    if (!is_integer_text(num_text))
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    BigInt num(std::string(num_text), 10);
    if (slash == std::string_view::npos)
        return Rational(num);

    auto den_text = text.substr(slash + 1);
    if (!is_integer_text(den_text) || den_text.front() == '-')
        throw std::invalid_argument("bad rational '" + std::string(text) + "'");
    return make_rational(num, BigInt(std::string(den_text), 10));
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_fraction_string(const Rational& q)
{
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::size_t bit_length(const BigInt& x)
{
    if (x == 0)
        return 0;
    return mpz_sizeinbase(x.get_mpz_t(), 2);
}

} // namespace wis
