#include "wis/soft_eval.hpp"

#include <algorithm>
#include <limits>

namespace wis {

namespace {

BigInt shifted_left(const BigInt& x, std::size_t bits)
{
    BigInt out;
    mpz_mul_2exp(out.get_mpz_t(), x.get_mpz_t(), bits);
    return out;
}

BigInt shifted_right(const BigInt& x, std::size_t bits)
{
    BigInt out;
    mpz_fdiv_q_2exp(out.get_mpz_t(), x.get_mpz_t(), bits);
    return out;
}

BigInt power(unsigned long base, std::size_t exponent)
{
    BigInt out;
    mpz_ui_pow_ui(out.get_mpz_t(), base, exponent);
    return out;
}

Rational pow2(std::int64_t e)
{
    Rational out(1);
    if (e >= 0)
        mpq_mul_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return out;
}

// ceil(log2(x)) for x >= 1.
std::size_t ceil_log2(std::size_t x) { return bit_length(BigInt(static_cast<unsigned long>(x - 1))); }

} // namespace

Rational SoftFloat::value() const { return Rational(mantissa) * pow2(exponent); }

std::int64_t SoftFloat::magnitude() const
{
    if (mantissa == 0)
        return 0;
    return exponent + static_cast<std::int64_t>(bit_length(mantissa));
}

EvalPlan plan_precision(const Circuit& c, std::size_t input_bits, std::size_t degree, const BigInt& denominator_lcm)
{
    if (!check_positive(c))
        throw std::invalid_argument("plan_precision: circuit is not positive");
    if (input_bits == 0)
        throw std::invalid_argument("plan_precision: n_b must be at least 1");
    if (denominator_lcm < 1)
        throw std::invalid_argument("plan_precision: D must be at least 1");

    EvalPlan plan;
    plan.input_bits = input_bits;
    plan.input_count = c.input_count();
    plan.degree = degree;
    plan.circuit_size = c.size();
    plan.denominator_lcm = denominator_lcm;

    // 3^k is never a power of two, so ceil(k·log2 3) is the bit length of 3^k.
    const std::size_t log3_term = bit_length(power(3, c.size() + 1));
    plan.mantissa_bits = log3_term + input_bits * plan.input_count * degree + 1;
    plan.exponent_bits = ceil_log2(input_bits) + c.size() + 1;
    return plan;
}

std::size_t input_bits_for(std::span<const Rational> x, const Rational& output_bound)
{
    std::size_t bits = 1;
    for (const auto& q : x)
        bits = std::max({bits, bit_length(q.get_num()), bit_length(q.get_den())});
    BigInt ceiling;
    mpz_cdiv_q(ceiling.get_mpz_t(), output_bound.get_num_mpz_t(), output_bound.get_den_mpz_t());
    return std::max(bits, bit_length(ceiling));
}

BigInt denominator_lcm(std::span<const Rational> x)
{
    BigInt d = 1;
    for (const auto& q : x)
        mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), q.get_den_mpz_t());
    return d;
}

SoftArithmetic::SoftArithmetic(std::size_t mantissa_bits, std::size_t exponent_bits)
    : mantissa_bits_(mantissa_bits)
{
    if (mantissa_bits < 2)
        throw std::invalid_argument("SoftArithmetic: need at least 2 mantissa bits");
    // b_e bits hold exponents up to 2^(b_e - 1) in magnitude; the slack of 2
    // absorbs rounding at the boundary value A itself.
    constexpr std::int64_t cap = std::numeric_limits<std::int64_t>::max() / 4;
    exponent_limit_ = exponent_bits >= 62 ? cap : (std::int64_t{1} << (exponent_bits - 1)) + 2;
    if (exponent_bits == 0)
        exponent_limit_ = 2;
}

SoftFloat SoftArithmetic::round_with_sticky(BigInt mantissa, std::int64_t exponent, bool sticky) const
{
    // `sticky` records nonzero bits below the mantissa's last bit.
    if (sticky) {
        mantissa = shifted_left(mantissa, 1) + 1;
        exponent -= 1;
    }
    return round(std::move(mantissa), exponent);
}

SoftFloat SoftArithmetic::round(BigInt mantissa, std::int64_t exponent) const
{
    SoftFloat out;
    if (mantissa == 0)
        return out;

    const std::size_t bits = bit_length(mantissa);
    if (bits > mantissa_bits_) {
        const std::size_t drop = bits - mantissa_bits_;
        BigInt kept = shifted_right(mantissa, drop);
        BigInt rest = mantissa - shifted_left(kept, drop);
        BigInt half = shifted_left(BigInt(1), drop - 1);
        if (rest > half || (rest == half && mpz_odd_p(kept.get_mpz_t())))
            ++kept;
        exponent += static_cast<std::int64_t>(drop);
        if (bit_length(kept) > mantissa_bits_) {
            kept = shifted_right(kept, 1);
            ++exponent;
        }
        mantissa = std::move(kept);
    }
    out.mantissa = std::move(mantissa);
    out.exponent = exponent;

    auto mag = out.magnitude();
    if (mag > exponent_limit_ || mag < -exponent_limit_)
        throw SoftOverflow("soft float exponent " + std::to_string(mag) + " outside planned range ±" +
                           std::to_string(exponent_limit_));
    return out;
}

SoftFloat SoftArithmetic::from_rational(const Rational& q) const
{
    if (q < 0)
        throw std::invalid_argument("SoftArithmetic: negative value");
    SoftFloat num{q.get_num(), 0}, den{q.get_den(), 0};
    return div(num, den);
}

SoftFloat SoftArithmetic::add(const SoftFloat& a, const SoftFloat& b) const
{
    if (a.mantissa == 0)
        return round(b.mantissa, b.exponent);
    if (b.mantissa == 0)
        return round(a.mantissa, a.exponent);

    const SoftFloat& hi = a.exponent >= b.exponent ? a : b;
    const SoftFloat& lo = a.exponent >= b.exponent ? b : a;
    const auto gap = static_cast<std::uint64_t>(hi.exponent - lo.exponent);
    const std::size_t guard =
        std::max({bit_length(hi.mantissa), bit_length(lo.mantissa), mantissa_bits_}) + 2;

    if (gap <= 2 * guard + 4) {
        BigInt sum = shifted_left(hi.mantissa, gap) + lo.mantissa;
        return round(std::move(sum), lo.exponent);
    }
    // lo sits below the last of `guard` extra bits of hi, so it only
    // contributes a sticky bit.
    return round_with_sticky(shifted_left(hi.mantissa, guard), hi.exponent - static_cast<std::int64_t>(guard), true);
}

SoftFloat SoftArithmetic::mul(const SoftFloat& a, const SoftFloat& b) const
{
    return round(a.mantissa * b.mantissa, a.exponent + b.exponent);
}

SoftFloat SoftArithmetic::div(const SoftFloat& a, const SoftFloat& b) const
{
    if (b.mantissa == 0)
        throw std::domain_error("soft float division by zero");
    if (a.mantissa == 0)
        return {};
    // Scale so the integer quotient has at least mantissa_bits + 2 bits.
    const auto na = static_cast<std::int64_t>(bit_length(a.mantissa));
    const auto nb = static_cast<std::int64_t>(bit_length(b.mantissa));
    const std::int64_t shift = std::max<std::int64_t>(0, static_cast<std::int64_t>(mantissa_bits_) + 2 + nb - na);
    BigInt num = shifted_left(a.mantissa, static_cast<std::size_t>(shift));
    BigInt quotient, remainder;
    mpz_tdiv_qr(quotient.get_mpz_t(), remainder.get_mpz_t(), num.get_mpz_t(), b.mantissa.get_mpz_t());
    return round_with_sticky(std::move(quotient), a.exponent - b.exponent - shift, remainder != 0);
}

std::vector<SoftFloat> eval_soft(const Circuit& c, std::span<const Rational> x, const EvalPlan& plan)
{
    if (!check_positive(c))
        throw std::invalid_argument("eval_soft: circuit is not positive");
    if (x.size() != c.input_count())
        throw std::invalid_argument("eval_soft: input count mismatch");
    for (const auto& q : x)
        if (q <= 0)
            throw std::invalid_argument("eval_soft: inputs must be positive");

    SoftArithmetic arith(plan.mantissa_bits, plan.exponent_bits);
    std::vector<SoftFloat> value(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const auto& g = c.gates()[i];
        switch (g.kind) {
        case GateKind::input: value[i] = arith.from_rational(x[g.input]); break;
        case GateKind::constant: value[i] = arith.from_rational(g.value); break;
        case GateKind::add: value[i] = arith.add(value[g.lhs.index], value[g.rhs.index]); break;
        case GateKind::mul: value[i] = arith.mul(value[g.lhs.index], value[g.rhs.index]); break;
        case GateKind::div:
            if (value[g.rhs.index].mantissa == 0)
                throw EvalError(GateId{static_cast<std::uint32_t>(i)}, "division by zero in positive circuit");
            value[i] = arith.div(value[g.lhs.index], value[g.rhs.index]);
            break;
        case GateKind::sub: break; // excluded by check_positive
        }
    }
    std::vector<SoftFloat> out;
    for (auto g : c.outputs())
        out.push_back(value[g.index]);
    return out;
}

Rational recover_exact(const SoftFloat& approx, const EvalPlan& plan)
{
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), plan.denominator_lcm.get_mpz_t(), plan.degree);
    BigInt scaled = scale * approx.mantissa;
    BigInt nearest;
    if (approx.exponent >= 0) {
        nearest = shifted_left(scaled, static_cast<std::size_t>(approx.exponent));
    } else {
        const auto drop = static_cast<std::size_t>(-approx.exponent);
        nearest = shifted_right(scaled + shifted_left(BigInt(1), drop - 1), drop);
    }
    return make_rational(nearest, scale);
}

bool within_error_envelope(const Rational& approx, const Rational& exact, const EvalPlan& plan)
{
    // x = 3^|C| · 2·eps <= 3^|C| · ln K, so 1 + x <= K^(3^|C|) and
    // K^-(3^|C|) <= e^-x <= 1 - x + x²/2.
    Rational x(power(3, plan.circuit_size) * 2);
    x *= pow2(-static_cast<std::int64_t>(plan.mantissa_bits));
    const Rational upper = exact * (1 + x);
    const Rational lower = exact * (1 - x + x * x / 2);
    return lower <= approx && approx <= upper;
}

} // namespace wis
