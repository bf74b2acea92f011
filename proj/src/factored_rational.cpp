#include "weylchi/factored_rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace weylchi {

namespace {

void factor_into(std::uint64_t n, Exponent sign, FactoredRational::Factors& out)
{
    auto bump = [&](Prime p) {
        Exponent& e = out[p];
        e += sign;
        if (e == 0)
            out.erase(p);
    };
    for (std::uint64_t p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            bump(p);
            n /= p;
        }
    }
    if (n > 1)
        bump(n);
}

BigInt prime_power(Prime p, Exponent e)
{
    BigInt out = 1;
    BigInt base = p;
    for (Exponent i = 0; i < e; ++i)
        out *= base;
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

FactoredRational::FactoredRational(const Factors& factors)
{
    for (auto [p, e] : factors) {
        if (!is_prime(p))
            throw std::invalid_argument(std::to_string(p) + " is not prime");
        if (e != 0)
            factors_.emplace(p, e);
    }
}

FactoredRational FactoredRational::from_ratio(std::uint64_t num, std::uint64_t den)
{
    if (num == 0 || den == 0)
        throw std::invalid_argument("from_ratio needs positive numerator and denominator");
    if (num > kMaxRatioOperand || den > kMaxRatioOperand)
        throw std::invalid_argument("from_ratio operand exceeds 10^9");
    FactoredRational out;
    factor_into(num, +1, out.factors_);
    factor_into(den, -1, out.factors_);
    return out;
}

Exponent FactoredRational::valuation(Prime p) const
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
    auto it = factors_.find(p);
    return it == factors_.end() ? 0 : it->second;
}

std::vector<Prime> FactoredRational::support() const
{
    std::vector<Prime> out;
    out.reserve(factors_.size());
    for (const auto& [p, e] : factors_)
        out.push_back(p);
    return out;
}

BigInt FactoredRational::numerator() const
{
    BigInt out = 1;
    for (const auto& [p, e] : factors_)
        if (e > 0)
            out *= prime_power(p, e);
    return out;
}

BigInt FactoredRational::denominator() const
{
    BigInt out = 1;
    for (const auto& [p, e] : factors_)
        if (e < 0)
            out *= prime_power(p, -e);
    return out;
}

std::string FactoredRational::render() const
{
    const BigInt den = denominator();
    std::string out = numerator().str();
    if (den != 1)
        out += "/" + den.str();
    return out;
}

std::string FactoredRational::render_factored() const
{
    if (factors_.empty())
        return "1";
    std::string out;
    for (const auto& [p, e] : factors_) {
        if (!out.empty())
            out += " · ";
        out += std::to_string(p) + "^" + std::to_string(e);
    }
    return out;
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b)
{
    FactoredRational out = a;
    for (const auto& [p, e] : b.factors_) {
        Exponent& slot = out.factors_[p];
        if (__builtin_add_overflow(slot, e, &slot))
            throw std::overflow_error("exponent overflow at prime " + std::to_string(p));
        if (slot == 0)
            out.factors_.erase(p);
    }
    return out;
}

FactoredRational inv(const FactoredRational& a)
{
    FactoredRational out = a;
    for (auto& [p, e] : out.factors_) {
        if (e == std::numeric_limits<Exponent>::min())
            throw std::overflow_error("exponent overflow at prime " + std::to_string(p));
        e = -e;
    }
    return out;
}

FactoredRational pow_sign(const FactoredRational& a, int sign)
{
    if (sign == 1)
        return a;
    if (sign == -1)
        return inv(a);
    throw std::invalid_argument("pow_sign expects +1 or -1");
}

std::ostream& operator<<(std::ostream& os, const FactoredRational& a)
{
    return os << a.render();
}

}  // namespace weylchi
