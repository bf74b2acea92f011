#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace weylchi {

using BigInt = boost::multiprecision::cpp_int;
using Prime = std::uint64_t;
using Exponent = std::int64_t;

bool is_prime(std::uint64_t n);

/**
 * A positive rational number held as its prime factorization.
 *
 * Keeping the exponents rather than a reduced fraction makes the divisor
 * map exact: the p-adic valuation is a lookup. The unit is the empty map.
 * Exponent arithmetic that would overflow 64 bits throws std::overflow_error.
 */
class FactoredRational {
public:
    using Factors = std::map<Prime, Exponent>;

    FactoredRational() = default;

    /// Keys must be prime; zero exponents are dropped.
    explicit FactoredRational(const Factors& factors);

    /// num/den with 1 <= num, den <= 10^9, via trial division.
    static FactoredRational from_ratio(std::uint64_t num, std::uint64_t den);

    const Factors& factors() const { return factors_; }
    bool is_unit() const { return factors_.empty(); }

    /// Exponent of p, 0 if absent. Throws std::invalid_argument unless p
    /// is prime.
    Exponent valuation(Prime p) const;

    std::vector<Prime> support() const;

    BigInt numerator() const;
    BigInt denominator() const;

    /// Lowest terms: "1", "2", "3/2".
    std::string render() const;

    /// Product of prime powers: "1", "2^1", "2^-1 · 3^1".
    std::string render_factored() const;

    bool operator==(const FactoredRational&) const = default;

    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
    friend FactoredRational inv(const FactoredRational& a);

private:
    Factors factors_;
};

inline constexpr std::uint64_t kMaxRatioOperand = 1'000'000'000;

inline FactoredRational mul(const FactoredRational& a, const FactoredRational& b) { return a * b; }

FactoredRational inv(const FactoredRational& a);

/// a for sign = +1, inv(a) for sign = -1; any other sign throws.
FactoredRational pow_sign(const FactoredRational& a, int sign);

std::ostream& operator<<(std::ostream& os, const FactoredRational& a);

}  // namespace weylchi
