#include <doctest.h>

#include <random>
#include <stdexcept>
#include <string>

#include "weylchi/factored_rational.hpp"

using namespace weylchi;
using F = FactoredRational::Factors;

namespace {

const std::vector<Prime> kSmallPrimes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47,
                                      53, 59, 61, 67, 71, 73, 79, 83, 89, 97};

/// Parses "num/den" and refactors over the primes below 100.
F refactor(const std::string& text)
{
    const auto slash = text.find('/');
    BigInt num(text.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
    F out;
    for (Prime p : kSmallPrimes) {
        while (num % p == 0) {
            ++out[p];
            num /= p;
        }
        while (den % p == 0) {
            --out[p];
            den /= p;
        }
        if (out[p] == 0)
            out.erase(p);
    }
    REQUIRE(num == 1);
    REQUIRE(den == 1);
    return out;
}

FactoredRational random_value(std::mt19937& rng)
{
    std::uniform_int_distribution<std::size_t> count(0, 5);
    std::uniform_int_distribution<std::size_t> pick(0, kSmallPrimes.size() - 1);
    std::uniform_int_distribution<int> exponent(-10, 10);
    F f;
    for (std::size_t k = count(rng); k > 0; --k)
        f[kSmallPrimes[pick(rng)]] = exponent(rng);
    return FactoredRational(f);
}

}  // namespace

TEST_CASE("from_ratio")
{
    CHECK(FactoredRational::from_ratio(2, 4).factors() == F{{2, -1}});
    CHECK(FactoredRational::from_ratio(1, 1).is_unit());
    CHECK(FactoredRational::from_ratio(12, 1).factors() == F{{2, 2}, {3, 1}});
    CHECK(FactoredRational::from_ratio(999999937, 1).factors() == F{{999999937, 1}});
    CHECK_THROWS_AS(FactoredRational::from_ratio(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(FactoredRational::from_ratio(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(FactoredRational::from_ratio(kMaxRatioOperand + 1, 1), std::invalid_argument);
}

TEST_CASE("construction rejects composite keys and drops zero exponents")
{
    CHECK_THROWS_AS(FactoredRational(F{{4, 1}}), std::invalid_argument);
    CHECK(FactoredRational(F{{2, 0}, {3, 1}}).factors() == F{{3, 1}});
}

TEST_CASE("mul, inv, pow_sign")
{
    const FactoredRational half(F{{2, -1}});
    CHECK((half * half).factors() == F{{2, -2}});
    CHECK((FactoredRational(F{{3, 1}}) * FactoredRational(F{{3, -1}})).is_unit());
    CHECK(mul(FactoredRational(F{{2, 1}, {3, -1}}), FactoredRational(F{{3, 1}})).factors() == F{{2, 1}});

    CHECK(inv(half).factors() == F{{2, 1}});
    CHECK(inv(FactoredRational{}).is_unit());
    CHECK(inv(FactoredRational(F{{2, 1}, {3, -1}})).factors() == F{{2, -1}, {3, 1}});

    CHECK(pow_sign(half, 1) == half);
    CHECK(pow_sign(half, -1).factors() == F{{2, 1}});
    CHECK(pow_sign(FactoredRational{}, -1).is_unit());
    CHECK_THROWS_AS(pow_sign(half, 0), std::invalid_argument);

    const FactoredRational huge(F{{2, std::numeric_limits<Exponent>::max()}});
    CHECK_THROWS_AS(huge * huge, std::overflow_error);
}

TEST_CASE("valuation")
{
    CHECK(FactoredRational(F{{2, -1}}).valuation(2) == -1);
    CHECK(FactoredRational(F{{2, -1}}).valuation(3) == 0);
    CHECK(FactoredRational(F{{2, 1}, {3, -1}}).valuation(3) == -1);
    CHECK_THROWS_AS(FactoredRational{}.valuation(4), std::invalid_argument);
    CHECK_THROWS_AS(FactoredRational{}.valuation(1), std::invalid_argument);
}

TEST_CASE("render")
{
    CHECK(FactoredRational{}.render() == "1");
    CHECK(FactoredRational(F{{2, -1}}).render() == "1/2");
    CHECK(FactoredRational(F{{2, -1}, {3, 1}}).render() == "3/2");
    CHECK(FactoredRational(F{{2, -1}, {3, 1}}).render_factored() == "2^-1 · 3^1");
    CHECK(FactoredRational{}.render_factored() == "1");
    CHECK(FactoredRational(F{{97, 10}}).render() == "73742412689492826049");
}

TEST_CASE("reciprocal ratios cancel")
{
    for (std::uint64_t a = 1; a <= 500; ++a)
        for (std::uint64_t b = 1; b <= 500; ++b)
            REQUIRE((FactoredRational::from_ratio(a, b) * FactoredRational::from_ratio(b, a)).is_unit());
}

TEST_CASE("valuations add under multiplication (randomized)")
{
    std::mt19937 rng(20261014);
    for (int trial = 0; trial < 2000; ++trial) {
        const FactoredRational x = random_value(rng);
        const FactoredRational y = random_value(rng);
        const FactoredRational xy = x * y;
        for (const auto* v : {&x, &y})
            for (Prime p : v->support())
                REQUIRE(xy.valuation(p) == x.valuation(p) + y.valuation(p));
        REQUIRE(x * inv(x) == FactoredRational{});
    }
}

TEST_CASE("rendered fractions refactor to the same exponents (randomized)")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const FactoredRational x = random_value(rng);
        REQUIRE(refactor(x.render()) == x.factors());
    }
}
