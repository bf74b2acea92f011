#include <doctest.h>

#include <map>
#include <thread>

#include <boost/rational.hpp>

#include "weylchi/chi.hpp"
#include "weylchi/parallel.hpp"
#include "weylchi/skew_shape.hpp"

using namespace weylchi;
using F = FactoredRational::Factors;

namespace {

FactoredRational ratio(std::uint64_t num, std::uint64_t den) { return FactoredRational::from_ratio(num, den); }

using Q = boost::rational<long long>;

FactoredRational from_q(const Q& q)
{
    return ratio(static_cast<std::uint64_t>(q.numerator()), static_cast<std::uint64_t>(q.denominator()));
}

/// chi([a,b],[a+b]) from the two-row gluing relations alone:
///   chi[a,b] chi[a-1,b-1] = chi[a,b-1] chi[a-1,b]   (a > b)
///   chi[a,a] chi[a-1,a-1] = chi[a,a-1]
/// with chi[a,1] = 1/(a+1) and chi[a,0] = 1.
Q gl2_by_gluing(int a, int b, std::map<std::pair<int, int>, Q>& memo)
{
    if (b == 0)
        return 1;
    if (b == 1)
        return Q(1, a + 1);
    if (auto it = memo.find({a, b}); it != memo.end())
        return it->second;
    Q value = (a > b) ? gl2_by_gluing(a, b - 1, memo) * gl2_by_gluing(a - 1, b, memo) / gl2_by_gluing(a - 1, b - 1, memo)
                      : gl2_by_gluing(a, a - 1, memo) / gl2_by_gluing(a - 1, a - 1, memo);
    memo[{a, b}] = value;
    return value;
}

std::vector<std::pair<Partition, Partition>> all_pairs(int max_degree)
{
    std::vector<std::pair<Partition, Partition>> out;
    for (int n = 0; n <= max_degree; ++n) {
        const auto ps = enumerate_partitions(n);
        for (const auto& mu : ps)
            for (const auto& lambda : ps)
                out.emplace_back(mu, lambda);
    }
    return out;
}

}  // namespace

TEST_CASE("snake parameters")
{
    CHECK(snake_parameters(Partition{2, 1, 1}, Partition{4}) == SnakeParameters{Partition{2}, 2, 4, 3});
    CHECK(snake_parameters(Partition{2, 1}, Partition{3}) == SnakeParameters{Partition{2}, 1, 3, 2});
    CHECK_FALSE(snake_parameters(Partition{2, 2, 1}, Partition{4, 1}));
    CHECK_FALSE(snake_parameters(Partition{4}, Partition{2, 1, 1}));
    CHECK_FALSE(snake_parameters(Partition{2, 1}, Partition{2, 1}));
}

TEST_CASE("snake invariants on every qualifying pair up to degree 12")
{
    std::size_t qualifying = 0;
    for (const auto& [mu, lambda] : all_pairs(12)) {
        const auto s = snake_parameters(mu, lambda);
        if (!s)
            continue;
        ++qualifying;
        const SkewShape mu_skew(mu, s->nu);
        const SkewShape lambda_skew(lambda, s->nu);
        CHECK(s->nu == intersect(mu, lambda));
        CHECK(s->ell == mu_skew.size());
        CHECK(s->ell == lambda_skew.size());
        CHECK(s->r == mu_skew.row_count() + lambda_skew.row_count());
        CHECK(s->d >= 1);
        for (const auto* shape : {&mu_skew, &lambda_skew})
            CHECK(hook_length(shape->outer(), {shape->right_endpoint().row, shape->left_endpoint().col}) == s->ell);
    }
    CHECK(qualifying > 1000);
}

TEST_CASE("trivial reasons")
{
    CHECK(trivial_reason(Partition{2}, Partition{1}) == TrivialReason::degree_mismatch);
    CHECK(trivial_reason(Partition{2, 1}, Partition{2, 1}) == TrivialReason::equal);
    CHECK(trivial_reason(Partition{3}, Partition{2, 1}) == TrivialReason::not_comparable);
    CHECK(trivial_reason(Partition{2, 2, 1}, Partition{4, 1}) == TrivialReason::disconnected_or_overconnected);
    CHECK_FALSE(trivial_reason(Partition{1, 1}, Partition{2}));

    CHECK(describe_trivial(Partition{2, 2, 1}, Partition{4, 1}) == "mu/nu disconnected");
    CHECK(describe_trivial(Partition{3}, Partition{2, 1}) == "mu not strictly dominated by lambda");
    CHECK(describe_trivial(Partition{2, 1}, Partition{2, 1}) == "equal weights");
    CHECK(describe_trivial(Partition{1, 1, 1, 1}, Partition{2, 2}) == "");
    CHECK(describe_trivial(Partition{2, 2, 2, 2}, Partition{4, 4}) == "mu/nu overconnected; lambda/nu overconnected");
    CHECK(describe_trivial(Partition{2, 2, 1, 1, 1, 1}, Partition{4, 4}) == "lambda/nu overconnected");
}

TEST_CASE("closed form on worked two-row and hook pairs")
{
    CHECK(chi_closed(Partition{1, 1}, Partition{2}).value == ratio(1, 2));
    CHECK(chi_closed(Partition{2, 1, 1}, Partition{4}).value == ratio(2, 1));
    CHECK(chi_closed(Partition{1, 1, 1}, Partition{3}).value == ratio(3, 2));
    CHECK(chi_closed(Partition{3, 2}, Partition{5}).value == ratio(1, 2));
    CHECK(chi_closed(Partition{2, 2}, Partition{4}).value == ratio(2, 3));

    const ChiResult equal = chi_closed(Partition{2, 1}, Partition{2, 1});
    CHECK(equal.value.is_unit());
    CHECK(equal.trivial_reason == TrivialReason::equal);
    CHECK_FALSE(equal.snake);

    const ChiResult split = chi_closed(Partition{2, 2, 1}, Partition{4, 1});
    CHECK(split.value.is_unit());
    CHECK(split.trivial_reason == TrivialReason::disconnected_or_overconnected);
    CHECK(chi_recursive(Partition{2, 2, 1}, Partition{4, 1}).is_unit());

    CHECK(chi_closed(Partition{}, Partition{}).value.is_unit());
}

TEST_CASE("single positive root")
{
    CHECK(single_root_delta(Partition{2, 1}, Partition{3}) == PositiveRootDelta{1, 2});
    CHECK(single_root_delta(Partition{1, 1, 1}, Partition{2, 1}) == PositiveRootDelta{1, 3});
    CHECK_FALSE(single_root_delta(Partition{1, 1, 1}, Partition{3}));
    CHECK_FALSE(single_root_delta(Partition{3}, Partition{2, 1}));
    CHECK_FALSE(single_root_delta(Partition{2, 1}, Partition{2, 1}));

    CHECK(single_root_chi(Partition{2, 1}, {1, 2}) == ratio(1, 3));
    CHECK(single_root_chi(Partition{1, 1, 1}, {1, 3}) == ratio(1, 3));
    CHECK(single_root_chi(Partition{2, 1, 1}, {1, 3}) == ratio(1, 4));
    CHECK(chi_closed(Partition{2, 1, 1}, Partition{3, 1}).value == ratio(1, 4));
    CHECK(chi_recursive(Partition{2, 1, 1}, Partition{3, 1}) == ratio(1, 4));
}

TEST_CASE("recursion on worked pairs")
{
    CHECK(chi_recursive(Partition{1, 1}, Partition{2}) == ratio(1, 2));
    CHECK(chi_recursive(Partition{2, 1, 1}, Partition{4}) == ratio(2, 1));
    CHECK(chi_recursive(Partition{2, 2}, Partition{4}) == ratio(2, 3));
    CHECK(chi_recursive(Partition{1, 1, 1, 1}, Partition{2, 2}) == ratio(2, 3));
    CHECK(chi_recursive(Partition{3}, Partition{2, 1}).is_unit());
    CHECK(chi_recursive(Partition{}, Partition{}).is_unit());
}

TEST_CASE("dispatch")
{
    const ChiResult both = chi(Partition{2, 1}, Partition{3}, ChiMethod::both);
    CHECK(both.value == ratio(1, 3));
    CHECK(both.method == ChiMethod::both);
    CHECK(both.snake);
    CHECK(chi(Partition{2, 1}, Partition{2, 1}).value.is_unit());
    CHECK(chi(Partition{2, 2, 1}, Partition{4, 1}).value.is_unit());
    CHECK(chi(Partition{2, 1}, Partition{3}, ChiMethod::recursive).method == ChiMethod::recursive);
    CHECK(parse_chi_method("closed") == ChiMethod::closed);
    CHECK_THROWS_AS(parse_chi_method("fast"), std::invalid_argument);
}

TEST_CASE("two-row values agree with the gluing recurrence")
{
    std::map<std::pair<int, int>, Q> memo;
    for (int a = 1; a <= 39; ++a)
        for (int b = 1; b <= a && a + b <= 40; ++b) {
            const Q expected = gl2_by_gluing(a, b, memo);
            REQUIRE(expected == Q(b, a + 1));
            REQUIRE(chi(Partition{a, b}, Partition{a + b}).value == from_q(expected));
        }
}

TEST_CASE("hook pairs")
{
    auto hook = [](int arm, int leg) {
        std::vector<int> parts{arm};
        parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
        return Partition(parts);
    };
    for (int a = 1; a < 30; ++a)
        for (int b = 1; a + b <= 30; ++b)
            for (int s = 1; s <= b; ++s) {
                const FactoredRational base = ratio(static_cast<std::uint64_t>(a + b), static_cast<std::uint64_t>(s));
                REQUIRE(chi(hook(a, b), hook(a + s, b - s)).value == pow_sign(base, s % 2 == 0 ? 1 : -1));
            }
}

TEST_CASE("last-column recursion agrees with first-column recursion")
{
    const RecursiveChiEngine last({ColumnChoice::last, 4096});
    for (const auto& [mu, lambda] : all_pairs(10))
        REQUIRE(last.compute(mu, lambda) == chi_recursive(mu, lambda));
    CHECK(last.memo_size() > 0);
}

TEST_CASE("memoization is transparent")
{
    const RecursiveChiEngine cold;
    const RecursiveChiEngine warm;
    const auto pairs = all_pairs(9);
    for (const auto& [mu, lambda] : pairs)
        (void)warm.compute(mu, lambda);
    for (auto it = pairs.rbegin(); it != pairs.rend(); ++it) {
        REQUIRE(warm.compute(it->first, it->second) == cold.compute(it->first, it->second));
    }
    RecursiveChiEngine cleared;
    (void)cleared.compute(Partition{2, 2}, Partition{4});
    CHECK(cleared.memo_size() > 0);
    cleared.clear_memo();
    CHECK(cleared.memo_size() == 0);
    CHECK(cleared.compute(Partition{2, 2}, Partition{4}) == ratio(2, 3));
}

TEST_CASE("one engine shared across threads gives the single-threaded values")
{
    const auto pairs = all_pairs(11);
    const RecursiveChiEngine shared;
    auto threaded = parallel_map(pairs.size(), 8, [&](std::size_t k) {
        return shared.compute(pairs[k].first, pairs[k].second);
    });
    const RecursiveChiEngine serial;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        REQUIRE(threaded[k] == serial.compute(pairs[k].first, pairs[k].second));
}

TEST_CASE("depth cap")
{
    const RecursiveChiEngine shallow({ColumnChoice::first, 1});
    CHECK(shallow.compute(Partition{2, 1}, Partition{3}) == ratio(1, 3));
    CHECK_THROWS_AS(shallow.compute(Partition{3, 3}, Partition{6}), InternalError);
}

TEST_CASE("mismatch error carries the pair")
{
    const EngineMismatch e(Partition{2, 1}, Partition{3}, ratio(1, 3), ratio(1, 2));
    CHECK(e.mu() == Partition{2, 1});
    CHECK(e.lambda() == Partition{3});
    CHECK(std::string(e.what()).find("mu=2,1 lambda=3") != std::string::npos);
}
