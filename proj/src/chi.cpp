#include "weylchi/chi.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>

#include "weylchi/skew_shape.hpp"

namespace weylchi {

namespace {

std::string mismatch_message(const Partition& mu, const Partition& lambda, const FactoredRational& closed,
                             const FactoredRational& recursive)
{
    std::ostringstream os;
    os << "chi engines disagree for mu=" << mu << " lambda=" << lambda << ": closed=" << closed
       << " recursive=" << recursive;
    return os.str();
}

std::string pair_context(const Partition& mu, const Partition& lambda)
{
    return "mu=" + to_string(mu) + " lambda=" + to_string(lambda);
}

/// Reasons that only depend on the dominance order.
std::optional<TrivialReason> order_reason(const Partition& mu, const Partition& lambda)
{
    if (degree(mu) != degree(lambda))
        return TrivialReason::degree_mismatch;
    if (mu == lambda)
        return TrivialReason::equal;
    if (!dominates_strictly(mu, lambda))
        return TrivialReason::not_comparable;
    return std::nullopt;
}

int checked_hook(const Partition& p, const Cell& c, const char* what, const Partition& mu,
                 const Partition& lambda)
{
    if (!p.contains(c)) {
        std::ostringstream os;
        os << what << " hook cell " << c << " outside " << p << " for " << pair_context(mu, lambda);
        throw InternalError(os.str());
    }
    return hook_length(p, c);
}

Partition drop_first_column(const Partition& p)
{
    std::vector<int> out(p.parts().begin(), p.parts().end());
    for (int& part : out)
        --part;
    return Partition(std::move(out));
}

/// Drops the rightmost box of each of the top t rows; t must be a column
/// length of p.
Partition drop_top_rows_ends(const Partition& p, int t)
{
    std::vector<int> out(p.parts().begin(), p.parts().end());
    for (int i = 0; i < t; ++i)
        --out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
}

}  // namespace

EngineMismatch::EngineMismatch(const Partition& mu, const Partition& lambda, const FactoredRational& closed,
                               const FactoredRational& recursive)
    : std::runtime_error(mismatch_message(mu, lambda, closed, recursive)), mu_(mu), lambda_(lambda)
{
}

std::string to_string(ChiMethod m)
{
    switch (m) {
    case ChiMethod::closed:
        return "closed";
    case ChiMethod::recursive:
        return "recursive";
    case ChiMethod::both:
        return "both";
    }
    return "?";
}

std::string to_string(TrivialReason r)
{
    switch (r) {
    case TrivialReason::not_comparable:
        return "not_comparable";
    case TrivialReason::degree_mismatch:
        return "degree_mismatch";
    case TrivialReason::equal:
        return "equal";
    case TrivialReason::disconnected_or_overconnected:
        return "disconnected_or_overconnected";
    }
    return "?";
}

ChiMethod parse_chi_method(const std::string& text)
{
    if (text == "closed")
        return ChiMethod::closed;
    if (text == "recursive")
        return ChiMethod::recursive;
    if (text == "both")
        return ChiMethod::both;
    throw std::invalid_argument("unknown method \"" + text + "\" (expected closed, recursive or both)");
}

std::optional<SnakeParameters> snake_parameters(const Partition& mu, const Partition& lambda)
{
    if (order_reason(mu, lambda))
        return std::nullopt;

    Partition nu = intersect(mu, lambda);
    const SkewShape mu_skew(mu, nu);
    const SkewShape lambda_skew(lambda, nu);
    if (!mu_skew.is_border_strip() || !lambda_skew.is_border_strip())
        return std::nullopt;

    if (mu_skew.size() != lambda_skew.size())
        throw InternalError("skew hooks of unequal size for " + pair_context(mu, lambda));

    const Cell mu_left = mu_skew.left_endpoint();
    const Cell lambda_left = lambda_skew.left_endpoint();
    const Cell mu_right = mu_skew.right_endpoint();
    const Cell lambda_right = lambda_skew.right_endpoint();

    const int d = checked_hook(mu, {lambda_left.row, mu_left.col}, "d", mu, lambda);
    const int d_dual = checked_hook(lambda, {lambda_right.row, mu_right.col}, "dual d", mu, lambda);
    if (d != d_dual) {
        std::ostringstream os;
        os << "hook readings of d disagree (" << d << " vs " << d_dual << ") for " << pair_context(mu, lambda);
        throw InternalError(os.str());
    }

    return SnakeParameters{std::move(nu), lambda_skew.size(), d, mu_skew.row_count() + lambda_skew.row_count()};
}

std::optional<TrivialReason> trivial_reason(const Partition& mu, const Partition& lambda)
{
    if (auto reason = order_reason(mu, lambda))
        return reason;
    if (!snake_parameters(mu, lambda))
        return TrivialReason::disconnected_or_overconnected;
    return std::nullopt;
}

std::string describe_trivial(const Partition& mu, const Partition& lambda)
{
    const auto reason = trivial_reason(mu, lambda);
    if (!reason)
        return {};
    switch (*reason) {
    case TrivialReason::degree_mismatch:
        return "degree mismatch";
    case TrivialReason::equal:
        return "equal weights";
    case TrivialReason::not_comparable:
        return "mu not strictly dominated by lambda";
    case TrivialReason::disconnected_or_overconnected:
        break;
    }

    const Partition nu = intersect(mu, lambda);
    std::string out;
    auto note = [&](const char* name, const SkewShape& s) {
        std::string what;
        if (!s.is_connected())
            what = "disconnected";
        if (s.has_two_by_two())
            what += what.empty() ? "overconnected" : " and overconnected";
        if (what.empty())
            return;
        if (!out.empty())
            out += "; ";
        out += std::string(name) + "/nu " + what;
    };
    note("mu", SkewShape(mu, nu));
    note("lambda", SkewShape(lambda, nu));
    return out;
}

ChiResult chi_closed(const Partition& mu, const Partition& lambda)
{
    ChiResult result;
    result.method = ChiMethod::closed;
    result.trivial_reason = order_reason(mu, lambda);
    if (result.trivial_reason)
        return result;

    result.snake = snake_parameters(mu, lambda);
    if (!result.snake) {
        result.trivial_reason = TrivialReason::disconnected_or_overconnected;
        return result;
    }
    const auto& s = *result.snake;
    const int sign = (s.r % 2 == 0) ? 1 : -1;
    result.value = pow_sign(FactoredRational::from_ratio(static_cast<std::uint64_t>(s.ell),
                                                         static_cast<std::uint64_t>(s.d)),
                            sign);
    return result;
}

std::optional<PositiveRootDelta> single_root_delta(const Partition& mu, const Partition& lambda)
{
    const std::size_t rows = std::max(mu.length(), lambda.length());
    std::optional<int> plus;
    std::optional<int> minus;
    for (std::size_t k = 1; k <= rows; ++k) {
        const int diff = lambda.row(k) - mu.row(k);
        if (diff == 0)
            continue;
        if (diff == 1 && !plus)
            plus = static_cast<int>(k);
        else if (diff == -1 && !minus)
            minus = static_cast<int>(k);
        else
            return std::nullopt;
    }
    if (!plus || !minus || *plus > *minus)
        return std::nullopt;
    return PositiveRootDelta{*plus, *minus};
}

FactoredRational single_root_chi(const Partition& mu, const PositiveRootDelta& delta)
{
    const int pairing = mu.row(static_cast<std::size_t>(delta.i)) - mu.row(static_cast<std::size_t>(delta.j))
                        + delta.j - delta.i;
    return FactoredRational::from_ratio(1, static_cast<std::uint64_t>(pairing + 1));
}

std::size_t RecursiveChiEngine::memo_size() const
{
    std::shared_lock lock(memo_mutex_);
    return memo_.size();
}

void RecursiveChiEngine::clear_memo()
{
    std::unique_lock lock(memo_mutex_);
    memo_.clear();
}

FactoredRational RecursiveChiEngine::compute(const Partition& mu, const Partition& lambda) const
{
    return compute_at(mu, lambda, 0, false);
}

FactoredRational RecursiveChiEngine::compute_at(const Partition& mu_in, const Partition& lambda_in,
                                                std::size_t depth, bool after_swap) const
{
    if (depth > options_.max_depth)
        throw InternalError("recursion depth cap " + std::to_string(options_.max_depth) + " exceeded at "
                            + pair_context(mu_in, lambda_in));

    if (!dominates_strictly(mu_in, lambda_in))
        return {};

    auto key = strip_common_border(mu_in, lambda_in);
    const Partition& mu = key.first;
    const Partition& lambda = key.second;
    {
        std::shared_lock lock(memo_mutex_);
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;
    }

    auto remember = [&](FactoredRational value) {
        std::unique_lock lock(memo_mutex_);
        memo_.emplace(key, value);
        return value;
    };

    if (auto delta = single_root_delta(mu, lambda))
        return remember(single_root_chi(mu, *delta));

    // Split off a column of lambda of length t; lambda' is lambda without it.
    auto split = [&](ColumnChoice choice) {
        if (choice == ColumnChoice::first)
            return std::pair{static_cast<int>(lambda.length()), drop_first_column(lambda)};
        const int t = conjugate(lambda).parts().back();
        return std::pair{t, drop_top_rows_ends(lambda, t)};
    };

    auto [t, lambda_prime] = split(options_.column);
    auto additions = vertical_strip_additions(lambda_prime, t);
    bool hom_obstruction = std::find(additions.begin(), additions.end(), mu) != additions.end();
    if (hom_obstruction && options_.column != ColumnChoice::first) {
        std::tie(t, lambda_prime) = split(ColumnChoice::first);
        additions = vertical_strip_additions(lambda_prime, t);
        hom_obstruction = std::find(additions.begin(), additions.end(), mu) != additions.end();
    }

    if (hom_obstruction) {
        if (after_swap)
            throw InternalError("conjugate escape hit the Hom obstruction again at " + pair_context(mu, lambda));
        return remember(compute_at(conjugate(lambda), conjugate(mu), depth + 1, true));
    }

    if (std::find(additions.begin(), additions.end(), lambda) == additions.end())
        throw InternalError("lambda missing from its own Pieri expansion at " + pair_context(mu, lambda));

    FactoredRational value;
    for (const Partition& removed : vertical_strip_removals(mu, t))
        value = value * compute_at(removed, lambda_prime, depth + 1, false);
    FactoredRational lower;
    for (const Partition& added : additions)
        if (added != lambda)
            lower = lower * compute_at(mu, added, depth + 1, false);
    return remember(value * inv(lower));
}

const RecursiveChiEngine& default_recursive_engine()
{
    static const RecursiveChiEngine engine;
    return engine;
}

FactoredRational chi_recursive(const Partition& mu, const Partition& lambda)
{
    return default_recursive_engine().compute(mu, lambda);
}

ChiResult chi(const Partition& mu, const Partition& lambda, ChiMethod method)
{
    switch (method) {
    case ChiMethod::closed:
        return chi_closed(mu, lambda);
    case ChiMethod::recursive: {
        ChiResult result;
        result.method = ChiMethod::recursive;
        result.value = chi_recursive(mu, lambda);
        result.trivial_reason = order_reason(mu, lambda);
        return result;
    }
    case ChiMethod::both:
        break;
    }
    ChiResult closed = chi_closed(mu, lambda);
    const FactoredRational recursive = chi_recursive(mu, lambda);
    if (closed.value != recursive)
        throw EngineMismatch(mu, lambda, closed.value, recursive);
    closed.method = ChiMethod::both;
    return closed;
}

}  // namespace weylchi
