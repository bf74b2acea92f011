#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>

#include "weylchi/factored_rational.hpp"
#include "weylchi/partition.hpp"

namespace weylchi {

/// Raised when an engine reaches a configuration its derivation rules out.
/// Always a bug in this library, never a property of the input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// The closed form and the recursion disagreed on a pair.
class EngineMismatch : public std::runtime_error {
public:
    EngineMismatch(const Partition& mu, const Partition& lambda, const FactoredRational& closed,
                   const FactoredRational& recursive);

    const Partition& mu() const { return mu_; }
    const Partition& lambda() const { return lambda_; }

private:
    Partition mu_;
    Partition lambda_;
};

/// Geometry of a pair differing by connected skew hooks: nu is the diagram
/// intersection, ell the common hook size, d the sliding distance and r the
/// total number of nonempty rows of mu/nu and lambda/nu.
struct SnakeParameters {
    Partition nu;
    int ell = 0;
    int d = 0;
    int r = 0;

    bool operator==(const SnakeParameters&) const = default;
};

enum class ChiMethod { closed, recursive, both };

enum class TrivialReason { not_comparable, degree_mismatch, equal, disconnected_or_overconnected };

std::string to_string(ChiMethod m);
std::string to_string(TrivialReason r);

/// Throws std::invalid_argument for anything but closed|recursive|both.
ChiMethod parse_chi_method(const std::string& text);

struct ChiResult {
    FactoredRational value;
    ChiMethod method = ChiMethod::closed;
    std::optional<SnakeParameters> snake;
    std::optional<TrivialReason> trivial_reason;
};

/// e_i - e_j with i < j (1-based rows).
struct PositiveRootDelta {
    int i = 1;
    int j = 2;

    bool operator==(const PositiveRootDelta&) const = default;
};

/**
 * Snake geometry of (mu, lambda), or nothing unless mu < lambda and both
 * mu/nu and lambda/nu are border strips.
 *
 * d is read off as a hook length in mu and checked against its dual reading
 * in lambda; a disagreement throws InternalError.
 */
std::optional<SnakeParameters> snake_parameters(const Partition& mu, const Partition& lambda);

/// Why chi(mu, lambda) is forced to be 1, or nothing for a snake pair.
std::optional<TrivialReason> trivial_reason(const Partition& mu, const Partition& lambda);

/// Human-readable form of trivial_reason naming the failing shape, e.g.
/// "mu/nu disconnected"; empty for a snake pair.
std::string describe_trivial(const Partition& mu, const Partition& lambda);

/// chi = (ell/d)^((-1)^r) for snake pairs, 1 otherwise.
ChiResult chi_closed(const Partition& mu, const Partition& lambda);

std::optional<PositiveRootDelta> single_root_delta(const Partition& mu, const Partition& lambda);

/// 1 / (mu_i - mu_j + j - i + 1) for lambda = mu + e_i - e_j.
FactoredRational single_root_chi(const Partition& mu, const PositiveRootDelta& delta);

/// Which column of lambda is split off at each Pieri step.
enum class ColumnChoice {
    first,  ///< the first column; the conjugate escape is always available
    last,   ///< the last column; falls back to the first on a Hom obstruction
};

struct RecursionOptions {
    ColumnChoice column = ColumnChoice::first;
    std::size_t max_depth = 4096;
};

/**
 * The Pieri recursion for chi between Weyl modules.
 *
 * Each step strips common border rows and columns, stops at a single
 * positive root, and otherwise splits off a column of lambda of length t
 * and solves
 *
 *     prod_j chi(mu, lambda^j) = prod_i chi(mu^i, lambda')
 *
 * for the lambda^j = lambda term, with lambda^j running over vertical-strip
 * additions of t boxes to lambda' and mu^i over vertical-strip removals of
 * t boxes from mu. When mu is one of the lambda^j the gluing is not
 * multiplicative and the pair is replaced by its conjugate
 * (conj lambda, conj mu), which cannot hit the same obstruction.
 *
 * Results are memoized on the stripped pair. The memo is guarded by a
 * shared mutex, so one engine may be used from several threads; results do
 * not depend on what was cached before.
 */
class RecursiveChiEngine {
public:
    explicit RecursiveChiEngine(RecursionOptions options = {}) : options_(options) {}

    RecursiveChiEngine(const RecursiveChiEngine&) = delete;
    RecursiveChiEngine& operator=(const RecursiveChiEngine&) = delete;

    /// Throws InternalError on a repeated conjugate escape or when the
    /// recursion exceeds max_depth.
    FactoredRational compute(const Partition& mu, const Partition& lambda) const;

    const RecursionOptions& options() const { return options_; }
    std::size_t memo_size() const;
    void clear_memo();

private:
    FactoredRational compute_at(const Partition& mu, const Partition& lambda, std::size_t depth,
                                bool after_swap) const;

    RecursionOptions options_;
    mutable std::shared_mutex memo_mutex_;
    mutable std::map<std::pair<Partition, Partition>, FactoredRational> memo_;
};

/// Process-wide engine with default options.
const RecursiveChiEngine& default_recursive_engine();

FactoredRational chi_recursive(const Partition& mu, const Partition& lambda);

/// Dispatch; `both` runs the two engines and throws EngineMismatch if they
/// differ, otherwise returns the closed result tagged `both`.
ChiResult chi(const Partition& mu, const Partition& lambda, ChiMethod method = ChiMethod::both);

}  // namespace weylchi
