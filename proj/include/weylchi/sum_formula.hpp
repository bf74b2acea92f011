#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylchi/chi.hpp"
#include "weylchi/factored_rational.hpp"
#include "weylchi/partition.hpp"

namespace weylchi {

/// One Weyl character ch V(mu) in the Jantzen sum formula for V(lambda),
/// with its coefficient b_p for each prime p where it is nonzero.
struct SumFormulaRow {
    Partition mu;
    std::map<Prime, Exponent> b;

    bool operator==(const SumFormulaRow&) const = default;
};

struct SumFormulaTable {
    Partition lambda;
    std::vector<SumFormulaRow> rows;

    bool operator==(const SumFormulaTable&) const = default;
};

/// b_{p, lambda mu} = -v_p(chi(V(mu), V(lambda))). Can be negative.
Exponent b_coefficient(const Partition& lambda, const Partition& mu, Prime p,
                       ChiMethod method = ChiMethod::closed);

/// Rows for every mu < lambda with chi != 1, in enumeration order. With a
/// prime filter only that prime is kept and rows left empty are dropped.
/// Throws std::out_of_range when the degree exceeds the enumeration bound
/// and std::invalid_argument for a non-prime filter.
SumFormulaTable sum_formula_table(const Partition& lambda, std::optional<Prime> prime_filter = std::nullopt,
                                  ChiMethod method = ChiMethod::closed, unsigned jobs = 1);

/// Keeps only prime p of an existing table.
SumFormulaTable project(const SumFormulaTable& table, Prime p);

/// {"lambda":[3],"rows":[{"b":{"3":1},"mu":[2,1]}, ...]}
nlohmann::json to_json(const SumFormulaTable& table);

/// Header line "lambda=3" followed by one "μ=2,1  b: 3^1" line per row.
std::string render_text(const SumFormulaTable& table);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(const FactoredRational& value);

struct HoweAuditFailure {
    Partition mu;
    Partition lambda;
    Prime p = 0;
    std::string detail;
};

struct HoweAuditReport {
    std::size_t pairs_tested = 0;
    std::size_t coefficients_checked = 0;
    std::vector<HoweAuditFailure> failures;

    bool passed() const { return failures.empty(); }
};

/// For every mu < lambda of degree <= max_degree and every prime in the
/// support of the values involved, checks
///     b_{p, lambda mu} = b_{p, conj(mu) conj(lambda)} = b_{p, lambda^c mu^c}
/// with complements taken in the smallest rectangle holding both diagrams.
HoweAuditReport howe_symmetry_audit(int max_degree, unsigned jobs = 1);

}  // namespace weylchi
