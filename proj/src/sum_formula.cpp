#include "weylchi/sum_formula.hpp"

#include <set>
#include <stdexcept>

#include "weylchi/parallel.hpp"

namespace weylchi {

namespace {

std::map<Prime, Exponent> negated_exponents(const FactoredRational& value, std::optional<Prime> only)
{
    std::map<Prime, Exponent> b;
    for (const auto& [p, e] : value.factors())
        if (!only || *only == p)
            b.emplace(p, -e);
    return b;
}

void require_prime(Prime p)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::to_string(p) + " is not prime");
}

}  // namespace

Exponent b_coefficient(const Partition& lambda, const Partition& mu, Prime p, ChiMethod method)
{
    return -chi(mu, lambda, method).value.valuation(p);
}

SumFormulaTable sum_formula_table(const Partition& lambda, std::optional<Prime> prime_filter, ChiMethod method,
                                  unsigned jobs)
{
    if (prime_filter)
        require_prime(*prime_filter);
    const auto candidates = enumerate_partitions(degree(lambda));

    struct Slot {
        std::optional<SumFormulaRow> row;
    };
    auto slots = parallel_map(candidates.size(), jobs, [&](std::size_t k) {
        const Partition& mu = candidates[k];
        Slot slot;
        if (!dominates_strictly(mu, lambda))
            return slot;
        auto b = negated_exponents(chi(mu, lambda, method).value, prime_filter);
        if (!b.empty())
            slot.row = SumFormulaRow{mu, std::move(b)};
        return slot;
    });

    SumFormulaTable table{lambda, {}};
    for (auto& slot : slots)
        if (slot.row)
            table.rows.push_back(std::move(*slot.row));
    return table;
}

SumFormulaTable project(const SumFormulaTable& table, Prime p)
{
    require_prime(p);
    SumFormulaTable out{table.lambda, {}};
    for (const auto& row : table.rows) {
        if (auto it = row.b.find(p); it != row.b.end())
            out.rows.push_back({row.mu, {{p, it->second}}});
    }
    return out;
}

nlohmann::json to_json(const Partition& p)
{
    return nlohmann::json(std::vector<int>(p.parts().begin(), p.parts().end()));
}

nlohmann::json to_json(const FactoredRational& value)
{
    nlohmann::json factors = nlohmann::json::object();
    for (const auto& [p, e] : value.factors())
        factors[std::to_string(p)] = e;
    return {{"value", value.render()}, {"factors", factors}};
}

nlohmann::json to_json(const SumFormulaTable& table)
{
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        nlohmann::json b = nlohmann::json::object();
        for (const auto& [p, e] : row.b)
            b[std::to_string(p)] = e;
        rows.push_back({{"mu", to_json(row.mu)}, {"b", b}});
    }
    return {{"lambda", to_json(table.lambda)}, {"rows", rows}};
}

std::string render_text(const SumFormulaTable& table)
{
    std::string out = "lambda=" + to_string(table.lambda) + "\n";
    if (table.rows.empty())
        out += "no nonzero coefficients\n";
    for (const auto& row : table.rows) {
        out += "μ=" + to_string(row.mu) + "  b:";
        for (const auto& [p, e] : row.b)
            out += " " + std::to_string(p) + "^" + std::to_string(e);
        out += "\n";
    }
    return out;
}

HoweAuditReport howe_symmetry_audit(int max_degree, unsigned jobs)
{
    std::vector<std::pair<Partition, Partition>> pairs;
    for (int n = 0; n <= max_degree; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& lambda : all)
            for (const auto& mu : all)
                if (dominates_strictly(mu, lambda))
                    pairs.emplace_back(mu, lambda);
    }

    struct PairOutcome {
        std::size_t checked = 0;
        std::vector<HoweAuditFailure> failures;
    };
    auto outcomes = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
        const auto& [mu, lambda] = pairs[k];
        PairOutcome outcome;
        try {
            const int rows = static_cast<int>(std::max(mu.length(), lambda.length()));
            const int width = std::max(mu.first_row(), lambda.first_row());
            const Partition mu_c = complement(mu, rows, width);
            const Partition lambda_c = complement(lambda, rows, width);

            const FactoredRational direct = chi(mu, lambda).value;
            const FactoredRational conjugated = chi(conjugate(lambda), conjugate(mu)).value;
            const FactoredRational complemented = chi(mu_c, lambda_c).value;

            std::set<Prime> primes;
            for (const auto* v : {&direct, &conjugated, &complemented})
                for (Prime p : v->support())
                    primes.insert(p);
            for (Prime p : primes) {
                ++outcome.checked;
                const Exponent b = -direct.valuation(p);
                const Exponent b_conj = -conjugated.valuation(p);
                const Exponent b_comp = -complemented.valuation(p);
                if (b != b_conj || b != b_comp) {
                    outcome.failures.push_back({mu, lambda, p,
                                                "b=" + std::to_string(b) + " conjugate=" + std::to_string(b_conj)
                                                    + " complement=" + std::to_string(b_comp)});
                }
            }
        } catch (const std::exception& e) {
            outcome.failures.push_back({mu, lambda, 0, e.what()});
        }
        return outcome;
    });

    HoweAuditReport report;
    report.pairs_tested = pairs.size();
    for (auto& outcome : outcomes) {
        report.coefficients_checked += outcome.checked;
        for (auto& f : outcome.failures)
            report.failures.push_back(std::move(f));
    }
    return report;
}

}  // namespace weylchi
