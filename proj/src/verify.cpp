#include "weylchi/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "weylchi/chi.hpp"
#include "weylchi/nine_table.hpp"
#include "weylchi/parallel.hpp"
#include "weylchi/skew_shape.hpp"
#include "weylchi/sum_formula.hpp"

namespace weylchi {

namespace {

using PairList = std::vector<std::pair<Partition, Partition>>;
using Failures = std::vector<VerificationFailure>;
using PairCheck = std::function<std::string(const Partition&, const Partition&)>;

PairList equal_degree_pairs(int max_degree, int min_degree = 0)
{
    PairList out;
    for (int n = min_degree; n <= max_degree; ++n) {
        const auto all = enumerate_partitions(n);
        for (const auto& mu : all)
            for (const auto& lambda : all)
                out.emplace_back(mu, lambda);
    }
    return out;
}

PairList filtered(PairList pairs, const std::function<bool(const Partition&, const Partition&)>& keep)
{
    PairList out;
    for (auto& [mu, lambda] : pairs)
        if (keep(mu, lambda))
            out.emplace_back(std::move(mu), std::move(lambda));
    return out;
}

std::string expect_equal(const char* what, const FactoredRational& got, const FactoredRational& want)
{
    if (got == want)
        return {};
    return std::string(what) + ": got " + got.render() + ", expected " + want.render();
}

/// Runs `check` over every pair; an empty string means the pair passed.
VerificationReport sweep(const std::string& name, const PairList& pairs, unsigned jobs, const PairCheck& check)
{
    auto outcomes = parallel_map(pairs.size(), jobs, [&](std::size_t k) {
        const auto& [mu, lambda] = pairs[k];
        Failures failures;
        std::string detail;
        try {
            detail = check(mu, lambda);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!detail.empty())
            failures.push_back({mu, lambda, std::move(detail)});
        return failures;
    });

    VerificationReport report;
    report.check_name = name;
    report.pairs_tested = pairs.size();
    for (auto& f : outcomes)
        for (auto& failure : f)
            report.failures.push_back(std::move(failure));
    return report;
}

Partition hook_partition(int arm, int leg)
{
    std::vector<int> parts{arm};
    parts.insert(parts.end(), static_cast<std::size_t>(leg), 1);
    return Partition(std::move(parts));
}

VerificationReport check_equivalence(const VerifyOptions& o)
{
    return sweep("equivalence", equal_degree_pairs(o.max_degree), o.jobs, [](const Partition& mu, const Partition& lambda) {
        return expect_equal("closed vs recursive", chi_closed(mu, lambda).value, chi_recursive(mu, lambda));
    });
}

VerificationReport check_conjugate(const VerifyOptions& o)
{
    return sweep("conjugate", equal_degree_pairs(o.max_degree), o.jobs, [](const Partition& mu, const Partition& lambda) {
        return expect_equal("chi(conj lambda, conj mu)", chi(conjugate(lambda), conjugate(mu)).value,
                            chi(mu, lambda).value);
    });
}

VerificationReport check_complement(const VerifyOptions& o)
{
    return sweep("complement", equal_degree_pairs(o.max_degree, 1), o.jobs, [](const Partition& mu, const Partition& lambda) {
        const int rows = static_cast<int>(std::max(mu.length(), lambda.length()));
        const int width = std::max(mu.first_row(), lambda.first_row());
        return expect_equal("chi(mu^c, lambda^c)",
                            chi(complement(mu, rows, width), complement(lambda, rows, width)).value,
                            chi(mu, lambda).value);
    });
}

VerificationReport check_gl2(const VerifyOptions& o)
{
    PairList pairs;
    for (int a = 1; a < o.max_degree; ++a)
        for (int b = 1; b <= a && a + b <= o.max_degree; ++b)
            pairs.emplace_back(Partition{a, b}, Partition{a + b});
    return sweep("gl2", pairs, o.jobs, [](const Partition& mu, const Partition& lambda) {
        const int a = mu.row(1);
        const int b = mu.row(2);
        (void)lambda;
        return expect_equal("b/(a+1)", chi(mu, lambda).value,
                            FactoredRational::from_ratio(static_cast<std::uint64_t>(b),
                                                         static_cast<std::uint64_t>(a + 1)));
    });
}

VerificationReport check_hooks(const VerifyOptions& o)
{
    PairList pairs;
    for (int a = 1; a < o.max_degree; ++a)
        for (int b = 1; a + b <= o.max_degree; ++b)
            for (int s = 1; s <= b; ++s)
                pairs.emplace_back(hook_partition(a, b), hook_partition(a + s, b - s));
    return sweep("hooks", pairs, o.jobs, [](const Partition& mu, const Partition& lambda) {
        const int a = mu.row(1);
        const int b = static_cast<int>(mu.length()) - 1;
        const int s = lambda.row(1) - a;
        const FactoredRational base = FactoredRational::from_ratio(static_cast<std::uint64_t>(a + b),
                                                                   static_cast<std::uint64_t>(s));
        return expect_equal("((a+b)/s)^((-1)^s)", chi(mu, lambda).value, pow_sign(base, s % 2 == 0 ? 1 : -1));
    });
}

VerificationReport check_single_root(const VerifyOptions& o)
{
    PairList pairs;
    for (int n = 1; n <= o.max_degree; ++n) {
        for (const auto& mu : enumerate_partitions(n)) {
            const int rows = static_cast<int>(mu.length());
            for (int i = 1; i <= rows; ++i) {
                for (int j = i + 1; j <= rows; ++j) {
                    std::vector<int> parts(mu.parts().begin(), mu.parts().end());
                    ++parts[static_cast<std::size_t>(i - 1)];
                    --parts[static_cast<std::size_t>(j - 1)];
                    if (std::is_sorted(parts.begin(), parts.end(), std::greater<>{}))
                        pairs.emplace_back(mu, Partition(std::move(parts)));
                }
            }
        }
    }
    return sweep("single-root", pairs, o.jobs, [](const Partition& mu, const Partition& lambda) {
        const auto delta = single_root_delta(mu, lambda);
        if (!delta)
            return std::string("pair is not a single positive root apart");
        const int pairing = mu.row(static_cast<std::size_t>(delta->i)) - mu.row(static_cast<std::size_t>(delta->j))
                            + delta->j - delta->i;
        const FactoredRational value = chi(mu, lambda).value;
        auto detail = expect_equal("1/(<mu+rho, alpha> + 1)", value,
                                   FactoredRational::from_ratio(1, static_cast<std::uint64_t>(pairing + 1)));
        if (!detail.empty())
            return detail;

        const auto [mu_s, lambda_s] = strip_common_border(mu, lambda);
        const auto stripped_delta = single_root_delta(mu_s, lambda_s);
        if (!stripped_delta || stripped_delta->i != 1 || stripped_delta->j != static_cast<int>(mu_s.length()))
            return "stripped pair " + to_string(mu_s) + " / " + to_string(lambda_s)
                   + " is not e_1 - e_last apart";
        return expect_equal("1/hook(stripped mu, (1,1))", value,
                            FactoredRational::from_ratio(1, static_cast<std::uint64_t>(hook_length(mu_s, {1, 1}))));
    });
}

VerificationReport check_triviality(const VerifyOptions& o)
{
    PairList pairs = equal_degree_pairs(o.max_degree);
    const int unequal_max = std::min(o.max_degree, o.unequal_degree_cap);
    for (int m = 0; m <= unequal_max; ++m)
        for (int n = 0; n <= unequal_max; ++n)
            if (m != n)
                for (const auto& mu : enumerate_partitions(m))
                    for (const auto& lambda : enumerate_partitions(n))
                        pairs.emplace_back(mu, lambda);
    VerificationReport report = sweep("triviality", pairs, o.jobs, [](const Partition& mu, const Partition& lambda) {
        const FactoredRational forward = chi(mu, lambda).value;
        const FactoredRational backward = chi(lambda, mu).value;
        if (!dominates_strictly(mu, lambda) && !forward.is_unit())
            return "chi = " + forward.render() + " on a pair with mu not below lambda";
        if (!forward.is_unit() && !backward.is_unit())
            return "both chi(mu,lambda) = " + forward.render() + " and chi(lambda,mu) = " + backward.render()
                   + " are nontrivial";
        return std::string{};
    });

    // A Weyl pair with chi(M,N) chi(N,M) != 1, unlike pairs with a torsion member.
    const Partition column{1, 1};
    const Partition row{2};
    const FactoredRational product = chi(column, row).value * chi(row, column).value;
    ++report.pairs_tested;
    if (product != FactoredRational::from_ratio(1, 2))
        report.failures.push_back({column, row, "chi product " + product.render() + ", expected 1/2"});
    return report;
}

VerificationReport check_stripping(const VerifyOptions& o)
{
    return sweep("stripping", filtered(equal_degree_pairs(o.max_degree), dominates_strictly), o.jobs,
                 [](const Partition& mu, const Partition& lambda) {
                     const auto [mu_s, lambda_s] = strip_common_border(mu, lambda);
                     if (mu_s.first_row() == lambda_s.first_row() || mu_s.length() == lambda_s.length())
                         return "stripped pair " + to_string(mu_s) + " / " + to_string(lambda_s)
                                + " still shares a first row or column length";
                     if (!dominates_strictly(mu_s, lambda_s))
                         return std::string("stripping broke strict dominance");
                     return expect_equal("chi(stripped pair)", chi(mu_s, lambda_s).value, chi(mu, lambda).value);
                 });
}

VerificationReport check_manhattan(const VerifyOptions& o)
{
    auto has_snake = [](const Partition& mu, const Partition& lambda) {
        return snake_parameters(mu, lambda).has_value();
    };
    return sweep("manhattan", filtered(equal_degree_pairs(o.max_degree), has_snake), o.jobs,
                 [](const Partition& mu, const Partition& lambda) {
                     const auto s = *snake_parameters(mu, lambda);
                     const SkewShape mu_skew(mu, s.nu);
                     const SkewShape lambda_skew(lambda, s.nu);
                     auto displacement = [](Cell from, Cell to) { return (to.col - from.col) + (from.row - to.row); };
                     const int right = displacement(mu_skew.right_endpoint(), lambda_skew.right_endpoint());
                     const int left = displacement(mu_skew.left_endpoint(), lambda_skew.left_endpoint());
                     if (right != s.d || left != s.d)
                         return "d=" + std::to_string(s.d) + " but endpoint displacements are "
                                + std::to_string(right) + " (right) and " + std::to_string(left) + " (left)";
                     for (const auto* shape : {&lambda_skew, &mu_skew}) {
                         const Cell corner{shape->right_endpoint().row, shape->left_endpoint().col};
                         if (!shape->outer().contains(corner) || hook_length(shape->outer(), corner) != s.ell)
                             return "ell=" + std::to_string(s.ell) + " is not the corner hook length of "
                                    + to_string(shape->outer());
                     }
                     return std::string{};
                 });
}

VerificationReport check_nine_table(const VerifyOptions& o)
{
    VerificationReport report = sweep("nine-table", equal_degree_pairs(o.max_degree), o.jobs,
                                      [](const Partition& mu, const Partition& lambda) {
                                          return nine_table_inconsistency(mu, lambda);
                                      });

    // Ext^1(V(1,1), V(2)) = Z/2 is the only nonzero Ext group of the pair.
    const Partition mu{1, 1};
    const Partition lambda{2};
    const NineTable t = chi_nine_table(mu, lambda);
    const FactoredRational half = FactoredRational::from_ratio(1, 2);
    ++report.pairs_tested;
    for (auto detail : {expect_equal("V,V", t.at("V,V"), half), expect_equal("V,Q", t.at("V,Q"), inv(half)),
                        expect_equal("H,V", t.at("H,V"), half)}) {
        if (!detail.empty())
            report.failures.push_back({mu, lambda, detail});
    }
    return report;
}

VerificationReport check_howe(const VerifyOptions& o)
{
    const HoweAuditReport audit = howe_symmetry_audit(o.max_degree, o.jobs);
    VerificationReport report;
    report.check_name = "howe";
    report.pairs_tested = audit.pairs_tested;
    for (const auto& f : audit.failures) {
        std::string detail = f.p == 0 ? f.detail : "p=" + std::to_string(f.p) + ": " + f.detail;
        report.failures.push_back({f.mu, f.lambda, std::move(detail)});
    }
    return report;
}

using CheckFn = VerificationReport (*)(const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry()
{
    static const std::vector<std::pair<std::string, CheckFn>> checks{
        {"equivalence", check_equivalence}, {"conjugate", check_conjugate},     {"complement", check_complement},
        {"gl2", check_gl2},                 {"hooks", check_hooks},             {"single-root", check_single_root},
        {"triviality", check_triviality},   {"stripping", check_stripping},     {"manhattan", check_manhattan},
        {"nine-table", check_nine_table},   {"howe", check_howe},
    };
    return checks;
}

}  // namespace

const std::vector<std::string>& verification_check_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

VerificationReport run_check(const std::string& name, const VerifyOptions& options)
{
    for (const auto& [candidate, fn] : registry()) {
        if (candidate == name) {
            const auto start = std::chrono::steady_clock::now();
            VerificationReport report = fn(options);
            report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
            return report;
        }
    }
    throw std::invalid_argument("unknown check \"" + name + "\"");
}

std::vector<VerificationReport> run_verification(const VerifyOptions& options)
{
    const auto& names = options.checks.empty() ? verification_check_names() : options.checks;
    for (const auto& name : names)
        if (std::find(verification_check_names().begin(), verification_check_names().end(), name)
            == verification_check_names().end())
            throw std::invalid_argument("unknown check \"" + name + "\"");

    std::vector<VerificationReport> reports;
    for (const auto& name : names)
        reports.push_back(run_check(name, options));
    return reports;
}

std::string render_text(const std::vector<VerificationReport>& reports, bool with_timing)
{
    std::string out;
    std::size_t failed = 0;
    for (const auto& r : reports) {
        out += (r.passed() ? "PASS " : "FAIL ") + r.check_name + ": " + std::to_string(r.pairs_tested) + " pairs, "
               + std::to_string(r.failures.size()) + " failures";
        if (with_timing)
            out += " (" + std::to_string(r.elapsed.count()) + " ms)";
        out += "\n";
        for (const auto& f : r.failures)
            out += "  mu=" + to_string(f.mu) + " lambda=" + to_string(f.lambda) + ": " + f.detail + "\n";
        if (!r.passed())
            ++failed;
    }
    out += failed == 0 ? "all " + std::to_string(reports.size()) + " checks passed\n"
                       : std::to_string(failed) + " of " + std::to_string(reports.size()) + " checks failed\n";
    return out;
}

nlohmann::json to_json(const std::vector<VerificationReport>& reports, bool with_timing)
{
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& f : r.failures)
            failures.push_back({{"mu", to_json(f.mu)}, {"lambda", to_json(f.lambda)}, {"detail", f.detail}});
        nlohmann::json entry{{"check", r.check_name},
                             {"pairs_tested", r.pairs_tested},
                             {"passed", r.passed()},
                             {"failures", failures}};
        if (with_timing)
            entry["elapsed_ms"] = r.elapsed.count();
        out.push_back(entry);
    }
    return out;
}

}  // namespace weylchi
