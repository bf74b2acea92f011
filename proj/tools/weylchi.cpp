// weylchi: torsion Euler characteristics between integral Weyl modules of GL_n
// and the Jantzen sum-formula coefficients derived from them.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input,
// 3 internal engine mismatch.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylchi/chi.hpp"
#include "weylchi/skew_shape.hpp"
#include "weylchi/sum_formula.hpp"
#include "weylchi/verify.hpp"

using namespace weylchi;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitMismatch = 3;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Partition parse_arg(const std::string& flag, const std::string& text)
{
    try {
        return parse_partition(text);
    } catch (const std::invalid_argument& e) {
        throw BadInput(flag + ": " + e.what());
    }
}

json snake_json(const std::optional<SnakeParameters>& s)
{
    if (!s)
        return nullptr;
    return {{"nu", to_json(s->nu)}, {"ell", s->ell}, {"d", s->d}, {"r", s->r}};
}

std::string snake_text(const SnakeParameters& s)
{
    return "ell=" + std::to_string(s.ell) + " d=" + std::to_string(s.d) + " r=" + std::to_string(s.r);
}

/// Rows of '.' (cells of nu) and '#' (cells of outer/nu).
std::string diagram(const SkewShape& shape)
{
    if (shape.outer().empty())
        return "(empty)\n";
    std::string out;
    for (std::size_t i = 1; i <= shape.outer().length(); ++i) {
        out += std::string(static_cast<std::size_t>(shape.inner().row(i)), '.');
        out += std::string(static_cast<std::size_t>(shape.outer().row(i) - shape.inner().row(i)), '#');
        out += '\n';
    }
    return out;
}

struct ChiArgs {
    std::string mu;
    std::string lambda;
    std::string method = "both";
    bool json = false;
};

int cmd_chi(const ChiArgs& args)
{
    const Partition mu = parse_arg("--mu", args.mu);
    const Partition lambda = parse_arg("--lambda", args.lambda);
    ChiMethod method;
    try {
        method = parse_chi_method(args.method);
    } catch (const std::invalid_argument& e) {
        throw BadInput(std::string("--method: ") + e.what());
    }

    const ChiResult result = chi(mu, lambda, method);
    const std::string why = result.value.is_unit() ? describe_trivial(mu, lambda) : std::string{};
    if (args.json) {
        json out = to_json(result.value);
        out["mu"] = to_json(mu);
        out["lambda"] = to_json(lambda);
        out["method"] = to_string(result.method);
        out["snake"] = snake_json(result.snake);
        out["trivial_reason"] = result.trivial_reason ? json(to_string(*result.trivial_reason)) : json(nullptr);
        out["trivial_detail"] = why.empty() ? json(nullptr) : json(why);
        std::cout << out.dump() << '\n';
        return kExitOk;
    }

    std::cout << "chi = " << result.value.render();
    if (result.value.is_unit()) {
        if (!why.empty())
            std::cout << " (" << why << ")";
    } else {
        std::cout << " = " << result.value.render_factored();
        if (result.snake)
            std::cout << "; " << snake_text(*result.snake);
    }
    std::cout << '\n';
    return kExitOk;
}

struct SumFormulaArgs {
    std::string lambda;
    std::optional<std::uint64_t> prime;
    std::string method = "closed";
    unsigned jobs = 1;
    bool json = false;
};

int cmd_sum_formula(const SumFormulaArgs& args)
{
    const Partition lambda = parse_arg("--lambda", args.lambda);
    SumFormulaTable table;
    try {
        table = sum_formula_table(lambda, args.prime, parse_chi_method(args.method), args.jobs);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    } catch (const std::out_of_range& e) {
        throw BadInput(e.what());
    }
    if (args.json)
        std::cout << to_json(table).dump() << '\n';
    else
        std::cout << render_text(table);
    return kExitOk;
}

struct VerifyArgs {
    int max_degree = 10;
    std::string checks;
    unsigned jobs = 1;
    bool json = false;
    bool timing = false;
};

int cmd_verify(const VerifyArgs& args)
{
    VerifyOptions options;
    options.max_degree = args.max_degree;
    options.jobs = args.jobs;
    std::stringstream list(args.checks);
    for (std::string name; std::getline(list, name, ',');)
        if (!name.empty())
            options.checks.push_back(name);

    std::vector<VerificationReport> reports;
    try {
        reports = run_verification(options);
    } catch (const std::invalid_argument& e) {
        throw BadInput(e.what());
    } catch (const std::out_of_range& e) {
        throw BadInput(e.what());
    }
    if (args.json)
        std::cout << to_json(reports, args.timing).dump(2) << '\n';
    else
        std::cout << render_text(reports, args.timing);

    for (const auto& r : reports)
        if (!r.passed())
            return kExitVerifyFailed;
    return kExitOk;
}

struct SnakeArgs {
    std::string mu;
    std::string lambda;
    bool json = false;
};

int cmd_snake(const SnakeArgs& args)
{
    const Partition mu = parse_arg("--mu", args.mu);
    const Partition lambda = parse_arg("--lambda", args.lambda);
    const Partition nu = intersect(mu, lambda);
    const SkewShape mu_skew(mu, nu);
    const SkewShape lambda_skew(lambda, nu);
    const auto snake = snake_parameters(mu, lambda);
    const std::string why = snake ? std::string{} : describe_trivial(mu, lambda);

    if (args.json) {
        auto rows = [](const SkewShape& s) {
            json out = json::array();
            std::istringstream lines(diagram(s));
            for (std::string line; std::getline(lines, line);)
                out.push_back(line);
            return out;
        };
        json out{{"mu", to_json(mu)},
                 {"lambda", to_json(lambda)},
                 {"nu", to_json(nu)},
                 {"mu_over_nu", rows(mu_skew)},
                 {"lambda_over_nu", rows(lambda_skew)},
                 {"snake", snake_json(snake)},
                 {"trivial", why.empty() ? json(nullptr) : json(why)}};
        std::cout << out.dump() << '\n';
        return kExitOk;
    }

    std::cout << "mu/nu (mu=" << mu << ", nu=" << nu << "):\n" << diagram(mu_skew);
    std::cout << "lambda/nu (lambda=" << lambda << "):\n" << diagram(lambda_skew);
    if (snake)
        std::cout << snake_text(*snake) << '\n';
    else
        std::cout << "trivial: " << why << '\n';
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Torsion Euler characteristics between integral Weyl modules of GL_n"};
    app.require_subcommand(1);

    ChiArgs chi_args;
    auto* chi_cmd = app.add_subcommand("chi", "chi(V(mu), V(lambda)) with its snake geometry");
    chi_cmd->add_option("--mu", chi_args.mu, "partition, e.g. 2,1,1 or 3,1^2")->required();
    chi_cmd->add_option("--lambda", chi_args.lambda, "partition")->required();
    chi_cmd->add_option("--method", chi_args.method, "closed|recursive|both")->capture_default_str();
    chi_cmd->add_flag("--json", chi_args.json, "emit JSON");

    SumFormulaArgs sum_args;
    auto* sum_cmd = app.add_subcommand("sum-formula", "Jantzen sum-formula coefficients b_{p,lambda mu}");
    sum_cmd->add_option("--lambda", sum_args.lambda, "partition")->required();
    sum_cmd->add_option("--prime", sum_args.prime, "keep only this prime");
    sum_cmd->add_option("--method", sum_args.method, "closed|recursive|both")->capture_default_str();
    sum_cmd->add_option("--jobs", sum_args.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    sum_cmd->add_flag("--json", sum_args.json, "emit JSON");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "exhaustive identity sweeps");
    verify_cmd->add_option("--max-degree", verify_args.max_degree, "largest degree swept")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    std::string check_help = "comma list of checks (default all):";
    for (const auto& name : verification_check_names())
        check_help += " " + name;
    verify_cmd->add_option("--checks", verify_args.checks, check_help);
    verify_cmd->add_option("--jobs", verify_args.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
    verify_cmd->add_flag("--json", verify_args.json, "emit JSON");
    verify_cmd->add_flag("--timing", verify_args.timing, "include elapsed times");

    SnakeArgs snake_args;
    auto* snake_cmd = app.add_subcommand("snake", "draw mu/nu and lambda/nu");
    snake_cmd->add_option("--mu", snake_args.mu, "partition")->required();
    snake_cmd->add_option("--lambda", snake_args.lambda, "partition")->required();
    snake_cmd->add_flag("--json", snake_args.json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*chi_cmd)
            return cmd_chi(chi_args);
        if (*sum_cmd)
            return cmd_sum_formula(sum_args);
        if (*verify_cmd)
            return cmd_verify(verify_args);
        return cmd_snake(snake_args);
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadInput;
    } catch (const EngineMismatch& e) {
        std::cerr << "engine mismatch: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitMismatch;
    }
}
