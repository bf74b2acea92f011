#include "weylchi/partition.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace weylchi {

namespace {

std::vector<int> canonical(std::vector<int> parts)
{
    while (!parts.empty() && parts.back() == 0)
        parts.pop_back();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] <= 0)
            throw std::invalid_argument("partition parts must be positive (zeros allowed only at the end)");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    return parts;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view s, std::string_view whole)
{
    s = trim(s);
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || value < 0)
        throw std::invalid_argument("malformed partition \"" + std::string(whole) + "\"");
    return value;
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Cell& c)
{
    return os << '(' << c.row << ',' << c.col << ')';
}

Partition::Partition(std::vector<int> parts) : parts_(canonical(std::move(parts))) {}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << to_string(p);
}

std::string to_string(const Partition& p)
{
    if (p.empty())
        return "0";
    std::string out;
    for (int part : p.parts()) {
        if (!out.empty())
            out += ',';
        out += std::to_string(part);
    }
    return out;
}

Partition parse_partition(std::string_view text)
{
    std::string_view rest = trim(text);
    if (rest.empty() || rest == "0")
        return {};

    constexpr int kMaxRepeat = 100000;
    std::vector<int> parts;
    while (true) {
        auto comma = rest.find(',');
        std::string_view item = rest.substr(0, comma);
        auto caret = item.find('^');
        int part = parse_int(item.substr(0, caret), text);
        int repeat = 1;
        if (caret != std::string_view::npos)
            repeat = parse_int(item.substr(caret + 1), text);
        if (repeat > kMaxRepeat)
            throw std::invalid_argument("exponent too large in \"" + std::string(text) + "\"");
        parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
        if (comma == std::string_view::npos)
            break;
        rest.remove_prefix(comma + 1);
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("malformed partition \"" + std::string(text) + "\": " + e.what());
    }
}

int degree(const Partition& p)
{
    return std::accumulate(p.parts().begin(), p.parts().end(), 0);
}

Partition conjugate(const Partition& p)
{
    std::vector<int> out(static_cast<std::size_t>(p.first_row()), 0);
    for (int part : p.parts())
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool dominates_strictly(const Partition& mu, const Partition& lambda)
{
    if (mu == lambda || degree(mu) != degree(lambda))
        return false;
    const std::size_t rows = std::max(mu.length(), lambda.length());
    int mu_sum = 0;
    int lambda_sum = 0;
    for (std::size_t k = 1; k <= rows; ++k) {
        mu_sum += mu.row(k);
        lambda_sum += lambda.row(k);
        if (mu_sum > lambda_sum)
            return false;
    }
    return true;
}

Partition intersect(const Partition& mu, const Partition& lambda)
{
    const std::size_t rows = std::min(mu.length(), lambda.length());
    std::vector<int> out(rows);
    for (std::size_t i = 1; i <= rows; ++i)
        out[i - 1] = std::min(mu.row(i), lambda.row(i));
    return Partition(std::move(out));
}

Partition complement(const Partition& p, int rows, int width)
{
    if (rows < 1 || width < 0)
        throw std::invalid_argument("complement rectangle must have rows >= 1 and width >= 0");
    if (p.length() > static_cast<std::size_t>(rows) || p.first_row() > width)
        throw std::invalid_argument("partition " + to_string(p) + " does not fit in a "
                                    + std::to_string(rows) + "x" + std::to_string(width) + " rectangle");
    std::vector<int> out(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i)
        out[static_cast<std::size_t>(i - 1)] = width - p.row(static_cast<std::size_t>(rows + 1 - i));
    return Partition(std::move(out));
}

int hook_length(const Partition& p, const Cell& c)
{
    if (!p.contains(c))
        throw std::invalid_argument("cell outside diagram of " + to_string(p));
    int leg = 0;
    for (std::size_t i = static_cast<std::size_t>(c.row) + 1; p.row(i) >= c.col; ++i)
        ++leg;
    const int arm = p.row(static_cast<std::size_t>(c.row)) - c.col;
    return arm + leg + 1;
}

std::pair<Partition, Partition> strip_common_border(Partition mu, Partition lambda)
{
    auto drop_first_row = [](const Partition& p) {
        return Partition(std::vector<int>(p.parts().begin() + 1, p.parts().end()));
    };
    auto drop_first_column = [](const Partition& p) {
        std::vector<int> out(p.parts().begin(), p.parts().end());
        for (int& part : out)
            --part;
        return Partition(std::move(out));
    };

    while (true) {
        if (!mu.empty() && !lambda.empty() && mu.first_row() == lambda.first_row()) {
            mu = drop_first_row(mu);
            lambda = drop_first_row(lambda);
        } else if (!mu.empty() && mu.length() == lambda.length()) {
            mu = drop_first_column(mu);
            lambda = drop_first_column(lambda);
        } else {
            break;
        }
    }
    return {std::move(mu), std::move(lambda)};
}

int enumeration_bound()
{
    int bound = kDefaultEnumerationBound;
    if (const char* env = std::getenv("WEYLCHI_MAX_DEGREE")) {
        std::string_view s(env);
        int value = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
        if (ec == std::errc{} && ptr == s.data() + s.size() && value > bound)
            bound = std::min(value, kEnumerationCeiling);
    }
    return bound;
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::out_of_range("cannot enumerate partitions of a negative number");
    if (n > enumeration_bound())
        throw std::out_of_range("degree " + std::to_string(n) + " exceeds the enumeration bound "
                                + std::to_string(enumeration_bound()));

    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> extend = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            current.push_back(part);
            extend(remaining - part, part);
            current.pop_back();
        }
    };
    extend(n, n);
    return out;
}

}  // namespace weylchi
