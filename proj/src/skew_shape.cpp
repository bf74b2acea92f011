#include "weylchi/skew_shape.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace weylchi {

namespace {

void sort_decreasing(std::vector<Partition>& ps)
{
    std::sort(ps.begin(), ps.end(), [](const Partition& a, const Partition& b) { return b < a; });
}

}  // namespace

SkewShape::SkewShape(Partition outer, Partition inner) : outer_(std::move(outer)), inner_(std::move(inner))
{
    if (inner_.length() > outer_.length())
        throw std::invalid_argument("skew shape inner " + to_string(inner_) + " not inside " + to_string(outer_));
    for (std::size_t i = 1; i <= inner_.length(); ++i)
        if (inner_.row(i) > outer_.row(i))
            throw std::invalid_argument("skew shape inner " + to_string(inner_) + " not inside "
                                        + to_string(outer_));
}

std::vector<Cell> SkewShape::cells() const
{
    std::vector<Cell> out;
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j)
            out.push_back({static_cast<int>(i), j});
    return out;
}

int SkewShape::row_count() const
{
    int count = 0;
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        if (outer_.row(i) > inner_.row(i))
            ++count;
    return count;
}

bool SkewShape::is_connected() const
{
    const auto all = cells();
    if (all.empty())
        return false;

    std::set<Cell> seen{all.front()};
    std::vector<Cell> frontier{all.front()};
    while (!frontier.empty()) {
        Cell c = frontier.back();
        frontier.pop_back();
        for (Cell n : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                       Cell{c.row, c.col + 1}}) {
            if (contains(n) && seen.insert(n).second)
                frontier.push_back(n);
        }
    }
    return seen.size() == all.size();
}

bool SkewShape::has_two_by_two() const
{
    for (const Cell& c : cells()) {
        if (contains({c.row, c.col + 1}) && contains({c.row + 1, c.col}) && contains({c.row + 1, c.col + 1}))
            return true;
    }
    return false;
}

Cell SkewShape::right_endpoint() const
{
    for (std::size_t i = 1; i <= outer_.length(); ++i)
        if (outer_.row(i) > inner_.row(i))
            return {static_cast<int>(i), outer_.row(i)};
    throw std::invalid_argument("right endpoint of an empty skew shape");
}

Cell SkewShape::left_endpoint() const
{
    for (std::size_t i = outer_.length(); i >= 1; --i)
        if (outer_.row(i) > inner_.row(i))
            return {static_cast<int>(i), inner_.row(i) + 1};
    throw std::invalid_argument("left endpoint of an empty skew shape");
}

std::vector<Partition> vertical_strip_removals(const Partition& mu, int t)
{
    std::vector<Partition> out;
    if (t < 0 || t > degree(mu))
        return out;

    // Decide rows bottom-up; row i may lose a box when the row below it, as
    // already decided, stays no longer than the shortened row.
    const std::size_t rows = mu.length();
    std::vector<int> shape(mu.parts().begin(), mu.parts().end());
    std::function<void(std::size_t, int)> choose = [&](std::size_t i, int remaining) {
        if (remaining > static_cast<int>(i))
            return;
        if (i == 0) {
            if (remaining == 0)
                out.emplace_back(shape);
            return;
        }
        const int below = (i < rows) ? shape[i] : 0;
        choose(i - 1, remaining);
        if (remaining > 0 && shape[i - 1] - 1 >= below) {
            --shape[i - 1];
            choose(i - 1, remaining - 1);
            ++shape[i - 1];
        }
    };
    choose(rows, t);
    sort_decreasing(out);
    return out;
}

std::vector<Partition> vertical_strip_additions(const Partition& base, int t)
{
    std::vector<Partition> out;
    if (t < 0)
        return out;

    // Decide rows top-down; row i may gain a box when it stays no longer
    // than the already decided row above it.
    const std::size_t rows = base.length() + static_cast<std::size_t>(t);
    std::vector<int> shape(rows, 0);
    for (std::size_t i = 1; i <= base.length(); ++i)
        shape[i - 1] = base.row(i);
    std::function<void(std::size_t, int)> choose = [&](std::size_t i, int remaining) {
        if (remaining == 0) {
            out.emplace_back(shape);
            return;
        }
        if (i > rows)
            return;
        const int above = (i == 1) ? shape[0] + 1 : shape[i - 2];
        if (shape[i - 1] + 1 <= above) {
            ++shape[i - 1];
            choose(i + 1, remaining - 1);
            --shape[i - 1];
        }
        // A row left at zero cannot be followed by a nonzero row.
        if (shape[i - 1] > 0)
            choose(i + 1, remaining);
    };
    choose(1, t);
    sort_decreasing(out);
    return out;
}

}  // namespace weylchi
