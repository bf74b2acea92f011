#pragma once

#include <vector>

#include "weylchi/partition.hpp"

namespace weylchi {

/// The cells of outer minus inner, with inner contained in outer.
class SkewShape {
public:
    /// Throws std::invalid_argument unless inner is contained in outer.
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }

    int size() const { return degree(outer_) - degree(inner_); }
    bool empty() const { return size() == 0; }

    bool contains(const Cell& c) const { return outer_.contains(c) && !inner_.contains(c); }

    /// Row-major order (top row first, left to right).
    std::vector<Cell> cells() const;

    /// Number of rows holding at least one cell.
    int row_count() const;

    /// Edge-adjacency connectivity; the empty shape is not connected.
    bool is_connected() const;

    bool has_two_by_two() const;

    /// Connected and free of 2x2 squares (a ribbon). Empty shapes are not.
    bool is_border_strip() const { return is_connected() && !has_two_by_two(); }

    /// Rightmost cell of the top nonempty row. Throws std::invalid_argument
    /// on an empty shape; same for left_endpoint.
    Cell right_endpoint() const;

    /// Leftmost cell of the bottom nonempty row.
    Cell left_endpoint() const;

private:
    Partition outer_;
    Partition inner_;
};

/// Partitions nu inside mu with mu/nu a vertical strip of t cells (at most
/// one per row), lexicographically decreasing.
std::vector<Partition> vertical_strip_removals(const Partition& mu, int t);

/// Partitions containing base whose difference with base is a vertical
/// strip of t cells; new rows may be opened. Lexicographically decreasing.
std::vector<Partition> vertical_strip_additions(const Partition& base, int t);

}  // namespace weylchi
