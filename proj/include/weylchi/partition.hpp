#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace weylchi {

/// Box of a Young diagram, 1-based (top row = 1, leftmost column = 1).
struct Cell {
    int row = 1;
    int col = 1;

    auto operator<=>(const Cell&) const = default;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

/**
 * A partition labelling a polynomial dominant weight of GL_n.
 *
 * Stored canonically: weakly decreasing positive parts, no trailing zeros.
 * The rank n is never stored; the Ext groups between Weyl modules do not
 * depend on it once n is at least the number of rows involved.
 */
class Partition {
public:
    Partition() = default;

    /// Trailing zeros are dropped; throws std::invalid_argument if the
    /// sequence is increasing somewhere or has a negative entry.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    std::span<const int> parts() const { return parts_; }

    /// Number of nonzero parts (length of the first column).
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// 1-based part; zero for rows past the end.
    int row(std::size_t i) const
    {
        return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
    }

    /// Length of the first row, 0 for the empty partition.
    int first_row() const { return parts_.empty() ? 0 : parts_.front(); }

    bool contains(const Cell& c) const
    {
        return c.row >= 1 && c.col >= 1 && c.col <= row(static_cast<std::size_t>(c.row));
    }

    auto operator<=>(const Partition&) const = default;
    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Comma-separated text form; the empty partition renders as "0".
std::string to_string(const Partition& p);

/**
 * Parses "2,1,1", "a,1^b" style exponent shorthand (any part may carry
 * "^k"), and "" or "0" for the empty partition. Whitespace around items is
 * ignored. Throws std::invalid_argument on malformed text.
 */
Partition parse_partition(std::string_view text);

int degree(const Partition& p);

Partition conjugate(const Partition& p);

/// mu < lambda in dominance order: equal degree, mu != lambda and each
/// prefix sum of mu bounded by that of lambda. Unequal degrees are
/// incomparable.
bool dominates_strictly(const Partition& mu, const Partition& lambda);

/// Componentwise minimum (the diagram intersection).
Partition intersect(const Partition& mu, const Partition& lambda);

/// Complement of p inside the rows x width rectangle, rotated by 180 degrees
/// so it is again a partition. Throws std::invalid_argument if p does not
/// fit.
Partition complement(const Partition& p, int rows, int width);

/// Arm + leg + 1. Throws std::invalid_argument for a cell outside p.
int hook_length(const Partition& p, const Cell& c);

/// Removes shared first rows and shared first columns until the pair
/// differs in both first-row length and number of parts.
std::pair<Partition, Partition> strip_common_border(Partition mu, Partition lambda);

/// Default largest degree accepted by enumerate_partitions.
inline constexpr int kDefaultEnumerationBound = 40;

/// Hard ceiling for the bound, regardless of WEYLCHI_MAX_DEGREE.
inline constexpr int kEnumerationCeiling = 90;

/// kDefaultEnumerationBound, raised by the WEYLCHI_MAX_DEGREE environment
/// variable when that holds a larger integer (clamped to the ceiling).
int enumeration_bound();

/// All partitions of n in lexicographically decreasing order
/// ([n] first, [1^n] last). Throws std::out_of_range above the bound.
std::vector<Partition> enumerate_partitions(int n);

}  // namespace weylchi
