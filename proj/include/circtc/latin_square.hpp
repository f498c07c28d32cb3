#pragma once

#include <optional>
#include <vector>

namespace circtc {

/// Square array with 1-based row/column indices and integer entries. The
/// type only guarantees the shape; the Latin property is checked by is_latin.
class LatinSquare {
public:
    LatinSquare() = default;
    /// Rows must all have the same length as the number of rows.
    explicit LatinSquare(std::vector<std::vector<int>> rows);

    int order() const noexcept { return q_; }
    /// Entry at 1-based (i, j).
    int at(int i, int j) const { return cells_.at(static_cast<std::size_t>((i - 1) * q_ + (j - 1))); }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const LatinSquare&, const LatinSquare&) = default;

private:
    int q_ = 0;
    std::vector<int> cells_;
};

/// Closed form for odd q = 2k+1: l_ij = m when i+j = 2m, k+1+m when
/// i+j = 2m+1, reduced into [1, q]. Throws EvenOrder for even q.
LatinSquare build_commutative_idempotent(int q);

bool is_latin(const LatinSquare& sq);
bool is_commutative(const LatinSquare& sq);
bool is_idempotent(const LatinSquare& sq);
/// Each row is the left cyclic shift of the row above.
bool is_anticirculant(const LatinSquare& sq);

/// q x q array with blank cells; 1-based indexing like LatinSquare.
class PartialSquare {
public:
    PartialSquare() = default;
    explicit PartialSquare(int q) : q_(q), cells_(static_cast<std::size_t>(q) * q) {}

    int order() const noexcept { return q_; }
    const std::optional<int>& at(int i, int j) const { return cells_.at(index(i, j)); }
    void set(int i, int j, std::optional<int> v) { cells_.at(index(i, j)) = v; }
    int filled() const;

    friend bool operator==(const PartialSquare&, const PartialSquare&) = default;

private:
    std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * q_ + (j - 1)); }

    int q_ = 0;
    std::vector<std::optional<int>> cells_;
};

struct ExcisedBlock {
    /// The square with the cut cells (and their transposes) blanked.
    PartialSquare core;
    /// Cut cells e_{r,c} with c - r >= k+1, stored at their original position.
    PartialSquare corner;
};

/// Splits the order-(k+i) square into the part that stays on a diagonal
/// block and the upper triangle D that moves onto the off-diagonal bands.
/// Requires sq.order() == k+i and 1 <= i <= k+1 (IOutOfRange otherwise).
ExcisedBlock excise_block(const LatinSquare& sq, int k, int i);

} // namespace circtc
