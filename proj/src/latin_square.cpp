#include "circtc/latin_square.hpp"

#include "circtc/error.hpp"

#include <algorithm>
#include <string>

namespace circtc {

LatinSquare::LatinSquare(std::vector<std::vector<int>> rows) : q_(static_cast<int>(rows.size())) {
    cells_.reserve(rows.size() * rows.size());
    for (const auto& row : rows) {
        if (row.size() != rows.size()) {
            throw error(errc::parse_error, "Latin square rows must have length " + std::to_string(q_));
        }
        cells_.insert(cells_.end(), row.begin(), row.end());
    }
}

std::vector<std::vector<int>> LatinSquare::rows() const {
    std::vector<std::vector<int>> out(q_);
    for (int i = 1; i <= q_; ++i) {
        for (int j = 1; j <= q_; ++j) {
            out[i - 1].push_back(at(i, j));
        }
    }
    return out;
}

LatinSquare build_commutative_idempotent(int q) {
    if (q < 1) {
        throw error(errc::i_out_of_range, "order must be positive");
    }
    if (q % 2 == 0) {
        throw error(errc::even_order, "no commutative idempotent Latin square of even order " + std::to_string(q));
    }
    const int k = (q - 1) / 2;
    std::vector<std::vector<int>> rows(q, std::vector<int>(q));
    for (int i = 1; i <= q; ++i) {
        for (int j = 1; j <= q; ++j) {
            const int s = i + j;
            const int m = s / 2;
            int v = (s % 2 == 0) ? m : k + 1 + m;
            v = (v - 1) % q + 1;
            rows[i - 1][j - 1] = v;
        }
    }
    return LatinSquare(std::move(rows));
}

bool is_latin(const LatinSquare& sq) {
    const int q = sq.order();
    for (int i = 1; i <= q; ++i) {
        std::vector<char> row_seen(q + 1, 0);
        std::vector<char> col_seen(q + 1, 0);
        for (int j = 1; j <= q; ++j) {
            const int r = sq.at(i, j);
            const int c = sq.at(j, i);
            if (r < 1 || r > q || c < 1 || c > q || row_seen[r] || col_seen[c]) {
                return false;
            }
            row_seen[r] = col_seen[c] = 1;
        }
    }
    return true;
}

bool is_commutative(const LatinSquare& sq) {
    for (int i = 1; i <= sq.order(); ++i) {
        for (int j = i + 1; j <= sq.order(); ++j) {
            if (sq.at(i, j) != sq.at(j, i)) {
                return false;
            }
        }
    }
    return true;
}

bool is_idempotent(const LatinSquare& sq) {
    for (int i = 1; i <= sq.order(); ++i) {
        if (sq.at(i, i) != i) {
            return false;
        }
    }
    return true;
}

bool is_anticirculant(const LatinSquare& sq) {
    const int q = sq.order();
    for (int i = 1; i < q; ++i) {
        for (int j = 1; j <= q; ++j) {
            if (sq.at(i + 1, j) != sq.at(i, j % q + 1)) {
                return false;
            }
        }
    }
    return true;
}

int PartialSquare::filled() const {
    return static_cast<int>(std::count_if(cells_.begin(), cells_.end(), [](const auto& c) { return c.has_value(); }));
}

ExcisedBlock excise_block(const LatinSquare& sq, int k, int i) {
    const int q = sq.order();
    if (k < 1 || i < 1 || i > k + 1 || k + i != q) {
        throw error(errc::i_out_of_range, "excision needs order k+i with 1 <= i <= k+1 (k=" + std::to_string(k) +
                                              ", i=" + std::to_string(i) + ", order=" + std::to_string(q) + ")");
    }
    ExcisedBlock out{PartialSquare(q), PartialSquare(q)};
    for (int r = 1; r <= q; ++r) {
        for (int c = 1; c <= q; ++c) {
            if (c - r >= k + 1) {
                out.corner.set(r, c, sq.at(r, c));
            } else if (r - c < k + 1) {
                out.core.set(r, c, sq.at(r, c));
            }
        }
    }
    return out;
}

} // namespace circtc
