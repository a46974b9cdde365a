#ifndef SQUEEZE_LINALG_HPP
#define SQUEEZE_LINALG_HPP

#include <cstddef>
#include <vector>

#include "squeeze/field.hpp"

namespace squeeze {

// Row echelon accumulator over a field.  Columns are ordered so that the
// leftmost nonzero entry of a row is its leading term; the set of pivot
// columns of the row space equals the set of leading columns attainable by
// its nonzero vectors.
template <class F>
class Echelon {
public:
    explicit Echelon(std::size_t ncols) : ncols_(ncols) {}

    // Reduces v against the current rows and inserts it if independent.
    // Returns true if the rank grew.
    bool add_row(std::vector<F> v) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const F c = v[pivots_[r]];  // by value: axpy writes through v
            if (!is_zero(c)) axpy(v, c, rows_[r]);
        }
        std::size_t lead = ncols_;
        for (std::size_t j = 0; j < ncols_; ++j)
            if (!is_zero(v[j])) {
                lead = j;
                break;
            }
        if (lead == ncols_) return false;
        const F inv = F(1) / v[lead];
        for (auto& x : v) x = x * inv;
        // Insert keeping rows sorted by pivot column.
        std::size_t pos = 0;
        while (pos < rows_.size() && pivots_[pos] < lead) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(v));
        pivots_.insert(pivots_.begin() + pos, lead);
        return true;
    }

    std::size_t rank() const { return rows_.size(); }
    const std::vector<std::size_t>& pivot_columns() const { return pivots_; }
    const std::vector<std::vector<F>>& rows() const { return rows_; }

private:
    static void axpy(std::vector<F>& v, const F& c, const std::vector<F>& row) {
        for (std::size_t j = 0; j < v.size(); ++j)
            if (!is_zero(row[j])) v[j] = v[j] - c * row[j];
    }

    std::size_t ncols_;
    std::vector<std::vector<F>> rows_;
    std::vector<std::size_t> pivots_;
};

// Determinant-nonzero test via elimination (rank == n).
template <class F>
bool is_invertible(const std::vector<std::vector<F>>& matrix) {
    if (matrix.empty()) return true;
    Echelon<F> ech(matrix.size());
    for (const auto& row : matrix) ech.add_row(row);
    return ech.rank() == matrix.size();
}

}  // namespace squeeze

#endif
