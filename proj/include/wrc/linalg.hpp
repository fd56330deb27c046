#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wrc/qq.hpp"

// Exact integer row reduction used by the syzygy engine. Rows represent
// rational subspaces up to scale: every stored row is primitive (content 1)
// with a positive leading entry, so results are exact and deterministic.
//
// The long long instantiation computes row combinations in __int128 and
// throws int_overflow if a normalized entry leaves the 64-bit range; the
// caller then redoes the computation with the ZZ instantiation.

namespace wrc {

struct int_overflow final : std::exception {
    const char* what() const noexcept override { return "int64 row reduction overflow"; }
};

namespace linalg {

/// a*target - b*source, normalized to primitive with positive lead.
template <class T>
void combine_rows(std::vector<T>& target, const std::vector<T>& source, const T& a, const T& b);

template <class T>
void normalize_row(std::vector<T>& row);

/// Reduced row echelon form (pivot entries positive, pivot columns clear
/// above and below, rows primitive). Rows ordered by pivot column.
template <class T>
struct Rref {
    std::vector<std::vector<T>> rows;
    std::vector<std::size_t> pivot_cols; // ascending, parallel to rows
};

template <class T>
Rref<T> rref(std::vector<std::vector<T>> rows, std::size_t ncols);

/// Primitive integer basis of { v : A v = 0 }, one vector per free column,
/// in ascending free-column order.
template <class T>
std::vector<std::vector<T>> nullspace(const std::vector<std::vector<T>>& rows, std::size_t ncols);

/// Incremental row span with membership-style reduction. Rows are kept
/// forward-reduced only (no back-substitution), keyed by pivot column.
template <class T>
class RowSpan {
public:
    explicit RowSpan(std::size_t ncols) : ncols_(ncols) {}

    /// Reduces v against the span; inserts the residue if nonzero.
    /// Returns the inserted primitive row, or empty vector if dependent.
    std::vector<T> add(std::vector<T> v);

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }

private:
    std::size_t ncols_;
    std::map<std::size_t, std::vector<T>> rows_; // pivot col -> row
};

} // namespace linalg
} // namespace wrc
