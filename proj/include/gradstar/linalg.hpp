#pragma once

// Exact rank and span computations over Q by fraction-free elimination.
// Rows are integer vectors; rational data is scaled to integers first.
// Pivoting is by column order, so results are reproducible.

#include "gradstar/rational.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace gradstar::linalg {

using IntRow = std::vector<std::int64_t>;

// Rank over Q. Runs in checked 64-bit arithmetic and falls back to GMP
// integers when an intermediate value would overflow.
std::size_t exact_rank(const std::vector<IntRow>& rows);

// Same computation forced onto GMP integers (used to cross-check the fast path).
std::size_t exact_rank_gmp(const std::vector<IntRow>& rows);

// Incremental row echelon form for span membership and rank growth.
class EchelonBasis {
public:
    explicit EchelonBasis(std::size_t cols);
    ~EchelonBasis();
    EchelonBasis(EchelonBasis&&) noexcept;
    EchelonBasis& operator=(EchelonBasis&&) noexcept;

    // Adds row to the span; returns true when the rank grew.
    bool insert(const IntRow& row);
    bool contains(const IntRow& row) const;
    std::size_t rank() const;
    std::size_t cols() const { return cols_; }

private:
    struct Impl;
    std::size_t cols_;
    std::unique_ptr<Impl> impl_;
};

// Basis of {c : sum_i c_i rows[i] = 0}, i.e. the left kernel.
std::vector<std::vector<Rational>> left_kernel(const std::vector<IntRow>& rows, std::size_t cols);

// Scales rational coefficients to a primitive integer vector.
// Throws std::overflow_error if an entry does not fit in 64 bits.
IntRow to_integer_row(const std::vector<Rational>& row);

// Removes zero rows, duplicate rows and columns that vanish on every row.
// Rank is preserved.
std::vector<IntRow> compress(const std::vector<IntRow>& rows);

} // namespace gradstar::linalg
