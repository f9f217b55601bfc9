#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "f1arr/numbers.hpp"

namespace f1arr {

// Dense row-major matrix over Q. All operations are exact; results are new
// values, never views.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols);
    RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RatMatrix identity(std::size_t n);
    static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    std::vector<Rational> row(std::size_t r) const;
    void append_row(const std::vector<Rational>& row);

    bool operator==(const RatMatrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

struct RrefResult {
    RatMatrix matrix;                 // canonical reduced row echelon form, zero rows dropped
    std::vector<std::size_t> pivots;  // pivot column of each remaining row, ascending
};

// Unique reduced row echelon form of the row space. Zero rows are dropped, so
// the result is the canonical basis of the row space (and a usable dedup key).
RrefResult rref(const RatMatrix& m);

// Rank over Q by forward elimination (does not share the back-substitution
// path of rref, which keeps the rank/pivot-count identity a real check).
std::size_t rank(const RatMatrix& m);

// Canonical (rref) basis of {v : m v = 0}, one basis vector per row.
// Row count is always cols - rank.
RatMatrix kernel_basis(const RatMatrix& m);

// Rank of m reduced mod p. Throws Error(Input) if an entry's denominator is
// divisible by p, or if p is not a prime below 2^31.
std::size_t rank_mod_p(const RatMatrix& m, std::uint64_t p);

// True if every row of `rows` lies in the row space of `reduced`, which must
// be in reduced row echelon form.
bool row_space_contains(const RatMatrix& reduced, const RatMatrix& rows);

RatMatrix stack(const RatMatrix& top, const RatMatrix& bottom);

// Canonical serialization, usable as a dedup or memo key.
std::string matrix_key(const RatMatrix& m);

}  // namespace f1arr
