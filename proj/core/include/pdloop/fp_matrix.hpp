#pragma once

#include "pdloop/fp.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace pdloop {

/// Dense matrix over Z/p, row-major.
class FpMatrix {
public:
    FpMatrix(Zp field, std::size_t rows, std::size_t cols);
    /// Entries are reduced mod p on construction.
    FpMatrix(Zp field, std::initializer_list<std::initializer_list<long long>> rows);
    static FpMatrix from_rows(Zp field, const std::vector<std::vector<long long>>& rows);
    static FpMatrix identity(Zp field, std::size_t n);

    const Zp& field() const noexcept { return field_; }
    std::uint32_t p() const noexcept { return field_.p(); }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }

    Residue operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, long long value) { data_[i * cols_ + j] = field_.reduce(value); }

    FpMatrix transpose() const;
    /// Throws Error when the matrix is singular or not square.
    FpMatrix inverse() const;
    friend FpMatrix operator*(const FpMatrix& a, const FpMatrix& b);
    friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

private:
    Zp field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

/// Rank over Z/p by Gaussian elimination. Columns are processed left to right
/// and the pivot is the lowest-index remaining row with a nonzero entry.
std::size_t matrix_rank(const FpMatrix& mat);

/// A subspace of (Z/p)^dim kept as a fully reduced row echelon basis.
///
/// Every stored row has a leading 1 at its pivot column and zeros at all other
/// pivot columns, so reduction is a single pass.
class RowSpace {
public:
    RowSpace(Zp field, std::size_t dim);

    const Zp& field() const noexcept { return field_; }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t rank() const noexcept { return rows_.size(); }
    bool full() const noexcept { return rows_.size() == dim_; }

    /// Adds v to the span; returns true iff it was independent.
    bool insert(std::vector<Residue> v);
    /// Reduces v modulo the subspace in place; afterwards v is zero at every pivot.
    void reduce(std::vector<Residue>& v) const;
    bool contains(std::vector<Residue> v) const;
    bool contains_all(const RowSpace& other) const;

    const std::vector<std::vector<Residue>>& rows() const noexcept { return rows_; }
    const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
    bool is_pivot(std::size_t col) const { return pivot_row_[col] >= 0; }

private:
    Zp field_;
    std::size_t dim_;
    std::vector<std::vector<Residue>> rows_;
    std::vector<std::size_t> pivots_;
    std::vector<long> pivot_row_;
};

/// Basis of the left kernel of `rows`: coefficient vectors lambda with
/// sum_i lambda_i rows_i = 0. All rows must share one length.
std::vector<std::vector<Residue>> left_kernel(const Zp& field, std::span<const std::vector<Residue>> rows);

bool is_zero(std::span<const Residue> v);

}  // namespace pdloop
