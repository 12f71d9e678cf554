#include "pdloop/fp_matrix.hpp"

#include "pdloop/error.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace pdloop {

bool is_prime(std::int64_t value)
{
    if (value < 2)
        return false;
    for (std::int64_t d = 2; d * d <= value; ++d)
        if (value % d == 0)
            return false;
    return true;
}

bool is_odd_prime(std::int64_t value)
{
    return value != 2 && is_prime(value);
}

Zp::Zp(std::uint32_t p) : p_(p)
{
    if (!is_odd_prime(p) || p >= (1u << 16))
        throw StructuralError("modulus must be an odd prime below 65536, got " + std::to_string(p));
}

Residue Zp::inv(Residue a) const
{
    if (a % p_ == 0)
        throw Error("zero has no inverse mod " + std::to_string(p_));
    // Fermat: a^(p-2)
    std::uint64_t base = a % p_, result = 1;
    for (std::uint32_t e = p_ - 2; e; e >>= 1) {
        if (e & 1u)
            result = result * base % p_;
        base = base * base % p_;
    }
    return static_cast<Residue>(result);
}

void Zp::axpy(std::vector<Residue>& v, Residue c, const std::vector<Residue>& w) const
{
    if (c == 0)
        return;
    const Residue nc = neg(c);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (w[i])
            v[i] = add(v[i], mul(nc, w[i]));
}

bool is_zero(std::span<const Residue> v)
{
    return std::all_of(v.begin(), v.end(), [](Residue x) { return x == 0; });
}

FpMatrix::FpMatrix(Zp field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

FpMatrix::FpMatrix(Zp field, std::initializer_list<std::initializer_list<long long>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_)
            throw StructuralError("ragged matrix rows");
        for (long long v : row)
            data_.push_back(field_.reduce(v));
    }
}

FpMatrix FpMatrix::from_rows(Zp field, const std::vector<std::vector<long long>>& rows)
{
    FpMatrix m(field, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw StructuralError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j)
            m.set(i, j, rows[i][j]);
    }
    return m;
}

FpMatrix FpMatrix::identity(Zp field, std::size_t n)
{
    FpMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::transpose() const
{
    FpMatrix t(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
}

FpMatrix FpMatrix::inverse() const
{
    if (!square())
        throw Error("inverse of a non-square matrix");
    const std::size_t n = rows_;
    std::vector<std::vector<Residue>> aug(n, std::vector<Residue>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug[i][j] = (*this)(i, j);
        aug[i][n + i] = 1;
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col] == 0)
            ++piv;
        if (piv == n)
            throw Error("matrix is singular mod " + std::to_string(p()));
        std::swap(aug[col], aug[piv]);
        const Residue s = field_.inv(aug[col][col]);
        for (auto& x : aug[col])
            x = field_.mul(x, s);
        for (std::size_t r = 0; r < n; ++r)
            if (r != col && aug[r][col])
                field_.axpy(aug[r], aug[r][col], aug[col]);
    }
    FpMatrix out(field_, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.data_[i * n + j] = aug[i][n + j];
    return out;
}

FpMatrix operator*(const FpMatrix& a, const FpMatrix& b)
{
    if (a.cols_ != b.rows_ || a.field_ != b.field_)
        throw StructuralError("matrix product shape or field mismatch");
    FpMatrix c(a.field_, a.rows_, b.cols_);
    const Zp& f = a.field_;
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Residue aik = a(i, k);
            if (!aik)
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                c.data_[i * c.cols_ + j] = f.add(c.data_[i * c.cols_ + j], f.mul(aik, b(k, j)));
        }
    return c;
}

std::size_t matrix_rank(const FpMatrix& mat)
{
    const Zp& f = mat.field();
    std::vector<std::vector<Residue>> rows(mat.rows(), std::vector<Residue>(mat.cols()));
    for (std::size_t i = 0; i < mat.rows(); ++i)
        for (std::size_t j = 0; j < mat.cols(); ++j)
            rows[i][j] = mat(i, j);

    std::size_t rank = 0;
    for (std::size_t col = 0; col < mat.cols() && rank < rows.size(); ++col) {
        std::size_t piv = rank;
        while (piv < rows.size() && rows[piv][col] == 0)
            ++piv;
        if (piv == rows.size())
            continue;
        std::swap(rows[rank], rows[piv]);
        const Residue s = f.inv(rows[rank][col]);
        for (auto& x : rows[rank])
            x = f.mul(x, s);
        for (std::size_t r = rank + 1; r < rows.size(); ++r)
            if (rows[r][col])
                f.axpy(rows[r], rows[r][col], rows[rank]);
        ++rank;
    }
    return rank;
}

RowSpace::RowSpace(Zp field, std::size_t dim) : field_(field), dim_(dim), pivot_row_(dim, -1) {}

void RowSpace::reduce(std::vector<Residue>& v) const
{
    if (v.size() != dim_)
        throw StructuralError("RowSpace: vector length mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const Residue c = v[pivots_[i]];
        if (c)
            field_.axpy(v, c, rows_[i]);
    }
}

bool RowSpace::insert(std::vector<Residue> v)
{
    reduce(v);
    std::size_t lead = 0;
    while (lead < dim_ && v[lead] == 0)
        ++lead;
    if (lead == dim_)
        return false;
    const Residue s = field_.inv(v[lead]);
    for (auto& x : v)
        x = field_.mul(x, s);
    for (auto& row : rows_)
        if (row[lead])
            field_.axpy(row, row[lead], v);
    pivot_row_[lead] = static_cast<long>(rows_.size());
    pivots_.push_back(lead);
    rows_.push_back(std::move(v));
    return true;
}

bool RowSpace::contains(std::vector<Residue> v) const
{
    reduce(v);
    return is_zero(v);
}

bool RowSpace::contains_all(const RowSpace& other) const
{
    return std::all_of(other.rows_.begin(), other.rows_.end(),
                       [this](const std::vector<Residue>& row) { return contains(row); });
}

std::vector<std::vector<Residue>> left_kernel(const Zp& field, std::span<const std::vector<Residue>> rows)
{
    if (rows.empty())
        return {};
    const std::size_t width = rows.front().size();
    const std::size_t count = rows.size();
    // Row reduce [rows | I]; rows whose left block vanishes are kernel vectors.
    RowSpace aug(field, width + count);
    for (std::size_t i = 0; i < count; ++i) {
        if (rows[i].size() != width)
            throw StructuralError("left_kernel: ragged rows");
        std::vector<Residue> v(width + count, 0);
        std::copy(rows[i].begin(), rows[i].end(), v.begin());
        v[width + i] = 1;
        aug.insert(std::move(v));
    }
    std::vector<std::vector<Residue>> kernel;
    for (std::size_t i = 0; i < aug.rank(); ++i)
        if (aug.pivots()[i] >= width)
            kernel.emplace_back(aug.rows()[i].begin() + static_cast<long>(width), aug.rows()[i].end());
    return kernel;
}

}  // namespace pdloop
