#include "pdloop/series.hpp"

#include "pdloop/error.hpp"

#include <sstream>

namespace pdloop {

TruncatedSeries::TruncatedSeries(int cap) : cap_(cap)
{
    if (cap < 0)
        throw StructuralError("series cap must be non-negative");
    coeffs_.assign(static_cast<std::size_t>(cap) + 1, Integer(0));
}

TruncatedSeries::TruncatedSeries(int cap, std::vector<Integer> coeffs) : TruncatedSeries(cap)
{
    for (std::size_t i = 0; i < coeffs.size() && i <= static_cast<std::size_t>(cap); ++i)
        coeffs_[i] = std::move(coeffs[i]);
}

TruncatedSeries::TruncatedSeries(int cap, std::initializer_list<long long> coeffs) : TruncatedSeries(cap)
{
    std::size_t i = 0;
    for (long long c : coeffs) {
        if (i > static_cast<std::size_t>(cap))
            break;
        coeffs_[i++] = c;
    }
}

TruncatedSeries TruncatedSeries::one(int cap)
{
    return monomial(cap, 0, 1);
}

TruncatedSeries TruncatedSeries::monomial(int cap, int degree, Integer coeff)
{
    TruncatedSeries s(cap);
    if (degree >= 0 && degree <= cap)
        s.coeffs_[degree] = std::move(coeff);
    return s;
}

void TruncatedSeries::set(int degree, Integer value)
{
    coeffs_.at(degree) = std::move(value);
}

TruncatedSeries TruncatedSeries::with_cap(int cap) const
{
    return TruncatedSeries(cap, coeffs_);
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    if (other.cap_ != cap_)
        throw StructuralError("series cap mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& other)
{
    if (other.cap_ != cap_)
        throw StructuralError("series cap mismatch");
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    return *this;
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b)
{
    return series_mul(a, b);
}

std::string TruncatedSeries::to_string() const
{
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i)
            out << ',';
        out << coeffs_[i];
    }
    out << ']';
    return out.str();
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b)
{
    if (a.cap() != b.cap())
        throw StructuralError("series_mul: cap mismatch (" + std::to_string(a.cap()) + " vs " +
                              std::to_string(b.cap()) + ")");
    const int cap = a.cap();
    std::vector<Integer> out(static_cast<std::size_t>(cap) + 1);
    for (int i = 0; i <= cap; ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; i + j <= cap; ++j)
            if (b[j] != 0)
                out[i + j] += a[i] * b[j];
    }
    return TruncatedSeries(cap, std::move(out));
}

TruncatedSeries series_inv(const TruncatedSeries& a)
{
    const Integer& c0 = a[0];
    if (c0 != 1 && c0 != -1)
        throw StructuralError("series_inv: constant term must be a unit (+1 or -1)");
    const int cap = a.cap();
    std::vector<Integer> out(static_cast<std::size_t>(cap) + 1);
    // a*b = 1:  b_d = -c0 * sum_{i=1..d} a_i b_{d-i}   (c0^-1 == c0)
    out[0] = c0;
    for (int d = 1; d <= cap; ++d) {
        Integer acc = 0;
        for (int i = 1; i <= d; ++i)
            if (a[i] != 0)
                acc += a[i] * out[d - i];
        out[d] = -c0 * acc;
    }
    return TruncatedSeries(cap, std::move(out));
}

TruncatedSeries polynomial_series(int cap, std::initializer_list<std::pair<int, long long>> terms)
{
    TruncatedSeries s(cap);
    for (auto [deg, c] : terms)
        if (deg >= 0 && deg <= cap)
            s.set(deg, s[deg] + c);
    return s;
}

}  // namespace pdloop
