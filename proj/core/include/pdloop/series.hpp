#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pdloop {

using Integer = boost::multiprecision::cpp_int;

/// Integer power series truncated after degree `cap`.
///
/// Coefficients are exact integers; nothing is reduced modulo p. These carry
/// graded dimensions (Hilbert/Poincare series), so all comparisons are exact.
class TruncatedSeries {
public:
    /// The zero series. Throws StructuralError for cap < 0.
    explicit TruncatedSeries(int cap);
    /// Coefficients beyond `cap` are dropped, missing ones are zero.
    TruncatedSeries(int cap, std::vector<Integer> coeffs);
    TruncatedSeries(int cap, std::initializer_list<long long> coeffs);

    static TruncatedSeries one(int cap);
    static TruncatedSeries monomial(int cap, int degree, Integer coeff = 1);

    int cap() const noexcept { return cap_; }
    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    const Integer& operator[](int degree) const { return coeffs_.at(degree); }
    void set(int degree, Integer value);

    /// Same series re-truncated at a smaller or larger cap (new slots are zero).
    TruncatedSeries with_cap(int cap) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    TruncatedSeries& operator-=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
    friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);

    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

    /// "[c0,c1,...,ccap]"
    std::string to_string() const;

private:
    int cap_;
    std::vector<Integer> coeffs_;
};

/// Cauchy product truncated at the common cap. Throws StructuralError on cap mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// Multiplicative inverse up to the cap. Requires constant term +1 or -1,
/// otherwise throws StructuralError.
TruncatedSeries series_inv(const TruncatedSeries& a);

/// Series of the polynomial sum_i coeff_i t^degree_i; convenient for
/// building things like 1 - k t^a - k t^b + t^c.
TruncatedSeries polynomial_series(int cap, std::initializer_list<std::pair<int, long long>> terms);

}  // namespace pdloop
