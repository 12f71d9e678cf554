#pragma once

#include <cstdint>
#include <vector>

namespace pdloop {

using Residue = std::uint32_t;

bool is_prime(std::int64_t value);
bool is_odd_prime(std::int64_t value);

/// Arithmetic in Z/p for a small odd prime p. Residues are kept in [0, p).
class Zp {
public:
    /// Throws StructuralError unless p is an odd prime below 2^16.
    explicit Zp(std::uint32_t p);

    std::uint32_t p() const noexcept { return p_; }

    Residue reduce(std::int64_t value) const noexcept
    {
        auto r = value % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }
    Residue add(Residue a, Residue b) const noexcept
    {
        Residue s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    Residue sub(Residue a, Residue b) const noexcept { return a >= b ? a - b : a + p_ - b; }
    Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    Residue mul(Residue a, Residue b) const noexcept
    {
        return static_cast<Residue>((static_cast<std::uint64_t>(a) * b) % p_);
    }
    /// Throws Error on a == 0.
    Residue inv(Residue a) const;

    /// (-1)^e as a residue.
    Residue sign(long e) const noexcept { return (e % 2 == 0) ? 1 : p_ - 1; }

    /// v <- v - c * w, entrywise.
    void axpy(std::vector<Residue>& v, Residue c, const std::vector<Residue>& w) const;

    friend bool operator==(const Zp&, const Zp&) = default;

private:
    std::uint32_t p_;
};

}  // namespace pdloop
