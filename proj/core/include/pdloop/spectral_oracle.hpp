#pragma once

#include "pdloop/complex_model.hpp"
#include "pdloop/loop_algebra.hpp"

#include <compare>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace pdloop {

/// Replay of the formal spectral sequence with E^2 = H_*(P) (x) A, where A is
/// the quotient algebra. Columns s are 0, the generator degrees |a_i| and N.
/// The only differentials are the transgressions
///   d^{|a_i|}(a_i (x) w) = 1 (x) w u_i
/// and, on page m' (the least degree carrying a nontrivial cup product),
///   d^{m'}(z (x) w) = (-1)^{m'} sum c_ij a_j (x) w u_i  over |a_i| = m', |a_j| = N - m'.
/// Each page is E^r = Z^r / B^r inside the E^2 cell, tracked as explicit subspaces.

struct Cell {
    int s = 0;
    int t = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct PageCell {
    Cell cell;
    std::size_t dim = 0;
    /// Up to a few representatives of a basis of Z^r / B^r, e.g. "1·a2⊗u1u3".
    std::vector<std::string> representatives;
};

struct DifferentialBlock {
    Cell source;
    Cell target;
    /// Rank of the induced map E^r_source -> E^r_target.
    std::size_t rank = 0;
};

constexpr int infinity_page = std::numeric_limits<int>::max();

struct BigradedPage {
    int r = 2;  // infinity_page for E^infinity
    std::vector<PageCell> cells;  // nonzero cells only, ordered by (s, t)
    std::vector<DifferentialBlock> differentials;  // nonzero blocks acting on this page
};

struct SpectralReplay {
    int cap = 0;
    int m_prime = 0;
    std::vector<int> columns;
    /// E^2, then every page carrying a differential, then E^infinity.
    std::vector<BigradedPage> pages;
    /// False when a differential does not respect Z^r and B^r.
    bool well_defined = true;
    bool d_squared_zero = true;
    std::string defect;
    std::optional<Cell> defect_cell;
};

/// Replays all pages for cells with s + t <= cap + 1; needs quotient.cap() >= cap + 1.
/// Throws Unsupported when no cup product is nontrivial (m' = N).
SpectralReplay build_pages(const GeneralComplexSpec& spec, const QuotientAlgebra& quotient, int cap);

struct AcyclicityResult {
    bool acyclic = false;
    /// First cell (in (s, t) order) that survives, or where the replay broke.
    std::optional<Cell> witness;
    std::string detail;
    /// Cells on the window edge s + t = cap + 1 that are still nonzero.
    std::vector<Cell> indeterminate;
};

/// Acyclic iff the replay is well defined and every cell with s + t <= cap
/// other than (0, 0) is zero on E^infinity.
AcyclicityResult verify_acyclic(const SpectralReplay& replay, int cap);

}  // namespace pdloop
