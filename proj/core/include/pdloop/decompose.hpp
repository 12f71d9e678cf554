#pragma once

#include "pdloop/complex_model.hpp"
#include "pdloop/fp_matrix.hpp"
#include "pdloop/series.hpp"

#include <string>
#include <vector>

namespace pdloop {

/// How the complex is mapped onto a rank-one piece (a Moore space P^{2m}(p^{r_1})
/// or a sphere pair) carrying a unit cup product.
enum class PlanCase { Case1, Case2a, Case2b, Case2c, TorsionFree };

std::string to_string(PlanCase c);

struct QuotientPlan {
    PlanCase which = PlanCase::Case1;
    /// Position i of the reordered basis holds original generator permutation[i]
    /// (applied to x and y simultaneously).
    std::vector<int> permutation;
    /// r_1 of the Moore target; 0 for a sphere pair.
    int target_exponent = 0;
    Residue cup_unit = 0;
    /// New degree n-1 classes a_i = sum_j P(i, j) x_j and degree n classes
    /// b_i = sum_j Q(i, j) y_j, both in the original basis.
    FpMatrix P{Zp(3), 0, 0};
    FpMatrix Q{Zp(3), 0, 0};

    /// Cup matrix in the new basis: P^{-T} A Q^{-1}. Its (1,1) entry is cup_unit.
    FpMatrix transformed(const FpMatrix& A) const;
};

/// Throws InvalidSpec unless validate_pd passes, Unsupported unless n = 2m with m > 2.
QuotientPlan quotient_plan(const PDComplexSpec& spec);

struct Factor {
    enum class Kind { SphereFiber, LoopSphere, LoopWedge };
    Kind kind = Kind::LoopSphere;
    /// SphereFiber: 2m-1 of S^{2m-1}{p^r}; LoopSphere: d of Loops(S^d).
    int dim = 0;
    /// SphereFiber only.
    int exponent = 0;
    /// LoopWedge only: Loops(J v (J ^ X)) with J = cells and X the product of `base`.
    WedgeSummands cells;
    std::vector<Factor> base;

    static Factor sphere_fiber(int dim, int r) { return {Kind::SphereFiber, dim, r, {}, {}}; }
    static Factor loop_sphere(int d) { return {Kind::LoopSphere, d, 0, {}, {}}; }
    static Factor loop_wedge(WedgeSummands cells, std::vector<Factor> base)
    {
        return {Kind::LoopWedge, 0, 0, std::move(cells), std::move(base)};
    }
    friend bool operator==(const Factor&, const Factor&) = default;
};

struct Decomposition {
    std::vector<Factor> factors;
    /// "S^5{p^2} x Loops(S^11) x Loops(J v (J ^ (S^5{p^2} x Loops(S^11)))), J = P^6(p) v S^5 v S^6"
    std::string render(const std::string& prime = "p") const;
};

std::string render(const Factor& f, const std::string& prime = "p");

/// Throws InvalidSpec unless validate_pd passes, Unsupported for n odd or m <= 2.
Decomposition decompose(const PDComplexSpec& spec);

/// SphereFiber(2m-1): (1 + t^{2m-1}) / (1 - t^{2m-2}); LoopSphere(d): 1/(1 - t^{d-1});
/// LoopWedge: 1/(1 - j(t) X(t)) with j the desuspended reduced series of J and X
/// the product of the base factors (Loops(J v J ^ X) = Loops(Sigma(j (x) H(X)))).
TruncatedSeries factor_series(const Factor& f, int cap);

TruncatedSeries decomposition_series(const Decomposition& d, int cap);

/// Product of factor_series over decompose(spec) equals quotient_dims(spec) up to cap.
bool decomposition_series_check(const PDComplexSpec& spec, int cap);

struct FiberSeries {
    /// 1 + (k-1)(t^{2m-1} + t^{2m}) X(t), X the series of the rank-one loop space.
    TruncatedSeries fiber;
    /// Series of the loops on the fiber, 1/(1 - (k-1)(t^{2m-2} + t^{2m-1}) X(t)).
    TruncatedSeries loop_fiber;
    TruncatedSeries base;
    /// quotient_dims(spec) equals base * loop_fiber.
    bool product_matches = false;
};

/// Throws Unsupported for k = 1 (there is no fiber, the complex is its own rank-one piece).
FiberSeries fiber_series(const PDComplexSpec& spec, int cap);

}  // namespace pdloop
