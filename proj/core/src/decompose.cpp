#include "pdloop/decompose.hpp"

#include "pdloop/error.hpp"
#include "pdloop/loop_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pdloop {

std::string to_string(PlanCase c)
{
    switch (c) {
    case PlanCase::Case1: return "case1";
    case PlanCase::Case2a: return "case2a";
    case PlanCase::Case2b: return "case2b";
    case PlanCase::Case2c: return "case2c";
    case PlanCase::TorsionFree: return "torsion-free";
    }
    return "unknown";
}

FpMatrix QuotientPlan::transformed(const FpMatrix& A) const
{
    return P.inverse().transpose() * A * Q.inverse();
}

namespace {

void require_even_valid(const PDComplexSpec& spec, const char* what)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec(std::string(what) + ": spec does not validate");
    if (spec.n % 2 != 0 || spec.m() <= 2)
        throw Unsupported(std::string(what) + ": requires n = 2m with m > 2");
}

/// A with rows and columns reordered by perm.
Residue permuted(const FpMatrix& A, const std::vector<int>& perm, int i, int j)
{
    return A(perm[i], perm[j]);
}

}  // namespace

QuotientPlan quotient_plan(const PDComplexSpec& spec)
{
    require_even_valid(spec, "quotient_plan");
    const Zp f(spec.p);
    const int k = spec.k;
    const FpMatrix& A = spec.A;

    QuotientPlan plan;
    plan.permutation.resize(k);
    std::iota(plan.permutation.begin(), plan.permutation.end(), 0);
    auto& perm = plan.permutation;
    // Local 2x2 change of basis on positions 0,1 of the reordered basis.
    FpMatrix localP = FpMatrix::identity(f, k);
    FpMatrix localQ = FpMatrix::identity(f, k);

    if (spec.k1 == 0) {
        plan.which = PlanCase::TorsionFree;
        // Only the degree n-1 classes are reordered here, which is enough to
        // put a nonzero pairing in position (1,1).
        int i = 0;
        while (i < k && A(i, 0) == 0)
            ++i;
        if (i == k)
            throw InternalError("quotient_plan: first column of a nonsingular matrix is zero");
        localP.set(0, 0, 0);
        localP.set(i, i, 0);
        localP.set(0, i, 1);
        localP.set(i, 0, 1);
        plan.cup_unit = A(i, 0);
    } else {
        const int top = static_cast<int>(std::max_element(spec.r.begin(), spec.r.end()) - spec.r.begin());
        std::swap(perm[0], perm[top]);
        const int r1 = spec.r[perm[0]];
        plan.target_exponent = r1;
        if (permuted(A, perm, 0, 0) != 0) {
            plan.which = PlanCase::Case1;
            plan.cup_unit = permuted(A, perm, 0, 0);
        } else {
            int i = 1;
            while (i < k && permuted(A, perm, i, 0) == 0)
                ++i;
            if (i == k || i >= spec.k1)
                throw InternalError("quotient_plan: no torsion generator pairs with the first one");
            std::swap(perm[1], perm[i]);
            const int r2 = spec.r[perm[1]];
            const Residue a21 = permuted(A, perm, 1, 0);
            const Residue a22 = permuted(A, perm, 1, 1);
            if (r1 == r2 && a22 != 0) {
                plan.which = PlanCase::Case2a;
                for (FpMatrix* M : {&localP, &localQ}) {
                    M->set(0, 0, 0);
                    M->set(1, 1, 0);
                    M->set(0, 1, 1);
                    M->set(1, 0, 1);
                }
                plan.cup_unit = a22;
            } else if (r1 == r2) {
                // a_1 = (x_1 + x_2)/2, a_2 = x_1 - x_2 and the same for y; 2 is a unit as p is odd.
                plan.which = PlanCase::Case2b;
                const Residue half = f.inv(2);
                for (FpMatrix* M : {&localP, &localQ}) {
                    M->set(0, 0, half);
                    M->set(0, 1, half);
                    M->set(1, 0, 1);
                    M->set(1, 1, -1);
                }
                plan.cup_unit = f.mul(2, a21);
            } else {
                // a_1 = x_1, a_2 = x_1 - x_2; b_1 = y_1 + y_2, b_2 = -y_2.
                plan.which = PlanCase::Case2c;
                localP.set(1, 0, 1);
                localP.set(1, 1, -1);
                localQ.set(0, 1, 1);
                localQ.set(1, 1, -1);
                plan.cup_unit = a21;
            }
        }
    }

    FpMatrix S(f, k, k);
    for (int i = 0; i < k; ++i)
        S.set(i, perm[i], 1);
    plan.P = localP * S;
    plan.Q = localQ * S;
    if (plan.transformed(A)(0, 0) != plan.cup_unit || plan.cup_unit == 0)
        throw InternalError("quotient_plan: basis change does not realise the recorded cup unit");
    return plan;
}

std::string render(const Factor& f, const std::string& prime)
{
    std::ostringstream out;
    switch (f.kind) {
    case Factor::Kind::SphereFiber:
        out << "S^" << f.dim << '{' << prime;
        if (f.exponent != 1)
            out << '^' << f.exponent;
        out << '}';
        break;
    case Factor::Kind::LoopSphere:
        out << "Loops(S^" << f.dim << ')';
        break;
    case Factor::Kind::LoopWedge: {
        std::string x;
        for (std::size_t i = 0; i < f.base.size(); ++i)
            x += (i ? " x " : "") + render(f.base[i], prime);
        out << "Loops(J v (J ^ (" << x << ")))";
        break;
    }
    }
    return out.str();
}

std::string Decomposition::render(const std::string& prime) const
{
    std::string out;
    const Factor* wedge = nullptr;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        out += (i ? " x " : "") + pdloop::render(factors[i], prime);
        if (factors[i].kind == Factor::Kind::LoopWedge)
            wedge = &factors[i];
    }
    if (wedge)
        out += ", J = " + pdloop::render(wedge->cells, prime);
    return out;
}

Decomposition decompose(const PDComplexSpec& spec)
{
    require_even_valid(spec, "decompose");
    const int m = spec.m();
    std::vector<Factor> base;
    WedgeSummands J;
    if (spec.k1 > 0) {
        std::vector<int> rest = spec.r;
        const auto top = std::max_element(rest.begin(), rest.end());
        base = {Factor::sphere_fiber(2 * m - 1, *top), Factor::loop_sphere(4 * m - 1)};
        rest.erase(top);
        std::sort(rest.begin(), rest.end());
        for (int r : rest)
            J.push_back(WedgeSummand::moore(2 * m, r));
        for (int i = spec.k1; i < spec.k; ++i) {
            J.push_back(WedgeSummand::sphere(2 * m - 1));
            J.push_back(WedgeSummand::sphere(2 * m));
        }
    } else {
        base = {Factor::loop_sphere(2 * m - 1), Factor::loop_sphere(2 * m)};
        // One sphere pair is the rank-one piece; the rest form J.
        for (int i = 1; i < spec.k; ++i) {
            J.push_back(WedgeSummand::sphere(2 * m - 1));
            J.push_back(WedgeSummand::sphere(2 * m));
        }
    }
    Decomposition d{base};
    if (spec.k >= 2)
        d.factors.push_back(Factor::loop_wedge(std::move(J), std::move(base)));
    return d;
}

namespace {

/// Reduced homology of the wedge, shifted down one degree.
TruncatedSeries desuspended(const WedgeSummands& cells, int cap)
{
    TruncatedSeries j(cap);
    for (const auto& c : cells) {
        if (c.kind == WedgeSummand::Kind::Moore) {
            j += TruncatedSeries::monomial(cap, c.dim - 2);
            j += TruncatedSeries::monomial(cap, c.dim - 1);
        } else {
            j += TruncatedSeries::monomial(cap, c.dim - 1);
        }
    }
    return j;
}

}  // namespace

TruncatedSeries factor_series(const Factor& f, int cap)
{
    switch (f.kind) {
    case Factor::Kind::SphereFiber:
        return polynomial_series(cap, {{0, 1}, {f.dim, 1}}) *
               series_inv(polynomial_series(cap, {{0, 1}, {f.dim - 1, -1}}));
    case Factor::Kind::LoopSphere:
        return series_inv(polynomial_series(cap, {{0, 1}, {f.dim - 1, -1}}));
    case Factor::Kind::LoopWedge: {
        TruncatedSeries x = TruncatedSeries::one(cap);
        for (const auto& b : f.base)
            x = x * factor_series(b, cap);
        return series_inv(TruncatedSeries::one(cap) - desuspended(f.cells, cap) * x);
    }
    }
    throw InternalError("unknown factor kind");
}

TruncatedSeries decomposition_series(const Decomposition& d, int cap)
{
    TruncatedSeries s = TruncatedSeries::one(cap);
    for (const auto& f : d.factors)
        s = s * factor_series(f, cap);
    return s;
}

bool decomposition_series_check(const PDComplexSpec& spec, int cap)
{
    return decomposition_series(decompose(spec), cap) == quotient_dims(spec, cap);
}

FiberSeries fiber_series(const PDComplexSpec& spec, int cap)
{
    require_even_valid(spec, "fiber_series");
    if (spec.k < 2)
        throw Unsupported("fiber_series: k = 1 has no fiber, the complex is its own rank-one piece");
    const int m = spec.m();
    const Decomposition d = decompose(spec);
    TruncatedSeries base = TruncatedSeries::one(cap);
    for (std::size_t i = 0; i + 1 < d.factors.size(); ++i)
        base = base * factor_series(d.factors[i], cap);

    const long long pairs = spec.k - 1;
    const auto cells = polynomial_series(cap, {{2 * m - 1, pairs}, {2 * m, pairs}});
    const auto desusp = polynomial_series(cap, {{2 * m - 2, pairs}, {2 * m - 1, pairs}});
    FiberSeries out{TruncatedSeries::one(cap) + cells * base,
                    series_inv(TruncatedSeries::one(cap) - desusp * base), base, false};
    out.product_matches = base * out.loop_fiber == quotient_dims(spec, cap);
    return out;
}

}  // namespace pdloop
