#include "pdloop/classify.hpp"

#include "pdloop/error.hpp"
#include "pdloop/loop_algebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace pdloop {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Equivalent: return "equivalent";
    case Verdict::NotEquivalent: return "not_equivalent";
    case Verdict::Incomparable: return "incomparable";
    }
    return "unknown";
}

ClassInvariant class_invariant(const PDComplexSpec& spec)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec("classify: spec does not validate");
    if (spec.n % 2 != 0 || spec.m() <= 2)
        throw Unsupported("classify: requires n = 2m with m > 2");
    ClassInvariant inv{spec.p, spec.m(), spec.k2(), spec.r};
    std::sort(inv.torsion.begin(), inv.torsion.end());
    return inv;
}

Classification classify(const PDComplexSpec& a, const PDComplexSpec& b)
{
    Classification out{Verdict::Incomparable, class_invariant(a), class_invariant(b), {}};
    if (out.a.p != out.b.p)
        out.reason = "different primes";
    else if (out.a.m != out.b.m)
        out.reason = "different m";
    else if (out.a.k2 != out.b.k2) {
        out.verdict = Verdict::NotEquivalent;
        out.reason = "rational ranks differ";
    } else if (out.a.torsion != out.b.torsion) {
        out.verdict = Verdict::NotEquivalent;
        out.reason = "Bockstein exponents differ";
    } else {
        out.verdict = Verdict::Equivalent;
        out.reason = "same rational rank and Bockstein exponents";
    }
    return out;
}

IntegralInvariant integral_invariant(const ManifoldSpec& man)
{
    const auto report = validate_integral(man);
    if (!report.ok)
        throw InvalidSpec("integral: " + report.violations.front().message);
    IntegralInvariant inv{man.m, {}};
    for (const auto& [q, exps] : man.torsion) {
        if (exps.empty())
            continue;
        auto sorted = exps;
        std::sort(sorted.begin(), sorted.end());
        inv.torsion.emplace(q, std::move(sorted));
    }
    return inv;
}

IntegralClassification classify_integral(const ManifoldSpec& a, const ManifoldSpec& b)
{
    IntegralClassification out{Verdict::Incomparable, integral_invariant(a), integral_invariant(b), {}};
    if (out.a.m != out.b.m) {
        out.reason = "different m";
        return out;
    }
    std::set<std::uint32_t> primes;
    for (const auto* inv : {&out.a, &out.b})
        for (const auto& [q, e] : inv->torsion)
            primes.insert(q);
    for (auto q : primes) {
        auto ia = out.a.torsion.find(q), ib = out.b.torsion.find(q);
        const bool same = ia != out.a.torsion.end() && ib != out.b.torsion.end() && ia->second == ib->second;
        if (!same) {
            out.verdict = Verdict::NotEquivalent;
            out.reason = "exponents differ at p = " + std::to_string(q);
            return out;
        }
    }
    out.verdict = Verdict::Equivalent;
    out.reason = "exponents agree at every odd prime";
    return out;
}

std::optional<PDComplexSpec> local_spec(const ManifoldSpec& man, std::uint32_t q)
{
    auto it = man.torsion.find(q);
    if (it == man.torsion.end() || it->second.empty())
        return std::nullopt;
    PDComplexSpec s;
    s.p = q;
    s.n = 2 * man.m;
    s.k = s.k1 = static_cast<int>(it->second.size());
    s.r = it->second;
    std::sort(s.r.begin(), s.r.end());
    s.A = FpMatrix::identity(Zp(q), static_cast<std::size_t>(s.k));
    return s;
}

IntegralDecomposition integral_decompose(const ManifoldSpec& man, int cap)
{
    const IntegralInvariant inv = integral_invariant(man);
    IntegralDecomposition out;
    out.m = man.m;
    out.loop_sphere_dim = 4 * man.m - 1;
    for (const auto& [q, exps] : inv.torsion) {
        out.q_factors.emplace_back(q, exps.back());
        for (std::size_t i = 0; i + 1 < exps.size(); ++i)
            out.i_cells.emplace_back(q, WedgeSummand::moore(2 * man.m, exps[i]));
    }
    for (const auto& [q, exps] : inv.torsion) {
        const auto spec = local_spec(man, q);
        LocalDecomposition ld{q, decompose(*spec), false};
        ld.series_matches = decomposition_series(ld.decomposition, cap) == quotient_dims(*spec, cap);
        out.local.push_back(std::move(ld));
    }
    return out;
}

std::string IntegralDecomposition::render() const
{
    std::vector<std::string> qs;
    for (const auto& [q, s] : q_factors)
        qs.push_back(pdloop::render(Factor::sphere_fiber(2 * m - 1, s), std::to_string(q)));
    qs.push_back(pdloop::render(Factor::loop_sphere(loop_sphere_dim)));
    std::string n_part;
    for (std::size_t i = 0; i < qs.size(); ++i)
        n_part += (i ? " x " : "") + qs[i];
    if (i_cells.empty())
        return n_part;
    std::string cells;
    for (std::size_t i = 0; i < i_cells.size(); ++i)
        cells += (i ? " v " : "") + pdloop::render(i_cells[i].second, std::to_string(i_cells[i].first));
    return n_part + " x Loops(G), G = I v (I ^ (" + n_part + ")), I = " + cells;
}

}  // namespace pdloop
