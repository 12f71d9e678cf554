#include "pdloop/complex_model.hpp"

#include "pdloop/error.hpp"

#include <algorithm>
#include <sstream>

namespace pdloop {

std::string to_string(Constraint c)
{
    switch (c) {
    case Constraint::Nonsingular: return "nonsingular";
    case Constraint::CBlockZero: return "c-block-zero";
    case Constraint::BSymmetric: return "b-symmetric";
    case Constraint::BSkewSymmetric: return "b-skew-symmetric";
    case Constraint::TopDimension: return "top-dimension";
    case Constraint::Connectivity: return "connectivity";
    case Constraint::DegreeRange: return "degree-range";
    case Constraint::CupDegree: return "cup-degree";
    case Constraint::GradedCommutativity: return "graded-commutativity";
    case Constraint::RationalRank: return "rational-rank";
    case Constraint::TwoTorsion: return "two-torsion";
    case Constraint::Dimension: return "dimension";
    }
    return "unknown";
}

bool ValidationReport::violates(Constraint c) const
{
    return std::any_of(violations.begin(), violations.end(),
                       [c](const Violation& v) { return v.constraint == c; });
}

void check_structure(const PDComplexSpec& spec)
{
    if (!is_odd_prime(spec.p))
        throw StructuralError("p must be an odd prime, got " + std::to_string(spec.p));
    if (spec.n < 3)
        throw StructuralError("n must be at least 3, got " + std::to_string(spec.n));
    if (spec.k < 1)
        throw StructuralError("k must be at least 1, got " + std::to_string(spec.k));
    if (spec.k1 < 0 || spec.k1 > spec.k)
        throw StructuralError("k1 must lie in [0, k], got " + std::to_string(spec.k1));
    if (static_cast<int>(spec.r.size()) != spec.k1)
        throw StructuralError("r must list exactly k1 Bockstein exponents");
    for (int r : spec.r)
        if (r < 1)
            throw StructuralError("Bockstein exponents must be >= 1");
    if (spec.A.p() != spec.p)
        throw StructuralError("cup matrix is over the wrong prime");
    if (spec.A.rows() != static_cast<std::size_t>(spec.k) || spec.A.cols() != static_cast<std::size_t>(spec.k))
        throw StructuralError("cup matrix must be k x k");
}

void check_structure(const GeneralComplexSpec& spec)
{
    if (!is_odd_prime(spec.p))
        throw StructuralError("p must be an odd prime, got " + std::to_string(spec.p));
    if (spec.c.p() != spec.p)
        throw StructuralError("cup matrix is over the wrong prime");
    const std::size_t l = spec.gen_degrees.size();
    if (spec.c.rows() != l || spec.c.cols() != l)
        throw StructuralError("cup matrix must be l x l for l generators");
    if (!std::is_sorted(spec.gen_degrees.begin(), spec.gen_degrees.end()))
        throw StructuralError("generator degrees must be non-decreasing");
    for (int d : spec.gen_degrees)
        if (d < 1)
            throw StructuralError("generator degrees must be positive");
}

void check_structure(const ManifoldSpec& man)
{
    for (const auto& [q, exps] : man.torsion) {
        if (!is_odd_prime(q))
            throw StructuralError("torsion keys must be odd primes, got " + std::to_string(q));
        for (int e : exps)
            if (e < 1)
                throw StructuralError("torsion exponents must be >= 1");
    }
    if (man.rational_rank < 0)
        throw StructuralError("rational rank must be non-negative");
}

ValidationReport validate_pd(const PDComplexSpec& spec)
{
    check_structure(spec);
    ValidationReport report;
    const auto& A = spec.A;
    const Zp& f = A.field();
    const int k = spec.k, k1 = spec.k1;

    const bool singular = matrix_rank(A) < static_cast<std::size_t>(k);
    const bool forced_singular = spec.n % 2 == 1 && k1 % 2 == 1;
    if (singular || forced_singular) {
        std::string msg = "cup-product matrix A must be nonsingular mod " + std::to_string(spec.p);
        if (!singular)
            msg += " (forced singular: an odd-order skew-symmetric torsion block has zero determinant)";
        report.fail(Constraint::Nonsingular, msg);
    }
    if (forced_singular) {
        if (k1 == k)
            report.advisories.push_back(
                "no class exists with n odd, k odd and all of H^{n-1} torsion: the skew-symmetric cup matrix "
                "would have odd order and therefore be singular");
        else
            report.advisories.push_back(
                "n odd with an odd number of torsion generators: det A = det B * det E and the odd-order "
                "skew-symmetric block B is singular");
    }

    for (int i = k1; i < k; ++i)
        for (int j = 0; j < k1; ++j)
            if (A(i, j) != 0) {
                std::ostringstream msg;
                msg << "C block must vanish: a_" << i + 1 << j + 1 << " = " << A(i, j)
                    << " pairs a free x^* with a torsion y^*";
                report.fail(Constraint::CBlockZero, msg.str());
            }

    if (spec.n % 2 == 0) {
        for (int i = 0; i < k1; ++i)
            for (int j = i + 1; j < k1; ++j)
                if (A(i, j) != A(j, i)) {
                    std::ostringstream msg;
                    msg << "B block must be symmetric for n even: a_" << i + 1 << j + 1 << " = " << A(i, j)
                        << " but a_" << j + 1 << i + 1 << " = " << A(j, i);
                    report.fail(Constraint::BSymmetric, msg.str());
                }
    } else {
        for (int i = 0; i < k1; ++i)
            for (int j = i; j < k1; ++j) {
                if (i == j && A(i, i) != 0) {
                    report.fail(Constraint::BSkewSymmetric, "B block must be skew-symmetric for n odd: diagonal entry a_" +
                                                                std::to_string(i + 1) + std::to_string(i + 1) + " = " +
                                                                std::to_string(A(i, i)) + " must vanish");
                    continue;
                }
                if (A(i, j) != f.neg(A(j, i))) {
                    std::ostringstream msg;
                    msg << "B block must be skew-symmetric for n odd: a_" << i + 1 << j + 1 << " = " << A(i, j)
                        << ", a_" << j + 1 << i + 1 << " = " << A(j, i);
                    report.fail(Constraint::BSkewSymmetric, msg.str());
                }
            }
    }

    // beta_{r_j}(chi) has the terms a_ij [u_i, u_j] with r_j fixed, so each exponent
    // class annihilates chi separately only when B has no cross-exponent entries.
    for (int i = 0; i < k1; ++i)
        for (int j = 0; j < k1; ++j)
            if (spec.r[i] != spec.r[j] && A(i, j) != 0) {
                report.advisories.push_back(
                    "B pairs torsion generators of different exponents (a_" + std::to_string(i + 1) +
                    std::to_string(j + 1) + " != 0 with r_" + std::to_string(i + 1) + " != r_" +
                    std::to_string(j + 1) +
                    "): the individual Bocksteins do not annihilate chi and do not descend to the quotient");
                return report;
            }
    return report;
}

ValidationReport validate_general(const GeneralComplexSpec& spec)
{
    check_structure(spec);
    ValidationReport report;
    const int N = spec.N;
    if (N % 2 == 0 || N <= 3)
        report.fail(Constraint::TopDimension, "top dimension N must be odd and > 3, got " + std::to_string(N));
    const int m = spec.m();
    if (!(3 * (m - 1) > N - 2))
        report.fail(Constraint::Connectivity,
                    "connectivity requires 3(m-1) > N-2, got m = " + std::to_string(m));
    for (int d : spec.gen_degrees)
        if (d < m || d > N - 1)
            report.fail(Constraint::DegreeRange, "generator degree " + std::to_string(d) + " outside [m, N-1]");

    const Zp& f = spec.c.field();
    const std::size_t l = spec.size();
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            const int di = spec.gen_degrees[i], dj = spec.gen_degrees[j];
            const Residue cij = spec.c(i, j);
            if (di + dj != N) {
                if (cij != 0)
                    report.fail(Constraint::CupDegree, "c_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                           " must vanish: degrees do not sum to N");
                continue;
            }
            if (i < j) {
                const Residue expected = f.mul(f.sign(static_cast<long>(di) * dj), spec.c(j, i));
                if (cij != expected)
                    report.fail(Constraint::GradedCommutativity,
                                "c_" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                    " violates graded commutativity");
            }
        }
    return report;
}

ValidationReport validate_integral(const ManifoldSpec& man)
{
    check_structure(man);
    ValidationReport report;
    if (man.two_torsion)
        report.fail(Constraint::TwoTorsion, "H^{2m-1}(M; Z/2) must vanish (no 2-torsion)");
    if (man.rational_rank != 0)
        report.fail(Constraint::RationalRank, "H^{2m-1}(M; Q) must vanish, rational rank is " +
                                                  std::to_string(man.rational_rank));
    if (man.m <= 2)
        report.fail(Constraint::Dimension, "m must exceed 2, got " + std::to_string(man.m));
    return report;
}

std::string render(const WedgeSummand& s, const std::string& prime)
{
    std::ostringstream out;
    if (s.kind == WedgeSummand::Kind::Sphere) {
        out << "S^" << s.dim;
    } else {
        out << "P^" << s.dim << '(' << prime;
        if (s.exponent != 1)
            out << '^' << s.exponent;
        out << ')';
    }
    return out.str();
}

std::string render(const WedgeSummands& s, const std::string& prime)
{
    if (s.empty())
        return "*";
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += " v ";
        out += render(s[i], prime);
    }
    return out;
}

WedgeSummands skeleton_splitting(const PDComplexSpec& spec)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec("skeleton_splitting: spec does not validate");
    WedgeSummands out;
    for (int i = 0; i < spec.k1; ++i)
        out.push_back(WedgeSummand::moore(spec.n, spec.r[i]));
    for (int i = spec.k1; i < spec.k; ++i) {
        out.push_back(WedgeSummand::sphere(spec.n - 1));
        out.push_back(WedgeSummand::sphere(spec.n));
    }
    return out;
}

GeneralComplexSpec to_general(const PDComplexSpec& spec)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec("to_general: spec does not validate");
    if (spec.n <= 3)
        throw Unsupported("to_general: requires n > 3 so that 3(n-2) > 2n-3");
    const Zp f(spec.p);
    const int k = spec.k, n = spec.n;
    GeneralComplexSpec g;
    g.p = spec.p;
    g.N = 2 * n - 1;
    g.gen_degrees.assign(k, n - 1);
    g.gen_degrees.insert(g.gen_degrees.end(), k, n);
    g.c = FpMatrix(f, 2 * k, 2 * k);
    // a_{k+j}^* a_i^* = y_j^* x_i^* = A(i,j) z^*; the other order picks up (-1)^{n(n-1)} = 1.
    const Residue swap_sign = f.sign(static_cast<long>(n) * (n - 1));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            g.c.set(i, k + j, spec.A(i, j));
            g.c.set(k + j, i, f.mul(swap_sign, spec.A(i, j)));
        }
    return g;
}

bool has_nontrivial_cup(const GeneralComplexSpec& spec)
{
    for (std::size_t i = 0; i < spec.size(); ++i)
        for (std::size_t j = 0; j < spec.size(); ++j)
            if (spec.c(i, j) != 0 && spec.gen_degrees[i] + spec.gen_degrees[j] == spec.N)
                return true;
    return false;
}

}  // namespace pdloop
