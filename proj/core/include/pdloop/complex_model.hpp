#pragma once

#include "pdloop/fp_matrix.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace pdloop {

/// A mod-p Poincare complex of dimension 2n-1 that is (n-2)-connected with
/// H^{n-1} of rank k.
///
/// Cohomology basis: x_i^* in degree n-1 and y_i^* in degree n, 1 <= i <= k.
/// The first k1 indices are torsion, beta_{r_i}(x_i^*) = y_i^*. The cup
/// product is recorded by A with y_j^* x_i^* = A(i, j) z^*.
struct PDComplexSpec {
    std::uint32_t p = 3;
    int n = 6;
    int k = 1;
    int k1 = 0;
    std::vector<int> r;
    FpMatrix A{Zp(3), 0, 0};

    int m() const noexcept { return n / 2; }
    int k2() const noexcept { return k - k1; }
};

/// General (m-1)-connected complex with cells a_1..a_l below a single top cell z
/// of odd dimension N: a_j^* a_i^* = c(i, j) z^* whenever |a_i| + |a_j| = N.
struct GeneralComplexSpec {
    std::uint32_t p = 3;
    int N = 11;
    std::vector<int> gen_degrees;
    FpMatrix c{Zp(3), 0, 0};

    /// Connectivity parameter |a_1|.
    int m() const { return gen_degrees.empty() ? N : gen_degrees.front(); }
    std::size_t size() const noexcept { return gen_degrees.size(); }
};

/// Integral data for a (2m-2)-connected closed (4m-1)-manifold: odd torsion of
/// H^{2m} per prime, rank of H^{2m-1}(M;Q), and whether 2-torsion is present.
struct ManifoldSpec {
    int m = 3;
    std::map<std::uint32_t, std::vector<int>> torsion;
    int rational_rank = 0;
    bool two_torsion = false;
};

enum class Constraint {
    Nonsingular,
    CBlockZero,
    BSymmetric,
    BSkewSymmetric,
    TopDimension,
    Connectivity,
    DegreeRange,
    CupDegree,
    GradedCommutativity,
    RationalRank,
    TwoTorsion,
    Dimension,
};

std::string to_string(Constraint c);

struct Violation {
    Constraint constraint;
    std::string message;
};

/// Every violated constraint, not just the first. Advisories explain
/// violations that follow from a structural impossibility.
struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    std::vector<std::string> advisories;

    void fail(Constraint c, std::string message)
    {
        ok = false;
        violations.push_back({c, std::move(message)});
    }
    bool violates(Constraint c) const;
};

/// Throws StructuralError when the fields are inconsistent (prime, ranges, shapes).
void check_structure(const PDComplexSpec& spec);
void check_structure(const GeneralComplexSpec& spec);
void check_structure(const ManifoldSpec& spec);

/// Cup-product constraints for a class in T^p_{k,n}: A nonsingular, the
/// torsion-by-free block C zero, and the torsion block B symmetric (n even)
/// or skew-symmetric (n odd).
ValidationReport validate_pd(const PDComplexSpec& spec);

ValidationReport validate_general(const GeneralComplexSpec& spec);

/// Hypotheses of the integral classification: no 2-torsion, H^{2m-1}(M;Q) = 0, m > 2.
ValidationReport validate_integral(const ManifoldSpec& man);

struct WedgeSummand {
    enum class Kind { Moore, Sphere };
    Kind kind;
    /// Moore: n of P^n(p^r) (top cell); Sphere: d of S^d.
    int dim;
    /// Moore only.
    int exponent = 0;

    static WedgeSummand moore(int n, int r) { return {Kind::Moore, n, r}; }
    static WedgeSummand sphere(int d) { return {Kind::Sphere, d, 0}; }
    friend bool operator==(const WedgeSummand&, const WedgeSummand&) = default;
};

using WedgeSummands = std::vector<WedgeSummand>;

/// "P^6(p^2)", "S^5"; `prime` replaces the letter p when given.
std::string render(const WedgeSummand& s, const std::string& prime = "p");
std::string render(const WedgeSummands& s, const std::string& prime = "p");

/// Wedge splitting of the (2n-2)-skeleton: one P^n(p^{r_i}) per torsion
/// generator, then an (S^{n-1}, S^n) pair per free generator.
WedgeSummands skeleton_splitting(const PDComplexSpec& spec);

/// Re-express the complex in general form: k generators of degree n-1 (x_i)
/// followed by k of degree n (y_j), N = 2n-1, with c filled from A and
/// completed by graded commutativity. Throws InvalidSpec if validate_pd
/// fails and Unsupported for n <= 3.
GeneralComplexSpec to_general(const PDComplexSpec& spec);

/// True iff some c_ij is nonzero mod p (a nontrivial cup product in
/// complementary intermediate degrees).
bool has_nontrivial_cup(const GeneralComplexSpec& spec);

}  // namespace pdloop
