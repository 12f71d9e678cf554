#pragma once

#include "pdloop/complex_model.hpp"
#include "pdloop/decompose.hpp"
#include "pdloop/series.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdloop {

/// Loop-equivalence invariant of a class with n = 2m: rational rank k2 and the
/// torsion exponents as a sorted multiset.
struct ClassInvariant {
    std::uint32_t p = 3;
    int m = 0;
    int k2 = 0;
    std::vector<int> torsion;

    friend bool operator==(const ClassInvariant&, const ClassInvariant&) = default;
};

struct IntegralInvariant {
    int m = 0;
    std::map<std::uint32_t, std::vector<int>> torsion;  // sorted multisets, empty lists dropped

    friend bool operator==(const IntegralInvariant&, const IntegralInvariant&) = default;
};

enum class Verdict { Equivalent, NotEquivalent, Incomparable };

std::string to_string(Verdict v);

struct Classification {
    Verdict verdict = Verdict::Incomparable;
    ClassInvariant a;
    ClassInvariant b;
    std::string reason;
};

struct IntegralClassification {
    Verdict verdict = Verdict::Incomparable;
    IntegralInvariant a;
    IntegralInvariant b;
    std::string reason;
};

/// Throws InvalidSpec unless validate_pd passes, Unsupported for n odd or m <= 2.
ClassInvariant class_invariant(const PDComplexSpec& spec);

/// Equivalent iff the rational ranks and the torsion multisets agree; the cup
/// matrix plays no role. Different p or m gives Incomparable.
Classification classify(const PDComplexSpec& a, const PDComplexSpec& b);

/// Throws InvalidSpec with the report's first violation if validate_integral fails.
IntegralInvariant integral_invariant(const ManifoldSpec& man);

/// Equivalent iff the exponent multisets agree at every odd prime.
/// Different m gives Incomparable.
IntegralClassification classify_integral(const ManifoldSpec& a, const ManifoldSpec& b);

/// The p-local class of a manifold at q: p = q, n = 2m, one torsion generator
/// per exponent, A = identity. Empty when there is no q-torsion (the
/// localization is a sphere S^{4m-1}).
std::optional<PDComplexSpec> local_spec(const ManifoldSpec& man, std::uint32_t q);

struct LocalDecomposition {
    std::uint32_t prime;
    Decomposition decomposition;
    /// Product of factor series equals the loop homology series of the local spec.
    bool series_matches = false;
};

struct IntegralDecomposition {
    /// Q = product over q of S^{2m-1}{q^{s_q}}, s_q the largest exponent at q.
    int m = 0;
    std::vector<std::pair<std::uint32_t, int>> q_factors;
    /// 4m - 1.
    int loop_sphere_dim = 0;
    /// Cells of I: P^{2m}(q^r) for the exponents left after removing one s_q at each q.
    std::vector<std::pair<std::uint32_t, WedgeSummand>> i_cells;
    std::vector<LocalDecomposition> local;

    /// e.g. "S^5{3^2} x Loops(S^11) x Loops(G), G = I v (I ^ (S^5{3^2} x Loops(S^11))), I = P^6(3)"
    std::string render() const;
};

/// Throws InvalidSpec if validate_integral fails.
IntegralDecomposition integral_decompose(const ManifoldSpec& man, int cap);

}  // namespace pdloop
