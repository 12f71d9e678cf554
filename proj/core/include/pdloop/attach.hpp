#pragma once

#include "pdloop/complex_model.hpp"
#include "pdloop/tensor.hpp"

#include <map>
#include <memory>
#include <vector>

namespace pdloop {

/// Loop generators u_i = tau(a_i) of degree |a_i| - 1, named u1..ul.
std::shared_ptr<const GeneratorTable> loop_generators(const GeneralComplexSpec& spec);

/// Loop generators of a PD complex: u1..uk in degree n-2, then v1..vk in degree n-1.
std::shared_ptr<const GeneratorTable> loop_generators(const PDComplexSpec& spec);

/// Homology Bocksteins on generators: beta_{r}(g) = target when r equals the
/// generator's exponent, zero otherwise.
struct BocksteinTable {
    std::vector<int> exponent;  // 0 when no Bockstein starts at the generator
    std::vector<int> target;    // -1 when exponent is 0

    explicit BocksteinTable(std::size_t generators = 0) : exponent(generators, 0), target(generators, -1) {}

    /// beta_{r_i}(v_i) = u_i for the torsion pairs of a PD spec.
    static BocksteinTable for_pd(const PDComplexSpec& spec);

    /// Distinct exponents in increasing order.
    std::vector<int> exponents() const;
    int max_exponent() const;
};

/// beta_r extended to words by beta(xy) = beta(x)y + (-1)^{|x|} x beta(y).
TensorElement bockstein_apply(const TensorElement& x, int r, const BocksteinTable& table);

/// sum_s (-1)^s b_s sum_{i<j, |a_i| = s, |a_j| = N - s} c_ij [u_i, u_j].
/// `units` maps s to b_s (missing entries default to 1); throws Error when
/// some b_s is divisible by p and InvalidSpec when the spec does not validate.
TensorElement build_chi_general(const GeneralComplexSpec& spec, const std::map<int, long long>& units = {});

/// sum_{i,j} a_ij [u_i, v_j]. Throws InvalidSpec unless validate_pd passes.
TensorElement build_chi_pd(const PDComplexSpec& spec);

/// The same sum without validating the cup matrix (structure is still checked).
TensorElement build_chi_pd_unchecked(const PDComplexSpec& spec);

/// True iff sum over the distinct exponents s of beta_s(chi) vanishes.
/// Runs on invalid specs too, which is the point.
bool bockstein_chi_check(const PDComplexSpec& spec);

}  // namespace pdloop
