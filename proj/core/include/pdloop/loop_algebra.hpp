#pragma once

#include "pdloop/attach.hpp"
#include "pdloop/complex_model.hpp"
#include "pdloop/fp_matrix.hpp"
#include "pdloop/series.hpp"
#include "pdloop/tensor.hpp"

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <vector>

namespace pdloop {

/// All words of degree d in lexicographic index order.
/// Throws Unsupported when there are more than `limit` of them.
std::vector<Word> enumerate_words(const GeneratorTable& table, int d, std::size_t limit = 1u << 18);

/// The quotient A = T(V)/(chi) computed degree by degree up to `cap`.
///
/// Degree d is built from the lower degrees: T_d / (sum_g g I_{d-|g|}) is the
/// direct sum over generators g of g A_{d-|g|}, and A_d is that space modulo the
/// images of chi b for the basis words b of A_{d-|chi|}. The basis of A_d
/// consists of words (those not hit by a pivot), listed lexicographically, and
/// every element has a unique coordinate vector over it.
class QuotientAlgebra {
public:
    /// Free algebra: no relation.
    QuotientAlgebra(Zp field, std::shared_ptr<const GeneratorTable> table, int cap);
    /// chi must be homogeneous of positive degree (or zero).
    QuotientAlgebra(const TensorElement& chi, int cap);

    int cap() const noexcept { return cap_; }
    const Zp& field() const noexcept { return field_; }
    const GeneratorTable& table() const noexcept { return *table_; }
    const std::shared_ptr<const GeneratorTable>& table_ptr() const noexcept { return table_; }
    const TensorElement& relation() const noexcept { return chi_; }

    std::size_t dim(int d) const { return level(d).basis_columns.size(); }
    const Integer& tensor_dim(int d) const { return tensor_dims_[d]; }
    Integer ideal_dim(int d) const { return tensor_dims_[d] - Integer(dim(d)); }
    const Word& basis_word(int d, std::size_t i) const { return level(d).basis_words[i]; }

    /// dim A_d for d = 0..cap.
    TruncatedSeries dims() const;

    /// Coordinates over the basis of A_d of the image of x (d = deg x).
    std::vector<Residue> normal_form(const TensorElement& x) const;
    std::vector<Residue> normal_form(const Word& w) const;
    /// g * a for a given by coordinates in A_d; result lives in A_{d+|g|}.
    std::vector<Residue> left_multiply(std::size_t g, int d, const std::vector<Residue>& a) const;
    /// Coordinates of b * g for the i-th basis word b of A_d.
    std::vector<Residue> basis_times_generator(int d, std::size_t i, std::size_t g) const;

    bool in_ideal(const TensorElement& x) const;
    bool in_ideal(const Word& w) const { return is_zero(normal_form(w)); }

    TensorElement element(int d, const std::vector<Residue>& coords) const;

private:
    struct Level {
        std::vector<std::size_t> block_offset;  // per generator; npos if |g| > d
        std::size_t width = 0;                  // dimension of the sum of g A_{d-|g|}
        std::optional<RowSpace> relations;
        std::vector<long> column_to_basis;      // -1 at pivot columns
        std::vector<std::size_t> basis_columns;
        std::vector<Word> basis_words;
    };

    void build();
    const Level& level(int d) const;
    std::vector<Residue> reduce_to_basis(const Level& lv, std::vector<Residue> v) const;

    Zp field_;
    std::shared_ptr<const GeneratorTable> table_;
    TensorElement chi_;
    int cap_;
    std::vector<Integer> tensor_dims_;
    std::vector<Level> levels_;
};

/// 1/(1 - sum_i t^{deg_i}) truncated at cap. Throws StructuralError on a
/// degree below 1; small degrees are cross-checked against word enumeration.
TruncatedSeries tensor_dims(const std::vector<int>& gen_degrees, int cap);

TruncatedSeries quotient_dims(const PDComplexSpec& spec, int cap);
TruncatedSeries quotient_dims(const GeneralComplexSpec& spec, int cap, const std::map<int, long long>& units = {});

/// 1/(1 - sum_i t^{|a_i|-1} + t^{N-2}). Throws Unsupported unless some cup
/// product in complementary degrees is nonzero.
TruncatedSeries closed_form_dims(const GeneralComplexSpec& spec, int cap);
TruncatedSeries closed_form_dims(const PDComplexSpec& spec, int cap);

/// Whether w lies in the two-sided ideal generated by xi. Throws Unsupported
/// if deg w exceeds cap.
bool ideal_membership(const TensorElement& xi, const TensorElement& w, int cap);

/// For every word w with |w| + M <= cap, w u is in (xi) exactly when w is, and
/// right multiplication by u is injective on the quotient in those degrees.
/// Preconditions (checked, StructuralError): xi nonzero of odd degree, a sum of
/// length-two words with coefficient of g_i g_j nonzero iff that of g_j g_i is,
/// and u a nonzero combination of generators of one degree M.
bool right_multiplication_check(const TensorElement& xi, const TensorElement& u, int cap);

/// Whether each beta_r maps the ideal (chi) into itself up to cap, checked on
/// chi b for the basis words b of the quotient; by the Leibniz rule this covers
/// the whole ideal.
bool bockstein_descends(const PDComplexSpec& spec, int cap);
bool bockstein_descends(const TensorElement& chi, const BocksteinTable& table, int cap);

/// refined[r-1][d] = rank of beta_r : A_d -> A_{d-1} for r = 1..max_r.
/// Requires bockstein_descends; throws InvalidSpec otherwise.
std::vector<TruncatedSeries> bockstein_refined_series(const PDComplexSpec& spec, int cap, int max_r);

}  // namespace pdloop
