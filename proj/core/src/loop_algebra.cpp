#include "pdloop/loop_algebra.hpp"

#include "pdloop/error.hpp"

#include <algorithm>
#include <limits>

namespace pdloop {

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
constexpr std::size_t max_width = std::size_t{1} << 18;
constexpr std::size_t max_cells = std::size_t{1} << 26;

void words_rec(const GeneratorTable& table, int d, Word& prefix, std::vector<Word>& out, std::size_t limit)
{
    if (d == 0) {
        if (out.size() >= limit)
            throw Unsupported("more than " + std::to_string(limit) + " words in one degree");
        out.push_back(prefix);
        return;
    }
    for (std::size_t g = 0; g < table.size(); ++g) {
        if (table.degrees[g] > d)
            continue;
        prefix.push_back(static_cast<std::uint16_t>(g));
        words_rec(table, d - table.degrees[g], prefix, out, limit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Word> enumerate_words(const GeneratorTable& table, int d, std::size_t limit)
{
    for (int deg : table.degrees)
        if (deg < 1)
            throw StructuralError("generators must have positive degree");
    std::vector<Word> out;
    if (d < 0)
        return out;
    Word prefix;
    words_rec(table, d, prefix, out, limit);
    return out;
}

TruncatedSeries tensor_dims(const std::vector<int>& gen_degrees, int cap)
{
    TruncatedSeries denom = TruncatedSeries::one(cap);
    for (int deg : gen_degrees) {
        if (deg < 1)
            throw StructuralError("generators must have positive degree, got " + std::to_string(deg));
        if (deg <= cap)
            denom.set(deg, denom[deg] - 1);
    }
    TruncatedSeries dims = series_inv(denom);

    GeneratorTable table{gen_degrees, {}};
    for (int d = 0; d <= cap; ++d) {
        if (dims[d] > 4096)
            break;
        if (Integer(enumerate_words(table, d).size()) != dims[d])
            throw InternalError("word count disagrees with 1/(1 - g(t)) in degree " + std::to_string(d));
    }
    return dims;
}

QuotientAlgebra::QuotientAlgebra(Zp field, std::shared_ptr<const GeneratorTable> table, int cap)
    : field_(field), table_(table), chi_(field, table), cap_(cap)
{
    build();
}

QuotientAlgebra::QuotientAlgebra(const TensorElement& chi, int cap)
    : field_(chi.field()), table_(chi.table_ptr()), chi_(chi), cap_(cap)
{
    if (!chi.is_zero() && *chi.degree() < 1)
        throw StructuralError("the relation must have positive degree");
    build();
}

const QuotientAlgebra::Level& QuotientAlgebra::level(int d) const
{
    if (d < 0 || d > cap_)
        throw Error("degree " + std::to_string(d) + " outside the computed range [0, " + std::to_string(cap_) + "]");
    return levels_[d];
}

void QuotientAlgebra::build()
{
    if (cap_ < 0)
        throw StructuralError("cap must be non-negative");
    tensor_dims_ = tensor_dims(table_->degrees, cap_).coeffs();
    levels_.resize(cap_ + 1);
    const std::size_t ngen = table_->size();

    Level& unit = levels_[0];
    unit.width = 1;
    unit.block_offset.assign(ngen, npos);
    unit.relations.emplace(field_, 1);
    unit.column_to_basis = {0};
    unit.basis_columns = {0};
    unit.basis_words = {Word{}};

    const int rel_degree = chi_.is_zero() ? -1 : *chi_.degree();
    for (int d = 1; d <= cap_; ++d) {
        Level& lv = levels_[d];
        lv.block_offset.assign(ngen, npos);
        for (std::size_t g = 0; g < ngen; ++g) {
            const int rest = d - table_->degrees[g];
            if (rest < 0)
                continue;
            lv.block_offset[g] = lv.width;
            lv.width += levels_[rest].basis_columns.size();
        }
        if (lv.width > max_width)
            throw Unsupported("quotient algebra too large in degree " + std::to_string(d) + " (" +
                              std::to_string(lv.width) + " spanning words); lower the cap");
        lv.relations.emplace(field_, lv.width);

        if (rel_degree > 0 && d >= rel_degree) {
            const int rest = d - rel_degree;
            const std::size_t rows = levels_[rest].basis_columns.size();
            if (rows * lv.width > max_cells)
                throw Unsupported("relation matrix too large in degree " + std::to_string(d) + "; lower the cap");
            for (std::size_t b = 0; b < rows; ++b) {
                std::vector<Residue> row(lv.width, 0);
                for (const auto& [w, c] : chi_.terms()) {
                    std::vector<Residue> v(levels_[rest].basis_columns.size(), 0);
                    v[b] = 1;
                    int deg = rest;
                    for (std::size_t pos = w.size(); pos-- > 1;) {
                        v = left_multiply(w[pos], deg, v);
                        deg += table_->degrees[w[pos]];
                    }
                    const std::size_t off = lv.block_offset[w[0]];
                    for (std::size_t i = 0; i < v.size(); ++i)
                        if (v[i])
                            row[off + i] = field_.add(row[off + i], field_.mul(c, v[i]));
                }
                lv.relations->insert(std::move(row));
            }
        }

        lv.column_to_basis.assign(lv.width, -1);
        for (std::size_t g = 0; g < ngen; ++g) {
            if (lv.block_offset[g] == npos)
                continue;
            const Level& sub = levels_[d - table_->degrees[g]];
            for (std::size_t i = 0; i < sub.basis_columns.size(); ++i) {
                const std::size_t col = lv.block_offset[g] + i;
                if (lv.relations->is_pivot(col))
                    continue;
                lv.column_to_basis[col] = static_cast<long>(lv.basis_columns.size());
                lv.basis_columns.push_back(col);
                Word w{static_cast<std::uint16_t>(g)};
                w.insert(w.end(), sub.basis_words[i].begin(), sub.basis_words[i].end());
                lv.basis_words.push_back(std::move(w));
            }
        }
    }
}

std::vector<Residue> QuotientAlgebra::reduce_to_basis(const Level& lv, std::vector<Residue> v) const
{
    lv.relations->reduce(v);
    std::vector<Residue> out(lv.basis_columns.size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = v[lv.basis_columns[i]];
    return out;
}

std::vector<Residue> QuotientAlgebra::left_multiply(std::size_t g, int d, const std::vector<Residue>& a) const
{
    const Level& src = level(d);
    if (a.size() != src.basis_columns.size())
        throw StructuralError("coordinate vector has the wrong length for degree " + std::to_string(d));
    const Level& lv = level(d + table_->degrees.at(g));
    std::vector<Residue> v(lv.width, 0);
    std::copy(a.begin(), a.end(), v.begin() + static_cast<std::ptrdiff_t>(lv.block_offset[g]));
    return reduce_to_basis(lv, std::move(v));
}

std::vector<Residue> QuotientAlgebra::normal_form(const Word& w) const
{
    std::vector<Residue> v{1};
    int deg = 0;
    for (std::size_t pos = w.size(); pos-- > 0;) {
        v = left_multiply(w[pos], deg, v);
        deg += table_->degrees[w[pos]];
    }
    return v;
}

std::vector<Residue> QuotientAlgebra::normal_form(const TensorElement& x) const
{
    if (!(x.table() == *table_) || !(x.field() == field_))
        throw StructuralError("element does not belong to this algebra");
    if (x.is_zero())
        return {};
    std::vector<Residue> out(dim(*x.degree()), 0);
    for (const auto& [w, c] : x.terms()) {
        auto v = normal_form(w);
        for (std::size_t i = 0; i < v.size(); ++i)
            out[i] = field_.add(out[i], field_.mul(c, v[i]));
    }
    return out;
}

std::vector<Residue> QuotientAlgebra::basis_times_generator(int d, std::size_t i, std::size_t g) const
{
    Word w = basis_word(d, i);
    w.push_back(static_cast<std::uint16_t>(g));
    return normal_form(w);
}

bool QuotientAlgebra::in_ideal(const TensorElement& x) const
{
    return is_zero(normal_form(x));
}

TensorElement QuotientAlgebra::element(int d, const std::vector<Residue>& coords) const
{
    TensorElement out(field_, table_);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (coords[i])
            out.add_term(basis_word(d, i), coords[i]);
    return out;
}

TruncatedSeries QuotientAlgebra::dims() const
{
    TruncatedSeries s(cap_);
    for (int d = 0; d <= cap_; ++d)
        s.set(d, Integer(dim(d)));
    return s;
}

TruncatedSeries quotient_dims(const PDComplexSpec& spec, int cap)
{
    return QuotientAlgebra(build_chi_pd(spec), cap).dims();
}

TruncatedSeries quotient_dims(const GeneralComplexSpec& spec, int cap, const std::map<int, long long>& units)
{
    return QuotientAlgebra(build_chi_general(spec, units), cap).dims();
}

TruncatedSeries closed_form_dims(const GeneralComplexSpec& spec, int cap)
{
    if (!validate_general(spec).ok)
        throw InvalidSpec("closed_form_dims: spec does not validate");
    if (!has_nontrivial_cup(spec))
        throw Unsupported("closed_form_dims: no nontrivial cup product in complementary degrees");
    TruncatedSeries denom = TruncatedSeries::one(cap);
    for (int deg : spec.gen_degrees)
        if (deg - 1 <= cap)
            denom.set(deg - 1, denom[deg - 1] - 1);
    if (spec.N - 2 <= cap)
        denom.set(spec.N - 2, denom[spec.N - 2] + 1);
    return series_inv(denom);
}

TruncatedSeries closed_form_dims(const PDComplexSpec& spec, int cap)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec("closed_form_dims: spec does not validate");
    // Same series as for the general form; written out so n = 3 is covered too.
    return series_inv(polynomial_series(cap, {{0, 1}, {spec.n - 2, -spec.k}, {spec.n - 1, -spec.k}, {2 * spec.n - 3, 1}}));
}

bool ideal_membership(const TensorElement& xi, const TensorElement& w, int cap)
{
    if (w.is_zero())
        return true;
    const int d = *w.degree();
    if (d > cap)
        throw Unsupported("ideal_membership: element degree exceeds the cap");
    return QuotientAlgebra(xi, d).in_ideal(w);
}

namespace {

void check_right_multiplication_preconditions(const TensorElement& xi, const TensorElement& u)
{
    if (xi.is_zero())
        throw StructuralError("right_multiplication_check: xi must be nonzero");
    if (*xi.degree() % 2 == 0)
        throw StructuralError("right_multiplication_check: xi must have odd degree");
    for (const auto& [w, c] : xi.terms()) {
        if (w.size() != 2)
            throw StructuralError("right_multiplication_check: xi must be a sum of products of two generators");
        if (xi.coefficient(Word{w[1], w[0]}) == 0)
            throw StructuralError("right_multiplication_check: coefficient pattern of xi must be symmetric");
    }
    if (u.is_zero())
        throw StructuralError("right_multiplication_check: u must be nonzero");
    for (const auto& [w, c] : u.terms())
        if (w.size() != 1)
            throw StructuralError("right_multiplication_check: u must be a combination of generators");
}

}  // namespace

bool right_multiplication_check(const TensorElement& xi, const TensorElement& u, int cap)
{
    check_right_multiplication_preconditions(xi, u);
    const int M = *u.degree();
    const QuotientAlgebra A(xi, cap);
    const Zp& f = A.field();

    auto times_u = [&](const Word& w) {
        std::vector<Residue> out;
        for (const auto& [gw, c] : u.terms()) {
            Word x = w;
            x.push_back(gw[0]);
            auto v = A.normal_form(x);
            if (out.empty())
                out.assign(v.size(), 0);
            for (std::size_t i = 0; i < v.size(); ++i)
                out[i] = f.add(out[i], f.mul(c, v[i]));
        }
        return out;
    };

    for (int d = 0; d + M <= cap; ++d) {
        for (const Word& w : enumerate_words(A.table(), d))
            if (A.in_ideal(w) != is_zero(times_u(w)))
                return false;
        RowSpace image(f, A.dim(d + M));
        for (std::size_t i = 0; i < A.dim(d); ++i)
            image.insert(times_u(A.basis_word(d, i)));
        if (image.rank() != A.dim(d))
            return false;
    }
    return true;
}

bool bockstein_descends(const TensorElement& chi, const BocksteinTable& table, int cap)
{
    if (chi.is_zero())
        return true;
    const QuotientAlgebra A(chi, cap);
    const int rel = *chi.degree();
    for (int r : table.exponents()) {
        for (int d = 0; d + rel <= cap; ++d)
            for (std::size_t i = 0; i < A.dim(d); ++i) {
                auto y = chi * TensorElement::word(A.field(), A.table_ptr(), A.basis_word(d, i));
                if (!A.in_ideal(bockstein_apply(y, r, table)))
                    return false;
            }
    }
    return true;
}

bool bockstein_descends(const PDComplexSpec& spec, int cap)
{
    return bockstein_descends(build_chi_pd(spec), BocksteinTable::for_pd(spec), cap);
}

std::vector<TruncatedSeries> bockstein_refined_series(const PDComplexSpec& spec, int cap, int max_r)
{
    if (!bockstein_descends(spec, cap))
        throw InvalidSpec("Bocksteins do not descend to the quotient");
    const QuotientAlgebra A(build_chi_pd(spec), cap);
    const auto table = BocksteinTable::for_pd(spec);
    std::vector<TruncatedSeries> out;
    for (int r = 1; r <= max_r; ++r) {
        TruncatedSeries s(cap);
        for (int d = 1; d <= cap; ++d) {
            RowSpace image(A.field(), A.dim(d - 1));
            for (std::size_t i = 0; i < A.dim(d); ++i) {
                auto b = TensorElement::word(A.field(), A.table_ptr(), A.basis_word(d, i));
                auto v = A.normal_form(bockstein_apply(b, r, table));
                if (!v.empty())
                    image.insert(std::move(v));
            }
            s.set(d, Integer(image.rank()));
        }
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace pdloop
