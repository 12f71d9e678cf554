#pragma once

#include "pdloop/fp.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace pdloop {

/// Degrees and display names of the generators of a free graded algebra.
struct GeneratorTable {
    std::vector<int> degrees;
    std::vector<std::string> names;

    std::size_t size() const noexcept { return degrees.size(); }
    /// Tables compare by degrees only; names are cosmetic.
    friend bool operator==(const GeneratorTable& a, const GeneratorTable& b) { return a.degrees == b.degrees; }
};

using Word = std::vector<std::uint16_t>;

int word_degree(const GeneratorTable& table, const Word& word);

/// Z/p-linear combination of words in a free graded tensor algebra.
/// Zero coefficients are never stored and all words share one degree.
class TensorElement {
public:
    using Terms = std::map<Word, Residue>;

    /// The zero element.
    TensorElement(Zp field, std::shared_ptr<const GeneratorTable> table);

    static TensorElement unit(Zp field, std::shared_ptr<const GeneratorTable> table);
    static TensorElement generator(Zp field, std::shared_ptr<const GeneratorTable> table, std::size_t index,
                                   Residue coeff = 1);
    static TensorElement word(Zp field, std::shared_ptr<const GeneratorTable> table, Word w, Residue coeff = 1);

    const Zp& field() const noexcept { return field_; }
    const GeneratorTable& table() const noexcept { return *table_; }
    const std::shared_ptr<const GeneratorTable>& table_ptr() const noexcept { return table_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Degree of the (homogeneous) element; empty for zero.
    std::optional<int> degree() const;
    Residue coefficient(const Word& w) const;

    /// Adds c * w. Throws StructuralError on a degree mismatch or unknown letter.
    void add_term(const Word& w, Residue c);

    TensorElement& operator+=(const TensorElement& other);
    TensorElement& operator-=(const TensorElement& other);
    TensorElement scaled(Residue c) const;
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    friend TensorElement operator*(const TensorElement& a, const TensorElement& b);
    friend bool operator==(const TensorElement& a, const TensorElement& b);

    /// "1·u1v1 + 4·v1u1", words in lexicographic index order, "0" for zero.
    std::string to_string() const;

private:
    void check_compatible(const TensorElement& other) const;

    Zp field_;
    std::shared_ptr<const GeneratorTable> table_;
    Terms terms_;
};

/// xy - (-1)^{|x||y|} yx. Throws StructuralError when the generator tables differ.
TensorElement lie_bracket(const TensorElement& x, const TensorElement& y);

}  // namespace pdloop
