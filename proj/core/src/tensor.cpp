#include "pdloop/tensor.hpp"

#include "pdloop/error.hpp"

#include <sstream>

namespace pdloop {

int word_degree(const GeneratorTable& table, const Word& word)
{
    int d = 0;
    for (auto g : word) {
        if (g >= table.size())
            throw StructuralError("word uses generator index " + std::to_string(g) + " outside the table");
        d += table.degrees[g];
    }
    return d;
}

TensorElement::TensorElement(Zp field, std::shared_ptr<const GeneratorTable> table)
    : field_(field), table_(std::move(table))
{
    if (!table_)
        throw StructuralError("tensor element needs a generator table");
}

TensorElement TensorElement::unit(Zp field, std::shared_ptr<const GeneratorTable> table)
{
    return word(field, std::move(table), {}, 1);
}

TensorElement TensorElement::generator(Zp field, std::shared_ptr<const GeneratorTable> table, std::size_t index,
                                       Residue coeff)
{
    return word(field, std::move(table), Word{static_cast<std::uint16_t>(index)}, coeff);
}

TensorElement TensorElement::word(Zp field, std::shared_ptr<const GeneratorTable> table, Word w, Residue coeff)
{
    TensorElement e(field, std::move(table));
    e.add_term(w, coeff);
    return e;
}

std::optional<int> TensorElement::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    return word_degree(*table_, terms_.begin()->first);
}

Residue TensorElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? 0 : it->second;
}

void TensorElement::add_term(const Word& w, Residue c)
{
    c = field_.reduce(c);
    if (c == 0)
        return;
    const int d = word_degree(*table_, w);
    if (!terms_.empty() && d != *degree())
        throw StructuralError("tensor elements must be homogeneous");
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second = field_.add(it->second, c);
        if (it->second == 0)
            terms_.erase(it);
    }
}

void TensorElement::check_compatible(const TensorElement& other) const
{
    if (!(field_ == other.field_))
        throw StructuralError("tensor elements over different primes");
    if (table_ != other.table_ && !(*table_ == *other.table_))
        throw StructuralError("tensor elements over different generator tables");
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    check_compatible(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    check_compatible(other);
    for (const auto& [w, c] : other.terms_)
        add_term(w, field_.neg(c));
    return *this;
}

TensorElement TensorElement::scaled(Residue c) const
{
    TensorElement out(field_, table_);
    c = field_.reduce(c);
    if (c == 0)
        return out;
    for (const auto& [w, a] : terms_)
        out.terms_.emplace(w, field_.mul(a, c));
    return out;
}

TensorElement operator*(const TensorElement& a, const TensorElement& b)
{
    a.check_compatible(b);
    TensorElement out(a.field_, a.table_);
    const Zp& f = a.field_;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add_term(w, f.mul(ca, cb));
        }
    return out;
}

bool operator==(const TensorElement& a, const TensorElement& b)
{
    return a.field_ == b.field_ && *a.table_ == *b.table_ && a.terms_ == b.terms_;
}

std::string TensorElement::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        out << c << "·";
        if (w.empty())
            out << "1";
        for (auto g : w) {
            if (g < table_->names.size())
                out << table_->names[g];
            else
                out << 'g' << g + 1;
        }
    }
    return out.str();
}

TensorElement lie_bracket(const TensorElement& x, const TensorElement& y)
{
    if (x.is_zero() || y.is_zero()) {
        TensorElement zero(x.field(), x.table_ptr());
        zero += y.scaled(0);  // table check
        return zero;
    }
    const long dx = *x.degree(), dy = *y.degree();
    return x * y - (y * x).scaled(x.field().sign(dx * dy));
}

}  // namespace pdloop
