#include "pdloop/attach.hpp"

#include "pdloop/error.hpp"

#include <algorithm>
#include <set>

namespace pdloop {

std::shared_ptr<const GeneratorTable> loop_generators(const GeneralComplexSpec& spec)
{
    auto table = std::make_shared<GeneratorTable>();
    for (std::size_t i = 0; i < spec.size(); ++i) {
        table->degrees.push_back(spec.gen_degrees[i] - 1);
        table->names.push_back("u" + std::to_string(i + 1));
    }
    return table;
}

std::shared_ptr<const GeneratorTable> loop_generators(const PDComplexSpec& spec)
{
    auto table = std::make_shared<GeneratorTable>();
    for (int i = 0; i < spec.k; ++i) {
        table->degrees.push_back(spec.n - 2);
        table->names.push_back("u" + std::to_string(i + 1));
    }
    for (int i = 0; i < spec.k; ++i) {
        table->degrees.push_back(spec.n - 1);
        table->names.push_back("v" + std::to_string(i + 1));
    }
    return table;
}

BocksteinTable BocksteinTable::for_pd(const PDComplexSpec& spec)
{
    BocksteinTable t(2 * static_cast<std::size_t>(spec.k));
    for (int i = 0; i < spec.k1; ++i) {
        t.exponent[spec.k + i] = spec.r[i];
        t.target[spec.k + i] = i;
    }
    return t;
}

std::vector<int> BocksteinTable::exponents() const
{
    std::set<int> s;
    for (int e : exponent)
        if (e > 0)
            s.insert(e);
    return {s.begin(), s.end()};
}

int BocksteinTable::max_exponent() const
{
    return exponent.empty() ? 0 : *std::max_element(exponent.begin(), exponent.end());
}

TensorElement bockstein_apply(const TensorElement& x, int r, const BocksteinTable& table)
{
    const Zp& f = x.field();
    const GeneratorTable& gens = x.table();
    if (table.exponent.size() != gens.size())
        throw StructuralError("Bockstein table does not match the generator table");
    TensorElement out(f, x.table_ptr());
    for (const auto& [w, c] : x.terms()) {
        long prefix_degree = 0;
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
            const auto g = w[pos];
            if (table.exponent[g] == r) {
                Word image = w;
                image[pos] = static_cast<std::uint16_t>(table.target[g]);
                out.add_term(image, f.mul(c, f.sign(prefix_degree)));
            }
            prefix_degree += gens.degrees[g];
        }
    }
    return out;
}

TensorElement build_chi_general(const GeneralComplexSpec& spec, const std::map<int, long long>& units)
{
    if (!validate_general(spec).ok)
        throw InvalidSpec("build_chi_general: spec does not validate");
    const Zp f(spec.p);
    auto table = loop_generators(spec);
    const int N = spec.N;
    const int eta = (N + 1) / 2;
    for (const auto& [s, b] : units)
        if (f.reduce(b) == 0)
            throw Error("unit b_" + std::to_string(s) + " = " + std::to_string(b) + " is divisible by " +
                        std::to_string(spec.p));

    TensorElement chi(f, table);
    for (int s = spec.m(); s <= eta; ++s) {
        auto it = units.find(s);
        const Residue b = it == units.end() ? 1 : f.reduce(it->second);
        const Residue weight = f.mul(f.sign(s), b);
        for (std::size_t i = 0; i < spec.size(); ++i) {
            if (spec.gen_degrees[i] != s)
                continue;
            for (std::size_t j = i + 1; j < spec.size(); ++j) {
                if (spec.gen_degrees[j] != N - s || spec.c(i, j) == 0)
                    continue;
                auto ui = TensorElement::generator(f, table, i);
                auto uj = TensorElement::generator(f, table, j);
                chi += lie_bracket(ui, uj).scaled(f.mul(weight, spec.c(i, j)));
            }
        }
    }
    return chi;
}

TensorElement build_chi_pd_unchecked(const PDComplexSpec& spec)
{
    check_structure(spec);
    const Zp f(spec.p);
    auto table = loop_generators(spec);
    TensorElement chi(f, table);
    for (int i = 0; i < spec.k; ++i)
        for (int j = 0; j < spec.k; ++j) {
            if (spec.A(i, j) == 0)
                continue;
            auto u = TensorElement::generator(f, table, i);
            auto v = TensorElement::generator(f, table, spec.k + j);
            chi += lie_bracket(u, v).scaled(spec.A(i, j));
        }
    return chi;
}

TensorElement build_chi_pd(const PDComplexSpec& spec)
{
    if (!validate_pd(spec).ok)
        throw InvalidSpec("build_chi_pd: spec does not validate");
    return build_chi_pd_unchecked(spec);
}

bool bockstein_chi_check(const PDComplexSpec& spec)
{
    const auto chi = build_chi_pd_unchecked(spec);
    const auto table = BocksteinTable::for_pd(spec);
    TensorElement sum(chi.field(), chi.table_ptr());
    for (int r : table.exponents())
        sum += bockstein_apply(chi, r, table);
    return sum.is_zero();
}

}  // namespace pdloop
