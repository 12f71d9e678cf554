#include "sections.hpp"

#include "pdloop/attach.hpp"
#include "pdloop/decompose.hpp"
#include "pdloop/error.hpp"
#include "pdloop/loop_algebra.hpp"
#include "pdloop/spectral_oracle.hpp"

#include <algorithm>
#include <sstream>

namespace pdloop::cli {

std::string status_word(Status s)
{
    switch (s) {
    case Status::Ok: return "ok";
    case Status::Failed: return "failed";
    case Status::Unsupported: return "unsupported";
    }
    return "unknown";
}

namespace {

std::string str(const Integer& v)
{
    return v.str();
}

/// Right-aligned columns, widths taken from the widest entry.
std::string table(const std::vector<std::vector<std::string>>& rows)
{
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c)
                width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::string out;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c)
                line += "  ";
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        out += line + "\n";
    }
    return out;
}

Json matrix_json(const FpMatrix& M)
{
    Json out = Json::array();
    for (std::size_t i = 0; i < M.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < M.cols(); ++j)
            row.push_back(M(i, j));
        out.push_back(std::move(row));
    }
    return out;
}

Section unsupported(std::string title, const std::string& why)
{
    Section s{std::move(title), Status::Unsupported, Json{{"unsupported", why}}, "status: unsupported (" + why + ")\n"};
    return s;
}

TensorElement attaching_element(const PDComplexSpec& spec, const std::map<int, long long>& units)
{
    if (units.empty())
        return build_chi_pd(spec);
    return build_chi_general(to_general(spec), units);
}

std::string units_text(const std::map<int, long long>& units)
{
    std::string out;
    for (const auto& [s, b] : units)
        out += (out.empty() ? "" : ",") + std::to_string(s) + "=" + std::to_string(b);
    return out;
}

std::string cell_text(const Cell& c)
{
    return "(" + std::to_string(c.s) + "," + std::to_string(c.t) + ")";
}

std::string page_name(int r)
{
    return r == infinity_page ? "E^inf" : "E^" + std::to_string(r);
}

Json page_json(const BigradedPage& page)
{
    Json cells = Json::array();
    for (const auto& pc : page.cells)
        cells.push_back(Json{{"s", pc.cell.s}, {"t", pc.cell.t}, {"dim", pc.dim}, {"representatives", pc.representatives}});
    Json diffs = Json::array();
    for (const auto& d : page.differentials)
        diffs.push_back(Json{{"source", {d.source.s, d.source.t}}, {"target", {d.target.s, d.target.t}}, {"rank", d.rank}});
    Json r = page.r == infinity_page ? Json("inf") : Json(page.r);
    return Json{{"r", r}, {"cells", std::move(cells)}, {"differentials", std::move(diffs)}};
}

std::string page_text(const BigradedPage& page)
{
    std::ostringstream out;
    out << page_name(page.r) << "\n";
    std::vector<std::vector<std::string>> rows{{"cell", "dim", "representative"}};
    for (const auto& pc : page.cells)
        rows.push_back({cell_text(pc.cell), std::to_string(pc.dim),
                        pc.representatives.empty() ? "" : pc.representatives.front()});
    out << table(rows);
    for (const auto& d : page.differentials)
        out << "  d^" << page.r << ": " << cell_text(d.source) << " -> " << cell_text(d.target) << " rank "
            << d.rank << "\n";
    return out.str();
}

}  // namespace

Section validation_section(const PDComplexSpec& spec)
{
    const auto report = validate_pd(spec);
    Section s{"validation", report.ok ? Status::Ok : Status::Failed, to_json(report), {}};
    std::ostringstream out;
    out << "status: " << (report.ok ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations)
        out << "violation " << to_string(v.constraint) << ": " << v.message << "\n";
    for (const auto& a : report.advisories)
        out << "advisory: " << a << "\n";
    s.text = out.str();
    return s;
}

Section validation_section(const ManifoldSpec& man)
{
    const auto report = validate_integral(man);
    Section s{"validation", report.ok ? Status::Ok : Status::Failed, to_json(report), {}};
    std::ostringstream out;
    out << "status: " << (report.ok ? "valid" : "invalid") << "\n";
    for (const auto& v : report.violations)
        out << "violation " << to_string(v.constraint) << ": " << v.message << "\n";
    s.text = out.str();
    return s;
}

Section chi_section(const PDComplexSpec& spec, const std::map<int, long long>& units)
{
    const auto chi = build_chi_pd(spec);
    Section s{"attaching element", Status::Ok, {}, {}};
    Json terms = Json::array();
    for (const auto& [w, c] : chi.terms()) {
        std::string word;
        for (auto g : w)
            word += chi.table().names[g];
        terms.push_back(Json{{"word", word}, {"coeff", c}});
    }
    std::ostringstream out;
    out << "chi = " << chi.to_string() << "\n";
    out << "degree: " << 2 * spec.n - 3 << "\n";
    s.json = Json{{"chi", chi.to_string()}, {"degree", 2 * spec.n - 3}, {"terms", std::move(terms)}};
    if (!units.empty()) {
        const auto general = build_chi_general(to_general(spec), units);
        out << "chi with units " << units_text(units) << " = " << general.to_string() << "\n";
        s.json["general"] = general.to_string();
        s.json["units"] = units_text(units);
    }
    s.text = out.str();
    return s;
}

Section series_section(const PDComplexSpec& spec, int cap, const std::map<int, long long>& units)
{
    const QuotientAlgebra A(attaching_element(spec, units), cap);
    const auto quotient = A.dims();
    const auto closed = closed_form_dims(spec, cap);
    const bool matches = quotient == closed;
    const int rel = 2 * spec.n - 3;

    Section s{"loop homology", matches ? Status::Ok : Status::Failed, {}, {}};
    std::vector<std::vector<std::string>> rows{{"degree", "tensor", "ideal", "quotient", "closed_form"}};
    Json jrows = Json::array();
    for (int d = 0; d <= cap; ++d) {
        rows.push_back({std::to_string(d), str(A.tensor_dim(d)), str(A.ideal_dim(d)), std::to_string(A.dim(d)),
                        str(closed[d])});
        jrows.push_back(Json{{"degree", d},
                             {"tensor", to_json(A.tensor_dim(d))},
                             {"ideal", to_json(A.ideal_dim(d))},
                             {"quotient", A.dim(d)},
                             {"closed_form", to_json(closed[d])}});
    }
    std::ostringstream out;
    out << table(rows);
    out << "series: " << quotient.to_string() << "\n";
    out << "closed form: " << closed.to_string() << "\n";
    s.json = Json{{"rows", std::move(jrows)}, {"series", to_json(quotient)}, {"closed_form", to_json(closed)},
                  {"matches", matches}};
    if (cap < rel) {
        const std::string note = "relation beyond cap (chi has degree " + std::to_string(rel) + ", cap " +
                                 std::to_string(cap) + "); the quotient equals the free algebra";
        out << "note: " << note << "\n";
        s.json["note"] = note;
    }
    out << "status: " << (matches ? "ok (quotient equals closed form)" : "MISMATCH between quotient and closed form")
        << "\n";
    s.text = out.str();
    return s;
}

Section decomposition_section(const PDComplexSpec& spec, int cap)
{
    if (spec.n % 2 != 0 || spec.m() <= 2)
        return unsupported("decomposition", "loop decompositions need n = 2m with m > 2");
    const auto plan = quotient_plan(spec);
    const auto dec = decompose(spec);
    const auto product = decomposition_series(dec, cap);
    const bool matches = product == quotient_dims(spec, cap);

    Section s{"decomposition", matches ? Status::Ok : Status::Failed, {}, {}};
    std::ostringstream out;
    out << "plan: " << to_string(plan.which) << ", cup unit " << plan.cup_unit;
    if (plan.target_exponent > 0)
        out << ", target " << render(WedgeSummand::moore(spec.n, plan.target_exponent));
    else
        out << ", target " << render(WedgeSummands{WedgeSummand::sphere(spec.n - 1), WedgeSummand::sphere(spec.n)});
    out << "\n";
    out << "factors: " << dec.render() << "\n";
    Json factors = Json::array();
    for (const auto& f : dec.factors) {
        const auto fs = factor_series(f, cap);
        out << "  " << render(f) << ": " << fs.to_string() << "\n";
        factors.push_back(Json{{"factor", render(f)}, {"series", to_json(fs)}});
    }
    out << "product: " << product.to_string() << "\n";
    out << "status: "
        << (matches ? "ok (product of factor series equals the quotient series)"
                    : "MISMATCH between factor product and quotient series")
        << "\n";
    s.text = out.str();
    s.json = Json{{"plan",
                   Json{{"case", to_string(plan.which)},
                        {"permutation", plan.permutation},
                        {"cup_unit", plan.cup_unit},
                        {"target_exponent", plan.target_exponent},
                        {"P", matrix_json(plan.P)},
                        {"Q", matrix_json(plan.Q)}}},
                  {"decomposition", dec.render()},
                  {"factors", std::move(factors)},
                  {"product", to_json(product)},
                  {"matches", matches}};
    return s;
}

Section fiber_section(const PDComplexSpec& spec, int cap)
{
    if (spec.n % 2 != 0 || spec.m() <= 2)
        return unsupported("fiber", "the fiber model needs n = 2m with m > 2");
    if (spec.k < 2)
        return unsupported("fiber", "k = 1 has no fiber");
    const auto fs = fiber_series(spec, cap);
    Section s{"fiber", fs.product_matches ? Status::Ok : Status::Failed, {}, {}};
    std::ostringstream out;
    out << "fiber: " << fs.fiber.to_string() << "\n";
    out << "loops on fiber: " << fs.loop_fiber.to_string() << "\n";
    out << "rank-one piece: " << fs.base.to_string() << "\n";
    out << "status: "
        << (fs.product_matches ? "ok (quotient series equals rank-one piece times loops on fiber)"
                               : "MISMATCH between quotient series and the fiber product")
        << "\n";
    s.text = out.str();
    s.json = Json{{"fiber", to_json(fs.fiber)},
                  {"loop_fiber", to_json(fs.loop_fiber)},
                  {"base", to_json(fs.base)},
                  {"matches", fs.product_matches}};
    return s;
}

Section oracle_section(const PDComplexSpec& spec, int cap, const std::map<int, long long>& units, bool full)
{
    if (spec.n <= 3)
        return unsupported("spectral oracle", "the general form needs n > 3");
    const auto g = to_general(spec);
    // same relation, written over the u/v names of the PD generators
    const auto general_chi = build_chi_general(g, units);
    TensorElement chi(general_chi.field(), loop_generators(spec));
    for (const auto& [w, c] : general_chi.terms())
        chi.add_term(w, c);
    const QuotientAlgebra A(chi, cap + 1);
    const auto replay = build_pages(g, A, cap);
    const auto res = verify_acyclic(replay, cap);

    Section s{"spectral oracle", res.acyclic ? Status::Ok : Status::Failed, {}, {}};
    std::ostringstream out;
    out << "m': " << replay.m_prime << "\n";
    out << "pages:";
    for (const auto& p : replay.pages)
        out << " " << page_name(p.r);
    out << "\n";
    if (full) {
        for (const auto& p : replay.pages)
            out << page_text(p);
    } else {
        out << page_text(replay.pages.back());
    }
    out << "d o d = 0: " << (replay.d_squared_zero ? "yes" : "no") << "\n";
    if (!res.indeterminate.empty()) {
        out << "indeterminate (window edge):";
        for (const auto& c : res.indeterminate)
            out << " " << cell_text(c);
        out << "\n";
    }
    if (res.acyclic)
        out << "status: acyclic through total degree " << cap << "\n";
    else
        out << "status: NOT acyclic: " << res.detail << "\n";
    s.text = out.str();

    Json pages = Json::array();
    if (full)
        for (const auto& p : replay.pages)
            pages.push_back(page_json(p));
    else
        pages.push_back(page_json(replay.pages.back()));
    Json indet = Json::array();
    for (const auto& c : res.indeterminate)
        indet.push_back({c.s, c.t});
    s.json = Json{{"m_prime", replay.m_prime},
                  {"columns", replay.columns},
                  {"pages", std::move(pages)},
                  {"d_squared_zero", replay.d_squared_zero},
                  {"acyclic", res.acyclic},
                  {"witness", res.witness ? Json{res.witness->s, res.witness->t} : Json(nullptr)},
                  {"detail", res.detail},
                  {"indeterminate", std::move(indet)}};
    return s;
}

Section integral_section(const ManifoldSpec& man, int cap)
{
    const auto dec = integral_decompose(man, cap);
    bool ok = true;
    std::ostringstream out;
    out << "decomposition: " << dec.render() << "\n";
    Json q = Json::array();
    for (const auto& [prime, s] : dec.q_factors) {
        out << "Q factor at " << prime << ": " << render(Factor::sphere_fiber(2 * man.m - 1, s), std::to_string(prime))
            << "\n";
        q.push_back(Json{{"prime", prime}, {"exponent", s}});
    }
    Json cells = Json::array();
    for (const auto& [prime, c] : dec.i_cells)
        cells.push_back(render(c, std::to_string(prime)));
    Json local = Json::array();
    for (const auto& l : dec.local) {
        ok = ok && l.series_matches;
        out << "at p = " << l.prime << ": " << l.decomposition.render(std::to_string(l.prime)) << " (series "
            << (l.series_matches ? "ok" : "MISMATCH") << ")\n";
        local.push_back(Json{{"prime", l.prime},
                             {"decomposition", l.decomposition.render(std::to_string(l.prime))},
                             {"series_matches", l.series_matches}});
    }
    out << "status: " << (ok ? "ok" : "MISMATCH in a local series check") << "\n";
    Section s{"integral", ok ? Status::Ok : Status::Failed, {}, out.str()};
    s.json = Json{{"decomposition", dec.render()},
                  {"q_factors", std::move(q)},
                  {"loop_sphere", dec.loop_sphere_dim},
                  {"i_cells", std::move(cells)},
                  {"local", std::move(local)},
                  {"matches", ok}};
    return s;
}

}  // namespace pdloop::cli
