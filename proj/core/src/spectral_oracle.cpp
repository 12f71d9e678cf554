#include "pdloop/spectral_oracle.hpp"

#include "pdloop/attach.hpp"
#include "pdloop/error.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace pdloop {

namespace {

constexpr std::size_t max_representatives = 4;

/// Linear map between two cells, given by the images of the ambient basis.
struct Differential {
    int r;
    Cell source;
    Cell target;
    std::vector<std::vector<Residue>> images;  // one per ambient basis vector of the source
};

struct CellState {
    std::size_t ambient = 0;
    RowSpace Z;
    RowSpace B;
};

class Replay {
public:
    Replay(const GeneralComplexSpec& spec, const QuotientAlgebra& A, int cap)
        : spec_(spec), A_(A), f_(A.field()), cap_(cap)
    {
        std::set<int> cols{0, spec.N};
        cols.insert(spec.gen_degrees.begin(), spec.gen_degrees.end());
        columns_.assign(cols.begin(), cols.end());
        for (int s : columns_) {
            auto& base = base_[s];
            if (s == 0 || s == spec.N)
                base.push_back(-1);
            else
                for (std::size_t i = 0; i < spec.size(); ++i)
                    if (spec.gen_degrees[i] == s)
                        base.push_back(static_cast<int>(i));
            for (int t = 0; s + t <= cap + 1; ++t) {
                const std::size_t dim = base.size() * A.dim(t);
                RowSpace Z(f_, dim);
                for (std::size_t i = 0; i < dim; ++i) {
                    std::vector<Residue> e(dim, 0);
                    e[i] = 1;
                    Z.insert(std::move(e));
                }
                cells_.emplace(Cell{s, t}, CellState{dim, std::move(Z), RowSpace(f_, dim)});
            }
        }
        m_prime_ = find_m_prime();
    }

    SpectralReplay run()
    {
        SpectralReplay out;
        out.cap = cap_;
        out.m_prime = m_prime_;
        out.columns = columns_;

        std::set<int> pages{m_prime_};
        for (int d : spec_.gen_degrees)
            pages.insert(d);
        if (*pages.begin() > 2)
            out.pages.push_back(snapshot(2, {}));
        for (int r : pages) {
            auto diffs = differentials_on_page(r);
            auto page = snapshot(r, {});
            apply_page(diffs, page, out);
            out.pages.push_back(std::move(page));
        }
        out.pages.push_back(snapshot(infinity_page, {}));
        return out;
    }

private:
    int find_m_prime() const
    {
        int best = spec_.N;
        for (std::size_t i = 0; i < spec_.size(); ++i)
            for (std::size_t j = 0; j < spec_.size(); ++j)
                if (spec_.c(i, j) != 0 && spec_.gen_degrees[i] + spec_.gen_degrees[j] == spec_.N)
                    best = std::min({best, spec_.gen_degrees[i], spec_.gen_degrees[j]});
        if (best == spec_.N)
            throw Unsupported("spectral replay needs a nontrivial cup product (m' < N)");
        return best;
    }

    std::string base_name(int s, int b) const
    {
        if (s == 0)
            return "1";
        if (s == spec_.N)
            return "z";
        return "a" + std::to_string(b + 1);
    }

    std::string format(Cell c, const std::vector<Residue>& v) const
    {
        const std::size_t adim = A_.dim(c.t);
        std::ostringstream out;
        bool first = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i])
                continue;
            if (!first)
                out << " + ";
            first = false;
            out << v[i] << "·" << base_name(c.s, base_.at(c.s)[i / adim]) << "⊗";
            const Word& w = A_.basis_word(c.t, i % adim);
            if (w.empty())
                out << "1";
            for (auto g : w)
                out << A_.table().names[g];
        }
        return first ? "0" : out.str();
    }

    /// Coordinates of w u_g for every basis word w of A_t, cached.
    const std::vector<std::vector<Residue>>& right_mult(int t, std::size_t g)
    {
        auto key = std::make_pair(t, g);
        auto it = right_cache_.find(key);
        if (it != right_cache_.end())
            return it->second;
        std::vector<std::vector<Residue>> rows;
        for (std::size_t i = 0; i < A_.dim(t); ++i)
            rows.push_back(A_.basis_times_generator(t, i, g));
        return right_cache_.emplace(key, std::move(rows)).first->second;
    }

    std::vector<Differential> differentials_on_page(int r)
    {
        std::vector<Differential> out;
        // Transgressions out of column r.
        if (base_.count(r) && r != 0 && r != spec_.N) {
            for (int t = 0; r + t <= cap_ + 1; ++t) {
                Differential d{r, {r, t}, {0, t + r - 1}, {}};
                const std::size_t adim = A_.dim(t), tdim = A_.dim(t + r - 1);
                for (int gen : base_.at(r)) {
                    const auto& rm = right_mult(t, static_cast<std::size_t>(gen));
                    for (std::size_t i = 0; i < adim; ++i) {
                        std::vector<Residue> img(tdim, 0);
                        std::copy(rm[i].begin(), rm[i].end(), img.begin());
                        d.images.push_back(std::move(img));
                    }
                }
                out.push_back(std::move(d));
            }
        }
        if (r == m_prime_) {
            const int N = spec_.N, tgt_s = N - r;
            const auto& tgt_base = base_.at(tgt_s);
            const Residue sign = f_.sign(r);
            for (int t = 0; N + t <= cap_ + 1; ++t) {
                Differential d{r, {N, t}, {tgt_s, t + r - 1}, {}};
                const std::size_t adim = A_.dim(t), tdim = A_.dim(t + r - 1);
                for (std::size_t i = 0; i < adim; ++i) {
                    std::vector<Residue> img(tgt_base.size() * tdim, 0);
                    for (std::size_t gi = 0; gi < spec_.size(); ++gi) {
                        if (spec_.gen_degrees[gi] != r)
                            continue;
                        const auto& rm = right_mult(t, gi);
                        for (std::size_t bj = 0; bj < tgt_base.size(); ++bj) {
                            const Residue c = spec_.c(gi, static_cast<std::size_t>(tgt_base[bj]));
                            if (c == 0)
                                continue;
                            const Residue coeff = f_.mul(sign, c);
                            for (std::size_t x = 0; x < tdim; ++x)
                                img[bj * tdim + x] = f_.add(img[bj * tdim + x], f_.mul(coeff, rm[i][x]));
                        }
                    }
                    d.images.push_back(std::move(img));
                }
                out.push_back(std::move(d));
            }
        }
        return out;
    }

    static std::vector<Residue> apply(const Differential& d, const std::vector<Residue>& x, const Zp& f,
                                      std::size_t tdim)
    {
        std::vector<Residue> y(tdim, 0);
        for (std::size_t i = 0; i < x.size(); ++i)
            if (x[i])
                for (std::size_t j = 0; j < tdim; ++j)
                    if (d.images[i][j])
                        y[j] = f.add(y[j], f.mul(x[i], d.images[i][j]));
        return y;
    }

    void note_defect(SpectralReplay& out, Cell c, const std::string& what)
    {
        if (!out.defect.empty())
            return;
        out.defect = what;
        out.defect_cell = c;
    }

    void apply_page(const std::vector<Differential>& diffs, BigradedPage& page, SpectralReplay& out)
    {
        struct Update {
            Cell source;
            Cell target;
            std::vector<std::vector<Residue>> new_z;
            std::vector<std::vector<Residue>> new_b;
        };
        std::vector<Update> updates;
        std::map<Cell, const Differential*> by_source;
        for (const auto& d : diffs)
            by_source[d.source] = &d;

        for (const auto& d : diffs) {
            const CellState& src = cells_.at(d.source);
            const CellState& tgt = cells_.at(d.target);
            std::ostringstream where;
            where << "d^" << d.r << " from (" << d.source.s << "," << d.source.t << ")";

            for (const auto& b : src.B.rows())
                if (!tgt.B.contains(apply(d, b, f_, tgt.ambient))) {
                    out.well_defined = false;
                    note_defect(out, d.source, where.str() + " does not carry boundaries to boundaries");
                    break;
                }

            std::vector<std::vector<Residue>> reduced;
            std::vector<std::vector<Residue>> image;
            for (const auto& z : src.Z.rows()) {
                auto y = apply(d, z, f_, tgt.ambient);
                if (!tgt.Z.contains(y)) {
                    out.well_defined = false;
                    note_defect(out, d.source, where.str() + " leaves the cycles of the target");
                }
                image.push_back(y);
                tgt.B.reduce(y);
                reduced.push_back(std::move(y));
            }

            // d^r o d^r, when the target is itself a source on this page.
            if (auto next = by_source.find(d.target); next != by_source.end()) {
                const CellState& far = cells_.at(next->second->target);
                for (const auto& y : image)
                    if (!far.B.contains(apply(*next->second, y, f_, far.ambient))) {
                        out.d_squared_zero = false;
                        note_defect(out, d.source, where.str() + ": d o d is not zero");
                        break;
                    }
            }

            RowSpace rank_space(f_, tgt.ambient);
            for (const auto& y : reduced)
                rank_space.insert(y);
            if (rank_space.rank() > 0)
                page.differentials.push_back({d.source, d.target, rank_space.rank()});

            Update u{d.source, d.target, {}, std::move(image)};
            const auto& zrows = src.Z.rows();
            for (const auto& lambda : left_kernel(f_, reduced)) {
                std::vector<Residue> x(src.ambient, 0);
                for (std::size_t l = 0; l < lambda.size(); ++l)
                    if (lambda[l])
                        for (std::size_t j = 0; j < src.ambient; ++j)
                            x[j] = f_.add(x[j], f_.mul(lambda[l], zrows[l][j]));
                u.new_z.push_back(std::move(x));
            }
            updates.push_back(std::move(u));
        }

        for (auto& u : updates) {
            CellState& src = cells_.at(u.source);
            RowSpace Z(f_, src.ambient);
            for (auto& x : u.new_z)
                Z.insert(std::move(x));
            src.Z = std::move(Z);
        }
        for (auto& u : updates) {
            CellState& tgt = cells_.at(u.target);
            for (auto& y : u.new_b)
                tgt.B.insert(std::move(y));
        }
    }

    BigradedPage snapshot(int r, std::vector<DifferentialBlock> blocks) const
    {
        BigradedPage page;
        page.r = r;
        page.differentials = std::move(blocks);
        for (const auto& [cell, st] : cells_) {
            const std::size_t dim = st.Z.rank() - st.B.rank();
            if (dim == 0)
                continue;
            PageCell pc{cell, dim, {}};
            RowSpace seen = st.B;
            for (const auto& z : st.Z.rows()) {
                if (pc.representatives.size() >= max_representatives)
                    break;
                auto y = z;
                seen.reduce(y);
                if (is_zero(y))
                    continue;
                seen.insert(y);
                pc.representatives.push_back(format(cell, z));
            }
            page.cells.push_back(std::move(pc));
        }
        return page;
    }

    const GeneralComplexSpec& spec_;
    const QuotientAlgebra& A_;
    Zp f_;
    int cap_;
    int m_prime_ = 0;
    std::vector<int> columns_;
    std::map<int, std::vector<int>> base_;
    std::map<Cell, CellState> cells_;
    std::map<std::pair<int, std::size_t>, std::vector<std::vector<Residue>>> right_cache_;
};

}  // namespace

SpectralReplay build_pages(const GeneralComplexSpec& spec, const QuotientAlgebra& quotient, int cap)
{
    if (!validate_general(spec).ok)
        throw InvalidSpec("build_pages: spec does not validate");
    if (cap < 0)
        throw StructuralError("cap must be non-negative");
    if (quotient.cap() < cap + 1)
        throw StructuralError("build_pages: the quotient algebra must be computed to cap + 1");
    if (!(quotient.table() == *loop_generators(spec)))
        throw StructuralError("build_pages: quotient generators do not match the complex");
    return Replay(spec, quotient, cap).run();
}

AcyclicityResult verify_acyclic(const SpectralReplay& replay, int cap)
{
    AcyclicityResult res;
    if (replay.pages.empty() || replay.pages.back().r != infinity_page)
        throw StructuralError("verify_acyclic: replay has no E-infinity page");
    if (cap > replay.cap)
        throw StructuralError("verify_acyclic: cap beyond the replayed window");
    if (!replay.well_defined || !replay.d_squared_zero) {
        res.acyclic = false;
        res.witness = replay.defect_cell;
        res.detail = replay.defect;
        return res;
    }
    res.acyclic = true;
    for (const auto& pc : replay.pages.back().cells) {
        const int total = pc.cell.s + pc.cell.t;
        if (pc.cell.s == 0 && pc.cell.t == 0) {
            if (pc.dim != 1) {
                res.acyclic = false;
                res.witness = pc.cell;
                res.detail = "the unit cell (0,0) does not survive as a single class";
            }
            continue;
        }
        if (total > cap) {
            res.indeterminate.push_back(pc.cell);
            continue;
        }
        if (res.acyclic) {
            res.acyclic = false;
            res.witness = pc.cell;
            std::ostringstream out;
            out << "cell (" << pc.cell.s << "," << pc.cell.t << ") survives with dimension " << pc.dim;
            if (!pc.representatives.empty())
                out << ", e.g. " << pc.representatives.front();
            res.detail = out.str();
        }
    }
    return res;
}

}  // namespace pdloop
