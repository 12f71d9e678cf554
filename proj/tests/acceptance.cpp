// Acceptance run: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "support/cli_runner.hpp"
#include "support/oracles.hpp"

#include "pdloop/attach.hpp"
#include "pdloop/classify.hpp"
#include "pdloop/cli.hpp"
#include "pdloop/decompose.hpp"
#include "pdloop/loop_algebra.hpp"
#include "pdloop/spectral_oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pdloop;
using oracle::make_spec;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& what)
    {
        if (pass)
            first_failure = what;
        pass = false;
    }
};

std::string describe(const PDComplexSpec& s)
{
    std::ostringstream out;
    out << "p=" << s.p << " n=" << s.n << " k=" << s.k << " r=[";
    for (std::size_t i = 0; i < s.r.size(); ++i)
        out << (i ? "," : "") << s.r[i];
    out << "] A=[";
    for (std::size_t i = 0; i < s.A.rows(); ++i)
        for (std::size_t j = 0; j < s.A.cols(); ++j)
            out << (i || j ? "," : "") << s.A(i, j);
    return out.str() + "]";
}

Outcome series_factorization()
{
    Outcome o;
    std::size_t count = 0;
    for (const auto& s : oracle::sweep(4, 3)) {
        const int cap = 6 * s.m();
        const auto q = quotient_dims(s, cap);
        const auto c = closed_form_dims(s, cap);
        const auto f = decomposition_series(decompose(s), cap);
        const auto expected = oracle::recurrence(s.k, s.n - 2, s.n - 1, 2 * s.n - 3, cap);
        if (!(q == c && c == f && q.coeffs() == expected))
            o.fail(describe(s));
        ++count;
    }
    o.detail = std::to_string(count) + " specs, m in {3,4,5}, k <= 4, cap 6m";
    return o;
}

Outcome spectral_oracle()
{
    Outcome o;
    std::size_t count = 0;
    for (const auto& s : oracle::sweep(3, 3)) {
        const int cap = 6 * s.m();
        const auto g = to_general(s);
        const QuotientAlgebra A(build_chi_general(g), cap + 1);
        const auto replay = build_pages(g, A, cap);
        const auto res = verify_acyclic(replay, cap);
        if (!res.acyclic || !replay.d_squared_zero)
            o.fail(describe(s) + ": " + res.detail);
        ++count;
    }
    o.detail = std::to_string(count) + " specs, k <= 3, cap 6m, d o d = 0 on every page";
    return o;
}

Outcome validator()
{
    Outcome o;
    std::size_t count = 0, forced_singular = 0;
    const std::uint32_t p = 3;
    for (int n : {6, 7})
        for (int k = 1; k <= 2; ++k) {
            long long total = 1;
            for (int i = 0; i < k * k; ++i)
                total *= p;
            for (int k1 = 0; k1 <= k; ++k1)
                for (const auto& r : oracle::multisets(k1, 2))
                    for (long long code = 0; code < total; ++code) {
                        FpMatrix A(Zp(p), k, k);
                        long long c = code;
                        for (int i = 0; i < k * k; ++i, c /= p)
                            A.set(i / k, i % k, c % p);
                        const auto s = make_spec(p, n, r, A);
                        const bool ok = validate_pd(s).ok;
                        if (ok != oracle::pd_conditions(s))
                            o.fail(describe(s));
                        if (n % 2 == 1 && k1 == k && k % 2 == 1) {
                            ++forced_singular;
                            if (ok)
                                o.fail("odd all-torsion case accepted: " + describe(s));
                        }
                        ++count;
                    }
        }
    o.detail = std::to_string(count) + " specs mod 3, " + std::to_string(forced_singular) + " odd all-torsion cases rejected";
    return o;
}

Outcome right_multiplication()
{
    Outcome o;
    oracle::Rng rng(4);
    std::size_t checks = 0, memberships = 0;
    constexpr std::size_t naive_limit = 250;
    for (const auto& s : oracle::sweep(2, 3)) {
        const Zp f(s.p);
        const auto chi = build_chi_pd(s);
        const auto table = chi.table_ptr();
        const int cap = 2 * (2 * s.n - 3) + 2 * s.m();
        std::vector<TensorElement> us;
        for (std::size_t g = 0; g < table->size(); ++g)
            us.push_back(TensorElement::generator(f, table, g));
        for (int block = 0; block < 2; ++block) {
            TensorElement u(f, table);
            for (int i = 0; i < s.k; ++i)
                u.add_term({static_cast<std::uint16_t>(block * s.k + i)}, f.reduce(rng.uniform(1, s.p - 1)));
            us.push_back(u);
        }
        for (const auto& u : us) {
            ++checks;
            if (!right_multiplication_check(chi, u, cap))
                o.fail("right_multiplication_check " + describe(s) + " u = " + u.to_string());
        }
        // membership against the explicit spanning set, reduced with another pivot order
        for (int d = *chi.degree(); d <= cap; ++d) {
            const auto words = oracle::words(table->degrees, d);
            if (words.empty() || words.size() > naive_limit)
                continue;
            const oracle::NaiveIdeal naive(chi, d);
            std::vector<TensorElement> probes;
            for (const auto& w : words)
                probes.push_back(TensorElement::word(f, table, w));
            for (int t = 0; t < 10; ++t)
                probes.push_back(oracle::random_element(rng, f, table, d, 4));
            if (d == *chi.degree())
                probes.push_back(chi.scaled(2));
            for (const auto& x : probes) {
                std::map<Word, long long> m;
                for (const auto& [w, c] : x.terms())
                    m[w] = c;
                ++memberships;
                if (ideal_membership(chi, x, d) != naive.contains(m))
                    o.fail("membership " + describe(s) + " x = " + x.to_string());
            }
        }
    }
    o.detail = std::to_string(checks) + " property checks at cap 2(2n-3)+2m, " + std::to_string(memberships) +
               " membership decisions cross-checked";
    return o;
}

Outcome bockstein_suite()
{
    Outcome o;
    oracle::Rng rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::uint32_t p = rng.coin() ? 3 : 5;
        const Zp f(p);
        const int n = rng.coin() ? 6 : 7;
        const int k = static_cast<int>(rng.uniform(1, 3));
        std::vector<int> r(static_cast<std::size_t>(rng.uniform(0, k)));
        for (auto& e : r)
            e = static_cast<int>(rng.uniform(1, 3));
        const auto s = make_spec(p, n, r, FpMatrix::identity(f, k));
        const auto table = loop_generators(s);
        const auto bt = BocksteinTable::for_pd(s);
        const int dx = static_cast<int>(rng.uniform(0, 3)) * (n - 2) + static_cast<int>(rng.uniform(0, 2)) * (n - 1);
        const int dy = static_cast<int>(rng.uniform(0, 2)) * (n - 2) + static_cast<int>(rng.uniform(1, 2)) * (n - 1);
        const auto x = oracle::random_element(rng, f, table, dx, 5);
        const auto y = oracle::random_element(rng, f, table, dy, 5);
        for (int e = 1; e <= 3; ++e) {
            if (!bockstein_apply(bockstein_apply(x, e, bt), e, bt).is_zero())
                o.fail("beta^2 != 0 on " + x.to_string());
            const auto lhs = bockstein_apply(x * y, e, bt);
            const auto rhs = bockstein_apply(x, e, bt) * y + (x * bockstein_apply(y, e, bt)).scaled(f.sign(dx));
            if (!(lhs == rhs))
                o.fail("Leibniz fails on " + x.to_string() + " and " + y.to_string());
        }
    }

    std::size_t matrices = 0;
    for (std::uint32_t p : {3u, 5u})
        for (int n : {6, 7})
            for (int k = 1; k <= 3; ++k) {
                long long total = 1;
                for (int i = 0; i < k * k; ++i)
                    total *= p;
                std::vector<std::vector<int>> patterns{{}};
                if (k >= 1)
                    patterns.push_back({1});
                if (k >= 2) {
                    patterns.push_back({1, 1});
                    patterns.push_back({2, 1});
                }
                if (k >= 3)
                    patterns.push_back({1, 2, 1});
                for (const auto& r : patterns)
                    for (long long code = 0; code < total; ++code) {
                        FpMatrix A(Zp(p), k, k);
                        long long c = code;
                        for (int i = 0; i < k * k; ++i, c /= p)
                            A.set(i / k, i % k, c % p);
                        const auto s = make_spec(p, n, r, A);
                        ++matrices;
                        if (bockstein_chi_check(s) != oracle::block_conditions(s))
                            o.fail("chi check " + describe(s));
                    }
            }

    std::size_t swept = 0;
    for (const auto& s : oracle::sweep(4, 3)) {
        ++swept;
        if (!bockstein_descends(s, 6 * s.m()))
            o.fail("descends " + describe(s));
    }
    o.detail = "1000 random pairs, " + std::to_string(matrices) + " matrices for the chi check, " +
               std::to_string(swept) + " sweep specs descend";
    return o;
}

PDComplexSpec random_spec(oracle::Rng& rng, std::uint32_t p, int m, int k, std::vector<int> r)
{
    std::shuffle(r.begin(), r.end(), rng.gen);
    return make_spec(p, 2 * m, r, oracle::random_cup_matrix(rng, p, 2 * m, k, static_cast<int>(r.size()), r));
}

std::vector<int> random_exponents(oracle::Rng& rng, int k1)
{
    std::vector<int> r(k1);
    for (auto& e : r)
        e = static_cast<int>(rng.uniform(1, 3));
    return r;
}

Outcome classifier()
{
    Outcome o;
    oracle::Rng rng(6);
    constexpr int max_r = 4;
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = rng.coin() ? 3 : 5;
        const int m = static_cast<int>(rng.uniform(3, 5));
        const int k = static_cast<int>(rng.uniform(1, 3));
        const auto r = random_exponents(rng, static_cast<int>(rng.uniform(0, k)));
        const auto a = random_spec(rng, p, m, k, r), b = random_spec(rng, p, m, k, r);
        const int cap = 6 * m;
        if (classify(a, b).verdict != Verdict::Equivalent)
            o.fail("not equivalent: " + describe(a) + " vs " + describe(b));
        if (!(quotient_dims(a, cap) == quotient_dims(b, cap)))
            o.fail("quotient series differ: " + describe(a) + " vs " + describe(b));
        if (bockstein_refined_series(a, cap, max_r) != bockstein_refined_series(b, cap, max_r))
            o.fail("refined series differ: " + describe(a) + " vs " + describe(b));
    }
    for (int trial = 0; trial < 200; ++trial) {
        const std::uint32_t p = rng.coin() ? 3 : 5;
        const int m = static_cast<int>(rng.uniform(3, 5));
        const int ka = static_cast<int>(rng.uniform(1, 3)), kb = static_cast<int>(rng.uniform(1, 3));
        auto ra = random_exponents(rng, static_cast<int>(rng.uniform(0, ka)));
        auto rb = random_exponents(rng, static_cast<int>(rng.uniform(0, kb)));
        std::sort(ra.begin(), ra.end());
        std::sort(rb.begin(), rb.end());
        if (ka == kb && ra == rb) {
            --trial;
            continue;
        }
        const auto a = random_spec(rng, p, m, ka, ra), b = random_spec(rng, p, m, kb, rb);
        const int cap = 6 * m;
        if (classify(a, b).verdict != Verdict::NotEquivalent)
            o.fail("not distinguished: " + describe(a) + " vs " + describe(b));
        const bool differs = !(quotient_dims(a, cap) == quotient_dims(b, cap)) ||
                             bockstein_refined_series(a, cap, max_r) != bockstein_refined_series(b, cap, max_r) ||
                             decompose(a).render() != decompose(b).render();
        if (!differs)
            o.fail("no computed invariant differs: " + describe(a) + " vs " + describe(b));
    }
    o.detail = "200 equal-invariant and 200 differing pairs, refined series beta_1..beta_4 to cap 6m";
    return o;
}

Outcome integral()
{
    Outcome o;
    oracle::Rng rng(7);
    const std::vector<std::uint32_t> primes{3, 5, 7, 11, 13};
    auto random_manifold = [&](int m) {
        ManifoldSpec man{m, {}, 0, false};
        for (auto q : primes) {
            const int count = static_cast<int>(rng.uniform(0, 3));
            for (int i = 0; i < count; ++i)
                man.torsion[q].push_back(static_cast<int>(rng.uniform(1, 3)));
        }
        return man;
    };
    std::size_t equivalent = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = static_cast<int>(rng.uniform(3, 4));
        auto a = random_manifold(m);
        auto b = random_manifold(trial % 10 == 9 ? m + 1 : m);
        if (trial % 3 == 0) {
            b = a;
            for (auto& [q, e] : b.torsion)
                std::shuffle(e.begin(), e.end(), rng.gen);
        }
        const auto verdict = classify_integral(a, b).verdict;
        Verdict expected = Verdict::Incomparable;
        if (a.m == b.m) {
            bool all = true;
            for (auto q : primes) {
                const auto la = local_spec(a, q), lb = local_spec(b, q);
                if (la.has_value() != lb.has_value())
                    all = false;
                else if (la && classify(*la, *lb).verdict != Verdict::Equivalent)
                    all = false;
            }
            expected = all ? Verdict::Equivalent : Verdict::NotEquivalent;
        }
        equivalent += verdict == Verdict::Equivalent;
        if (verdict != expected)
            o.fail("integral verdict " + to_string(verdict) + " vs per-prime " + to_string(expected));
        for (const auto& man : {a, b}) {
            const auto d = integral_decompose(man, 6 * man.m);
            std::vector<std::pair<std::uint32_t, int>> maxima;
            for (const auto& [q, e] : man.torsion)
                if (!e.empty())
                    maxima.emplace_back(q, *std::max_element(e.begin(), e.end()));
            if (d.q_factors != maxima)
                o.fail("Q exponents are not the per-prime maxima: " + d.render());
            for (const auto& l : d.local)
                if (!l.series_matches)
                    o.fail("local series mismatch at " + std::to_string(l.prime));
        }
    }
    o.detail = "100 pairs (" + std::to_string(equivalent) + " equivalent), Q exponents are per-prime maxima";
    return o;
}

Outcome cli_contract()
{
    Outcome o;
    const std::vector<std::pair<std::string, std::string>> goldens{
        {"report rank1.json --cap 10", "report_rank1_cap10.txt"},
        {"report rank2.json --cap 12", "report_rank2_cap12.txt"},
        {"report rank1.json --cap 4", "report_rank1_cap4.txt"},
    };
    for (const auto& [args, file] : goldens) {
        const auto r = clirun::run(clirun::with_data_paths(args));
        if (r.exit_code != 0 || r.out != clirun::golden(file))
            o.fail("golden " + file);
    }
    for (const auto& c : clirun::exit_matrix())
        if (clirun::run(clirun::with_data_paths(c.args)).exit_code != c.expected)
            o.fail(std::string("exit code of ") + c.args);
    for (const std::string cmd : {"validate", "chi", "series", "decompose", "oracle", "report"}) {
        const auto first = clirun::run(cmd + " " + clirun::data_path("rank2.json") + " --cap 10 --format json");
        try {
            const auto doc = cli::Json::parse(first.out);
            const auto path = clirun::write_temp("pdloop_acceptance_roundtrip.json", doc["spec"].dump());
            const auto second = clirun::run(cmd + " " + path.string() + " --cap 10 --format json");
            if (second.out != first.out || cli::to_json(cli::parse_pd_spec(doc["spec"])) != doc["spec"])
                o.fail("JSON round trip of " + cmd);
        } catch (const std::exception& e) {
            o.fail("JSON output of " + cmd + ": " + e.what());
        }
    }
    o.detail = "3 goldens, " + std::to_string(clirun::exit_matrix().size()) + " exit codes, 6 JSON round trips";
    return o;
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"series factorization", series_factorization},
        {"spectral oracle acyclicity", spectral_oracle},
        {"cup-matrix validator", validator},
        {"ideal membership and right multiplication", right_multiplication},
        {"Bockstein suite", bockstein_suite},
        {"classifier soundness", classifier},
        {"integral reduction", integral},
        {"CLI contract", cli_contract},
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        all = all && o.pass;
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(1);
        line << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.detail
             << "; " << secs << " s)";
        if (!o.pass)
            line << " first failure: " << o.first_failure;
        std::cout << line.str() << std::endl;
    }
    return all ? 0 : 1;
}
