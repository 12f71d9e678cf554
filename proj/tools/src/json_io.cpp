#include "pdloop/cli.hpp"

#include "pdloop/error.hpp"

#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

namespace pdloop::cli {

namespace {

const Json& member(const Json& j, const char* key, const std::string& at)
{
    auto it = j.find(key);
    if (it == j.end())
        throw InputError(at.empty() ? "/" : at, std::string("missing field \"") + key + "\"");
    return *it;
}

long long as_integer(const Json& j, const std::string& at)
{
    if (!j.is_number_integer())
        throw InputError(at, "expected an integer, got " + j.dump());
    return j.get<long long>();
}

int as_int(const Json& j, const std::string& at)
{
    const long long v = as_integer(j, at);
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
        throw InputError(at, "integer out of range");
    return static_cast<int>(v);
}

std::vector<int> int_list(const Json& j, const std::string& at)
{
    if (!j.is_array())
        throw InputError(at, "expected an array of integers");
    std::vector<int> out;
    for (std::size_t i = 0; i < j.size(); ++i)
        out.push_back(as_int(j[i], at + "/" + std::to_string(i)));
    return out;
}

void reject_unknown(const Json& j, std::initializer_list<const char*> known)
{
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known)
            ok = ok || it.key() == k;
        if (!ok)
            throw InputError("/" + it.key(), "unknown field");
    }
}

}  // namespace

Json parse_json_text(const std::string& text, const std::string& source)
{
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw InputError(source + ":byte " + std::to_string(e.byte), e.what());
    }
}

PDComplexSpec parse_pd_spec(const Json& j)
{
    if (!j.is_object())
        throw InputError("/", "expected a JSON object");
    reject_unknown(j, {"p", "n", "k", "k1", "r", "A"});
    PDComplexSpec s;
    const long long p = as_integer(member(j, "p", ""), "/p");
    if (!is_odd_prime(p) || p >= (1 << 16))
        throw InputError("/p", "p must be an odd prime below 65536, got " + std::to_string(p));
    s.p = static_cast<std::uint32_t>(p);
    s.n = as_int(member(j, "n", ""), "/n");
    s.k = as_int(member(j, "k", ""), "/k");
    s.k1 = as_int(member(j, "k1", ""), "/k1");
    s.r = int_list(member(j, "r", ""), "/r");

    const Json& A = member(j, "A", "");
    if (!A.is_array())
        throw InputError("/A", "expected an array of rows");
    const Zp f(s.p);
    s.A = FpMatrix(f, A.size(), A.empty() ? 0 : (A[0].is_array() ? A[0].size() : 0));
    for (std::size_t i = 0; i < A.size(); ++i) {
        const std::string at = "/A/" + std::to_string(i);
        if (!A[i].is_array() || A[i].size() != s.A.cols())
            throw InputError(at, "rows must be arrays of equal length");
        for (std::size_t c = 0; c < A[i].size(); ++c)
            s.A.set(i, c, as_integer(A[i][c], at + "/" + std::to_string(c)));
    }
    if (s.k1 >= 0 && static_cast<int>(s.r.size()) != s.k1)
        throw InputError("/r", "r must list exactly k1 = " + std::to_string(s.k1) + " exponents");
    if (s.k >= 1 && (s.A.rows() != static_cast<std::size_t>(s.k) || s.A.cols() != static_cast<std::size_t>(s.k)))
        throw InputError("/A", "cup matrix must be k x k with k = " + std::to_string(s.k));
    try {
        check_structure(s);
    } catch (const StructuralError& e) {
        throw InputError("/", e.what());
    }
    return s;
}

ManifoldSpec parse_manifold_spec(const Json& j)
{
    if (!j.is_object())
        throw InputError("/", "expected a JSON object");
    reject_unknown(j, {"m", "torsion", "rational_rank", "two_torsion"});
    ManifoldSpec man;
    man.m = as_int(member(j, "m", ""), "/m");
    const Json& t = member(j, "torsion", "");
    if (!t.is_object())
        throw InputError("/torsion", "expected an object keyed by odd primes");
    for (auto it = t.begin(); it != t.end(); ++it) {
        const std::string at = "/torsion/" + it.key();
        std::uint32_t q = 0;
        try {
            std::size_t used = 0;
            const unsigned long v = std::stoul(it.key(), &used);
            if (used != it.key().size() || v > std::numeric_limits<std::uint32_t>::max())
                throw std::invalid_argument("trailing");
            q = static_cast<std::uint32_t>(v);
        } catch (const std::exception&) {
            throw InputError(at, "torsion keys must be primes written in decimal");
        }
        man.torsion[q] = int_list(it.value(), at);
    }
    if (j.contains("rational_rank"))
        man.rational_rank = as_int(j["rational_rank"], "/rational_rank");
    if (j.contains("two_torsion")) {
        if (!j["two_torsion"].is_boolean())
            throw InputError("/two_torsion", "expected a boolean");
        man.two_torsion = j["two_torsion"].get<bool>();
    }
    try {
        check_structure(man);
    } catch (const StructuralError& e) {
        throw InputError("/torsion", e.what());
    }
    return man;
}

AnySpec parse_spec(const Json& j)
{
    if (j.is_object() && (j.contains("torsion") || j.contains("m")))
        return parse_manifold_spec(j);
    return parse_pd_spec(j);
}

AnySpec load_spec(const std::string& path)
{
    std::string text;
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    } else {
        std::ifstream in(path, std::ios::binary);
        if (!in)
            throw InputError(path, "cannot open file");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return parse_spec(parse_json_text(text, path));
    } catch (const InputError& e) {
        if (e.where().rfind(path, 0) == 0)
            throw;
        throw InputError(path + ":" + e.where(), std::string(e.what()).substr(e.where().size() + 2));
    }
}

Json to_json(const PDComplexSpec& spec)
{
    Json A = Json::array();
    for (std::size_t i = 0; i < spec.A.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < spec.A.cols(); ++j)
            row.push_back(spec.A(i, j));
        A.push_back(std::move(row));
    }
    return Json{{"p", spec.p}, {"n", spec.n}, {"k", spec.k}, {"k1", spec.k1}, {"r", spec.r}, {"A", std::move(A)}};
}

Json to_json(const ManifoldSpec& man)
{
    Json torsion = Json::object();
    for (const auto& [q, e] : man.torsion)
        torsion[std::to_string(q)] = e;
    return Json{{"m", man.m},
                {"torsion", std::move(torsion)},
                {"rational_rank", man.rational_rank},
                {"two_torsion", man.two_torsion}};
}

Json to_json(const Integer& v)
{
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

Json to_json(const TruncatedSeries& s)
{
    Json out = Json::array();
    for (const auto& c : s.coeffs())
        out.push_back(to_json(c));
    return out;
}

Json to_json(const ValidationReport& r)
{
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back(Json{{"constraint", to_string(x.constraint)}, {"message", x.message}});
    return Json{{"valid", r.ok}, {"violations", std::move(v)}, {"advisories", r.advisories}};
}

Json to_json(const ClassInvariant& inv)
{
    return Json{{"p", inv.p}, {"m", inv.m}, {"rational_rank", inv.k2}, {"torsion", inv.torsion}};
}

Json to_json(const IntegralInvariant& inv)
{
    Json torsion = Json::object();
    for (const auto& [q, e] : inv.torsion)
        torsion[std::to_string(q)] = e;
    return Json{{"m", inv.m}, {"torsion", std::move(torsion)}};
}

std::map<int, long long> parse_units(const std::string& text)
{
    std::map<int, long long> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        try {
            if (eq == std::string::npos)
                throw std::invalid_argument("no '='");
            std::size_t a = 0, b = 0;
            const int s = std::stoi(item.substr(0, eq), &a);
            const long long v = std::stoll(item.substr(eq + 1), &b);
            if (a != eq || b != item.size() - eq - 1)
                throw std::invalid_argument("trailing characters");
            out[s] = v;
        } catch (const std::exception&) {
            throw InputError("--units", "expected s=b pairs separated by commas, got \"" + item + "\"");
        }
    }
    return out;
}

}  // namespace pdloop::cli
