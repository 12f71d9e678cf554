#include "pdloop/cli.hpp"

#include "sections.hpp"

#include "pdloop/error.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <ostream>

namespace pdloop::cli {

int effective_cap(const RunConfig& cfg, const AnySpec& spec)
{
    if (cfg.cap)
        return std::min(*cfg.cap, max_cap);
    if (const auto* pd = std::get_if<PDComplexSpec>(&spec))
        return std::min(3 * pd->n, max_cap);
    return std::min(6 * std::get<ManifoldSpec>(spec).m, max_cap);
}

namespace {

std::string spec_line(const PDComplexSpec& s)
{
    std::string r;
    for (std::size_t i = 0; i < s.r.size(); ++i)
        r += (i ? "," : "") + std::to_string(s.r[i]);
    std::string out = "p=" + std::to_string(s.p) + " n=" + std::to_string(s.n) + " k=" + std::to_string(s.k) +
                      " k1=" + std::to_string(s.k1) + " r=[" + r + "] A=[";
    for (std::size_t i = 0; i < s.A.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < s.A.cols(); ++j)
            out += (j ? "," : "") + std::to_string(s.A(i, j));
        out += "]";
    }
    return out + "]";
}

std::string spec_line(const ManifoldSpec& man)
{
    std::string out = "m=" + std::to_string(man.m) + " torsion={";
    bool first = true;
    for (const auto& [q, e] : man.torsion) {
        out += (first ? "" : ", ") + std::to_string(q) + ":[";
        first = false;
        for (std::size_t i = 0; i < e.size(); ++i)
            out += (i ? "," : "") + std::to_string(e[i]);
        out += "]";
    }
    return out + "} rational_rank=" + std::to_string(man.rational_rank) +
           " two_torsion=" + (man.two_torsion ? "true" : "false");
}

Json spec_json(const AnySpec& spec)
{
    return std::visit([](const auto& s) { return to_json(s); }, spec);
}

std::string spec_text(const AnySpec& spec)
{
    return std::visit([](const auto& s) { return spec_line(s); }, spec);
}

/// Prints a list of sections; the exit code is 1 if any failed, or if any is
/// unsupported and `strict`.
int emit(const RunConfig& cfg, const AnySpec& spec, int cap, const std::vector<Section>& sections, bool strict,
         std::ostream& out)
{
    bool failed = false;
    for (const auto& s : sections)
        failed = failed || s.status == Status::Failed || (strict && s.status == Status::Unsupported);
    if (cfg.format == Format::Json) {
        Json doc{{"command", cfg.command}, {"spec", spec_json(spec)}, {"cap", cap}};
        Json secs = Json::object();
        for (const auto& s : sections) {
            Json j = s.json;
            j["status"] = status_word(s.status);
            secs[s.title] = std::move(j);
        }
        doc["sections"] = std::move(secs);
        doc["ok"] = !failed;
        out << doc.dump(2) << "\n";
    } else {
        out << "pdloop " << cfg.command << "\n";
        out << "spec: " << spec_text(spec) << "\n";
        out << "cap: " << cap << "\n";
        for (const auto& s : sections) {
            out << "\n[" << s.title << "]";
            if (s.status == Status::Failed)
                out << " FAILED";
            out << "\n" << s.text;
        }
    }
    return failed ? exit_domain : exit_ok;
}

const PDComplexSpec& require_pd(const AnySpec& spec, const std::string& command)
{
    const auto* pd = std::get_if<PDComplexSpec>(&spec);
    if (!pd)
        throw InputError("input", "command '" + command + "' expects a PD complex spec {p, n, k, k1, r, A}");
    return *pd;
}

const ManifoldSpec& require_manifold(const AnySpec& spec, const std::string& command)
{
    const auto* man = std::get_if<ManifoldSpec>(&spec);
    if (!man)
        throw InputError("input", "command '" + command + "' expects a manifold spec {m, torsion, ...}");
    return *man;
}

int run_classify(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.inputs.size() != 2)
        throw InputError("input", "classify takes exactly two spec files");
    const AnySpec a = load_spec(cfg.inputs[0]);
    const AnySpec b = load_spec(cfg.inputs[1]);
    if (a.index() != b.index())
        throw InputError("input", "classify needs two specs of the same kind");

    std::vector<std::string> problems;
    Json doc;
    std::string text;
    auto check = [&](const ValidationReport& r, const std::string& which) {
        for (const auto& v : r.violations)
            problems.push_back(which + ": " + to_string(v.constraint) + ": " + v.message);
    };
    if (const auto* pa = std::get_if<PDComplexSpec>(&a)) {
        const auto& pb = std::get<PDComplexSpec>(b);
        check(validate_pd(*pa), "a");
        check(validate_pd(pb), "b");
        if (problems.empty()) {
            const auto c = classify(*pa, pb);
            doc = Json{{"equivalent", c.verdict == Verdict::Equivalent},
                       {"verdict", to_string(c.verdict)},
                       {"invariant_a", to_json(c.a)},
                       {"invariant_b", to_json(c.b)},
                       {"reason", c.reason}};
        }
    } else {
        const auto& ma = std::get<ManifoldSpec>(a);
        const auto& mb = std::get<ManifoldSpec>(b);
        check(validate_integral(ma), "a");
        check(validate_integral(mb), "b");
        if (problems.empty()) {
            const auto c = classify_integral(ma, mb);
            doc = Json{{"equivalent", c.verdict == Verdict::Equivalent},
                       {"verdict", to_string(c.verdict)},
                       {"invariant_a", to_json(c.a)},
                       {"invariant_b", to_json(c.b)},
                       {"reason", c.reason}};
        }
    }
    if (!problems.empty()) {
        if (cfg.format == Format::Json) {
            out << Json{{"equivalent", nullptr}, {"verdict", "invalid"}, {"violations", problems}}.dump(2) << "\n";
        } else {
            out << "verdict: invalid input\n";
            for (const auto& p : problems)
                out << "violation " << p << "\n";
        }
        return exit_domain;
    }
    if (cfg.format == Format::Json) {
        out << doc.dump(2) << "\n";
    } else {
        auto inv = [](const Json& j) {
            std::string s;
            for (auto it = j.begin(); it != j.end(); ++it)
                s += (s.empty() ? "" : " ") + it.key() + "=" + it.value().dump();
            return s;
        };
        out << "verdict: " << doc["verdict"].get<std::string>() << "\n";
        out << "invariant a: " << inv(doc["invariant_a"]) << "\n";
        out << "invariant b: " << inv(doc["invariant_b"]) << "\n";
        out << "reason: " << doc["reason"].get<std::string>() << "\n";
    }
    return exit_ok;
}

int run_single(const RunConfig& cfg, std::ostream& out)
{
    if (cfg.inputs.size() != 1)
        throw InputError("input", "command '" + cfg.command + "' takes exactly one spec file");
    const AnySpec spec = load_spec(cfg.inputs[0]);
    const int cap = effective_cap(cfg, spec);
    const std::string& cmd = cfg.command;

    if (const auto* man = std::get_if<ManifoldSpec>(&spec)) {
        if (cmd != "validate" && cmd != "integral" && cmd != "report")
            require_pd(spec, cmd);
        std::vector<Section> secs{validation_section(*man)};
        if (cmd != "validate" && secs.front().status == Status::Ok)
            secs.push_back(integral_section(*man, cap));
        return emit(cfg, spec, cap, secs, true, out);
    }

    const auto& pd = std::get<PDComplexSpec>(spec);
    if (cmd == "integral")
        require_manifold(spec, cmd);
    std::vector<Section> secs{validation_section(pd)};
    if (cmd == "validate" || secs.front().status != Status::Ok)
        return emit(cfg, spec, cap, secs, true, out);

    if (cmd == "chi") {
        secs.push_back(chi_section(pd, cfg.units));
    } else if (cmd == "series") {
        secs.push_back(series_section(pd, cap, cfg.units));
    } else if (cmd == "decompose") {
        secs.push_back(decomposition_section(pd, cap));
    } else if (cmd == "oracle") {
        secs.push_back(oracle_section(pd, cap, cfg.units, true));
    } else if (cmd == "report") {
        secs.push_back(chi_section(pd, cfg.units));
        secs.push_back(series_section(pd, cap, cfg.units));
        secs.push_back(decomposition_section(pd, cap));
        if (pd.k >= 2)
            secs.push_back(fiber_section(pd, cap));
        secs.push_back(oracle_section(pd, cap, cfg.units, false));
        return emit(cfg, spec, cap, secs, false, out);
    }
    return emit(cfg, spec, cap, secs, true, out);
}

}  // namespace

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err)
{
    try {
        if (cfg.cap && *cfg.cap < 1)
            throw InputError("--cap", "cap must be at least 1");
        if (cfg.cap && *cfg.cap > max_cap)
            err << "note: cap clamped to " << max_cap << "\n";
        if (cfg.command == "classify")
            return run_classify(cfg, out);
        static const std::vector<std::string> known{"validate", "chi",    "series", "decompose",
                                                    "oracle",   "integral", "report"};
        if (std::find(known.begin(), known.end(), cfg.command) == known.end())
            throw InputError("command", "unknown command '" + cfg.command + "'");
        return run_single(cfg, out);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const StructuralError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_domain;
    }
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Loop-space homology of highly connected Poincare duality complexes"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    RunConfig cfg;
    std::optional<int> cap;
    std::string format = "text";
    std::string units;

    struct Cmd {
        const char* name;
        const char* help;
        int inputs;
    };
    const Cmd cmds[] = {
        {"validate", "Check a spec against the cup-product constraints", 1},
        {"chi", "Print the attaching element", 1},
        {"series", "Loop homology dimensions per degree", 1},
        {"decompose", "Loop-space decomposition and its series check", 1},
        {"classify", "Decide loop-space equivalence of two specs", 2},
        {"oracle", "Replay the spectral sequence and check acyclicity", 1},
        {"integral", "Integral decomposition of a manifold spec", 1},
        {"report", "Every section for one spec", 1},
    };
    for (const auto& c : cmds) {
        auto* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("inputs", cfg.inputs, "spec file(s), '-' for stdin")->required()->expected(c.inputs);
        sub->add_option("--cap", cap, "largest degree computed (default 6m, clamped to 200)");
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--units", units, "units b_s for the attaching element, e.g. 5=2,6=3");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_input;
    }
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.cap = cap;
    cfg.format = format == "json" ? Format::Json : Format::Text;
    try {
        cfg.units = parse_units(units);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return exit_input;
    }
    return run(cfg, out, err);
}

}  // namespace pdloop::cli
