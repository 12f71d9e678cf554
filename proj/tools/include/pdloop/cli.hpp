#pragma once

#include "pdloop/classify.hpp"
#include "pdloop/complex_model.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace pdloop::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json };

enum ExitCode : int { exit_ok = 0, exit_domain = 1, exit_input = 2 };

constexpr int max_cap = 200;

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<int> cap;
    Format format = Format::Text;
    /// b_s overrides for the attaching element, keyed by s.
    std::map<int, long long> units;
};

/// Bad input: unreadable file, malformed JSON, or a value of the wrong shape.
/// `where` is a file position or a JSON pointer.
class InputError : public std::runtime_error {
public:
    InputError(std::string where, const std::string& what)
        : std::runtime_error(where + ": " + what), where_(std::move(where))
    {
    }
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

using AnySpec = std::variant<PDComplexSpec, ManifoldSpec>;

/// Parses text; throws InputError with the location of the problem.
Json parse_json_text(const std::string& text, const std::string& source);
/// {"p","n","k","k1","r","A"} or {"m","torsion","rational_rank","two_torsion"}.
AnySpec parse_spec(const Json& j);
PDComplexSpec parse_pd_spec(const Json& j);
ManifoldSpec parse_manifold_spec(const Json& j);
AnySpec load_spec(const std::string& path);

Json to_json(const PDComplexSpec& spec);
Json to_json(const ManifoldSpec& man);
/// Integers that do not fit in 64 bits are written as decimal strings.
Json to_json(const Integer& v);
Json to_json(const TruncatedSeries& s);
Json to_json(const ValidationReport& r);
Json to_json(const ClassInvariant& inv);
Json to_json(const IntegralInvariant& inv);

/// "5=2,6=3" -> {5: 2, 6: 3}. Throws InputError.
std::map<int, long long> parse_units(const std::string& text);

/// 6m for PD specs and manifolds; an explicit cap is clamped to max_cap.
int effective_cap(const RunConfig& cfg, const AnySpec& spec);

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// argv front end (CLI11); returns the process exit code.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace pdloop::cli
