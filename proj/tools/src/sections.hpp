#pragma once

#include "pdloop/cli.hpp"

#include <string>

namespace pdloop::cli {

enum class Status { Ok, Failed, Unsupported };

/// One block of output, kept in both renderings so `report` can stitch
/// sections together without recomputing anything.
struct Section {
    std::string title;
    Status status = Status::Ok;
    Json json = Json::object();
    std::string text;
};

Section validation_section(const PDComplexSpec& spec);
Section validation_section(const ManifoldSpec& man);
Section chi_section(const PDComplexSpec& spec, const std::map<int, long long>& units);
Section series_section(const PDComplexSpec& spec, int cap, const std::map<int, long long>& units);
Section decomposition_section(const PDComplexSpec& spec, int cap);
Section fiber_section(const PDComplexSpec& spec, int cap);
/// `full` dumps every page; otherwise only the summary and E^infinity.
Section oracle_section(const PDComplexSpec& spec, int cap, const std::map<int, long long>& units, bool full);
Section integral_section(const ManifoldSpec& man, int cap);

std::string status_word(Status s);

}  // namespace pdloop::cli
