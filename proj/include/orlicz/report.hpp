#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace orlicz {

/// One verification result row. CSV columns are fixed:
/// scenario,n,N,check,lhs,rhs,ratio,tolerance,verdict
struct ReportRow {
    std::string scenario;
    int n = 0;
    std::string N = "-";
    std::string check;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
    double tolerance = 0.0;
    bool verdict = false;
};

/// Deterministic %.12g formatting used for every emitted number.
std::string format_double(double x);

std::string csv_header();
std::string csv_row(const ReportRow& row);
nlohmann::json row_to_json(const ReportRow& row);

std::string rows_to_csv(const std::vector<ReportRow>& rows);
std::string rows_to_json(const std::vector<ReportRow>& rows, std::uint64_t seed, int samples);

}  // namespace orlicz
