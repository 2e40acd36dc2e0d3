#include "orlicz/report.hpp"

#include <cstdio>

namespace orlicz {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

std::string csv_header() { return "scenario,n,N,check,lhs,rhs,ratio,tolerance,verdict"; }

std::string csv_row(const ReportRow& row) {
    std::string out;
    out += row.scenario;
    out += ',' + std::to_string(row.n);
    out += ',' + row.N;
    out += ',' + row.check;
    out += ',' + format_double(row.lhs);
    out += ',' + format_double(row.rhs);
    out += ',' + format_double(row.ratio);
    out += ',' + format_double(row.tolerance);
    out += ',';
    out += row.verdict ? "pass" : "fail";
    return out;
}

nlohmann::json row_to_json(const ReportRow& row) {
    return nlohmann::json{{"scenario", row.scenario},   {"n", row.n},
                          {"N", row.N},                 {"check", row.check},
                          {"lhs", row.lhs},             {"rhs", row.rhs},
                          {"ratio", row.ratio},         {"tolerance", row.tolerance},
                          {"verdict", row.verdict}};
}

std::string rows_to_csv(const std::vector<ReportRow>& rows) {
    std::string out = csv_header() + "\n";
    for (const auto& row : rows) out += csv_row(row) + "\n";
    return out;
}

std::string rows_to_json(const std::vector<ReportRow>& rows, std::uint64_t seed, int samples) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) arr.push_back(row_to_json(row));
    nlohmann::json doc{{"meta", {{"seed", seed}, {"samples", samples}}}, {"rows", arr}};
    return doc.dump(2);
}

}  // namespace orlicz
