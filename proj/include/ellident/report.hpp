#ifndef ELLIDENT_REPORT_HPP
#define ELLIDENT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ellident {

inline constexpr int kReportSchemaVersion = 1;

struct FailureRecord {
    double x = 0;
    std::vector<double> shifts;
    double m = 0;
    double residual = 0;
};

struct VerificationReport {
    std::string id;
    int samples = 0;
    double tol = 0;
    uint64_t seed = 0;
    double max_residual = 0;
    double median_residual = 0;
    bool pass = false;
    bool waiver = false;
    std::vector<FailureRecord> failures;  // capped at 16 exemplars
};

nlohmann::json to_json(const VerificationReport& r);
VerificationReport report_from_json(const nlohmann::json& j);

// Aggregation used by the report command: counts and overall verdict.
struct ReportSummary {
    int total = 0;
    int passed = 0;
    int failed = 0;
    int waived = 0;
    double worst_residual = 0;
    std::string worst_id;
};
ReportSummary summarize(const std::vector<VerificationReport>& reports);
nlohmann::json to_json(const ReportSummary& s);

// Catalog manifest: id, rank, arity, source anchor and constraint
// descriptions for every identity matching the prefix (families listed
// with their id and rank parameterization).
nlohmann::json catalog_manifest(const std::string& prefix = "");

}  // namespace ellident

#endif
