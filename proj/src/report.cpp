#include "ellident/report.hpp"

#include "ellident/catalog.hpp"

namespace ellident {

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json fj = nlohmann::json::array();
    for (const FailureRecord& f : r.failures) {
        fj.push_back({{"x", f.x}, {"shifts", f.shifts}, {"m", f.m}, {"residual", f.residual}});
    }
    return nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"id", r.id},
                          {"samples", r.samples},
                          {"tol", r.tol},
                          {"seed", r.seed},
                          {"max_residual", r.max_residual},
                          {"median_residual", r.median_residual},
                          {"pass", r.pass},
                          {"waiver", r.waiver},
                          {"failures", fj}};
}

VerificationReport report_from_json(const nlohmann::json& j) {
    VerificationReport r;
    r.id = j.at("id").get<std::string>();
    r.samples = j.at("samples").get<int>();
    r.tol = j.at("tol").get<double>();
    r.seed = j.at("seed").get<uint64_t>();
    r.max_residual = j.at("max_residual").get<double>();
    r.median_residual = j.at("median_residual").get<double>();
    r.pass = j.at("pass").get<bool>();
    r.waiver = j.value("waiver", false);
    if (j.contains("failures")) {
        for (const auto& fj : j.at("failures")) {
            FailureRecord f;
            f.x = fj.at("x").get<double>();
            f.shifts = fj.at("shifts").get<std::vector<double>>();
            f.m = fj.at("m").get<double>();
            f.residual = fj.at("residual").get<double>();
            r.failures.push_back(std::move(f));
        }
    }
    return r;
}

ReportSummary summarize(const std::vector<VerificationReport>& reports) {
    ReportSummary s;
    for (const VerificationReport& r : reports) {
        ++s.total;
        if (r.pass) ++s.passed;
        else ++s.failed;
        if (r.waiver) ++s.waived;
        if (r.max_residual > s.worst_residual) {
            s.worst_residual = r.max_residual;
            s.worst_id = r.id;
        }
    }
    return s;
}

namespace {

std::string constraint_text(const Constraint& c, const Identity& ident) {
    std::string arg = c.arg.str();
    (void)ident;
    return arg + (c.at_sn_zero ? " away from 0 (mod 2K)" : " away from K (mod 2K)");
}

}  // namespace

nlohmann::json catalog_manifest(const std::string& prefix) {
    const Catalog& cat = Catalog::instance();
    nlohmann::json arr = nlohmann::json::array();
    for (const std::string& id : cat.ids(prefix)) {
        if (cat.is_family(id)) {
            Identity probe = instantiate_family(id, 1).realized;
            nlohmann::json cons = nlohmann::json::array();
            for (const Constraint& c : probe.constraints)
                cons.push_back(constraint_text(c, probe));
            arr.push_back({{"id", id},
                           {"family", true},
                           {"rank", "parametric (n = 1.." + std::to_string(kFamilyMaxN) + ")"},
                           {"arity", probe.arity},
                           {"source", probe.source},
                           {"period_in_K", probe.period_in_K},
                           {"constraints", cons}});
        } else {
            const Identity& ident = cat.at(id);
            nlohmann::json cons = nlohmann::json::array();
            for (const Constraint& c : ident.constraints)
                cons.push_back(constraint_text(c, ident));
            arr.push_back({{"id", id},
                           {"family", false},
                           {"rank", ident.rank},
                           {"arity", ident.arity},
                           {"source", ident.source},
                           {"period_in_K", ident.period_in_K},
                           {"constraints", cons}});
        }
    }
    return nlohmann::json{{"schema_version", kReportSchemaVersion}, {"entries", arr}};
}

nlohmann::json to_json(const ReportSummary& s) {
    return nlohmann::json{{"schema_version", kReportSchemaVersion},
                          {"total", s.total},
                          {"passed", s.passed},
                          {"failed", s.failed},
                          {"waived", s.waived},
                          {"worst_residual", s.worst_residual},
                          {"worst_id", s.worst_id}};
}

}  // namespace ellident
