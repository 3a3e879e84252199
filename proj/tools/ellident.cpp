// Command-line front door: batch identity verification, cyclic checks,
// reconstruction, integral checks, trajectory simulation and report
// aggregation.  Exit codes: 0 all checks pass, 1 a numeric check failed,
// 2 usage error.  Runs are reproducible: the effective configuration is
// embedded in every JSON report.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <numeric>
#include <iostream>

#include "ellident/cyclic.hpp"
#include "ellident/discretizer.hpp"
#include "ellident/integrals.hpp"
#include "ellident/master.hpp"
#include "ellident/verifier.hpp"

using namespace ellident;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "ellident 1.0.0";

void write_or_print(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << '\n';
    } else {
        std::ofstream out(out_path);
        if (!out) throw CLI::ValidationError("--out", "cannot open '" + out_path + "'");
        out << doc.dump(2) << '\n';
    }
}

// The worker count is deliberately not part of the embedded configuration:
// reports are merged deterministically, so it cannot affect any value.
json config_json(uint64_t seed, double tol, int samples, const SampleDomain& dom,
                 const std::string& filter) {
    return json{{"seed", seed},       {"tol", tol},
                {"samples", samples}, {"m_lo", dom.m_lo},
                {"m_hi", dom.m_hi},   {"x_lo_in_K", dom.x_lo_in_K},
                {"x_hi_in_K", dom.x_hi_in_K},
                {"exclusion_radius_in_K", dom.exclusion_radius_in_K},
                {"filter", filter}};
}

int cmd_verify(std::string filter, int samples, double tol, uint64_t seed,
               SampleDomain dom, int workers, const std::string& out_path) {
    if (filter.size() >= 1 && filter.back() == '*') filter.pop_back();  // accept "A.*"
    if (!filter.empty() && Catalog::instance().ids(filter).empty())
        throw CLI::ValidationError("--ids", "no identity matches prefix '" + filter + "'");
    std::vector<VerificationReport> reports = verify_all(filter, dom, samples, tol, seed, workers);
    ReportSummary summary = summarize(reports);
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "verify"},
             {"config", config_json(seed, tol, samples, dom, filter)},
             {"summary", to_json(summary)}};
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    doc["reports"] = arr;
    write_or_print(doc, out_path);
    std::cerr << "verified " << summary.total << " identities: " << summary.passed << " passed, "
              << summary.failed << " failed";
    if (summary.waived) std::cerr << " (" << summary.waived << " under conditioning waiver)";
    std::cerr << "\n";
    return summary.failed == 0 ? 0 : 1;
}

int cmd_cyclic(const std::string& id, CyclicSpec spec, double x, double m, double tol,
               const std::string& out_path) {
    Modulus mod(m);
    if (std::gcd(spec.r, spec.p) != 1)
        std::cerr << "note: gcd(r, p) > 1; the chain closes but the orbit revisits points\n";
    CyclicCheckResult res;
    if (id.rfind("F.", 0) == 0 || id.rfind("W.", 0) == 0) {
        const CyclicIdentity& entry = CyclicCatalog::instance().at(id);
        spec.period_in_K = entry.period_in_K;
        res = verify_combination(id, spec, x, mod);
    } else {
        const Identity& local = Catalog::instance().at(id);
        spec.period_in_K = local.period_in_K;
        res = chain_weighted(local, spec, x, mod);
    }
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "cyclic"},
             {"id", id},
             {"p", res.spec.p},
             {"r", res.spec.r},
             {"s", res.spec.s},
             {"sp", res.spec.sp},
             {"period_in_K", res.spec.period_in_K},
             {"x", x},
             {"m", m},
             {"lhs", {res.lhs_sum.real(), res.lhs_sum.imag()}},
             {"rhs", {res.rhs_sum.real(), res.rhs_sum.imag()}},
             {"residual", res.residual},
             {"pass", res.residual <= tol}};
    write_or_print(doc, out_path);
    std::cerr << id << " (p=" << spec.p << ", r=" << spec.r << ", s=" << spec.s
              << "): residual " << res.residual << "\n";
    return res.residual <= tol ? 0 : 1;
}

int cmd_product(int p, int r, int l, double x, double m, double tol,
                const std::string& out_path) {
    Modulus mod(m);
    CyclicCheckResult res = product_cyclic(p, r, l, x, mod);
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "cyclic-product"},
             {"p", p},
             {"r", r},
             {"l", l},
             {"x", x},
             {"m", m},
             {"lhs", res.lhs_sum.real()},
             {"rhs", res.rhs_sum.real()},
             {"residual", res.residual},
             {"pass", res.residual <= tol}};
    write_or_print(doc, out_path);
    return res.residual <= tol ? 0 : 1;
}

int cmd_trig(int p, double tol, const std::string& out_path) {
    json arr = json::array();
    bool ok = true;
    for (const auto& [id, pair] : trig_limits(p)) {
        double res = std::abs(pair.lhs - pair.rhs);
        ok = ok && res <= tol;
        arr.push_back({{"id", id}, {"lhs", pair.lhs}, {"rhs", pair.rhs}, {"abs_diff", res}});
    }
    write_or_print(json{{"schema_version", kReportSchemaVersion},
                        {"command", "cyclic-trig"},
                        {"p", p},
                        {"checks", arr}},
                   out_path);
    return ok ? 0 : 1;
}

int cmd_master(const std::string& preset, const std::string& expr,
               std::vector<std::string> bindings, double m, double tol, bool integral,
               const std::string& out_path) {
    std::map<std::string, double> shifts;
    for (const std::string& b : bindings) {
        auto eq = b.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--shift", "expected name=value, got '" + b + "'");
        shifts[b.substr(0, eq)] = std::stod(b.substr(eq + 1));
    }
    std::string text = expr;
    if (!preset.empty()) {
        if (preset == "eq3.1") text = "dn^2 * dn(+a) + dn^2 * dn(-a)";
        else if (preset == "halflocd2d") text = "dn^2 * dn(-a)";
        else if (preset == "dn2") text = "dn^2";
        else if (preset == "eq5.2") text = "dn^2 * dn^2(+a)";
        else throw CLI::ValidationError("--preset", "unknown preset '" + preset + "'");
    }
    if (text.empty()) throw CLI::ValidationError("--f", "no function given");

    Modulus mod(m);
    ProductSpec f = parse_product_spec(text, shifts);
    MasterReconstruction rec = reconstruct(f, mod);

    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        double z = 0.05 + i * (4.0 * mod.K() - 0.1) / 49.0;
        worst = std::max(worst, std::abs(eval_product(f, z, mod) - rec.eval(z, mod)));
    }

    json terms = json::array();
    for (const auto& t : rec.terms) {
        const char* basis = t.basis == JacobiBasis::dn    ? "dn"
                            : t.basis == JacobiBasis::sn  ? "sn"
                            : t.basis == JacobiBasis::cn  ? "cn"
                                                          : "dn^2";
        terms.push_back({{"basis", basis},
                         {"arg_shift", t.arg_shift},
                         {"deriv_order", t.deriv_order},
                         {"coef", t.coef}});
    }
    for (const auto& [shift, coef] : rec.zeta_terms)
        terms.push_back({{"basis", "Z"}, {"arg_shift", shift}, {"deriv_order", 0}, {"coef", coef}});
    json poles = json::array();
    for (const Pole& p : rec.poles) {
        json alphas = json::array();
        for (const complex& al : p.alpha) alphas.push_back({al.real(), al.imag()});
        poles.push_back({{"re", p.center.real()},
                         {"im", p.center.imag()},
                         {"order", p.order},
                         {"alpha", alphas}});
    }
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "master"},
             {"f", text},
             {"m", m},
             {"class", rec.cls.type()},
             {"P", rec.cls.P},
             {"Q", rec.cls.Q},
             {"poles", poles},
             {"terms", terms},
             {"C", rec.C},
             {"gamma2", rec.gamma2},
             {"max_deviation", worst},
             {"pass", worst <= tol}};
    if (integral) {
        double v = typeII_definite_integral(rec, mod);
        QuadratureResult q = quad_oracle([&](double t) { return eval_product(f, t, mod); }, 0.0,
                                         2.0 * mod.K(), 1e-11);
        doc["period_mean"] = v;
        doc["quadrature"] = q.value / (2.0 * mod.K());
        doc["abs_diff"] = std::abs(v - q.value / (2.0 * mod.K()));
        doc["pass"] = doc["pass"].get<bool>() && doc["abs_diff"].get<double>() <= tol;
    }
    write_or_print(doc, out_path);
    std::cerr << "class " << rec.cls.type() << ", " << rec.poles.size()
              << " poles, max deviation " << worst << "\n";
    return doc["pass"].get<bool>() ? 0 : 1;
}

int cmd_integrate(const std::string& id, int n, double m, std::vector<double> shifts, double x,
                  bool check, double tol, const std::string& out_path) {
    Modulus mod(m);
    json doc{{"schema_version", kReportSchemaVersion}, {"command", "integrate"}, {"id", id},
             {"m", m}};
    bool pass = true;
    bool definite = id.rfind("G.", 0) == 0 || id == "5.2" || id == "5.6" || id == "5.8a";
    if (definite) {
        const DefiniteFormula& f = definite_formula(id);
        if (static_cast<int>(shifts.size()) < f.arity)
            throw CLI::ValidationError("--a", id + " needs " + std::to_string(f.arity) +
                                                  " shift(s)");
        double closed = f.closed(mod, shifts);
        doc["shifts"] = shifts;
        doc["closed"] = closed;
        if (check) {
            QuadratureResult q = quad_oracle(
                [&](double t) { return f.integrand(t, mod, shifts); }, 0.0, 2.0 * mod.K(), 1e-11);
            doc["quadrature"] = q.value;
            doc["abs_diff"] = std::abs(closed - q.value);
            pass = doc["abs_diff"].get<double>() <= tol * std::max(1.0, std::abs(closed));
        }
    } else {
        if (shifts.empty()) throw CLI::ValidationError("--a", "indefinite entries need --a");
        double a = shifts[0];
        double val = indefinite_eval(id, n, x, a, mod);
        doc["n"] = n;
        doc["a"] = a;
        doc["x"] = x;
        doc["value"] = val;
        if (check) {
            const IndefiniteEntry& e = indefinite_entry(id);
            QuadratureResult q =
                quad_oracle([&](double t) { return e.integrand(n, t, a, mod); }, 0.0, x, 1e-11);
            doc["quadrature"] = q.value;
            doc["abs_diff"] = std::abs(val - q.value);
            doc["derivative_residual"] = derivative_check(id, n, x, a, mod);
            pass = doc["abs_diff"].get<double>() <= tol * std::max(1.0, std::abs(val)) &&
                   doc["derivative_residual"].get<double>() <= 1e-6;
        }
    }
    doc["pass"] = pass;
    write_or_print(doc, out_path);
    return pass ? 0 : 1;
}

int cmd_simulate(const std::string& scheme_name, double m, double delta, long steps, double z0,
                 const std::string& csv_path, const std::string& out_path) {
    Scheme scheme = scheme_name == "exact" ? Scheme::exact : Scheme::naive;
    TrajectoryReport rep = run_trajectory(scheme, m, delta, steps, z0);
    if (!csv_path.empty()) write_trajectory_csv(rep, csv_path);
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "simulate"},
             {"scheme", scheme_name},
             {"m", m},
             {"delta", delta},
             {"steps", steps},
             {"z0", z0},
             {"max_abs_error", rep.max_abs_error}};
    write_or_print(doc, out_path);
    return 0;
}

int cmd_manifest(const std::string& prefix, const std::string& out_path) {
    write_or_print(catalog_manifest(prefix), out_path);
    return 0;
}

int cmd_report(const std::vector<std::string>& inputs, const std::string& out_path) {
    std::vector<VerificationReport> all;
    for (const std::string& path : inputs) {
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("--in", "cannot read '" + path + "'");
        json doc = json::parse(in);
        const json& arr = doc.contains("reports") ? doc.at("reports") : doc;
        for (const json& rj : arr) all.push_back(report_from_json(rj));
    }
    ReportSummary s = summarize(all);
    std::cout << "id                        pass   max_residual\n";
    for (const VerificationReport& r : all) {
        std::printf("%-25s %-6s %.3e\n", r.id.c_str(), r.pass ? "pass" : "FAIL", r.max_residual);
    }
    std::cout << "total " << s.total << ", passed " << s.passed << ", failed " << s.failed
              << "\n";
    json doc{{"schema_version", kReportSchemaVersion},
             {"command", "report"},
             {"summary", to_json(s)}};
    if (!out_path.empty()) write_or_print(doc, out_path);
    return s.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"verified Jacobi elliptic identities, integrals and schemes"};
    app.set_version_flag("--version", kVersion);
    app.set_config("--config", "", "key=value configuration file");
    app.require_subcommand(1);

    // shared options
    uint64_t seed = 42;
    double tol = kDefaultTol;
    int samples = kDefaultSamples;
    int workers = 1;
    std::string out_path;
    SampleDomain dom;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--seed", seed, "rng seed");
        sub->add_option("--tol", tol, "pass tolerance");
        sub->add_option("--out", out_path, "write the JSON report here instead of stdout");
    };

    auto* verify = app.add_subcommand("verify", "sample-verify catalog identities");
    std::string filter;
    verify->add_option("--ids", filter, "id prefix filter, e.g. A. or E.d26");
    verify->add_option("--samples", samples, "samples per identity");
    verify->add_option("--m-lo", dom.m_lo, "lower end of the m range");
    verify->add_option("--m-hi", dom.m_hi, "upper end of the m range");
    verify->add_option("--workers", workers, "worker threads");
    add_common(verify);

    auto* cyclic = app.add_subcommand("cyclic", "chained and weighted cyclic checks");
    std::string cyc_id = "A.dd";
    CyclicSpec spec;
    double cx = 0.4, cm = 0.5;
    cyclic->add_option("--identity", cyc_id, "local id to chain, or an F./W. entry");
    cyclic->add_option("--p", spec.p, "number of points")->required();
    cyclic->add_option("--r", spec.r, "spacing");
    cyclic->add_option("--s", spec.s, "weight order (omega = exp(2 i pi / s))");
    cyclic->add_option("--sp", spec.sp, "second spacing s'");
    cyclic->add_option("--x", cx, "base point");
    cyclic->add_option("--m", cm, "parameter m");
    add_common(cyclic);

    auto* product = app.add_subcommand("product", "product chains of dn factors");
    int pp = 5, pr = 1, pl = 3;
    double px = 0.6, pm = 0.5;
    product->add_option("--p", pp)->required();
    product->add_option("--r", pr);
    product->add_option("--l", pl, "factors per product (odd; l = p gives the full product)");
    product->add_option("--x", px);
    product->add_option("--m", pm);
    add_common(product);

    auto* trig = app.add_subcommand("trig", "m -> 0 trigonometric limits");
    int tp = 5;
    trig->add_option("--p", tp)->required();
    add_common(trig);

    auto* master = app.add_subcommand("master", "classify, extract poles and reconstruct");
    std::string preset, fexpr;
    std::vector<std::string> bindings;
    double mm = 0.5;
    bool with_integral = false;
    master->add_option("--preset", preset, "eq3.1 | halflocd2d | dn2 | eq5.2");
    master->add_option("--f", fexpr, "product expression, e.g. \"dn^2 * dn(+a) + dn^2 * dn(-a)\"");
    master->add_option("--shift", bindings, "shift bindings name=value (repeatable)");
    master->add_option("--m", mm, "parameter m");
    master->add_flag("--integral", with_integral, "also evaluate the class-II period mean");
    add_common(master);

    auto* integrate = app.add_subcommand("integrate", "closed-form integrals vs the oracle");
    std::string int_id = "G.g1";
    int int_n = 1;
    double ia = 0.8, ia2 = 0.0, ia3 = 0.0, ix = 1.0, im = 0.5;
    bool check = false;
    integrate->add_option("--id", int_id, "G.g1..G.g12, 5.2, 5.6, 5.8a, 5.10.., H.h1..H.h10")
        ->required();
    integrate->add_option("--n", int_n, "recursion depth for H entries");
    integrate->add_option("--m", im, "parameter m");
    integrate->add_option("--a", ia, "first shift");
    integrate->add_option("--a2", ia2, "second shift");
    integrate->add_option("--a3", ia3, "third shift");
    integrate->add_option("--x", ix, "upper limit for indefinite entries");
    integrate->add_flag("--check", check, "compare against the quadrature oracle");
    add_common(integrate);

    auto* simulate = app.add_subcommand("simulate", "exact vs naive difference schemes");
    std::string scheme_name = "exact";
    double sm = 0.8, sdelta = 0.1, sz0 = 0.0;
    long ssteps = 10000;
    std::string csv_path;
    simulate->add_option("--scheme", scheme_name, "exact | naive")
        ->check(CLI::IsMember({"exact", "naive"}));
    simulate->add_option("--m", sm);
    simulate->add_option("--delta", sdelta);
    simulate->add_option("--steps", ssteps);
    simulate->add_option("--z0", sz0);
    simulate->add_option("--csv", csv_path, "trajectory CSV output path");
    add_common(simulate);

    auto* manifest = app.add_subcommand("manifest", "export the identity catalog manifest");
    std::string man_prefix;
    manifest->add_option("--ids", man_prefix, "id prefix filter");
    manifest->add_option("--out", out_path, "write here instead of stdout");

    auto* report = app.add_subcommand("report", "merge verification reports");
    std::vector<std::string> inputs;
    report->add_option("--in", inputs, "input JSON report files")->required();
    add_common(report);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(filter, samples, tol, seed, dom, workers, out_path);
        if (cyclic->parsed()) return cmd_cyclic(cyc_id, spec, cx, cm, std::max(tol, 1e-9), out_path);
        if (product->parsed())
            return cmd_product(pp, pr, pl, px, pm, std::max(tol, 1e-9), out_path);
        if (trig->parsed()) return cmd_trig(tp, 1e-12, out_path);
        if (master->parsed())
            return cmd_master(preset, fexpr, bindings, mm, std::max(tol, 1e-7), with_integral,
                              out_path);
        if (integrate->parsed())
            return cmd_integrate(int_id, int_n, im,
                                 ia3 != 0.0 ? std::vector<double>{ia, ia2, ia3}
                                 : ia2 != 0.0 ? std::vector<double>{ia, ia2}
                                              : std::vector<double>{ia},
                                 ix, check, std::max(tol, 1e-9), out_path);
        if (simulate->parsed())
            return cmd_simulate(scheme_name, sm, sdelta, ssteps, sz0, csv_path, out_path);
        if (manifest->parsed()) return cmd_manifest(man_prefix, out_path);
        if (report->parsed()) return cmd_report(inputs, out_path);
    } catch (const CLI::Error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const unknown_identity& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
