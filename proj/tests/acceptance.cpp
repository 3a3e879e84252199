// Acceptance suite: runs every top-level criterion at its stated tolerance
// and prints one pass/fail line per criterion.  Exits nonzero if any fails.

#include <chrono>
#include <cstdarg>
#include <cmath>
#include <cstdio>
#include <random>

#include "ellident/cyclic.hpp"
#include "ellident/discretizer.hpp"
#include "ellident/integrals.hpp"
#include "ellident/master.hpp"
#include "ellident/verifier.hpp"

using namespace ellident;

namespace {

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int index, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %2d. %-38s %s\n", pass ? "PASS" : "FAIL", index, name, detail.c_str());
    if (!pass) ++failures;
}

std::string fmt(const char* f, ...) {
    char buf[256];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

// 1. core invariants and addition-formula closure
void criterion1() {
    Timer t;
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> um(0.01, 0.99);
    std::uniform_real_distribution<double> ux(-8.0, 8.0);
    double worst_id = 0, worst_add = 0, worst_zeta = 0;
    for (int i = 0; i < 10000; ++i) {
        double m = um(rng);
        Modulus mod(m);
        double x = ux(rng) * mod.K();
        JacobiValues v = mod.jacobi(x);
        worst_id = std::max(worst_id, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0));
        worst_id = std::max(worst_id, std::abs(v.dn * v.dn + m * v.sn * v.sn - 1.0));
    }
    std::mt19937_64 rng2(43);
    std::uniform_real_distribution<double> ua(-2.0, 2.0);
    for (int i = 0; i < 2500; ++i) {
        double m = um(rng2);
        Modulus mod(m);
        double a = ua(rng2) * mod.K(), b = ua(rng2) * mod.K();
        JacobiValues va = mod.jacobi(a), vb = mod.jacobi(b);
        double den = 1.0 - m * va.sn * va.sn * vb.sn * vb.sn;
        if (den <= 1e-3) continue;
        JacobiValues vs = mod.jacobi(a + b);
        double sn = (va.sn * vb.cn * vb.dn + vb.sn * va.cn * va.dn) / den;
        double cn = (va.cn * vb.cn - va.sn * va.dn * vb.sn * vb.dn) / den;
        double dn = (va.dn * vb.dn - m * va.cn * vb.cn * va.sn * vb.sn) / den;
        worst_add = std::max(worst_add,
                             std::abs(vs.sn - sn) / std::max(1.0, std::abs(sn)));
        worst_add = std::max(worst_add,
                             std::abs(vs.cn - cn) / std::max(1.0, std::abs(cn)));
        worst_add = std::max(worst_add,
                             std::abs(vs.dn - dn) / std::max(1.0, std::abs(dn)));
        worst_zeta = std::max(worst_zeta, std::abs(mod.zeta(a + b) - mod.zeta(a) - mod.zeta(b) +
                                                   m * va.sn * vb.sn * vs.sn));
    }
    double secs = t.seconds();
    bool pass = worst_id < 1e-12 && worst_add <= 1e-11 && worst_zeta <= 1e-11 && secs < 5.0;
    report(1, "core invariants + addition closure",
           pass,
           fmt("pyth %.2e  add %.2e  zeta %.2e  (%.1fs)", worst_id, worst_add, worst_zeta, secs));
}

// 2. full catalog verification
void criterion2() {
    Timer t;
    SampleDomain dom;
    std::vector<VerificationReport> reports = verify_all("", dom, 200, 1e-8, 42, 4);
    int failed = 0;
    double worst = 0;
    std::string worst_id;
    for (const auto& r : reports) {
        if (!r.pass) {
            ++failed;
            if (r.max_residual > worst) {
                worst = r.max_residual;
                worst_id = r.id;
            }
        }
    }
    double secs = t.seconds();
    bool pass = failed == 0 && secs < 60.0;
    report(2, "full catalog at 200 samples",
           pass,
           fmt("%zu identities, %d failed%s%s  (%.1fs)", reports.size(), failed,
               failed ? ", worst " : "", failed ? worst_id.c_str() : "", secs));
}

// 3. weighted cyclic chain for p = 12, r = 5
void criterion3() {
    Modulus mod(0.5);
    double worst = 0;
    for (int s : {1, 2, 3, 4, 6}) {
        CyclicSpec spec{12, 5, s, 2, 0};
        worst = std::max(worst, chain_weighted("A.dd", spec, 0.4, mod).residual);
    }
    // s = 1 against the closed constant form
    CyclicSpec s1{12, 5, 1, 2, 0};
    CyclicCheckResult r = chain_weighted("A.dd", s1, 0.4, mod);
    double a = 5.0 * 2.0 * mod.K() / 12.0;
    JacobiValues va = mod.jacobi(a);
    double closed = 12.0 * (va.dn - va.cn / va.sn * mod.zeta(a));
    double gap = std::abs(r.lhs_sum.real() - closed);
    bool pass = worst <= 1e-9 && gap <= 1e-9;
    report(3, "weighted chain p=12 r=5, s in {1,2,3,4,6}", pass,
           fmt("worst residual %.2e, closed-form gap %.2e", worst, gap));
}

// 4. all weighted/combination entries
void criterion4() {
    Modulus mod(0.6);
    double worst = 0;
    std::string worst_id;
    double worst_zero = 0;
    for (const CyclicIdentity& e : CyclicCatalog::instance().all()) {
        CyclicSpec spec;
        spec.period_in_K = e.period_in_K;
        if (e.weight == CyclicWeight::alternating) {
            spec.p = 6;
            spec.r = 1;
        } else if (e.weight == CyclicWeight::omega) {
            spec.p = 12;
            spec.r = 5;
            spec.s = 3;
        } else {
            spec.p = 7;
            spec.r = 2;
        }
        spec.sp = e.uses_sp ? 3 : 0;
        CyclicCheckResult r = check_cyclic(e, spec, 0.37, mod);
        if (r.residual > worst) {
            worst = r.residual;
            worst_id = e.id;
        }
        bool zero_rhs = e.rhs.size() == 1 && e.rhs[0].atoms.empty() && !e.rhs[0].is_p_const;
        if (zero_rhs) worst_zero = std::max(worst_zero, std::abs(r.lhs_sum));
    }
    bool pass = worst <= 1e-9 && worst_zero <= 1e-10;
    report(4, "combination catalog (F entries)", pass,
           fmt("worst %.2e at %s, zero-sum entries %.2e", worst, worst_id.c_str(), worst_zero));
}

// 5. reconstruction pipeline
void criterion5() {
    Modulus mod(0.5);
    double a = 0.8;
    JacobiValues va = mod.jacobi(a);
    double cs = va.cn / va.sn, ds = va.dn / va.sn, ns = 1.0 / va.sn;
    ProductSpec f = parse_product_spec("dn^2 * dn(+a) + dn^2 * dn(-a)", {{"a", a}});
    std::vector<Pole> poles = locate_poles(f, mod);
    double alpha_gap = 1e9;
    if (poles.size() == 3) {
        alpha_gap = std::abs(poles[0].alpha[0] - complex(0.0, -2.0 * ds * ns));
        alpha_gap = std::max(alpha_gap, std::abs(poles[1].alpha[0] - complex(0.0, cs * cs)));
        alpha_gap = std::max(alpha_gap, std::abs(poles[2].alpha[0] - complex(0.0, cs * cs)));
    }
    MasterReconstruction rec = reconstruct(f, mod);
    const Identity& seed = Catalog::instance().at("3.1");
    double shifts[] = {a};
    double recon_gap = 0;
    for (int i = 0; i < 50; ++i) {
        double z = 0.05 + i * 0.11;
        recon_gap = std::max(recon_gap, std::abs(rec.eval(z, mod) -
                                                 eval_side(seed, Side::rhs, z, shifts, mod)));
    }
    // class II part
    ProductSpec g = parse_product_spec("dn^2 * dn^2(+a)", {{"a", 0.9}});
    MasterReconstruction rec2 = reconstruct(g, mod);
    double ressum = 0;
    for (const auto& [sh, coef] : rec2.zeta_terms) ressum += coef;
    double mean = typeII_definite_integral(rec2, mod);
    double s2[] = {0.9};
    double closed = definite_value("5.2", mod, s2) / (2.0 * mod.K());
    QuadratureResult q = quad_oracle([&](double t) { return eval_product(g, t, mod); }, 0.0,
                                     2.0 * mod.K(), 1e-11);
    double int_gap = std::max(std::abs(mean - closed), std::abs(mean - q.value / (2.0 * mod.K())));
    bool pass = alpha_gap <= 1e-8 && recon_gap <= 1e-7 && std::abs(ressum) <= 1e-8 &&
                int_gap <= 1e-8;
    report(5, "reconstruction engine", pass,
           fmt("alpha %.2e  pointwise %.2e  residue-sum %.2e  integral %.2e", alpha_gap,
               recon_gap, ressum, int_gap));
}

// 6. integral suite against the oracle
void criterion6() {
    Timer t;
    std::mt19937_64 rng(777);
    std::uniform_real_distribution<double> um(0.15, 0.85);
    std::uniform_real_distribution<double> us(0.15, 1.85);
    double worst_def = 0;
    std::string worst_def_id;
    for (const DefiniteFormula& f : definite_formulas()) {
        for (int trial = 0; trial < 20; ++trial) {
            Modulus mod(um(rng));
            std::vector<double> shifts;
            bool ok = true;
            for (int i = 0; i < f.arity; ++i) shifts.push_back(us(rng) * mod.K());
            for (size_t i = 0; i < shifts.size() && ok; ++i) {
                if (std::abs(std::remainder(shifts[i], mod.K())) < 0.08 * mod.K()) ok = false;
                for (size_t j = 0; j < i && ok; ++j)
                    if (std::abs(std::remainder(shifts[i] - shifts[j], mod.K())) <
                        0.08 * mod.K())
                        ok = false;
            }
            if (!ok) {
                --trial;
                continue;
            }
            double closed = f.closed(mod, shifts);
            QuadratureResult q = quad_oracle(
                [&](double u) { return f.integrand(u, mod, shifts); }, 0.0, 2.0 * mod.K(), 1e-11);
            double gap = std::abs(closed - q.value) / std::max(1.0, std::abs(closed));
            if (gap > worst_def) {
                worst_def = gap;
                worst_def_id = f.id;
            }
        }
    }
    double worst_deriv = 0, worst_cum = 0;
    for (const IndefiniteEntry& e : indefinite_entries()) {
        if (!e.recursive) continue;
        for (int n = 1; n <= 6; ++n) {
            for (auto [m, a, x] : {std::tuple{0.45, 0.8, 1.1}, std::tuple{0.7, 1.2, 0.6}}) {
                Modulus mod(m);
                worst_deriv = std::max(worst_deriv, derivative_check(e.id, n, x, a, mod));
                QuadratureResult q = quad_oracle(
                    [&](double u) { return e.integrand(n, u, a, mod); }, 0.0, x, 1e-11);
                worst_cum = std::max(worst_cum, std::abs(e.value(n, x, a, mod) - q.value) /
                                                    std::max(1.0, std::abs(q.value)));
            }
        }
    }
    double secs = t.seconds();
    bool pass = worst_def <= 1e-9 && worst_deriv <= 1e-6 && worst_cum <= 1e-8 && secs < 120.0;
    report(6, "integral suite vs quadrature", pass,
           fmt("definite %.2e (%s)  deriv %.2e  cumulative %.2e  (%.1fs)", worst_def,
               worst_def_id.c_str(), worst_deriv, worst_cum, secs));
}

// 7. the squared-pair chain equals its explicit constant
void criterion7() {
    Modulus mod(0.5);
    int p = 9, r = 2;
    double step = 2.0 * mod.K() / p, a = r * step, x = 0.4;
    JacobiValues va = mod.jacobi(a);
    double cs = va.cn / va.sn, ds = va.dn / va.sn, ns = 1.0 / va.sn;
    double lhs = 0, d2 = 0;
    for (int j = 0; j < p; ++j) {
        double xj = x + j * step;
        double dj = mod.jacobi(xj).dn, djr = mod.jacobi(xj + a).dn;
        lhs += dj * dj * djr * djr;
        d2 += dj * dj;
    }
    double rhs = -2.0 * cs * cs * d2 +
                 p * (cs * cs + ds * ds - 2.0 * cs * ds * ns * mod.zeta(a));
    double gap = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
    report(7, "squared-pair chain has explicit constant", gap <= 1e-9,
           fmt("residual %.2e", gap));
}

// 8. discretizer exactness and continuum order
void criterion8() {
    TrajectoryReport exact = run_trajectory(Scheme::exact, 0.8, 0.1, 10000);
    TrajectoryReport naive = run_trajectory(Scheme::naive, 0.8, 0.1, 10000);
    std::vector<double> as = {2e-3, 4e-3, 8e-3, 1.6e-2, 3.2e-2, 6.4e-2};
    double slope = continuum_order("3.1", as, 0.5);
    bool pass = exact.max_abs_error <= 1e-8 &&
                naive.max_abs_error >= 1e3 * exact.max_abs_error &&
                std::abs(slope - 2.0) <= 0.1;
    report(8, "exact scheme vs naive scheme", pass,
           fmt("exact %.2e  naive %.2e  slope %.3f", exact.max_abs_error, naive.max_abs_error,
               slope));
}

// 9. trigonometric limits
void criterion9() {
    double worst64 = 0, worst6o = 0, worst63 = 0;
    for (int p : {3, 5, 7, 9}) {
        TrigPair t = trig_product_full(p);
        worst64 = std::max(worst64, std::abs(t.lhs - t.rhs));
    }
    double p3 = std::abs(trig_product_full(3).rhs - 1.0 / 3.0);
    for (int p = 3; p <= 12; ++p) {
        TrigPair t = trig_cot_sum(p);
        worst6o = std::max(worst6o, std::abs(t.lhs - t.rhs));
    }
    double p4 = std::abs(trig_cot_sum(4).rhs - 2.0);
    TrigPair c1 = trig_product_chain(5, 1, 3), c2 = trig_product_chain(7, 2, 3);
    worst63 = std::max(std::abs(c1.lhs - c1.rhs), std::abs(c2.lhs - c2.rhs));
    bool pass = worst64 <= 1e-13 && p3 <= 1e-13 && worst6o <= 1e-12 && p4 <= 1e-12 &&
                worst63 <= 1e-13;
    report(9, "trigonometric limits", pass,
           fmt("products %.1e  cot-sums %.1e  chains %.1e", worst64, worst6o, worst63));
}

// 10. byte-identical reports
void criterion10() {
    SampleDomain dom;
    auto run = [&] {
        std::vector<VerificationReport> rs = verify_all("", dom, 60, 1e-8, 42, 4);
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : rs) arr.push_back(to_json(r));
        return arr.dump();
    };
    std::string first = run(), second = run();
    report(10, "byte-identical reports at seed 42", first == second,
           fmt("%zu bytes%s", first.size(), first == second ? "" : " DIFFER"));
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all acceptance criteria passed\n");
    return failures == 0 ? 0 : 1;
}
