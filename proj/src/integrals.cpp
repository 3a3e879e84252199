#include "ellident/integrals.hpp"

#include "ellident/expr.hpp"

#include <cmath>
#include <stdexcept>

namespace ellident {

namespace {

double pw(double v, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= v;
    return acc;
}

struct Aux {
    double cs, ds, ns, nc, dc, sn, cn, dn, Z;
};

Aux aux_at(double a, const Modulus& mod) {
    JacobiValues v = mod.jacobi(a);
    return {v.cn / v.sn, v.dn / v.sn, 1.0 / v.sn, 1.0 / v.cn, v.dn / v.cn,
            v.sn,        v.cn,        v.dn,       mod.zeta(a)};
}

}  // namespace

double int_dn_pow(int k, double x, const Modulus& mod) {
    if (k < 0) throw std::invalid_argument("int_dn_pow: negative power");
    if (k == 0) return x;
    if (k == 1) return mod.am(x);
    if (k == 2) return mod.zeta(x) + mod.E_over_K() * x;
    JacobiValues v = mod.jacobi(x);
    double m = mod.m();
    // (n-1) D_n = m sn cn dn^(n-3) + (n-2)(2-m) D_(n-2) - (n-3)(1-m) D_(n-4)
    double tail = k >= 4 ? (k - 3) * (1.0 - m) * int_dn_pow(k - 4, x, mod) : 0.0;
    return (m * v.sn * v.cn * pw(v.dn, k - 3) + (k - 2) * (2.0 - m) * int_dn_pow(k - 2, x, mod) -
            tail) /
           (k - 1);
}

double int_sn_pow(int k, double x, const Modulus& mod) {
    if (k < 0) throw std::invalid_argument("int_sn_pow: negative power");
    if (k == 0) return x;
    double m = mod.m();
    JacobiValues v = mod.jacobi(x);
    if (k == 1) {
        double rm = std::sqrt(m);
        return std::log((v.dn - rm * v.cn) / (1.0 - rm)) / rm;
    }
    if (k == 2) return (x - mod.zeta(x) - mod.E_over_K() * x) / m;
    // m (n-1) S_n = [sn^(n-3) cn dn]_0^x + (n-2)(1+m) S_(n-2) - (n-3) S_(n-4)
    double boundary = pw(v.sn, k - 3) * v.cn * v.dn - (k == 3 ? 1.0 : 0.0);
    double tail = k >= 4 ? (k - 3) * int_sn_pow(k - 4, x, mod) : 0.0;
    return (boundary + (k - 2) * (1.0 + m) * int_sn_pow(k - 2, x, mod) - tail) /
           (m * (k - 1));
}

double int_cn_pow(int k, double x, const Modulus& mod) {
    if (k < 0) throw std::invalid_argument("int_cn_pow: negative power");
    if (k == 0) return x;
    double m = mod.m();
    JacobiValues v = mod.jacobi(x);
    if (k == 1) return std::asin(std::sqrt(m) * v.sn) / std::sqrt(m);
    if (k == 2) return (mod.zeta(x) + mod.E_over_K() * x - (1.0 - m) * x) / m;
    // m (n-1) C_n = sn cn^(n-3) dn + (n-3)(1-m) C_(n-4) + (n-2)(2m-1) C_(n-2)
    double tail = k >= 4 ? (k - 3) * (1.0 - m) * int_cn_pow(k - 4, x, mod) : 0.0;
    return (v.sn * pw(v.cn, k - 3) * v.dn + tail +
            (k - 2) * (2.0 * m - 1.0) * int_cn_pow(k - 2, x, mod)) /
           (m * (k - 1));
}

double int_dn_dn_shift(double x, double a, const Modulus& mod) {
    Aux A = aux_at(a, mod);
    double m = mod.m();
    double snx = mod.jacobi(x).sn;
    double arg = 1.0 - m * A.sn * A.sn * snx * snx;
    if (arg <= 0.0)
        throw std::domain_error("int_dn_dn_shift: log argument crossed zero (shift too close "
                                "to the lattice)");
    return A.ds * A.ns * mod.F(mod.am(x)) -
           A.dn * A.cs * A.cs * mod.Pi(mod.am(x), m * A.sn * A.sn) + 0.5 * A.cs * std::log(arg);
}

// ---------------------------------------------------------------- definite

namespace {

using Shifts = std::span<const double>;

double jf_sn(double u, const Modulus& mod) { return mod.jacobi(u).sn; }
double jf_cn(double u, const Modulus& mod) { return mod.jacobi(u).cn; }
double jf_dn(double u, const Modulus& mod) { return mod.jacobi(u).dn; }

std::vector<DefiniteFormula> build_definite() {
    std::vector<DefiniteFormula> out;
    auto add = [&out](std::string id, int arity,
                      std::function<double(const Modulus&, Shifts)> closed,
                      std::function<double(double, const Modulus&, Shifts)> integrand) {
        out.push_back({std::move(id), arity, std::move(closed), std::move(integrand)});
    };

    add("G.g1", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return 2.0 * a.ds * a.ns * mod.E() -
                   2.0 * mod.K() * a.cs * a.cs * (a.dn - a.cs * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            return pw(jf_dn(x, mod), 3) * jf_dn(x + s[0], mod);
        });
    add("G.g2", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return 2.0 * a.cs * a.ds * mod.E() -
                   2.0 * mod.K() * (a.cs * a.ds - pw(a.ns, 3) * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            double m = mod.m();
            return m * m * pw(jf_sn(x, mod), 3) * jf_sn(x + s[0], mod);
        });
    add("G.g3", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            double m = mod.m();
            return 2.0 * a.cs * a.ns * mod.E() +
                   2.0 * mod.K() * (m * m * a.cn - a.cs * a.ns + pw(a.ds, 3) * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            double m = mod.m();
            return m * m * pw(jf_cn(x, mod), 3) * jf_cn(x + s[0], mod);
        });
    add("G.g4", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return 4.0 * a.cs * a.ns * mod.E() -
                   2.0 * mod.K() * a.ns *
                       (a.cs * (1.0 + a.dn * a.dn) -
                        (1.0 + a.cn * a.cn) * a.ds * a.ns * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            JacobiValues v = mod.jacobi(x), w = mod.jacobi(x + s[0]);
            return mod.m() * v.dn * v.sn * w.dn * w.sn;
        });
    add("G.g5", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return -4.0 * a.cs * a.ds * mod.E() +
                   2.0 * mod.K() *
                       (2.0 * a.cs * a.ds - (a.cs * a.cs + a.ds * a.ds) * a.ns * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            JacobiValues v = mod.jacobi(x), w = mod.jacobi(x + s[0]);
            return mod.m() * v.dn * v.cn * w.dn * w.cn;
        });
    add("G.g6", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return 4.0 * a.ds * a.ns * mod.E() +
                   2.0 * mod.K() * a.ns * (1.0 + a.dn * a.dn) * (a.cs * a.ns * a.Z - a.ds);
        },
        [](double x, const Modulus& mod, Shifts s) {
            JacobiValues v = mod.jacobi(x), w = mod.jacobi(x + s[0]);
            double m = mod.m();
            return m * m * v.sn * v.cn * w.sn * w.cn;
        });

    // Four-factor products; the closed form below is the full integral
    // over [0, 2K] (the zeta-sum structure is the per-period mean times 2K).
    auto three_shift_zsum = [](const Modulus& mod, Shifts s, CoefFunc f) {
        auto val = [&mod, f](double u) {
            JacobiValues v = mod.jacobi(u);
            switch (f) {
                case CoefFunc::cs: return v.cn / v.sn;
                case CoefFunc::ns: return 1.0 / v.sn;
                default: return v.dn / v.sn;  // ds
            }
        };
        double a = s[0], ap = s[1], app = s[2];
        return val(a) * val(ap - a) * val(app - a) * mod.zeta(a) -
               val(ap) * val(ap - a) * val(app - ap) * mod.zeta(ap) +
               val(app) * val(app - a) * val(app - ap) * mod.zeta(app);
    };

    add("G.g7", 3,
        [three_shift_zsum](const Modulus& mod, Shifts s) {
            double dn3 = mod.jacobi(s[0]).dn * mod.jacobi(s[1]).dn * mod.jacobi(s[2]).dn;
            return 2.0 * mod.K() * (dn3 + three_shift_zsum(mod, s, CoefFunc::cs));
        },
        [](double x, const Modulus& mod, Shifts s) {
            return jf_dn(x, mod) * jf_dn(x + s[0], mod) * jf_dn(x + s[1], mod) *
                   jf_dn(x + s[2], mod);
        });
    add("G.g8", 3,
        [three_shift_zsum](const Modulus& mod, Shifts s) {
            return 2.0 * mod.K() * three_shift_zsum(mod, s, CoefFunc::ns);
        },
        [](double x, const Modulus& mod, Shifts s) {
            double m = mod.m();
            return m * m * jf_sn(x, mod) * jf_sn(x + s[0], mod) * jf_sn(x + s[1], mod) *
                   jf_sn(x + s[2], mod);
        });
    add("G.g9", 3,
        [three_shift_zsum](const Modulus& mod, Shifts s) {
            double m = mod.m();
            double cn3 = mod.jacobi(s[0]).cn * mod.jacobi(s[1]).cn * mod.jacobi(s[2]).cn;
            return 2.0 * mod.K() * (m * m * cn3 + three_shift_zsum(mod, s, CoefFunc::ds));
        },
        [](double x, const Modulus& mod, Shifts s) {
            double m = mod.m();
            return m * m * jf_cn(x, mod) * jf_cn(x + s[0], mod) * jf_cn(x + s[1], mod) *
                   jf_cn(x + s[2], mod);
        });
    add("G.g10", 3,
        [](const Modulus& mod, Shifts s) {
            double m = mod.m();
            double a = s[0], ap = s[1], app = s[2];
            Aux A = aux_at(a, mod), Ap = aux_at(ap, mod), App = aux_at(app, mod);
            Aux Dpa = aux_at(ap - a, mod), Dpp = aux_at(app - a, mod), Dppp = aux_at(app - ap, mod);
            double val = m * m * A.sn * Ap.cn * App.sn - A.ds * Dpa.ds * Dpp.ns * A.Z +
                         Ap.ds * Dpa.ns * Dppp.ns * Ap.Z - App.ds * Dpp.ns * Dppp.ds * App.Z;
            return 2.0 * mod.K() * val;
        },
        [](double x, const Modulus& mod, Shifts s) {
            double m = mod.m();
            return m * m * jf_cn(x, mod) * jf_sn(x + s[0], mod) * jf_cn(x + s[1], mod) *
                   jf_sn(x + s[2], mod);
        });
    add("G.g11", 3,
        [](const Modulus& mod, Shifts s) {
            double a = s[0], ap = s[1], app = s[2];
            Aux A = aux_at(a, mod), Ap = aux_at(ap, mod), App = aux_at(app, mod);
            Aux Dpa = aux_at(ap - a, mod), Dpp = aux_at(app - a, mod), Dppp = aux_at(app - ap, mod);
            double val = -A.ns * Dpa.ns * Dpp.cs * A.Z + Ap.ns * Dpa.cs * Dppp.cs * Ap.Z -
                         App.ns * Dpp.cs * Dppp.ns * App.Z;
            return 2.0 * mod.K() * val;
        },
        [](double x, const Modulus& mod, Shifts s) {
            return mod.m() * jf_sn(x, mod) * jf_dn(x + s[0], mod) * jf_sn(x + s[1], mod) *
                   jf_dn(x + s[2], mod);
        });
    add("G.g12", 3,
        [](const Modulus& mod, Shifts s) {
            double m = mod.m();
            double a = s[0], ap = s[1], app = s[2];
            Aux A = aux_at(a, mod), Ap = aux_at(ap, mod), App = aux_at(app, mod);
            Aux Dpa = aux_at(ap - a, mod), Dpp = aux_at(app - a, mod), Dppp = aux_at(app - ap, mod);
            double val = m * A.dn * Ap.cn * App.dn + A.ds * Dpa.ds * Dpp.cs * A.Z -
                         Ap.ds * Dpa.cs * Dppp.cs * Ap.Z + App.ds * Dpp.cs * Dppp.ds * App.Z;
            return 2.0 * mod.K() * val;
        },
        [](double x, const Modulus& mod, Shifts s) {
            return mod.m() * jf_cn(x, mod) * jf_dn(x + s[0], mod) * jf_cn(x + s[1], mod) *
                   jf_dn(x + s[2], mod);
        });

    add("5.2", 1,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod);
            return -4.0 * mod.E() * a.cs * a.cs +
                   2.0 * mod.K() *
                       (a.cs * a.cs + a.ds * a.ds - 2.0 * a.cs * a.ds * a.ns * a.Z);
        },
        [](double x, const Modulus& mod, Shifts s) {
            double d0 = jf_dn(x, mod), d1 = jf_dn(x + s[0], mod);
            return d0 * d0 * d1 * d1;
        });
    // "5.6" is the same four-dn integral as G.g7 under a different name.
    const DefiniteFormula& g7 = out[6];
    add("5.6", 3, g7.closed, g7.integrand);
    add("5.8a", 2,
        [](const Modulus& mod, Shifts s) {
            Aux a = aux_at(s[0], mod), ap = aux_at(s[1], mod), d = aux_at(s[0] - s[1], mod);
            double val = -d.ds * (a.dn - a.cs * a.Z) + d.ns * (ap.dn - ap.cs * ap.Z);
            return 2.0 * mod.K() * val;
        },
        [](double x, const Modulus& mod, Shifts s) {
            return mod.m() * jf_dn(x, mod) * jf_sn(x + s[0], mod) * jf_cn(x + s[1], mod);
        });
    return out;
}

}  // namespace

const std::vector<DefiniteFormula>& definite_formulas() {
    static const std::vector<DefiniteFormula> table = build_definite();
    return table;
}

const DefiniteFormula& definite_formula(const std::string& id) {
    for (const DefiniteFormula& f : definite_formulas())
        if (f.id == id) return f;
    throw std::invalid_argument("unknown definite integral id '" + id + "'");
}

double definite_value(const std::string& id, const Modulus& mod, std::span<const double> shifts) {
    const DefiniteFormula& f = definite_formula(id);
    if (shifts.size() < static_cast<size_t>(f.arity))
        throw std::invalid_argument(id + ": expected " + std::to_string(f.arity) + " shifts");
    return f.closed(mod, shifts);
}

// -------------------------------------------------------------- indefinite

namespace {

double B_of(const Aux& a) { return -a.cs * a.cs; }

// "5.13": I_n = B I_(n-1) + cs/(2n-1) dn^(2n-1) + ds ns Int dn^(2n-1),
// I_k = int dn^(2k) dn(x+a), I_0 = am(x+a) - am(a).
double rec_513(int n, double x, double a, const Modulus& mod) {
    Aux A = aux_at(a, mod);
    double I = mod.am(x + a) - mod.am(a);
    for (int k = 1; k <= n; ++k) {
        double dnp = pw(mod.jacobi(x).dn, 2 * k - 1);
        I = B_of(A) * I + A.cs / (2.0 * k - 1.0) * (dnp - 1.0) +
            A.ds * A.ns * int_dn_pow(2 * k - 1, x, mod);
    }
    return I;
}

// "5.19": see below; I_1 from "5.20".
double val_520(double x, double a, const Modulus& mod) {
    Aux A = aux_at(a, mod);
    return -A.cs * A.cs *
               (mod.E_inc(mod.am(x)) + mod.E_inc(mod.am(x + a)) - mod.E_inc(mod.am(a))) -
           (1.0 - mod.m()) * x + 2.0 * A.ds * A.ns * int_dn_dn_shift(x, a, mod);
}

double rec_519(int n, double x, double a, const Modulus& mod) {
    Aux A = aux_at(a, mod);
    double B = B_of(A);
    double I = val_520(x, a, mod);
    for (int k = 2; k <= n; ++k) {
        double sum1 = 0.0, sum2 = 0.0;
        for (int j = 1; j <= k - 1; ++j) {
            sum1 += pw(B, j - 1) * (pw(mod.jacobi(x).dn, 2 * (k - j)) - 1.0) /
                    static_cast<double>(k - j);
            sum2 += pw(B, j - 1) * int_dn_pow(2 * (k - j), x, mod);
        }
        I = B * I + B * int_dn_pow(2 * k, x, mod) - (1.0 - mod.m()) * int_dn_pow(2 * k - 2, x, mod) +
            2.0 * pw(B, k - 1) * A.ds * A.ns * int_dn_dn_shift(x, a, mod) +
            A.cs * A.ds * A.ns * sum1 + 2.0 * A.ds * A.ds * A.ns * A.ns * sum2;
    }
    return I;
}

std::vector<IndefiniteEntry> build_indefinite() {
    std::vector<IndefiniteEntry> out;
    auto add = [&out](std::string id, bool rec,
                      std::function<double(int, double, double, const Modulus&)> value,
                      std::function<double(int, double, double, const Modulus&)> integrand) {
        out.push_back({std::move(id), rec, std::move(value), std::move(integrand)});
    };

    add("5.10", false,
        [](int, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            return B_of(A) * (mod.am(x + a) - mod.am(a)) + A.ds * A.ns * mod.am(x) +
                   A.cs * (mod.jacobi(x).dn - 1.0);
        },
        [](int, double x, double a, const Modulus& mod) {
            double d = mod.jacobi(x).dn;
            return d * d * mod.jacobi(x + a).dn;
        });
    add("5.11", false,
        [](int, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double B = B_of(A);
            JacobiValues v = mod.jacobi(x);
            return B * B * (mod.am(x + a) - mod.am(a)) +
                   A.ds * A.ns * (1.0 + B - 0.5 * mod.m()) * mod.am(x) +
                   B * A.cs * (v.dn - 1.0) + A.cs / 3.0 * (pw(v.dn, 3) - 1.0) +
                   0.5 * mod.m() * A.ds * A.ns * v.sn * v.cn;
        },
        [](int, double x, double a, const Modulus& mod) {
            double d = mod.jacobi(x).dn;
            return pw(d, 4) * mod.jacobi(x + a).dn;
        });
    add("5.15", false,
        [](int, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            return 2.0 * A.ds * A.ns * mod.F(mod.am(x)) -
                   2.0 * A.dn * A.cs * A.cs * mod.Pi(mod.am(x), m * A.sn * A.sn);
        },
        [](int, double x, double a, const Modulus& mod) {
            return mod.jacobi(x).dn * (mod.jacobi(x + a).dn + mod.jacobi(x - a).dn);
        });
    add("5.16", false,
        [](int, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double snx = mod.jacobi(x).sn;
            double arg = 1.0 - mod.m() * A.sn * A.sn * snx * snx;
            if (arg <= 0.0) throw std::domain_error("5.16: log argument crossed zero");
            return A.cs * std::log(arg);
        },
        [](int, double x, double a, const Modulus& mod) {
            return mod.jacobi(x).dn * (mod.jacobi(x + a).dn - mod.jacobi(x - a).dn);
        });
    add("5.17", false,
        [](int, double x, double a, const Modulus& mod) { return int_dn_dn_shift(x, a, mod); },
        [](int, double x, double a, const Modulus& mod) {
            return mod.jacobi(x).dn * mod.jacobi(x + a).dn;
        });
    add("5.20", false,
        [](int, double x, double a, const Modulus& mod) { return val_520(x, a, mod); },
        [](int, double x, double a, const Modulus& mod) {
            double d0 = mod.jacobi(x).dn, d1 = mod.jacobi(x + a).dn;
            return d0 * d0 * d1 * d1;
        });
    add("5.13", true, rec_513,
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.jacobi(x).dn, 2 * n) * mod.jacobi(x + a).dn;
        });
    add("5.19", true, rec_519,
        [](int n, double x, double a, const Modulus& mod) {
            double d0 = mod.jacobi(x).dn, d1 = mod.jacobi(x + a).dn;
            return pw(d0, 2 * n) * d1 * d1;
        });

    // ---- degree recursions in n >= 1 ------------------------------------
    add("H.h1", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = int_sn_pow(1, x + a, mod) - int_sn_pow(1, a, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k - 1);
                I = A.ns * A.ns * I - mk * A.ns / (2.0 * k - 1.0) * pw(mod.jacobi(x).sn, 2 * k - 1) -
                    A.cs * A.ds * mk * int_sn_pow(2 * k - 1, x, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.m(), n) * pw(mod.jacobi(x).sn, 2 * n) * mod.jacobi(x + a).sn;
        });
    add("H.h2", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = int_cn_pow(1, x + a, mod) - int_cn_pow(1, a, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k - 1);
                I = -A.ds * A.ds * I +
                    mk * A.ds / (2.0 * k - 1.0) * (pw(mod.jacobi(x).cn, 2 * k - 1) - 1.0) +
                    A.cs * A.ns * mk * int_cn_pow(2 * k - 1, x, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.m(), n) * pw(mod.jacobi(x).cn, 2 * n) * mod.jacobi(x + a).cn;
        });
    add("H.h3", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = A.ds * (int_sn_pow(1, x + a, mod) - int_sn_pow(1, a, mod)) -
                       A.cs * int_sn_pow(1, x, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k - 1);
                I = A.ns * A.ns * I -
                    mk * A.ds * A.ns / (2.0 * k - 1.0) * pw(mod.jacobi(x).sn, 2 * k - 1) +
                    A.cs * pw(m, k) *
                        (int_sn_pow(2 * k - 1, x, mod) - int_sn_pow(2 * k + 1, x, mod));
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            JacobiValues v = mod.jacobi(x);
            return pw(mod.m(), n) * pw(v.sn, 2 * n) * v.cn * mod.jacobi(x + a).dn;
        });
    add("H.h4", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = -A.ns * (int_cn_pow(1, x + a, mod) - int_cn_pow(1, a, mod)) +
                       A.cs * int_cn_pow(1, x, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k - 1);
                I = -A.ds * A.ds * I -
                    mk * A.ds * A.ns / (2.0 * k - 1.0) * (pw(mod.jacobi(x).cn, 2 * k - 1) - 1.0) -
                    A.cs * pw(m, k) *
                        (int_cn_pow(2 * k - 1, x, mod) - int_cn_pow(2 * k + 1, x, mod));
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            JacobiValues v = mod.jacobi(x);
            return pw(mod.m(), n) * pw(v.cn, 2 * n) * v.sn * mod.jacobi(x + a).dn;
        });
    add("H.h5", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = -A.ds * (mod.am(x + a) - mod.am(a)) + A.ns * mod.am(x);
            for (int k = 1; k <= n; ++k) {
                I = -A.cs * A.cs * I -
                    A.cs * A.ds / (2.0 * k - 1.0) * (pw(mod.jacobi(x).dn, 2 * k - 1) - 1.0) +
                    A.ns * (int_dn_pow(2 * k + 1, x, mod) -
                            (1.0 - m) * int_dn_pow(2 * k - 1, x, mod));
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            JacobiValues v = mod.jacobi(x);
            return mod.m() * pw(v.dn, 2 * n) * v.cn * mod.jacobi(x + a).sn;
        });
    // The int dn(x+a) term carries B^(k-1); pinned by a least-squares fit
    // of the recursion step against quadrature values.
    add("H.h6", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double B = B_of(A);
            double m = mod.m();
            double I = -(mod.jacobi(x + a).dn - mod.jacobi(a).dn);
            for (int k = 1; k <= n; ++k) {
                double sum1 = 0.0, sum2 = 0.0;
                for (int j = 1; j <= k - 1; ++j) {
                    sum1 += pw(B, j) * (pw(mod.jacobi(x).dn, 2 * (k - j) - 1) - 1.0) /
                            (2.0 * (k - j) - 1.0);
                    sum2 += pw(B, j - 1) * int_dn_pow(2 * (k - j) - 1, x, mod);
                }
                I = B * I +
                    A.ds * A.ns / (2.0 * k - 1.0) * (pw(mod.jacobi(x).dn, 2 * k - 1) - 1.0) +
                    2.0 * A.ds * A.ns * sum1 -
                    2.0 * pw(B, k - 1) * A.cs * A.ds * A.ns * (mod.am(x + a) - mod.am(a)) +
                    A.cs * (m + 2.0 * A.ds * A.ds) * int_dn_pow(2 * k - 1, x, mod) -
                    2.0 * A.cs * A.ds * A.ds * A.ns * A.ns * sum2;
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            JacobiValues w = mod.jacobi(x + a);
            return mod.m() * pw(mod.jacobi(x).dn, 2 * n) * w.cn * w.sn;
        });
    // Defined as I_k = int dn^(2k+1) dn(x+a): only then are the recursion
    // increments consistent with the base case I_0.
    add("H.h7", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double I = int_dn_dn_shift(x, a, mod);
            for (int k = 1; k <= n; ++k) {
                I = -A.cs * A.cs * I +
                    A.cs / (2.0 * k) * (pw(mod.jacobi(x).dn, 2 * k) - 1.0) +
                    A.ds * A.ns * int_dn_pow(2 * k, x, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.jacobi(x).dn, 2 * n + 1) * mod.jacobi(x + a).dn;
        });
    add("H.h8", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = A.dc * x - A.nc * int_dn_dn_shift(x, a, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k);
                I = A.ns * A.ns * I - mk * A.ns / (2.0 * k) * pw(mod.jacobi(x).sn, 2 * k) -
                    mk * A.cs * A.ds * int_sn_pow(2 * k, x, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.m(), n + 1) * pw(mod.jacobi(x).sn, 2 * n + 1) * mod.jacobi(x + a).sn;
        });
    add("H.h9", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double m = mod.m();
            double I = -(1.0 - m) * A.nc * x + A.dc * int_dn_dn_shift(x, a, mod);
            for (int k = 1; k <= n; ++k) {
                double mk = pw(m, k);
                I = -A.ds * A.ds * I +
                    mk * A.ds / (2.0 * k) * (pw(mod.jacobi(x).cn, 2 * k) - 1.0) +
                    mk * A.cs * A.ns * int_cn_pow(2 * k, x, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            return pw(mod.m(), n + 1) * pw(mod.jacobi(x).cn, 2 * n + 1) * mod.jacobi(x + a).cn;
        });
    add("H.h10", true,
        [](int n, double x, double a, const Modulus& mod) {
            Aux A = aux_at(a, mod);
            double B = B_of(A);
            double m = mod.m();
            double sc = A.sn / A.cn;
            double I = -(1.0 - m) * sc * x -
                       A.cs * (mod.E_inc(mod.am(x + a)) - mod.E_inc(mod.am(a))) +
                       A.ds * A.nc * int_dn_dn_shift(x, a, mod);
            for (int k = 1; k <= n; ++k) {
                double sum1 = 0.0, sum2 = 0.0;
                for (int j = 1; j <= k - 1; ++j) {
                    sum1 += pw(B, j) * (pw(mod.jacobi(x).dn, 2 * (k - j)) - 1.0) /
                            static_cast<double>(k - j);
                    sum2 += pw(B, j - 1) * int_dn_pow(2 * (k - j), x, mod);
                }
                I = B * I + A.ds * A.ns / (2.0 * k) * (pw(mod.jacobi(x).dn, 2 * k) - 1.0) +
                    A.ds * A.ns * sum1 - 2.0 * A.cs * A.ds * A.ds * A.ns * A.ns * sum2 +
                    A.cs * (m + 2.0 * A.ds * A.ds) * int_dn_pow(2 * k, x, mod) -
                    2.0 * A.cs * A.ds * A.ns * pw(B, k - 1) * int_dn_dn_shift(x, a, mod);
            }
            return I;
        },
        [](int n, double x, double a, const Modulus& mod) {
            JacobiValues w = mod.jacobi(x + a);
            return mod.m() * pw(mod.jacobi(x).dn, 2 * n + 1) * w.sn * w.cn;
        });
    return out;
}

}  // namespace

const std::vector<IndefiniteEntry>& indefinite_entries() {
    static const std::vector<IndefiniteEntry> table = build_indefinite();
    return table;
}

const IndefiniteEntry& indefinite_entry(const std::string& id) {
    for (const IndefiniteEntry& e : indefinite_entries())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown indefinite integral id '" + id + "'");
}

double indefinite_eval(const std::string& id, int n, double x, double a, const Modulus& mod) {
    const IndefiniteEntry& e = indefinite_entry(id);
    if (e.recursive && (n < 1 || n > kIndefiniteMaxN))
        throw std::invalid_argument(id + ": n must lie in [1, " +
                                    std::to_string(kIndefiniteMaxN) + "]");
    return e.value(n, x, a, mod);
}

double derivative_check(const std::string& id, int n, double x, double a, const Modulus& mod) {
    const IndefiniteEntry& e = indefinite_entry(id);
    const double h = 1e-5;
    double d = (e.value(n, x + h, a, mod) - e.value(n, x - h, a, mod)) / (2.0 * h);
    double want = e.integrand(n, x, a, mod);
    return std::abs(d - want) / std::max(1.0, std::abs(want));
}

}  // namespace ellident
