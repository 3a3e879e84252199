#include "ellident/cyclic.hpp"

#include <cctype>
#include <cmath>
#include <numeric>

namespace ellident {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
using cplx = std::complex<double>;

struct KahanC {
    cplx sum{0.0, 0.0};
    cplx comp{0.0, 0.0};
    void add(cplx v) {
        cplx y = v - comp;
        cplx t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

cplx weight_at(CyclicWeight w, int s, int t) {
    switch (w) {
        case CyclicWeight::uniform: return 1.0;
        case CyclicWeight::alternating: return (t % 2 == 0) ? 1.0 : -1.0;
        case CyclicWeight::omega: {
            double th = 2.0 * kPi * t / s;
            return {std::cos(th), std::sin(th)};
        }
    }
    return 1.0;
}

double atom_value(JFunc f, double arg, const Modulus& mod) {
    switch (f) {
        case JFunc::sn: return mod.jacobi(arg).sn;
        case JFunc::cn: return mod.jacobi(arg).cn;
        case JFunc::dn: return mod.jacobi(arg).dn;
        case JFunc::Z: return mod.zeta(arg);
        case JFunc::am: return mod.am(arg);
    }
    return 0;
}

void validate_spec(const CyclicIdentity& ident, const CyclicSpec& spec) {
    if (spec.p < 2) throw std::invalid_argument(ident.id + ": p must be at least 2");
    if (spec.r < 1 || spec.r >= spec.p)
        throw std::invalid_argument(ident.id + ": spacing r must satisfy 1 <= r < p");
    if (ident.weight == CyclicWeight::omega) {
        if (spec.s < 1 || spec.p % spec.s != 0)
            throw std::invalid_argument(ident.id + ": weight order s must divide p");
    }
    if (ident.needs_even_p && (spec.p % 2 != 0 || spec.r % 2 == 0))
        throw std::invalid_argument(ident.id + ": alternating entry needs even p and odd r");
    if (ident.uses_sp && (spec.sp < 1 || spec.sp >= spec.p || spec.sp == spec.r))
        throw std::invalid_argument(ident.id +
                                    ": entry uses a second spacing s' distinct from r");
    if (spec.period_in_K != ident.period_in_K)
        throw std::invalid_argument(ident.id + ": period class mismatch (entry wants " +
                                    std::to_string(ident.period_in_K) + "K)");
}

}  // namespace

std::complex<double> eval_cyclic_side(const CyclicIdentity& ident, Side side,
                                      const CyclicSpec& spec, double x, const Modulus& mod) {
    const std::vector<CyclicTerm>& terms = side == Side::lhs ? ident.lhs : ident.rhs;
    double period = ident.period_in_K * mod.K();
    double step = period / spec.p;
    bool orbit = ident.weight == CyclicWeight::omega;
    double delta = orbit ? spec.r * step : step;

    std::vector<double> shifts = {spec.r * step, spec.sp * step};
    CoefCtx cctx{mod, shifts, spec.s};

    KahanC total;
    for (const CyclicTerm& t : terms) {
        double c = t.coef ? t.coef->eval(cctx) : 1.0;
        if (!std::isfinite(c))
            throw constraint_error(ident.id + ": coefficient hits a singular lattice point for "
                                               "this (p, r, s') choice");
        cplx coef = (t.ipow == 1) ? cplx(0.0, c) : cplx(c, 0.0);
        if (t.is_p_const) {
            bool keep = ident.weight == CyclicWeight::uniform ||
                        (ident.weight == CyclicWeight::omega && spec.s == 1);
            if (keep) total.add(coef * static_cast<double>(spec.p));
            continue;
        }
        KahanC sum;
        for (int j = 0; j < spec.p; ++j) {
            double prod = 1.0;
            for (const CyclicAtom& a : t.atoms) {
                double off = orbit ? a.offs_r * delta : (a.offs_r * spec.r + a.offs_s * spec.sp) * step;
                double v = atom_value(a.func, x + j * delta + off, mod);
                for (int q = 0; q < a.power; ++q) prod *= v;
            }
            sum.add(weight_at(ident.weight, spec.s, j) * prod);
        }
        total.add(coef * sum.sum);
    }
    return total.sum;
}

CyclicCheckResult check_cyclic(const CyclicIdentity& ident, const CyclicSpec& spec, double x,
                               const Modulus& mod) {
    validate_spec(ident, spec);
    CyclicCheckResult out;
    out.spec = spec;
    out.identity_id = ident.id;
    out.lhs_sum = eval_cyclic_side(ident, Side::lhs, spec, x, mod);
    out.rhs_sum = eval_cyclic_side(ident, Side::rhs, spec, x, mod);
    out.residual = std::abs(out.lhs_sum - out.rhs_sum) /
                   std::max({1.0, std::abs(out.lhs_sum), std::abs(out.rhs_sum)});
    return out;
}

CyclicCheckResult verify_combination(const std::string& id, const CyclicSpec& spec, double x,
                                   const Modulus& mod) {
    return check_cyclic(CyclicCatalog::instance().at(id), spec, x, mod);
}

// ---------------------------------------------------------------- chaining

CyclicCheckResult chain_weighted(const Identity& local, const CyclicSpec& spec, double x,
                                 const Modulus& mod) {
    if (local.arity != 1)
        throw std::invalid_argument("chain_weighted: local identity must have a single shift");
    if (spec.s < 1 || spec.p % spec.s != 0)
        throw std::invalid_argument("chain_weighted: weight order s must divide p");
    if (!local.rhs_den.empty())
        throw std::invalid_argument("chain_weighted: rational right-hand sides do not telescope");

    double period = local.period_in_K * mod.K();
    double a = spec.r * period / spec.p;
    std::vector<double> shifts = {a};
    check_constraints(local, shifts, mod, 1e-9);  // reject exact lattice hits only
    CoefCtx cctx{mod, shifts, spec.s};

    auto omega_pow = [&](int k) {
        double th = 2.0 * kPi * k / spec.s;
        return cplx(std::cos(th), std::sin(th));
    };

    // Left side: direct weighted sum along the orbit x_j = x + j a.
    KahanC lhs;
    for (int j = 0; j < spec.p; ++j) {
        double xj = x + j * a;
        double v = 0;
        for (const Term& t : local.lhs) {
            double tv = t.coef ? t.coef->eval(cctx) : 1.0;
            for (const Atom& at : t.atoms) {
                const ShiftSpec& ss = local.shifts[static_cast<size_t>(at.shift_index)];
                double arg = xj + (ss.param >= 0 ? ss.sign * a : 0.0);
                double fv = atom_value(at.func, arg, mod);
                for (int q = 0; q < at.power; ++q) tv *= fv;
            }
            v += tv;
        }
        lhs.add(omega_pow(j) * v);
    }

    // Right side, telescoped: a term whose atoms all sit at x + o a picks up
    // a factor omega^(-o) against the offset-free basis sum; constant terms
    // survive only at s = 1 where the weights sum to p.
    KahanC rhs;
    for (const Term& t : local.rhs) {
        double coef = t.coef ? t.coef->eval(cctx) : 1.0;
        if (!std::isfinite(coef))
            throw constraint_error(local.id + ": singular coefficient at a = r*period/p");
        if (t.atoms.empty()) {
            if (spec.s == 1) rhs.add(coef * static_cast<double>(spec.p));
            continue;
        }
        int offset = 0;
        bool first = true;
        for (const Atom& at : t.atoms) {
            const ShiftSpec& ss = local.shifts[static_cast<size_t>(at.shift_index)];
            int o = ss.param >= 0 ? ss.sign : 0;
            if (first) {
                offset = o;
                first = false;
            } else if (o != offset) {
                throw std::invalid_argument(local.id +
                                            ": right side mixes shifts within one term; no "
                                            "telescoped closed form");
            }
        }
        KahanC basis;
        for (int j = 0; j < spec.p; ++j) {
            double prod = 1.0;
            for (const Atom& at : t.atoms) {
                double fv = atom_value(at.func, x + j * a, mod);
                for (int q = 0; q < at.power; ++q) prod *= fv;
            }
            basis.add(omega_pow(j) * prod);
        }
        rhs.add(omega_pow(-offset) * coef * basis.sum);
    }

    CyclicCheckResult out;
    out.spec = spec;
    out.identity_id = local.id;
    out.lhs_sum = lhs.sum;
    out.rhs_sum = rhs.sum;
    out.residual = std::abs(out.lhs_sum - out.rhs_sum) /
                   std::max({1.0, std::abs(out.lhs_sum), std::abs(out.rhs_sum)});
    return out;
}

CyclicCheckResult chain_weighted(const std::string& local_id, const CyclicSpec& spec, double x,
                                 const Modulus& mod) {
    return chain_weighted(Catalog::instance().at(local_id), spec, x, mod);
}

// ---------------------------------------------------------------- products

CyclicCheckResult product_cyclic(int p, int r, int l, double x, const Modulus& mod) {
    if (p % 2 == 0) throw std::invalid_argument("product_cyclic: p must be odd");
    if (l < 1 || l > p || (l % 2 == 0))
        throw std::invalid_argument("product_cyclic: l must be odd and at most p");
    if (std::gcd(r, p) != 1) throw std::invalid_argument("product_cyclic: r must be coprime to p");
    double K = mod.K();
    double step = 2.0 * K / p;
    double a = r * step;

    KahanC lhs;
    KahanC dsum;
    for (int j = 0; j < p; ++j) {
        double xj = x + j * step;
        dsum.add(mod.jacobi(xj).dn);
        double prod = 1.0;
        for (int i = 0; i < l; ++i) prod *= mod.jacobi(xj + i * a).dn;
        lhs.add(prod);
    }

    double coef;
    auto cs_at = [&](double u) {
        JacobiValues v = mod.jacobi(u);
        return v.cn / v.sn;
    };
    if (l == p) {
        // full product over one period
        KahanC prod_all;
        double prod = 1.0;
        for (int j = 0; j < p; ++j) prod *= mod.jacobi(x + j * step).dn;
        coef = 1.0;
        for (int n = 1; n <= (p - 1) / 2; ++n) {
            double c = cs_at(2.0 * K * n / p);
            coef *= c * c;
        }
        CyclicCheckResult out;
        out.spec = CyclicSpec{p, r, 1, 2, 0};
        out.identity_id = "product.full";
        out.lhs_sum = prod;
        out.rhs_sum = coef * dsum.sum;
        out.residual = std::abs(out.lhs_sum - out.rhs_sum) /
                       std::max({1.0, std::abs(out.lhs_sum), std::abs(out.rhs_sum)});
        return out;
    }
    double prodsq = 1.0;
    for (int k = 1; k <= (l - 1) / 2; ++k) {
        double c = cs_at(k * a);
        prodsq *= c * c;
    }
    double corr = 0.0;
    for (int k = 1; k <= (l - 1) / 2; ++k) {
        double prod = 1.0;
        for (int n = 1; n <= l; ++n) {
            if (n == k) continue;
            prod *= cs_at((n - k) * a);
        }
        corr += prod;
    }
    int sgn = ((l - 1) / 2) % 2 == 0 ? 1 : -1;
    coef = prodsq + 2.0 * sgn * corr;

    CyclicCheckResult out;
    out.spec = CyclicSpec{p, r, 1, 2, 0};
    out.identity_id = "product.chain";
    out.lhs_sum = lhs.sum;
    out.rhs_sum = coef * dsum.sum;
    out.residual = std::abs(out.lhs_sum - out.rhs_sum) /
                   std::max({1.0, std::abs(out.lhs_sum), std::abs(out.rhs_sum)});
    return out;
}

// -------------------------------------------------------------- trig limits

TrigPair trig_product_chain(int p, int r, int l) {
    if (l < 3 || l % 2 == 0) throw std::invalid_argument("trig_product_chain: l must be odd >= 3");
    auto cot = [](double u) { return std::cos(u) / std::sin(u); };
    double prodsq = 1.0;
    for (int k = 1; k <= (l - 1) / 2; ++k) {
        double c = cot(r * k * kPi / p);
        prodsq *= c * c;
    }
    double corr = 0.0;
    for (int k = 1; k <= (l - 1) / 2; ++k) {
        double prod = 1.0;
        for (int n = 1; n <= l; ++n) {
            if (n == k) continue;
            prod *= cot((n - k) * r * kPi / p);
        }
        corr += prod;
    }
    int sgn = ((l - 1) / 2) % 2 == 0 ? 1 : -1;
    return {1.0, prodsq + 2.0 * sgn * corr};
}

TrigPair trig_product_full(int p) {
    if (p % 2 == 0) throw std::invalid_argument("trig_product_full: p must be odd");
    double prod = 1.0;
    for (int n = 1; n <= (p - 1) / 2; ++n) {
        double c = std::cos(n * kPi / p) / std::sin(n * kPi / p);
        prod *= c * c;
    }
    return {1.0 / p, prod};
}

TrigPair trig_cot_sum(int p) {
    double sum = 0.0;
    for (int j = 1; j <= p - 1; ++j) {
        double c = std::cos(j * kPi / p) / std::sin(j * kPi / p);
        sum += c * c;
    }
    return {static_cast<double>(p - 1) * (p - 2) / 3.0, sum};
}

std::vector<std::pair<std::string, TrigPair>> trig_limits(int p) {
    std::vector<std::pair<std::string, TrigPair>> out;
    out.emplace_back("6o", trig_cot_sum(p));
    if (p % 2 == 1) out.emplace_back("6.4", trig_product_full(p));
    if (p >= 5) out.emplace_back("6.3", trig_product_chain(p, 1, 3));
    return out;
}

// -------------------------------------------------------------- interchange

bool GhSpec::two_K_periodic() const {
    int sncn = 0;
    for (const auto& [f, pw] : factors)
        if (f == JFunc::sn || f == JFunc::cn) sncn += pw;
    return sncn % 2 == 0;
}

GhSpec parse_gh(const std::string& text) {
    GhSpec out;
    size_t pos = 0;
    while (pos < text.size()) {
        if (text[pos] == '*' || text[pos] == ' ') {
            ++pos;
            continue;
        }
        if (pos + 1 >= text.size()) throw std::invalid_argument("bad factor in '" + text + "'");
        std::string name = text.substr(pos, 2);
        pos += 2;
        JFunc f;
        if (name == "sn") f = JFunc::sn;
        else if (name == "cn") f = JFunc::cn;
        else if (name == "dn") f = JFunc::dn;
        else throw std::invalid_argument("unknown factor '" + name + "'");
        int pw = 1;
        if (pos < text.size() && (text[pos] == '^' || std::isdigit(static_cast<unsigned char>(text[pos])))) {
            if (text[pos] == '^') ++pos;
            pw = text[pos] - '0';
            ++pos;
        }
        out.factors.emplace_back(f, pw);
    }
    if (out.factors.empty()) throw std::invalid_argument("empty product '" + text + "'");
    return out;
}

namespace {

double gh_value(const GhSpec& g, double x, const Modulus& mod) {
    JacobiValues v = mod.jacobi(x);
    double out = 1.0;
    for (const auto& [f, pw] : g.factors) {
        double b = f == JFunc::sn ? v.sn : f == JFunc::cn ? v.cn : v.dn;
        for (int q = 0; q < pw; ++q) out *= b;
    }
    return out;
}

}  // namespace

double interchange_check(const GhSpec& g, const GhSpec& h, int sign, bool alternating, int p,
                         int r, double x, const Modulus& mod) {
    bool g2K = g.two_K_periodic(), h2K = h.two_K_periodic();
    if (g2K != h2K)
        throw std::invalid_argument("interchange_check: periodicity classes of g and h differ");
    if (alternating && (p % 2 != 0 || r % 2 == 0))
        throw std::invalid_argument("interchange_check: alternating sums need even p and odd r");
    double period = (g2K ? 2.0 : 4.0) * mod.K();
    double step = period / p;
    double b = r * step;
    KahanC s1, s2;
    for (int j = 0; j < p; ++j) {
        double xj = x + j * step;
        double w = alternating && (j % 2 == 1) ? -1.0 : 1.0;
        s1.add(w * gh_value(g, xj, mod) *
               (gh_value(h, xj + b, mod) + sign * gh_value(h, xj - b, mod)));
        s2.add(w * gh_value(h, xj, mod) *
               (gh_value(g, xj + b, mod) + sign * gh_value(g, xj - b, mod)));
    }
    double expect = alternating ? -sign : sign;
    double lhs = s1.sum.real(), rhs = expect * s2.sum.real();
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

}  // namespace ellident
