#include "ellident/identity.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ellident {

const char* jfunc_name(JFunc f) {
    switch (f) {
        case JFunc::sn: return "sn";
        case JFunc::cn: return "cn";
        case JFunc::dn: return "dn";
        case JFunc::Z: return "Z";
        case JFunc::am: return "am";
    }
    return "?";
}

bool Identity::lhs_homogeneous() const {
    for (const Term& t : lhs) {
        int deg = 0;
        for (const Atom& a : t.atoms) {
            if (a.func == JFunc::sn || a.func == JFunc::cn || a.func == JFunc::dn)
                deg += a.power;
        }
        if (deg != rank) return false;
    }
    return true;
}

double floor_relative_error(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

namespace {

double eval_terms(const std::vector<Term>& terms, double x, std::span<const double> shifts,
                  const Identity& ident, const Modulus& mod) {
    CoefCtx cctx{mod, shifts, 1};
    double acc = 0.0;
    for (const Term& t : terms) {
        double v = t.coef ? t.coef->eval(cctx) : 1.0;
        for (const Atom& a : t.atoms) {
            const ShiftSpec& ss = ident.shifts[static_cast<size_t>(a.shift_index)];
            double arg = x;
            if (ss.param >= 0) arg += ss.sign * shifts[static_cast<size_t>(ss.param)];
            double fv;
            switch (a.func) {
                case JFunc::sn: fv = mod.jacobi(arg).sn; break;
                case JFunc::cn: fv = mod.jacobi(arg).cn; break;
                case JFunc::dn: fv = mod.jacobi(arg).dn; break;
                case JFunc::Z: fv = mod.zeta(arg); break;
                case JFunc::am: fv = mod.am(arg); break;
                default: fv = 0; break;
            }
            double p = fv;
            for (int k = 1; k < a.power; ++k) p *= fv;
            v *= p;
        }
        acc += v;
    }
    return acc;
}

}  // namespace

void check_constraints(const Identity& ident, std::span<const double> shifts, const Modulus& mod,
                       double radius_in_K) {
    if (shifts.size() < static_cast<size_t>(ident.arity))
        throw constraint_error(ident.id + ": expected " + std::to_string(ident.arity) +
                               " shifts, got " + std::to_string(shifts.size()));
    const double twoK = 2.0 * mod.K();
    const double radius = radius_in_K * mod.K();
    for (const Constraint& c : ident.constraints) {
        double v = c.arg.value(shifts);
        double d = c.at_sn_zero ? std::remainder(v, twoK) : std::remainder(v - mod.K(), twoK);
        if (std::abs(d) < radius) {
            throw constraint_error(ident.id + ": shift argument " + c.arg.str() + " = " +
                                   std::to_string(v) + " is within the exclusion radius of a " +
                                   (c.at_sn_zero ? "sn" : "cn") + "-zero lattice point");
        }
    }
}

double eval_side(const Identity& ident, Side side, double x, std::span<const double> shifts,
                 const Modulus& mod, double radius_in_K) {
    check_constraints(ident, shifts, mod, radius_in_K);
    if (side == Side::lhs) return eval_terms(ident.lhs, x, shifts, ident, mod);
    double v = eval_terms(ident.rhs, x, shifts, ident, mod);
    if (!ident.rhs_den.empty()) v /= eval_terms(ident.rhs_den, x, shifts, ident, mod);
    return v;
}

double residual(const Identity& ident, double x, std::span<const double> shifts,
                const Modulus& mod, double radius_in_K) {
    check_constraints(ident, shifts, mod, radius_in_K);
    double l = eval_terms(ident.lhs, x, shifts, ident, mod);
    double r = eval_terms(ident.rhs, x, shifts, ident, mod);
    if (!ident.rhs_den.empty()) r /= eval_terms(ident.rhs_den, x, shifts, ident, mod);
    return floor_relative_error(l, r);
}

void finalize_identity(Identity& ident) {
    // Rank: maximal jacobi degree over LHS monomials.
    int rank = 0;
    bool all_even = true;
    for (const Term& t : ident.lhs) {
        int deg = 0, sncn = 0;
        for (const Atom& a : t.atoms) {
            if (a.func == JFunc::sn || a.func == JFunc::cn || a.func == JFunc::dn) deg += a.power;
            if (a.func == JFunc::sn || a.func == JFunc::cn) sncn += a.power;
        }
        rank = std::max(rank, deg);
        if (sncn % 2 != 0) all_even = false;
    }
    ident.rank = rank;
    ident.period_in_K = all_even ? 2 : 4;

    // Constraints out of the coefficient trees (both sides + denominator).
    std::set<std::tuple<int, int, bool>> seen;
    ident.constraints.clear();
    auto visit = [&](CoefFunc f, const ShiftArg& arg) {
        bool sn_zero;
        switch (f) {
            case CoefFunc::cs:
            case CoefFunc::ds:
            case CoefFunc::ns:
                sn_zero = true;
                break;
            case CoefFunc::nc:
            case CoefFunc::dc:
            case CoefFunc::sc:
                sn_zero = false;
                break;
            default:
                return;  // sn, cn, dn, Z, am are finite everywhere on the real line
        }
        // Normalize (i, j) ignoring overall sign: the constraint is symmetric.
        auto key = std::make_tuple(arg.i, arg.j, sn_zero);
        if (seen.insert(key).second) {
            ident.constraints.push_back({ShiftArg{arg.i, arg.j, +1}, sn_zero});
        }
    };
    for (const auto* list : {&ident.lhs, &ident.rhs, &ident.rhs_den}) {
        for (const Term& t : *list) {
            if (t.coef) t.coef->visit_funcs(visit);
        }
    }
}

Identity perturbed(const Identity& ident, size_t rhs_term_index, double rel) {
    Identity out = ident;
    Term& t = out.rhs.at(rhs_term_index);
    t.coef = Expr::scale(t.coef ? t.coef : num(1.0), 1.0 + rel);
    out.id = ident.id + "~perturbed";
    return out;
}

}  // namespace ellident
