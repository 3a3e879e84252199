#include "ellident/master.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace ellident {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double pw(double v, int k) {
    double acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= v;
    return acc;
}

complex cpw(complex v, int k) {
    complex acc = 1.0;
    for (int i = 0; i < k; ++i) acc *= v;
    return acc;
}

}  // namespace

// ------------------------------------------------------------------ parsing

ProductSpec parse_product_spec(const std::string& text,
                               const std::map<std::string, double>& shifts) {
    ProductSpec spec;
    size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("product spec: " + what + " near position " +
                                    std::to_string(pos));
    };
    double sign = 1.0;
    skip_ws();
    while (pos < text.size()) {
        ProductTerm term;
        term.scalar = sign;
        for (;;) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                size_t end;
                term.scalar *= std::stod(text.substr(pos), &end);
                pos += end;
            } else if (text.compare(pos, 1, "m") == 0 &&
                       (pos + 1 >= text.size() ||
                        !std::isalpha(static_cast<unsigned char>(text[pos + 1])))) {
                ++pos;
                int p = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    p = text[pos] - '0';
                    ++pos;
                }
                term.mpow += p;
            } else {
                ProductFactor f;
                if (text.compare(pos, 2, "sn") == 0) f.func = JFuncKind::sn;
                else if (text.compare(pos, 2, "cn") == 0) f.func = JFuncKind::cn;
                else if (text.compare(pos, 2, "dn") == 0) f.func = JFuncKind::dn;
                else fail("expected factor sn/cn/dn/m or a number");
                pos += 2;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
                        fail("expected digit exponent");
                    f.power = text[pos] - '0';
                    ++pos;
                }
                if (pos < text.size() && text[pos] == '(') {
                    ++pos;
                    double s = 1.0;
                    if (text[pos] == '+') ++pos;
                    else if (text[pos] == '-') {
                        s = -1.0;
                        ++pos;
                    }
                    size_t start = pos;
                    while (pos < text.size() && text[pos] != ')') ++pos;
                    if (pos >= text.size()) fail("unterminated shift");
                    std::string name = text.substr(start, pos - start);
                    ++pos;
                    auto it = shifts.find(name);
                    if (it == shifts.end())
                        throw std::invalid_argument("product spec: unbound shift name '" + name +
                                                    "'");
                    f.shift = s * it->second;
                }
                term.factors.push_back(f);
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        spec.terms.push_back(std::move(term));
        skip_ws();
        if (pos >= text.size()) break;
        if (text[pos] == '+') sign = 1.0;
        else if (text[pos] == '-') sign = -1.0;
        else fail("expected '+' or '-' between terms");
        ++pos;
        skip_ws();
    }
    if (spec.terms.empty()) throw std::invalid_argument("product spec: empty expression");
    return spec;
}

// --------------------------------------------------------------- evaluation

complex eval_product(const ProductSpec& f, complex z, const Modulus& mod) {
    complex total = 0.0;
    for (const ProductTerm& t : f.terms) {
        complex v = t.scalar * pw(mod.m(), t.mpow);
        for (const ProductFactor& fac : t.factors) {
            complex base;
            switch (fac.func) {
                case JFuncKind::sn: base = mod.sn_c(z + fac.shift); break;
                case JFuncKind::cn: base = mod.cn_c(z + fac.shift); break;
                case JFuncKind::dn: base = mod.dn_c(z + fac.shift); break;
            }
            v *= cpw(base, fac.power);
        }
        total += v;
    }
    return total;
}

double eval_product(const ProductSpec& f, double x, const Modulus& mod) {
    double total = 0.0;
    for (const ProductTerm& t : f.terms) {
        double v = t.scalar * pw(mod.m(), t.mpow);
        for (const ProductFactor& fac : t.factors) {
            JacobiValues jv = mod.jacobi(x + fac.shift);
            double base = fac.func == JFuncKind::sn ? jv.sn
                          : fac.func == JFuncKind::cn ? jv.cn
                                                      : jv.dn;
            v *= pw(base, fac.power);
        }
        total += v;
    }
    return total;
}

// ----------------------------------------------------------- classification

SymmetryClass classify(const ProductSpec& f, const Modulus& mod) {
    // Parity bookkeeping: dn and cn flip under z + 2iK'; sn and cn flip
    // under z + 2K.  Every term must land in the same class.
    int P = -1, Q = -1;
    for (const ProductTerm& t : f.terms) {
        int p = 0, q = 0;
        for (const ProductFactor& fac : t.factors) {
            if (fac.func == JFuncKind::dn || fac.func == JFuncKind::cn) p += fac.power;
            if (fac.func == JFuncKind::sn || fac.func == JFuncKind::cn) q += fac.power;
        }
        p %= 2;
        q %= 2;
        if (P < 0) {
            P = p;
            Q = q;
        } else if (P != p || Q != q) {
            throw classification_error(
                "terms fall into different symmetry classes; not one of the four types");
        }
    }

    // Probe points confirm the bookkeeping (and catch degenerate input).
    complex two_ikp(0.0, 2.0 * mod.Kprime());
    double twoK = 2.0 * mod.K();
    int agree = 0;
    for (int k = 0; k < 8 && agree < 8; ++k) {
        complex z(0.23 * mod.K() + 0.19 * k * mod.K(), 0.31 * mod.Kprime() + 0.07 * k * mod.Kprime());
        double dist = 0.05 * std::min(mod.K(), mod.Kprime());
        if (mod.pole_distance(z) < dist || mod.pole_distance(z + two_ikp) < dist ||
            mod.pole_distance(z + twoK) < dist) {
            z += complex(0.07 * mod.K(), 0.0);
        }
        complex base = eval_product(f, z, mod);
        if (std::abs(base) < 1e-9) continue;  // nudge away from zeros
        complex rp = eval_product(f, z + two_ikp, mod) / base;
        complex rq = eval_product(f, z + twoK, mod) / base;
        double sp = P == 0 ? 1.0 : -1.0;
        double sq = Q == 0 ? 1.0 : -1.0;
        if (std::abs(rp - sp) > 1e-8 * std::max(1.0, std::abs(rp)) ||
            std::abs(rq - sq) > 1e-8 * std::max(1.0, std::abs(rq))) {
            throw classification_error("probe disagrees with symmetry bookkeeping");
        }
        ++agree;
    }
    if (agree == 0) throw classification_error("function vanished at every probe point");
    return SymmetryClass{P, Q};
}

// ------------------------------------------------------------------- poles

namespace {

// Candidate pole centers with naive orders (before softening).
std::vector<Pole> candidates(const ProductSpec& f, const Modulus& mod) {
    double twoK = 2.0 * mod.K();
    std::vector<Pole> out;
    for (const ProductTerm& t : f.terms) {
        // group factors of one term by pole column Re = fold(-shift)
        std::map<long long, int> col_order;
        for (const ProductFactor& fac : t.factors) {
            double re = std::fmod(-fac.shift, twoK);
            if (re < 0) re += twoK;
            long long key = llround(re * 1e9);
            col_order[key] += fac.power;
        }
        for (const auto& [key, order] : col_order) {
            double re = static_cast<double>(key) * 1e-9;
            bool merged = false;
            for (Pole& p : out) {
                if (std::abs(p.center.real() - re) < 1e-6) {
                    p.order = std::max(p.order, order);
                    merged = true;
                    break;
                }
            }
            if (!merged) out.push_back(Pole{complex(re, mod.Kprime()), order, {}});
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Pole& a, const Pole& b) { return a.center.real() < b.center.real(); });
    return out;
}

}  // namespace

std::vector<complex> laurent_coefficients(const ProductSpec& f, complex center, int order,
                                          double radius, int points, const Modulus& mod) {
    // Feasibility: the circle must stay clear of the other candidate poles.
    for (const Pole& other : candidates(f, mod)) {
        double d = std::abs(other.center - center);
        if (d > 1e-9 && d < 2.0 * radius)
            throw std::invalid_argument("laurent_coefficients: contour radius infeasible, "
                                        "another pole within twice the radius");
    }
    std::vector<complex> alpha(static_cast<size_t>(order));
    std::vector<complex> fv(static_cast<size_t>(points));
    for (int k = 0; k < points; ++k) {
        double th = 2.0 * kPi * k / points;
        fv[static_cast<size_t>(k)] = eval_product(f, center + radius * complex(std::cos(th), std::sin(th)), mod);
    }
    for (int l = 1; l <= order; ++l) {
        complex acc = 0.0;
        for (int k = 0; k < points; ++k) {
            double th = 2.0 * kPi * k / points;
            acc += fv[static_cast<size_t>(k)] * complex(std::cos(l * th), std::sin(l * th));
        }
        alpha[static_cast<size_t>(l - 1)] = acc * std::pow(radius, l) / static_cast<double>(points);
    }
    return alpha;
}

std::vector<Pole> locate_poles(const ProductSpec& f, const Modulus& mod) {
    std::vector<Pole> poles = candidates(f, mod);
    double radius = 0.1 * std::min(mod.K(), mod.Kprime());
    const int N = 64;
    // shrink the contour when candidate poles sit close together
    for (const Pole& a : poles)
        for (const Pole& b : poles) {
            double d = std::abs(a.center - b.center);
            if (d > 1e-9) radius = std::min(radius, 0.45 * d);
        }
    for (Pole& p : poles) {
        p.alpha = laurent_coefficients(f, p.center, p.order, radius, N, mod);
        // contour scale for the softening threshold
        double scale = 0.0;
        for (int k = 0; k < 8; ++k) {
            double th = 2.0 * kPi * k / 8;
            scale = std::max(scale, std::abs(eval_product(
                                        f, p.center + radius * complex(std::cos(th), std::sin(th)),
                                        mod)));
        }
        while (p.order > 0) {
            double mag = std::abs(p.alpha.back()) / std::pow(radius, p.order);
            if (mag > 1e-6 * std::max(scale, 1e-30)) break;
            p.alpha.pop_back();
            --p.order;
        }
    }
    poles.erase(std::remove_if(poles.begin(), poles.end(),
                               [](const Pole& p) { return p.order == 0; }),
                poles.end());
    return poles;
}

// ---------------------------------------------------------- reconstruction

// The order-zero class-II basis element is Z' = dn^2 - E/K; the terms table
// stores plain dn^2 derivatives, so evaluation restores the -E/K pieces
// through gamma2 (zero for the other classes).
double MasterReconstruction::eval(double z, const Modulus& mod) const {
    double acc = C + gamma2 * mod.E_over_K();
    for (const ReconstructionTerm& t : terms)
        acc += t.coef * jacobi_derivative(t.basis, t.deriv_order, z + t.arg_shift, mod);
    for (const auto& [shift, coef] : zeta_terms) acc += coef * mod.zeta(z + shift);
    return acc;
}

MasterReconstruction reconstruct(const ProductSpec& f, const Modulus& mod) {
    MasterReconstruction rec;
    rec.cls = classify(f, mod);
    rec.poles = locate_poles(f, mod);
    int type = rec.cls.type();

    double rm = std::sqrt(mod.m());
    for (const Pole& p : rec.poles) {
        // basis argument z - a_r + iK' is real: a_r = Re + iK'
        double arg_shift = -p.center.real();
        for (int l = 1; l <= p.order; ++l) {
            complex alpha = p.alpha[static_cast<size_t>(l - 1)];
            double fct = 1.0;
            for (int q = 2; q < l; ++q) fct *= q;  // (l-1)!
            double parity = (l - 1) % 2 == 0 ? 1.0 : -1.0;
            if (type == 2) {
                if (l == 1) {
                    rec.zeta_terms.emplace_back(arg_shift, alpha.real());
                } else {
                    rec.terms.push_back({JacobiBasis::dn2, arg_shift, l - 2,
                                         parity / fct * alpha.real()});
                }
                if (l == 2) rec.gamma2 += alpha.real();
                continue;
            }
            complex kappa;
            JacobiBasis basis;
            switch (type) {
                case 1: kappa = complex(0.0, 1.0); basis = JacobiBasis::dn; break;
                case 3: kappa = rm; basis = JacobiBasis::sn; break;
                default: kappa = complex(0.0, rm); basis = JacobiBasis::cn; break;
            }
            complex coef = kappa * parity / fct * alpha;
            rec.terms.push_back({basis, arg_shift, l - 1, coef.real()});
        }
    }

    if (type == 2) {
        double ressum = 0.0;
        for (const auto& [shift, coef] : rec.zeta_terms) ressum += coef;
        // the residues must cancel for the zeta terms to assemble an
        // elliptic function; cf. the vanishing contour integral
        if (std::abs(ressum) > 1e-7)
            throw classification_error("class II residues do not cancel: " +
                                       std::to_string(ressum));
        double z0 = 0.37 * mod.K();
        rec.C = 0.0;
        rec.C = eval_product(f, z0, mod) - rec.eval(z0, mod);
        // With the Z-ladder convention the constant is the period mean of f.
    }
    return rec;
}

double typeII_definite_integral(const MasterReconstruction& rec, const Modulus& mod) {
    if (rec.cls.type() != 2)
        throw std::invalid_argument("typeII_definite_integral: function is not of class II");
    (void)mod;
    return rec.C;  // the zeta and derivative pieces average to zero
}

double typeII_definite_integral(const ProductSpec& f, const Modulus& mod) {
    return typeII_definite_integral(reconstruct(f, mod), mod);
}

}  // namespace ellident
