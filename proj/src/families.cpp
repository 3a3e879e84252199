#include <cmath>

#include "ellident/catalog.hpp"

// Arbitrary-rank families.  Each instance is fully expanded into term lists
// with coefficients B^(k-1), B1^(k-1), B2^(k-1), m^(n-k) where
// B = -cs^2(a), B1 = ns^2(a), B2 = -ds^2(a).

namespace ellident {

namespace {

using CF = CoefFunc;

constexpr int kX = 0;    // slot for x
constexpr int kXpA = 1;  // slot for x + a
constexpr int kXmA = 2;  // slot for x - a

Atom sn_(int slot, int pw = 1) { return Atom{JFunc::sn, slot, pw}; }
Atom cn_(int slot, int pw = 1) { return Atom{JFunc::cn, slot, pw}; }
Atom dn_(int slot, int pw = 1) { return Atom{JFunc::dn, slot, pw}; }
Atom Z_(int slot) { return Atom{JFunc::Z, slot, 1}; }

ExprPtr CS(int p = 1) { return fn(CF::cs, A0(), p); }
ExprPtr DS(int p = 1) { return fn(CF::ds, A0(), p); }
ExprPtr NS(int p = 1) { return fn(CF::ns, A0(), p); }
ExprPtr NC(int p = 1) { return fn(CF::nc, A0(), p); }
ExprPtr DN(int p = 1) { return fn(CF::dn, A0(), p); }
ExprPtr CN(int p = 1) { return fn(CF::cn, A0(), p); }
ExprPtr ZA() { return fn(CF::Z, A0(), 1); }

ExprPtr Bexpr() { return -CS(2); }
ExprPtr B1expr() { return NS(2); }
ExprPtr B2expr() { return -DS(2); }
ExprPtr powk(ExprPtr base, int k) { return Expr::ipow(std::move(base), k); }

struct Builder {
    Identity ident;

    explicit Builder(std::string id, std::string source) {
        ident.id = std::move(id);
        ident.source = std::move(source);
        ident.arity = 1;
        ident.shifts = {ShiftSpec{-1, +1}, ShiftSpec{0, +1}, ShiftSpec{0, -1}};
    }
    void L(ExprPtr c, std::vector<Atom> atoms) { ident.lhs.push_back({std::move(c), std::move(atoms)}); }
    void R(ExprPtr c, std::vector<Atom> atoms) { ident.rhs.push_back({std::move(c), std::move(atoms)}); }
    Identity done() {
        finalize_identity(ident);
        return ident;
    }
};

// Z-combination Z(x+a) - Z(x) - Z(a) appended with a common coefficient.
void add_zcomb(Builder& b, ExprPtr coef) {
    b.R(coef, {Z_(kXpA)});
    b.R(-coef, {Z_(kX)});
    b.R(-(coef * ZA()), {});
}

Identity fam_ar01(int n) {
    Builder b("E.ar.01[" + std::to_string(n) + "]", "odd-rank family: dn^(2n) against a forward dn");
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXpA)});
    b.R(powk(Bexpr(), n), {dn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        b.R(Bk * (DS() * NS()), {dn_(kX, 2 * (n - k) + 1)});
        ExprPtr c = Expr::scale(Bk * (m_pow(1) * CS()), -1.0);
        if (2 * (n - k) > 0)
            b.R(c, {cn_(kX), sn_(kX), dn_(kX, 2 * (n - k))});
        else
            b.R(c, {cn_(kX), sn_(kX)});
    }
    return b.done();
}

Identity fam_ar02(int n) {
    Builder b("E.ar.02[" + std::to_string(n) + "]", "even-rank family: dn^(2n+1) against a forward dn");
    b.L(num(1), {dn_(kX, 2 * n + 1), dn_(kXpA)});
    ExprPtr Bn = powk(Bexpr(), n);
    b.R(Bn * DN(), {});
    add_zcomb(b, Bn * CS());
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        b.R(Bk * (DS() * NS()), {dn_(kX, 2 * (n - k) + 2)});
        b.R(Expr::scale(Bk * (m_pow(1) * CS()), -1.0), {cn_(kX), sn_(kX), dn_(kX, 2 * (n - k) + 1)});
    }
    return b.done();
}

// helper for the sn and cn ladders: the bracket [cs ds sn + ns cn dn] etc.
// The odd-exponent ladders carry one more power of m than the even ones
// (m_extra = 1); unrolling the rank-3 seed identity fixes the power.
void sn_ladder(Builder& b, int n, int extra_pow, int m_extra, ExprPtr outer) {
    for (int k = 1; k <= n; ++k) {
        ExprPtr c = outer * (m_pow(n - k + m_extra) * powk(B1expr(), k - 1));
        int pw = 2 * (n - k) + extra_pow;
        std::vector<Atom> t1{sn_(kX, pw + 1)};
        b.R(c * (CS() * DS()), std::move(t1));
        std::vector<Atom> t2{cn_(kX), dn_(kX)};
        if (pw > 0) t2.push_back(sn_(kX, pw));
        b.R(c * NS(), std::move(t2));
    }
}

void cn_ladder(Builder& b, int n, int extra_pow, int m_extra, ExprPtr outer) {
    for (int k = 1; k <= n; ++k) {
        ExprPtr c = outer * (m_pow(n - k + m_extra) * powk(B2expr(), k - 1));
        int pw = 2 * (n - k) + extra_pow;
        b.R(c * (CS() * NS()), {cn_(kX, pw + 1)});
        std::vector<Atom> t2{sn_(kX), dn_(kX)};
        if (pw > 0) t2.push_back(cn_(kX, pw));
        b.R(Expr::scale(c * DS(), -1.0), std::move(t2));
    }
}

Identity fam_ar03(int n) {
    Builder b("E.ar.03[" + std::to_string(n) + "]", "odd-rank family: sn^(2n) against a forward sn");
    b.L(m_pow(n), {sn_(kX, 2 * n), sn_(kXpA)});
    b.R(powk(B1expr(), n), {sn_(kXpA)});
    sn_ladder(b, n, 0, 0, num(-1));
    return b.done();
}

Identity fam_ar04(int n) {
    Builder b("E.ar.04[" + std::to_string(n) + "]", "even-rank family: sn^(2n+1) against a forward sn");
    b.L(m_pow(n + 1), {sn_(kX, 2 * n + 1), sn_(kXpA)});
    add_zcomb(b, Expr::scale(powk(B1expr(), n) * NS(), -1.0));
    sn_ladder(b, n, 1, 1, num(-1));
    return b.done();
}

Identity fam_ar05(int n) {
    Builder b("E.ar.05[" + std::to_string(n) + "]", "odd-rank family: cn^(2n) against a forward cn");
    b.L(m_pow(n), {cn_(kX, 2 * n), cn_(kXpA)});
    b.R(powk(B2expr(), n), {cn_(kXpA)});
    cn_ladder(b, n, 0, 0, num(1));
    return b.done();
}

Identity fam_ar06(int n) {
    Builder b("E.ar.06[" + std::to_string(n) + "]", "even-rank family: cn^(2n+1) against a forward cn");
    b.L(m_pow(n + 1), {cn_(kX, 2 * n + 1), cn_(kXpA)});
    ExprPtr B2n = powk(B2expr(), n);
    b.R(B2n * (m_pow(1) * CN()), {});
    add_zcomb(b, B2n * DS());
    cn_ladder(b, n, 1, 1, num(1));
    return b.done();
}

Identity fam_ar07(int n) {
    Builder b("E.ar.07[" + std::to_string(n) + "]", "family: cn^(2n) sn against a forward dn");
    b.L(m_pow(n), {cn_(kX, 2 * n), sn_(kX), dn_(kXpA)});
    b.R(Expr::scale(powk(B2expr(), n) * NS(), -1.0), {cn_(kXpA)});
    b.R(CS() * m_pow(n), {cn_(kX, 2 * n + 1)});
    cn_ladder(b, n, 0, 0, -NS());
    return b.done();
}

Identity fam_ar08(int n) {
    Builder b("E.ar.08[" + std::to_string(n) + "]", "family: sn^(2n) cn against a forward dn");
    b.L(m_pow(n), {sn_(kX, 2 * n), cn_(kX), dn_(kXpA)});
    b.R(powk(B1expr(), n) * DS(), {sn_(kXpA)});
    b.R(Expr::scale(CS() * m_pow(n), -1.0), {sn_(kX, 2 * n + 1)});
    sn_ladder(b, n, 0, 0, -DS());
    return b.done();
}

Identity fam_ar09(int n) {
    Builder b("E.ar.09[" + std::to_string(n) + "]", "family: dn^(2n) cn against a forward sn");
    b.L(m_pow(1), {dn_(kX, 2 * n), cn_(kX), sn_(kXpA)});
    b.R(Expr::scale(powk(Bexpr(), n) * DS(), -1.0), {dn_(kXpA)});
    b.R(NS(), {dn_(kX, 2 * n + 1)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr c = Expr::scale(DS() * powk(Bexpr(), k - 1), -1.0);
        int pw = 2 * (n - k);
        std::vector<Atom> t1{dn_(kX, pw + 1)};
        b.R(c * (DS() * NS()), std::move(t1));
        std::vector<Atom> t2{cn_(kX), sn_(kX)};
        if (pw > 0) t2.push_back(dn_(kX, pw));
        b.R(Expr::scale(c * (m_pow(1) * CS()), -1.0), std::move(t2));
    }
    return b.done();
}

Identity fam_ar10(int n) {
    Builder b("E.ar.10[" + std::to_string(n) + "]", "family: dn^(2n) against a forward sn cn pair");
    b.L(m_pow(1), {dn_(kX, 2 * n), sn_(kXpA), cn_(kXpA)});
    b.R(m_pow(1) * powk(Bexpr(), n), {sn_(kXpA), cn_(kXpA)});
    b.R(Expr::scale(num(2.0 * n) * powk(Bexpr(), n - 1) * (DS() * CS() * NS()), -1.0), {dn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr bracket = (m_pow(1) + 2.0 * DS(2)) * CS() + (2.0 * (k - 1)) * (DS(2) * NC() * NS());
        b.R(powk(Bexpr(), k - 1) * bracket, {dn_(kX, 2 * (n - k) + 1)});
        ExprPtr c2 = Expr::scale(m_pow(1) * (DS() * NS()) * num(2.0 * k - 1.0) * powk(Bexpr(), k - 1), -1.0);
        std::vector<Atom> t{cn_(kX), sn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(c2, std::move(t));
    }
    return b.done();
}

Identity fam_ar11(int n) {
    Builder b("E.ar.11[" + std::to_string(n) + "]", "family: dn^(2n+1) against a forward sn cn pair");
    b.L(m_pow(1), {dn_(kX, 2 * n + 1), sn_(kXpA), cn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr c = Expr::scale(m_pow(1) * (DS() * NS()) * num(2.0 * k - 1.0) * powk(Bexpr(), k - 1), -1.0);
        b.R(c, {cn_(kX), sn_(kX), dn_(kX, 2 * (n - k) + 1)});
    }
    ExprPtr Bn1 = powk(Bexpr(), n - 1);
    ExprPtr one_minus_m = num(1) - m_pow(1);
    b.R(Bn1 * (CS() * one_minus_m), {});
    ExprPtr c2n1 = Expr::scale(Bn1 * CS() * num(2.0 * n + 1.0) * (DS() * NS()), -1.0);
    b.R(c2n1 * DN(), {});
    add_zcomb(b, c2n1 * CS());
    for (int k = 1; k <= n; ++k) {
        ExprPtr bracket = (m_pow(1) + 2.0 * DS(2)) * CS() + (2.0 * (k - 1)) * (DS(2) * NC() * NS());
        b.R(powk(Bexpr(), k - 1) * bracket, {dn_(kX, 2 * (n - k + 1))});
    }
    b.R(Expr::scale(powk(Bexpr(), n) * CS(), -1.0), {dn_(kXpA, 2)});
    return b.done();
}

Identity fam_d26(int n) {
    Builder b("E.d26[" + std::to_string(n) + "]", "family: dn^(2n) against a forward sn dn pair");
    b.L(num(1), {dn_(kX, 2 * n), sn_(kXpA), dn_(kXpA)});
    b.R(powk(Bexpr(), n), {sn_(kXpA), dn_(kXpA)});
    b.R(Expr::scale(num(2.0 * n) * powk(Bexpr(), n - 1) * (DS() * CS() * NS()), -1.0), {cn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        ExprPtr br1 = CS() * NS() + (2.0 * (k - 1)) * (DS(2) * NC());
        b.R(Expr::scale(Bk * br1, -1.0), {sn_(kX), dn_(kX, 2 * (n - k) + 1)});
        ExprPtr br2 = CS(2) + num(2.0 * k - 1.0) * NS(2);
        std::vector<Atom> t{cn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(DS() * Bk * br2, std::move(t));
    }
    return b.done();
}

Identity fam_ar13(int n) {
    Builder b("E.ar.13[" + std::to_string(n) + "]", "family: dn^(2n+1) against a forward sn dn pair");
    b.L(num(1), {dn_(kX, 2 * n + 1), sn_(kXpA), dn_(kXpA)});
    b.R(Expr::scale(powk(Bexpr(), n) * CS(), -1.0), {cn_(kXpA), dn_(kXpA)});
    ExprPtr head = powk(Bexpr(), n - 1) * (CS() * NS()) * (CS(2) + num(2.0 * n) * DS(2));
    b.R(head, {sn_(kX)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        ExprPtr br1 = CS() * NS() + (2.0 * (k - 1)) * (DS(2) * NC());
        b.R(Expr::scale(Bk * br1, -1.0), {sn_(kX), dn_(kX, 2 * (n - k + 1))});
        ExprPtr br2 = CS(2) + num(2.0 * k - 1.0) * NS(2);
        b.R(DS() * Bk * br2, {cn_(kX), dn_(kX, 2 * (n - k) + 1)});
    }
    b.R(num(2.0 * n + 1.0) * (powk(Bexpr(), n) * (DS() * NS())), {sn_(kXpA)});
    return b.done();
}

Identity fam_ar14(int n) {
    Builder b("E.ar.14[" + std::to_string(n) + "]", "family: dn^(2n) against a forward cn dn pair");
    b.L(num(1), {dn_(kX, 2 * n), cn_(kXpA), dn_(kXpA)});
    b.R(powk(Bexpr(), n), {cn_(kXpA), dn_(kXpA)});
    b.R(num(2.0 * n) * (powk(Bexpr(), n - 1) * (DS() * CS() * NS())), {sn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        ExprPtr br1 = CS() * DS() + (2.0 * (k - 1)) * (DS() * NC() * NS());
        b.R(Expr::scale(Bk * br1, -1.0), {cn_(kX), dn_(kX, 2 * (n - k) + 1)});
        ExprPtr br2 = CS(2) + num(2.0 * k - 1.0) * DS(2);
        std::vector<Atom> t{sn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(Expr::scale(NS() * Bk * br2, -1.0), std::move(t));
    }
    return b.done();
}

Identity fam_ar15(int n) {
    Builder b("E.ar.15[" + std::to_string(n) + "]", "family: dn^(2n+1) against a forward cn dn pair");
    b.L(num(1), {dn_(kX, 2 * n + 1), cn_(kXpA), dn_(kXpA)});
    b.R(powk(Bexpr(), n) * CS(), {sn_(kXpA), dn_(kXpA)});
    b.R(powk(Bexpr(), n - 1) * (CS() * DS()) * (CS(2) + num(2.0 * n) * NS(2)), {cn_(kX)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        ExprPtr br1 = CS() * DS() + (2.0 * (k - 1)) * (DS() * NC() * NS());
        b.R(Expr::scale(Bk * br1, -1.0), {cn_(kX), dn_(kX, 2 * (n - k + 1))});
        ExprPtr br2 = CS(2) + num(2.0 * k - 1.0) * DS(2);
        b.R(Expr::scale(NS() * Bk * br2, -1.0), {sn_(kX), dn_(kX, 2 * (n - k) + 1)});
    }
    b.R(num(2.0 * n + 1.0) * (powk(Bexpr(), n) * (DS() * NS())), {cn_(kXpA)});
    return b.done();
}

Identity fam_d15(int n) {
    Builder b("E.d15[" + std::to_string(n) + "]", "family: dn^(2n) against a forward dn^2");
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXpA, 2)});
    ExprPtr c = num(2.0 * n) * (powk(Bexpr(), n - 1) * (DS() * NS()));
    b.R(c * DN(), {});
    add_zcomb(b, c * CS());
    b.R(Expr::scale(powk(Bexpr(), n - 1) * (num(1) - m_pow(1)), -1.0), {});
    for (int k = 1; k <= n - 1; ++k) {
        ExprPtr br = Expr::ipow(Bexpr(), 2) - (num(1) - m_pow(1)) + (2.0 * k) * (DS(2) * NS(2));
        b.R(powk(Bexpr(), k - 1) * br, {dn_(kX, 2 * (n - k))});
    }
    b.R(powk(Bexpr(), n), {dn_(kXpA, 2)});
    b.R(Bexpr(), {dn_(kX, 2 * n)});
    for (int k = 1; k <= n - 1; ++k) {
        ExprPtr c2 = Expr::scale(num(2.0 * k) * (m_pow(1) * (CS() * DS() * NS())) * powk(Bexpr(), k - 1), -1.0);
        b.R(c2, {sn_(kX), cn_(kX), dn_(kX, 2 * (n - k) - 1)});
    }
    return b.done();
}

Identity fam_ar17(int n) {
    Builder b("E.ar.17[" + std::to_string(n) + "]", "family: dn^(2n+1) against a forward dn^2");
    b.L(num(1), {dn_(kX, 2 * n + 1), dn_(kXpA, 2)});
    b.R(Bexpr(), {dn_(kX, 2 * n + 1)});
    b.R(powk(Bexpr(), n) * (m_pow(1) * CS()), {cn_(kXpA), sn_(kXpA)});
    for (int k = 1; k <= n; ++k) {
        ExprPtr br = Expr::ipow(Bexpr(), 2) - (num(1) - m_pow(1)) + (2.0 * k) * (DS(2) * NS(2));
        b.R(powk(Bexpr(), k - 1) * br, {dn_(kX, 2 * (n - k) + 1)});
    }
    for (int k = 1; k <= n; ++k) {
        ExprPtr c2 = Expr::scale(num(2.0 * k) * (m_pow(1) * (CS() * DS() * NS())) * powk(Bexpr(), k - 1), -1.0);
        std::vector<Atom> t{sn_(kX), cn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(c2, std::move(t));
    }
    b.R(num(2.0 * n + 1.0) * (powk(Bexpr(), n) * (DS() * NS())), {dn_(kXpA)});
    return b.done();
}

// ---- section-3 ladders -----------------------------------------------------

Identity fam_33(int n) {
    Builder b("E.3.3[" + std::to_string(n) + "]", "odd-rank symmetric ladder");
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXpA)});
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXmA)});
    ExprPtr Acoef = 2.0 * (DS() * NS());
    for (int k = 1; k <= n; ++k)
        b.R(Acoef * powk(Bexpr(), k - 1), {dn_(kX, 2 * (n - k) + 1)});
    b.R(powk(Bexpr(), n), {dn_(kXpA)});
    b.R(powk(Bexpr(), n), {dn_(kXmA)});
    return b.done();
}

Identity fam_36(int n) {
    Builder b("E.3.6[" + std::to_string(n) + "]", "even-rank symmetric ladder");
    b.L(num(1), {dn_(kX, 2 * n + 1), dn_(kXpA)});
    b.L(num(1), {dn_(kX, 2 * n + 1), dn_(kXmA)});
    ExprPtr Acoef = 2.0 * (DS() * NS());
    for (int k = 1; k <= n; ++k)
        b.R(Acoef * powk(Bexpr(), k - 1), {dn_(kX, 2 * (n - k + 1))});
    ExprPtr Bn = powk(Bexpr(), n);
    b.R(2.0 * (Bn * DN()), {});
    b.R(Bn * CS(), {Z_(kXpA)});
    b.R(-(Bn * CS()), {Z_(kXmA)});
    b.R(Expr::scale(Bn * CS() * ZA(), -2.0), {});
    return b.done();
}

Identity fam_38(int n) {
    Builder b("E.3.8[" + std::to_string(n) + "]", "odd-rank antisymmetric ladder");
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXpA)});
    b.L(num(-1), {dn_(kX, 2 * n), dn_(kXmA)});
    ExprPtr Dcoef = Expr::scale(m_pow(1) * CS(), -2.0);
    for (int k = 1; k <= n; ++k) {
        std::vector<Atom> t{cn_(kX), sn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(Dcoef * powk(Bexpr(), k - 1), std::move(t));
    }
    b.R(powk(Bexpr(), n), {dn_(kXpA)});
    b.R(-powk(Bexpr(), n), {dn_(kXmA)});
    return b.done();
}

Identity fam_39(int n) {
    Builder b("E.3.9[" + std::to_string(n) + "]", "even-rank antisymmetric ladder");
    b.L(num(1), {dn_(kX, 2 * n + 1), dn_(kXpA)});
    b.L(num(-1), {dn_(kX, 2 * n + 1), dn_(kXmA)});
    ExprPtr Dcoef = Expr::scale(m_pow(1) * CS(), -2.0);
    for (int k = 1; k <= n; ++k)
        b.R(Dcoef * powk(Bexpr(), k - 1), {cn_(kX), sn_(kX), dn_(kX, 2 * (n - k) + 1)});
    ExprPtr Bn = powk(Bexpr(), n);
    b.R(Bn * CS(), {Z_(kXpA)});
    b.R(Bn * CS(), {Z_(kXmA)});
    b.R(Expr::scale(Bn * CS(), -2.0), {Z_(kX)});
    return b.done();
}

Identity fam_310(int n) {
    Builder b("E.3.10[" + std::to_string(n) + "]", "odd-rank one-sided ladder");
    b.L(num(1), {dn_(kX, 2 * n), dn_(kXpA)});
    ExprPtr halfD = -(m_pow(1) * CS());
    ExprPtr halfA = DS() * NS();
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        std::vector<Atom> t{cn_(kX), sn_(kX)};
        if (2 * (n - k) > 0) t.push_back(dn_(kX, 2 * (n - k)));
        b.R(halfD * Bk, std::move(t));
        b.R(halfA * Bk, {dn_(kX, 2 * (n - k) + 1)});
    }
    b.R(powk(Bexpr(), n), {dn_(kXpA)});
    return b.done();
}

Identity fam_311(int n) {
    Builder b("E.3.11[" + std::to_string(n) + "]", "odd-rank one-sided ladder, shifted anchor");
    b.L(num(1), {dn_(kX), dn_(kXpA, 2 * n)});
    ExprPtr halfD = -(m_pow(1) * CS());
    ExprPtr halfA = DS() * NS();
    for (int k = 1; k <= n; ++k) {
        ExprPtr Bk = powk(Bexpr(), k - 1);
        b.R(halfA * Bk, {dn_(kXpA, 2 * (n - k) + 1)});
        std::vector<Atom> t{cn_(kXpA), sn_(kXpA)};
        if (2 * (n - k) > 0) t.push_back(dn_(kXpA, 2 * (n - k)));
        b.R(-(halfD * Bk), std::move(t));
    }
    b.R(powk(Bexpr(), n), {dn_(kX)});
    return b.done();
}

}  // namespace

FamilyInstance instantiate_family(const std::string& family_id, int n) {
    if (n < 1 || n > kFamilyMaxN)
        throw std::invalid_argument("family rank parameter n must lie in [1, " +
                                    std::to_string(kFamilyMaxN) + "], got " + std::to_string(n));
    Identity ident;
    if (family_id == "E.ar.01") ident = fam_ar01(n);
    else if (family_id == "E.ar.02") ident = fam_ar02(n);
    else if (family_id == "E.ar.03") ident = fam_ar03(n);
    else if (family_id == "E.ar.04") ident = fam_ar04(n);
    else if (family_id == "E.ar.05") ident = fam_ar05(n);
    else if (family_id == "E.ar.06") ident = fam_ar06(n);
    else if (family_id == "E.ar.07") ident = fam_ar07(n);
    else if (family_id == "E.ar.08") ident = fam_ar08(n);
    else if (family_id == "E.ar.09") ident = fam_ar09(n);
    else if (family_id == "E.ar.10") ident = fam_ar10(n);
    else if (family_id == "E.ar.11") ident = fam_ar11(n);
    else if (family_id == "E.d26") ident = fam_d26(n);
    else if (family_id == "E.ar.13") ident = fam_ar13(n);
    else if (family_id == "E.ar.14") ident = fam_ar14(n);
    else if (family_id == "E.ar.15") ident = fam_ar15(n);
    else if (family_id == "E.d15") ident = fam_d15(n);
    else if (family_id == "E.ar.17") ident = fam_ar17(n);
    else if (family_id == "E.3.3") ident = fam_33(n);
    else if (family_id == "E.3.6") ident = fam_36(n);
    else if (family_id == "E.3.8") ident = fam_38(n);
    else if (family_id == "E.3.9") ident = fam_39(n);
    else if (family_id == "E.3.10") ident = fam_310(n);
    else if (family_id == "E.3.11") ident = fam_311(n);
    else throw unknown_identity(family_id);
    return FamilyInstance{family_id, n, std::move(ident)};
}

}  // namespace ellident
