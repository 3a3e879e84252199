#include "ellident/expr.hpp"

#include <cmath>
#include <stdexcept>

namespace ellident {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

const char* coef_func_name(CoefFunc f) {
    switch (f) {
        case CoefFunc::sn: return "sn";
        case CoefFunc::cn: return "cn";
        case CoefFunc::dn: return "dn";
        case CoefFunc::Z: return "Z";
        case CoefFunc::am: return "am";
        case CoefFunc::cs: return "cs";
        case CoefFunc::ds: return "ds";
        case CoefFunc::ns: return "ns";
        case CoefFunc::nc: return "nc";
        case CoefFunc::dc: return "dc";
        case CoefFunc::sc: return "sc";
    }
    return "?";
}

double ShiftArg::value(std::span<const double> shifts) const {
    double v = shifts[static_cast<size_t>(i)];
    if (j >= 0) v -= shifts[static_cast<size_t>(j)];
    return sign * v;
}

std::string ShiftArg::str() const {
    std::string s = sign < 0 ? "-" : "";
    s += "a" + std::to_string(i);
    if (j >= 0) s += "-a" + std::to_string(j);
    return s;
}

ExprPtr Expr::constant(double v) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::constant;
    e->value_ = v;
    return e;
}

ExprPtr Expr::mpow(int p) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::mpow;
    e->power_ = p;
    return e;
}

ExprPtr Expr::func(CoefFunc f, ShiftArg arg, int pow) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::func;
    e->func_ = f;
    e->arg_ = arg;
    e->power_ = pow;
    return e;
}

ExprPtr Expr::add(std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::add;
    e->kids_ = std::move(kids);
    return e;
}

ExprPtr Expr::mul(std::vector<ExprPtr> kids) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::mul;
    e->kids_ = std::move(kids);
    return e;
}

ExprPtr Expr::ipow(ExprPtr base, int p) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::ipow;
    e->kids_ = {std::move(base)};
    e->power_ = p;
    return e;
}

ExprPtr Expr::cosw() {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::cosw;
    return e;
}

ExprPtr Expr::sinw() {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::sinw;
    return e;
}

ExprPtr Expr::scale(ExprPtr inner, double factor) {
    auto e = std::make_shared<Expr>();
    e->kind_ = Kind::scale;
    e->value_ = factor;
    e->kids_ = {std::move(inner)};
    return e;
}

double Expr::eval(const CoefCtx& ctx) const {
    switch (kind_) {
        case Kind::constant:
            return value_;
        case Kind::mpow:
            return std::pow(ctx.mod.m(), power_);
        case Kind::func: {
            double u = arg_.value(ctx.shifts);
            double v;
            switch (func_) {
                case CoefFunc::sn: v = ctx.mod.jacobi(u).sn; break;
                case CoefFunc::cn: v = ctx.mod.jacobi(u).cn; break;
                case CoefFunc::dn: v = ctx.mod.jacobi(u).dn; break;
                case CoefFunc::Z: v = ctx.mod.zeta(u); break;
                case CoefFunc::am: v = ctx.mod.am(u); break;
                default: {
                    JacobiValues jv = ctx.mod.jacobi(u);
                    switch (func_) {
                        case CoefFunc::cs: v = jv.cn / jv.sn; break;
                        case CoefFunc::ds: v = jv.dn / jv.sn; break;
                        case CoefFunc::ns: v = 1.0 / jv.sn; break;
                        case CoefFunc::nc: v = 1.0 / jv.cn; break;
                        case CoefFunc::dc: v = jv.dn / jv.cn; break;
                        case CoefFunc::sc: v = jv.sn / jv.cn; break;
                        default: v = 0; break;
                    }
                }
            }
            double out = v;
            for (int k = 1; k < power_; ++k) out *= v;
            return out;
        }
        case Kind::add: {
            double acc = 0;
            for (const auto& k : kids_) acc += k->eval(ctx);
            return acc;
        }
        case Kind::mul: {
            double acc = 1;
            for (const auto& k : kids_) acc *= k->eval(ctx);
            return acc;
        }
        case Kind::ipow: {
            double b = kids_[0]->eval(ctx);
            double acc = 1;
            for (int k = 0; k < power_; ++k) acc *= b;
            return acc;
        }
        case Kind::cosw:
            return std::cos(2.0 * kPi / ctx.weight_order);
        case Kind::sinw:
            return std::sin(2.0 * kPi / ctx.weight_order);
        case Kind::scale:
            return value_ * kids_[0]->eval(ctx);
    }
    throw std::logic_error("unreachable expr kind");
}

void Expr::visit_funcs(const std::function<void(CoefFunc, const ShiftArg&)>& fn) const {
    if (kind_ == Kind::func) fn(func_, arg_);
    for (const auto& k : kids_) k->visit_funcs(fn);
}

ExprPtr operator+(ExprPtr a, ExprPtr b) { return Expr::add({std::move(a), std::move(b)}); }
ExprPtr operator-(ExprPtr a, ExprPtr b) {
    return Expr::add({std::move(a), Expr::scale(std::move(b), -1.0)});
}
ExprPtr operator*(ExprPtr a, ExprPtr b) { return Expr::mul({std::move(a), std::move(b)}); }
ExprPtr operator*(double a, ExprPtr b) { return Expr::scale(std::move(b), a); }
ExprPtr operator-(ExprPtr a) { return Expr::scale(std::move(a), -1.0); }

ShiftArg A0() { return ShiftArg{0, -1, +1}; }
ExprPtr num(double v) { return Expr::constant(v); }
ExprPtr m_pow(int p) { return Expr::mpow(p); }
ExprPtr fn(CoefFunc f, ShiftArg arg, int pow) { return Expr::func(f, arg, pow); }

}  // namespace ellident
