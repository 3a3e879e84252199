#ifndef ELLIDENT_EXPR_HPP
#define ELLIDENT_EXPR_HPP

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ellident/elliptic.hpp"

// Evaluable expression trees for identity coefficients.  A coefficient
// depends only on the parameter m, the shift constants of its identity, and
// (for weighted cyclic identities) the weight order s -- never on x.

namespace ellident {

enum class CoefFunc { sn, cn, dn, Z, am, cs, ds, ns, nc, dc, sc };

const char* coef_func_name(CoefFunc f);

// sign * (shift[i] - (j >= 0 ? shift[j] : 0))
struct ShiftArg {
    int i = 0;
    int j = -1;
    int sign = +1;
    double value(std::span<const double> shifts) const;
    std::string str() const;
};

struct CoefCtx {
    const Modulus& mod;
    std::span<const double> shifts;
    int weight_order = 1;  // s in omega = exp(2 i pi / s)
};

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

class Expr {
public:
    enum class Kind { constant, mpow, func, add, mul, ipow, cosw, sinw, scale };

    static ExprPtr constant(double v);
    static ExprPtr mpow(int p);                              // m^p
    static ExprPtr func(CoefFunc f, ShiftArg arg, int pow);  // f(arg)^pow
    static ExprPtr add(std::vector<ExprPtr> kids);
    static ExprPtr mul(std::vector<ExprPtr> kids);
    static ExprPtr ipow(ExprPtr base, int p);  // base^p, integer p >= 0
    static ExprPtr cosw();                     // cos(2 pi / s)
    static ExprPtr sinw();                     // sin(2 pi / s)
    static ExprPtr scale(ExprPtr inner, double factor);

    double eval(const CoefCtx& ctx) const;

    // Walks every func leaf; used to derive singularity constraints.
    void visit_funcs(const std::function<void(CoefFunc, const ShiftArg&)>& fn) const;

    Kind kind() const { return kind_; }

private:
    Kind kind_;
    double value_ = 0;  // constant / scale factor
    int power_ = 1;     // mpow / func / ipow
    CoefFunc func_ = CoefFunc::sn;
    ShiftArg arg_;
    std::vector<ExprPtr> kids_;
};

ExprPtr operator+(ExprPtr a, ExprPtr b);
ExprPtr operator-(ExprPtr a, ExprPtr b);
ExprPtr operator*(ExprPtr a, ExprPtr b);
ExprPtr operator*(double a, ExprPtr b);
ExprPtr operator-(ExprPtr a);

// Shorthand builders used by the hand-coded identity families.
ShiftArg A0();                     // the single shift a
ExprPtr num(double v);
ExprPtr m_pow(int p);
ExprPtr fn(CoefFunc f, ShiftArg arg, int pow = 1);

}  // namespace ellident

#endif
