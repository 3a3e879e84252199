#ifndef ELLIDENT_CYCLIC_TYPES_HPP
#define ELLIDENT_CYCLIC_TYPES_HPP

#include <complex>
#include <string>
#include <vector>

#include "ellident/expr.hpp"
#include "ellident/identity.hpp"

namespace ellident {

enum class CyclicWeight { uniform, alternating, omega };

// (p, r, s, period kind) of a chained weighted sum; sp is the second spacing
// some entries carry (the source's overloaded second "s", renamed).
struct CyclicSpec {
    int p = 3;
    int r = 1;
    int s = 1;  // weight order, omega = exp(2 i pi / s)
    int period_in_K = 2;
    int sp = 0;
};

// One factor inside a cyclic sum: func evaluated at index j + offs_r*r + offs_s*sp.
struct CyclicAtom {
    JFunc func;
    int offs_r = 0;
    int offs_s = 0;
    int power = 1;
};

// coef * i^ipow * [ S{ atoms } or p (when is_p_const) ].
struct CyclicTerm {
    ExprPtr coef;
    int ipow = 0;
    bool is_p_const = false;
    std::vector<CyclicAtom> atoms;
};

struct CyclicIdentity {
    std::string id;
    CyclicWeight weight = CyclicWeight::uniform;
    int period_in_K = 2;
    bool uses_sp = false;
    bool needs_even_p = false;  // alternating entries: p even, r odd
    std::vector<CyclicTerm> lhs, rhs;
    std::string source;
};

struct CyclicCheckResult {
    CyclicSpec spec;
    std::string identity_id;
    std::complex<double> lhs_sum{};
    std::complex<double> rhs_sum{};
    double residual = 0;
};

}  // namespace ellident

#endif
