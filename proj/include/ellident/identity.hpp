#ifndef ELLIDENT_IDENTITY_HPP
#define ELLIDENT_IDENTITY_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ellident/expr.hpp"

namespace ellident {

enum class JFunc { sn, cn, dn, Z, am };

const char* jfunc_name(JFunc f);

// Argument slot of an atom: x + sign * shift[param]; param < 0 means plain x.
struct ShiftSpec {
    int param = -1;
    int sign = +1;
    bool operator==(const ShiftSpec&) const = default;
};

// One factor f(x + a_i)^power of a term.
struct Atom {
    JFunc func;
    int shift_index = 0;  // index into Identity::shifts; 0 is always plain x
    int power = 1;
};

struct Term {
    ExprPtr coef;             // never depends on x
    std::vector<Atom> atoms;  // empty -> constant term
};

// Shift-singularity constraint derived from the coefficient trees:
// the argument must stay clear of zeros of sn (for cs/ds/ns/Z-free poles)
// or zeros of cn (for nc/dc/sc), modulo 2K.
struct Constraint {
    ShiftArg arg;
    bool at_sn_zero = true;  // true: arg != 0 (mod 2K); false: arg != K (mod 2K)
};

class constraint_error : public std::domain_error {
public:
    explicit constraint_error(const std::string& what) : std::domain_error(what) {}
};

struct Identity {
    std::string id;
    int arity = 0;
    int rank = 0;
    std::vector<ShiftSpec> shifts;  // slot 0 is plain x
    std::vector<Term> lhs, rhs;
    std::vector<Term> rhs_den;  // nonempty only for rational right-hand sides
    std::vector<Constraint> constraints;
    std::string source;
    int period_in_K = 2;  // 2 -> 2K, 4 -> 4K

    bool lhs_homogeneous() const;  // every LHS monomial has jacobi degree == rank
};

enum class Side { lhs, rhs };

// Numeric evaluation.  Throws constraint_error when a shift (or difference)
// violates the identity's singularity exclusions.
double eval_side(const Identity& ident, Side side, double x, std::span<const double> shifts,
                 const Modulus& mod, double exclusion_radius_in_K = 0.02);

// |lhs - rhs| / max(1, |lhs|, |rhs|)
double residual(const Identity& ident, double x, std::span<const double> shifts,
                const Modulus& mod, double exclusion_radius_in_K = 0.02);

void check_constraints(const Identity& ident, std::span<const double> shifts, const Modulus& mod,
                       double exclusion_radius_in_K);

// Recomputes derived data (constraints, rank, period) from the term lists.
void finalize_identity(Identity& ident);

// Copy with one term's coefficient scaled by (1 + rel); used by the
// mutation-sensitivity harness.
Identity perturbed(const Identity& ident, size_t rhs_term_index, double rel);

double floor_relative_error(double lhs, double rhs);

}  // namespace ellident

#endif
