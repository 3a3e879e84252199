#ifndef ELLIDENT_INTEGRALS_HPP
#define ELLIDENT_INTEGRALS_HPP

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "ellident/elliptic.hpp"
#include "ellident/quadrature.hpp"

// Closed-form definite integrals of Jacobi products over [0, 2K], plus
// indefinite integrals and degree-reduction recursions, each checkable
// against the quadrature oracle (which only evaluates points).

namespace ellident {

// int_0^x dn^k, sn^k, cn^k via the standard degree-reduction recurrences
// seeded by the k = 0, 1, 2 cases.
double int_dn_pow(int k, double x, const Modulus& mod);
double int_sn_pow(int k, double x, const Modulus& mod);
double int_cn_pow(int k, double x, const Modulus& mod);

// int_0^x dn(t) dn(t+a) dt: first/third-kind incomplete integrals plus a log.
double int_dn_dn_shift(double x, double a, const Modulus& mod);

struct DefiniteFormula {
    std::string id;
    int arity;  // number of shift parameters
    std::function<double(const Modulus&, std::span<const double>)> closed;
    std::function<double(double, const Modulus&, std::span<const double>)> integrand;
};

const std::vector<DefiniteFormula>& definite_formulas();
const DefiniteFormula& definite_formula(const std::string& id);

// Closed-form value of a definite entry ("G.g1".."G.g12", "5.2", "5.6", "5.8a").
double definite_value(const std::string& id, const Modulus& mod, std::span<const double> shifts);

// Indefinite integrals I_n(x), normalized to I_n(0) = 0.
// ids: "5.10", "5.11", "5.15", "5.16", "5.17", "5.20" (fixed, n ignored),
// "5.13", "5.19", "H.h1".."H.h10" (recursions in n >= 1).
struct IndefiniteEntry {
    std::string id;
    bool recursive;
    std::function<double(int n, double x, double a, const Modulus&)> value;
    std::function<double(int n, double x, double a, const Modulus&)> integrand;
};
const std::vector<IndefiniteEntry>& indefinite_entries();
const IndefiniteEntry& indefinite_entry(const std::string& id);

inline constexpr int kIndefiniteMaxN = 12;

double indefinite_eval(const std::string& id, int n, double x, double a, const Modulus& mod);

// |d/dx I_n(x) - integrand(x)| / max(1, |integrand|), central difference h = 1e-5.
double derivative_check(const std::string& id, int n, double x, double a, const Modulus& mod);

}  // namespace ellident

#endif
