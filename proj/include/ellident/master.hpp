#ifndef ELLIDENT_MASTER_HPP
#define ELLIDENT_MASTER_HPP

#include <map>
#include <string>
#include <vector>

#include "ellident/elliptic.hpp"

// The reconstruction pipeline: classify a Jacobi product into one of four
// symmetry classes, locate its poles in the fundamental cell
// (0,2K)x(0,2K'), extract principal parts by contour integration, and
// reassemble the function from derivatives of dn / sn / cn (classes I, III,
// IV) or from dn^2, the zeta function and a constant (class II).  The match
// f = g is a consequence of Liouville's theorem; here it is checked
// numerically.

namespace ellident {

enum class JFuncKind { sn, cn, dn };

struct ProductFactor {
    JFuncKind func;
    double shift = 0.0;
    int power = 1;
};

struct ProductTerm {
    double scalar = 1.0;
    int mpow = 0;  // extra factor m^mpow
    std::vector<ProductFactor> factors;
};

// A sum of scaled Jacobi products, the function f(z) under analysis.
struct ProductSpec {
    std::vector<ProductTerm> terms;
};

// Compact text form, e.g. "dn^2 * dn(+a) + dn^2 * dn(-a)" or
// "m * sn * cn * sn(+a) * cn(+a)"; shift names bound through `shifts`.
ProductSpec parse_product_spec(const std::string& text,
                               const std::map<std::string, double>& shifts);

complex eval_product(const ProductSpec& f, complex z, const Modulus& mod);
double eval_product(const ProductSpec& f, double x, const Modulus& mod);

struct SymmetryClass {
    int P = 0;  // f(z + 2iK') = (-1)^P f(z)
    int Q = 0;  // f(z + 2K)  = (-1)^Q f(z)
    int type() const {  // I..IV as 1..4
        if (P == 1 && Q == 0) return 1;
        if (P == 0 && Q == 0) return 2;
        if (P == 0 && Q == 1) return 3;
        return 4;
    }
};

class classification_error : public std::runtime_error {
public:
    explicit classification_error(const std::string& w) : std::runtime_error(w) {}
};

SymmetryClass classify(const ProductSpec& f, const Modulus& mod);

struct Pole {
    complex center;              // inside [0,2K) x {K'}
    int order = 0;               // after numeric softening
    std::vector<complex> alpha;  // alpha[l-1] = coefficient of (z-center)^-l
};

std::vector<Pole> locate_poles(const ProductSpec& f, const Modulus& mod);

// alpha_l = (1/2 pi i) contour integral of f(z) (z-c)^(l-1), N-point trapezoid.
std::vector<complex> laurent_coefficients(const ProductSpec& f, complex center, int order,
                                          double radius, int points, const Modulus& mod);

struct ReconstructionTerm {
    JacobiBasis basis;
    double arg_shift = 0.0;  // evaluated at z + arg_shift
    int deriv_order = 0;
    double coef = 0.0;
};

struct MasterReconstruction {
    SymmetryClass cls;
    std::vector<Pole> poles;
    std::vector<ReconstructionTerm> terms;
    std::vector<std::pair<double, double>> zeta_terms;  // (arg_shift, coef), class II
    double C = 0.0;       // class II constant
    double gamma2 = 0.0;  // sum of second Laurent coefficients
    double eval(double z, const Modulus& mod) const;
};

MasterReconstruction reconstruct(const ProductSpec& f, const Modulus& mod);

// (1/2K) int_0^2K f via the reconstruction: C - gamma2 E/K.  Class II only.
double typeII_definite_integral(const ProductSpec& f, const Modulus& mod);
double typeII_definite_integral(const MasterReconstruction& rec, const Modulus& mod);

}  // namespace ellident

#endif
