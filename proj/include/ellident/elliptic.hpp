#ifndef ELLIDENT_ELLIPTIC_HPP
#define ELLIDENT_ELLIPTIC_HPP

#include <array>
#include <complex>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

// Real- and complex-argument Jacobi elliptic functions, complete and
// incomplete elliptic integrals, the amplitude, and the Jacobi zeta
// function.  Everything is computed with the descending-Landen/AGM scale
// (Abramowitz & Stegun 16.4, 17.6) plus Carlson symmetric forms for the
// incomplete integrals.  All functions are pure; a Modulus object is
// immutable after construction and safe to share across threads.

namespace ellident {

using complex = std::complex<double>;

struct JacobiValues {
    double sn, cn, dn;
};

// Ratios cn/sn, dn/sn, 1/sn, 1/cn, dn/cn, sn/cn.
struct AuxValues {
    double cs, ds, ns, nc, dc, sc;
};

struct CompleteIntegrals {
    double K;       // +infinity at m = 1
    double Kprime;  // K(1 - m)
    double E;
};

struct ComplexJacobi {
    complex z;
    complex sn, cn, dn;
    complex Z;
};

// Thrown when a complex evaluation point is closer to the pole lattice
// iK' + 2jK + 2ik K' than the exclusion radius.
class pole_proximity_error : public std::domain_error {
public:
    pole_proximity_error(complex z, double distance);
    double distance() const { return distance_; }

private:
    double distance_;
};

// Default exclusion radius around the pole lattice in the z-plane.
inline constexpr double kPoleExclusionRadius = 1e-6;

// Precomputed AGM scale for a fixed parameter m = k^2.  Endpoints m = 0 and
// m = 1 dispatch to the exact trigonometric / hyperbolic forms.
class Modulus {
public:
    explicit Modulus(double m);

    double m() const { return m_; }
    double K() const { return K_; }
    double Kprime() const { return Kp_; }
    double E() const { return E_; }
    double E_over_K() const { return E_over_K_; }

    JacobiValues jacobi(double x) const;
    AuxValues aux(double x) const;

    // Amplitude am(x), continuous and increasing on the whole real line.
    double am(double x) const;

    // Jacobi zeta Z(x) = E(am x, k) - (E/K) x.  Requires m < 1.
    double zeta(double x) const;

    // Incomplete integrals in the amplitude convention,
    //   F(phi)      = int_0^phi (1 - m sin^2 t)^(-1/2) dt
    //   E_inc(phi)  = int_0^phi (1 - m sin^2 t)^(+1/2) dt
    //   Pi(phi, n)  = int_0^phi (1 - n sin^2 t)^(-1)(1 - m sin^2 t)^(-1/2) dt.
    // Extended periodically to all real phi.  Requires m < 1.
    double F(double phi) const;
    double E_inc(double phi) const;
    double Pi(double phi, double n) const;
    double Pi_complete(double n) const;

    // Complex-argument evaluation through the imaginary-argument
    // transformation (functions of Im z at parameter 1-m) combined with the
    // addition formulas.  Throws pole_proximity_error inside the exclusion
    // radius.  Requires 0 < m < 1.
    ComplexJacobi jacobi_c(complex z) const;
    complex sn_c(complex z) const;
    complex cn_c(complex z) const;
    complex dn_c(complex z) const;

    // Z(z) for complex z, via path integration of dn^2 - E/K from 0.
    complex zeta_c(complex z) const;

    // Distance from z to the nearest pole iK' + 2jK + 2ik K'.
    double pole_distance(complex z) const;

private:
    Modulus(double m, bool build_complement);
    void init(double m);
    void jacobi_phi(double x, double& phi0, double& phi1) const;

    double m_ = 0;
    double K_ = 0, Kp_ = 0, E_ = 0, E_over_K_ = 0;
    std::vector<double> agm_a_, agm_c_;
    std::shared_ptr<const Modulus> comp_;  // scale at parameter 1-m
};

CompleteIntegrals complete_integrals(double m);
JacobiValues jacobi_values(double x, double m);
AuxValues aux_values(double x, double m);
AuxValues aux_values(const JacobiValues& v);
double jacobi_zeta(double x, double m);
double jacobi_am(double x, double m);

struct IncompleteIntegrals {
    double F, E, Pi;
};
IncompleteIntegrals incomplete_integrals(double phi, double n, double m);

ComplexJacobi jacobi_complex(complex z, double m);

// Carlson symmetric forms (used by the incomplete integrals; exposed for
// tests).
double carlson_rf(double x, double y, double z);
double carlson_rc(double x, double y);
double carlson_rd(double x, double y, double z);
double carlson_rj(double x, double y, double z, double p);

// d^order/dx^order of sn, cn, dn or dn^2 at real x, computed exactly from
// the first-order system sn' = cn dn, cn' = -sn dn, dn' = -m sn cn.
enum class JacobiBasis { sn, cn, dn, dn2 };
double jacobi_derivative(JacobiBasis basis, int order, double x, const Modulus& mod);

}  // namespace ellident

#endif
