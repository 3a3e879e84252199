#include "ellident/elliptic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ellident {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

double clamp1(double x) { return std::min(1.0, std::max(-1.0, x)); }

}  // namespace

pole_proximity_error::pole_proximity_error(complex z, double distance)
    : std::domain_error("evaluation point (" + std::to_string(z.real()) + ", " +
                        std::to_string(z.imag()) + "i) lies within " +
                        std::to_string(distance) + " of a pole of the Jacobi functions"),
      distance_(distance) {}

Modulus::Modulus(double m) : Modulus(m, true) {}

Modulus::Modulus(double m, bool build_complement) {
    if (!(m >= 0.0 && m <= 1.0))
        throw std::domain_error("parameter m must lie in [0, 1], got " + std::to_string(m));
    init(m);
    if (build_complement) {
        comp_ = std::shared_ptr<const Modulus>(new Modulus(1.0 - m, false));
        Kp_ = comp_->K_;
    } else {
        // One-sided scale; K' still needed for pole bookkeeping.
        double a = 1.0, b = std::sqrt(m), c = std::sqrt(1.0 - m);
        if (m == 0.0) {
            Kp_ = std::numeric_limits<double>::infinity();
        } else if (m == 1.0) {
            Kp_ = kPi / 2;
        } else {
            while (std::abs(c) > 1e-15 * a) {
                double an = 0.5 * (a + b);
                c = 0.5 * (a - b);
                b = std::sqrt(a * b);
                a = an;
            }
            Kp_ = kPi / (2 * a);
        }
    }
}

void Modulus::init(double m) {
    m_ = m;
    if (m == 0.0) {
        K_ = kPi / 2;
        E_ = kPi / 2;
        E_over_K_ = 1.0;
        return;
    }
    if (m == 1.0) {
        K_ = std::numeric_limits<double>::infinity();
        E_ = 1.0;
        E_over_K_ = 0.0;
        return;
    }
    double a = 1.0, b = std::sqrt(1.0 - m), c = std::sqrt(m);
    agm_a_.push_back(a);
    agm_c_.push_back(c);
    double csum = 0.5 * c * c;  // accumulates sum 2^(n-1) c_n^2
    double pow2 = 0.5;
    while (std::abs(c) > 1e-15 * a && agm_a_.size() < 32) {
        double an = 0.5 * (a + b);
        c = 0.5 * (a - b);
        b = std::sqrt(a * b);
        a = an;
        pow2 *= 2.0;
        csum += pow2 * c * c;
        agm_a_.push_back(a);
        agm_c_.push_back(c);
    }
    K_ = kPi / (2 * a);
    E_ = K_ * (1.0 - csum);
    E_over_K_ = E_ / K_;
}

// Descending-Landen amplitude chain: returns phi0 = am(x) (for x folded into
// [-2K, 2K]) along with phi1, which the dn formula needs.
void Modulus::jacobi_phi(double x, double& phi0, double& phi1) const {
    int N = static_cast<int>(agm_c_.size()) - 1;
    double phi = std::ldexp(agm_a_[N] * x, N);
    phi1 = phi;
    for (int n = N; n >= 1; --n) {
        phi1 = phi;
        phi = 0.5 * (phi + std::asin(clamp1(agm_c_[n] / agm_a_[n] * std::sin(phi))));
    }
    phi0 = phi;
}

JacobiValues Modulus::jacobi(double x) const {
    if (m_ == 0.0) return {std::sin(x), std::cos(x), 1.0};
    if (m_ == 1.0) {
        double sech = 1.0 / std::cosh(x);
        return {std::tanh(x), sech, sech};
    }
    // Exact-period folding keeps the chain accurate for large |x|.
    double xr = x - 4.0 * K_ * std::round(x / (4.0 * K_));
    double phi0, phi1;
    jacobi_phi(xr, phi0, phi1);
    double sn = std::sin(phi0);
    double cn = std::cos(phi0);
    // (1-m) + m cn^2 has no cancellation, unlike 1 - m sn^2.
    double dn = std::sqrt((1.0 - m_) + m_ * cn * cn);
    return {sn, cn, dn};
}

AuxValues Modulus::aux(double x) const { return aux_values(jacobi(x)); }

double Modulus::am(double x) const {
    if (m_ == 0.0) return x;
    if (m_ == 1.0) return 2.0 * std::atan(std::tanh(0.5 * x));  // gudermannian
    double n = std::round(x / (4.0 * K_));
    double xr = x - 4.0 * K_ * n;
    double phi0, phi1;
    jacobi_phi(xr, phi0, phi1);
    return phi0 + 2.0 * kPi * n;
}

double Modulus::zeta(double x) const {
    if (m_ == 1.0) throw std::domain_error("jacobi zeta undefined at m = 1 (K infinite)");
    if (m_ == 0.0) return 0.0;
    double xr = x - 4.0 * K_ * std::round(x / (4.0 * K_));
    int N = static_cast<int>(agm_c_.size()) - 1;
    double phi = std::ldexp(agm_a_[N] * xr, N);
    double z = 0.0;
    // Z(u) = sum_{n>=1} c_n sin(phi_n) over the descending chain.
    for (int n = N; n >= 1; --n) {
        z += agm_c_[n] * std::sin(phi);
        phi = 0.5 * (phi + std::asin(clamp1(agm_c_[n] / agm_a_[n] * std::sin(phi))));
    }
    return z;
}

double Modulus::F(double phi) const {
    if (m_ == 1.0) throw std::domain_error("F(phi) diverges at m = 1");
    double j = std::round(phi / kPi);
    double psi = phi - kPi * j;
    double s = std::sin(psi), c = std::cos(psi);
    double f = s * carlson_rf(c * c, 1.0 - m_ * s * s, 1.0);
    return f + 2.0 * j * K_;
}

double Modulus::E_inc(double phi) const {
    double j = std::round(phi / kPi);
    double psi = phi - kPi * j;
    double s = std::sin(psi), c = std::cos(psi);
    double s3 = s * s * s;
    double e = s * carlson_rf(c * c, 1.0 - m_ * s * s, 1.0) -
               (m_ / 3.0) * s3 * carlson_rd(c * c, 1.0 - m_ * s * s, 1.0);
    return e + 2.0 * j * E_;
}

double Modulus::Pi(double phi, double n) const {
    if (m_ == 1.0) throw std::domain_error("Pi(phi, n) diverges at m = 1");
    double j = std::round(phi / kPi);
    double psi = phi - kPi * j;
    double s = std::sin(psi), c = std::cos(psi);
    if (n * s * s >= 1.0)
        throw std::domain_error("Pi(phi, n): amplitude reaches the singular angle of the characteristic");
    if (j != 0.0 && n >= 1.0)
        throw std::domain_error("Pi(phi, n): periodic extension crosses the characteristic singularity");
    double v = s * carlson_rf(c * c, 1.0 - m_ * s * s, 1.0) +
               (n / 3.0) * s * s * s * carlson_rj(c * c, 1.0 - m_ * s * s, 1.0, 1.0 - n * s * s);
    return v + 2.0 * j * Pi_complete(n);
}

double Modulus::Pi_complete(double n) const {
    if (n >= 1.0) throw std::domain_error("complete Pi diverges for characteristic n >= 1");
    return carlson_rf(0.0, 1.0 - m_, 1.0) + (n / 3.0) * carlson_rj(0.0, 1.0 - m_, 1.0, 1.0 - n);
}

double Modulus::pole_distance(complex z) const {
    double dx = std::remainder(z.real(), 2.0 * K_);
    double dy = std::remainder(z.imag() - Kp_, 2.0 * Kp_);
    return std::hypot(dx, dy);
}

ComplexJacobi Modulus::jacobi_c(complex z) const {
    if (!(m_ > 0.0 && m_ < 1.0))
        throw std::domain_error("complex-argument evaluation requires 0 < m < 1");
    double d = pole_distance(z);
    if (d < kPoleExclusionRadius) throw pole_proximity_error(z, d);
    JacobiValues re = jacobi(z.real());
    JacobiValues im = comp_->jacobi(z.imag());
    double den = im.cn * im.cn + m_ * re.sn * re.sn * im.sn * im.sn;
    complex sn(re.sn * im.dn / den, re.cn * re.dn * im.sn * im.cn / den);
    complex cn(re.cn * im.cn / den, -re.sn * re.dn * im.sn * im.dn / den);
    complex dn(re.dn * im.cn * im.dn / den, -m_ * re.sn * re.cn * im.sn / den);
    ComplexJacobi out;
    out.z = z;
    out.sn = sn;
    out.cn = cn;
    out.dn = dn;
    out.Z = zeta_c(z);
    return out;
}

complex Modulus::sn_c(complex z) const {
    double d = pole_distance(z);
    if (d < kPoleExclusionRadius) throw pole_proximity_error(z, d);
    JacobiValues re = jacobi(z.real());
    JacobiValues im = comp_->jacobi(z.imag());
    double den = im.cn * im.cn + m_ * re.sn * re.sn * im.sn * im.sn;
    return {re.sn * im.dn / den, re.cn * re.dn * im.sn * im.cn / den};
}

complex Modulus::cn_c(complex z) const {
    double d = pole_distance(z);
    if (d < kPoleExclusionRadius) throw pole_proximity_error(z, d);
    JacobiValues re = jacobi(z.real());
    JacobiValues im = comp_->jacobi(z.imag());
    double den = im.cn * im.cn + m_ * re.sn * re.sn * im.sn * im.sn;
    return {re.cn * im.cn / den, -re.sn * re.dn * im.sn * im.dn / den};
}

complex Modulus::dn_c(complex z) const {
    double d = pole_distance(z);
    if (d < kPoleExclusionRadius) throw pole_proximity_error(z, d);
    JacobiValues re = jacobi(z.real());
    JacobiValues im = comp_->jacobi(z.imag());
    double den = im.cn * im.cn + m_ * re.sn * re.sn * im.sn * im.sn;
    return {re.dn * im.cn * im.dn / den, -m_ * re.sn * re.cn * im.sn / den};
}

namespace {

// 16-point Gauss-Legendre nodes/weights on [-1, 1].
constexpr std::array<double, 8> kGLx = {0.0950125098376374, 0.2816035507792589,
                                        0.4580167776572274, 0.6178762444026438,
                                        0.7554044083550030, 0.8656312023878318,
                                        0.9445750230732326, 0.9894009349916499};
constexpr std::array<double, 8> kGLw = {0.1894506104550685, 0.1826034150449236,
                                        0.1691565193950025, 0.1495959888165767,
                                        0.1246289712555339, 0.0951585116824928,
                                        0.0622535239386479, 0.0271524594117541};

template <typename F>
complex gl16(F&& f, complex a, complex b) {
    complex mid = 0.5 * (a + b), half = 0.5 * (b - a);
    complex acc = 0.0;
    for (int i = 0; i < 8; ++i) {
        acc += kGLw[i] * (f(mid + half * kGLx[i]) + f(mid - half * kGLx[i]));
    }
    return acc * half;
}

template <typename F>
complex adaptive_segment(F&& f, complex a, complex b, int depth) {
    complex whole = gl16(f, a, b);
    if (depth >= 12) return whole;
    complex mid = 0.5 * (a + b);
    complex left = gl16(f, a, mid), right = gl16(f, mid, b);
    if (std::abs(left + right - whole) < 1e-13 * (1.0 + std::abs(left + right)))
        return left + right;
    return adaptive_segment(f, a, mid, depth + 1) + adaptive_segment(f, mid, b, depth + 1);
}

}  // namespace

complex Modulus::zeta_c(complex z) const {
    if (m_ == 1.0) throw std::domain_error("jacobi zeta undefined at m = 1");
    if (m_ == 0.0) return 0.0;
    if (z.imag() == 0.0) return zeta(z.real());
    double d = pole_distance(z);
    if (d < kPoleExclusionRadius) throw pole_proximity_error(z, d);

    auto integrand = [this](complex w) {
        complex dn = dn_c(w);
        return dn * dn - E_over_K_;
    };
    // Path: real axis to x0, then vertical to z.  The vertical leg must stay
    // clear of the pole columns Re w = 0 mod 2K; detour sideways if needed.
    double x0 = z.real();
    double safe = 0.2 * std::min(K_, Kp_);
    complex total = 0.0;
    if (std::abs(std::remainder(x0, 2.0 * K_)) < safe) {
        double x1 = x0 + (std::remainder(x0, 2.0 * K_) >= 0 ? safe : -safe) * 2.0;
        total += zeta(x1);
        total += adaptive_segment(integrand, complex(x1, 0.0), complex(x1, z.imag()), 0);
        total += adaptive_segment(integrand, complex(x1, z.imag()), z, 0);
    } else {
        total += zeta(x0);
        total += adaptive_segment(integrand, complex(x0, 0.0), z, 0);
    }
    return total;
}

CompleteIntegrals complete_integrals(double m) {
    Modulus mod(m);
    return {mod.K(), mod.Kprime(), mod.E()};
}

JacobiValues jacobi_values(double x, double m) { return Modulus(m).jacobi(x); }

AuxValues aux_values(const JacobiValues& v) {
    return {v.cn / v.sn, v.dn / v.sn, 1.0 / v.sn, 1.0 / v.cn, v.dn / v.cn, v.sn / v.cn};
}

AuxValues aux_values(double x, double m) { return aux_values(jacobi_values(x, m)); }

double jacobi_zeta(double x, double m) { return Modulus(m).zeta(x); }

double jacobi_am(double x, double m) { return Modulus(m).am(x); }

IncompleteIntegrals incomplete_integrals(double phi, double n, double m) {
    Modulus mod(m);
    return {mod.F(phi), mod.E_inc(phi), mod.Pi(phi, n)};
}

ComplexJacobi jacobi_complex(complex z, double m) { return Modulus(m).jacobi_c(z); }

// ---------------------------------------------------------------------------
// Carlson symmetric forms, by the duplication algorithms of Carlson (1995).

double carlson_rf(double x, double y, double z) {
    constexpr double errtol = 1.5e-3;
    double xt = x, yt = y, zt = z, ave = 0, dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < 200; ++it) {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = (xt + yt + zt) / 3.0;
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) break;
    }
    double e2 = dx * dy - dz * dz;
    double e3 = dx * dy * dz;
    return (1.0 + (e2 / 24.0 - 0.1 - 3.0 * e3 / 44.0) * e2 + e3 / 14.0) / std::sqrt(ave);
}

double carlson_rc(double x, double y) {
    constexpr double errtol = 1.2e-3;
    double xt = x, yt = y, ave = 0, s = 0;
    for (int it = 0; it < 200; ++it) {
        double lam = 2.0 * std::sqrt(xt) * std::sqrt(yt) + yt;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        ave = (xt + 2.0 * yt) / 3.0;
        s = (yt - ave) / ave;
        if (std::abs(s) < errtol) break;
    }
    return (1.0 + s * s * (0.3 + s * (1.0 / 7.0 + s * (0.375 + s * 9.0 / 22.0)))) / std::sqrt(ave);
}

double carlson_rd(double x, double y, double z) {
    constexpr double errtol = 1.5e-3;
    constexpr double C1 = 3.0 / 14.0, C2 = 1.0 / 6.0, C3 = 9.0 / 22.0, C4 = 3.0 / 26.0;
    double xt = x, yt = y, zt = z, sum = 0.0, fac = 1.0;
    double ave = 0, dx = 0, dy = 0, dz = 0;
    for (int it = 0; it < 200; ++it) {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        sum += fac / (sz * (zt + lam));
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        ave = 0.2 * (xt + yt + 3.0 * zt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz)}) < errtol) break;
    }
    double ea = dx * dy;
    double eb = dz * dz;
    double ec = ea - eb;
    double ed = ea - 6.0 * eb;
    double ee = ed + ec + ec;
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-C1 + 0.25 * C3 * ed - 1.5 * C4 * dz * ee) +
                dz * (C2 * ee + dz * (-C3 * ec + dz * C4 * ea))) /
               (ave * std::sqrt(ave));
}

double carlson_rj(double x, double y, double z, double p) {
    constexpr double errtol = 1.5e-3;
    constexpr double C1 = 3.0 / 14.0, C2 = 1.0 / 3.0, C3 = 3.0 / 22.0, C4 = 3.0 / 26.0;
    double xt = x, yt = y, zt = z, pt = p, sum = 0.0, fac = 1.0;
    double ave = 0, dx = 0, dy = 0, dz = 0, dp = 0;
    for (int it = 0; it < 200; ++it) {
        double sx = std::sqrt(xt), sy = std::sqrt(yt), sz = std::sqrt(zt);
        double lam = sx * (sy + sz) + sy * sz;
        double alpha = pt * (sx + sy + sz) + sx * sy * sz;
        alpha *= alpha;
        double beta = pt * (pt + lam) * (pt + lam);
        sum += fac * carlson_rc(alpha, beta);
        fac *= 0.25;
        xt = 0.25 * (xt + lam);
        yt = 0.25 * (yt + lam);
        zt = 0.25 * (zt + lam);
        pt = 0.25 * (pt + lam);
        ave = 0.2 * (xt + yt + zt + 2.0 * pt);
        dx = (ave - xt) / ave;
        dy = (ave - yt) / ave;
        dz = (ave - zt) / ave;
        dp = (ave - pt) / ave;
        if (std::max({std::abs(dx), std::abs(dy), std::abs(dz), std::abs(dp)}) < errtol) break;
    }
    double ea = dx * (dy + dz) + dy * dz;
    double eb = dx * dy * dz;
    double ec = dp * dp;
    double ed = ea - 3.0 * ec;
    double ee = eb + 2.0 * dp * (ea - ec);
    return 3.0 * sum +
           fac *
               (1.0 + ed * (-C1 + 0.75 * C3 * ed - 1.5 * C4 * ee) +
                eb * (0.5 * C2 + dp * (-C3 - C3 + dp * C4)) + dp * ea * (C2 - dp * C3) -
                C2 * dp * ec) /
               (ave * std::sqrt(ave));
}

// ---------------------------------------------------------------------------
// Derivatives of the basis functions via the closed first-order system.

namespace {

using Monomials = std::map<std::array<int, 3>, double>;  // sn^i cn^j dn^k -> coef

Monomials differentiate(const Monomials& f, double m) {
    Monomials out;
    for (const auto& [e, c] : f) {
        int i = e[0], j = e[1], k = e[2];
        if (i > 0) out[{i - 1, j + 1, k + 1}] += c * i;
        if (j > 0) out[{i + 1, j - 1, k + 1}] -= c * j;
        if (k > 0) out[{i + 1, j + 1, k - 1}] -= c * k * m;
    }
    return out;
}

}  // namespace

double jacobi_derivative(JacobiBasis basis, int order, double x, const Modulus& mod) {
    Monomials f;
    switch (basis) {
        case JacobiBasis::sn: f[{1, 0, 0}] = 1.0; break;
        case JacobiBasis::cn: f[{0, 1, 0}] = 1.0; break;
        case JacobiBasis::dn: f[{0, 0, 1}] = 1.0; break;
        case JacobiBasis::dn2: f[{0, 0, 2}] = 1.0; break;
    }
    for (int i = 0; i < order; ++i) f = differentiate(f, mod.m());
    JacobiValues v = mod.jacobi(x);
    double acc = 0.0;
    for (const auto& [e, c] : f) {
        acc += c * std::pow(v.sn, e[0]) * std::pow(v.cn, e[1]) * std::pow(v.dn, e[2]);
    }
    return acc;
}

}  // namespace ellident
