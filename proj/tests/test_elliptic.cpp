#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellident/elliptic.hpp"

using namespace ellident;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

// Reference values computed independently with 40-digit arithmetic
// (arithmetic-geometric mean for K/E, theta-series evaluation of sn/cn/dn,
// E(am x) - (E/K) x for Z), rounded to 17 significant digits.
struct JacRef {
    double x, m, sn, cn, dn, Z;
};
constexpr JacRef kJacRefs[] = {
    {0.69999999999999996, 0.35999999999999999, 0.62991711532348678, 0.77666236410845676,
     0.92582589832868326, 0.096755343859970566},
    {1.3000000000000000, 0.050000000000000003, 0.95998936646373434, 0.28003645526352095,
     0.97668880448883405, 0.0068441765828624417},
    {2.8999999999999999, 0.81000000000000005, 0.95994257654738561, -0.28019680535574763,
     0.50358048242815070, -0.18780315640175152},
    {-4.2000000000000002, 0.50000000000000000, 0.46395067421315925, -0.88586103419055236,
     0.94465596168582850, -0.11506573842758433},
    {11.750000000000000, 0.93000000000000005, 0.64548184365108809, 0.76377561463874471,
     0.78263558969076840, 0.35050577843003424},
    {0.31000000000000000, 0.64000000000000001, 0.30209695368904793, 0.95327720552407904,
     0.97035661257392904, 0.10553890653558791},
    {6.0999999999999996, 0.12000000000000000, -0.37505916542229538, 0.92700087509814751,
     0.99152391534038540, -0.021285740456369743},
    {-0.90000000000000002, 0.98999999999999999, -0.71699283644904350, 0.69708053514694782,
     0.70075820348815583, -0.47048843578707508},
};

struct CompRef {
    double m, K, E;
};
constexpr CompRef kCompRefs[] = {
    {0.050000000000000003, 1.5910034537907922, 1.5509733517804723},
    {0.35999999999999999, 1.7507538029157525, 1.4180833944487242},
    {0.50000000000000000, 1.8540746773013719, 1.3506438810476755},
    {0.81000000000000005, 2.2805491384227703, 1.1716970527816141},
    {0.93000000000000005, 2.7470730040246672, 1.0791214066808266},
    {0.99900000000000000, 4.8411325605502966, 1.0021707908344452},
};

struct IncRef {
    double phi, n, m, F, E, Pi;
};
constexpr IncRef kIncRefs[] = {
    {0.59999999999999998, 0.29999999999999999, 0.35999999999999999, 0.61274265624700048,
     0.58772022545644410, 0.63491854723881351},
    {1.2000000000000000, 0.69999999999999996, 0.50000000000000000, 1.3407335236601330,
     1.0827171193001841, 1.9995535263676439},
    {0.40000000000000002, 0.45000000000000001, 0.81000000000000005, 0.40887207470755812,
     0.39146936668299699, 0.41896372677835637},
    {1.5000000000000000, 0.20000000000000001, 0.050000000000000003, 1.5183711450039646,
     1.4819665973609345, 1.6893152049250126},
    {2.6000000000000001, 0.50000000000000000, 0.50000000000000000, 3.1532470473458128,
     2.1724444904409007, 4.8192536887969431},
    {-1.1000000000000001, 0.34999999999999998, 0.69999999999999996, -1.2745510218519169,
     -0.96387530882033893, -1.4674540103257813},
    {4.0000000000000000, 0.29999999999999999, 0.25000000000000000, 4.2543274975235837,
     3.7700574829481946, 5.0028025514275731},
};

struct CplxRef {
    double re, im, snr, sni, cnr, cni, dnr, dni;
};
constexpr CplxRef kCplxRefs[] = {  // m = 0.6
    {0.80000000000000004, 0.29999999999999999, 0.71816569022939052, 0.18469996442803263,
     0.74183808279911671, -0.17880610407368516, 0.84841673308716452, -0.093806620448991724},
    {2.2000000000000002, 1.1000000000000001, 1.1940504253014511, -0.064918412722775322,
     -0.11748276779839099, -0.65980619774423324, 0.40068468661254792, 0.11607509981505368},
    {0.10000000000000001, -0.69999999999999996, 0.15063607978184951, -0.79812963647662768,
     1.2740582920372883, 0.094365477896856780, 1.1714877271178495, 0.061576634639958396},
};

// Midpoint-rule oracle for K(m) = int_0^{pi/2} (1 - m sin^2 t)^{-1/2} dt.
// The integrand is analytic and pi-periodic after even extension, so the
// midpoint rule converges spectrally.
double quadrature_K(double m) {
    const int n = 4000;
    double h = (kPi / 2) / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        double t = (i + 0.5) * h;
        acc += 1.0 / std::sqrt(1.0 - m * std::sin(t) * std::sin(t));
    }
    return acc * h;
}

}  // namespace

TEST_CASE("complete integrals against frozen references") {
    for (const auto& r : kCompRefs) {
        CompleteIntegrals ci = complete_integrals(r.m);
        CHECK(ci.K == doctest::Approx(r.K).epsilon(1e-14));
        CHECK(ci.E == doctest::Approx(r.E).epsilon(1e-14));
    }
    CHECK(std::abs(complete_integrals(0.5).K - quadrature_K(0.5)) < 1e-12);
}

TEST_CASE("complete integral endpoints and monotonicity") {
    CompleteIntegrals c0 = complete_integrals(0.0);
    CHECK(std::abs(c0.K - kPi / 2) < 1e-15);
    CHECK(std::abs(c0.E - kPi / 2) < 1e-15);
    CompleteIntegrals c1 = complete_integrals(1.0);
    CHECK(std::isinf(c1.K));
    CHECK(c1.E == 1.0);
    CHECK(std::abs(c1.Kprime - kPi / 2) < 1e-15);
    double prev = 0.0;
    for (double m = 0.0; m < 1.0; m += 0.05) {
        double K = complete_integrals(m).K;
        CHECK(K > prev);
        prev = K;
    }
    CHECK_THROWS_AS(complete_integrals(-0.1), std::domain_error);
    CHECK_THROWS_AS(complete_integrals(1.1), std::domain_error);
}

TEST_CASE("legendre relation") {
    for (double m : {0.05, 0.3, 0.5, 0.77, 0.95}) {
        CompleteIntegrals c = complete_integrals(m);
        CompleteIntegrals cc = complete_integrals(1.0 - m);
        double res = c.E * c.Kprime + cc.E * c.K - c.K * c.Kprime - kPi / 2;
        CHECK(std::abs(res) < 1e-12);
    }
}

TEST_CASE("jacobi values against frozen references") {
    for (const auto& r : kJacRefs) {
        JacobiValues v = jacobi_values(r.x, r.m);
        CHECK(v.sn == doctest::Approx(r.sn).epsilon(1e-13));
        CHECK(v.cn == doctest::Approx(r.cn).epsilon(1e-13));
        CHECK(v.dn == doctest::Approx(r.dn).epsilon(1e-13));
        CHECK(std::abs(jacobi_zeta(r.x, r.m) - r.Z) < 1e-13);
    }
}

TEST_CASE("jacobi values at m endpoints and x = 0") {
    for (double x : {-2.0, 0.3, 1.7}) {
        JacobiValues v0 = jacobi_values(x, 0.0);
        CHECK(v0.sn == doctest::Approx(std::sin(x)));
        CHECK(v0.cn == doctest::Approx(std::cos(x)));
        CHECK(v0.dn == 1.0);
        JacobiValues v1 = jacobi_values(x, 1.0);
        CHECK(v1.sn == doctest::Approx(std::tanh(x)));
        CHECK(v1.cn == doctest::Approx(1.0 / std::cosh(x)));
        CHECK(v1.dn == doctest::Approx(1.0 / std::cosh(x)));
    }
    JacobiValues v = jacobi_values(0.0, 0.42);
    CHECK(v.sn == 0.0);
    CHECK(v.cn == 1.0);
    CHECK(v.dn == 1.0);
}

TEST_CASE("pythagorean invariants over 1e4 random points") {
    std::mt19937_64 rng(20240831);
    std::uniform_real_distribution<double> um(0.01, 0.99);
    std::uniform_real_distribution<double> ux(-8.0, 8.0);
    double worst1 = 0, worst2 = 0;
    for (int i = 0; i < 10000; ++i) {
        double m = um(rng);
        Modulus mod(m);
        double x = ux(rng) * mod.K();
        JacobiValues v = mod.jacobi(x);
        worst1 = std::max(worst1, std::abs(v.sn * v.sn + v.cn * v.cn - 1.0));
        worst2 = std::max(worst2, std::abs(v.dn * v.dn + m * v.sn * v.sn - 1.0));
        CHECK(v.dn > 0.0);
    }
    CHECK(worst1 < 1e-12);
    CHECK(worst2 < 1e-12);
}

TEST_CASE("argument reduction keeps accuracy for |x| up to 1e6") {
    Modulus mod(0.73);
    double big = 1e6;
    double folded = big - 4.0 * mod.K() * std::round(big / (4.0 * mod.K()));
    JacobiValues a = mod.jacobi(big);
    JacobiValues b = mod.jacobi(folded);
    CHECK(std::abs(a.sn - b.sn) < 1e-9);
    CHECK(std::abs(a.cn - b.cn) < 1e-9);
    CHECK(std::abs(a.dn - b.dn) < 1e-9);
}

TEST_CASE("addition formulas close") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> um(0.05, 0.95);
    std::uniform_real_distribution<double> ux(-2.0, 2.0);
    for (int i = 0; i < 2000; ++i) {
        double m = um(rng);
        Modulus mod(m);
        double a = ux(rng) * mod.K(), b = ux(rng) * mod.K();
        JacobiValues va = mod.jacobi(a), vb = mod.jacobi(b);
        double den = 1.0 - m * va.sn * va.sn * vb.sn * vb.sn;
        if (den <= 1e-3) continue;
        JacobiValues vs = mod.jacobi(a + b);
        double sn = (va.sn * vb.cn * vb.dn + vb.sn * va.cn * va.dn) / den;
        double cn = (va.cn * vb.cn - va.sn * va.dn * vb.sn * vb.dn) / den;
        double dn = (va.dn * vb.dn - m * va.cn * vb.cn * va.sn * vb.sn) / den;
        CHECK(std::abs(vs.sn - sn) <= 1e-11 * std::max(1.0, std::abs(sn)));
        CHECK(std::abs(vs.cn - cn) <= 1e-11 * std::max(1.0, std::abs(cn)));
        CHECK(std::abs(vs.dn - dn) <= 1e-11 * std::max(1.0, std::abs(dn)));
        // zeta addition: Z(a+b) = Z(a) + Z(b) - m sn(a) sn(b) sn(a+b)
        double zres = mod.zeta(a + b) - mod.zeta(a) - mod.zeta(b) + m * va.sn * vb.sn * vs.sn;
        CHECK(std::abs(zres) <= 1e-11);
    }
}

TEST_CASE("derivatives by central difference") {
    std::mt19937_64 rng(123);
    std::uniform_real_distribution<double> um(0.05, 0.95);
    std::uniform_real_distribution<double> ux(-3.0, 3.0);
    const double h = 1e-6;
    for (int i = 0; i < 200; ++i) {
        double m = um(rng);
        Modulus mod(m);
        double x = ux(rng);
        JacobiValues v = mod.jacobi(x);
        double dsn = (mod.jacobi(x + h).sn - mod.jacobi(x - h).sn) / (2 * h);
        CHECK(std::abs(dsn - v.cn * v.dn) <= 1e-7 * std::max(1.0, std::abs(v.cn * v.dn)));
        double dZ = (mod.zeta(x + h) - mod.zeta(x - h)) / (2 * h);
        double want = v.dn * v.dn - mod.E_over_K();
        CHECK(std::abs(dZ - want) <= 1e-7 * std::max(1.0, std::abs(want)));
    }
}

TEST_CASE("zeta basic properties") {
    Modulus mod(0.5);
    CHECK(jacobi_zeta(0.0, 0.37) == 0.0);
    for (double x : {0.3, 1.1, 2.9}) {
        CHECK(std::abs(mod.zeta(-x) + mod.zeta(x)) < 1e-13);
        CHECK(std::abs(mod.zeta(x + 2 * mod.K()) - mod.zeta(x)) < 1e-11);
        CHECK(std::abs(jacobi_zeta(x, 0.0)) == 0.0);
    }
    CHECK(std::abs(mod.zeta(2 * mod.K())) < 1e-13);
    CHECK_THROWS_AS(jacobi_zeta(0.5, 1.0), std::domain_error);
}

TEST_CASE("amplitude and incomplete integrals") {
    for (const auto& r : kIncRefs) {
        IncompleteIntegrals v = incomplete_integrals(r.phi, r.n, r.m);
        CHECK(v.F == doctest::Approx(r.F).epsilon(1e-13));
        CHECK(v.E == doctest::Approx(r.E).epsilon(1e-13));
        CHECK(v.Pi == doctest::Approx(r.Pi).epsilon(1e-13));
    }
    IncompleteIntegrals z = incomplete_integrals(0.0, 0.3, 0.5);
    CHECK(z.F == 0.0);
    CHECK(z.E == 0.0);
    CHECK(z.Pi == 0.0);

    // F(am x, k) = x, and Pi(phi, 0, m) = F(phi, m)
    Modulus mod(0.62);
    for (double x = 0.1; x < mod.K(); x += 0.22) {
        CHECK(std::abs(mod.F(mod.am(x)) - x) < 1e-11);
        CHECK(std::abs(mod.Pi(1.1, 0.0) - mod.F(1.1)) < 1e-13);
    }
    // am(2K) = pi, so int_0^{2K} dn = pi
    CHECK(std::abs(mod.am(2 * mod.K()) - kPi) < 1e-12);
    // E(am x) = Z(x) + (E/K) x
    for (double x : {0.4, 1.3, 3.8}) {
        CHECK(std::abs(mod.E_inc(mod.am(x)) - (mod.zeta(x) + mod.E_over_K() * x)) < 1e-12);
    }
    CHECK_THROWS_AS(incomplete_integrals(1.55, 1.2, 0.5), std::domain_error);
}

TEST_CASE("carlson symmetric forms") {
    CHECK(carlson_rf(1, 2, 4) == doctest::Approx(0.68508581663343597).epsilon(1e-14));
    CHECK(carlson_rj(2, 3, 4, 5) == doctest::Approx(0.14297579667156754).epsilon(1e-14));
    CHECK(carlson_rd(1, 2, 4) == doctest::Approx(0.21838072549338965).epsilon(1e-14));
    CHECK(carlson_rc(2, 3) == doctest::Approx(0.61547970867038734).epsilon(1e-14));
}

TEST_CASE("complex evaluation against frozen references") {
    Modulus mod(0.6);
    for (const auto& r : kCplxRefs) {
        ComplexJacobi v = mod.jacobi_c({r.re, r.im});
        CHECK(std::abs(v.sn - complex(r.snr, r.sni)) < 1e-12);
        CHECK(std::abs(v.cn - complex(r.cnr, r.cni)) < 1e-12);
        CHECK(std::abs(v.dn - complex(r.dnr, r.dni)) < 1e-12);
    }
}

TEST_CASE("complex evaluation agrees with real path") {
    Modulus mod(0.44);
    for (double x : {-1.9, 0.35, 2.6}) {
        ComplexJacobi v = mod.jacobi_c({x, 0.0});
        JacobiValues w = mod.jacobi(x);
        CHECK(std::abs(v.sn - w.sn) < 1e-12);
        CHECK(std::abs(v.cn - w.cn) < 1e-12);
        CHECK(std::abs(v.dn - w.dn) < 1e-12);
    }
}

TEST_CASE("quasi-periods under 2iK'") {
    Modulus mod(0.57);
    complex two_ikp(0.0, 2.0 * mod.Kprime());
    for (complex z : {complex(0.7, 0.4), complex(1.9, -0.6), complex(0.2, 1.1)}) {
        complex s0 = mod.sn_c(z), c0 = mod.cn_c(z), d0 = mod.dn_c(z);
        complex s1 = mod.sn_c(z + two_ikp), c1 = mod.cn_c(z + two_ikp), d1 = mod.dn_c(z + two_ikp);
        CHECK(std::abs(s1 - s0) < 1e-10);
        CHECK(std::abs(c1 + c0) < 1e-10);
        CHECK(std::abs(d1 + d0) < 1e-10);
        // Z(z + 2iK') = Z(z) - i pi / K
        complex zz = mod.zeta_c(z + two_ikp) - mod.zeta_c(z) + complex(0.0, kPi / mod.K());
        CHECK(std::abs(zz) < 1e-10);
    }
    // Z on the real axis reduces to the real implementation
    CHECK(std::abs(mod.zeta_c({1.3, 0.0}) - mod.zeta(1.3)) < 1e-13);
}

TEST_CASE("poles and residues at iK'") {
    Modulus mod(0.5);
    complex ikp(0.0, mod.Kprime());
    CHECK_THROWS_AS(mod.jacobi_c(ikp + complex(1e-8, 0.0)), pole_proximity_error);
    for (double rho : {1e-3, 1e-4}) {
        complex z = ikp + complex(rho, rho);  // generic approach direction
        complex dn_res = (z - ikp) * mod.dn_c(z);
        CHECK(std::abs(dn_res - complex(0.0, -1.0)) < 20 * rho);
        complex sn_res = (z - ikp) * mod.sn_c(z);
        CHECK(std::abs(sn_res - 1.0 / std::sqrt(0.5)) < 20 * rho);
    }
}

TEST_CASE("aux values and their reciprocal pairs") {
    AuxValues a = aux_values(0.83, 0.31);
    JacobiValues v = jacobi_values(0.83, 0.31);
    CHECK(a.cs == doctest::Approx(v.cn / v.sn));
    CHECK(a.ds == doctest::Approx(v.dn / v.sn));
    CHECK(a.ns * v.sn == doctest::Approx(1.0));
    CHECK(a.cs * a.sc == doctest::Approx(1.0));
    CHECK(a.nc * v.cn == doctest::Approx(1.0));
    CHECK(a.dc == doctest::Approx(v.dn / v.cn));
}

TEST_CASE("basis derivatives match finite differences") {
    Modulus mod(0.66);
    const double h = 1e-5;
    for (int order = 1; order <= 6; ++order) {
        for (JacobiBasis b : {JacobiBasis::sn, JacobiBasis::cn, JacobiBasis::dn, JacobiBasis::dn2}) {
            double x = 0.9;
            double lo = jacobi_derivative(b, order - 1, x - h, mod);
            double hi = jacobi_derivative(b, order - 1, x + h, mod);
            double want = (hi - lo) / (2 * h);
            double got = jacobi_derivative(b, order, x, mod);
            CHECK(std::abs(got - want) <= 1e-6 * std::max(1.0, std::abs(want)));
        }
    }
    CHECK(jacobi_derivative(JacobiBasis::dn, 0, 0.9, mod) == doctest::Approx(mod.jacobi(0.9).dn));
}
