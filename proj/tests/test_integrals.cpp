#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellident/integrals.hpp"

using namespace ellident;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

std::vector<double> draw_shifts(int arity, const Modulus& mod, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(0.15, 1.85);
    for (;;) {
        std::vector<double> s;
        for (int i = 0; i < arity; ++i) s.push_back(u(rng) * mod.K());
        bool ok = true;
        for (size_t i = 0; i < s.size() && ok; ++i)
            for (size_t j = 0; j < i && ok; ++j)
                if (std::abs(std::remainder(s[i] - s[j], mod.K())) < 0.08 * mod.K()) ok = false;
        for (size_t i = 0; i < s.size() && ok; ++i)
            if (std::abs(std::remainder(s[i], mod.K())) < 0.08 * mod.K()) ok = false;
        if (ok) return s;
    }
}
}  // namespace

TEST_CASE("quadrature oracle basics") {
    Modulus mod(0.5);
    // mean of dn^2 over a period is E/K
    auto dn2 = [&](double t) {
        double d = mod.jacobi(t).dn;
        return d * d;
    };
    QuadratureResult r = quad_oracle(dn2, 0.0, 2.0 * mod.K(), 1e-12);
    CHECK(std::abs(r.value - 2.0 * mod.E()) < 1e-12);
    CHECK(r.error_estimate <= 1e-12 * std::max(1.0, std::abs(r.value)));
    CHECK(r.evaluations > 0);

    // int_0^{2K} dn = pi for any m (the amplitude advances by pi)
    for (double m : {0.2, 0.5, 0.9}) {
        Modulus mm(m);
        QuadratureResult q =
            quad_oracle([&](double t) { return mm.jacobi(t).dn; }, 0.0, 2.0 * mm.K(), 1e-12);
        CHECK(std::abs(q.value - kPi) < 1e-11);
        CHECK(std::abs(mm.am(2.0 * mm.K()) - kPi) < 1e-12);
    }

    CHECK(quad_oracle([](double) { return 1.0; }, 0.3, 0.3).value == 0.0);
    QuadratureResult rev = quad_oracle([](double t) { return t; }, 1.0, 0.0);
    CHECK(rev.value == doctest::Approx(-0.5));
}

TEST_CASE("power-integral recurrences against the oracle") {
    Modulus mod(0.65);
    double x = 1.37;
    for (int k = 1; k <= 7; ++k) {
        INFO("k = " << k);
        double dn = int_dn_pow(k, x, mod);
        double sn = int_sn_pow(k, x, mod);
        double cn = int_cn_pow(k, x, mod);
        auto fdn = [&](double t) { return std::pow(mod.jacobi(t).dn, k); };
        auto fsn = [&](double t) { return std::pow(mod.jacobi(t).sn, k); };
        auto fcn = [&](double t) { return std::pow(mod.jacobi(t).cn, k); };
        CHECK(std::abs(dn - quad_oracle(fdn, 0, x).value) < 1e-10);
        CHECK(std::abs(sn - quad_oracle(fsn, 0, x).value) < 1e-10);
        CHECK(std::abs(cn - quad_oracle(fcn, 0, x).value) < 1e-10);
    }
    CHECK(int_dn_pow(0, 0.7, mod) == 0.7);
    CHECK_THROWS_AS(int_dn_pow(-1, 0.7, mod), std::invalid_argument);
}

TEST_CASE("every definite formula matches quadrature over random draws") {
    std::mt19937_64 rng(4242);
    std::uniform_real_distribution<double> um(0.15, 0.85);
    for (const DefiniteFormula& f : definite_formulas()) {
        INFO(f.id);
        for (int trial = 0; trial < 4; ++trial) {
            Modulus mod(um(rng));
            std::vector<double> s = draw_shifts(f.arity, mod, rng);
            double closed = f.closed(mod, s);
            QuadratureResult q = quad_oracle(
                [&](double t) { return f.integrand(t, mod, s); }, 0.0, 2.0 * mod.K(), 1e-11);
            CHECK(std::abs(closed - q.value) <=
                  std::max(1e-9, 10.0 * q.error_estimate) * std::max(1.0, std::abs(closed)));
        }
    }
}

TEST_CASE("documented definite checks") {
    {
        // trigonometric degeneration: at tiny m the 4-dn product integrand is 1
        Modulus mod(1e-6);
        double s[] = {0.7, 1.5, 2.2};
        double v = definite_value("G.g1", mod, std::span<const double>(s, 1));
        CHECK(std::abs(v - kPi) < 1e-4);  // 2K -> pi as m -> 0
        double g7 = definite_value("G.g7", mod, s);
        CHECK(std::abs(g7 - 2.0 * mod.K()) < 1e-4);
    }
    {
        Modulus mod(0.5);
        double s[] = {0.9};
        double v = definite_value("5.2", mod, s);
        JacobiValues va = mod.jacobi(0.9);
        double cs = va.cn / va.sn, ds = va.dn / va.sn, ns = 1.0 / va.sn;
        double want = -4.0 * mod.E() * cs * cs +
                      2.0 * mod.K() * (cs * cs + ds * ds - 2.0 * cs * ds * ns * mod.zeta(0.9));
        CHECK(v == doctest::Approx(want));
        QuadratureResult q = quad_oracle(
            [&](double t) {
                double d0 = mod.jacobi(t).dn, d1 = mod.jacobi(t + 0.9).dn;
                return d0 * d0 * d1 * d1;
            },
            0.0, 2.0 * mod.K(), 1e-12);
        CHECK(std::abs(v - q.value) < 1e-10);
    }
    {
        Modulus mod(0.4);
        double s[] = {0.7, 1.5, 2.2};
        double v = definite_value("G.g7", mod, s);
        QuadratureResult q = quad_oracle(
            [&](double t) {
                return mod.jacobi(t).dn * mod.jacobi(t + 0.7).dn * mod.jacobi(t + 1.5).dn *
                       mod.jacobi(t + 2.2).dn;
            },
            0.0, 2.0 * mod.K(), 1e-11);
        CHECK(std::abs(v - q.value) < 1e-9);
    }
    CHECK_THROWS_AS(definite_value("G.g99", Modulus(0.5), {}), std::invalid_argument);
}

TEST_CASE("cyclic reduction of the four-dn integral") {
    // With shifts at period fractions, (1/2K) * integral equals the cyclic
    // mean (1/p) sum d_j d_{j+r} d_{j+s} d_{j+t}.
    Modulus mod(0.55);
    int p = 9, r = 2, sfrac = 4, t = 7;
    double step = 2.0 * mod.K() / p;
    double shifts[] = {r * step, sfrac * step, t * step};
    double closed = definite_value("5.6", mod, shifts) / (2.0 * mod.K());
    double x = 0.31;
    double acc = 0.0;
    for (int j = 0; j < p; ++j) {
        double xj = x + j * step;
        acc += mod.jacobi(xj).dn * mod.jacobi(xj + shifts[0]).dn * mod.jacobi(xj + shifts[1]).dn *
               mod.jacobi(xj + shifts[2]).dn;
    }
    CHECK(std::abs(closed - acc / p) < 1e-9);
}

TEST_CASE("shift symmetry of the four-dn closed form") {
    // The integral is invariant under the translation that maps the shift set
    // {0, a, a', a''} to {0, a'-a, a''-a, 2K-a} (cyclic rotation).
    Modulus mod(0.6);
    double a = 0.7, ap = 1.4, app = 2.3;
    double s1[] = {a, ap, app};
    double s2[] = {ap - a, app - a, 2.0 * mod.K() - a};
    CHECK(std::abs(definite_value("G.g7", mod, s1) - definite_value("G.g7", mod, s2)) < 1e-10);
}

TEST_CASE("indefinite integrals: normalization, derivative and cumulative checks") {
    Modulus mod(0.5);
    double a = 0.8;
    for (const IndefiniteEntry& e : indefinite_entries()) {
        INFO(e.id);
        CHECK(std::abs(e.value(1, 0.0, a, mod)) < 1e-12);  // I_n(0) = 0
        for (int n : {1, 2, 3}) {
            if (!e.recursive && n > 1) break;
            double x = 1.2;
            CHECK(derivative_check(e.id, n, x, a, mod) <= 1e-6);
            QuadratureResult q = quad_oracle(
                [&](double t) { return e.integrand(n, t, a, mod); }, 0.0, x, 1e-11);
            CHECK(std::abs(e.value(n, x, a, mod) - q.value) <=
                  1e-8 * std::max(1.0, std::abs(q.value)));
        }
    }
}

TEST_CASE("documented indefinite checks") {
    {
        Modulus mod(0.5);
        CHECK(std::abs(indefinite_eval("5.10", 1, 1.2, 0.8, mod) -
                       quad_oracle(
                           [&](double t) {
                               double d = mod.jacobi(t).dn;
                               return d * d * mod.jacobi(t + 0.8).dn;
                           },
                           0.0, 1.2, 1e-11)
                           .value) < 1e-9);
    }
    {
        Modulus mod(0.3);
        CHECK(derivative_check("H.h7", 2, 0.9, 1.0, mod) <= 1e-8);
        QuadratureResult q = quad_oracle(
            [&](double t) { return std::pow(mod.jacobi(t).dn, 5) * mod.jacobi(t + 1.0).dn; },
            0.0, 0.9, 1e-11);
        CHECK(std::abs(indefinite_eval("H.h7", 2, 0.9, 1.0, mod) - q.value) < 1e-8);
    }
    {
        Modulus mod(0.6);
        CHECK(derivative_check("5.11", 1, 0.5, 0.7, mod) <= 1e-6);
    }
    {
        Modulus mod(0.4);
        CHECK(derivative_check("H.h10", 1, 1.4, 1.1, mod) <= 1e-6);
    }
    {
        // the closed log form differentiates back to dn(x)[dn(x+a) - dn(x-a)]
        Modulus mod(0.5);
        CHECK(derivative_check("5.16", 1, 0.8, 0.9, mod) <= 1e-7);
    }
    CHECK_THROWS_AS(indefinite_eval("H.h1", 0, 0.5, 0.8, Modulus(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(indefinite_eval("H.h1", 13, 0.5, 0.8, Modulus(0.5)), std::invalid_argument);
    CHECK_THROWS_AS(indefinite_eval("nope", 1, 0.5, 0.8, Modulus(0.5)), std::invalid_argument);
}

TEST_CASE("recursions against quadrature for n = 1..6") {
    Modulus mod(0.45);
    for (const char* id : {"5.13", "5.19", "H.h1", "H.h2", "H.h3", "H.h4", "H.h5", "H.h6",
                           "H.h7", "H.h8", "H.h9", "H.h10"}) {
        INFO(id);
        const IndefiniteEntry& e = indefinite_entry(id);
        for (int n = 1; n <= 6; ++n) {
            for (auto [m, a, x] : {std::tuple{0.45, 0.8, 1.1}, std::tuple{0.7, 1.2, 0.6}}) {
                Modulus mm(m);
                QuadratureResult q = quad_oracle(
                    [&](double t) { return e.integrand(n, t, a, mm); }, 0.0, x, 1e-11);
                CHECK(std::abs(e.value(n, x, a, mm) - q.value) <=
                      1e-8 * std::max(1.0, std::abs(q.value)));
                CHECK(derivative_check(id, n, x, a, mm) <= 1e-6);
            }
        }
    }
}
