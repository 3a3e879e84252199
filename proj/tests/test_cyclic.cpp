#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "ellident/cyclic.hpp"

using namespace ellident;

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

TEST_CASE("unweighted chain reproduces the nearest-neighbour closed form") {
    Modulus mod(0.5);
    CyclicSpec spec{3, 1, 1, 2, 0};
    CyclicCheckResult r = chain_weighted("A.dd", spec, 0.4, mod);
    CHECK(r.residual <= 1e-9);
    // sum d_j d_{j+1} = p [dn(a) - cs(a) Z(a)], a = 2K/p
    double a = 2.0 * mod.K() / 3;
    JacobiValues va = mod.jacobi(a);
    double closed = 3.0 * (va.dn - va.cn / va.sn * mod.zeta(a));
    CHECK(std::abs(r.lhs_sum.real() - closed) <= 1e-9);
    CHECK(std::abs(r.rhs_sum - r.lhs_sum) <= 1e-9);
}

TEST_CASE("weighted chain for p = 12, r = 5 across weight orders") {
    Modulus mod(0.5);
    for (int s : {1, 2, 3, 4, 6}) {
        INFO("s = " << s);
        CyclicSpec spec{12, 5, s, 2, 0};
        CyclicCheckResult r = chain_weighted("A.dd", spec, 0.4, mod);
        CHECK(r.residual <= 1e-9);
        // the encoded two-sided form agrees as well
        CyclicCheckResult w = verify_combination("W.2.10", spec, 0.4, mod);
        CHECK(w.residual <= 1e-9);
        CHECK(std::abs(w.lhs_sum - r.lhs_sum) <= 1e-9);
    }
    // delta term absent for s > 1: closed form is the pure weighted zeta sum
    CyclicSpec spec3{12, 5, 3, 2, 0};
    CyclicCheckResult r3 = chain_weighted("A.dd", spec3, 0.4, mod);
    double a = 5.0 * 2.0 * mod.K() / 12;
    std::complex<double> zsum = 0;
    for (int j = 0; j < 12; ++j) {
        double th = 2.0 * kPi * j / 3;
        zsum += std::complex<double>(std::cos(th), std::sin(th)) * mod.zeta(0.4 + j * a);
    }
    JacobiValues va = mod.jacobi(a);
    std::complex<double> omega_inv = {std::cos(2 * kPi / 3), -std::sin(2 * kPi / 3)};
    std::complex<double> closed = -(1.0 - omega_inv) * (va.cn / va.sn) * zsum;
    CHECK(std::abs(r3.lhs_sum - closed) <= 1e-9);
}

TEST_CASE("alternating case s = 2 at p = 4, r = 1") {
    Modulus mod(0.5);
    CyclicSpec spec{4, 1, 2, 2, 0};
    CyclicCheckResult r = chain_weighted("A.dd", spec, 0.7, mod);
    CHECK(r.residual <= 1e-9);
}

TEST_CASE("weight collapse, x-independence, conjugation, non-coprime spacing") {
    Modulus mod(0.62);
    // s = 1 equals the unweighted identity to the accuracy of both closed forms
    CyclicSpec s1{7, 2, 1, 2, 0};
    CyclicCheckResult u = chain_weighted("A.dd", s1, 0.9, mod);
    CHECK(std::abs(u.lhs_sum.imag()) < 1e-12);
    CHECK(u.residual <= 1e-12);

    // closed-form right side is x-independent for s = 1 nearest neighbours
    CyclicSpec s16{6, 1, 1, 2, 0};
    double first = chain_weighted("A.dd", s16, 0.1, mod).lhs_sum.real();
    for (int i = 0; i < 20; ++i) {
        double x = 0.1 + i * 0.37;
        CHECK(std::abs(chain_weighted("A.dd", s16, x, mod).lhs_sum.real() - first) <= 1e-9);
    }

    // conjugating the weight conjugates the sum
    CyclicSpec s3{12, 5, 3, 2, 0};
    CyclicCheckResult w = chain_weighted("A.dd", s3, 0.4, mod);
    double a = 5.0 * 2.0 * mod.K() / 12;
    std::complex<double> conj_sum = 0;
    for (int j = 0; j < 12; ++j) {
        double th = -2.0 * kPi * j / 3;
        double xj = 0.4 + j * a;
        conj_sum += std::complex<double>(std::cos(th), std::sin(th)) * mod.jacobi(xj).dn *
                    mod.jacobi(xj + a).dn;
    }
    CHECK(std::abs(conj_sum - std::conj(w.lhs_sum)) <= 1e-12);

    // gcd(r, p) > 1 still closes
    CyclicSpec s62{6, 2, 3, 2, 0};
    CHECK(chain_weighted("A.dd", s62, 0.3, mod).residual <= 1e-9);

    // other seeds chain too (rank 3 ladder)
    CyclicSpec s93{9, 2, 3, 2, 0};
    CHECK(chain_weighted("3.1", s93, 0.5, mod).residual <= 1e-9);
    CHECK(chain_weighted(instantiate_family("E.3.3", 3).realized, s93, 0.5, mod).residual <= 1e-9);

    CHECK_THROWS_AS(chain_weighted("A.dd", CyclicSpec{7, 2, 3, 2, 0}, 0.4, mod),
                    std::invalid_argument);  // p not divisible by s
    CHECK_THROWS_AS(chain_weighted("B.b20", s1, 0.4, mod), std::invalid_argument);  // arity 2
}

TEST_CASE("every encoded combination entry closes at generic parameters") {
    Modulus mod(0.6);
    for (const CyclicIdentity& e : CyclicCatalog::instance().all()) {
        INFO(e.id);
        CyclicSpec spec;
        spec.period_in_K = e.period_in_K;
        if (e.weight == CyclicWeight::alternating) {
            spec.p = 6;
            spec.r = 1;
        } else if (e.weight == CyclicWeight::omega) {
            spec.p = 12;
            spec.r = 5;
            spec.s = 3;
        } else {
            spec.p = 7;
            spec.r = 2;
        }
        spec.sp = e.uses_sp ? 3 : 0;
        CyclicCheckResult r = check_cyclic(e, spec, 0.37, mod);
        CHECK(r.residual <= 1e-9);
    }
}

TEST_CASE("documented combination checks") {
    {
        Modulus mod(0.6);
        CyclicSpec spec{7, 2, 1, 2, 3};
        CyclicCheckResult r = verify_combination("F.e5", spec, 0.3, mod);
        CHECK(std::abs(r.lhs_sum) <= 1e-10);
        CHECK(std::abs(r.rhs_sum) <= 1e-10);
        CHECK(r.residual <= 1e-10);
    }
    {
        Modulus mod(0.4);
        CyclicSpec spec{6, 1, 1, 2, 0};
        CHECK(verify_combination("F.e74", spec, 0.9, mod).residual <= 1e-9);
    }
    {
        Modulus mod(0.7);
        CyclicSpec spec{5, 2, 1, 2, 0};
        CHECK(verify_combination("F.e28", spec, 0.2, mod).residual <= 1e-9);
    }
    {
        Modulus mod(0.5);
        CyclicSpec bad{7, 2, 1, 4, 0};  // period class mismatch
        CHECK_THROWS_AS(verify_combination("F.e5", bad, 0.3, mod), std::invalid_argument);
        CyclicSpec oddp{5, 1, 1, 2, 0};  // alternating entries need even p
        CHECK_THROWS_AS(verify_combination("F.e74", oddp, 0.3, mod), std::invalid_argument);
        CHECK_THROWS_AS(verify_combination("F.nope", oddp, 0.3, mod), unknown_identity);
    }
}

TEST_CASE("product chains") {
    Modulus mod(0.5);
    CHECK(product_cyclic(5, 1, 5, 0.6, mod).residual <= 1e-9);
    Modulus mod3(0.3);
    CHECK(product_cyclic(7, 2, 3, 0.1, mod3).residual <= 1e-9);
    CHECK(product_cyclic(9, 2, 5, 0.8, mod).residual <= 1e-9);
    // m -> 0 limit of the full product at p = 3 degenerates to cot^2(pi/3) = 1/3
    Modulus tiny(1e-9);
    CHECK(product_cyclic(3, 1, 3, 0.6, tiny).residual <= 1e-7);
    TrigPair t = trig_product_full(3);
    CHECK(t.rhs == doctest::Approx(1.0 / 3).epsilon(1e-13));
    CHECK_THROWS_AS(product_cyclic(4, 1, 3, 0.1, mod), std::invalid_argument);
    CHECK_THROWS_AS(product_cyclic(9, 3, 3, 0.1, mod), std::invalid_argument);
}

TEST_CASE("trigonometric limits") {
    // cot-sum identity for p = 3..12
    for (int p = 3; p <= 12; ++p) {
        TrigPair t = trig_cot_sum(p);
        CHECK(std::abs(t.lhs - t.rhs) <= 1e-12);
    }
    CHECK(trig_cot_sum(4).rhs == doctest::Approx(2.0));
    // full products for odd p
    for (int p : {3, 5, 7, 9}) {
        TrigPair t = trig_product_full(p);
        CHECK(std::abs(t.lhs - t.rhs) <= 1e-13);
    }
    CHECK(std::abs(trig_product_full(5).rhs - 0.2) <= 1e-13);
    // l-fold chains
    TrigPair c1 = trig_product_chain(5, 1, 3);
    CHECK(std::abs(c1.lhs - c1.rhs) <= 1e-13);
    TrigPair c2 = trig_product_chain(7, 2, 3);
    CHECK(std::abs(c2.lhs - c2.rhs) <= 1e-13);
    // aggregate helper
    auto all = trig_limits(5);
    CHECK(all.size() == 3);
    for (const auto& [id, pair] : all) CHECK(std::abs(pair.lhs - pair.rhs) <= 1e-12);
}

TEST_CASE("interchange relations") {
    Modulus mod(0.45);
    GhSpec dn2 = parse_gh("dn2");
    GhSpec dn1 = parse_gh("dn");
    CHECK(interchange_check(dn2, dn1, +1, false, 5, 1, 0.3, mod) <= 1e-10);
    CHECK(interchange_check(dn2, dn1, -1, false, 5, 2, 0.3, mod) <= 1e-10);
    CHECK(interchange_check(dn2, dn1, +1, true, 6, 1, 0.3, mod) <= 1e-10);
    CHECK(interchange_check(dn2, dn1, -1, true, 6, 1, 0.9, mod) <= 1e-10);
    // 4K-periodic pair
    GhSpec sn1 = parse_gh("sn");
    GhSpec cn1 = parse_gh("cn");
    CHECK(interchange_check(sn1, cn1, +1, false, 7, 2, 0.4, mod) <= 1e-10);
    GhSpec sncn = parse_gh("sn*cn");
    CHECK(interchange_check(dn2, sncn, +1, false, 6, 1, 0.2, mod) <= 1e-10);
    // g = h is trivially symmetric in the plus case
    CHECK(interchange_check(dn1, dn1, +1, false, 8, 3, 0.6, mod) <= 1e-12);
    // class mismatch and alternating preconditions
    CHECK_THROWS_AS(interchange_check(dn1, sn1, +1, false, 5, 1, 0.3, mod),
                    std::invalid_argument);
    CHECK_THROWS_AS(interchange_check(dn2, dn1, +1, true, 5, 1, 0.3, mod), std::invalid_argument);
    CHECK_THROWS_AS(interchange_check(dn2, dn1, +1, true, 6, 2, 0.3, mod), std::invalid_argument);
    CHECK(parse_gh("dn^2*sn").factors.size() == 2);
    CHECK_THROWS_AS(parse_gh("qq"), std::invalid_argument);
}
