#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ellident/textform.hpp"

using namespace ellident;

TEST_CASE("local identity parses into term lists") {
    Identity id = parse_local_identity(
        "t1", "dn[x]*dn[x+a] = dn(a) + cs(a)*(Z[x+a] - Z[x] - Z(a))", "test");
    CHECK(id.arity == 1);
    CHECK(id.rank == 2);
    CHECK(id.lhs.size() == 1);
    CHECK(id.lhs[0].atoms.size() == 2);
    CHECK(id.rhs.size() == 4);  // dn(a), cs Z[x+a], -cs Z[x], -cs Z(a)
    CHECK(id.period_in_K == 2);
    CHECK(id.lhs_homogeneous());

    Modulus mod(0.62);
    double a = 1.11, x = 0.37;
    double shifts[] = {a};
    double lhs = eval_side(id, Side::lhs, x, shifts, mod);
    CHECK(lhs == doctest::Approx(mod.jacobi(x).dn * mod.jacobi(x + a).dn));
    double rhs = eval_side(id, Side::rhs, x, shifts, mod);
    CHECK(std::abs(lhs - rhs) < 1e-13);
}

TEST_CASE("powers, fractions, m powers and unary minus") {
    Identity id = parse_local_identity("t2", "m^2*sn[x]^3*cn[x+a'] = -1/2*ds(a-a')^2*sn[x]", "t");
    CHECK(id.arity == 2);
    CHECK(id.rank == 4);
    CHECK(id.lhs[0].atoms[0].power == 3);
    Modulus mod(0.4);
    double shifts[] = {0.9, 0.3};
    double lhs = eval_side(id, Side::lhs, 0.7, shifts, mod);
    double want = 0.16 * std::pow(mod.jacobi(0.7).sn, 3) * mod.jacobi(0.7 + 0.3).cn;
    CHECK(lhs == doctest::Approx(want));
    JacobiValues d = mod.jacobi(0.6);
    double rhs = eval_side(id, Side::rhs, 0.7, shifts, mod);
    CHECK(rhs == doctest::Approx(-0.5 * (d.dn / d.sn) * (d.dn / d.sn) * mod.jacobi(0.7).sn));
}

TEST_CASE("period classification follows the sn cn parity rule") {
    Identity even = parse_local_identity("p1", "sn[x]*cn[x]*dn[x+a] = dn(a)*sn[x]*cn[x]", "t");
    CHECK(even.period_in_K == 2);
    Identity odd = parse_local_identity("p2", "dn[x]*sn[x+a] = ns(a)*cn[x] - cs(a)*cn[x+a]", "t");
    CHECK(odd.period_in_K == 4);
}

TEST_CASE("constraints derived from coefficient functions") {
    Identity id = parse_local_identity(
        "t3", "dn[x]*dn[x+a]*dn[x+a'] = -cs(a)*cs(a')*dn[x] - cs(a)*cs(a-a')*dn[x+a] + "
              "cs(a')*cs(a-a')*dn[x+a']",
        "t");
    CHECK(id.constraints.size() == 3);  // a, a', a-a'
    Modulus mod(0.5);
    double bad[] = {0.004, 1.2};
    CHECK_THROWS_AS(eval_side(id, Side::lhs, 0.3, bad, mod), constraint_error);
    double bad2[] = {1.2, 1.2004};
    CHECK_THROWS_AS(eval_side(id, Side::lhs, 0.3, bad2, mod), constraint_error);
    // nc-bearing coefficients exclude cn zeros instead
    Identity id2 = parse_local_identity("t4", "dn[x]*dn[x+a] = nc(a)*dn[x]*dn[x+a]*cn(a)", "t");
    double atk[] = {mod.K()};
    CHECK_THROWS_AS(eval_side(id2, Side::rhs, 0.3, atk, mod), constraint_error);
}

TEST_CASE("rational right-hand side") {
    Identity id = parse_local_identity("t5", "dn[x]*(dn[x+a] + dn[x-a]) = 2*dn(a)*(1 - m*sn[x]^2)",
                                       "t", "1 - m*sn(a)^2*sn[x]^2");
    CHECK(!id.rhs_den.empty());
    Modulus mod(0.77);
    double shifts[] = {0.66};
    CHECK(residual(id, 0.45, shifts, mod) < 1e-13);
}

TEST_CASE("cyclic identity text form") {
    CyclicIdentity cy = parse_cyclic_identity(
        "c1", "m*S{ c[j]*(s[j+r] - s[j-r]) } = 2*(ns(a) - ds(a))*S{ d[j] }", "t",
        CyclicWeight::uniform, 2);
    CHECK(cy.lhs.size() == 2);
    CHECK(cy.rhs.size() == 1);
    CHECK(cy.lhs[0].atoms.size() == 2);
    CHECK(cy.lhs[0].atoms[1].offs_r == 1);
    CHECK(cy.lhs[1].atoms[1].offs_r == -1);
    CHECK(!cy.uses_sp);

    CyclicIdentity cy2 = parse_cyclic_identity(
        "c2", "S{ d[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = 0", "t", CyclicWeight::uniform, 2);
    CHECK(cy2.uses_sp);
    CHECK(cy2.rhs.size() == 1);

    CyclicIdentity cy3 = parse_cyclic_identity(
        "c3", "S{ d[j]*d[j+r] } = p*(dn(a) - cs(a)*Z(a)) - (1 - cosw + i*sinw)*cs(a)*S{ Z[j] }",
        "t", CyclicWeight::omega, 2);
    CHECK(cy3.rhs.size() >= 3);
    bool has_p = false, has_imag = false;
    for (const auto& t : cy3.rhs) {
        if (t.is_p_const) has_p = true;
        if (t.ipow == 1) has_imag = true;
    }
    CHECK(has_p);
    CHECK(has_imag);
}

TEST_CASE("parse errors are reported") {
    CHECK_THROWS(parse_local_identity("bad1", "dn[x = 1", "t"));
    CHECK_THROWS(parse_local_identity("bad2", "qq(a)*dn[x] = 1", "t"));
    CHECK_THROWS(parse_local_identity("bad3", "dn[x]*dn[x+a] = i*dn(a)", "t"));
}
