#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "ellident/catalog.hpp"

using namespace ellident;

TEST_CASE("family instantiation bounds and unknown ids") {
    CHECK_THROWS_AS(instantiate_family("E.3.3", 0), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family("E.3.3", 17), std::invalid_argument);
    CHECK_THROWS_AS(instantiate_family("E.zzz", 2), unknown_identity);
    FamilyInstance fi = instantiate_family("E.3.3", 4);
    CHECK(fi.n == 4);
    CHECK(fi.realized.id == "E.3.3[4]");
    CHECK(fi.realized.rank == 9);
    CHECK(fi.realized.lhs_homogeneous());
}

TEST_CASE("every family verifies numerically for n in {1,2,3,5,8}") {
    std::mt19937_64 rng(2718);
    std::uniform_real_distribution<double> um(0.25, 0.75);
    std::uniform_real_distribution<double> ua(0.25, 1.6);
    std::uniform_real_distribution<double> ux(0.0, 3.5);
    for (const std::string& fid : Catalog::instance().family_ids()) {
        for (int n : {1, 2, 3, 5, 8}) {
            INFO(fid << " n=" << n);
            Identity id = instantiate_family(fid, n).realized;
            CHECK(id.lhs_homogeneous());
            double tol = n >= 8 ? 1e-6 : 1e-8;
            // B^(n-1) = cs^(2n-2)(a) amplifies roundoff; keep the shift away
            // from the lattice in proportion to n, as the verifier does.
            double lo = std::max(0.15, 0.04 * n);
            std::uniform_real_distribution<double> uan(lo, 2.0 - lo);
            double worst = 0;
            for (int s = 0; s < 8; ++s) {
                Modulus mod(um(rng));
                double shifts[] = {uan(rng) * mod.K()};
                double x = ux(rng);
                try {
                    worst = std::max(worst, residual(id, x, shifts, mod));
                } catch (const constraint_error&) {
                    --s;  // redraw near an excluded lattice point
                }
            }
            CHECK(worst < tol);
        }
    }
}

TEST_CASE("documented family point checks") {
    {
        Modulus mod(0.6);
        double shifts[] = {0.9};
        Identity id = instantiate_family("E.d26", 3).realized;
        CHECK(residual(id, 0.4, shifts, mod) <= 1e-9);
    }
    {
        Modulus mod(0.3);
        double shifts[] = {0.5};
        Identity id = instantiate_family("E.d15", 2).realized;
        CHECK(residual(id, 1.1, shifts, mod) <= 1e-9);
    }
}

TEST_CASE("degenerate n = 1 instance of the symmetric ladder") {
    // The n = 1 instance collapses to the rank 3 symmetric seed identity,
    // term by term and numerically everywhere.
    const Identity& seed = Catalog::instance().at("3.1");
    Identity inst = instantiate_family("E.3.3", 1).realized;
    CHECK(inst.lhs.size() == seed.lhs.size());
    CHECK(inst.rhs.size() == seed.rhs.size());
    Modulus mod(0.5);
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0.2, 1.7);
    for (int i = 0; i < 50; ++i) {
        double shifts[] = {u(rng)};
        double x = u(rng);
        double a1 = eval_side(inst, Side::rhs, x, shifts, mod);
        double a2 = eval_side(seed, Side::rhs, x, shifts, mod);
        CHECK(std::abs(a1 - a2) < 1e-12 * std::max(1.0, std::abs(a2)));
    }
}

TEST_CASE("ladder agrees with repeated multiplication of the seed") {
    // O_1 = A dn + B (dn(x+a) + dn(x-a)); O_n = A dn^(2n-1) + B O_(n-1).
    Modulus mod(0.62);
    double a = 0.77, x = 1.21;
    JacobiValues va = mod.jacobi(a);
    double A = 2.0 * (va.dn / va.sn) * (1.0 / va.sn);
    double B = -(va.cn / va.sn) * (va.cn / va.sn);
    double dnx = mod.jacobi(x).dn;
    double sum_pm = mod.jacobi(x + a).dn + mod.jacobi(x - a).dn;
    double O = A * dnx + B * sum_pm;
    for (int n = 1; n <= 5; ++n) {
        if (n > 1) O = A * std::pow(dnx, 2 * n - 1) + B * O;
        Identity inst = instantiate_family("E.3.3", n).realized;
        double shifts[] = {a};
        double rhs = eval_side(inst, Side::rhs, x, shifts, mod);
        double lhs = eval_side(inst, Side::lhs, x, shifts, mod);
        CHECK(std::abs(rhs - O) <= 1e-9 * std::max(1.0, std::abs(O)));
        CHECK(std::abs(lhs - O) <= 1e-9 * std::max(1.0, std::abs(O)));
    }
}
