#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "ellident/discretizer.hpp"

using namespace ellident;

TEST_CASE("exact scheme reproduces dn(n delta)") {
    for (double m : {0.2, 0.5, 0.8, 0.95}) {
        for (double delta : {0.05, 0.1, 0.3}) {
            INFO("m = " << m << " delta = " << delta);
            TrajectoryReport rep = run_trajectory(Scheme::exact, m, delta, 10000);
            CHECK(rep.max_abs_error <= 1e-8);
        }
    }
}

TEST_CASE("exact scheme from a shifted start stays on the trajectory") {
    TrajectoryReport rep = run_trajectory(Scheme::exact, 0.7, 0.13, 5000, /*z0=*/0.83);
    CHECK(rep.max_abs_error <= 1e-8);
}

TEST_CASE("fixed point at m = 0") {
    Modulus mod(0.0);
    SchemeState s{1.0, 1.0, 0.1, 0.0, 1};
    for (int i = 0; i < 100; ++i) s = step_exact(s, mod);
    CHECK(s.y_curr == doctest::Approx(1.0).epsilon(1e-12));
    TrajectoryReport naive = run_trajectory(Scheme::naive, 0.0, 0.1, 1000);
    CHECK(naive.max_abs_error <= 0.1 * 0.1);  // stays within O(delta^2) of 1
}

TEST_CASE("naive scheme diverges at the documented horizon") {
    TrajectoryReport exact = run_trajectory(Scheme::exact, 0.8, 0.1, 10000);
    TrajectoryReport naive = run_trajectory(Scheme::naive, 0.8, 0.1, 10000);
    CHECK(naive.max_abs_error >= 1e-3);
    CHECK(naive.max_abs_error >= 1e3 * exact.max_abs_error);
}

TEST_CASE("naive scheme is second order: halving the step quarters the error") {
    double horizon = 40.0;
    TrajectoryReport coarse = run_trajectory(Scheme::naive, 0.5, 0.02, 2000);
    TrajectoryReport fine = run_trajectory(Scheme::naive, 0.5, 0.01, 4000);
    (void)horizon;
    double ratio = coarse.max_abs_error / fine.max_abs_error;
    CHECK(ratio > 2.5);
    CHECK(ratio < 6.0);
}

TEST_CASE("time reversal retraces the trajectory") {
    Modulus mod(0.6);
    double delta = 0.17;
    SchemeState s;
    s.m = 0.6;
    s.delta = delta;
    s.y_prev = mod.jacobi(0.0).dn;
    s.y_curr = mod.jacobi(delta).dn;
    for (int i = 0; i < 500; ++i) s = step_exact(s, mod);
    // swap and run backward
    SchemeState back;
    back.m = s.m;
    back.delta = delta;
    back.y_prev = s.y_curr;
    back.y_curr = s.y_prev;
    for (int i = 0; i < 500; ++i) back = step_exact(back, mod);
    CHECK(std::abs(back.y_curr - mod.jacobi(0.0).dn) <= 1e-8);
}

TEST_CASE("continuum order of the seed identity") {
    std::vector<double> as = {2e-3, 4e-3, 8e-3, 1.6e-2, 3.2e-2, 6.4e-2};
    double slope = continuum_order("3.1", as, 0.5);
    CHECK(slope == doctest::Approx(2.0).epsilon(0.05));
    CHECK_THROWS_AS(continuum_order("A.dd", as, 0.5), std::invalid_argument);
}

TEST_CASE("coefficient limit at small steps") {
    CHECK(std::abs(coefficient_limit_gap(1e-3, 0.5)) <= 1e-6);
    CHECK(std::abs(coefficient_limit_gap(1e-3, 0.9)) <= 1e-6);
}

TEST_CASE("end corrections converge like 1/p") {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int count = 0;
    for (int p : {16, 32, 64, 128, 256, 512}) {
        double d = end_correction_defect(p, 0.3, 1.7, 0.6);
        double lx = std::log(static_cast<double>(p)), ly = std::log(d);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
        ++count;
    }
    double slope = (count * sxy - sx * sy) / (count * sxx - sx * sx);
    CHECK(slope == doctest::Approx(-1.0).epsilon(0.15));
}

TEST_CASE("csv trajectory output") {
    TrajectoryReport rep = run_trajectory(Scheme::exact, 0.5, 0.1, 300, 0.0, 50);
    std::string path = "trajectory_test.csv";
    write_trajectory_csv(rep, path);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    CHECK(header == "n,y,reference,abs_error");
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == static_cast<int>(rep.series.size()));
    in.close();
    std::remove(path.c_str());
}
