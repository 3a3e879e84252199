#ifndef ELLIDENT_DISCRETIZER_HPP
#define ELLIDENT_DISCRETIZER_HPP

#include <string>
#include <vector>

#include "ellident/elliptic.hpp"

// The symmetric rank-3 identity read as a second-order recurrence: with
// coefficients frozen at the step size it reproduces dn(n delta) exactly,
// while the naive central-difference scheme for the limiting equation
// (2-m) y - y'' = 2 y^3 only approximates it.

namespace ellident {

enum class Scheme { exact, naive };

struct SchemeState {
    double y_prev = 1.0;
    double y_curr = 1.0;
    double delta = 0.1;
    double m = 0.5;
    long n = 1;  // index of y_curr
};

// y+ = 2 ds(d) ns(d) y / (cs^2(d) + y^2) - y-  (exact), or
// y+ = 2y - y- + d^2 [(2-m) y - 2 y^3]        (naive).
SchemeState step_exact(const SchemeState& s, const Modulus& mod);
SchemeState step_naive(const SchemeState& s);

struct TrajectoryPoint {
    long n;
    double y;
    double reference;
    double abs_error;
};

struct TrajectoryReport {
    Scheme scheme;
    long steps = 0;
    double max_abs_error = 0;
    std::vector<TrajectoryPoint> series;  // decimated
};

// Runs from y_0 = dn(z0), y_1 = dn(z0 + delta); the reference trajectory is
// dn(z0 + n delta) with per-step argument folding.
TrajectoryReport run_trajectory(Scheme scheme, double m, double delta, long steps,
                                double z0 = 0.0, int decimate = 100);

void write_trajectory_csv(const TrajectoryReport& rep, const std::string& path);

// Log-log slope of the defect of the naive scheme (against exact dn samples)
// as a function of the step size; second order gives slope 2.
double continuum_order(const std::string& identity_id, const std::vector<double>& a_list,
                       double m, double z = 0.9);

// a -> 0 limit of the combined coefficient ds(a) ns(a) - cs^2(a).
double coefficient_limit_gap(double a, double m);

// End-correction defect of the chained sum over [z0, z0 + len] with p points:
// |rewritten end terms - m (sn cn)| decays like 1/p.
double end_correction_defect(int p, double z0, double len, double m);

}  // namespace ellident

#endif
