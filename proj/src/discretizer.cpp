#include "ellident/discretizer.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace ellident {

SchemeState step_exact(const SchemeState& s, const Modulus& mod) {
    JacobiValues v = mod.jacobi(s.delta);
    double cs = v.cn / v.sn, ds = v.dn / v.sn, ns = 1.0 / v.sn;
    double den = cs * cs + s.y_curr * s.y_curr;
    if (den < 1e-12) throw std::domain_error("step_exact: denominator underflow");
    SchemeState next = s;
    next.y_prev = s.y_curr;
    next.y_curr = 2.0 * ds * ns * s.y_curr / den - s.y_prev;
    next.n = s.n + 1;
    return next;
}

SchemeState step_naive(const SchemeState& s) {
    SchemeState next = s;
    next.y_prev = s.y_curr;
    double y = s.y_curr;
    next.y_curr =
        2.0 * y - s.y_prev + s.delta * s.delta * ((2.0 - s.m) * y - 2.0 * y * y * y);
    next.n = s.n + 1;
    return next;
}

TrajectoryReport run_trajectory(Scheme scheme, double m, double delta, long steps, double z0,
                                int decimate) {
    Modulus mod(m);
    if (std::abs(std::remainder(delta, 2.0 * mod.K())) < 1e-12)
        throw std::domain_error("trajectory: delta on the 2K lattice makes the scheme singular");
    TrajectoryReport rep;
    rep.scheme = scheme;
    rep.steps = steps;

    // Reference from the step count directly (the evaluator folds the
    // argument exactly), so the reference itself carries no cumulative drift.
    auto reference = [&](long i) { return mod.jacobi(z0 + static_cast<double>(i) * delta).dn; };

    SchemeState s;
    s.m = m;
    s.delta = delta;
    s.y_prev = mod.jacobi(z0).dn;
    s.y_curr = mod.jacobi(z0 + delta).dn;
    s.n = 1;

    rep.series.push_back({0, s.y_prev, reference(0), 0.0});
    for (long i = 1; i <= steps; ++i) {
        double ref = reference(i);
        double err = std::abs(s.y_curr - ref);
        rep.max_abs_error = std::max(rep.max_abs_error, err);
        if (i % decimate == 0 || i == steps)
            rep.series.push_back({s.n, s.y_curr, ref, err});
        if (i == steps) break;
        s = scheme == Scheme::exact ? step_exact(s, mod) : step_naive(s);
    }
    return rep;
}

void write_trajectory_csv(const TrajectoryReport& rep, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << "n,y,reference,abs_error\n";
    out.precision(17);
    for (const TrajectoryPoint& p : rep.series)
        out << p.n << ',' << p.y << ',' << p.reference << ',' << p.abs_error << '\n';
}

double continuum_order(const std::string& identity_id, const std::vector<double>& a_list,
                       double m, double z) {
    if (identity_id != "3.1")
        throw std::invalid_argument("continuum_order: only the rank-3 seed scheme is wired");
    if (a_list.size() < 2)
        throw std::invalid_argument("continuum_order: need at least two step sizes");
    Modulus mod(m);
    // defect of the naive difference form evaluated on exact samples
    auto defect = [&](double a) {
        JacobiValues v = mod.jacobi(z);
        double yp = mod.jacobi(z + a).dn, ym = mod.jacobi(z - a).dn, y = v.dn;
        double second = (yp + ym - 2.0 * y) / (a * a);
        return std::abs((2.0 - m) * y - second - y * y * (yp + ym));
    };
    // least-squares slope of log(defect) against log(a)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (double a : a_list) {
        double lx = std::log(a), ly = std::log(defect(a));
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    double n = static_cast<double>(a_list.size());
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

double coefficient_limit_gap(double a, double m) {
    Modulus mod(m);
    JacobiValues v = mod.jacobi(a);
    double cs = v.cn / v.sn, ds = v.dn / v.sn, ns = 1.0 / v.sn;
    return ds * ns - cs * cs - (1.0 - 0.5 * m);
}

double end_correction_defect(int p, double z0, double len, double m) {
    Modulus mod(m);
    double a = len / p;
    JacobiValues va = mod.jacobi(a);
    double cs2 = (va.cn / va.sn) * (va.cn / va.sn);
    double zp = z0 + len;
    // rewritten end terms of the chained sum
    double ends = -cs2 * a *
                  (mod.jacobi(zp).dn - mod.jacobi(zp - a).dn + mod.jacobi(z0).dn -
                   mod.jacobi(z0 + a).dn);
    JacobiValues ve = mod.jacobi(zp), vs = mod.jacobi(z0);
    double limit = m * ve.sn * ve.cn - m * vs.sn * vs.cn;
    return std::abs(ends - limit);
}

}  // namespace ellident
