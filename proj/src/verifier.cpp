#include "ellident/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace ellident {

uint64_t task_seed(uint64_t seed, const std::string& id) {
    uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (unsigned char c : id) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h ^ (seed * 0x9e3779b97f4a7c15ull);
}

namespace {

bool clear_of_K_lattice(double v, double K, double radius) {
    return std::abs(std::remainder(v, K)) >= radius;
}

}  // namespace

SampleAssignment sample_assignment(const SampleDomain& domain, int arity, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> um(domain.m_lo, domain.m_hi);
    SampleAssignment out;
    out.m = um(rng);
    Modulus mod(out.m);
    double K = mod.K();
    std::uniform_real_distribution<double> ux(domain.x_lo_in_K * K, domain.x_hi_in_K * K);
    out.x = ux(rng);
    double radius = domain.exclusion_radius_in_K * K;
    std::uniform_real_distribution<double> ua(0.0, 2.0 * K);
    std::uniform_int_distribution<int> up(3, 12);
    for (int tries = 0; tries < 10000; ++tries) {
        out.shifts.clear();
        if (domain.strategy == ShiftStrategy::lattice_fraction) {
            int p = up(rng);
            std::uniform_int_distribution<int> ur(1, p - 1);
            for (int i = 0; i < arity; ++i) out.shifts.push_back(ur(rng) * 2.0 * K / p);
        } else {
            for (int i = 0; i < arity; ++i) out.shifts.push_back(ua(rng));
        }
        bool ok = true;
        for (int i = 0; i < arity && ok; ++i) {
            if (!clear_of_K_lattice(out.shifts[i], K, radius)) ok = false;
            for (int j = 0; j < i && ok; ++j)
                if (!clear_of_K_lattice(out.shifts[i] - out.shifts[j], K, radius)) ok = false;
        }
        if (ok) return out;
    }
    throw std::runtime_error("sample_assignment: rejection sampling failed after 1e4 tries");
}

Identity resolve_identity(const std::string& id) {
    auto lb = id.find('[');
    if (lb != std::string::npos && id.back() == ']') {
        std::string fam = id.substr(0, lb);
        int n = std::stoi(id.substr(lb + 1, id.size() - lb - 2));
        return instantiate_family(fam, n).realized;
    }
    return Catalog::instance().at(id);
}

VerificationReport verify_identity(const Identity& ident, const SampleDomain& domain, int samples,
                                   double tol, uint64_t seed, bool waiver,
                                   double exclusion_override_in_K) {
    VerificationReport rep;
    rep.id = ident.id;
    rep.samples = samples;
    rep.seed = seed;
    rep.waiver = waiver;
    rep.tol = waiver ? std::max(tol, kWaiverTol) : tol;

    SampleDomain dom = domain;
    if (exclusion_override_in_K > 0.0)
        dom.exclusion_radius_in_K = std::max(dom.exclusion_radius_in_K, exclusion_override_in_K);

    std::mt19937_64 rng(task_seed(seed, ident.id));
    std::vector<double> residuals;
    residuals.reserve(samples);
    int aborts = 0;
    for (int s = 0; s < samples; ++s) {
        SampleAssignment asg = sample_assignment(dom, ident.arity, rng);
        Modulus mod(asg.m);
        double res;
        try {
            res = residual(ident, asg.x, asg.shifts, mod, dom.exclusion_radius_in_K);
        } catch (const constraint_error&) {
            ++aborts;  // generic sampler respects a stricter lattice, so this is rare
            continue;
        }
        residuals.push_back(res);
        if (res > rep.max_residual) rep.max_residual = res;
        if (res > rep.tol && rep.failures.size() < 16)
            rep.failures.push_back({asg.x, asg.shifts, asg.m, res});
    }
    if (!residuals.empty()) {
        std::vector<double> sorted = residuals;
        std::sort(sorted.begin(), sorted.end());
        size_t n = sorted.size();
        rep.median_residual =
            n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    }
    rep.pass = rep.failures.empty() && rep.max_residual <= rep.tol && aborts == 0 &&
               !residuals.empty();
    return rep;
}

namespace {

// Family instances: waiver plus rank-scaled exclusion for n >= kWaiverRankParam.
VerificationReport verify_family_instance(const std::string& fam, int n,
                                          const SampleDomain& domain, int samples, double tol,
                                          uint64_t seed) {
    Identity ident = instantiate_family(fam, n).realized;
    bool waiver = n >= kWaiverRankParam;
    double excl = 0.04 * n;
    return verify_identity(ident, domain, samples, tol, seed, waiver, excl);
}

}  // namespace

VerificationReport verify_identity(const std::string& id, const SampleDomain& domain, int samples,
                                   double tol, uint64_t seed) {
    auto lb = id.find('[');
    if (lb != std::string::npos && id.back() == ']') {
        std::string fam = id.substr(0, lb);
        int n = std::stoi(id.substr(lb + 1, id.size() - lb - 2));
        return verify_family_instance(fam, n, domain, samples, tol, seed);
    }
    return verify_identity(Catalog::instance().at(id), domain, samples, tol, seed);
}

std::vector<VerificationReport> verify_all(const std::string& filter, const SampleDomain& domain,
                                           int samples, double tol, uint64_t seed,
                                           int parallelism) {
    const Catalog& cat = Catalog::instance();
    std::vector<std::string> work;
    for (const std::string& id : cat.ids(filter)) {
        if (cat.is_family(id)) {
            for (int n : {1, 2, 3, 5, 8}) work.push_back(id + "[" + std::to_string(n) + "]");
        } else {
            work.push_back(id);
        }
    }
    std::vector<VerificationReport> reports(work.size());
    int workers = std::max(1, parallelism);
    if (workers == 1) {
        for (size_t i = 0; i < work.size(); ++i)
            reports[i] = verify_identity(work[i], domain, samples, tol, seed);
    } else {
        std::atomic<size_t> next{0};
        auto run = [&] {
            for (size_t i = next.fetch_add(1); i < work.size(); i = next.fetch_add(1))
                reports[i] = verify_identity(work[i], domain, samples, tol, seed);
        };
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(run);
        for (std::thread& t : pool) t.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const VerificationReport& a, const VerificationReport& b) { return a.id < b.id; });
    return reports;
}

}  // namespace ellident
