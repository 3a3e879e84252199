#ifndef ELLIDENT_VERIFIER_HPP
#define ELLIDENT_VERIFIER_HPP

#include <random>

#include "ellident/catalog.hpp"
#include "ellident/report.hpp"

// Sampling-based statistical verification of catalog identities with
// reproducible seeds.  Verification tasks are independent; verify_all may
// fan them out over a worker pool and merges reports by id, so the output
// is byte-stable for a fixed (filter, domain, samples, tol, seed) tuple.

namespace ellident {

enum class ShiftStrategy { uniform_avoid, lattice_fraction };

struct SampleDomain {
    double m_lo = 0.05, m_hi = 0.95;
    double x_lo_in_K = 0.0, x_hi_in_K = 4.0;
    ShiftStrategy strategy = ShiftStrategy::uniform_avoid;
    double exclusion_radius_in_K = 0.02;
};

struct SampleAssignment {
    double x = 0;
    std::vector<double> shifts;
    double m = 0;
};

// Deterministic per-identity stream: hash(seed, id).
uint64_t task_seed(uint64_t seed, const std::string& id);

// Constraint-respecting assignment: shifts (and their pairwise differences)
// stay clear of all multiples of K by the exclusion radius.  Throws after
// 1e4 rejected draws.
SampleAssignment sample_assignment(const SampleDomain& domain, int arity, std::mt19937_64& rng);

inline constexpr double kDefaultTol = 1e-8;
inline constexpr int kDefaultSamples = 200;
inline constexpr int kWaiverRankParam = 8;   // families at n >= 8 ...
inline constexpr double kWaiverTol = 1e-6;   // ... are allowed this tolerance

VerificationReport verify_identity(const Identity& ident, const SampleDomain& domain, int samples,
                                   double tol, uint64_t seed, bool waiver = false,
                                   double exclusion_override_in_K = 0.0);

// id may be a fixed entry ("A.dd") or a family instance ("E.d26[3]").
VerificationReport verify_identity(const std::string& id, const SampleDomain& domain, int samples,
                                   double tol, uint64_t seed);

// All ids matching the prefix; family ids expand to n in {1, 2, 3, 5, 8}.
// Reports come back sorted by id regardless of execution order.
std::vector<VerificationReport> verify_all(const std::string& filter, const SampleDomain& domain,
                                           int samples, double tol, uint64_t seed,
                                           int parallelism = 1);

// Resolves "family[n]" instances as well as fixed ids.
Identity resolve_identity(const std::string& id);

}  // namespace ellident

#endif
