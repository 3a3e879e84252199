#ifndef ELLIDENT_CYCLIC_HPP
#define ELLIDENT_CYCLIC_HPP

#include "ellident/catalog.hpp"
#include "ellident/cyclic_types.hpp"

// Chained, weighted cyclic identities: p copies of a local identity at
// equally spaced points, optionally weighted by roots of unity
// omega = exp(2 i pi / s).  Sums are Kahan-compensated in index order.
//
// Weighted (omega) sums step x by a = r * period / p itself (the chain is
// built along the orbit of r-th neighbours); uniform and alternating sums
// step by period / p with bracket offsets of +-r (and +-s') lattice units.
// For uniform weights the two conventions produce the same sum; for
// alternating weights they agree because those entries require odd r.

namespace ellident {

// Evaluate one side of an encoded cyclic identity.
std::complex<double> eval_cyclic_side(const CyclicIdentity& ident, Side side,
                                      const CyclicSpec& spec, double x, const Modulus& mod);

CyclicCheckResult check_cyclic(const CyclicIdentity& ident, const CyclicSpec& spec, double x,
                               const Modulus& mod);

// The encoded weighted/combination entries (ids "F.e1".."F.e87",
// "W.2.10".."W.2.15").
class CyclicCatalog {
public:
    static const CyclicCatalog& instance();
    std::vector<std::string> ids(const std::string& prefix = "") const;
    const CyclicIdentity& at(const std::string& id) const;
    const std::vector<CyclicIdentity>& all() const { return entries_; }

private:
    CyclicCatalog();
    std::vector<CyclicIdentity> entries_;
};

CyclicCheckResult verify_combination(const std::string& id, const CyclicSpec& spec, double x,
                                   const Modulus& mod);

// Mechanical chaining of an arity-1 local identity: the weighted sum of the
// left side against the telescoped closed form of the right side.  Requires
// every right-side term to sit at a single shift offset.  gcd(r, p) > 1 is
// allowed (the chain still closes); coprimality only affects whether the
// orbit visits all p lattice points.
CyclicCheckResult chain_weighted(const Identity& local, const CyclicSpec& spec, double x,
                                 const Modulus& mod);
CyclicCheckResult chain_weighted(const std::string& local_id, const CyclicSpec& spec, double x,
                                 const Modulus& mod);

// Product identities: the l-fold product chain (l odd, l <= p, p odd) and
// the full-period product l = p.
CyclicCheckResult product_cyclic(int p, int r, int l, double x, const Modulus& mod);

// m -> 0 limits: exact trigonometric identities.
struct TrigPair {
    double lhs = 0, rhs = 0;
};
TrigPair trig_product_chain(int p, int r, int l);  // cot-product combination
TrigPair trig_product_full(int p);                 // 1/p = prod cot^2(n pi / p)
TrigPair trig_cot_sum(int p);                      // (p-1)(p-2)/3 = sum cot^2(j pi / p)
std::vector<std::pair<std::string, TrigPair>> trig_limits(int p);

// Interchange relations between ordinary and alternating sums of
//   sum_j g_j (h_{j+r} +- h_{j-r})  and  sum_j h_j (g_{j+r} +- g_{j-r}).
struct GhSpec {
    std::vector<std::pair<JFunc, int>> factors;  // Z-free products of sn, cn, dn
    bool two_K_periodic() const;
};
GhSpec parse_gh(const std::string& text);  // "dn", "dn2", "sn*cn", "dn^2*sn"
double interchange_check(const GhSpec& g, const GhSpec& h, int sign, bool alternating, int p,
                         int r, double x, const Modulus& mod);

}  // namespace ellident

#endif
