#ifndef ELLIDENT_TEXTFORM_HPP
#define ELLIDENT_TEXTFORM_HPP

#include <map>
#include <string>

#include "ellident/cyclic_types.hpp"
#include "ellident/identity.hpp"

// Compact text form for identities, close to ordinary mathematical
// notation so that each catalog entry stays a single readable line.
//
// Local identities:
//   atoms              sn[x], dn[x+a], cn[x-a'], Z[x+a''], powers with ^
//   coefficients       cs(a), ds(a-a'), ns(a''), Z(a), dn(a), m, m^2, 2, 1/3
//   shift symbols      a, a', a'' (aliases b, b' map to the same slots)
//   example            "dn[x]*dn[x+a] = dn(a) + cs(a)*(Z[x+a] - Z[x] - Z(a))"
//
// Cyclic identities use weighted sums S{...} over j = 1..p:
//   sum atoms          d, s, c, Z indexed j, j+r, j-r, j+s, j-s
//   scalars            p (the point count), cosw = cos(2*pi/s), sinw, i
//   example            "S{ d[j]^2*(d[j+r]+d[j-r]) } = 2*(ds(a)*ns(a)-cs(a)^2)*S{ d[j] }"
// The weight (uniform, alternating or omega) is a property of the entry,
// not of the text.

namespace ellident {

// den_text, when nonempty, supplies a denominator for the whole RHS.
Identity parse_local_identity(const std::string& id, const std::string& text,
                              const std::string& source, const std::string& den_text = "");

CyclicIdentity parse_cyclic_identity(const std::string& id, const std::string& text,
                                     const std::string& source, CyclicWeight weight,
                                     int period_in_K);

}  // namespace ellident

#endif
