#include <algorithm>

#include "ellident/cyclic.hpp"
#include "ellident/textform.hpp"

// Encoded combination identities with uniform, alternating and omega
// weights.  Shift symbols: a = 2rK/p and a' = 2s'K/p in the 2K classes,
// b = 4rK/p and b' = 4s'K/p in the 4K classes.  Terms written with a bare
// factor p are the constants the weights sum to (they survive only for
// uniform weights, or omega weights at s = 1).

namespace ellident {

namespace {

struct CRow {
    const char* id;
    const char* text;
    int period_in_K;
    CyclicWeight weight;
};

constexpr CyclicWeight U = CyclicWeight::uniform;
constexpr CyclicWeight A = CyclicWeight::alternating;
constexpr CyclicWeight W = CyclicWeight::omega;

const CRow kRows[] = {
    // ---- class I combinations (2K spacing) --------------------------------
    {"F.e1", "m*S{ c[j]*(s[j+r] - s[j-r]) } = 2*(ns(a) - ds(a))*S{ d[j] }", 2, U},
    {"F.e2", "S{ d[j]^2*(d[j+r] - d[j-r]) } = -2*m*cs(a)*S{ c[j]*s[j] }", 2, U},
    {"F.ee2", "S{ c[j]*(c[j+r]*d[j+r] - c[j-r]*d[j-r]) } = 2*ds(a)*S{ c[j]*s[j] }", 2, U},
    {"F.ee3", "S{ s[j]*(s[j+r]*d[j+r] - s[j-r]*d[j-r]) } = -2*ns(a)*S{ c[j]*s[j] }", 2, U},
    {"F.e3", "S{ c[j]*(d[j+r]*c[j+s] - d[j-r]*c[j-s]) } = 0", 2, U},
    {"F.e4", "S{ s[j]*(d[j+r]*s[j+s] - d[j-r]*s[j-s]) } = 0", 2, U},
    {"F.e5", "S{ d[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = 0", 2, U},
    {"F.e6", "S{ d[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = 0", 2, U},
    {"F.e7", "S{ d[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = 0", 2, U},
    {"F.e8",
     "m*S{ d[j]^2*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "2*cs(a)*(ns(a)^2 + ds(a)^2 - 2*ns(a)*ds(a))*S{ d[j] }",
     2, U},
    {"F.e9",
     "m*S{ c[j]*d[j]*(d[j+r]*s[j+r] - d[j-r]*s[j-r]) } = "
     "-2*(ns(a)*(cs(a)^2 + ds(a)^2) - ds(a)*(cs(a)^2 + ns(a)^2))*S{ d[j] }",
     2, U},
    {"F.e10",
     "S{ d[j]^3*(d[j+r]^2 - d[j-r]^2) } = "
     "-2*m*cs(a)*(cs(a)^2 + 2*ds(a)*ns(a))*S{ c[j]*s[j] }",
     2, U},
    {"F.e11",
     "m*S{ c[j]*s[j]*d[j]*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "2*cs(a)*(ds(a)^2 + ns(a)^2 + ds(a)*ns(a))*S{ c[j]*s[j] }",
     2, U},
    {"F.e12",
     "m*S{ c[j]*s[j]*d[j]*(d[j+r] - d[j-r]) } = "
     "2*cs(a)*S{ d[j]^3 } - 2*cs(a)*(ds(a)^2 + 1 - ds(a)*ns(a))*S{ d[j] }",
     2, U},
    {"F.e13",
     "m*S{ c[j]*s[j]*d[j]*(d[j+r]^3 - d[j-r]^3) } = "
     "2*cs(a)*(ds(a)*ns(a) - cs(a)^2)*S{ d[j]^3 } "
     "+ 2*cs(a)*(2*cs(a)^2*ds(a)^2 + 2*ns(a)^2*(ds(a)^2 + cs(a)^2) - cs(a)^4 "
     "+ ds(a)^2*ns(a)^2 - 2*ds(a)*ns(a)*(ds(a)^2 + cs(a)^2 + ns(a)^2))*S{ d[j] }",
     2, U},
    {"F.e14",
     "m*S{ c[j]*d[j]*(d[j+r]*s[j+s] - d[j-r]*s[j-s]) } = "
     "2*(ns(a-a')*cs(a)*(ds(a) - ns(a)) - cs(a-a')*cs(a')*(ds(a') - ns(a')))*S{ d[j] }",
     2, U},
    {"F.e15",
     "m*S{ s[j]*d[j]*(d[j+r]*c[j+s] - d[j-r]*c[j-s]) } = "
     "-2*(ds(a-a')*cs(a)*(ds(a) - ns(a)) - cs(a-a')*cs(a')*(ds(a') - ns(a')))*S{ d[j] }",
     2, U},
    {"F.e16",
     "m*S{ c[j]*s[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = "
     "2*cs(a-a')*(ns(a)*(ds(a) - ns(a)) - ns(a')*(ds(a') - ns(a')))*S{ d[j] }",
     2, U},
    {"F.e17",
     "m^2*S{ c[j]*s[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = "
     "-2*ns(a-a')*(ns(a)*(ds(a) - ns(a)) - ns(a')*(ds(a') - ns(a')))*S{ d[j] }",
     2, U},
    {"F.e18",
     "m^2*S{ c[j]*s[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = "
     "2*ds(a-a')*(ns(a)*(ds(a) - ns(a)) - ns(a')*(ds(a') - ns(a')))*S{ d[j] }",
     2, U},
    {"F.e10a",
     "S{ d[j]^4*(d[j+r] - d[j-r]) } = "
     "-2*m*cs(a)*S{ c[j]*s[j]*d[j]^2 } + 2*m*cs(a)^3*S{ c[j]*s[j] }",
     2, U},
    {"F.e10b",
     "m^2*S{ c[j]^3*(s[j+r] - s[j-r]) } = "
     "2*ns(a)*S{ d[j]^3 } - 2*(ns(a)*(2*ds(a)^2 - cs(a)^2) - ds(a)^3)*S{ d[j] }",
     2, U},
    {"F.e10c",
     "m^2*S{ s[j]^3*(c[j+r] - c[j-r]) } = "
     "-2*ds(a)*S{ d[j]^3 } + 2*(ds(a)*(ns(a)^2 + 1) - ns(a)^3)*S{ d[j] }",
     2, U},

    // ---- class II combinations (2K spacing, explicit constants) ------------
    {"F.e19",
     "m*S{ s[j]*d[j]*(c[j+r] - c[j-r]) } = "
     "2*ds(a)*S{ d[j]^2 } - 2*p*ns(a)*(dn(a) - cs(a)*Z(a))",
     2, U},
    {"F.e20",
     "m*S{ c[j]*d[j]*(s[j+r] - s[j-r]) } = "
     "2*ns(a)*S{ d[j]^2 } - 2*p*ds(a)*(dn(a) - cs(a)*Z(a))",
     2, U},
    {"F.e21",
     "m*S{ s[j]*c[j]*(d[j+r] - d[j-r]) } = "
     "2*cs(a)*S{ d[j]^2 } - 2*p*(cs(a) - ds(a)*ns(a)*Z(a))",
     2, U},
    {"F.e22",
     "m*S{ d[j]*(s[j+r]*c[j+s] - s[j-r]*c[j-s]) } = "
     "-2*p*ds(a-a')*(dn(a) - cs(a)*Z(a)) + 2*p*ns(a-a')*(dn(a') - cs(a')*Z(a'))",
     2, U},
    {"F.e23",
     "m*S{ c[j]*(d[j+r]*s[j+s] - d[j-r]*s[j-s]) } = "
     "2*p*ns(a')*(dn(a) - cs(a)*Z(a)) - 2*p*ds(a')*(dn(a'-a) - cs(a'-a)*Z(a'-a))",
     2, U},
    {"F.e24",
     "m*S{ s[j]*(d[j+r]*c[j+s] - d[j-r]*c[j-s]) } = "
     "2*p*ds(a')*(dn(a) - cs(a)*Z(a)) - 2*p*ns(a')*(dn(a'-a) - cs(a'-a)*Z(a'-a))",
     2, U},
    {"F.e25", "S{ d[j]^3*(d[j+r] - d[j-r]) } = -2*m*cs(a)*S{ d[j]*s[j]*c[j] }", 2, U},
    {"F.e26", "m*S{ s[j]^3*(s[j+r] - s[j-r]) } = -2*ns(a)*S{ d[j]*s[j]*c[j] }", 2, U},
    {"F.e27", "m*S{ c[j]^3*(c[j+r] - c[j-r]) } = -2*ds(a)*S{ d[j]*s[j]*c[j] }", 2, U},
    {"F.e28",
     "m*S{ d[j]^2*(d[j+r]*s[j+r]*c[j+r] - d[j-r]*s[j-r]*c[j-r]) } = "
     "-6*cs(a)*ds(a)*ns(a)*S{ d[j]^2 } + 2*p*cs(a)*ds(a)*ns(a)*(dn(a)^2 + 2) "
     "- 2*p*(ns(a)^2*(cs(a)^2 + ds(a)^2) + cs(a)^2*ds(a)^2)*Z(a)",
     2, U},
    {"F.e29",
     "m*S{ s[j]*c[j]*(d[j+r]^3 - d[j-r]^3) } = "
     "-2*cs(a)*(ds(a)^2 + ns(a)^2 + cs(a)^2)*S{ d[j]^2 } "
     "- 2*p*cs(a)*(1 - m - 3*ds(a)^2 + 3*cs(a)*ds(a)*ns(a)*Z(a))",
     2, U},
    {"F.e30",
     "m^2*S{ d[j]*c[j]*(s[j+r]^3 - s[j-r]^3) } = "
     "2*ns(a)*(ds(a)^2 + ns(a)^2 + cs(a)^2)*S{ d[j]^2 } "
     "+ 2*p*ns(a)*(1 - m - 3*ds(a)^2 + 3*cs(a)*ds(a)*ns(a)*Z(a))",
     2, U},
    {"F.e31",
     "m^2*S{ d[j]*s[j]*(c[j+r]^3 - c[j-r]^3) } = "
     "-2*ds(a)*(ds(a)^2 + ns(a)^2 + cs(a)^2)*S{ d[j]^2 } "
     "- 2*p*ds(a)*(1 - m - 3*ds(a)^2 + 3*cs(a)*ds(a)*ns(a)*Z(a))",
     2, U},

    // ---- class III combinations (4K spacing) --------------------------------
    {"F.e32", "S{ d[j]*(c[j+r] - c[j-r]) } = 2*(cs(b) - ds(b))*S{ s[j] }", 4, U},
    {"F.e33", "m*S{ s[j]^2*(s[j+r] - s[j-r]) } = -2*ns(b)*S{ c[j]*d[j] }", 4, U},
    {"F.e34", "S{ c[j]*(s[j+r]*c[j+s] - s[j-r]*c[j-s]) } = 0", 4, U},
    {"F.e35", "S{ d[j]*(d[j+r]*s[j+s] - d[j-r]*s[j-s]) } = 0", 4, U},
    {"F.e36", "S{ s[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = 0", 4, U},
    {"F.e37", "S{ s[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = 0", 4, U},
    {"F.e38", "S{ s[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = 0", 4, U},
    {"F.e39",
     "S{ d[j]^2*(c[j+r]*d[j+r] - c[j-r]*d[j-r]) } = "
     "-2*ns(b)*(cs(b)^2 + ds(b)^2 - 2*cs(b)*ds(b))*S{ s[j] }",
     4, U},
    {"F.e40",
     "m*S{ s[j]*d[j]*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "-2*(ds(b)*(cs(b)^2 + ns(b)^2) - cs(b)*(ds(b)^2 + ns(b)^2))*S{ s[j] }",
     4, U},
    {"F.e41",
     "m^2*S{ s[j]^3*(s[j+r]^2 - s[j-r]^2) } = "
     "2*ns(b)*(ns(b)^2 + 2*ds(b)*cs(b))*S{ c[j]*d[j] }",
     4, U},
    {"F.e42",
     "m*S{ c[j]*s[j]*d[j]*(c[j+r]*d[j+r] - c[j-r]*d[j-r]) } = "
     "2*ns(b)*(ds(b)^2 + cs(b)^2 + ds(b)*cs(b))*S{ c[j]*d[j] }",
     4, U},
    {"F.e43",
     "m*S{ c[j]*s[j]*d[j]*(s[j+r] - s[j-r]) } = "
     "-2*m*ns(b)*S{ s[j]^3 } + 2*ns(b)*(1 - ds(b)^2 + cs(b)*ds(b))*S{ s[j] }",
     4, U},
    {"F.e44",
     "m^2*S{ c[j]*s[j]*d[j]*(s[j+r]^3 - s[j-r]^3) } = "
     "2*m*ns(b)*(ds(b)*cs(b) - ns(b)^2)*S{ s[j]^3 } "
     "- 2*ns(b)*(3*cs(b)^2*ds(b)^2 + ns(b)^2*(2*ds(b)^2 + cs(b)^2 - 1) "
     "- 2*ds(b)*cs(b)*(ds(b)^2 + cs(b)^2 + ns(b)^2))*S{ s[j] }",
     4, U},
    {"F.e45",
     "m*S{ c[j]*s[j]*(d[j+r]*s[j+s] - d[j-r]*s[j-s]) } = "
     "2*(ns(b-b')*ns(b)*(ds(b) - cs(b)) - cs(b-b')*ns(b')*(ds(b') - cs(b')))*S{ s[j] }",
     4, U},
    {"F.e46",
     "m*S{ s[j]*d[j]*(s[j+r]*c[j+s] - s[j-r]*c[j-s]) } = "
     "-2*(ds(b-b')*ns(b)*(ds(b) - cs(b)) - ns(b-b')*ns(b')*(ds(b') - cs(b')))*S{ s[j] }",
     4, U},
    {"F.e47",
     "S{ c[j]*d[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = "
     "-2*cs(b-b')*(cs(b)*(ds(b) - cs(b)) - cs(b')*(ds(b') - cs(b')))*S{ s[j] }",
     4, U},
    {"F.e48",
     "m*S{ c[j]*d[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = "
     "-2*ns(b-b')*(ds(b)*(ds(b) - cs(b)) - ds(b')*(ds(b') - cs(b')))*S{ s[j] }",
     4, U},
    {"F.e49",
     "m*S{ c[j]*d[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = "
     "2*ds(b-b')*(ds(b)*(ds(b) - cs(b)) - ds(b')*(ds(b') - cs(b')))*S{ s[j] }",
     4, U},
    {"F.e41a",
     "m^2*S{ s[j]^4*(s[j+r] - s[j-r]) } = "
     "2*ns(b)*S{ c[j]*d[j]^3 } - 2*ns(b)*(ns(b)^2 + 1)*S{ c[j]*d[j] }",
     4, U},
    {"F.e41b",
     "S{ d[j]^3*(c[j+r] - c[j-r]) } = "
     "2*m*ds(b)*S{ s[j]^3 } - 2*(cs(b)^3 - ds(b)*(ns(b)^2 - 2))*S{ s[j] }",
     4, U},
    {"F.e41c",
     "m*S{ c[j]^3*(d[j+r] - d[j-r]) } = "
     "2*m*cs(b)*S{ s[j]^3 } - 2*(ds(b)^3 + cs(b)^3 - cs(b)*(2*ds(b)^2 - 1))*S{ s[j] }",
     4, U},

    // ---- class IV combinations (4K spacing) ---------------------------------
    {"F.e50", "S{ d[j]*(s[j+r] - s[j-r]) } = 2*(ns(b) - cs(b))*S{ c[j] }", 4, U},
    {"F.e51", "m*S{ c[j]^2*(c[j+r] - c[j-r]) } = -2*ds(b)*S{ s[j]*d[j] }", 4, U},
    {"F.e52", "S{ s[j]*(s[j+r]*c[j+s] - s[j-r]*c[j-s]) } = 0", 4, U},
    {"F.e53", "S{ d[j]*(d[j+r]*c[j+s] - d[j-r]*c[j-s]) } = 0", 4, U},
    {"F.e54", "S{ c[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = 0", 4, U},
    {"F.e55", "S{ c[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = 0", 4, U},
    {"F.e56", "S{ c[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = 0", 4, U},
    {"F.e57",
     "S{ d[j]^2*(s[j+r]*d[j+r] - s[j-r]*d[j-r]) } = "
     "2*ds(b)*(cs(b)^2 + ns(b)^2 - 2*cs(b)*ns(b))*S{ c[j] }",
     4, U},
    {"F.e58",
     "m*S{ c[j]*d[j]*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "2*(cs(b)*(ds(b)^2 + ns(b)^2) - ns(b)*(ds(b)^2 + cs(b)^2))*S{ c[j] }",
     4, U},
    {"F.e59",
     "m^2*S{ c[j]^3*(c[j+r]^2 - c[j-r]^2) } = "
     "-2*ds(b)*(ds(b)^2 + 2*ns(b)*cs(b))*S{ s[j]*d[j] }",
     4, U},
    {"F.e60",
     "m*S{ c[j]*s[j]*d[j]*(s[j+r]*d[j+r] - s[j-r]*d[j-r]) } = "
     "2*ds(b)*(ns(b)^2 + cs(b)^2 + ns(b)*cs(b))*S{ s[j]*d[j] }",
     4, U},
    {"F.e61",
     "m*S{ c[j]*s[j]*d[j]*(c[j+r] - c[j-r]) } = "
     "2*m*ds(b)*S{ c[j]^3 } - 2*ds(b)*(cs(b)^2 + m - cs(b)*ns(b))*S{ c[j] }",
     4, U},
    {"F.e62",
     "m^2*S{ c[j]*s[j]*d[j]*(c[j+r]^3 - c[j-r]^3) } = "
     "2*m*ds(b)*(ns(b)*cs(b) - ds(b)^2)*S{ c[j]^3 } "
     "- 2*ds(b)*(2*cs(b)*ns(b)*(ds(b)^2 + cs(b)^2 + ns(b)^2) "
     "- ((2*ds(b)^2 + 3*cs(b)^2)*ns(b)^2 + ds(b)^2*(2*cs(b)^2 - ds(b)^2)))*S{ c[j] }",
     4, U},
    {"F.e63",
     "m*S{ c[j]*s[j]*(d[j+r]*c[j+s] - d[j-r]*c[j-s]) } = "
     "2*(ds(b-b')*ds(b)*(ns(b) - cs(b)) - cs(b-b')*ds(b')*(ns(b') - cs(b')))*S{ c[j] }",
     4, U},
    {"F.e64",
     "m*S{ c[j]*d[j]*(s[j+r]*c[j+s] - s[j-r]*c[j-s]) } = "
     "-2*(ds(b-b')*ds(b)*(ns(b) - cs(b)) - ns(b-b')*ds(b')*(ns(b') - cs(b')))*S{ c[j] }",
     4, U},
    {"F.e65",
     "S{ d[j]*s[j]*(d[j+r]*d[j+s] - d[j-r]*d[j-s]) } = "
     "2*cs(b-b')*(cs(b)*(ns(b) - cs(b)) - cs(b')*(ns(b') - cs(b')))*S{ c[j] }",
     4, U},
    {"F.e66",
     "m*S{ d[j]*s[j]*(s[j+r]*s[j+s] - s[j-r]*s[j-s]) } = "
     "2*ns(b-b')*(ns(b)*(ns(b) - cs(b)) - ns(b')*(ns(b') - cs(b')))*S{ c[j] }",
     4, U},
    {"F.e67",
     "m*S{ d[j]*s[j]*(c[j+r]*c[j+s] - c[j-r]*c[j-s]) } = "
     "-2*ds(b-b')*(ns(b)*(ns(b) - cs(b)) - ns(b')*(ns(b') - cs(b')))*S{ c[j] }",
     4, U},
    {"F.e68a",
     "m^2*S{ c[j]^4*(c[j+r] - c[j-r]) } = "
     "-2*ds(b)*S{ s[j]*d[j]^3 } + 2*ds(b)*(2*ds(b)^2 - cs(b)^2)*S{ s[j]*d[j] }",
     4, U},
    {"F.e68b",
     "S{ d[j]^3*(s[j+r] - s[j-r]) } = "
     "2*m*ns(b)*S{ c[j]^3 } + 2*(cs(b)^3 + ns(b)*(ds(b)^2 - 2*cs(b)^2))*S{ c[j] }",
     4, U},
    {"F.e68c",
     "m*S{ s[j]^3*(d[j+r] - d[j-r]) } = "
     "-2*m*cs(b)*S{ c[j]^3 } - 2*(ns(b)^3 - cs(b)*(ns(b)^2 + m))*S{ c[j] }",
     4, U},

    // ---- class I with alternating signs (even p, odd r) ---------------------
    {"F.e70a", "m*S{ s[j]*(c[j+r] - c[j-r]) } = 2*(ds(a) + ns(a))*S{ d[j] }", 2, A},
    {"F.e69", "S{ d[j]^2*(d[j+r] - d[j-r]) } = -2*m*cs(a)*S{ c[j]*s[j] }", 2, A},
    {"F.e70", "S{ c[j]*d[j]*(c[j+r] - c[j-r]) } = -2*ds(a)*S{ c[j]*s[j] }", 2, A},
    {"F.e71", "S{ s[j]*d[j]*(s[j+r] - s[j-r]) } = 2*ns(a)*S{ c[j]*s[j] }", 2, A},
    {"F.e72",
     "m*S{ d[j]^2*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "2*cs(a)*(ds(a)^2 + ns(a)^2 + 2*ds(a)*ns(a))*S{ d[j] }",
     2, A},
    {"F.e73",
     "m*S{ s[j]*d[j]*(c[j+r]*d[j+r] - c[j-r]*d[j-r]) } = "
     "2*(ns(a)*(cs(a)^2 + ds(a)^2) + ds(a)*(cs(a)^2 + ns(a)^2))*S{ d[j] }",
     2, A},

    // ---- class II with alternating signs ------------------------------------
    {"F.e74", "m*S{ c[j]*s[j]*(d[j+r] - d[j-r]) } = 2*cs(a)*S{ d[j]^2 }", 2, A},
    {"F.e75", "m*S{ d[j]*s[j]*(c[j+r] - c[j-r]) } = 2*ds(a)*S{ d[j]^2 }", 2, A},
    {"F.e76", "m*S{ c[j]*d[j]*(s[j+r] - s[j-r]) } = 2*ns(a)*S{ d[j]^2 }", 2, A},
    {"F.e77",
     "m*S{ c[j]*s[j]*(d[j+r]^3 - d[j-r]^3) } = 2*cs(a)*(ds(a)^2 + 1)*S{ d[j]^2 }", 2, A},
    {"F.e78",
     "m^2*S{ d[j]*s[j]*(c[j+r]^3 - c[j-r]^3) } = 2*ds(a)*(cs(a)^2 + m)*S{ d[j]^2 }", 2, A},
    {"F.e79",
     "m^2*S{ c[j]*d[j]*(s[j+r]^3 - s[j-r]^3) } = 2*ns(a)*(1 - ds(a)^2)*S{ d[j]^2 }", 2, A},
    {"F.e80",
     "S{ d[j]^3*(d[j+r] - d[j-r]) } = "
     "-2*m*cs(a)*S{ d[j]*s[j]*c[j] } + 4*cs(a)^3*S{ Z[j] }",
     2, A},
    {"F.e81",
     "m^2*S{ s[j]^3*(s[j+r] - s[j-r]) } = "
     "-2*m*ns(a)*S{ d[j]*s[j]*c[j] } + 4*ns(a)^3*S{ Z[j] }",
     2, A},
    {"F.e82",
     "m^2*S{ c[j]^3*(c[j+r] - c[j-r]) } = "
     "-2*m*ds(a)*S{ d[j]*s[j]*c[j] } + 4*ds(a)^3*S{ Z[j] }",
     2, A},
    {"F.e83",
     "S{ d[j]^3*(d[j+r]^3 - d[j-r]^3) } = "
     "4*m*cs(a)^3*S{ d[j]*s[j]*c[j] } "
     "- 4*cs(a)*(ns(a)^2*(cs(a)^2 + 3*ds(a)^2) + cs(a)^2*(cs(a)^2 + ds(a)^2))*S{ Z[j] }",
     2, A},
    {"F.e84",
     "m^3*S{ s[j]^3*(s[j+r]^3 - s[j-r]^3) } = "
     "-4*m*ns(a)^3*S{ d[j]*s[j]*c[j] } "
     "+ 4*ns(a)*(ns(a)^2*(cs(a)^2 + ds(a)^2 + ns(a)^2) + 3*cs(a)^2*ds(a)^2)*S{ Z[j] }",
     2, A},
    {"F.e85",
     "m^3*S{ c[j]^3*(c[j+r]^3 - c[j-r]^3) } = "
     "4*m*ds(a)^3*S{ d[j]*s[j]*c[j] } "
     "- 4*ds(a)*(ns(a)^2*(3*cs(a)^2 + ds(a)^2) + ds(a)^2*(cs(a)^2 + ds(a)^2))*S{ Z[j] }",
     2, A},
    {"F.e86",
     "m^2*S{ d[j]*s[j]*c[j]*(d[j+r]*s[j+r]*c[j+r] - d[j-r]*s[j-r]*c[j-r]) } = "
     "-4*m*ds(a)*cs(a)*ns(a)*S{ d[j]*s[j]*c[j] } "
     "+ 8*ds(a)*cs(a)*ns(a)*(ns(a)^2 + cs(a)^2 + ds(a)^2)*S{ Z[j] }",
     2, A},
    {"F.e87",
     "m^2*S{ d[j]*s[j]^2*c[j]*(s[j+r] - s[j-r]) } = "
     "-2*ns(a)*S{ d[j]^4 } + 2*ns(a)*(ds(a)^2 + 1)*S{ d[j]^2 }",
     2, A},

    // ---- omega-weighted entries from the main development -------------------
    {"W.2.10",
     "S{ d[j]*d[j+r] } = p*(dn(a) - cs(a)*Z(a)) - (1 - cosw + i*sinw)*cs(a)*S{ Z[j] }", 2, W},
    {"W.2.12",
     "m*S{ c[j]*(s[j+r] - s[j-r]) } = 2*(ns(a) - cosw*ds(a))*S{ d[j] }", 2, W},
    {"W.2.13",
     "m*S{ d[j]*(c[j+r]*s[j+r] - c[j-r]*s[j-r]) } = "
     "2*p*(cs(a) - ds(a)*ns(a)*Z(a)) - 2*i*sinw*ds(a)*ns(a)*S{ Z[j] } "
     "- 2*cosw*cs(a)*S{ d[j]^2 }",
     2, W},
    {"W.2.14",
     "S{ d[j]*(c[j+r]*d[j+r] - c[j-r]*d[j-r]) } = "
     "2*cs(b)*cosw*S{ s[j]*d[j] } - 2*i*sinw*ds(b)*ns(b)*S{ c[j] }",
     4, W},
    {"W.2.15",
     "m*S{ c[j]*(c[j+r]*s[j+r]*d[j+r] - c[j-r]*s[j-r]*d[j-r]) } = "
     "-2*i*sinw*cs(b)*ns(b)*S{ s[j]*d[j] } - 2*m*cosw*ds(b)*S{ c[j]^3 } "
     "+ 2*ds(b)*((m + cs(b)^2)*cosw - cs(b)*ns(b))*S{ c[j] }",
     4, W},
};

}  // namespace

CyclicCatalog::CyclicCatalog() {
    for (const CRow& row : kRows) {
        std::string source = std::string(row.period_in_K == 2 ? "2K" : "4K") + "-class " +
                             (row.weight == U ? "uniform" : row.weight == A ? "alternating"
                                                                            : "omega-weighted") +
                             " combination";
        entries_.push_back(parse_cyclic_identity(row.id, row.text, source, row.weight,
                                                 row.period_in_K));
    }
}

const CyclicCatalog& CyclicCatalog::instance() {
    static const CyclicCatalog cat;
    return cat;
}

std::vector<std::string> CyclicCatalog::ids(const std::string& prefix) const {
    std::vector<std::string> out;
    for (const CyclicIdentity& e : entries_)
        if (e.id.rfind(prefix, 0) == 0) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
}

const CyclicIdentity& CyclicCatalog::at(const std::string& id) const {
    for (const CyclicIdentity& e : entries_)
        if (e.id == id) return e;
    throw unknown_identity(id);
}

}  // namespace ellident
