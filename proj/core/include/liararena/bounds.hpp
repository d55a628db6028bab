#pragma once

// Closed-form query-count bounds used as oracles by tests and reports.
// All half-integer arithmetic is exact: values of the form m/2 are kept
// as integer numerators, never floats, because every check here is a
// ceiling of a half-integer and off-by-one is the whole game.

#include <string>

namespace liararena::bounds {

enum class BoundName { PohlMaxMin, RGLMax, Thm1MaxMinLower, Corollary2kPlus1 };

std::string to_string(BoundName b);

// ceil(3n/2) - 2: optimal max+min comparison count with no lies. n >= 2.
long long pohl(long long n);

// (k+1)n - 1: max-finding with k lies, necessary and sufficient.
// n = 1 is overridden to 0 (a singleton needs no queries).
long long rgl_max(long long n, long long k);

// ceil((k+1.5)(n-1) - 0.5): adversary lower bound for max+min with k lies.
// n >= 2.
long long thm1_lower(long long n, long long k);

// Right-hand side of the identity ceil((k+1.5)n) - k - 2, exposed so the
// audit can report both sides.
long long thm1_identity_rhs(long long n, long long k);

// True iff thm1_lower(n,k) equals the identity form above.
bool thm1_identity_check(long long n, long long k);

}  // namespace liararena::bounds
