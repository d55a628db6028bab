#include "liararena/bounds.hpp"

#include <stdexcept>

namespace liararena::bounds {

namespace {

// ceil(m/2) for non-negative integer numerators.
long long ceil_half(long long m) {
    if (m < 0) throw std::invalid_argument("ceil_half: negative numerator");
    return (m + 1) / 2;
}

}  // namespace

std::string to_string(BoundName b) {
    switch (b) {
        case BoundName::PohlMaxMin: return "pohl";
        case BoundName::RGLMax: return "rgl_max";
        case BoundName::Thm1MaxMinLower: return "thm1_lower";
        case BoundName::Corollary2kPlus1: return "corollary_2k_plus_1";
    }
    throw std::logic_error("unreachable");
}

long long pohl(long long n) {
    if (n < 2) throw std::invalid_argument("pohl: defined for n >= 2");
    return ceil_half(3 * n) - 2;
}

long long rgl_max(long long n, long long k) {
    if (n < 1 || k < 0) throw std::invalid_argument("rgl_max: n >= 1, k >= 0");
    if (n == 1) return 0;
    return (k + 1) * n - 1;
}

long long thm1_lower(long long n, long long k) {
    if (n < 2 || k < 0) throw std::invalid_argument("thm1_lower: n >= 2, k >= 0");
    // (k+1.5)(n-1) - 0.5 = ((2k+3)(n-1) - 1) / 2
    return ceil_half((2 * k + 3) * (n - 1) - 1);
}

long long thm1_identity_rhs(long long n, long long k) {
    if (n < 2 || k < 0) throw std::invalid_argument("thm1_identity_rhs: n >= 2, k >= 0");
    // ceil((k+1.5)n) - k - 2 = ceil((2k+3)n / 2) - k - 2
    return ceil_half((2 * k + 3) * n) - k - 2;
}

bool thm1_identity_check(long long n, long long k) {
    return thm1_lower(n, k) == thm1_identity_rhs(n, k);
}

}  // namespace liararena::bounds
