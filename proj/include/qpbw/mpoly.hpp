#pragma once

#include "qpbw/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace qpbw {

// Multivariate Laurent polynomial with exact rational coefficients.
// Exponent vectors are aligned with an externally declared symbol list and
// may hold negative entries.  Zero coefficients are never stored.
struct MPoly {
    int nsyms = 0;
    std::map<std::vector<int>, Rat> terms;

    bool is_zero() const { return terms.empty(); }
    bool operator==(const MPoly& o) const = default;
};

MPoly mp_const(int nsyms, const Rat& c);
MPoly mp_var(int nsyms, int idx, int power = 1);
MPoly mp_monomial(int nsyms, std::vector<int> exps, const Rat& c);

MPoly mp_add(const MPoly& a, const MPoly& b);
MPoly mp_sub(const MPoly& a, const MPoly& b);
MPoly mp_mul(const MPoly& a, const MPoly& b);
MPoly mp_neg(const MPoly& a);
MPoly mp_scale(const MPoly& a, const Rat& c);
MPoly mp_pow(const MPoly& a, long e);

// Exact division; throws InexactLeadingDivision when no Laurent polynomial
// quotient exists.
MPoly mp_divexact(const MPoly& a, const MPoly& b);

std::string mp_render(const MPoly& p, const std::vector<std::string>& syms);

inline MPoly operator+(const MPoly& a, const MPoly& b) { return mp_add(a, b); }
inline MPoly operator-(const MPoly& a, const MPoly& b) { return mp_sub(a, b); }
inline MPoly operator*(const MPoly& a, const MPoly& b) { return mp_mul(a, b); }
inline MPoly operator-(const MPoly& a) { return mp_neg(a); }

}  // namespace qpbw
