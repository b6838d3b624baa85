#pragma once

#include "qpbw/mpoly.hpp"
#include "qpbw/qscalar.hpp"

#include <string>
#include <vector>

namespace qpbw {

// Power series in h truncated at a fixed order, with multivariate polynomial
// coefficients over a declared symbol set.
struct HSeries {
    int order = 0;
    std::vector<MPoly> coeffs;
    std::vector<std::string> syms;

    bool operator==(const HSeries& o) const = default;
    bool is_zero() const;
};

HSeries hs_zero(int order, std::vector<std::string> syms = {});
HSeries hs_const(int order, const Rat& c, std::vector<std::string> syms = {});

// Series whose h^k coefficient is p^k/k!, i.e. exp(h*p) for a polynomial p.
HSeries hs_exp_h_times(const MPoly& p, int order, std::vector<std::string> syms);

int hs_val(const HSeries& a);

HSeries hs_add(const HSeries& a, const HSeries& b);
HSeries hs_sub(const HSeries& a, const HSeries& b);
HSeries hs_mul(const HSeries& a, const HSeries& b);
HSeries hs_neg(const HSeries& a);
HSeries hs_scale(const HSeries& a, const Rat& c);
HSeries hs_truncate(const HSeries& a, int order);

// exp of a series with positive h-valuation; throws ValuationZero otherwise.
HSeries hs_exp(const HSeries& a);

// Exact quotient; requires val_h(a) >= val_h(b) (ValuationOrder otherwise)
// and exact coefficient division at every step (InexactLeadingDivision).
// The result order is min(order_a, order_b) - val_h(b).
HSeries hs_div_exact(const HSeries& a, const HSeries& b);

// Both sides of the exponential Cauchy expansion compared through h^N with
// summands up to index K; requires K >= N.
bool cauchy_exp_check(int N, int K);

// Substitutes q^r = e^{rh/2} termwise and truncates; denominators divide out
// exactly or the conversion throws InexactLeadingDivision.
HSeries qs_to_hseries(const QScalar& a, int order, std::vector<std::string> syms = {});

inline HSeries operator+(const HSeries& a, const HSeries& b) { return hs_add(a, b); }
inline HSeries operator-(const HSeries& a, const HSeries& b) { return hs_sub(a, b); }
inline HSeries operator*(const HSeries& a, const HSeries& b) { return hs_mul(a, b); }

std::string hs_render(const HSeries& a);

}  // namespace qpbw
