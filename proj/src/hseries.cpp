#include "qpbw/hseries.hpp"

#include "qpbw/errors.hpp"

#include <sstream>

namespace qpbw {

namespace {

void check_syms(const HSeries& a, const HSeries& b) {
    if (a.syms != b.syms)
        throw SymbolMismatch("hseries: symbol sets differ");
}

}  // namespace

bool HSeries::is_zero() const {
    for (const auto& c : coeffs)
        if (!c.is_zero()) return false;
    return true;
}

HSeries hs_zero(int order, std::vector<std::string> syms) {
    assert(order >= 0);
    HSeries s;
    s.order = order;
    s.syms = std::move(syms);
    s.coeffs.assign(order + 1, mp_const(static_cast<int>(s.syms.size()), Rat(0)));
    return s;
}

HSeries hs_const(int order, const Rat& c, std::vector<std::string> syms) {
    HSeries s = hs_zero(order, std::move(syms));
    s.coeffs[0] = mp_const(static_cast<int>(s.syms.size()), c);
    return s;
}

HSeries hs_exp_h_times(const MPoly& p, int order, std::vector<std::string> syms) {
    HSeries s = hs_zero(order, std::move(syms));
    assert(p.nsyms == static_cast<int>(s.syms.size()));
    MPoly pk = mp_const(p.nsyms, Rat(1));
    Rat fact(1);
    s.coeffs[0] = pk;
    for (int k = 1; k <= order; ++k) {
        pk = mp_mul(pk, p);
        fact *= k;
        s.coeffs[k] = mp_scale(pk, Rat(1) / fact);
    }
    return s;
}

int hs_val(const HSeries& a) {
    for (int k = 0; k <= a.order; ++k)
        if (!a.coeffs[k].is_zero()) return k;
    return a.order + 1;
}

HSeries hs_add(const HSeries& a, const HSeries& b) {
    check_syms(a, b);
    HSeries s = hs_zero(std::min(a.order, b.order), a.syms);
    for (int k = 0; k <= s.order; ++k) s.coeffs[k] = mp_add(a.coeffs[k], b.coeffs[k]);
    return s;
}

HSeries hs_sub(const HSeries& a, const HSeries& b) { return hs_add(a, hs_neg(b)); }

HSeries hs_mul(const HSeries& a, const HSeries& b) {
    check_syms(a, b);
    HSeries s = hs_zero(std::min(a.order, b.order), a.syms);
    for (int i = 0; i <= s.order; ++i) {
        if (a.coeffs[i].is_zero()) continue;
        for (int j = 0; i + j <= s.order; ++j) {
            if (b.coeffs[j].is_zero()) continue;
            s.coeffs[i + j] = mp_add(s.coeffs[i + j], mp_mul(a.coeffs[i], b.coeffs[j]));
        }
    }
    return s;
}

HSeries hs_neg(const HSeries& a) {
    HSeries s = a;
    for (auto& c : s.coeffs) c = mp_neg(c);
    return s;
}

HSeries hs_scale(const HSeries& a, const Rat& c) {
    HSeries s = a;
    for (auto& p : s.coeffs) p = mp_scale(p, c);
    return s;
}

HSeries hs_truncate(const HSeries& a, int order) {
    assert(order <= a.order);
    HSeries s = a;
    s.order = order;
    s.coeffs.resize(order + 1);
    return s;
}

HSeries hs_exp(const HSeries& a) {
    if (!a.coeffs[0].is_zero())
        throw ValuationZero("hs_exp: argument has nonzero constant term");
    HSeries acc = hs_const(a.order, Rat(1), a.syms);
    HSeries term = acc;
    for (int k = 1; k <= a.order; ++k) {
        term = hs_scale(hs_mul(term, a), Rat(1, k));
        acc = hs_add(acc, term);
    }
    return acc;
}

HSeries hs_div_exact(const HSeries& a, const HSeries& b) {
    check_syms(a, b);
    const int order = std::min(a.order, b.order);
    int vb = hs_val(b);
    if (vb > order)
        throw ValuationOrder("hs_div_exact: divisor vanishes through the truncation order");
    int va = hs_val(a);
    if (va < vb)
        throw ValuationOrder("hs_div_exact: dividend valuation below divisor valuation");

    const int nq = order - vb;
    HSeries q = hs_zero(nq, a.syms);
    const MPoly& b0 = b.coeffs[vb];
    for (int k = 0; k <= nq; ++k) {
        MPoly acc = k + vb <= a.order ? a.coeffs[k + vb] : mp_const(b0.nsyms, Rat(0));
        for (int j = 0; j < k; ++j)
            acc = mp_sub(acc, mp_mul(q.coeffs[j], b.coeffs[k - j + vb]));
        q.coeffs[k] = mp_divexact(acc, b0);
    }
    return q;
}

namespace {

// binom(x, k) in base q^2 with symbolic upper argument, as an h-series:
// prod_{i=0}^{k-1}(1 - e^{h(x-i)}) / prod_{i=1}^{k}(1 - e^{hi}), both of
// h-valuation exactly k.
HSeries symbolic_q2_binomial(int k, int order, const std::vector<std::string>& syms, int x_idx) {
    const int n = static_cast<int>(syms.size());
    const int work = order + k;
    HSeries num = hs_const(work, Rat(1), syms);
    HSeries den = hs_const(work, Rat(1), syms);
    for (int i = 0; i < k; ++i) {
        MPoly arg = mp_add(mp_var(n, x_idx), mp_const(n, Rat(-i)));
        num = hs_mul(num, hs_sub(hs_const(work, Rat(1), syms), hs_exp_h_times(arg, work, syms)));
        den = hs_mul(den, hs_sub(hs_const(work, Rat(1), syms),
                                 hs_exp_h_times(mp_const(n, Rat(i + 1)), work, syms)));
    }
    return hs_div_exact(num, den);
}

}  // namespace

bool cauchy_exp_check(int N, int K) {
    assert(K >= N);
    const std::vector<std::string> syms{"x", "t"};
    MPoly x = mp_var(2, 0);
    MPoly t = mp_var(2, 1);

    HSeries lhs = hs_exp_h_times(mp_mul(x, t), N, syms);

    HSeries rhs = hs_zero(N, syms);
    for (int k = 0; k <= K; ++k) {
        HSeries prod = hs_const(N, Rat(1), syms);
        for (int i = 0; i < k; ++i)
            prod = hs_mul(prod, hs_sub(hs_exp_h_times(t, N, syms),
                                       hs_exp_h_times(mp_const(2, Rat(i)), N, syms)));
        if (prod.is_zero()) continue;
        rhs = hs_add(rhs, hs_mul(symbolic_q2_binomial(k, N, syms, 0), prod));
    }
    return lhs == rhs;
}

namespace {

HSeries laurent_to_hseries(const LaurentMap& m, int order, const std::vector<std::string>& syms) {
    HSeries s = hs_zero(order, syms);
    const int n = static_cast<int>(syms.size());
    for (const auto& [e, c] : m) {
        Rat base = e / 2;
        Rat powk(1);
        Rat fact(1);
        for (int k = 0; k <= order; ++k) {
            if (k > 0) {
                powk *= base;
                fact *= k;
            }
            s.coeffs[k] = mp_add(s.coeffs[k], mp_const(n, c * powk / fact));
        }
    }
    return s;
}

}  // namespace

HSeries qs_to_hseries(const QScalar& a, int order, std::vector<std::string> syms) {
    if (a.is_laurent()) return laurent_to_hseries(a.num(), order, syms);
    HSeries den_probe = laurent_to_hseries(a.den(), order, syms);
    int vb = hs_val(den_probe);
    if (vb > order)
        throw InexactLeadingDivision("qs_to_hseries: denominator vanishes to high order at h = 0");
    HSeries num = laurent_to_hseries(a.num(), order + vb, syms);
    HSeries den = laurent_to_hseries(a.den(), order + vb, syms);
    return hs_div_exact(num, den);
}

std::string hs_render(const HSeries& a) {
    std::ostringstream os;
    bool any = false;
    for (int k = 0; k <= a.order; ++k) {
        if (a.coeffs[k].is_zero()) continue;
        if (any) os << " + ";
        any = true;
        os << "(" << mp_render(a.coeffs[k], a.syms) << ")";
        if (k > 0) os << "*h^" << k;
    }
    if (!any) return "0";
    os << " + O(h^" << a.order + 1 << ")";
    return os.str();
}

}  // namespace qpbw
