#include "qpbw/qcalc.hpp"

#include "qpbw/errors.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace qpbw {

namespace {

QScalar laurent_one_term(const Rat& e, const Rat& c) {
    LaurentMap m;
    m[e] = c;
    return QScalar::laurent(m);
}

}  // namespace

QScalar qint(long n) {
    if (n < 0) return qs_neg(qint(-n));
    LaurentMap m;
    for (long j = 0; j < n; ++j) m[Rat(n - 1 - 2 * j)] = Rat(1);
    return QScalar::laurent(m);
}

QScalar qfact(long n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    QScalar r = qs_one();
    for (long j = 1; j <= n; ++j) r = qs_mul(r, qint(j));
    return r;
}

QScalar qbinom(long n, long k) {
    if (k < 0) throw std::domain_error("qbinom: negative lower argument");
    QScalar num = qs_one();
    for (long r = 0; r < k; ++r) num = qs_mul(num, qint(n - r));
    const QScalar res = qs_div(num, qfact(k));
    assert(res.is_laurent());
    return res;
}

QScalar cint(long n) {
    if (n == 0) return qs_zero();
    const QScalar one_minus_qn = qs_sub(qs_one(), QScalar::q_power(Rat(n)));
    const QScalar one_minus_q = qs_sub(qs_one(), qs_q());
    const QScalar res = qs_div(one_minus_qn, one_minus_q);
    assert(res.is_laurent());
    return res;
}

QScalar cfact(long n) {
    if (n < 0) throw std::domain_error("cfact: negative argument");
    QScalar r = qs_one();
    for (long j = 1; j <= n; ++j) r = qs_mul(r, cint(j));
    return r;
}

QScalar cbinom(long n, long k) {
    if (k < 0) throw std::domain_error("cbinom: negative lower argument");
    QScalar num = qs_one();
    for (long r = 0; r < k; ++r) num = qs_mul(num, cint(n - r));
    const QScalar res = qs_div(num, cfact(k));
    assert(res.is_laurent());
    return res;
}

QScalar qs_subst_power(const QScalar& a, const Rat& r) {
    if (r == Rat(0)) throw std::domain_error("qs_subst_power: zero power");
    LaurentMap num, den;
    for (const auto& [e, c] : a.num()) num[e * r] = c;
    for (const auto& [e, c] : a.den()) den[e * r] = c;
    return QScalar::fraction(num, den);
}

// ---- QCommPoly ----

QCommPoly qcp_const(const QScalar& swap, const QScalar& c) {
    QCommPoly p{swap, {}};
    if (!c.is_zero()) p.terms[{0, 0}] = c;
    return p;
}

QCommPoly qcp_var(const QScalar& swap, QVar v, long e) {
    QCommPoly p{swap, {}};
    if (v == QVar::a)
        p.terms[{e, 0}] = qs_one();
    else
        p.terms[{0, e}] = qs_one();
    return p;
}

QCommPoly qcp_add(const QCommPoly& x, const QCommPoly& y) {
    assert(x.swap == y.swap);
    QCommPoly r = x;
    for (const auto& [key, c] : y.terms) {
        auto it = r.terms.find(key);
        if (it == r.terms.end()) {
            r.terms.emplace(key, c);
        } else {
            it->second = qs_add(it->second, c);
            if (it->second.is_zero()) r.terms.erase(it);
        }
    }
    return r;
}

QCommPoly qcp_mul(const QCommPoly& x, const QCommPoly& y) {
    assert(x.swap == y.swap);
    QCommPoly r{x.swap, {}};
    for (const auto& [kx, cx] : x.terms) {
        for (const auto& [ky, cy] : y.terms) {
            // a^i1 b^j1 a^i2 b^j2 = swap^(j1*i2) a^(i1+i2) b^(j1+j2)
            const QScalar c = qs_mul(qs_mul(cx, cy), qs_pow(x.swap, kx.second * ky.first));
            const std::pair<long, long> key{kx.first + ky.first, kx.second + ky.second};
            auto it = r.terms.find(key);
            if (it == r.terms.end()) {
                r.terms.emplace(key, c);
            } else {
                it->second = qs_add(it->second, c);
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    }
    return r;
}

QCommPoly qcp_scale(const QCommPoly& x, const QScalar& c) {
    QCommPoly r{x.swap, {}};
    if (c.is_zero()) return r;
    for (const auto& [key, cx] : x.terms) r.terms[key] = qs_mul(cx, c);
    return r;
}

QCommPoly qcp_truncate(const QCommPoly& x, long maxdeg) {
    QCommPoly r{x.swap, {}};
    for (const auto& [key, c] : x.terms)
        if (key.first + key.second <= maxdeg) r.terms.emplace(key, c);
    return r;
}

QCommPoly qcp_exp_q(const QCommPoly& p, long N) {
    QCommPoly sum = qcp_const(p.swap, qs_one());
    QCommPoly pow = qcp_const(p.swap, qs_one());
    for (long n = 1; n <= N; ++n) {
        pow = qcp_truncate(qcp_mul(pow, p), N);
        if (pow.terms.empty()) break;
        sum = qcp_add(sum, qcp_scale(pow, qs_inv(cfact(n))));
    }
    return sum;
}

QCommPoly qcp_Exp_q(const QCommPoly& p, long N) {
    QCommPoly sum = qcp_const(p.swap, qs_one());
    QCommPoly pow = qcp_const(p.swap, qs_one());
    for (long n = 1; n <= N; ++n) {
        pow = qcp_truncate(qcp_mul(pow, p), N);
        if (pow.terms.empty()) break;
        const QScalar coeff = qs_div(QScalar::q_power(Rat(n * (n - 1), 2)), qfact(n));
        sum = qcp_add(sum, qcp_scale(pow, coeff));
    }
    return sum;
}

QCommPoly qexp_trunc(QVar v, long N, const QScalar& swap) {
    return qcp_exp_q(qcp_var(swap, v), N);
}

QCommPoly Exp_trunc(QVar v, long N, const QScalar& swap) {
    return qcp_Exp_q(qcp_var(swap, v), N);
}

// ---- commuting-symbol machinery ----

MPoly mp_from_laurent(const QScalar& a, int nsyms, int q_idx) {
    if (!a.is_laurent()) throw std::domain_error("mp_from_laurent: fraction input");
    MPoly r = mp_const(nsyms, Rat(0));
    for (const auto& [e, c] : a.num()) {
        if (!is_integer(e)) throw std::domain_error("mp_from_laurent: fractional exponent");
        std::vector<int> exps(static_cast<size_t>(nsyms), 0);
        exps[static_cast<size_t>(q_idx)] = static_cast<int>(to_long(e));
        r = mp_add(r, mp_monomial(nsyms, exps, c));
    }
    return r;
}

MPoly qn_product(int nsyms, int q_idx, const MPoly& x, const MPoly& y, long n) {
    MPoly r = mp_const(nsyms, Rat(1));
    for (long i = 0; i < n; ++i) {
        std::vector<int> qe(static_cast<size_t>(nsyms), 0);
        qe[static_cast<size_t>(q_idx)] = static_cast<int>(i);
        const MPoly factor = mp_add(y, mp_mul(x, mp_monomial(nsyms, qe, Rat(1))));
        r = mp_mul(r, factor);
    }
    return r;
}

// ---- brute-force oracles ----

QScalar inversion_polynomial(long n) {
    if (n < 0 || n > 8) throw std::domain_error("inversion_polynomial: n out of range");
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 1);
    LaurentMap m;
    do {
        long inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        m[Rat(inv)] += Rat(1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return QScalar::laurent(m);
}

QScalar bipartition_inversions(long n, long r) {
    if (n < 0 || n > 12 || r < 0 || r > n)
        throw std::domain_error("bipartition_inversions: arguments out of range");
    LaurentMap m;
    for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
        if (std::popcount(mask) != static_cast<int>(r)) continue;
        long inv = 0;
        for (long i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            for (long j = 0; j < i; ++j)
                if (!(mask >> j & 1)) ++inv;
        }
        m[Rat(inv)] += Rat(1);
    }
    if (m.empty()) return qs_zero();
    return QScalar::laurent(m);
}

// ---- named identity battery ----

namespace {

void need_params(const std::vector<long>& params, size_t n, const std::string& name) {
    if (params.size() != n)
        throw std::domain_error("verify_q_identity: " + name + " expects " +
                                std::to_string(n) + " parameters");
}

bool check_separation_numeric(int part, long x, long y, long a) {
    const QScalar lhs_prod = qs_mul(qint(x), qint(y));
    if (part == 2)
        return qs_sub(lhs_prod, qs_mul(qint(x - a), qint(y + a))) ==
               qs_mul(qint(a), qint(y - x + a));
    return qs_add(lhs_prod, qs_mul(qint(a), qint(x + y + a))) ==
           qs_mul(qint(x + a), qint(y + a));
}

// Symbolic forms over u = q^x, v = q^y, w = q^a, both sides multiplied by (q - q^-1)^2.
bool check_separation_symbolic(int part) {
    const int N = 3;
    const MPoly u = mp_var(N, 0), v = mp_var(N, 1), w = mp_var(N, 2);
    const MPoly ub = mp_var(N, 0, -1), vb = mp_var(N, 1, -1), wb = mp_var(N, 2, -1);
    const MPoly base = mp_mul(mp_sub(u, ub), mp_sub(v, vb));
    if (part == 2) {
        const MPoly lhs =
            mp_sub(base, mp_mul(mp_sub(mp_mul(u, wb), mp_mul(ub, w)),
                                mp_sub(mp_mul(v, w), mp_mul(vb, wb))));
        const MPoly rhs = mp_mul(mp_sub(w, wb),
                                 mp_sub(mp_mul(mp_mul(v, ub), w), mp_mul(mp_mul(vb, u), wb)));
        return lhs == rhs;
    }
    const MPoly lhs =
        mp_add(base, mp_mul(mp_sub(w, wb),
                            mp_sub(mp_mul(mp_mul(u, v), w), mp_mul(mp_mul(ub, vb), wb))));
    const MPoly rhs =
        mp_mul(mp_sub(mp_mul(u, w), mp_mul(ub, wb)), mp_sub(mp_mul(v, w), mp_mul(vb, wb)));
    return lhs == rhs;
}

bool check_exp_law(long N, bool upper) {
    const QScalar swap = upper ? qs_pow(qs_qbar(), 2) : qs_q();
    const QCommPoly a = qcp_var(swap, QVar::a);
    const QCommPoly b = qcp_var(swap, QVar::b);
    const QCommPoly ab = qcp_add(a, b);
    if (upper) {
        const QCommPoly lhs = qcp_Exp_q(ab, N);
        const QCommPoly rhs = qcp_truncate(qcp_mul(qcp_Exp_q(a, N), qcp_Exp_q(b, N)), N);
        return lhs == rhs;
    }
    const QCommPoly lhs = qcp_exp_q(ab, N);
    const QCommPoly rhs = qcp_truncate(qcp_mul(qcp_exp_q(a, N), qcp_exp_q(b, N)), N);
    return lhs == rhs;
}

// Symbols {q, w, x, y, z}; both bimodal expansions of (x + w)-type products.
bool check_bimodal(long n) {
    const int N = 5;
    const MPoly w = mp_var(N, 1), x = mp_var(N, 2), y = mp_var(N, 3), z = mp_var(N, 4);
    MPoly lhs = mp_const(N, Rat(0)), rhs = mp_const(N, Rat(0));
    for (long k = 0; k <= n; ++k) {
        const MPoly c = mp_from_laurent(cbinom(n, k), N, 0);
        lhs = mp_add(lhs, mp_mul(c, mp_mul(qn_product(N, 0, x, y, k),
                                           qn_product(N, 0, w, z, n - k))));
        rhs = mp_add(rhs, mp_mul(c, mp_mul(qn_product(N, 0, w, y, k),
                                           qn_product(N, 0, x, z, n - k))));
    }
    return lhs == rhs;
}

// Q_n(-x, z) = sum_k [n choose k]_q Q_k(-x, y) Q_{n-k}(-y, z) over {q, x, y, z}.
bool check_q_binomial_theorem(long n) {
    const int N = 4;
    const MPoly mx = mp_neg(mp_var(N, 1));
    const MPoly y = mp_var(N, 2), my = mp_neg(y), z = mp_var(N, 3);
    const MPoly lhs = qn_product(N, 0, mx, z, n);
    MPoly rhs = mp_const(N, Rat(0));
    for (long k = 0; k <= n; ++k) {
        const MPoly c = mp_from_laurent(cbinom(n, k), N, 0);
        rhs = mp_add(rhs, mp_mul(c, mp_mul(qn_product(N, 0, mx, y, k),
                                           qn_product(N, 0, my, z, n - k))));
    }
    return lhs == rhs;
}

bool check_cauchy(int part, long n) {
    const int N = 2;
    const MPoly z = mp_var(N, 1);
    const MPoly minus_one = mp_const(N, Rat(-1));
    if (part == 1) {
        const MPoly lhs = mp_pow(z, n);
        MPoly rhs = mp_const(N, Rat(0));
        for (long k = 0; k <= n; ++k)
            rhs = mp_add(rhs, mp_mul(mp_from_laurent(cbinom(n, k), N, 0),
                                     qn_product(N, 0, minus_one, z, k)));
        return lhs == rhs;
    }
    const MPoly lhs = qn_product(N, 0, minus_one, z, n);
    MPoly rhs = mp_const(N, Rat(0));
    for (long k = 0; k <= n; ++k) {
        const QScalar coeff = qs_mul(QScalar::from_int((k % 2 == 0) ? 1 : -1),
                                     qs_mul(cbinom(n, k), QScalar::q_power(Rat(k * (k - 1), 2))));
        rhs = mp_add(rhs, mp_mul(mp_from_laurent(coeff, N, 0), mp_pow(z, n - k)));
    }
    return lhs == rhs;
}

bool check_negative_binomial(long n, long s) {
    const QScalar lhs = qs_subst_power(cbinom(n + s, s), Rat(2));
    const QScalar rhs = qs_mul(
        qs_mul(QScalar::from_int((s % 2 == 0) ? 1 : -1),
               qs_subst_power(cbinom(-(n + 1), s), Rat(2))),
        QScalar::q_power(Rat(s * (2 * n + s + 1))));
    return lhs == rhs;
}

bool check_conversion_qint(long n) {
    return qint(n) == qs_mul(QScalar::q_power(Rat(1 - n)), qs_subst_power(cint(n), Rat(2)));
}

bool check_conversion_qfact(long n) {
    return qfact(n) ==
           qs_mul(QScalar::q_power(Rat(-n * (n - 1), 2)), qs_subst_power(cfact(n), Rat(2)));
}

bool check_conversion_qbinom(long n, long k) {
    return qbinom(n, k) ==
           qs_mul(QScalar::q_power(Rat(-k * (n - k))), qs_subst_power(cbinom(n, k), Rat(2)));
}

}  // namespace

bool verify_q_identity(const std::string& name, const std::vector<long>& params) {
    if (name == "separation-i") {
        need_params(params, 1, name);
        return qint(-params[0]) == qs_neg(qint(params[0]));
    }
    if (name == "separation-ii" || name == "separation-iii") {
        const int part = (name == "separation-ii") ? 2 : 3;
        if (params.empty()) return check_separation_symbolic(part);
        need_params(params, 3, name);
        return check_separation_numeric(part, params[0], params[1], params[2]);
    }
    if (name == "exp-q-product") {
        need_params(params, 1, name);
        return check_exp_law(params[0], false);
    }
    if (name == "Exp-q-product") {
        need_params(params, 1, name);
        return check_exp_law(params[0], true);
    }
    if (name == "bimodal") {
        need_params(params, 1, name);
        return check_bimodal(params[0]);
    }
    if (name == "q-binomial-theorem") {
        need_params(params, 1, name);
        return check_q_binomial_theorem(params[0]);
    }
    if (name == "cauchy-i" || name == "cauchy-ii") {
        need_params(params, 1, name);
        return check_cauchy(name == "cauchy-i" ? 1 : 2, params[0]);
    }
    if (name == "negative-binomial") {
        need_params(params, 2, name);
        return check_negative_binomial(params[0], params[1]);
    }
    if (name == "conversion-qint") {
        need_params(params, 1, name);
        return check_conversion_qint(params[0]);
    }
    if (name == "conversion-qfact") {
        need_params(params, 1, name);
        return check_conversion_qfact(params[0]);
    }
    if (name == "conversion-qbinom") {
        need_params(params, 2, name);
        return check_conversion_qbinom(params[0], params[1]);
    }
    if (name == "inversion-factorial") {
        need_params(params, 1, name);
        return inversion_polynomial(params[0]) == cfact(params[0]);
    }
    if (name == "bipartition-binomial") {
        need_params(params, 2, name);
        return bipartition_inversions(params[0], params[1]) == cbinom(params[0], params[1]);
    }
    throw UnknownIdentity(name);
}

}  // namespace qpbw
