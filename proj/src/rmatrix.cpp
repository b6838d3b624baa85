#include "qpbw/rmatrix.hpp"

#include "qpbw/qcalc.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace qpbw {

namespace {

void check_rank(int n, const char* who) {
    if (n < 1) throw std::domain_error(std::string(who) + ": rank must be positive");
}

std::vector<Interval> interval_list(int n) {
    std::vector<Interval> out;
    for (int a = 1; a <= n; ++a)
        for (int b = a; b <= n; ++b) out.push_back({a, b});
    return out;
}

MIndex mindex_dec(MIndex m, int a, int b, const char* who) {
    auto it = m.find({a, b});
    if (it == m.end() || it->second <= 0)
        throw std::domain_error(std::string(who) + ": exponent to lower is not positive");
    if (--it->second == 0) m.erase(it);
    return m;
}

QScalar q_to(long e) { return QScalar::q_power(Rat(e)); }

QScalar q_minus_qbar_over_qint(long e) { return qs_div(qs_sub(qs_q(), qs_qbar()), qint(e)); }

// Shared tail of the diagonal and first general recurrence:
// sum_{a<i} (m_{a,i} - m_{a,i-1}) + sum_{b>i} (m_{i,b} - m_{i+1,b}).
long neighbour_exponent(int n, const MIndex& m, int i) {
    long e = 0;
    for (int a = 1; a < i; ++a) e += mindex_at(m, a, i) - mindex_at(m, a, i - 1);
    for (int b = i + 1; b <= n; ++b) e += mindex_at(m, i, b) - mindex_at(m, i + 1, b);
    return e;
}

}  // namespace

long mindex_at(const MIndex& m, int a, int b) {
    auto it = m.find({a, b});
    return it == m.end() ? 0 : it->second;
}

long mindex_width(const MIndex& m) {
    long w = 0;
    for (const auto& [iv, e] : m) w += e * (iv.second - iv.first + 1);
    return w;
}

std::vector<MIndex> enumerate_exponents(int n, long trunc) {
    check_rank(n, "enumerate_exponents");
    if (trunc < 0) throw std::domain_error("enumerate_exponents: negative bound");
    auto ivs = interval_list(n);
    std::vector<MIndex> out;
    MIndex cur;
    auto rec = [&](auto&& self, size_t idx, long rem) -> void {
        if (idx == ivs.size()) {
            out.push_back(cur);
            return;
        }
        long w = ivs[idx].second - ivs[idx].first + 1;
        self(self, idx + 1, rem);
        for (long e = 1; e * w <= rem; ++e) {
            cur[ivs[idx]] = e;
            self(self, idx + 1, rem - e * w);
        }
        cur.erase(ivs[idx]);
    };
    rec(rec, 0, trunc);
    return out;
}

long interval_pairing(const Interval& i, const Interval& j) {
    long s = 0;
    for (int l = i.first; l <= i.second; ++l) s += cartan_interval(l, j.first, j.second);
    return s;
}

Rat kappa(int n, int i, int j) {
    check_rank(n, "kappa");
    if (i < 1 || i > n || j < 1 || j > n) throw std::domain_error("kappa: index out of range");
    long mn = std::min(i, j), mx = std::max(i, j);
    return rat_of(2 * mn * (n + 1 - mx), n + 1);
}

Rat kappa_flipped(int n, int i, int j) {
    check_rank(n, "kappa_flipped");
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::domain_error("kappa_flipped: index out of range");
    long mn = std::min(i, j), mx = std::max(i, j);
    return rat_of(2 * mx * (n + 1 - mn), n + 1);
}

bool kappa_solves_system(int n) {
    check_rank(n, "kappa_solves_system");
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= n; ++l) {
            Rat s(0);
            for (int j = 1; j <= n; ++j) s += kappa(n, i, j) * Rat(cartan(j, l));
            if (s != Rat(i == l ? 2 : 0)) return false;
        }
    return true;
}

QScalar alpha_interval(const MIndex& m) {
    QScalar out = qs_one();
    for (const auto& [iv, e] : m) {
        QScalar f = qs_div(qs_pow(qs_sub(qs_q(), qs_qbar()), e), qfact(e));
        f = qs_mul(f, QScalar::q_power(rat_of(e * (e - 3), 2)));
        if (((iv.second - iv.first) * e) % 2 != 0) f = qs_neg(f);
        out = qs_mul(out, f);
    }
    return out;
}

QScalar alpha_separated(const MIndex& m) {
    long cross = 0;
    for (auto it = m.begin(); it != m.end(); ++it) {
        cross += it->second * (it->second - 1);
        for (auto jt = std::next(it); jt != m.end(); ++jt)
            cross += it->second * jt->second * interval_pairing(it->first, jt->first);
    }
    return qs_mul(alpha_interval(m), q_to(-cross));
}

bool alpha_recurrence_diagonal(int n, const MIndex& m, int i) {
    check_rank(n, "alpha_recurrence_diagonal");
    if (i < 1 || i > n) throw std::domain_error("alpha_recurrence_diagonal: index out of range");
    long mi = mindex_at(m, i, i);
    MIndex lower = mindex_dec(m, i, i, "alpha_recurrence_diagonal");
    QScalar rhs = qs_mul(alpha_separated(lower), q_minus_qbar_over_qint(mi));
    rhs = qs_mul(rhs, q_to(-(mi + neighbour_exponent(n, m, i))));
    return alpha_separated(m) == rhs;
}

bool alpha_recurrence_general(int n, const MIndex& m, int s, int i) {
    check_rank(n, "alpha_recurrence_general");
    if (s < 1 || s >= i || i > n)
        throw std::domain_error("alpha_recurrence_general: need 1 <= s < i <= n");
    long msi = mindex_at(m, s, i);
    long msi1 = mindex_at(m, s, i - 1);
    QScalar lhs = alpha_separated(mindex_dec(m, s, i, "alpha_recurrence_general"));
    QScalar rhs = qs_neg(alpha_separated(mindex_dec(m, s, i - 1, "alpha_recurrence_general")));
    rhs = qs_mul(rhs, qs_div(qint(msi), qint(msi1)));
    long e = 2 * mindex_at(m, i, i) - msi + msi1 + neighbour_exponent(n, m, i);
    return lhs == qs_mul(rhs, q_to(e));
}

bool alpha_recurrence_general_chained(int n, const MIndex& m, int s, int i) {
    check_rank(n, "alpha_recurrence_general_chained");
    if (s < 1 || s > i || i > n)
        throw std::domain_error("alpha_recurrence_general_chained: need 1 <= s <= i <= n");
    long msi = mindex_at(m, s, i);
    QScalar rhs = alpha_separated(mindex_dec(m, s, i, "alpha_recurrence_general_chained"));
    if ((i - s) % 2 != 0) rhs = qs_neg(rhs);
    rhs = qs_mul(rhs, q_minus_qbar_over_qint(msi));
    long e = msi;
    for (int a = 1; a <= i; ++a) e -= mindex_at(m, a, i);
    for (int b = i + 1; b <= n; ++b) e += mindex_at(m, i + 1, b);
    for (int a = 1; a < s; ++a) e += mindex_at(m, a, s - 1);
    for (int b = s; b <= n; ++b) e -= mindex_at(m, s, b);
    return alpha_separated(m) == qs_mul(rhs, q_to(e));
}

Element r_matrix(int n, long trunc) {
    check_rank(n, "r_matrix");
    if (trunc < 0) throw std::domain_error("r_matrix: negative truncation bound");
    QuadForm pre;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) pre.add({0, i}, {1, j}, kappa(n, i, j));
    Element out;
    out.rank = n;
    out.nslots = 2;
    out.trunc = trunc;
    for (const auto& m : enumerate_exponents(n, trunc)) {
        Term t;
        t.coeff = alpha_separated(m);
        t.quad = pre;
        t.slots.resize(2);
        for (int i = 1; i <= n; ++i) {
            long s = 0;
            for (const auto& [iv, e] : m)
                if (iv.first <= i && i <= iv.second) s += e;
            if (s != 0) {
                t.slots[0].kExp[i] = Rat(s);
                t.slots[1].kExp[i] = Rat(-s);
            }
        }
        t.slots[0].xExp = m;
        t.slots[1].yExp = m;
        out.terms.push_back(std::move(t));
    }
    return el_canonical(std::move(out));
}

}  // namespace qpbw
