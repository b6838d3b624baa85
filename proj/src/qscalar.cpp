#include "qpbw/qscalar.hpp"

#include <sstream>
#include <vector>

namespace qpbw {

namespace {

// ---- dense polynomial helpers (coefficient index = exponent in u = q^{1/L}) ----

using Vec = std::vector<Rat>;

void vec_trim(Vec& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

Vec vec_divexact(const Vec& a, const Vec& b) {
    assert(!b.empty());
    if (a.empty()) return {};
    assert(a.size() >= b.size());
    Vec rem = a;
    Vec quot(a.size() - b.size() + 1, Rat(0));
    const Rat lead = b.back();
    while (rem.size() >= b.size()) {
        Rat f = rem.back() / lead;
        size_t off = rem.size() - b.size();
        quot[off] = f;
        for (size_t i = 0; i < b.size(); ++i) rem[off + i] -= f * b[i];
        rem.pop_back();
        vec_trim(rem);
        if (rem.empty()) break;
    }
    assert(rem.empty());
    return quot;
}

// ---- gcd machinery ----
// Rational-coefficient Euclidean remainders explode in bit size, so the gcd
// runs on primitive integer polynomials: a modular coprimality probe first
// (the common case), then a primitive pseudo-remainder sequence.

using IVec = std::vector<Int>;

IVec to_int_primitive(const Vec& v) {
    Int L = 1;
    for (const auto& c : v) L = int_lcm(L, rat_den(c));
    IVec out(v.size());
    Int content = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        out[i] = rat_num(v[i] * Rat(L));
        content = int_gcd(content, out[i]);
    }
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

unsigned long poly_gcd_degree_mod_p(const IVec& a, const IVec& b, unsigned long p) {
    auto reduce = [p](const IVec& v) {
        std::vector<unsigned long> r(v.size());
        for (size_t i = 0; i < v.size(); ++i) {
            Int m = v[i] % Int(p);
            if (m < 0) m += p;
            r[i] = static_cast<unsigned long>(m);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    };
    auto inv_mod = [p](unsigned long x) {
        unsigned long r = 1, base = x, e = p - 2;
        while (e > 0) {
            if (e & 1ul) r = (unsigned __int128)r * base % p;
            base = (unsigned __int128)base * base % p;
            e >>= 1;
        }
        return r;
    };
    std::vector<unsigned long> A = reduce(a), B = reduce(b);
    while (!B.empty()) {
        unsigned long lead_inv = inv_mod(B.back());
        while (A.size() >= B.size()) {
            unsigned long f = (unsigned __int128)A.back() * lead_inv % p;
            size_t off = A.size() - B.size();
            for (size_t i = 0; i < B.size(); ++i) {
                unsigned long sub = (unsigned __int128)f * B[i] % p;
                A[off + i] = (A[off + i] + p - sub) % p;
            }
            while (!A.empty() && A.back() == 0) A.pop_back();
            if (A.empty()) break;
        }
        std::swap(A, B);
    }
    return A.empty() ? 0ul : A.size() - 1;
}

IVec pseudo_rem(IVec a, const IVec& b) {
    assert(!b.empty());
    const Int lead = b.back();
    while (a.size() >= b.size()) {
        Int top = a.back();
        size_t off = a.size() - b.size();
        for (auto& c : a) c *= lead;
        for (size_t i = 0; i < b.size(); ++i) a[off + i] -= top * b[i];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

void make_primitive(IVec& v) {
    Int content = 0;
    for (const auto& c : v) content = int_gcd(content, c);
    if (content > 1)
        for (auto& c : v) c /= content;
}

Vec vec_gcd(Vec a, Vec b) {
    vec_trim(a);
    vec_trim(b);
    if (a.empty() || b.empty()) {
        Vec& s = a.empty() ? b : a;
        if (!s.empty()) {
            const Rat lead = s.back();
            for (auto& c : s) c /= lead;
        }
        return s;
    }
    if (a.size() == 1 || b.size() == 1) return {Rat(1)};

    IVec A = to_int_primitive(a);
    IVec B = to_int_primitive(b);
    for (unsigned long p : {1000003ul, 1000033ul, 1000037ul}) {
        if (A.back() % Int(p) == 0 || B.back() % Int(p) == 0) continue;
        if (poly_gcd_degree_mod_p(A, B, p) == 0) return {Rat(1)};
        break;
    }

    if (A.size() < B.size()) std::swap(A, B);
    while (!B.empty()) {
        IVec r = pseudo_rem(std::move(A), B);
        make_primitive(r);
        A = std::move(B);
        B = std::move(r);
    }
    Vec g(A.size());
    for (size_t i = 0; i < A.size(); ++i) g[i] = rat_of(A[i], A.back());
    return g;
}

void map_strip_zeros(LaurentMap& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second == 0) it = m.erase(it);
        else ++it;
    }
}

LaurentMap map_conv(const LaurentMap& a, const LaurentMap& b) {
    LaurentMap out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            Rat e = ea + eb;
            Rat c = ca * cb;
            auto it = out.find(e);
            if (it == out.end()) {
                if (c != 0) out.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

LaurentMap map_add(const LaurentMap& a, const LaurentMap& b) {
    LaurentMap out = a;
    for (const auto& [e, c] : b) {
        auto it = out.find(e);
        if (it == out.end()) {
            out.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.erase(it);
        }
    }
    return out;
}

// Dense image of a map after shifting its minimal exponent to zero and
// rescaling exponents by L (all shifted exponents times L must be integers).
Vec map_to_vec(const LaurentMap& m, const Rat& shift, const Int& L) {
    Vec v;
    for (const auto& [e, c] : m) {
        Rat idx = (e - shift) * Rat(L);
        assert(is_integer(idx));
        long i = to_long(idx);
        assert(i >= 0 && i < (1 << 22));
        if (v.size() <= static_cast<size_t>(i)) v.resize(i + 1, Rat(0));
        v[i] = c;
    }
    return v;
}

LaurentMap vec_to_map(const Vec& v, const Rat& shift, const Int& L) {
    LaurentMap m;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) m.emplace(shift + Rat(Int(i), L), v[i]);
    return m;
}

const LaurentMap kOne{{Rat(0), Rat(1)}};

}  // namespace

QScalar QScalar::from_rat(const Rat& c) {
    QScalar s;
    if (c != 0) s.num_.emplace(Rat(0), c);
    return s;
}

QScalar QScalar::q_power(const Rat& e) {
    QScalar s;
    s.num_.emplace(e, Rat(1));
    return s;
}

QScalar QScalar::monomial(const Rat& c, const Rat& e) {
    QScalar s;
    if (c != 0) s.num_.emplace(e, c);
    return s;
}

QScalar QScalar::laurent(LaurentMap m) {
    map_strip_zeros(m);
    QScalar s;
    s.num_ = std::move(m);
    return s;
}

QScalar QScalar::fraction(LaurentMap num, LaurentMap den) {
    map_strip_zeros(num);
    map_strip_zeros(den);
    if (den.empty()) throw std::domain_error("QScalar: division by zero");
    QScalar s;
    if (num.empty()) return s;

    const Rat en = num.begin()->first;
    const Rat ed = den.begin()->first;

    if (den.size() == 1) {
        const Rat c0 = den.begin()->second;
        for (const auto& [e, c] : num) s.num_.emplace(e - ed, c / c0);
        return s;
    }

    Int L = 1;
    for (const auto& [e, c] : num) L = int_lcm(L, rat_den(e - en));
    for (const auto& [e, c] : den) L = int_lcm(L, rat_den(e - ed));

    Vec nv = map_to_vec(num, en, L);
    Vec dv = map_to_vec(den, ed, L);
    Vec g = vec_gcd(nv, dv);
    if (g.size() > 1) {
        nv = vec_divexact(nv, g);
        dv = vec_divexact(dv, g);
    }

    assert(!dv.empty() && dv[0] != 0);
    const Rat c0 = dv.back();
    for (auto& c : nv) c /= c0;
    for (auto& c : dv) c /= c0;

    if (dv.size() == 1) {
        s.num_ = vec_to_map(nv, en - ed, L);
    } else {
        s.num_ = vec_to_map(nv, en - ed, L);
        s.den_ = vec_to_map(dv, Rat(0), L);
    }
    return s;
}

bool QScalar::is_one() const {
    return num_ == kOne && den_ == kOne;
}

bool QScalar::is_laurent() const { return den_ == kOne; }

bool QScalar::is_rational() const {
    if (!is_laurent()) return false;
    if (num_.empty()) return true;
    return num_.size() == 1 && num_.begin()->first == 0;
}

Rat QScalar::as_rational() const {
    assert(is_rational());
    return num_.empty() ? Rat(0) : num_.begin()->second;
}

bool QScalar::operator<(const QScalar& o) const {
    if (num_ != o.num_) return num_ < o.num_;
    return den_ < o.den_;
}

QScalar qs_add(const QScalar& a, const QScalar& b) {
    if (a.is_laurent() && b.is_laurent()) {
        QScalar s;
        s.num_ = map_add(a.num_, b.num_);
        return s;
    }
    LaurentMap num = map_add(map_conv(a.num_, b.den_), map_conv(b.num_, a.den_));
    return QScalar::fraction(std::move(num), map_conv(a.den_, b.den_));
}

QScalar qs_sub(const QScalar& a, const QScalar& b) { return qs_add(a, qs_neg(b)); }

QScalar qs_mul(const QScalar& a, const QScalar& b) {
    if (a.is_laurent() && b.is_laurent()) {
        QScalar s;
        s.num_ = map_conv(a.num_, b.num_);
        return s;
    }
    return QScalar::fraction(map_conv(a.num_, b.num_), map_conv(a.den_, b.den_));
}

QScalar qs_neg(const QScalar& a) {
    QScalar s = a;
    for (auto& [e, c] : s.num_) c = -c;
    return s;
}

QScalar qs_bar(const QScalar& a) {
    LaurentMap num, den;
    for (const auto& [e, c] : a.num_) num.emplace(-e, c);
    for (const auto& [e, c] : a.den_) den.emplace(-e, c);
    return QScalar::fraction(std::move(num), std::move(den));
}

QScalar qs_inv(const QScalar& a) {
    if (a.is_zero()) throw std::domain_error("QScalar: inverse of zero");
    return QScalar::fraction(a.den_, a.num_);
}

QScalar qs_div(const QScalar& a, const QScalar& b) { return qs_mul(a, qs_inv(b)); }

QScalar qs_pow(const QScalar& a, long e) {
    if (e < 0) return qs_inv(qs_pow(a, -e));
    QScalar acc = qs_one();
    QScalar base = a;
    unsigned long k = static_cast<unsigned long>(e);
    while (k > 0) {
        if (k & 1ul) acc = qs_mul(acc, base);
        base = qs_mul(base, base);
        k >>= 1;
    }
    return acc;
}

namespace {

std::string rat_str(const Rat& r) {
    std::ostringstream os;
    os << rat_num(r);
    if (rat_den(r) != 1) os << "/" << rat_den(r);
    return os.str();
}

std::string q_part(const Rat& e) {
    if (e == 1) return "q";
    if (is_integer(e) && e > 0) return "q^" + rat_str(e);
    return "q^(" + rat_str(e) + ")";
}

}  // namespace

std::string render_laurent(const LaurentMap& m) {
    if (m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = m.rbegin(); it != m.rend(); ++it) {
        const Rat& e = it->first;
        Rat c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        if (e == 0) {
            os << rat_str(c);
        } else if (c == 1) {
            os << q_part(e);
        } else {
            os << rat_str(c) << "*" << q_part(e);
        }
    }
    return os.str();
}

std::string qs_render(const QScalar& a) {
    if (a.is_laurent()) return render_laurent(a.num());
    return "(" + render_laurent(a.num()) + ")/(" + render_laurent(a.den()) + ")";
}

}  // namespace qpbw
