#include "qpbw/straighten.hpp"

#include "qpbw/errors.hpp"
#include "qpbw/qcalc.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace qpbw {

namespace {

std::tuple<int, int, int> letter_key(const XYLetter& l) {
    return {l.is_x ? 1 : 0, l.a, l.b};
}

bool out_of_order(const XYLetter& l, const XYLetter& r) { return letter_key(l) > letter_key(r); }

bool supports_disjoint(const XYLetter& l, const XYLetter& r) {
    return std::max(l.a, r.a) > std::min(l.b, r.b);
}

bool strictly_inside(int s, const XYLetter& outer) { return outer.a < s && s < outer.b; }

// Decides whether an out-of-order adjacent pair commutes exactly.  Same-kind
// letters commute when their supports are at distance two or more, or when the
// left letter is simple and sits strictly inside the right interval.  Opposite
// kinds commute whenever the supports are disjoint, and also when one side is
// simple and strictly interior to the other interval.
bool free_pair(const XYLetter& l, const XYLetter& r) {
    if (l.is_x == r.is_x) {
        if (supports_disjoint(l, r)) return l.a - r.b >= 2;
        return l.a == l.b && strictly_inside(l.a, r);
    }
    if (supports_disjoint(l, r)) return true;
    if (l.a == l.b && strictly_inside(l.a, r)) return true;
    if (r.a == r.b && strictly_inside(r.a, l)) return true;
    return false;
}

long state_width(const EngineState& st) {
    long w = 0;
    for (const auto& l : st.word)
        if (l.is_x) w += l.e * (l.b - l.a + 1);
    return w;
}

std::string letter_str(const XYLetter& l) {
    std::ostringstream os;
    os << (l.is_x ? "x[" : "y[") << l.a;
    if (l.b != l.a) os << "," << l.b;
    os << "]";
    if (l.e != 1) os << "^" << l.e;
    return os.str();
}

// Merge adjacent equal letters and swap adjacent commuting out-of-order pairs
// until neither applies.
void normalize_free(EngineState& st) {
    auto& w = st.word;
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < w.size();) {
            XYLetter& l = w[p];
            XYLetter& r = w[p + 1];
            if (l.is_x == r.is_x && l.a == r.a && l.b == r.b) {
                l.e += r.e;
                w.erase(w.begin() + static_cast<long>(p) + 1);
                changed = true;
                continue;
            }
            if (out_of_order(l, r) && free_pair(l, r)) {
                std::swap(l, r);
                changed = true;
            }
            ++p;
        }
    }
}

// Replacement piece for a rewritten pair: either a k-power (swept leftward on
// insertion) or an x/y letter.
struct Piece {
    enum class Kind { K, Y, X } kind;
    int a;
    int b;
    long e;
};

Piece pk(int i, long e) { return {Piece::Kind::K, i, i, e}; }
Piece py(int a, int b, long e) { return {Piece::Kind::Y, a, b, e}; }
Piece px(int a, int b, long e) { return {Piece::Kind::X, a, b, e}; }

// Moves k_l^c to the far left of the current word, multiplying in the crossing
// scalar q^{-c e S / 2} per x-letter and q^{+c e S / 2} per y-letter, where S
// is the eigenvalue of ad H_l on that letter.
void absorb_k(EngineState& st, int l, const Rat& c) {
    if (c == Rat(0)) return;
    Rat exp(0);
    for (const auto& letter : st.word) {
        const Rat contrib = c * Rat(letter.e) * Rat(cartan_interval(l, letter.a, letter.b));
        exp += letter.is_x ? -contrib : contrib;
    }
    if (exp != Rat(0)) st.coeff = qs_mul(st.coeff, QScalar::q_power(exp / 2));
    auto it = st.kexp.find(l);
    if (it == st.kexp.end()) {
        st.kexp.emplace(l, c);
    } else {
        it->second += c;
        if (it->second == Rat(0)) st.kexp.erase(it);
    }
}

EngineState make_successor(const EngineState& st, size_t p, const QScalar& factor,
                           const std::vector<Piece>& pieces) {
    EngineState next;
    next.coeff = qs_mul(st.coeff, factor);
    next.kexp = st.kexp;
    next.word.assign(st.word.begin(), st.word.begin() + static_cast<long>(p));
    for (const auto& piece : pieces) {
        if (piece.e == 0) continue;
        if (piece.kind == Piece::Kind::K) {
            absorb_k(next, piece.a, Rat(piece.e));
        } else {
            next.word.push_back(XYLetter{piece.kind == Piece::Kind::X, piece.a, piece.b, piece.e});
        }
    }
    next.word.insert(next.word.end(), st.word.begin() + static_cast<long>(p) + 2, st.word.end());
    return next;
}

QScalar q_half() { return QScalar::q_power(rat_of(1, 2)); }
QScalar qbar_half() { return QScalar::q_power(rat_of(-1, 2)); }

// Rewrites the out-of-order non-commuting pair at position p into the sum of
// successor states appended to `out`.
void apply_rule(const EngineState& st, size_t p, std::vector<EngineState>& out) {
    const XYLetter l = st.word[p];
    const XYLetter r = st.word[p + 1];
    const long e = l.e;
    const long f = r.e;

    if (l.is_x == r.is_x) {
        const bool as_x = l.is_x;
        auto gl = [&](int a, int b, long n) { return as_x ? px(a, b, n) : py(a, b, n); };
        if (supports_disjoint(l, r) && l.a - r.b == 1) {
            if (r.a == r.b) {
                const int s = r.a;
                out.push_back(make_successor(
                    st, p, qs_pow(qs_q(), e), {gl(s, s, 1), gl(l.a, l.b, e), gl(s, s, f - 1)}));
                out.push_back(make_successor(
                    st, p, qs_neg(qs_mul(q_half(), qint(e))),
                    {gl(s, l.b, 1), gl(l.a, l.b, e - 1), gl(s, s, f - 1)}));
                return;
            }
            if (l.a == l.b) {
                const int j = l.a;
                out.push_back(make_successor(
                    st, p, qs_pow(qs_q(), f), {gl(j, j, e - 1), gl(r.a, r.b, f), gl(j, j, 1)}));
                out.push_back(make_successor(
                    st, p, qs_neg(qs_mul(q_half(), qint(f))),
                    {gl(j, j, e - 1), gl(r.a, r.b, f - 1), gl(r.a, j, 1)}));
                return;
            }
        }
        if (l.a == r.a && r.a == r.b) {
            out.push_back(make_successor(st, p, qs_pow(qs_qbar(), e * f),
                                         {gl(r.a, r.b, f), gl(l.a, l.b, e)}));
            return;
        }
        if (l.b == r.b && l.a == l.b) {
            out.push_back(make_successor(st, p, qs_pow(qs_qbar(), e * f),
                                         {gl(r.a, r.b, f), gl(l.a, l.b, e)}));
            return;
        }
        throw NoApplicableRule("no straightening rule for pair " + letter_str(l) + " " +
                               letter_str(r));
    }

    const QScalar qmqbar = qs_sub(qs_q(), qs_qbar());
    if (l.a == l.b && r.a == r.b && l.a == r.a) {
        const int i = l.a;
        out.push_back(
            make_successor(st, p, qs_one(), {px(i, i, e - 1), py(i, i, f), px(i, i, 1)}));
        const QScalar base = qs_div(qint(f), qmqbar);
        out.push_back(make_successor(st, p,
                                     qs_mul(base, QScalar::q_power(Rat(f - 1))),
                                     {px(i, i, e - 1), pk(i, 2), py(i, i, f - 1)}));
        out.push_back(make_successor(st, p,
                                     qs_neg(qs_mul(base, QScalar::q_power(Rat(1 - f)))),
                                     {px(i, i, e - 1), pk(i, -2), py(i, i, f - 1)}));
        return;
    }
    if (l.a == l.b && l.a == r.a) {
        const int c = r.a;
        const int d = r.b;
        out.push_back(
            make_successor(st, p, qs_one(), {px(c, c, e - 1), py(c, d, f), px(c, c, 1)}));
        out.push_back(make_successor(
            st, p, qs_mul(qbar_half(), qint(f)),
            {px(c, c, e - 1), pk(c, 2), py(c, d, f - 1), py(c + 1, d, 1)}));
        return;
    }
    if (l.a == l.b && l.a == r.b) {
        const int c = r.a;
        const int d = r.b;
        out.push_back(
            make_successor(st, p, qs_one(), {px(d, d, e - 1), py(c, d, f), px(d, d, 1)}));
        out.push_back(make_successor(
            st, p,
            qs_neg(qs_mul(qs_mul(q_half(), QScalar::q_power(Rat(1 - f))), qint(f))),
            {px(d, d, e - 1), pk(d, -2), py(c, d - 1, 1), py(c, d, f - 1)}));
        return;
    }
    if (r.a == r.b && r.a == l.a) {
        const int a = l.a;
        const int b = l.b;
        out.push_back(
            make_successor(st, p, qs_one(), {py(a, a, 1), px(a, b, e), py(a, a, f - 1)}));
        out.push_back(make_successor(
            st, p, qs_neg(qs_mul(qbar_half(), qint(e))),
            {pk(a, -2), px(a, b, e - 1), px(a + 1, b, 1), py(a, a, f - 1)}));
        return;
    }
    if (r.a == r.b && r.a == l.b) {
        const int a = l.a;
        const int b = l.b;
        out.push_back(
            make_successor(st, p, qs_one(), {py(b, b, 1), px(a, b, e), py(b, b, f - 1)}));
        out.push_back(make_successor(
            st, p, qs_mul(qs_mul(q_half(), QScalar::q_power(Rat(1 - e))), qint(e)),
            {pk(b, 2), px(a, b - 1, 1), px(a, b, e - 1), py(b, b, f - 1)}));
        return;
    }
    throw NoApplicableRule("no straightening rule for pair " + letter_str(l) + " " +
                           letter_str(r));
}

constexpr long kRewriteBudget = 500000;

}  // namespace

std::vector<EngineState> straighten_state(int rank, EngineState start, long trunc) {
    for (const auto& l : start.word) {
        check_gen(GenIndex{l.is_x ? GKind::X : GKind::Y, l.a, l.b}, rank);
        if (l.e <= 0) throw std::domain_error("straighten_state: letter exponent must be positive");
    }
    for (const auto& [i, c] : start.kexp) check_gen(gen_k(i), rank);

    std::vector<EngineState> done;
    std::vector<EngineState> work;
    work.push_back(std::move(start));
    long budget = kRewriteBudget;
    while (!work.empty()) {
        if (--budget < 0) throw std::runtime_error("straighten_state: rewrite budget exhausted");
        EngineState st = std::move(work.back());
        work.pop_back();
        if (st.coeff.is_zero()) continue;
        if (trunc >= 0 && state_width(st) > trunc) continue;
        normalize_free(st);
        size_t p = 0;
        bool canonical = true;
        for (; p + 1 < st.word.size(); ++p) {
            if (out_of_order(st.word[p], st.word[p + 1])) {
                canonical = false;
                break;
            }
        }
        if (canonical) {
            std::erase_if(st.kexp, [](const auto& kv) { return kv.second == Rat(0); });
            done.push_back(std::move(st));
            continue;
        }
        apply_rule(st, p, work);
    }
    return done;
}

namespace {

Element states_to_element(int rank, const std::vector<EngineState>& states, long trunc) {
    Element out = el_zero(rank, 1);
    out.trunc = trunc;
    for (const auto& st : states) {
        Term t;
        t.coeff = st.coeff;
        t.slots.resize(1);
        PBWMonomial& m = t.slots[0];
        m.kExp = st.kexp;
        for (const auto& l : st.word) {
            auto& dst = l.is_x ? m.xExp : m.yExp;
            dst[{l.a, l.b}] += l.e;
        }
        out.terms.push_back(std::move(t));
    }
    return el_canonical(std::move(out));
}

}  // namespace

Element straighten_word(int rank, const std::vector<WordEntry>& word, long trunc) {
    EngineState st;
    st.coeff = qs_one();
    for (const auto& [g, e] : word) {
        check_gen(g, rank);
        if (g.kind == GKind::K) {
            absorb_k(st, g.a, Rat(e));
            continue;
        }
        if (e < 0) throw std::domain_error("straighten_word: negative x/y exponent");
        if (e == 0) continue;
        st.word.push_back(XYLetter{g.kind == GKind::X, g.a, g.b, e});
    }
    return states_to_element(rank, straighten_state(rank, std::move(st), trunc), trunc);
}

Element hbracket(int i, long c, int rank) {
    check_gen(gen_k(i), rank);
    const QScalar qmqbar = qs_sub(qs_q(), qs_qbar());
    Element out = el_zero(rank, 1);
    Term plus;
    plus.coeff = qs_div(QScalar::q_power(Rat(c)), qmqbar);
    plus.slots.resize(1);
    plus.slots[0].kExp[i] = Rat(2);
    Term minus;
    minus.coeff = qs_neg(qs_div(QScalar::q_power(Rat(-c)), qmqbar));
    minus.slots.resize(1);
    minus.slots[0].kExp[i] = Rat(-2);
    out.terms.push_back(std::move(plus));
    out.terms.push_back(std::move(minus));
    return el_canonical(std::move(out));
}

Element hbinom(long c, long i, int rank) {
    if (i < 0) throw std::domain_error("hbinom: negative depth");
    Element out = el_one(rank);
    for (long r = 0; r < i; ++r) out = el_mul(out, hbracket(1, c - r, rank));
    return el_scale(out, qs_inv(qfact(i)));
}

Element straighten_xa_yb(long a, long b) {
    if (a < 0 || b < 0) throw std::domain_error("straighten_xa_yb: negative exponent");
    Element out = el_zero(1, 1);
    for (long i = 0; i <= std::min(a, b); ++i) {
        QScalar falling = qs_one();
        for (long r = 0; r < i; ++r)
            falling = qs_mul(falling, qs_mul(qint(a - r), qint(b - r)));
        Element tail = el_one(1);
        {
            Term t;
            t.coeff = qs_one();
            t.slots.resize(1);
            if (b - i > 0) t.slots[0].yExp[{1, 1}] = b - i;
            if (a - i > 0) t.slots[0].xExp[{1, 1}] = a - i;
            tail.terms[0] = std::move(t);
        }
        out = el_add(out, el_scale(el_mul(hbinom(b - a, i, 1), tail), falling));
    }
    return out;
}

namespace {

// ad-eigenvalue of H_i on the slot monomial (k-powers contribute nothing).
long slot_weight(const PBWMonomial& m, int i) {
    long w = 0;
    for (const auto& [iv, e] : m.xExp) w += e * cartan_interval(i, iv.first, iv.second);
    for (const auto& [iv, e] : m.yExp) w -= e * cartan_interval(i, iv.first, iv.second);
    return w;
}

}  // namespace

Element el_mul(const Element& a, const Element& b) {
    if (a.rank != b.rank || a.nslots != b.nslots)
        throw std::domain_error("element shapes differ (rank or slot count)");
    long trunc = -1;
    if (a.trunc >= 0 || b.trunc >= 0)
        trunc = (a.trunc < 0)   ? b.trunc
                : (b.trunc < 0) ? a.trunc
                                : std::min(a.trunc, b.trunc);
    Element out = el_zero(a.rank, a.nslots);
    out.trunc = trunc;

    for (const auto& ta : a.terms) {
        for (const auto& tb : b.terms) {
            if (trunc >= 0 && x_width(ta) + x_width(tb) > trunc) continue;

            // Moving tb's exponential prefactor left past ta's monomials
            // shifts each H_u by -w_u, which splits off k-powers and a scalar.
            std::map<HVar, Rat> lin;
            Rat quad_const(0);
            for (const auto& [key, c] : tb.quad.coeff) {
                const auto& [u, v] = key;
                const Rat wu(slot_weight(ta.slots[static_cast<size_t>(u.first)], u.second));
                const Rat wv(slot_weight(ta.slots[static_cast<size_t>(v.first)], v.second));
                if (u == v) {
                    lin[u] += 2 * c * wu;
                    quad_const += c * wu * wu;
                } else {
                    lin[u] += c * wv;
                    lin[v] += c * wu;
                    quad_const += c * wu * wv;
                }
            }

            QScalar scalar = qs_mul(ta.coeff, tb.coeff);
            if (quad_const != Rat(0))
                scalar = qs_mul(scalar, QScalar::q_power(quad_const / 2));

            std::vector<std::vector<EngineState>> per_slot(static_cast<size_t>(a.nslots));
            bool dead = false;
            for (int s = 0; s < a.nslots && !dead; ++s) {
                EngineState st;
                st.coeff = qs_one();
                for (const auto& [u, c] : lin) {
                    if (u.first != s || c == Rat(0)) continue;
                    st.kexp[u.second] -= c;
                }
                for (const auto& [i, c] : ta.slots[static_cast<size_t>(s)].kExp) {
                    st.kexp[i] += c;
                }
                std::erase_if(st.kexp, [](const auto& kv) { return kv.second == Rat(0); });
                const PBWMonomial& ma = ta.slots[static_cast<size_t>(s)];
                const PBWMonomial& mb = tb.slots[static_cast<size_t>(s)];
                for (const auto& [iv, e] : ma.yExp)
                    st.word.push_back(XYLetter{false, iv.first, iv.second, e});
                for (const auto& [iv, e] : ma.xExp)
                    st.word.push_back(XYLetter{true, iv.first, iv.second, e});
                for (const auto& [i, c] : mb.kExp) absorb_k(st, i, c);
                for (const auto& [iv, e] : mb.yExp)
                    st.word.push_back(XYLetter{false, iv.first, iv.second, e});
                for (const auto& [iv, e] : mb.xExp)
                    st.word.push_back(XYLetter{true, iv.first, iv.second, e});
                per_slot[static_cast<size_t>(s)] = straighten_state(a.rank, std::move(st), trunc);
                dead = per_slot[static_cast<size_t>(s)].empty();
            }
            if (dead) continue;

            const QuadForm quad = quad_add(ta.quad, tb.quad);
            std::vector<size_t> pick(static_cast<size_t>(a.nslots), 0);
            while (true) {
                Term t;
                t.coeff = scalar;
                t.quad = quad;
                t.slots.resize(static_cast<size_t>(a.nslots));
                for (int s = 0; s < a.nslots; ++s) {
                    const EngineState& st = per_slot[static_cast<size_t>(s)][pick[static_cast<size_t>(s)]];
                    t.coeff = qs_mul(t.coeff, st.coeff);
                    PBWMonomial& m = t.slots[static_cast<size_t>(s)];
                    m.kExp = st.kexp;
                    for (const auto& l : st.word) {
                        auto& dst = l.is_x ? m.xExp : m.yExp;
                        dst[{l.a, l.b}] += l.e;
                    }
                }
                out.terms.push_back(std::move(t));
                int s = 0;
                for (; s < a.nslots; ++s) {
                    size_t& idx = pick[static_cast<size_t>(s)];
                    if (++idx < per_slot[static_cast<size_t>(s)].size()) break;
                    idx = 0;
                }
                if (s == a.nslots) break;
            }
        }
    }
    out = el_canonical(std::move(out));
    if (trunc >= 0)
        std::erase_if(out.terms, [&](const Term& t) { return x_width(t) > trunc; });
    return out;
}

Element el_pow(const Element& a, long n) {
    if (n < 0) throw std::domain_error("el_pow: negative exponent");
    Element out = el_one(a.rank, a.nslots);
    out.trunc = a.trunc;
    for (long i = 0; i < n; ++i) out = el_mul(out, a);
    return out;
}

Element commute_past_tensor_prefactor(int rank, const GenIndex& g, long m, int slot,
                                      const QuadForm& quad, int nslots) {
    check_gen(g, rank);
    if (slot < 0 || slot >= nslots)
        throw std::domain_error("commute_past_tensor_prefactor: slot out of range");

    std::map<HVar, Rat> lin;
    Rat quad_const(0);
    auto weight = [&](const HVar& u) -> Rat {
        if (u.first != slot || g.kind == GKind::K) return Rat(0);
        const long s = cartan_interval(u.second, g.a, g.b);
        return Rat(g.kind == GKind::X ? m * s : -m * s);
    };
    for (const auto& [key, c] : quad.coeff) {
        const auto& [u, v] = key;
        if (u.first < 0 || u.first >= nslots || v.first < 0 || v.first >= nslots)
            throw std::domain_error("commute_past_tensor_prefactor: slot out of range");
        const Rat wu = weight(u);
        const Rat wv = weight(v);
        if (u == v) {
            lin[u] += 2 * c * wu;
            quad_const += c * wu * wu;
        } else {
            lin[u] += c * wv;
            lin[v] += c * wu;
            quad_const += c * wu * wv;
        }
    }

    Element out = el_one(rank, nslots);
    Term& t = out.terms[0];
    if (quad_const != Rat(0)) t.coeff = QScalar::q_power(quad_const / 2);
    for (const auto& [u, c] : lin) {
        if (c == Rat(0)) continue;
        t.slots[static_cast<size_t>(u.first)].kExp[u.second] -= c;
    }
    PBWMonomial& target = t.slots[static_cast<size_t>(slot)];
    if (m != 0) {
        switch (g.kind) {
            case GKind::K: target.kExp[g.a] += Rat(m); break;
            case GKind::X: target.xExp[{g.a, g.b}] += m; break;
            case GKind::Y: target.yExp[{g.a, g.b}] += m; break;
        }
    }
    std::erase_if(target.kExp, [](const auto& kv) { return kv.second == Rat(0); });
    return out;
}

std::vector<SimpleWord> interval_expand(int i, int j, bool as_y) {
    if (i < 1 || j < i) throw std::domain_error("interval_expand: bad interval");
    if (i == j) return {SimpleWord{qs_one(), {i}}};
    std::vector<SimpleWord> inner = interval_expand(i + 1, j, as_y);
    std::vector<SimpleWord> out;
    out.reserve(2 * inner.size());
    for (const auto& w : inner) {
        SimpleWord left;
        left.coeff = qs_mul(q_half(), w.coeff);
        left.letters.push_back(i);
        left.letters.insert(left.letters.end(), w.letters.begin(), w.letters.end());
        out.push_back(std::move(left));
        SimpleWord right;
        right.coeff = qs_neg(qs_mul(qbar_half(), w.coeff));
        right.letters = w.letters;
        right.letters.push_back(i);
        out.push_back(std::move(right));
    }
    return out;
}

std::vector<OrientationTerm> orientation_expand(int i, int j) {
    if (i < 1 || j < i) throw std::domain_error("orientation_expand: bad interval");
    const int n = j - i;
    std::vector<OrientationTerm> out;
    out.reserve(1u << n);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        OrientationTerm t;
        t.mask = mask;
        const int lefts = std::popcount(mask);
        t.coeff = QScalar::q_power(rat_of(n - 2 * lefts, 2));
        if (lefts % 2 != 0) t.coeff = qs_neg(t.coeff);
        t.letters = {j};
        size_t prev = 0;
        for (int s = j - 1; s >= i; --s) {
            const bool arrow_left = (mask >> (s - i)) & 1u;
            if (arrow_left) {
                t.letters.insert(t.letters.begin() + static_cast<long>(prev) + 1, s);
                prev = prev + 1;
            } else {
                t.letters.insert(t.letters.begin(), s);
                prev = 0;
            }
        }
        out.push_back(std::move(t));
    }
    return out;
}

namespace {

// Lexicographic normal form under the exact commutations x_u x_v = x_v x_u,
// |u - v| >= 2; adjacent indices are left untouched.
std::vector<int> trace_normal(std::vector<int> w) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (size_t p = 0; p + 1 < w.size(); ++p) {
            if (w[p] > w[p + 1] + 1) {
                std::swap(w[p], w[p + 1]);
                changed = true;
            }
        }
    }
    return w;
}

void trace_accumulate(std::map<std::vector<int>, QScalar>& acc, const std::vector<int>& w,
                      const QScalar& c) {
    auto key = trace_normal(w);
    auto it = acc.find(key);
    if (it == acc.end())
        acc.emplace(std::move(key), c);
    else
        it->second = qs_add(it->second, c);
}

}  // namespace

bool splitting_check(int i, int s, int j) {
    if (i < 1 || s < i || j <= s) throw std::domain_error("splitting_check: need i <= s < j");
    std::map<std::vector<int>, QScalar> acc;
    for (const auto& w : interval_expand(i, j)) trace_accumulate(acc, w.letters, w.coeff);
    const std::vector<SimpleWord> head = interval_expand(i, s);
    const std::vector<SimpleWord> tail = interval_expand(s + 1, j);
    for (const auto& wh : head) {
        for (const auto& wt : tail) {
            const QScalar c = qs_mul(wh.coeff, wt.coeff);
            std::vector<int> fwd = wh.letters;
            fwd.insert(fwd.end(), wt.letters.begin(), wt.letters.end());
            trace_accumulate(acc, fwd, qs_neg(qs_mul(q_half(), c)));
            std::vector<int> rev = wt.letters;
            rev.insert(rev.end(), wh.letters.begin(), wh.letters.end());
            trace_accumulate(acc, rev, qs_mul(qbar_half(), c));
        }
    }
    for (const auto& [w, c] : acc)
        if (!c.is_zero()) return false;
    return true;
}

}  // namespace qpbw
