#include "qpbw/hopf.hpp"

#include "qpbw/straighten.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace qpbw {

namespace {

void check_slot(const Element& e, int s, const char* who) {
    if (s < 0 || s >= e.nslots) throw std::domain_error(std::string(who) + ": slot out of range");
}

// ad-eigenvalue of H_i on the slot monomial (k-powers contribute nothing).
long slot_weight(const PBWMonomial& m, int i) {
    long w = 0;
    for (const auto& [iv, e] : m.xExp) w += e * cartan_interval(i, iv.first, iv.second);
    for (const auto& [iv, e] : m.yExp) w -= e * cartan_interval(i, iv.first, iv.second);
    return w;
}

// Coproduct of one x/y generator at exponent one, landing in slots (s, s+1)
// of an nslots-wide tensor power.  Composites follow the interval recursion.
Element coproduct_letter(int rank, const GenIndex& g, int nslots, int s) {
    check_gen(g, rank);
    if (g.a == g.b) {
        Element out = el_zero(rank, nslots);
        Term t1;
        t1.coeff = qs_one();
        t1.slots.assign(nslots, PBWMonomial{});
        Term t2 = t1;
        Interval iv{g.a, g.a};
        if (g.kind == GKind::X) {
            t1.slots[s].xExp[iv] = 1;
            t2.slots[s + 1].xExp[iv] = 1;
        } else {
            t1.slots[s].yExp[iv] = 1;
            t2.slots[s + 1].yExp[iv] = 1;
        }
        t1.slots[s + 1].kExp[g.a] = Rat(1);
        t2.slots[s].kExp[g.a] = Rat(-1);
        out.terms = {t1, t2};
        return out;
    }
    GenIndex head{g.kind, g.a, g.a};
    GenIndex tail{g.kind, g.a + 1, g.b};
    Element dh = coproduct_letter(rank, head, nslots, s);
    Element dt = coproduct_letter(rank, tail, nslots, s);
    Element fwd = el_scale(el_mul(dh, dt), QScalar::q_power(rat_of(1, 2)));
    Element bwd = el_scale(el_mul(dt, dh), QScalar::q_power(rat_of(-1, 2)));
    return el_sub(fwd, bwd);
}

// Antipode of one x/y generator at exponent one, as a single-slot element:
// expand into simple letters, reverse, map x_i -> -q x_i (y_i -> -qbar y_i),
// and re-straighten.
Element letter_antipode(int rank, bool is_x, int a, int b) {
    static std::map<std::tuple<int, bool, int, int>, Element> cache;
    auto key = std::make_tuple(rank, is_x, a, b);
    auto hit = cache.find(key);
    if (hit != cache.end()) return hit->second;

    Element out = el_zero(rank, 1);
    for (const SimpleWord& w : interval_expand(a, b, !is_x)) {
        std::vector<WordEntry> rev;
        rev.reserve(w.letters.size());
        for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
            rev.push_back({is_x ? gen_x(*it) : gen_y(*it), 1});
        long len = static_cast<long>(w.letters.size());
        QScalar scale = QScalar::q_power(Rat(is_x ? len : -len));
        if (len % 2 != 0) scale = qs_neg(scale);
        out = el_add(out, el_scale(straighten_word(rank, rev), w.coeff * scale));
    }
    cache[key] = out;
    return out;
}

}  // namespace

Element insert_slot(const Element& e, int pos) {
    if (pos < 0 || pos > e.nslots) throw std::domain_error("insert_slot: position out of range");
    Element out;
    out.rank = e.rank;
    out.nslots = e.nslots + 1;
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff;
        for (const auto& [key, c] : t.quad.coeff) {
            HVar u = key.first;
            HVar v = key.second;
            if (u.first >= pos) ++u.first;
            if (v.first >= pos) ++v.first;
            nt.quad.add(u, v, c);
        }
        nt.slots = t.slots;
        nt.slots.insert(nt.slots.begin() + pos, PBWMonomial{});
        out.terms.push_back(std::move(nt));
    }
    return el_canonical(std::move(out));
}

Element swap_slots(const Element& e, int s) {
    if (s < 0 || s + 1 >= e.nslots) throw std::domain_error("swap_slots: slot out of range");
    Element out;
    out.rank = e.rank;
    out.nslots = e.nslots;
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        Term nt;
        nt.coeff = t.coeff;
        for (const auto& [key, c] : t.quad.coeff) {
            HVar u = key.first;
            HVar v = key.second;
            auto flip = [s](HVar& w) {
                if (w.first == s)
                    w.first = s + 1;
                else if (w.first == s + 1)
                    w.first = s;
            };
            flip(u);
            flip(v);
            nt.quad.add(u, v, c);
        }
        nt.slots = t.slots;
        std::swap(nt.slots[s], nt.slots[s + 1]);
        out.terms.push_back(std::move(nt));
    }
    return el_canonical(std::move(out));
}

Element mul_slots(const Element& e, int s) {
    if (s < 0 || s + 1 >= e.nslots) throw std::domain_error("mul_slots: slot out of range");
    Element out = el_zero(e.rank, e.nslots - 1);
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        // Joining the slots lands the slot s+1 exponential legs behind the
        // slot s monomial, so each one shifts by -w before relabelling, which
        // splits off k-powers and a scalar exactly as in el_mul.
        QuadForm nq;
        std::map<HVar, Rat> lin;
        Rat quad_const(0);
        for (const auto& [key, c] : t.quad.coeff) {
            HVar u = key.first;
            HVar v = key.second;
            const bool su = u.first == s + 1;
            const bool sv = v.first == s + 1;
            const Rat wu = su ? Rat(slot_weight(t.slots[static_cast<size_t>(s)], u.second)) : Rat(0);
            const Rat wv = sv ? Rat(slot_weight(t.slots[static_cast<size_t>(s)], v.second)) : Rat(0);
            auto merge = [s](HVar& w) {
                if (w.first == s + 1)
                    w.first = s;
                else if (w.first > s + 1)
                    --w.first;
            };
            merge(u);
            merge(v);
            nq.add(u, v, c);
            if (key.first == key.second) {
                lin[u] += 2 * c * wu;
                quad_const += c * wu * wu;
            } else {
                lin[u] += c * wv;
                lin[v] += c * wu;
                quad_const += c * wu * wv;
            }
        }
        Element a = el_one(e.rank, 1);
        a.trunc = e.trunc;
        a.terms[0].slots[0] = t.slots[s];
        Element b = el_one(e.rank, 1);
        b.terms[0].slots[0] = t.slots[s + 1];
        Element prod = el_mul(a, b);
        QScalar scalar = t.coeff;
        if (quad_const != Rat(0)) scalar = qs_mul(scalar, QScalar::q_power(quad_const / 2));
        for (const Term& pt : prod.terms) {
            Term nt;
            nt.coeff = scalar * pt.coeff;
            nt.quad = nq;
            nt.slots.reserve(e.nslots - 1);
            for (int j = 0; j < e.nslots; ++j) {
                if (j == s + 1) continue;
                nt.slots.push_back(j == s ? pt.slots[0] : t.slots[j]);
            }
            for (const auto& [hv, c] : lin) {
                if (c == Rat(0)) continue;
                PBWMonomial& m = nt.slots[static_cast<size_t>(hv.first)];
                m.kExp[hv.second] -= c;
                std::erase_if(m.kExp, [](const auto& kv) { return kv.second == Rat(0); });
            }
            out.terms.push_back(std::move(nt));
        }
    }
    return el_canonical(std::move(out));
}

Element coproduct_slot(const Element& e, int s) {
    check_slot(e, s, "coproduct_slot");
    Element out = el_zero(e.rank, e.nslots + 1);
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        Term base;
        base.coeff = t.coeff;
        for (const auto& [key, c] : t.quad.coeff) {
            auto expand = [s](HVar w) {
                std::vector<HVar> parts;
                if (w.first < s)
                    parts.push_back(w);
                else if (w.first == s) {
                    parts.push_back({s, w.second});
                    parts.push_back({s + 1, w.second});
                } else
                    parts.push_back({w.first + 1, w.second});
                return parts;
            };
            for (const HVar& u : expand(key.first))
                for (const HVar& v : expand(key.second)) base.quad.add(u, v, c);
        }
        base.slots.reserve(e.nslots + 1);
        for (int j = 0; j < e.nslots; ++j) {
            if (j == s) base.slots.push_back(PBWMonomial{});
            base.slots.push_back(j == s ? PBWMonomial{} : t.slots[j]);
        }
        Element acc;
        acc.rank = e.rank;
        acc.nslots = e.nslots + 1;
        acc.trunc = e.trunc;
        acc.terms = {base};

        const PBWMonomial& m = t.slots[s];
        if (!m.kExp.empty()) {
            Element kk = el_one(e.rank, e.nslots + 1);
            for (const auto& [i, c] : m.kExp) {
                kk.terms[0].slots[s].kExp[i] = c;
                kk.terms[0].slots[s + 1].kExp[i] = c;
            }
            acc = el_mul(acc, kk);
        }
        for (const auto& [iv, ex] : m.yExp) {
            GenIndex g{GKind::Y, iv.first, iv.second};
            acc = el_mul(acc, el_pow(coproduct_letter(e.rank, g, e.nslots + 1, s), ex));
        }
        for (const auto& [iv, ex] : m.xExp) {
            GenIndex g{GKind::X, iv.first, iv.second};
            acc = el_mul(acc, el_pow(coproduct_letter(e.rank, g, e.nslots + 1, s), ex));
        }
        out = el_add(out, acc);
    }
    return out;
}

Element coproduct(const Element& e) {
    if (e.nslots != 1) throw std::domain_error("coproduct: single-slot elements only");
    return coproduct_slot(e, 0);
}

Element counit_slot(const Element& e, int s) {
    if (e.nslots < 2) throw std::domain_error("counit_slot: needs at least two slots");
    check_slot(e, s, "counit_slot");
    Element out = el_zero(e.rank, e.nslots - 1);
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        const PBWMonomial& m = t.slots[s];
        if (!m.xExp.empty() || !m.yExp.empty()) continue;
        Term nt;
        nt.coeff = t.coeff;
        for (const auto& [key, c] : t.quad.coeff) {
            HVar u = key.first;
            HVar v = key.second;
            if (u.first == s || v.first == s) continue;
            if (u.first > s) --u.first;
            if (v.first > s) --v.first;
            nt.quad.add(u, v, c);
        }
        nt.slots.reserve(e.nslots - 1);
        for (int j = 0; j < e.nslots; ++j)
            if (j != s) nt.slots.push_back(t.slots[j]);
        out.terms.push_back(std::move(nt));
    }
    return el_canonical(std::move(out));
}

QScalar counit(const Element& e) {
    if (e.nslots != 1) throw std::domain_error("counit: single-slot elements only");
    QScalar acc = qs_zero();
    for (const Term& t : e.terms)
        if (t.slots[0].xExp.empty() && t.slots[0].yExp.empty()) acc = qs_add(acc, t.coeff);
    return acc;
}

Element antipode_slot(const Element& e, int s) {
    check_slot(e, s, "antipode_slot");
    Element out = el_zero(e.rank, e.nslots);
    out.trunc = e.trunc;
    for (const Term& t : e.terms) {
        // Reversing slot s hands its exponential legs a sign flip and moves
        // them to the right of the monomial; commuting them back shifts each
        // by the slot weight, which splits off k-powers and a scalar.
        QuadForm nq;
        std::map<HVar, Rat> kdelta;
        Rat quad_const(0);
        for (const auto& [key, c] : t.quad.coeff) {
            const HVar& u = key.first;
            const HVar& v = key.second;
            const bool lu = u.first == s;
            const bool lv = v.first == s;
            nq.add(u, v, lu != lv ? Rat(-c) : c);
            const Rat wu = lu ? Rat(slot_weight(t.slots[static_cast<size_t>(s)], u.second)) : Rat(0);
            const Rat wv = lv ? Rat(slot_weight(t.slots[static_cast<size_t>(s)], v.second)) : Rat(0);
            if (lu && lv) {
                if (u == v) {
                    kdelta[u] -= 2 * c * wu;
                    quad_const += c * wu * wu;
                } else {
                    kdelta[u] -= c * wv;
                    kdelta[v] -= c * wu;
                    quad_const += c * wu * wv;
                }
            } else if (lu) {
                kdelta[v] += c * wu;
            } else if (lv) {
                kdelta[u] += c * wv;
            }
        }
        const PBWMonomial& m = t.slots[s];
        Element acc = el_one(e.rank, 1);
        acc.trunc = e.trunc;
        for (auto it = m.xExp.rbegin(); it != m.xExp.rend(); ++it)
            acc = el_mul(acc,
                         el_pow(letter_antipode(e.rank, true, it->first.first, it->first.second),
                                it->second));
        for (auto it = m.yExp.rbegin(); it != m.yExp.rend(); ++it)
            acc = el_mul(acc,
                         el_pow(letter_antipode(e.rank, false, it->first.first, it->first.second),
                                it->second));
        if (!m.kExp.empty()) {
            Element kk = el_one(e.rank, 1);
            for (const auto& [i, c] : m.kExp) kk.terms[0].slots[0].kExp[i] = -c;
            acc = el_mul(acc, kk);
        }
        QScalar scalar = t.coeff;
        if (quad_const != Rat(0)) scalar = qs_mul(scalar, QScalar::q_power(quad_const / 2));
        for (const Term& at : acc.terms) {
            Term nt;
            nt.coeff = scalar * at.coeff;
            nt.quad = nq;
            nt.slots = t.slots;
            nt.slots[s] = at.slots[0];
            for (const auto& [hv, c] : kdelta) {
                if (c == Rat(0)) continue;
                PBWMonomial& km = nt.slots[static_cast<size_t>(hv.first)];
                km.kExp[hv.second] += c;
                std::erase_if(km.kExp, [](const auto& kv) { return kv.second == Rat(0); });
            }
            out.terms.push_back(std::move(nt));
        }
    }
    return el_canonical(std::move(out));
}

Element antipode(const Element& e) {
    if (e.nslots != 1) throw std::domain_error("antipode: single-slot elements only");
    return antipode_slot(e, 0);
}

}  // namespace qpbw
