#include "qpbw/element.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qpbw {

bool PBWMonomial::operator<(const PBWMonomial& o) const {
    if (kExp != o.kExp) return kExp < o.kExp;
    if (yExp != o.yExp) return yExp < o.yExp;
    return xExp < o.xExp;
}

void QuadForm::add(HVar u, HVar v, const Rat& c) {
    if (c == Rat(0)) return;
    if (v < u) std::swap(u, v);
    auto it = coeff.find({u, v});
    if (it == coeff.end()) {
        coeff.emplace(std::make_pair(u, v), c);
    } else {
        it->second += c;
        if (it->second == Rat(0)) coeff.erase(it);
    }
}

QuadForm quad_add(const QuadForm& a, const QuadForm& b) {
    QuadForm r = a;
    for (const auto& [key, c] : b.coeff) r.add(key.first, key.second, c);
    return r;
}

long x_width(const PBWMonomial& m) {
    long w = 0;
    for (const auto& [iv, e] : m.xExp) w += e * (iv.second - iv.first + 1);
    return w;
}

long x_width(const Term& t) {
    long w = 0;
    for (const auto& s : t.slots) w += x_width(s);
    return w;
}

Element el_zero(int rank, int nslots) { return Element{rank, nslots, -1, {}}; }

Element el_one(int rank, int nslots) {
    Element e{rank, nslots, -1, {}};
    e.terms.push_back(Term{qs_one(), {}, std::vector<PBWMonomial>(static_cast<size_t>(nslots))});
    return e;
}

Element el_scalar(int rank, const QScalar& c, int nslots) {
    if (c.is_zero()) return el_zero(rank, nslots);
    Element e = el_one(rank, nslots);
    e.terms[0].coeff = c;
    return e;
}

Element el_gen(int rank, const GenIndex& g, long e, int slot, int nslots) {
    check_gen(g, rank);
    if (slot < 0 || slot >= nslots) throw std::domain_error("el_gen: slot out of range");
    if (g.kind != GKind::K && e < 0) throw std::domain_error("el_gen: negative x/y exponent");
    Element r = el_one(rank, nslots);
    if (e == 0) return r;
    PBWMonomial& m = r.terms[0].slots[static_cast<size_t>(slot)];
    switch (g.kind) {
        case GKind::K: m.kExp[g.a] = Rat(e); break;
        case GKind::X: m.xExp[{g.a, g.b}] = e; break;
        case GKind::Y: m.yExp[{g.a, g.b}] = e; break;
    }
    return r;
}

Element el_k_power(int rank, int i, const Rat& e, int slot, int nslots) {
    check_gen(gen_k(i), rank);
    if (slot < 0 || slot >= nslots) throw std::domain_error("el_k_power: slot out of range");
    Element r = el_one(rank, nslots);
    if (e != Rat(0)) r.terms[0].slots[static_cast<size_t>(slot)].kExp[i] = e;
    return r;
}

Element el_prefactor(int rank, const QuadForm& quad, int nslots) {
    for (const auto& [key, c] : quad.coeff) {
        const auto& [u, v] = key;
        if (u.first < 0 || u.first >= nslots || v.first < 0 || v.first >= nslots)
            throw std::domain_error("el_prefactor: slot out of range");
        check_gen(gen_k(u.second), rank);
        check_gen(gen_k(v.second), rank);
    }
    Element r = el_one(rank, nslots);
    r.terms[0].quad = quad;
    return r;
}

Element el_canonical(Element e) {
    std::map<std::pair<QuadForm, std::vector<PBWMonomial>>, QScalar> acc;
    for (auto& t : e.terms) {
        if (t.coeff.is_zero()) continue;
        const std::pair<QuadForm, std::vector<PBWMonomial>> key{t.quad, t.slots};
        auto it = acc.find(key);
        if (it == acc.end())
            acc.emplace(key, t.coeff);
        else
            it->second = qs_add(it->second, t.coeff);
    }
    e.terms.clear();
    for (auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        e.terms.push_back(Term{c, key.first, key.second});
    }
    return e;
}

namespace {

void check_compat(const Element& a, const Element& b) {
    if (a.rank != b.rank || a.nslots != b.nslots)
        throw std::domain_error("element shapes differ (rank or slot count)");
}

long merged_trunc(const Element& a, const Element& b) {
    if (a.trunc < 0) return b.trunc;
    if (b.trunc < 0) return a.trunc;
    return std::min(a.trunc, b.trunc);
}

}  // namespace

Element el_add(const Element& a, const Element& b) {
    check_compat(a, b);
    Element r{a.rank, a.nslots, merged_trunc(a, b), a.terms};
    r.terms.insert(r.terms.end(), b.terms.begin(), b.terms.end());
    r = el_canonical(std::move(r));
    if (r.trunc >= 0) {
        std::erase_if(r.terms, [&](const Term& t) { return x_width(t) > r.trunc; });
    }
    return r;
}

Element el_sub(const Element& a, const Element& b) { return el_add(a, el_neg(b)); }

Element el_neg(const Element& a) { return el_scale(a, qs_neg(qs_one())); }

Element el_scale(const Element& a, const QScalar& c) {
    Element r = a;
    if (c.is_zero()) {
        r.terms.clear();
        return r;
    }
    for (auto& t : r.terms) t.coeff = qs_mul(t.coeff, c);
    return r;
}

Element el_truncate(Element a, long trunc) {
    if (trunc < 0) throw std::domain_error("el_truncate: negative bound");
    a.trunc = (a.trunc < 0) ? trunc : std::min(a.trunc, trunc);
    std::erase_if(a.terms, [&](const Term& t) { return x_width(t) > a.trunc; });
    return a;
}

bool el_eq(const Element& a, const Element& b) {
    if (a.rank != b.rank || a.nslots != b.nslots) return false;
    return el_is_zero(el_sub(a, b));
}

bool el_is_zero(const Element& a) { return el_canonical(a).terms.empty(); }

namespace {

std::string exp_suffix(const Rat& e) {
    if (e == Rat(1)) return "";
    std::ostringstream os;
    if (is_integer(e) && e > Rat(0))
        os << "^" << rat_num(e);
    else
        os << "^(" << e << ")";
    return os.str();
}

std::string exp_suffix(long e) { return exp_suffix(Rat(e)); }

std::string interval_str(const char* name, const Interval& iv) {
    std::ostringstream os;
    os << name << "[" << iv.first;
    if (iv.second != iv.first) os << "," << iv.second;
    os << "]";
    return os.str();
}

std::string hvar_str(const HVar& u, int nslots) {
    std::ostringstream os;
    os << "H[" << u.second << "]";
    if (nslots > 1) os << "@" << u.first;
    return os.str();
}

std::string quad_str(const QuadForm& q, int nslots) {
    std::ostringstream os;
    os << "E(";
    bool first = true;
    for (const auto& [key, c] : q.coeff) {
        if (!first) os << " + ";
        first = false;
        os << c << "*" << hvar_str(key.first, nslots) << "*" << hvar_str(key.second, nslots);
    }
    os << ")";
    return os.str();
}

std::string mono_str(const PBWMonomial& m) {
    if (m.is_one()) return "1";
    std::vector<std::string> parts;
    for (const auto& [i, e] : m.kExp)
        parts.push_back(interval_str("k", {i, i}) + exp_suffix(e));
    for (const auto& [iv, e] : m.yExp) parts.push_back(interval_str("y", iv) + exp_suffix(e));
    for (const auto& [iv, e] : m.xExp) parts.push_back(interval_str("x", iv) + exp_suffix(e));
    std::string out;
    for (size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i];
    }
    return out;
}

std::string coeff_str(const QScalar& c) {
    const std::string s = qs_render(c);
    if (s.find(' ') != std::string::npos || s.find('/') != std::string::npos) return "(" + s + ")";
    return s;
}

}  // namespace

std::string el_render(const Element& e) {
    const Element c = el_canonical(e);
    if (c.terms.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < c.terms.size(); ++t) {
        if (t) out += " + ";
        const Term& term = c.terms[t];
        std::vector<std::string> parts;
        bool slots_one = true;
        for (const auto& s : term.slots) slots_one = slots_one && s.is_one();
        const bool bare = slots_one && term.quad.is_trivial();
        if (!term.coeff.is_one() || bare) parts.push_back(coeff_str(term.coeff));
        if (!term.quad.is_trivial()) parts.push_back(quad_str(term.quad, c.nslots));
        if (!slots_one) {
            std::string slots;
            for (size_t s = 0; s < term.slots.size(); ++s) {
                if (s) slots += " (x) ";
                slots += mono_str(term.slots[s]);
            }
            parts.push_back(slots);
        }
        for (size_t p = 0; p < parts.size(); ++p) {
            if (p) out += "*";
            out += parts[p];
        }
    }
    return out;
}

}  // namespace qpbw
