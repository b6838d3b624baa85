#include "qpbw/mpoly.hpp"

#include "qpbw/errors.hpp"

#include <sstream>

namespace qpbw {

MPoly mp_const(int nsyms, const Rat& c) {
    MPoly p;
    p.nsyms = nsyms;
    if (c != 0) p.terms.emplace(std::vector<int>(nsyms, 0), c);
    return p;
}

MPoly mp_var(int nsyms, int idx, int power) {
    assert(idx >= 0 && idx < nsyms);
    MPoly p;
    p.nsyms = nsyms;
    std::vector<int> e(nsyms, 0);
    e[idx] = power;
    p.terms.emplace(std::move(e), Rat(1));
    return p;
}

MPoly mp_monomial(int nsyms, std::vector<int> exps, const Rat& c) {
    assert(static_cast<int>(exps.size()) == nsyms);
    MPoly p;
    p.nsyms = nsyms;
    if (c != 0) p.terms.emplace(std::move(exps), c);
    return p;
}

MPoly mp_add(const MPoly& a, const MPoly& b) {
    assert(a.nsyms == b.nsyms);
    MPoly out = a;
    for (const auto& [e, c] : b.terms) {
        auto it = out.terms.find(e);
        if (it == out.terms.end()) {
            out.terms.emplace(e, c);
        } else {
            it->second += c;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

MPoly mp_sub(const MPoly& a, const MPoly& b) { return mp_add(a, mp_neg(b)); }

MPoly mp_mul(const MPoly& a, const MPoly& b) {
    assert(a.nsyms == b.nsyms);
    MPoly out;
    out.nsyms = a.nsyms;
    std::vector<int> e(a.nsyms);
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            for (int i = 0; i < a.nsyms; ++i) e[i] = ea[i] + eb[i];
            Rat c = ca * cb;
            auto it = out.terms.find(e);
            if (it == out.terms.end()) {
                out.terms.emplace(e, c);
            } else {
                it->second += c;
                if (it->second == 0) out.terms.erase(it);
            }
        }
    return out;
}

MPoly mp_neg(const MPoly& a) {
    MPoly out = a;
    for (auto& [e, c] : out.terms) c = -c;
    return out;
}

MPoly mp_scale(const MPoly& a, const Rat& c) {
    if (c == 0) return mp_const(a.nsyms, Rat(0));
    MPoly out = a;
    for (auto& [e, k] : out.terms) k *= c;
    return out;
}

MPoly mp_pow(const MPoly& a, long e) {
    assert(e >= 0);
    MPoly acc = mp_const(a.nsyms, Rat(1));
    MPoly base = a;
    while (e > 0) {
        if (e & 1l) acc = mp_mul(acc, base);
        base = mp_mul(base, base);
        e >>= 1;
    }
    return acc;
}

MPoly mp_divexact(const MPoly& a, const MPoly& b) {
    assert(a.nsyms == b.nsyms);
    if (b.is_zero()) throw std::domain_error("mp_divexact: division by zero");
    MPoly quot;
    quot.nsyms = a.nsyms;
    MPoly rem = a;
    const auto& ltb = *b.terms.rbegin();
    size_t guard = 0;
    while (!rem.is_zero()) {
        if (++guard > 20000)
            throw InexactLeadingDivision("mp_divexact: quotient does not terminate");
        const auto& ltr = *rem.terms.rbegin();
        std::vector<int> e(rem.nsyms);
        for (int i = 0; i < rem.nsyms; ++i) e[i] = ltr.first[i] - ltb.first[i];
        Rat c = ltr.second / ltb.second;
        MPoly t = mp_monomial(rem.nsyms, std::move(e), c);
        quot.terms.insert(*t.terms.begin());
        rem = mp_sub(rem, mp_mul(t, b));
    }
    return quot;
}

std::string mp_render(const MPoly& p, const std::vector<std::string>& syms) {
    assert(static_cast<int>(syms.size()) == p.nsyms);
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms.rbegin(); it != p.terms.rend(); ++it) {
        Rat c = it->second;
        if (first) {
            if (c < 0) { os << "-"; c = -c; }
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        }
        std::ostringstream mono;
        bool any = false;
        for (int i = 0; i < p.nsyms; ++i) {
            int e = it->first[i];
            if (e == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << syms[i];
            if (e != 1) mono << "^" << (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e));
        }
        if (!any) {
            os << rat_num(c);
            if (rat_den(c) != 1) os << "/" << rat_den(c);
        } else {
            if (c != 1) {
                os << rat_num(c);
                if (rat_den(c) != 1) os << "/" << rat_den(c);
                os << "*";
            }
            os << mono.str();
        }
    }
    return os.str();
}

}  // namespace qpbw
