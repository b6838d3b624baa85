#pragma once

#include "qpbw/generators.hpp"
#include "qpbw/qscalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpbw {

using Interval = std::pair<int, int>;

// One PBW-ordered factor: k-powers, then y-intervals, then x-intervals.
struct PBWMonomial {
    std::map<int, Rat> kExp;
    std::map<Interval, long> yExp;
    std::map<Interval, long> xExp;

    bool operator==(const PBWMonomial&) const = default;
    bool operator<(const PBWMonomial& o) const;
    bool is_one() const { return kExp.empty() && yExp.empty() && xExp.empty(); }
};

// Slot-indexed H variable inside an exponential prefactor.
using HVar = std::pair<int, int>;  // (slot, rank-index)

// exp((h/4) * sum c_{uv} H_u H_v); keys store u <= v, diagonal keys mean c * H_u^2.
struct QuadForm {
    std::map<std::pair<HVar, HVar>, Rat> coeff;

    bool operator==(const QuadForm&) const = default;
    bool operator<(const QuadForm& o) const { return coeff < o.coeff; }
    bool is_trivial() const { return coeff.empty(); }

    void add(HVar u, HVar v, const Rat& c);
};

QuadForm quad_add(const QuadForm& a, const QuadForm& b);

struct Term {
    QScalar coeff;
    QuadForm quad;
    std::vector<PBWMonomial> slots;
};

// Canonical sum of terms; trunc >= 0 caps the total x-interval width per term.
struct Element {
    int rank = 1;
    int nslots = 1;
    long trunc = -1;
    std::vector<Term> terms;
};

// Total width sum over x-intervals (each x_{a,b}^e contributes e*(b-a+1)).
long x_width(const PBWMonomial& m);
long x_width(const Term& t);

Element el_zero(int rank, int nslots = 1);
Element el_one(int rank, int nslots = 1);
Element el_scalar(int rank, const QScalar& c, int nslots = 1);
// Single generator (exponent e) placed in the given slot; K generators take rational exponents.
Element el_gen(int rank, const GenIndex& g, long e = 1, int slot = 0, int nslots = 1);
Element el_k_power(int rank, int i, const Rat& e, int slot = 0, int nslots = 1);
Element el_prefactor(int rank, const QuadForm& quad, int nslots = 1);

Element el_canonical(Element e);
Element el_add(const Element& a, const Element& b);
Element el_sub(const Element& a, const Element& b);
Element el_neg(const Element& a);
Element el_scale(const Element& a, const QScalar& c);
Element el_truncate(Element a, long trunc);

bool el_eq(const Element& a, const Element& b);
bool el_is_zero(const Element& a);

std::string el_render(const Element& e);

}  // namespace qpbw
