#pragma once

#include "qpbw/element.hpp"

#include <string>

namespace qpbw {

// Rank one series through x-degree D with the one slot prefactor
// exp(-(h/4)H^2): sum of (-1)^n ((q-qbar)^n/[n]!) qbar^{n(n+3)/2} kbar^{2n}
// y^n x^n over n <= D.
Element u_element(long D);

// The same series assembled from the two slot exponential form: flip the
// slots, apply the antipode to the left factor, multiply the slots together.
Element u_from_rmatrix(long D);

// kbar^2 u, the ribbon series; its n-th coefficient carries (qbar-q)^n and
// the k exponent -2(n+1).
Element v_element(long D);

// Compares two one slot rank one elements through h order N by substituting
// q = e^{h/2}, k = e^{(h/4)H}, exp((h/4)cH^2) termwise and grouping terms by
// their y and x letter content.
bool el_match_hseries(const Element& a, const Element& b, int order);

// S(u) = kbar^4 u compared through h order D.
bool su_check(long D);

// axiom is one of central, square, antipode-fix, counit, coproduct; the
// coproduct axiom is evaluated in the two dimensional module against the
// flipped product of the two slot exponential form.
bool ribbon_axiom_check(const std::string& axiom, long D);

}  // namespace qpbw
