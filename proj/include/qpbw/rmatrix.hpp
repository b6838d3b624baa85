#pragma once

#include "qpbw/element.hpp"

#include <map>
#include <vector>

namespace qpbw {

// Interval exponent vector m: one nonnegative exponent per interval generator;
// absent keys mean zero and canonical maps never store zero entries.
using MIndex = std::map<Interval, long>;

long mindex_at(const MIndex& m, int a, int b);
// Total x-width sum(m_ab * (b - a + 1)).
long mindex_width(const MIndex& m);
// All exponent vectors over the rank-n intervals with width at most trunc.
std::vector<MIndex> enumerate_exponents(int n, long trunc);

// Root pairing <alpha_{a..b}, alpha_{c..d}> through the Cartan matrix.
long interval_pairing(const Interval& i, const Interval& j);

// Solution of the prefactor design system: kappa * C_n = 2 I_n, explicitly
// kappa_ij = 2 min(i,j) (n + 1 - max(i,j)) / (n + 1).
Rat kappa(int n, int i, int j);
// Variant with min and max swapped; differs from kappa off the diagonal and
// fails the design system, kept to document the discrepancy.
Rat kappa_flipped(int n, int i, int j);
bool kappa_solves_system(int n);

// Coefficient of the grouped product term prod (k_I x_I)^{m_I} (x) prod (kbar_I y_I)^{m_I}.
QScalar alpha_interval(const MIndex& m);
// Coefficient after normal ordering to K(m)X(m) (x) Kbar(m)Y(m): the grouped
// coefficient times the k-crossing powers of qbar.
QScalar alpha_separated(const MIndex& m);

// Recurrences satisfied by alpha_separated, one step in an exponent entry;
// right-hand side q-powers are evaluated at the unshifted m throughout.
bool alpha_recurrence_diagonal(int n, const MIndex& m, int i);
bool alpha_recurrence_general(int n, const MIndex& m, int s, int i);
bool alpha_recurrence_general_chained(int n, const MIndex& m, int s, int i);

// Two-slot universal R-matrix element, truncated at total x-width trunc:
// exp((h/4) sum kappa_ij H_i (x) H_j) sum_m alpha_separated(m) K(m)X(m) (x) Kbar(m)Y(m).
Element r_matrix(int n, long trunc);

}  // namespace qpbw
