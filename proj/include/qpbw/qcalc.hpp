#pragma once

#include "qpbw/mpoly.hpp"
#include "qpbw/qscalar.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace qpbw {

// ---- quantum and classical q-integers ----

// Symmetric quantum integer [n] = (q^n - q^-n)/(q - q^-1); [-n] = -[n].
QScalar qint(long n);
// [n]! for n >= 0.
QScalar qfact(long n);
// Quantum binomial [n choose k] = [n][n-1]...[n-k+1]/[k]!; negative n allowed.
QScalar qbinom(long n, long k);

// Classical q-integer (n)_q = (1 - q^n)/(1 - q) for any integer n.
QScalar cint(long n);
// (n)!_q for n >= 0.
QScalar cfact(long n);
// Gaussian binomial; negative upper argument supported (exact Laurent quotient).
QScalar cbinom(long n, long k);

// Exponent rescaling q -> q^r applied to numerator and denominator.
QScalar qs_subst_power(const QScalar& a, const Rat& r);

// ---- q-commuting normal-ordered polynomials ----

// Terms a^i b^j with the reordering rule b*a = swap * (a*b).
struct QCommPoly {
    QScalar swap;
    std::map<std::pair<long, long>, QScalar> terms;

    bool operator==(const QCommPoly& o) const { return swap == o.swap && terms == o.terms; }
};

enum class QVar { a, b };

QCommPoly qcp_const(const QScalar& swap, const QScalar& c);
QCommPoly qcp_var(const QScalar& swap, QVar v, long e = 1);
QCommPoly qcp_add(const QCommPoly& x, const QCommPoly& y);
QCommPoly qcp_mul(const QCommPoly& x, const QCommPoly& y);
QCommPoly qcp_scale(const QCommPoly& x, const QScalar& c);
QCommPoly qcp_truncate(const QCommPoly& x, long maxdeg);

// Sum_{n<=N} p^n/(n)!_q, all terms of total degree > N dropped.
QCommPoly qcp_exp_q(const QCommPoly& p, long N);
// Sum_{n<=N} q^{n(n-1)/2} p^n/[n]!, truncated likewise.
QCommPoly qcp_Exp_q(const QCommPoly& p, long N);

// Single-variable truncations of the two q-exponentials.
QCommPoly qexp_trunc(QVar v, long N, const QScalar& swap);
QCommPoly Exp_trunc(QVar v, long N, const QScalar& swap);

// ---- commuting-symbol identity machinery ----

// Embeds a Laurent scalar with integer exponents as q-powers at symbol q_idx.
MPoly mp_from_laurent(const QScalar& a, int nsyms, int q_idx);

// prod_{i=0}^{n-1} (y + x*q^i) over commuting symbols.
MPoly qn_product(int nsyms, int q_idx, const MPoly& x, const MPoly& y, long n);

// Named identity battery; throws UnknownIdentity for unrecognized names.
bool verify_q_identity(const std::string& name, const std::vector<long>& params);

// ---- brute-force combinatorial oracles ----

// Sum over S_n of q^{inversions}; factorial enumeration, n <= 8.
QScalar inversion_polynomial(long n);
// Sum over r-subsets A of {1..n} of q^{#{(i,j) in A x complement : i > j}}.
QScalar bipartition_inversions(long n, long r);

}  // namespace qpbw
