#pragma once

#include "qpbw/rational.hpp"

#include <map>
#include <string>

namespace qpbw {

// Finite combination of rational powers of q with rational coefficients,
// stored exponent -> coefficient in ascending exponent order.
// Zero coefficients are never stored.
using LaurentMap = std::map<Rat, Rat>;

// Exact scalar of the ground ring: a quotient num/den of Laurent combinations.
// Canonical form: num and den share no polynomial factor, den has minimal
// exponent 0 and leading coefficient +1.  Every denominator-free value has
// den == {0 -> 1}, so plain Laurent scalars compare field-by-field.
class QScalar {
public:
    QScalar() : den_{{Rat(0), Rat(1)}} {}

    static QScalar from_rat(const Rat& c);
    static QScalar from_int(long c) { return from_rat(Rat(c)); }
    static QScalar q_power(const Rat& e);
    static QScalar monomial(const Rat& c, const Rat& e);
    static QScalar laurent(LaurentMap m);
    static QScalar fraction(LaurentMap num, LaurentMap den);

    const LaurentMap& num() const { return num_; }
    const LaurentMap& den() const { return den_; }

    bool is_zero() const { return num_.empty(); }
    bool is_one() const;
    bool is_laurent() const;
    bool is_rational() const;
    Rat as_rational() const;

    bool operator==(const QScalar& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }
    bool operator<(const QScalar& o) const;

private:
    LaurentMap num_;
    LaurentMap den_;

    friend QScalar qs_add(const QScalar&, const QScalar&);
    friend QScalar qs_mul(const QScalar&, const QScalar&);
    friend QScalar qs_neg(const QScalar&);
    friend QScalar qs_bar(const QScalar&);
    friend QScalar qs_inv(const QScalar&);
};

QScalar qs_add(const QScalar& a, const QScalar& b);
QScalar qs_sub(const QScalar& a, const QScalar& b);
QScalar qs_mul(const QScalar& a, const QScalar& b);
QScalar qs_neg(const QScalar& a);
QScalar qs_bar(const QScalar& a);
QScalar qs_inv(const QScalar& a);
QScalar qs_div(const QScalar& a, const QScalar& b);
QScalar qs_pow(const QScalar& a, long e);

inline QScalar operator+(const QScalar& a, const QScalar& b) { return qs_add(a, b); }
inline QScalar operator-(const QScalar& a, const QScalar& b) { return qs_sub(a, b); }
inline QScalar operator*(const QScalar& a, const QScalar& b) { return qs_mul(a, b); }
inline QScalar operator-(const QScalar& a) { return qs_neg(a); }
inline QScalar& operator+=(QScalar& a, const QScalar& b) { return a = qs_add(a, b); }
inline QScalar& operator-=(QScalar& a, const QScalar& b) { return a = qs_sub(a, b); }
inline QScalar& operator*=(QScalar& a, const QScalar& b) { return a = qs_mul(a, b); }

std::string qs_render(const QScalar& a);
std::string render_laurent(const LaurentMap& m);

inline QScalar qs_zero() { return QScalar(); }
inline QScalar qs_one() { return QScalar::from_int(1); }
inline QScalar qs_q() { return QScalar::q_power(Rat(1)); }
inline QScalar qs_qbar() { return QScalar::q_power(Rat(-1)); }

}  // namespace qpbw
