#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpbw/errors.hpp"
#include "qpbw/qcalc.hpp"

#include <random>

using namespace qpbw;

namespace {

// Oracle: [n] as the defining ratio (q^n - q^-n)/(q - q^-1), computed in the fraction field.
QScalar oracle_qint(long n) {
    const QScalar num = qs_sub(QScalar::q_power(Rat(n)), QScalar::q_power(Rat(-n)));
    const QScalar den = qs_sub(qs_q(), qs_qbar());
    return qs_div(num, den);
}

// Oracle: Gaussian binomial by the q-Pascal recurrence B(n,k) = B(n-1,k-1) + q^k B(n-1,k).
QScalar oracle_gauss(long n, long k) {
    if (k < 0 || k > n) return qs_zero();
    if (k == 0 || k == n) return qs_one();
    return qs_add(oracle_gauss(n - 1, k - 1),
                  qs_mul(QScalar::q_power(Rat(k)), oracle_gauss(n - 1, k)));
}

QScalar laurent_from(std::initializer_list<std::pair<long, long>> expcoeff) {
    LaurentMap m;
    for (const auto& [e, c] : expcoeff) m[Rat(e)] = Rat(c);
    return QScalar::laurent(m);
}

}  // namespace

TEST_CASE("quantum integers match the defining ratio and are odd in n") {
    CHECK(qint(0).is_zero());
    CHECK(qint(1) == qs_one());
    CHECK(qint(3) == laurent_from({{2, 1}, {0, 1}, {-2, 1}}));
    for (long n = -9; n <= 9; ++n) CHECK(qint(n) == oracle_qint(n));
    for (long n = 0; n <= 9; ++n) CHECK(qint(-n) == qs_neg(qint(n)));
}

TEST_CASE("quantum factorial and binomial frozen values") {
    CHECK(qfact(0) == qs_one());
    CHECK(qfact(3) == qs_mul(laurent_from({{1, 1}, {-1, 1}}), laurent_from({{2, 1}, {0, 1}, {-2, 1}})));
    CHECK(qbinom(4, 2) == laurent_from({{4, 1}, {2, 1}, {0, 2}, {-2, 1}, {-4, 1}}));
    for (long n = 0; n <= 8; ++n) CHECK(qbinom(n, 0) == qs_one());
    for (long n = 0; n <= 5; ++n)
        for (long k = n + 1; k <= n + 4; ++k) CHECK(qbinom(n, k).is_zero());
}

TEST_CASE("quantum binomial agrees with the factorial ratio") {
    for (long n = 0; n <= 10; ++n)
        for (long k = 0; k <= n; ++k)
            CHECK(qbinom(n, k) == qs_div(qfact(n), qs_mul(qfact(k), qfact(n - k))));
}

TEST_CASE("quantum binomial with negative upper argument reflects") {
    for (long n = 1; n <= 6; ++n)
        for (long k = 0; k <= 5; ++k) {
            const QScalar sign = QScalar::from_int((k % 2 == 0) ? 1 : -1);
            CHECK(qbinom(-n, k) == qs_mul(sign, qbinom(n + k - 1, k)));
        }
}

TEST_CASE("classical q-integers and Gaussian binomials") {
    CHECK(cint(0).is_zero());
    CHECK(cint(3) == laurent_from({{0, 1}, {1, 1}, {2, 1}}));
    CHECK(cint(-1) == qs_neg(qs_qbar()));
    CHECK(cbinom(2, 1) == laurent_from({{0, 1}, {1, 1}}));
    for (long n = 0; n <= 8; ++n) CHECK(cbinom(n, n) == qs_one());
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) CHECK(cbinom(n, k) == oracle_gauss(n, k));
    CHECK(cbinom(-1, 1) == qs_neg(qs_qbar()));
    CHECK(cbinom(-1, 2) == QScalar::q_power(Rat(-3)));
}

TEST_CASE("quantum-to-classical conversion trio") {
    CHECK(qbinom(5, 2) == qs_mul(QScalar::q_power(Rat(-6)), qs_subst_power(cbinom(5, 2), Rat(2))));
    for (long n = 0; n <= 12; ++n) {
        CHECK(verify_q_identity("conversion-qint", {n}));
        CHECK(verify_q_identity("conversion-qfact", {n}));
        for (long k = 0; k <= n; ++k) CHECK(verify_q_identity("conversion-qbinom", {n, k}));
    }
}

TEST_CASE("negative upper Gaussian binomials satisfy the reflection conversion") {
    for (long n = 0; n <= 6; ++n)
        for (long s = 0; s <= 6; ++s) CHECK(verify_q_identity("negative-binomial", {n, s}));
}

TEST_CASE("normal ordering implements the configured swap factor") {
    const QScalar swap = qs_q();
    const QCommPoly a = qcp_var(swap, QVar::a);
    const QCommPoly b = qcp_var(swap, QVar::b);
    CHECK(qcp_mul(b, a) == qcp_scale(qcp_mul(a, b), swap));

    const QCommPoly a2 = qcp_var(swap, QVar::a, 2);
    const QCommPoly b3 = qcp_var(swap, QVar::b, 3);
    CHECK(qcp_mul(b3, a2) == qcp_scale(qcp_mul(a2, b3), qs_pow(swap, 6)));
}

TEST_CASE("q-commuting multiplication is associative and distributive") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> exp_dist(0, 3);
    std::uniform_int_distribution<int> coeff_dist(-3, 3);
    const QScalar swap = qs_q();
    auto random_poly = [&] {
        QCommPoly p{swap, {}};
        for (int t = 0; t < 3; ++t) {
            const Rat c{coeff_dist(rng)};
            if (c == Rat(0)) continue;
            const std::pair<long, long> key{exp_dist(rng), exp_dist(rng)};
            auto it = p.terms.find(key);
            if (it == p.terms.end())
                p.terms[key] = QScalar::from_rat(c);
            else
                it->second = qs_add(it->second, QScalar::from_rat(c));
        }
        for (auto it = p.terms.begin(); it != p.terms.end();)
            it = it->second.is_zero() ? p.terms.erase(it) : std::next(it);
        return p;
    };
    for (int trial = 0; trial < 60; ++trial) {
        const QCommPoly x = random_poly(), y = random_poly(), z = random_poly();
        CHECK(qcp_mul(qcp_mul(x, y), z) == qcp_mul(x, qcp_mul(y, z)));
        CHECK(qcp_mul(x, qcp_add(y, z)) == qcp_add(qcp_mul(x, y), qcp_mul(x, z)));
    }
}

TEST_CASE("binomial expansion under ba = q ab counts bipartition inversions") {
    const QScalar swap = qs_q();
    const QCommPoly ab = qcp_add(qcp_var(swap, QVar::a), qcp_var(swap, QVar::b));
    for (long n = 0; n <= 8; ++n) {
        QCommPoly pow = qcp_const(swap, qs_one());
        for (long i = 0; i < n; ++i) pow = qcp_mul(pow, ab);
        for (long r = 0; r <= n; ++r) {
            const auto it = pow.terms.find({r, n - r});
            REQUIRE(it != pow.terms.end());
            CHECK(it->second == bipartition_inversions(n, r));
        }
    }
}

TEST_CASE("truncated q-exponential coefficients") {
    const QScalar swap = qs_q();
    const QCommPoly e = qexp_trunc(QVar::a, 6, swap);
    const QCommPoly E = Exp_trunc(QVar::a, 6, swap);
    CHECK(e.terms.at({0, 0}) == qs_one());
    CHECK(e.terms.at({2, 0}) == qs_inv(laurent_from({{0, 1}, {1, 1}})));
    CHECK(E.terms.at({2, 0}) == qs_div(qs_q(), laurent_from({{1, 1}, {-1, 1}})));
    for (long n = 0; n <= 6; ++n) {
        CHECK(e.terms.at({n, 0}) == qs_inv(cfact(n)));
        CHECK(E.terms.at({n, 0}) ==
              qs_div(QScalar::q_power(Rat(n * (n - 1), 2)), qfact(n)));
    }
}

TEST_CASE("lower q-exponential is multiplicative exactly when ba = q ab") {
    CHECK(verify_q_identity("exp-q-product", {8}));

    const QScalar wrong = qs_qbar();
    const QCommPoly a = qcp_var(wrong, QVar::a), b = qcp_var(wrong, QVar::b);
    const QCommPoly lhs = qcp_exp_q(qcp_add(a, b), 2);
    const QCommPoly rhs = qcp_truncate(qcp_mul(qcp_exp_q(a, 2), qcp_exp_q(b, 2)), 2);
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("upper q-exponential is multiplicative exactly when ab = q^2 ba") {
    CHECK(verify_q_identity("Exp-q-product", {8}));

    const QScalar wrong = qs_pow(qs_q(), 2);
    const QCommPoly a = qcp_var(wrong, QVar::a), b = qcp_var(wrong, QVar::b);
    const QCommPoly lhs = qcp_Exp_q(qcp_add(a, b), 2);
    const QCommPoly rhs = qcp_truncate(qcp_mul(qcp_Exp_q(a, 2), qcp_Exp_q(b, 2)), 2);
    CHECK_FALSE(lhs == rhs);
}

TEST_CASE("rising q-shifted products expand to the frozen quadratic") {
    const int N = 3;
    const MPoly x = mp_var(N, 1), y = mp_var(N, 2);
    CHECK(qn_product(N, 0, x, y, 0) == mp_const(N, Rat(1)));
    CHECK(qn_product(N, 0, x, y, 1) == mp_add(x, y));
    // y^2 + (1+q) x y + q x^2
    MPoly expect = mp_mul(y, y);
    expect = mp_add(expect, mp_mul(mp_add(mp_const(N, Rat(1)), mp_var(N, 0)), mp_mul(x, y)));
    expect = mp_add(expect, mp_mul(mp_var(N, 0), mp_mul(x, x)));
    CHECK(qn_product(N, 0, x, y, 2) == expect);
}

TEST_CASE("separation identities hold numerically and symbolically") {
    CHECK(verify_q_identity("separation-ii", {3, 5, 2}));
    CHECK(qs_sub(qs_mul(qint(3), qint(5)), qs_mul(qint(1), qint(7))) ==
          qs_mul(qint(2), qint(4)));
    for (long x = -4; x <= 4; ++x)
        for (long y = -4; y <= 4; ++y)
            for (long a = -4; a <= 4; ++a) {
                CHECK(verify_q_identity("separation-ii", {x, y, a}));
                CHECK(verify_q_identity("separation-iii", {x, y, a}));
            }
    CHECK(verify_q_identity("separation-i", {5}));
    CHECK(verify_q_identity("separation-ii", {}));
    CHECK(verify_q_identity("separation-iii", {}));
}

TEST_CASE("bimodal expansion symmetry") {
    for (long n = 0; n <= 8; ++n) CHECK(verify_q_identity("bimodal", {n}));
}

TEST_CASE("q-binomial theorem for shifted products") {
    for (long n = 0; n <= 6; ++n) CHECK(verify_q_identity("q-binomial-theorem", {n}));
}

TEST_CASE("Cauchy expansions of powers and shifted products") {
    CHECK(verify_q_identity("cauchy-i", {4}));
    for (long n = 0; n <= 10; ++n) {
        CHECK(verify_q_identity("cauchy-i", {n}));
        CHECK(verify_q_identity("cauchy-ii", {n}));
    }
}

TEST_CASE("inversion generating polynomials") {
    CHECK(inversion_polynomial(0) == qs_one());
    CHECK(inversion_polynomial(2) == laurent_from({{0, 1}, {1, 1}}));
    CHECK(inversion_polynomial(3) == laurent_from({{0, 1}, {1, 2}, {2, 2}, {3, 1}}));
    for (long n = 0; n <= 7; ++n) CHECK(verify_q_identity("inversion-factorial", {n}));
}

TEST_CASE("bipartition inversion counts match Gaussian binomials") {
    CHECK(bipartition_inversions(2, 1) == laurent_from({{0, 1}, {1, 1}}));
    CHECK(bipartition_inversions(4, 0) == qs_one());
    CHECK(bipartition_inversions(4, 2) == oracle_gauss(4, 2));
    for (long n = 0; n <= 10; ++n)
        for (long r = 0; r <= n; ++r) CHECK(verify_q_identity("bipartition-binomial", {n, r}));
}

TEST_CASE("identity battery rejects unknown names and bad parameter counts") {
    CHECK_THROWS_AS(verify_q_identity("no-such-identity", {}), UnknownIdentity);
    CHECK_THROWS_AS(verify_q_identity("cauchy-i", {1, 2}), std::domain_error);
    CHECK_THROWS_AS(inversion_polynomial(9), std::domain_error);
    CHECK_THROWS_AS(bipartition_inversions(13, 1), std::domain_error);
    CHECK_THROWS_AS(bipartition_inversions(4, 5), std::domain_error);
}
