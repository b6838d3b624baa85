#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "qpbw/errors.hpp"
#include "qpbw/hopf.hpp"
#include "qpbw/qcalc.hpp"
#include "qpbw/repn.hpp"

#include <random>
#include <vector>

using namespace qpbw;

namespace {

RepMatrix unit(int d, int r, int c) {
    RepMatrix m = rep_zero(d);
    m.at(r, c) = qs_one();
    return m;
}

RepMatrix diag(std::vector<QScalar> entries) {
    RepMatrix m = rep_zero(static_cast<int>(entries.size()));
    for (int i = 0; i < m.dim; ++i) m.at(i, i) = entries[static_cast<size_t>(i)];
    return m;
}

// Permutation matrix of the flip v (x) w -> w (x) v on C^d (x) C^d.
RepMatrix flip_matrix(int d) {
    RepMatrix p = rep_zero(d * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) p.at(j * d + i, i * d + j) = qs_one();
    return p;
}

std::vector<WordEntry> random_word(std::mt19937& rng, int rank, int len) {
    std::uniform_int_distribution<int> kind(0, 2);
    std::uniform_int_distribution<int> idx(1, rank);
    std::uniform_int_distribution<long> ex(1, 2);
    std::uniform_int_distribution<long> kx(-2, 2);
    std::vector<WordEntry> w;
    for (int t = 0; t < len; ++t) {
        switch (kind(rng)) {
            case 0: {
                long c = kx(rng);
                if (c != 0) w.push_back({gen_k(idx(rng)), c});
                break;
            }
            case 1: w.push_back({gen_y(idx(rng)), ex(rng)}); break;
            default: w.push_back({gen_x(idx(rng)), ex(rng)}); break;
        }
    }
    return w;
}

}  // namespace

TEST_CASE("matrix helpers satisfy basic algebra") {
    RepMatrix a = unit(2, 0, 1);
    RepMatrix b = unit(2, 1, 0);
    RepMatrix c = rep_id(2);
    rep_axpy(c, qs_q(), a);

    CHECK(rep_mul(a, b) == unit(2, 0, 0));
    CHECK(rep_mul(b, a) == unit(2, 1, 1));
    CHECK(rep_pow(c, 0) == rep_id(2));
    CHECK(rep_kron(rep_mul(a, b), rep_mul(b, a)) ==
          rep_mul(rep_kron(a, b), rep_kron(b, a)));

    QScalar v;
    CHECK(rep_is_scalar(rep_scale(rep_id(3), qs_q()), &v));
    CHECK(v == qs_q());
    CHECK_FALSE(rep_is_scalar(unit(2, 0, 1)));
    CHECK(rep_is_zero(rep_zero(4)));
    CHECK_FALSE(rep_is_zero(c));
}

TEST_CASE("construction verifies the defining relations at every rank") {
    for (int n = 1; n <= 4; ++n) {
        FundRep rep = fundamental_rep(n);
        CHECK(rep.dim == n + 1);
    }
    CHECK_THROWS_AS(fundamental_rep(0), std::domain_error);

    FundRep rep2 = fundamental_rep(2);
    CHECK(rep_letter(rep2, GKind::X, 1, 1) == unit(3, 0, 1));
    CHECK(rep_letter(rep2, GKind::Y, 2, 2) == unit(3, 2, 1));
    CHECK(rep_letter(rep2, GKind::X, 1, 2) ==
          rep_scale(unit(3, 0, 2), QScalar::q_power(rat_of(1, 2))));
    CHECK(rep_letter(rep2, GKind::Y, 1, 2) ==
          rep_scale(unit(3, 2, 0), qs_neg(QScalar::q_power(rat_of(-1, 2)))));
    CHECK(rep_k(rep2, 1, Rat(2)) == diag({qs_q(), qs_qbar(), qs_one()}));
}

TEST_CASE("frozen evaluations in the two dimensional module") {
    FundRep rep = fundamental_rep(1);
    CHECK(rep_eval(rep, el_k_power(1, 1, Rat(2))) == diag({qs_q(), qs_qbar()}));
    CHECK(rep_eval(rep, hbracket(1, 0, 1)) == diag({qs_one(), qs_neg(qs_one())}));
    for (long cc = -2; cc <= 2; ++cc)
        CHECK(rep_eval(rep, hbracket(1, cc, 1)) ==
              diag({qint(1 + cc), qs_neg(qint(1 - cc))}));

    QuadForm cross;
    cross.add({0, 1}, {1, 1}, Rat(1));
    RepMatrix m = rep_eval(rep, el_prefactor(1, cross, 2));
    RepMatrix expect = diag({QScalar::q_power(rat_of(1, 2)), QScalar::q_power(rat_of(-1, 2)),
                             QScalar::q_power(rat_of(-1, 2)), QScalar::q_power(rat_of(1, 2))});
    CHECK(m == expect);
}

TEST_CASE("straightening is module faithful across ranks") {
    std::mt19937 rng(314159);
    for (int rank = 1; rank <= 2; ++rank) {
        FundRep rep = fundamental_rep(rank);
        for (int trial = 0; trial < 10; ++trial) {
            auto w = random_word(rng, rank, 4);
            CHECK(rep_eval(rep, straighten_word(rank, w)) == rep_eval_word(rep, w));
        }
    }

    FundRep rep3 = fundamental_rep(3);
    std::vector<std::vector<WordEntry>> vetted = {
        {{gen_x(3), 1}, {gen_x(2), 1}, {gen_x(1), 1}},
        {{gen_x(1), 1}, {gen_x(3), 1}, {gen_x(2), 1}, {gen_y(2), 1}, {gen_y(1), 1}},
        {{gen_y(3), 1}, {gen_y(1), 1}, {gen_x(2), 1}, {gen_x(3), 1}},
        {{gen_k(2), -1}, {gen_x(2), 1}, {gen_x(3), 1}, {gen_x(1), 1}, {gen_y(3), 1}},
        {{gen_x(2), 2}, {gen_y(2), 1}, {gen_x(1), 1}, {gen_y(1), 2}},
    };
    for (const auto& w : vetted)
        CHECK(rep_eval(rep3, straighten_word(3, w)) == rep_eval_word(rep3, w));
}

TEST_CASE("tensor evaluation respects slot structure") {
    FundRep rep = fundamental_rep(1);
    Element d = coproduct(straighten_word(1, {{gen_x(1), 1}, {gen_y(1), 1}, {gen_k(1), 1}}));

    RepMatrix md = rep_eval(rep, d);
    RepMatrix p = flip_matrix(rep.dim);
    CHECK(rep_eval(rep, swap_slots(d, 0)) == rep_mul(p, rep_mul(md, p)));

    Element pure = el_mul(el_gen(1, gen_x(1), 1, 0, 2), el_gen(1, gen_y(1), 1, 1, 2));
    RepMatrix xm = rep_letter(rep, GKind::X, 1, 1);
    RepMatrix ym = rep_letter(rep, GKind::Y, 1, 1);
    CHECK(rep_eval(rep, pure) == rep_kron(xm, ym));
    CHECK(rep_eval(rep, insert_slot(pure, 1)) == rep_kron(rep_kron(xm, rep_id(2)), ym));
    CHECK(rep_eval(rep, mul_slots(pure, 0)) == rep_mul(xm, ym));
}

TEST_CASE("two letter rule instances hold as matrix identities in rank three") {
    FundRep rep = fundamental_rep(3);
    std::vector<GenIndex> letters;
    for (int a = 1; a <= 3; ++a)
        for (int b = a; b <= 3; ++b) {
            letters.push_back(gen_x(a, b));
            letters.push_back(gen_y(a, b));
        }
    int covered = 0;
    int skipped = 0;
    for (const GenIndex& g1 : letters)
        for (const GenIndex& g2 : letters)
            for (long e1 = 1; e1 <= 2; ++e1)
                for (long e2 = 1; e2 <= 2; ++e2) {
                    std::vector<WordEntry> w = {{g1, e1}, {g2, e2}};
                    Element s;
                    try {
                        s = straighten_word(3, w);
                    } catch (const NoApplicableRule&) {
                        ++skipped;
                        continue;
                    }
                    ++covered;
                    CHECK(rep_eval(rep, s) == rep_eval_word(rep, w));
                }
    CHECK(covered >= 400);
    CHECK(skipped <= 144);

    for (int i = 1; i <= 3; ++i)
        for (const GenIndex& g : letters) {
            std::vector<WordEntry> w = {{g, 1}, {gen_k(i), -2}};
            CHECK(rep_eval(rep, straighten_word(3, w)) == rep_eval_word(rep, w));
        }
}
