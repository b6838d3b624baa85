#include "qpbw/repn.hpp"

#include "qpbw/qcalc.hpp"

#include <stdexcept>

namespace qpbw {

namespace {

// Weight of basis vector e_t (1-based) under H_i.
long fund_weight(int i, int t) { return (t == i) ? 1 : (t == i + 1 ? -1 : 0); }

RepMatrix unit_matrix(int d, int row, int col) {
    RepMatrix m = rep_zero(d);
    m.at(row, col) = qs_one();
    return m;
}

RepMatrix simple_matrix(const FundRep& rep, GKind kind, int i) {
    return kind == GKind::X ? unit_matrix(rep.dim, i - 1, i) : unit_matrix(rep.dim, i, i - 1);
}

void require_relations(const FundRep& rep) {
    const QScalar denom = qs_sub(qs_q(), qs_qbar());
    for (int i = 1; i <= rep.rank; ++i)
        for (int j = 1; j <= rep.rank; ++j) {
            RepMatrix x = simple_matrix(rep, GKind::X, j);
            RepMatrix y = simple_matrix(rep, GKind::Y, j);
            RepMatrix conj = rep_mul(rep_k(rep, i, Rat(1)), rep_mul(x, rep_k(rep, i, Rat(-1))));
            if (!(conj == rep_scale(x, QScalar::q_power(Rat(cartan(i, j)) / 2))))
                throw std::runtime_error("fundamental_rep: k-conjugation relation failed");

            RepMatrix xi = simple_matrix(rep, GKind::X, i);
            RepMatrix comm = rep_mul(xi, y);
            rep_axpy(comm, qs_neg(qs_one()), rep_mul(y, xi));
            RepMatrix expect = rep_zero(rep.dim);
            if (i == j) {
                expect = rep_scale(rep_k(rep, i, Rat(2)), qs_inv(denom));
                rep_axpy(expect, qs_neg(qs_inv(denom)), rep_k(rep, i, Rat(-2)));
            }
            if (!(comm == expect))
                throw std::runtime_error("fundamental_rep: x/y commutator relation failed");

            if (i == j) continue;
            RepMatrix xj = x;
            if (cartan(i, j) == 0) {
                if (!(rep_mul(xi, xj) == rep_mul(xj, xi)))
                    throw std::runtime_error("fundamental_rep: distant letters fail to commute");
            } else {
                RepMatrix serre = rep_mul(xi, rep_mul(xi, xj));
                rep_axpy(serre, qs_neg(qs_add(qs_q(), qs_qbar())), rep_mul(xi, rep_mul(xj, xi)));
                rep_axpy(serre, qs_one(), rep_mul(xj, rep_mul(xi, xi)));
                if (!rep_is_zero(serre))
                    throw std::runtime_error("fundamental_rep: Serre relation failed");
            }
        }
}

}  // namespace

RepMatrix rep_zero(int dim) {
    RepMatrix m;
    m.dim = dim;
    m.a.assign(static_cast<size_t>(dim) * static_cast<size_t>(dim), qs_zero());
    return m;
}

RepMatrix rep_id(int dim) {
    RepMatrix m = rep_zero(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = qs_one();
    return m;
}

RepMatrix rep_mul(const RepMatrix& a, const RepMatrix& b) {
    if (a.dim != b.dim) throw std::domain_error("rep_mul: dimension mismatch");
    RepMatrix r = rep_zero(a.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int k = 0; k < a.dim; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < a.dim; ++j)
                r.at(i, j) = qs_add(r.at(i, j), qs_mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

RepMatrix rep_pow(const RepMatrix& a, long e) {
    if (e < 0) throw std::domain_error("rep_pow: negative exponent");
    RepMatrix r = rep_id(a.dim);
    for (long i = 0; i < e; ++i) r = rep_mul(r, a);
    return r;
}

RepMatrix rep_kron(const RepMatrix& a, const RepMatrix& b) {
    RepMatrix r = rep_zero(a.dim * b.dim);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j) {
            if (a.at(i, j).is_zero()) continue;
            for (int p = 0; p < b.dim; ++p)
                for (int s = 0; s < b.dim; ++s)
                    r.at(i * b.dim + p, j * b.dim + s) = qs_mul(a.at(i, j), b.at(p, s));
        }
    return r;
}

RepMatrix rep_scale(const RepMatrix& a, const QScalar& c) {
    RepMatrix r = a;
    for (auto& v : r.a) v = qs_mul(v, c);
    return r;
}

void rep_axpy(RepMatrix& acc, const QScalar& c, const RepMatrix& m) {
    if (acc.dim != m.dim) throw std::domain_error("rep_axpy: dimension mismatch");
    for (size_t i = 0; i < acc.a.size(); ++i) acc.a[i] = qs_add(acc.a[i], qs_mul(c, m.a[i]));
}

bool rep_is_zero(const RepMatrix& a) {
    for (const auto& v : a.a)
        if (!v.is_zero()) return false;
    return true;
}

bool rep_is_scalar(const RepMatrix& a, QScalar* value) {
    if (a.dim == 0) return false;
    const QScalar& c = a.at(0, 0);
    for (int i = 0; i < a.dim; ++i)
        for (int j = 0; j < a.dim; ++j)
            if (!(a.at(i, j) == (i == j ? c : qs_zero()))) return false;
    if (value != nullptr) *value = c;
    return true;
}

FundRep fundamental_rep(int rank) {
    if (rank < 1) throw std::domain_error("fundamental_rep: rank must be positive");
    FundRep rep{rank, rank + 1};
    require_relations(rep);
    return rep;
}

RepMatrix rep_k(const FundRep& rep, int i, const Rat& c) {
    check_gen(gen_k(i), rep.rank);
    RepMatrix m = rep_zero(rep.dim);
    for (int t = 1; t <= rep.dim; ++t)
        m.at(t - 1, t - 1) = QScalar::q_power(c * Rat(fund_weight(i, t)) / 2);
    return m;
}

RepMatrix rep_letter(const FundRep& rep, GKind kind, int a, int b) {
    if (kind == GKind::K) throw std::domain_error("rep_letter: x/y letters only");
    check_gen(GenIndex{kind, a, b}, rep.rank);
    RepMatrix acc = rep_zero(rep.dim);
    for (const auto& w : interval_expand(a, b, kind == GKind::Y)) {
        RepMatrix prod = rep_id(rep.dim);
        for (int i : w.letters) prod = rep_mul(prod, simple_matrix(rep, kind, i));
        rep_axpy(acc, w.coeff, prod);
    }
    return acc;
}

RepMatrix rep_eval(const FundRep& rep, const Element& e) {
    if (e.rank != rep.rank) throw std::domain_error("rep_eval: rank mismatch");
    int dim = 1;
    for (int s = 0; s < e.nslots; ++s) dim *= rep.dim;
    RepMatrix acc = rep_zero(dim);
    for (const Term& t : e.terms) {
        RepMatrix word = rep_id(1);
        for (const PBWMonomial& mono : t.slots) {
            RepMatrix slot = rep_zero(rep.dim);
            for (int b = 1; b <= rep.dim; ++b) {
                Rat exp(0);
                for (const auto& [i, c] : mono.kExp) exp += c * Rat(fund_weight(i, b)) / 2;
                slot.at(b - 1, b - 1) = QScalar::q_power(exp);
            }
            for (const auto& [iv, pw] : mono.yExp)
                slot = rep_mul(slot, rep_pow(rep_letter(rep, GKind::Y, iv.first, iv.second), pw));
            for (const auto& [iv, pw] : mono.xExp)
                slot = rep_mul(slot, rep_pow(rep_letter(rep, GKind::X, iv.first, iv.second), pw));
            word = rep_kron(word, slot);
        }
        if (!t.quad.is_trivial()) {
            RepMatrix diag = rep_zero(dim);
            for (int idx = 0; idx < dim; ++idx) {
                int rem = idx;
                std::vector<int> basis(static_cast<size_t>(e.nslots));
                for (int s = e.nslots - 1; s >= 0; --s) {
                    basis[static_cast<size_t>(s)] = rem % rep.dim + 1;
                    rem /= rep.dim;
                }
                Rat exp(0);
                for (const auto& [key, c] : t.quad.coeff) {
                    const long lu =
                        fund_weight(key.first.second, basis[static_cast<size_t>(key.first.first)]);
                    const long lv =
                        fund_weight(key.second.second, basis[static_cast<size_t>(key.second.first)]);
                    exp += c * Rat(lu) * Rat(lv);
                }
                diag.at(idx, idx) = QScalar::q_power(exp / 2);
            }
            word = rep_mul(diag, word);
        }
        rep_axpy(acc, t.coeff, word);
    }
    return acc;
}

RepMatrix rep_eval_word(const FundRep& rep, const std::vector<WordEntry>& w) {
    RepMatrix acc = rep_id(rep.dim);
    for (const auto& [g, e] : w) {
        check_gen(g, rep.rank);
        if (g.kind == GKind::K)
            acc = rep_mul(acc, rep_k(rep, g.a, Rat(e)));
        else
            acc = rep_mul(acc, rep_pow(rep_letter(rep, g.kind, g.a, g.b), e));
    }
    return acc;
}

}  // namespace qpbw
