#pragma once

#include "qpbw/element.hpp"
#include "qpbw/straighten.hpp"

#include <vector>

namespace qpbw {

// Dense square matrix over the scalar field, row-major.
struct RepMatrix {
    int dim = 0;
    std::vector<QScalar> a;

    bool operator==(const RepMatrix&) const = default;
    QScalar& at(int r, int c) { return a[static_cast<size_t>(r * dim + c)]; }
    const QScalar& at(int r, int c) const { return a[static_cast<size_t>(r * dim + c)]; }
};

RepMatrix rep_zero(int dim);
RepMatrix rep_id(int dim);
RepMatrix rep_mul(const RepMatrix& a, const RepMatrix& b);
RepMatrix rep_pow(const RepMatrix& a, long e);
RepMatrix rep_kron(const RepMatrix& a, const RepMatrix& b);
RepMatrix rep_scale(const RepMatrix& a, const QScalar& c);
void rep_axpy(RepMatrix& acc, const QScalar& c, const RepMatrix& m);
bool rep_is_zero(const RepMatrix& a);
// True when a is c times the identity; stores c through `value` if given.
bool rep_is_scalar(const RepMatrix& a, QScalar* value = nullptr);

// Defining (rank+1)-dimensional module: x_i acts as E_{i,i+1}, y_i as E_{i+1,i},
// and k_i^c scales e_t by q^{c/2} at t = i, q^{-c/2} at t = i+1.  Construction
// verifies the algebra relations (k-conjugation, x/y commutators, Serre) once.
struct FundRep {
    int rank = 1;
    int dim = 2;
};

FundRep fundamental_rep(int rank);

RepMatrix rep_k(const FundRep& rep, int i, const Rat& c);
// Interval generator x_{a,b} or y_{a,b} through its simple-letter expansion.
RepMatrix rep_letter(const FundRep& rep, GKind kind, int a, int b);

// Evaluates an element of any slot count on the tensor power of the defining
// module; exponential prefactors act diagonally through the basis weights.
RepMatrix rep_eval(const FundRep& rep, const Element& e);

// Evaluates an unstraightened word (single slot) as a product of generator images.
RepMatrix rep_eval_word(const FundRep& rep, const std::vector<WordEntry>& w);

}  // namespace qpbw
