#pragma once

#include "qpbw/element.hpp"

#include <utility>
#include <vector>

namespace qpbw {

// Engine letters: x/y interval generators only; k-powers are swept into a side map.
struct XYLetter {
    bool is_x;
    int a;
    int b;
    long e;

    bool operator==(const XYLetter&) const = default;
};

struct EngineState {
    QScalar coeff;
    std::map<int, Rat> kexp;
    std::vector<XYLetter> word;
};

// Core rewriter: returns the canonical states summing to the input state.
// trunc >= 0 drops terms whose x-width exceeds it (width never grows under the rules).
std::vector<EngineState> straighten_state(int rank, EngineState start, long trunc = -1);

// A word entry is a generator with an integer exponent; K entries use the exponent as k_i^e.
using WordEntry = std::pair<GenIndex, long>;

Element straighten_word(int rank, const std::vector<WordEntry>& word, long trunc = -1);

// Closed form for x^a y^b in rank 1; equals straighten_word on the same input.
Element straighten_xa_yb(long a, long b);

// Two-term expansion of [H_i + c] into k-powers.
Element hbracket(int i, long c, int rank);
// (1/[i]!) * [H_1+c][H_1+c-1]...[H_1+c-i+1] in rank `rank` (falling product on index 1).
Element hbinom(long c, long i, int rank);

Element el_mul(const Element& a, const Element& b);
Element el_pow(const Element& a, long n);

// New f-argument when f(generator-power) crosses exp((h/4) quad) from the left:
// generator g^m in `slot` picks up k-corrections in coupled slots.
Element commute_past_tensor_prefactor(int rank, const GenIndex& g, long m, int slot,
                                      const QuadForm& quad, int nslots);

// Expansion of x_{i,j} (or y_{i,j}) into words of simple generators.
struct SimpleWord {
    QScalar coeff;
    std::vector<int> letters;
};
std::vector<SimpleWord> interval_expand(int i, int j, bool as_y = false);

// Orientation-indexed expansion: bit r of the mask set means arrow i+r <- i+r+1 (left).
struct OrientationTerm {
    unsigned mask;
    QScalar coeff;
    std::vector<int> letters;
};
std::vector<OrientationTerm> orientation_expand(int i, int j);

bool splitting_check(int i, int s, int j);

}  // namespace qpbw
