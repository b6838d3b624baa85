#pragma once

#include "qpbw/errors.hpp"
#include "qpbw/rational.hpp"

#include <compare>
#include <string>

namespace qpbw {

enum class GKind { K, Y, X };

// K uses a == b; X/Y denote interval generators x_{a,b}, y_{a,b} with a <= b.
struct GenIndex {
    GKind kind;
    int a;
    int b;

    auto operator<=>(const GenIndex&) const = default;
};

inline GenIndex gen_k(int i) { return {GKind::K, i, i}; }
inline GenIndex gen_x(int a, int b) { return {GKind::X, a, b}; }
inline GenIndex gen_x(int i) { return {GKind::X, i, i}; }
inline GenIndex gen_y(int a, int b) { return {GKind::Y, a, b}; }
inline GenIndex gen_y(int i) { return {GKind::Y, i, i}; }

inline void check_gen(const GenIndex& g, int rank) {
    if (g.a < 1 || g.b < g.a || g.b > rank)
        throw IndexOutOfRank("generator interval [" + std::to_string(g.a) + "," +
                             std::to_string(g.b) + "] outside rank " + std::to_string(rank));
}

inline long cartan(int i, int j) {
    if (i == j) return 2;
    if (i - j == 1 || j - i == 1) return -1;
    return 0;
}

// Eigenvalue of ad H_l on x_{a,b}: [H_l, x_{a,b}] = S x_{a,b} with S the row sum below.
inline long cartan_interval(int l, int a, int b) {
    long s = 0;
    for (int m = a; m <= b; ++m) s += cartan(l, m);
    return s;
}

}  // namespace qpbw
