#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cassert>
#include <stdexcept>

namespace qpbw {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return numerator(r); }
inline Int rat_den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return rat_den(r) == 1; }

inline long to_long(const Int& v) {
    assert(v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max());
    return static_cast<long>(v);
}

inline long to_long(const Rat& r) {
    assert(is_integer(r));
    return to_long(rat_num(r));
}

// Two-argument Rat construction with the denominator sign normalized first;
// boost::rational<cpp_int> rejects negative denominators outright.
inline Rat rat_of(Int n, Int d) {
    assert(d != 0);
    if (d < 0) { n = -n; d = -d; }
    return Rat(n, d);
}

inline Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int int_lcm(Int a, Int b) { return boost::multiprecision::lcm(a, b); }

inline Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    if (base == 0) {
        if (e < 0) throw std::domain_error("rat_pow: zero to negative power");
        return Rat(0);
    }
    Rat b = e < 0 ? Rat(1) / base : base;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-(e + 1)) + 1ul : static_cast<unsigned long>(e);
    Rat acc(1);
    while (k > 0) {
        if (k & 1ul) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

}  // namespace qpbw
