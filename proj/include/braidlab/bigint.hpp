#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace braidlab {

// Exact integer coefficients everywhere: Magnus expansions of high powers,
// Smith-normal-form intermediates and Lie coefficients all overflow machine
// words at quite small inputs.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int r = a % b;
        a = b;
        b = r;
    }
    return a;
}

// Generalized binomial coefficient C(k, j) for integer k (possibly negative),
// j >= 0.  Used by the Magnus substitution for g^k.
inline Int binomial(std::int64_t k, int j) {
    Int c = 1;
    for (int t = 0; t < j; ++t) {
        c *= Int(k) - t;
        c /= t + 1;  // exact: product of t+1 consecutive integers
    }
    return c;
}

}  // namespace braidlab
