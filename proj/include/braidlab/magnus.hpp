#pragma once

#include <optional>

#include "braidlab/freelie.hpp"
#include "braidlab/freeword.hpp"
#include "braidlab/ncpoly.hpp"

namespace braidlab {

// Magnus embedding g_i -> 1 + a_i into the tensor algebra truncated at
// degree D.  A power g^k expands by the (generalized) binomial series, so
// negative and large exponents stay exact.
inline NCPolynomial magnus_expand(const FreeWord& w, int truncation_degree) {
    if (truncation_degree < 1) throw index_error("magnus_expand: degree bound must be >= 1");
    Alphabet assoc{"a", w.alphabet().rank};
    NCPolynomial r = NCPolynomial::one(assoc, truncation_degree);
    for (const Letter& l : w.letters()) {
        NCPolynomial f(assoc, truncation_degree);
        NCPolynomial::Monomial m;
        for (int j = 0; j <= truncation_degree; ++j) {
            f.add_term(m, binomial(l.exp, j));
            m.push_back(l.gen);
        }
        r = r * f;
    }
    return r;
}

// Largest i with w in Gamma^i (the descending central series of the free
// group), read off as the lowest nonzero degree of magnus_expand(w) - 1.
// Returns nullopt for the identity.  A freely reduced word of total length
// T always has a nonzero term in degree <= T.
inline std::optional<int> lcs_degree(const FreeWord& w) {
    if (w.is_identity()) return std::nullopt;
    const int cap = static_cast<int>(w.length());
    for (int m = 1; m <= cap; ++m) {
        NCPolynomial p = magnus_expand(w, m);
        if (!p.homogeneous_part(m).is_zero()) return m;
    }
    throw internal_error("lcs_degree: no nonzero term up to the length bound");
}

// Image of w in gr_m(F_r) for m = lcs_degree(w), in the Lyndon basis.
// The degree-m part of the expansion is primitive, so the Dynkin map
// (left bracketing) returns m times the Lie element; the division by m
// must be exact and doubles as a self-check.
inline LieElement gr_leading_term(const FreeWord& w) {
    auto m = lcs_degree(w);
    if (!m) throw index_error("gr_leading_term: identity word has no leading term");
    NCPolynomial part = magnus_expand(w, *m).homogeneous_part(*m);
    Alphabet lie{"y", w.alphabet().rank};
    LieElement sum(lie);
    for (const auto& [mono, c] : part.coeffs()) {
        LieElement bracketed = LieElement::generator(lie, mono[0]);
        for (std::size_t t = 1; t < mono.size(); ++t)
            bracketed = lie_bracket(bracketed, LieElement::generator(lie, mono[t]));
        bracketed *= c;
        sum += bracketed;
    }
    sum.divide_exact(*m);
    return sum;
}

}  // namespace braidlab
