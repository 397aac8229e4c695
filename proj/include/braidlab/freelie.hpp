#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "braidlab/alphabet.hpp"
#include "braidlab/bigint.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/lyndon.hpp"
#include "braidlab/ncpoly.hpp"

namespace braidlab {

// Element of the free Lie ring L[alphabet]: an integer combination of
// standard bracketings of Lyndon words.  Keys are the Lyndon words; the
// bracketing is implied.  Terms of different degrees may coexist.
class LieElement {
  public:
    explicit LieElement(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    static LieElement zero(Alphabet a) { return LieElement(std::move(a)); }

    static LieElement generator(Alphabet a, int g) {
        a.check_index(g);
        LieElement e(std::move(a));
        e.terms_[{g}] = 1;
        return e;
    }

    static LieElement basis_term(Alphabet a, const Word& w, Int c = 1) {
        if (!is_lyndon(w)) throw internal_error("basis_term: key is not a Lyndon word");
        for (int g : w) a.check_index(g);
        LieElement e(std::move(a));
        if (c != 0) e.terms_[w] = std::move(c);
        return e;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Int, GradedLex>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Int coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Int(0) : it->second;
    }

    // True when all terms share one bracket degree; zero counts as homogeneous.
    bool is_homogeneous() const {
        std::size_t d = 0;
        for (const auto& [w, c] : terms_) {
            if (d == 0) d = w.size();
            else if (w.size() != d) return false;
        }
        return true;
    }

    int degree() const {
        int d = 0;
        for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
        return d;
    }

    void add_term(const Word& w, const Int& c) {
        if (c == 0) return;
        Int& slot = terms_[w];
        slot += c;
        if (slot == 0) terms_.erase(w);
    }

    LieElement& operator+=(const LieElement& o) {
        require_same(alphabet_, o.alphabet_, "Lie add");
        for (const auto& [w, c] : o.terms_) add_term(w, c);
        return *this;
    }

    LieElement& operator-=(const LieElement& o) {
        require_same(alphabet_, o.alphabet_, "Lie sub");
        for (const auto& [w, c] : o.terms_) add_term(w, -c);
        return *this;
    }

    LieElement& operator*=(const Int& k) {
        if (k == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, c] : terms_) c *= k;
        return *this;
    }

    friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
    friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
    friend LieElement operator*(const Int& k, LieElement a) { return a *= k; }
    friend LieElement operator-(LieElement a) { return a *= Int(-1); }

    bool operator==(const LieElement& o) const {
        return alphabet_ == o.alphabet_ && terms_ == o.terms_;
    }

    // Exact division of every coefficient; throws if any remainder is nonzero.
    void divide_exact(const Int& k) {
        for (auto& [w, c] : terms_) {
            if (c % k != 0) throw internal_error("LieElement: non-exact coefficient division");
            c /= k;
        }
    }

  private:
    Alphabet alphabet_;
    std::map<Word, Int, GradedLex> terms_;
};

namespace detail {

// Rewrites a bracket of two Lyndon basis words into the Lyndon basis.
// For u < v: if the standard factorization of uv is (u,v) the bracket is a
// basis element; otherwise split u = xy (standard) and apply Jacobi,
//   [[x,y],v] = [x,[y,v]] - [y,[x,v]],
// which terminates because the left factors shrink.  Results are memoized
// per alphabet rank (the structure constants do not depend on the symbol).
class LyndonBracketTable {
  public:
    // result as word->coeff over the same alphabet
    const std::map<Word, Int>& bracket(int rank, const Word& u, const Word& v) {
        auto key = std::make_pair(u, v);
        auto& cache = cache_[rank];
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;

        std::map<Word, Int> result;
        if (u == v) {
            // zero
        } else if (v < u) {
            for (const auto& [w, c] : bracket(rank, v, u)) result[w] = -c;
        } else {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            auto [l, r] = standard_factorization(uv);
            if (l == u && r == v) {
                result[uv] = 1;
            } else {
                auto [x, y] = standard_factorization(u);
                accumulate_nested(rank, x, y, v, 1, result);
                accumulate_nested(rank, y, x, v, -1, result);
            }
        }
        auto [pos, inserted] = cache.emplace(std::move(key), std::move(result));
        return pos->second;
    }

    static LyndonBracketTable& instance() {
        static LyndonBracketTable t;
        return t;
    }

    std::mutex& mutex() { return mutex_; }

  private:
    // sign * [a, [b, v]] added into out
    void accumulate_nested(int rank, const Word& a, const Word& b, const Word& v, int sign,
                           std::map<Word, Int>& out) {
        // copy: the inner bracket call may invalidate cache references
        const std::map<Word, Int> inner = bracket(rank, b, v);
        for (const auto& [w, c] : inner) {
            const std::map<Word, Int> outer = bracket(rank, a, w);
            for (const auto& [w2, c2] : outer) {
                Int& slot = out[w2];
                slot += sign * c * c2;
                if (slot == 0) out.erase(w2);
            }
        }
    }

    std::map<int, std::map<std::pair<Word, Word>, std::map<Word, Int>>> cache_;
    std::mutex mutex_;
};

}  // namespace detail

// Bilinear bracket, normalized to the Lyndon basis.
inline LieElement lie_bracket(const LieElement& a, const LieElement& b) {
    require_same(a.alphabet(), b.alphabet(), "lie_bracket");
    LieElement r(a.alphabet());
    auto& table = detail::LyndonBracketTable::instance();
    std::lock_guard<std::mutex> lock(table.mutex());
    for (const auto& [u, cu] : a.terms()) {
        for (const auto& [v, cv] : b.terms()) {
            for (const auto& [w, c] : table.bracket(a.alphabet().rank, u, v))
                r.add_term(w, cu * cv * c);
        }
    }
    return r;
}

// Bracket expression tree: a leaf holds a generator index, an inner node a
// bracket of its children.
struct LieTree {
    int gen = 0;
    std::unique_ptr<LieTree> left, right;

    static LieTree leaf(int g) {
        LieTree t;
        t.gen = g;
        return t;
    }
    static LieTree node(LieTree l, LieTree r) {
        LieTree t;
        t.left = std::make_unique<LieTree>(std::move(l));
        t.right = std::make_unique<LieTree>(std::move(r));
        return t;
    }
    bool is_leaf() const { return !left; }
};

inline LieElement lie_normal_form(const Alphabet& a, const LieTree& t) {
    if (t.is_leaf()) return LieElement::generator(a, t.gen);
    if (!t.left || !t.right) throw parse_error("malformed bracket expression tree");
    return lie_bracket(lie_normal_form(a, *t.left), lie_normal_form(a, *t.right));
}

inline LieElement lie_normal_form(const Alphabet& a,
                                  const std::vector<std::pair<Int, LieTree>>& combination) {
    LieElement r(a);
    for (const auto& [c, t] : combination) {
        LieElement term = lie_normal_form(a, t);
        term *= c;
        r += term;
    }
    return r;
}

// Standard bracketing of a Lyndon word as an explicit tree.
inline LieTree bracket_tree(const Word& w) {
    if (w.empty()) throw index_error("bracket_tree: empty word");
    if (w.size() == 1) return LieTree::leaf(w[0]);
    auto [u, v] = standard_factorization(w);
    return LieTree::node(bracket_tree(u), bracket_tree(v));
}

// Expands brackets as xy - yx into the tensor algebra truncated at D.
// Independent of the Lyndon rewriting; used to cross-check it.
inline NCPolynomial lie_to_associative(const LieElement& e, int max_degree) {
    if (e.degree() > max_degree) throw budget_error("lie_to_associative: degree exceeds truncation");
    Alphabet assoc{"a", e.alphabet().rank};
    // recursive expansion of one Lyndon basis bracket
    auto expand = [&](auto&& self, const Word& w) -> NCPolynomial {
        NCPolynomial p(assoc, max_degree);
        if (w.size() == 1) {
            p.add_term({w[0]}, 1);
            return p;
        }
        auto [u, v] = standard_factorization(w);
        NCPolynomial pu = self(self, u);
        NCPolynomial pv = self(self, v);
        return pu * pv - pv * pu;
    };
    NCPolynomial r(assoc, max_degree);
    for (const auto& [w, c] : e.terms()) {
        NCPolynomial p = expand(expand, w);
        for (const auto& [m, pc] : p.coeffs()) r.add_term(m, c * pc);
    }
    return r;
}

// A derivation of L[alphabet], determined by its values on the generators
// and extended by the Leibniz rule.
struct DerivationTable {
    Alphabet alphabet;
    std::vector<LieElement> images;  // images[g-1]

    static DerivationTable zero(const Alphabet& a) {
        DerivationTable d{a, {}};
        d.images.assign(static_cast<std::size_t>(a.rank), LieElement::zero(a));
        return d;
    }

    // ad(x_g): y -> [x_g, y]
    static DerivationTable adjoint(const Alphabet& a, int g) {
        DerivationTable d = zero(a);
        for (int k = 1; k <= a.rank; ++k)
            d.images[static_cast<std::size_t>(k - 1)] =
                lie_bracket(LieElement::generator(a, g), LieElement::generator(a, k));
        return d;
    }

    const LieElement& image(int g) const {
        alphabet.check_index(g);
        return images[static_cast<std::size_t>(g - 1)];
    }

    bool is_zero() const {
        for (const auto& e : images)
            if (!e.is_zero()) return false;
        return true;
    }

    DerivationTable& operator+=(const DerivationTable& o) {
        require_same(alphabet, o.alphabet, "derivation add");
        for (std::size_t k = 0; k < images.size(); ++k) images[k] += o.images[k];
        return *this;
    }

    DerivationTable& operator*=(const Int& c) {
        for (auto& e : images) e *= c;
        return *this;
    }
};

inline LieElement apply_derivation(const DerivationTable& d, const LieElement& e) {
    require_same(d.alphabet, e.alphabet(), "apply_derivation");
    auto apply_word = [&](auto&& self, const Word& w) -> LieElement {
        if (w.size() == 1) return d.image(w[0]);
        auto [u, v] = standard_factorization(w);
        LieElement bu = LieElement::basis_term(d.alphabet, u);
        LieElement bv = LieElement::basis_term(d.alphabet, v);
        return lie_bracket(self(self, u), bv) + lie_bracket(bu, self(self, v));
    };
    LieElement r(e.alphabet());
    for (const auto& [w, c] : e.terms()) {
        LieElement t = apply_word(apply_word, w);
        t *= c;
        r += t;
    }
    return r;
}

// D1 o D2 - D2 o D1, again a derivation.
inline DerivationTable derivation_commutator(const DerivationTable& a, const DerivationTable& b) {
    require_same(a.alphabet, b.alphabet, "derivation_commutator");
    DerivationTable r = DerivationTable::zero(a.alphabet);
    for (int g = 1; g <= a.alphabet.rank; ++g)
        r.images[static_cast<std::size_t>(g - 1)] =
            apply_derivation(a, b.image(g)) - apply_derivation(b, a.image(g));
    return r;
}

inline std::string to_string(const LieElement& e) {
    if (e.is_zero()) return "0";
    std::string s;
    for (const auto& [w, c] : e.terms()) {
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = abs_int(c);
        if (a != 1) s += a.str() + "*";
        s += bracket_string(w, e.alphabet().symbol);
    }
    return s;
}

}  // namespace braidlab
