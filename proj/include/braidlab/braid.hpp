#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "braidlab/errors.hpp"
#include "braidlab/freeword.hpp"

namespace braidlab {

struct Crossing {
    int index = 0;  // 1..n-1
    int sign = 1;   // +1 = s_i, -1 = s_i^-1

    bool operator==(const Crossing&) const = default;
};

// A braid word in the crossing generators on n strands.  Words are kept
// verbatim: no cancellation or normal form is imposed, equality questions
// go through the Artin action.
class SigmaBraid {
  public:
    explicit SigmaBraid(int strands, std::vector<Crossing> word = {})
        : strands_(strands), word_(std::move(word)) {
        if (strands_ < 1) throw index_error("SigmaBraid: strand count must be >= 1");
        for (const Crossing& c : word_) {
            if (c.index < 1 || c.index >= strands_)
                throw index_error("SigmaBraid: crossing index " + std::to_string(c.index) +
                                  " out of range on " + std::to_string(strands_) + " strands");
            if (c.sign != 1 && c.sign != -1) throw index_error("SigmaBraid: sign must be +-1");
        }
    }

    static SigmaBraid identity(int strands) { return SigmaBraid(strands); }

    int strands() const { return strands_; }
    const std::vector<Crossing>& word() const { return word_; }
    std::size_t size() const { return word_.size(); }

    bool operator==(const SigmaBraid& o) const = default;  // literal word equality only

  private:
    int strands_;
    std::vector<Crossing> word_;
};

inline SigmaBraid multiply(const SigmaBraid& a, const SigmaBraid& b) {
    if (a.strands() != b.strands()) throw index_error("braid multiply: strand count mismatch");
    std::vector<Crossing> w = a.word();
    w.insert(w.end(), b.word().begin(), b.word().end());
    return SigmaBraid(a.strands(), std::move(w));
}

inline SigmaBraid invert(const SigmaBraid& b) {
    std::vector<Crossing> w;
    w.reserve(b.size());
    for (auto it = b.word().rbegin(); it != b.word().rend(); ++it)
        w.push_back({it->index, -it->sign});
    return SigmaBraid(b.strands(), std::move(w));
}

inline SigmaBraid commutator(const SigmaBraid& a, const SigmaBraid& b) {
    return multiply(multiply(a, b), multiply(invert(a), invert(b)));
}

// Cancels adjacent inverse crossings.  Internal speedup for the action;
// never applied to stored words.
inline std::vector<Crossing> free_cancel(const std::vector<Crossing>& word) {
    std::vector<Crossing> out;
    out.reserve(word.size());
    for (const Crossing& c : word) {
        if (!out.empty() && out.back().index == c.index && out.back().sign == -c.sign)
            out.pop_back();
        else
            out.push_back(c);
    }
    return out;
}

// result[p-1] = final position of the strand starting at position p.
inline std::vector<int> permutation(const SigmaBraid& b) {
    std::vector<int> at(static_cast<std::size_t>(b.strands()));
    std::iota(at.begin(), at.end(), 1);  // at[pos-1] = strand
    for (const Crossing& c : b.word()) std::swap(at[c.index - 1], at[c.index]);
    std::vector<int> perm(at.size());
    for (std::size_t pos = 0; pos < at.size(); ++pos) perm[at[pos] - 1] = static_cast<int>(pos) + 1;
    return perm;
}

inline bool is_pure(const SigmaBraid& b) {
    std::vector<int> p = permutation(b);
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != static_cast<int>(i) + 1) return false;
    return true;
}

// A braid inducing the trivial permutation, checked on construction.
class PureBraid {
  public:
    explicit PureBraid(SigmaBraid b) : braid_(std::move(b)) {
        if (!is_pure(braid_)) throw index_error("PureBraid: braid permutes its endpoints");
    }

    static PureBraid identity(int strands) { return PureBraid(SigmaBraid::identity(strands)); }

    const SigmaBraid& braid() const { return braid_; }
    int strands() const { return braid_.strands(); }

    bool operator==(const PureBraid& o) const = default;

  private:
    SigmaBraid braid_;
};

inline PureBraid multiply(const PureBraid& a, const PureBraid& b) {
    return PureBraid(multiply(a.braid(), b.braid()));
}
inline PureBraid invert(const PureBraid& b) { return PureBraid(invert(b.braid())); }
inline PureBraid commutator(const PureBraid& a, const PureBraid& b) {
    return PureBraid(commutator(a.braid(), b.braid()));
}

inline PureBraid power(const PureBraid& b, std::int64_t k) {
    const SigmaBraid base = k < 0 ? invert(b.braid()) : b.braid();
    std::vector<Crossing> w;
    for (std::int64_t t = 0; t < (k < 0 ? -k : k); ++t)
        w.insert(w.end(), base.word().begin(), base.word().end());
    return PureBraid(SigmaBraid(b.strands(), std::move(w)));
}

// Artin's generator A_{r,s}: strand s wraps once around strand r.
// Word (s_{s-1} ... s_{r+1}) s_r^2 (s_{r+1}^-1 ... s_{s-1}^-1).
inline PureBraid a_generator(int r, int s, int n) {
    if (!(1 <= r && r < s && s <= n)) throw index_error("a_generator: need 1 <= r < s <= n");
    std::vector<Crossing> w;
    for (int t = s - 1; t > r; --t) w.push_back({t, 1});
    w.push_back({r, 1});
    w.push_back({r, 1});
    for (int t = r + 1; t <= s - 1; ++t) w.push_back({t, -1});
    return PureBraid(SigmaBraid(n, std::move(w)));
}

namespace detail {

// One crossing of the Artin action applied to a reduced word, with the
// fixed convention  s_i : x_i -> x_i x_{i+1} x_i^-1,  x_{i+1} -> x_i.
// The conjugation pattern keeps run-length-encoded words compact.
inline FreeWord artin_substitute(const FreeWord& w, const Crossing& c) {
    FreeWord r(w.alphabet());
    const int i = c.index;
    for (const Letter& l : w.letters()) {
        if (c.sign > 0) {
            if (l.gen == i) {
                r.push_reduced({i, 1});
                r.push_reduced({i + 1, l.exp});
                r.push_reduced({i, -1});
            } else if (l.gen == i + 1) {
                r.push_reduced({i, l.exp});
            } else {
                r.push_reduced(l);
            }
        } else {
            if (l.gen == i) {
                r.push_reduced({i + 1, l.exp});
            } else if (l.gen == i + 1) {
                r.push_reduced({i + 1, -1});
                r.push_reduced({i, l.exp});
                r.push_reduced({i + 1, 1});
            } else {
                r.push_reduced(l);
            }
        }
    }
    return r;
}

// Image of x_g under the automorphism of braid b.  The composite is
// evaluated rightmost crossing first, so b -> action(b) is a homomorphism.
inline FreeWord artin_image(const std::vector<Crossing>& word, int strands, int g) {
    Alphabet a{"x", strands};
    FreeWord w = FreeWord::generator(a, g);
    for (auto it = word.rbegin(); it != word.rend(); ++it) w = artin_substitute(w, *it);
    return w;
}

}  // namespace detail

// The faithful Artin representation of b as an automorphism of F_n.
inline GroupHom artin_action(const SigmaBraid& b) {
    Alphabet a{"x", b.strands()};
    GroupHom h{a, a, {}};
    std::vector<Crossing> word = free_cancel(b.word());
    h.images.reserve(static_cast<std::size_t>(b.strands()));
    for (int g = 1; g <= b.strands(); ++g)
        h.images.push_back(detail::artin_image(word, b.strands(), g));
    return h;
}

// Exact word problem: b is trivial iff its action fixes every generator.
inline bool braid_is_trivial(const SigmaBraid& b) {
    std::vector<Crossing> word = free_cancel(b.word());
    if (word.empty()) return true;
    for (int g = 1; g <= b.strands(); ++g) {
        FreeWord im = detail::artin_image(word, b.strands(), g);
        if (!(im.letters().size() == 1 && im.letters()[0] == Letter{g, 1})) return false;
    }
    return true;
}

inline bool braid_equal(const SigmaBraid& a, const SigmaBraid& b) {
    return braid_is_trivial(multiply(a, invert(b)));
}

namespace detail {

// Removes strand k, tracking its position through the word.
inline std::vector<Crossing> delete_strand_word(const std::vector<Crossing>& word, int k) {
    std::vector<Crossing> out;
    out.reserve(word.size());
    int p = k;
    for (const Crossing& c : word) {
        if (c.index == p) {
            p = c.index + 1;
        } else if (c.index + 1 == p) {
            p = c.index;
        } else {
            out.push_back({c.index > p ? c.index - 1 : c.index, c.sign});
        }
    }
    return out;
}

// Replaces strand k by two parallel copies; p tracks the cable through the
// word, the copies sit at positions p, p+1 of the output.
inline std::vector<Crossing> double_strand_word(const std::vector<Crossing>& word, int k) {
    std::vector<Crossing> out;
    out.reserve(2 * word.size());
    int p = k;
    for (const Crossing& c : word) {
        if (c.index + 1 < p) {
            out.push_back(c);
        } else if (c.index > p) {
            out.push_back({c.index + 1, c.sign});
        } else if (c.index == p) {
            out.push_back({p + 1, c.sign});
            out.push_back({p, c.sign});
            p = p + 1;
        } else {  // c.index == p - 1
            out.push_back({p - 1, c.sign});
            out.push_back({p, c.sign});
            p = p - 1;
        }
    }
    return out;
}

}  // namespace detail

inline SigmaBraid delete_strand(const SigmaBraid& b, int k) {
    if (k < 1 || k > b.strands()) throw index_error("delete_strand: no strand " + std::to_string(k));
    if (b.strands() == 1) throw index_error("delete_strand: cannot delete the last strand");
    return SigmaBraid(b.strands() - 1, detail::delete_strand_word(b.word(), k));
}

inline PureBraid delete_strand(const PureBraid& b, int k) {
    return PureBraid(delete_strand(b.braid(), k));
}

inline PureBraid double_strand(const PureBraid& b, int k) {
    if (k < 1 || k > b.strands()) throw index_error("double_strand: no strand " + std::to_string(k));
    return PureBraid(SigmaBraid(b.strands() + 1, detail::double_strand_word(b.braid().word(), k)));
}

// Symmetric matrix of pairwise linking numbers: entry (i,j) is half the
// signed count of crossings between strands i and j.
inline std::vector<std::vector<std::int64_t>> linking_matrix(const PureBraid& b) {
    const int n = b.strands();
    std::vector<std::vector<std::int64_t>> twice(static_cast<std::size_t>(n),
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    std::vector<int> at(static_cast<std::size_t>(n));
    std::iota(at.begin(), at.end(), 1);
    for (const Crossing& c : b.braid().word()) {
        int u = at[c.index - 1], v = at[c.index];
        twice[u - 1][v - 1] += c.sign;
        twice[v - 1][u - 1] += c.sign;
        std::swap(at[c.index - 1], at[c.index]);
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (twice[i][j] % 2 != 0)
                throw internal_error("linking_matrix: odd crossing count on a pure braid");
            twice[i][j] /= 2;
        }
    }
    return twice;
}

// The cabling generator x_q of P_{n+1}: A_{1,2} pushed up the degeneracy
// word that carries the simplicial-circle simplex <0,1> to <0^{n+1-q},1^q>.
inline PureBraid theta_generator(int n, int q) {
    if (!(1 <= q && q <= n)) throw index_error("theta_generator: need 1 <= q <= n");
    PureBraid b = a_generator(1, 2, 2);
    for (int j = 1; j <= q - 1; ++j) b = double_strand(b, j + 1);
    for (int t = 0; t < n - q; ++t) b = double_strand(b, 1);
    return b;
}

// The embedding Theta_n : F[y1..yn] -> P_{n+1}, y_q -> x_q.
inline PureBraid theta(int n, const FreeWord& w) {
    if (n < 1) throw index_error("theta: need n >= 1");
    if (w.alphabet().rank != n)
        throw index_error("theta: word rank " + std::to_string(w.alphabet().rank) +
                          " does not match n = " + std::to_string(n));
    std::vector<Crossing> out;
    for (const Letter& l : w.letters()) {
        PureBraid gen = theta_generator(n, l.gen);
        PureBraid p = power(gen, l.exp);
        out.insert(out.end(), p.braid().word().begin(), p.braid().word().end());
    }
    return PureBraid(SigmaBraid(n + 1, std::move(out)));
}

// Trivial after deleting any single strand.
inline bool is_brunnian(const PureBraid& b) {
    if (b.strands() == 1) return true;  // P_1 is trivial
    for (int k = 1; k <= b.strands(); ++k)
        if (!braid_is_trivial(delete_strand(b.braid(), k))) return false;
    return true;
}

// Trivial after deleting any strand except the first.
inline bool is_qbrunnian(const PureBraid& b) {
    for (int k = 2; k <= b.strands(); ++k)
        if (!braid_is_trivial(delete_strand(b.braid(), k))) return false;
    return true;
}

inline std::string to_string(const SigmaBraid& b) {
    if (b.word().empty()) return "1";
    std::string s;
    for (const Crossing& c : b.word()) {
        if (!s.empty()) s += ' ';
        s += "s" + std::to_string(c.index);
        if (c.sign < 0) s += "^-1";
    }
    return s;
}

inline std::string to_string(const PureBraid& b) { return to_string(b.braid()); }

}  // namespace braidlab
