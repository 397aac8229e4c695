#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/alphabet.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {

// One run of a reduced word: generator index (1-based) with a nonzero
// exponent.  Words are stored run-length encoded; images under the cabling
// map are dominated by long conjugator runs, so this matters.
struct Letter {
    int gen = 0;
    std::int64_t exp = 0;

    bool operator==(const Letter&) const = default;
};

// A freely reduced word in a free group F_r.  Adjacent runs always have
// distinct generators and all exponents are nonzero; the empty sequence is
// the identity.  Immutable after construction.
class FreeWord {
  public:
    explicit FreeWord(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    static FreeWord identity(Alphabet alphabet) { return FreeWord(std::move(alphabet)); }

    static FreeWord generator(Alphabet alphabet, int gen, std::int64_t exp = 1) {
        alphabet.check_index(gen);
        FreeWord w(std::move(alphabet));
        if (exp != 0) w.letters_.push_back({gen, exp});
        return w;
    }

    // Free reduction of an arbitrary letter sequence.  Idempotent.
    static FreeWord reduce(Alphabet alphabet, const std::vector<Letter>& raw) {
        FreeWord w(std::move(alphabet));
        for (const Letter& l : raw) w.push_reduced(l);
        return w;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_identity() const { return letters_.empty(); }

    // Total letter count Sum |exp| (not the number of runs).
    std::int64_t length() const {
        std::int64_t n = 0;
        for (const Letter& l : letters_) n += l.exp < 0 ? -l.exp : l.exp;
        return n;
    }

    bool operator==(const FreeWord& o) const {
        return alphabet_ == o.alphabet_ && letters_ == o.letters_;
    }

    // Appends one run, merging and cancelling against the current tail.
    void push_reduced(const Letter& l) {
        alphabet_.check_index(l.gen);
        if (l.exp == 0) return;
        if (!letters_.empty() && letters_.back().gen == l.gen) {
            letters_.back().exp += l.exp;
            if (letters_.back().exp == 0) letters_.pop_back();
            return;
        }
        letters_.push_back(l);
    }

    void append_reduced(const FreeWord& v) {
        for (const Letter& l : v.letters_) push_reduced(l);
    }

  private:
    Alphabet alphabet_;
    std::vector<Letter> letters_;
};

inline FreeWord multiply(const FreeWord& u, const FreeWord& v) {
    require_same(u.alphabet(), v.alphabet(), "multiply");
    FreeWord w = u;
    w.append_reduced(v);
    return w;
}

inline FreeWord invert(const FreeWord& w) {
    FreeWord r(w.alphabet());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it)
        r.push_reduced({it->gen, -it->exp});
    return r;
}

inline FreeWord power(const FreeWord& w, std::int64_t k) {
    const FreeWord base = k < 0 ? invert(w) : w;
    std::int64_t reps = k < 0 ? -k : k;
    FreeWord r(w.alphabet());
    for (std::int64_t t = 0; t < reps; ++t) r.append_reduced(base);
    return r;
}

// [u,v] = u v u^-1 v^-1
inline FreeWord commutator(const FreeWord& u, const FreeWord& v) {
    require_same(u.alphabet(), v.alphabet(), "commutator");
    FreeWord w = u;
    w.append_reduced(v);
    w.append_reduced(invert(u));
    w.append_reduced(invert(v));
    return w;
}

// u v u^-1
inline FreeWord conjugate(const FreeWord& u, const FreeWord& v) {
    FreeWord w = u;
    w.append_reduced(v);
    w.append_reduced(invert(u));
    return w;
}

// A homomorphism between free groups, given by its value on each source
// generator.  Extension to words is multiplicative.
struct GroupHom {
    Alphabet source;
    Alphabet target;
    std::vector<FreeWord> images;  // images[g-1] = value at generator g

    static GroupHom identity(const Alphabet& a) {
        GroupHom h{a, a, {}};
        h.images.reserve(static_cast<std::size_t>(a.rank));
        for (int g = 1; g <= a.rank; ++g) h.images.push_back(FreeWord::generator(a, g));
        return h;
    }

    const FreeWord& image(int g) const {
        source.check_index(g);
        return images[static_cast<std::size_t>(g - 1)];
    }
};

inline FreeWord apply_hom(const GroupHom& h, const FreeWord& w) {
    require_same(h.source, w.alphabet(), "apply_hom");
    if (h.images.size() != static_cast<std::size_t>(h.source.rank))
        throw internal_error("apply_hom: image table size != source rank");
    FreeWord r(h.target);
    for (const Letter& l : w.letters()) r.append_reduced(power(h.image(l.gen), l.exp));
    return r;
}

// g after f (apply f first).
inline GroupHom compose(const GroupHom& g, const GroupHom& f) {
    require_same(g.source, f.target, "compose");
    GroupHom h{f.source, g.target, {}};
    h.images.reserve(f.images.size());
    for (const FreeWord& w : f.images) h.images.push_back(apply_hom(g, w));
    return h;
}

inline std::string to_string(const FreeWord& w) {
    if (w.is_identity()) return "1";
    std::string s;
    for (const Letter& l : w.letters()) {
        if (!s.empty()) s += ' ';
        s += w.alphabet().symbol + std::to_string(l.gen);
        if (l.exp != 1) s += "^" + std::to_string(l.exp);
    }
    return s;
}

}  // namespace braidlab
