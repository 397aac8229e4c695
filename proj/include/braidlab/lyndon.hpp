#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "braidlab/errors.hpp"

namespace braidlab {

// Lyndon words over {1..rank}, their standard factorizations, and the Witt
// necklace count.  Words are plain 1-based letter vectors; the standard
// bracketing of a Lyndon word is recovered on demand from the factorization.

using Word = std::vector<int>;

// Degree-then-lexicographic order; the canonical term order for Lie elements.
struct GradedLex {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

inline bool is_lyndon(const Word& w) {
    if (w.empty()) return false;
    const std::size_t n = w.size();
    // strictly smaller than every proper suffix
    for (std::size_t i = 1; i < n; ++i) {
        Word suffix(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
        if (!(w < suffix)) return false;
    }
    return true;
}

// Duval's algorithm: all Lyndon words of length exactly `degree` over
// `rank` letters, in lexicographic order.
inline std::vector<Word> lyndon_words(int rank, int degree) {
    if (rank < 1 || degree < 1) throw index_error("lyndon_words: rank and degree must be >= 1");
    std::vector<Word> out;
    Word w{1};
    while (!w.empty()) {
        if (static_cast<int>(w.size()) == degree) out.push_back(w);
        // extend periodically to full length, then increment
        Word t = w;
        while (static_cast<int>(t.size()) < degree)
            t.push_back(t[t.size() % w.size()]);
        w = t;
        while (!w.empty() && w.back() == rank) w.pop_back();
        if (!w.empty()) ++w.back();
    }
    return out;
}

// Standard (right) factorization of a Lyndon word of length >= 2: w = uv
// with v the lexicographically least proper suffix.  Both halves are Lyndon.
inline std::pair<Word, Word> standard_factorization(const Word& w) {
    if (w.size() < 2) throw index_error("standard_factorization: need length >= 2");
    std::size_t best = 1;
    for (std::size_t i = 2; i < w.size(); ++i) {
        // compare suffix at i with suffix at best
        if (std::lexicographical_compare(w.begin() + static_cast<std::ptrdiff_t>(i), w.end(),
                                         w.begin() + static_cast<std::ptrdiff_t>(best), w.end()))
            best = i;
    }
    Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(best));
    Word v(w.begin() + static_cast<std::ptrdiff_t>(best), w.end());
    return {u, v};
}

inline int mobius(int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            result = -result;
        }
    }
    if (n > 1) result = -result;
    return result;
}

// Rank of the degree-m homogeneous part of the free Lie ring on r
// generators: (1/m) * Sum_{d|m} mu(d) r^{m/d}.
inline std::int64_t witt_rank(int r, int m) {
    if (r < 1 || m < 1) throw index_error("witt_rank: rank and degree must be >= 1");
    std::int64_t sum = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        std::int64_t pw = 1;
        for (int t = 0; t < m / d; ++t) pw *= r;
        sum += mobius(d) * pw;
    }
    return sum / m;
}

// Bracketing tree of a Lyndon word via repeated standard factorization,
// rendered with the alphabet symbol: [y1,[y1,y2]].
inline std::string bracket_string(const Word& w, const std::string& symbol) {
    if (w.size() == 1) return symbol + std::to_string(w[0]);
    auto [u, v] = standard_factorization(w);
    return "[" + bracket_string(u, symbol) + "," + bracket_string(v, symbol) + "]";
}

}  // namespace braidlab
