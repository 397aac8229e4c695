#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/errors.hpp"
#include "braidlab/freelie.hpp"
#include "braidlab/freeword.hpp"

namespace braidlab {
namespace detail {

// Shared cursor for the three small grammars.  Round trips with the
// printers are exact: whatever to_string emits parses back to an equal
// value.
class Cursor {
  public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    std::int64_t integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        std::size_t digits = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == digits) fail("expected an integer");
        return std::stoll(s_.substr(start, pos_ - start));
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw parse_error(msg + " at position " + std::to_string(pos_) + " in \"" + s_ + "\"");
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

// Words in an indexed alphabet: `y1 y2^-1 (y1 y3)^2 [y1,y2] 1`.
inline FreeWord parse_free_word(const std::string& text, const Alphabet& alphabet) {
    detail::Cursor c(text);

    auto expr = [&](auto&& self) -> FreeWord {
        FreeWord acc = FreeWord::identity(alphabet);
        for (;;) {
            char p = c.peek();
            FreeWord atom(alphabet);
            if (p == '[') {
                c.expect('[');
                FreeWord u = self(self);
                c.expect(',');
                FreeWord v = self(self);
                c.expect(']');
                atom = commutator(u, v);
            } else if (p == '(') {
                c.expect('(');
                atom = self(self);
                c.expect(')');
            } else if (p == '1') {
                c.accept('1');
            } else if (p == alphabet.symbol[0]) {
                c.accept(p);
                int g = static_cast<int>(c.integer());
                if (g < 1 || g > alphabet.rank) c.fail("generator index out of range");
                atom = FreeWord::generator(alphabet, g);
            } else {
                break;
            }
            if (c.accept('^')) atom = power(atom, c.integer());
            acc.append_reduced(atom);
        }
        return acc;
    };

    FreeWord w = expr(expr);
    if (!c.done()) c.fail("trailing input");
    return w;
}

// Braid words: `s1 s2^-1 A(1,3) [A(1,2),A(1,3)] 1`, with an optional
// strand-count prefix `n=4:`.  When both the prefix and a caller-supplied
// count are present they must agree.
inline SigmaBraid parse_braid(const std::string& text, int strands = 0) {
    detail::Cursor c(text);
    if (c.peek() == 'n') {
        c.accept('n');
        c.expect('=');
        int parsed = static_cast<int>(c.integer());
        c.expect(':');
        if (strands > 0 && strands != parsed)
            c.fail("strand count prefix disagrees with the requested count");
        strands = parsed;
    }
    if (strands < 1) throw parse_error("parse_braid: strand count missing (use --n or an n=k: prefix)");
    const int n = strands;

    auto expr = [&](auto&& self) -> std::vector<Crossing> {
        std::vector<Crossing> acc;
        for (;;) {
            char p = c.peek();
            std::vector<Crossing> atom;
            if (p == 's') {
                c.accept('s');
                int i = static_cast<int>(c.integer());
                if (i < 1 || i >= n) c.fail("crossing index out of range");
                atom.push_back({i, 1});
            } else if (p == 'A') {
                c.accept('A');
                c.expect('(');
                int r = static_cast<int>(c.integer());
                c.expect(',');
                int s = static_cast<int>(c.integer());
                c.expect(')');
                if (!(1 <= r && r < s && s <= n)) c.fail("A(r,s) indices out of range");
                atom = a_generator(r, s, n).braid().word();
            } else if (p == '[') {
                c.expect('[');
                SigmaBraid u(n, self(self));
                c.expect(',');
                SigmaBraid v(n, self(self));
                c.expect(']');
                atom = commutator(u, v).word();
            } else if (p == '(') {
                c.expect('(');
                atom = self(self);
                c.expect(')');
            } else if (p == '1') {
                c.accept('1');
            } else {
                break;
            }
            if (c.accept('^')) {
                std::int64_t k = c.integer();
                SigmaBraid base(n, atom);
                if (k < 0) base = invert(base);
                std::vector<Crossing> reps;
                for (std::int64_t t = 0; t < (k < 0 ? -k : k); ++t)
                    reps.insert(reps.end(), base.word().begin(), base.word().end());
                atom = std::move(reps);
            }
            acc.insert(acc.end(), atom.begin(), atom.end());
        }
        return acc;
    };

    std::vector<Crossing> word = expr(expr);
    if (!c.done()) c.fail("trailing input");
    return SigmaBraid(n, std::move(word));
}

// Lie combinations: `3*[y1,y2] - [y1,[y2,y3]] + y1`, with the left-normed
// shorthand `[y1,y2,y3]` meaning [[y1,y2],y3].
inline LieElement parse_lie_element(const std::string& text, const Alphabet& alphabet) {
    detail::Cursor c(text);

    auto tree = [&](auto&& self) -> LieTree {
        char p = c.peek();
        if (p == '[') {
            c.expect('[');
            LieTree acc = self(self);
            c.expect(',');
            acc = LieTree::node(std::move(acc), self(self));
            while (c.accept(',')) acc = LieTree::node(std::move(acc), self(self));
            c.expect(']');
            return acc;
        }
        if (p == alphabet.symbol[0]) {
            c.accept(p);
            int g = static_cast<int>(c.integer());
            if (g < 1 || g > alphabet.rank) c.fail("generator index out of range");
            return LieTree::leaf(g);
        }
        c.fail("expected a generator or '['");
    };

    std::vector<std::pair<Int, LieTree>> combination;
    bool first = true;
    while (!c.done()) {
        Int sign = 1;
        if (c.accept('+')) {
            // explicit plus
        } else if (c.accept('-')) {
            sign = -1;
        } else if (!first) {
            c.fail("expected '+' or '-' between terms");
        }
        first = false;
        Int coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            coeff = Int(c.integer());
            if (coeff == 0 && !c.accept('*')) continue;  // a bare 0 term
            if (coeff != 0) c.expect('*');
        }
        combination.emplace_back(sign * coeff, tree(tree));
    }
    return lie_normal_form(alphabet, combination);
}

}  // namespace braidlab
