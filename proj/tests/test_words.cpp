#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidlab/freeword.hpp"
#include "braidlab/magnus.hpp"

using namespace braidlab;

namespace {

const Alphabet G2{"g", 2};
const Alphabet G3{"g", 3};

FreeWord gen(const Alphabet& a, int g, std::int64_t e = 1) { return FreeWord::generator(a, g, e); }

// Independent reduction oracle: expand to single letters, repeatedly delete
// adjacent inverse pairs, re-encode.  Quadratic and blunt on purpose.
std::vector<std::pair<int, int>> naive_reduce(std::vector<std::pair<int, int>> letters) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
            if (letters[i].first == letters[i + 1].first &&
                letters[i].second == -letters[i + 1].second) {
                letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(i),
                              letters.begin() + static_cast<std::ptrdiff_t>(i) + 2);
                changed = true;
                break;
            }
        }
    }
    return letters;
}

std::vector<std::pair<int, int>> flatten(const FreeWord& w) {
    std::vector<std::pair<int, int>> out;
    for (const Letter& l : w.letters()) {
        std::int64_t n = l.exp < 0 ? -l.exp : l.exp;
        for (std::int64_t t = 0; t < n; ++t) out.emplace_back(l.gen, l.exp < 0 ? -1 : 1);
    }
    return out;
}

FreeWord random_word(std::mt19937_64& rng, const Alphabet& a, int len) {
    std::uniform_int_distribution<int> pick_gen(1, a.rank);
    std::uniform_int_distribution<int> pick_sign(0, 1);
    std::vector<Letter> raw;
    for (int i = 0; i < len; ++i) raw.push_back({pick_gen(rng), pick_sign(rng) ? 1 : -1});
    return FreeWord::reduce(a, raw);
}

}  // namespace

TEST_CASE("free reduction") {
    SECTION("cancellation") {
        FreeWord w = FreeWord::reduce(G2, {{1, 1}, {2, 1}, {2, -1}});
        CHECK(w == gen(G2, 1));
    }
    SECTION("empty input is the identity") {
        CHECK(FreeWord::reduce(G2, {}).is_identity());
    }
    SECTION("partial run cancellation") {
        // g1^2 g1^-1 g2 -> g1 g2
        FreeWord w = FreeWord::reduce(G2, {{1, 2}, {1, -1}, {2, 1}});
        CHECK(w == multiply(gen(G2, 1), gen(G2, 2)));
        CHECK(flatten(w) == naive_reduce({{1, 1}, {1, 1}, {1, -1}, {2, 1}}));
    }
    SECTION("index range enforced") {
        CHECK_THROWS_AS(FreeWord::reduce(G2, {{3, 1}}), index_error);
    }
    SECTION("reduce is idempotent and matches the naive oracle on random input") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 200; ++trial) {
            std::uniform_int_distribution<int> pick_gen(1, 3), pick_exp(-3, 3);
            std::vector<Letter> raw;
            std::vector<std::pair<int, int>> flat;
            for (int i = 0; i < 12; ++i) {
                int g = pick_gen(rng), e = pick_exp(rng);
                raw.push_back({g, e});
                for (int t = 0; t < (e < 0 ? -e : e); ++t) flat.emplace_back(g, e < 0 ? -1 : 1);
            }
            FreeWord w = FreeWord::reduce(G3, raw);
            CHECK(flatten(w) == naive_reduce(flat));
            CHECK(FreeWord::reduce(G3, w.letters()) == w);
        }
    }
}

TEST_CASE("multiply / invert / commutator") {
    CHECK(multiply(gen(G2, 1), gen(G2, 1, -1)).is_identity());
    CHECK(multiply(multiply(gen(G2, 1), gen(G2, 2)), multiply(gen(G2, 2, -1), FreeWord::identity(G2))) ==
          gen(G2, 1));
    // (g1g2, g2^-1 g3) -> g1 g3
    FreeWord u = multiply(gen(G3, 1), gen(G3, 2));
    FreeWord v = multiply(gen(G3, 2, -1), gen(G3, 3));
    CHECK(multiply(u, v) == multiply(gen(G3, 1), gen(G3, 3)));

    CHECK(invert(multiply(gen(G2, 1), gen(G2, 2))) == multiply(gen(G2, 2, -1), gen(G2, 1, -1)));
    CHECK(invert(FreeWord::identity(G2)).is_identity());
    CHECK(invert(gen(G2, 1, 3)) == gen(G2, 1, -3));

    CHECK(commutator(gen(G2, 1), gen(G2, 1)).is_identity());
    CHECK(commutator(gen(G2, 1), gen(G2, 2)) ==
          FreeWord::reduce(G2, {{1, 1}, {2, 1}, {1, -1}, {2, -1}}));
    CHECK(commutator(multiply(gen(G2, 1), gen(G2, 2)), FreeWord::identity(G2)).is_identity());

    SECTION("alphabet mismatch rejected") {
        CHECK_THROWS_AS(multiply(gen(G2, 1), gen(G3, 1)), index_error);
    }

    SECTION("group laws on random words") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 100; ++trial) {
            FreeWord u = random_word(rng, G3, 10);
            FreeWord v = random_word(rng, G3, 10);
            FreeWord w = random_word(rng, G3, 10);
            CHECK(multiply(u, invert(u)).is_identity());
            CHECK(multiply(multiply(u, v), w) == multiply(u, multiply(v, w)));
            CHECK(multiply(u, FreeWord::identity(G3)) == u);
            CHECK(commutator(w, w).is_identity());
        }
    }
}

TEST_CASE("homomorphism application") {
    SECTION("commutator with a collapsed generator dies") {
        GroupHom h{G2, G2, {gen(G2, 1), FreeWord::identity(G2)}};
        CHECK(apply_hom(h, commutator(gen(G2, 1), gen(G2, 2))).is_identity());
    }
    SECTION("inverse of image") {
        GroupHom h{G2, G2, {multiply(gen(G2, 1), gen(G2, 2)), gen(G2, 2)}};
        CHECK(apply_hom(h, gen(G2, 1, -1)) == multiply(gen(G2, 2, -1), gen(G2, 1, -1)));
    }
    SECTION("identity homomorphism") {
        std::mt19937_64 rng(3);
        GroupHom id = GroupHom::identity(G3);
        for (int trial = 0; trial < 20; ++trial) {
            FreeWord w = random_word(rng, G3, 8);
            CHECK(apply_hom(id, w) == w);
        }
    }
    SECTION("multiplicativity") {
        std::mt19937_64 rng(5);
        GroupHom h{G3, G2, {gen(G2, 1), commutator(gen(G2, 1), gen(G2, 2)), gen(G2, 2, -1)}};
        for (int trial = 0; trial < 50; ++trial) {
            FreeWord u = random_word(rng, G3, 8);
            FreeWord v = random_word(rng, G3, 8);
            CHECK(apply_hom(h, multiply(u, v)) == multiply(apply_hom(h, u), apply_hom(h, v)));
        }
    }
}

TEST_CASE("Magnus expansion") {
    const Alphabet A2{"a", 2};
    SECTION("identity maps to 1") {
        CHECK(magnus_expand(FreeWord::identity(G2), 3) == NCPolynomial::one(A2, 3));
    }
    SECTION("generator maps to 1 + a") {
        NCPolynomial p = magnus_expand(gen(G2, 1), 2);
        CHECK(p.coeff({}) == 1);
        CHECK(p.coeff({1}) == 1);
        CHECK(p.coeffs().size() == 2);
    }
    SECTION("commutator expands to 1 + a1a2 - a2a1 at degree 2") {
        NCPolynomial p = magnus_expand(commutator(gen(G2, 1), gen(G2, 2)), 2);
        CHECK(p.coeff({}) == 1);
        CHECK(p.coeff({1}) == 0);
        CHECK(p.coeff({2}) == 0);
        CHECK(p.coeff({1, 2}) == 1);
        CHECK(p.coeff({2, 1}) == -1);
        CHECK(p.coeff({1, 1}) == 0);
        CHECK(p.coeff({2, 2}) == 0);
    }
    SECTION("inverse series: g^-1 at degree 3") {
        NCPolynomial p = magnus_expand(gen(G2, 1, -1), 3);
        CHECK(p.coeff({1}) == -1);
        CHECK(p.coeff({1, 1}) == 1);
        CHECK(p.coeff({1, 1, 1}) == -1);
    }
    SECTION("multiplicativity on random words") {
        std::mt19937_64 rng(13);
        for (int trial = 0; trial < 40; ++trial) {
            FreeWord u = random_word(rng, G2, 6);
            FreeWord v = random_word(rng, G2, 6);
            CHECK(magnus_expand(multiply(u, v), 4) == magnus_expand(u, 4) * magnus_expand(v, 4));
        }
    }
}

TEST_CASE("descending central series degree") {
    CHECK(lcs_degree(gen(G2, 1)) == 1);
    CHECK(!lcs_degree(FreeWord::identity(G2)).has_value());
    FreeWord c = commutator(gen(G2, 1), gen(G2, 2));
    CHECK(lcs_degree(c) == 2);
    CHECK(lcs_degree(commutator(c, gen(G2, 1))) == 3);

    SECTION("bracketing with a generator raises the degree") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 30; ++trial) {
            FreeWord w = random_word(rng, G2, 6);
            if (w.is_identity()) continue;
            FreeWord g = gen(G2, 1 + trial % 2);
            FreeWord c2 = commutator(w, g);
            if (c2.is_identity()) continue;
            int m = *lcs_degree(w);
            CHECK(*lcs_degree(c2) >= m + 1);
            if (!lie_bracket(gr_leading_term(w), gr_leading_term(g)).is_zero())
                CHECK(*lcs_degree(c2) == m + 1);
        }
    }
}

TEST_CASE("leading terms in the associated graded Lie ring") {
    const Alphabet Y2{"y", 2};
    SECTION("generator") {
        CHECK(gr_leading_term(gen(G2, 1)) == LieElement::generator(Y2, 1));
    }
    SECTION("commutator of generators") {
        LieElement e = gr_leading_term(commutator(gen(G2, 1), gen(G2, 2)));
        CHECK(e == LieElement::basis_term(Y2, {1, 2}));
        LieElement f = gr_leading_term(commutator(gen(G2, 2), gen(G2, 1)));
        CHECK(f == LieElement::basis_term(Y2, {1, 2}, -1));
    }
    SECTION("identity input rejected") {
        CHECK_THROWS_AS(gr_leading_term(FreeWord::identity(G2)), index_error);
    }
    SECTION("leading term of [u,v] is the bracket of leading terms when nonzero") {
        std::mt19937_64 rng(23);
        int checked = 0;
        while (checked < 25) {
            FreeWord u = random_word(rng, G2, 5);
            FreeWord v = random_word(rng, G2, 5);
            FreeWord c = commutator(u, v);
            if (u.is_identity() || v.is_identity() || c.is_identity()) continue;
            LieElement lhs = lie_bracket(gr_leading_term(u), gr_leading_term(v));
            if (lhs.is_zero()) continue;
            CHECK(gr_leading_term(c) == lhs);
            ++checked;
        }
    }
}
