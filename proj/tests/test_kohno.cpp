#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "braidlab/braid.hpp"
#include "braidlab/kohno.hpp"

using namespace braidlab;

namespace {

KohnoElement B(int i, int j, int n) { return KohnoElement::generator(i, j, n); }

KohnoElement random_kohno(std::mt19937_64& rng, int n, int degree, int nterms) {
    std::uniform_int_distribution<int> pick_k(2, n);
    std::uniform_int_distribution<int> coeff(-2, 2);
    KohnoElement e(n);
    for (int t = 0; t < nterms; ++t) {
        int k = pick_k(rng);
        auto words = lyndon_words(k - 1, degree);
        if (words.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick_w(0, words.size() - 1);
        e.component(k).add_term(words[pick_w(rng)], coeff(rng));
    }
    return e;
}

}  // namespace

TEST_CASE("generators") {
    CHECK(to_string(B(1, 2, 3)) == "B(1,2)");
    CHECK(to_string(B(2, 3, 3)) == "B(2,3)");
    CHECK(to_string(B(1, 4, 4)) == "B(1,4)");
    CHECK_THROWS_AS(B(2, 2, 3), index_error);
    CHECK_THROWS_AS(B(0, 2, 3), index_error);
}

TEST_CASE("infinitesimal braid relations as computed brackets") {
    SECTION("disjoint pairs commute") {
        CHECK(kohno_bracket(B(1, 2, 4), B(3, 4, 4)).is_zero());
    }
    SECTION("[B12, B13 + B23] = 0") {
        CHECK(kohno_bracket(B(1, 2, 3), B(1, 3, 3) + B(2, 3, 3)).is_zero());
    }
    SECTION("[B12, B13] = [B13, B23]") {
        KohnoElement lhs = kohno_bracket(B(1, 2, 3), B(1, 3, 3));
        KohnoElement rhs = kohno_bracket(B(1, 3, 3), B(2, 3, 3));
        CHECK(lhs == rhs);
        CHECK(to_string(lhs) == "[B(1,3),B(2,3)]");
    }
    SECTION("all relation residues vanish for n <= 5") {
        for (int n = 2; n <= 5; ++n) {
            auto witnesses = relations_check(n);
            if (n == 2) CHECK(witnesses.empty());
            for (const auto& w : witnesses) CHECK(w.ok());
        }
    }
    SECTION("strand mismatch rejected") {
        CHECK_THROWS_AS(kohno_bracket(B(1, 2, 3), B(1, 2, 4)), index_error);
    }
}

TEST_CASE("kohno_bracket is a Lie bracket") {
    std::mt19937_64 rng(73);
    SECTION("antisymmetry and Jacobi on random homogeneous triples") {
        for (int trial = 0; trial < 60; ++trial) {
            int n = 3 + trial % 2;
            int da = 1 + trial % 2, db = 1 + (trial / 2) % 2, dc = 1;
            KohnoElement a = random_kohno(rng, n, da, 2);
            KohnoElement b = random_kohno(rng, n, db, 2);
            KohnoElement c = random_kohno(rng, n, dc, 2);
            CHECK(kohno_bracket(a, b) == KohnoElement::zero(n) - kohno_bracket(b, a));
            KohnoElement jac = kohno_bracket(kohno_bracket(a, b), c) +
                               kohno_bracket(kohno_bracket(b, c), a) +
                               kohno_bracket(kohno_bracket(c, a), b);
            CHECK(jac.is_zero());
        }
    }
    SECTION("bilinearity") {
        for (int trial = 0; trial < 20; ++trial) {
            KohnoElement a = random_kohno(rng, 4, 1, 2);
            KohnoElement b = random_kohno(rng, 4, 2, 2);
            KohnoElement c = random_kohno(rng, 4, 1, 2);
            CHECK(kohno_bracket(a + c, b) == kohno_bracket(a, b) + kohno_bracket(c, b));
        }
    }
}

TEST_CASE("ranks of gr(P_n)") {
    CHECK(kohno_rank(3, 1) == 3);
    CHECK(kohno_rank(3, 2) == 1);
    CHECK(kohno_rank(3, 3) == 2);
    CHECK(kohno_rank(4, 2) == 4);

    SECTION("presentation oracle agrees, n <= 4, m <= 4") {
        for (int n = 3; n <= 4; ++n) {
            for (int m = 1; m <= 4; ++m) {
                PresentationOracleResult r = presentation_oracle(n, m);
                CHECK(r.quotient_rank == kohno_rank(n, m));
                CHECK(r.basis_matches);
            }
        }
    }
    SECTION("oracle spot values") {
        CHECK(presentation_oracle(3, 1).quotient_rank == 3);
        CHECK(presentation_oracle(3, 2).quotient_rank == 1);
        CHECK(presentation_oracle(4, 2).quotient_rank == 4);
    }
    SECTION("budget enforced") {
        CHECK_THROWS_AS(presentation_oracle(5, 2), budget_error);
    }
}

TEST_CASE("gr(Theta) on generators reproduces the displayed sums") {
    Alphabet Y3{"y", 3};
    CHECK(to_string(gr_theta(3, LieElement::generator(Y3, 1))) == "B(1,4)+B(2,4)+B(3,4)");
    CHECK(to_string(gr_theta(3, LieElement::generator(Y3, 2))) ==
          "(B(1,3)+B(2,3)) + (B(1,4)+B(2,4))");
    CHECK(to_string(gr_theta(3, LieElement::generator(Y3, 3))) == "B(1,2) + B(1,3) + B(1,4)");
}

TEST_CASE("gr(Theta) degree 1 agrees with braid linking matrices") {
    for (int n = 1; n <= 4; ++n) {
        Alphabet Y{"y", n};
        for (int q = 1; q <= n; ++q) {
            KohnoElement e = gr_theta(n, LieElement::generator(Y, q));
            auto lk = linking_matrix(theta(n, FreeWord::generator(Y, q)));
            for (int j = 2; j <= n + 1; ++j)
                for (int i = 1; i < j; ++i)
                    CHECK(e.component(j).coeff({i}) ==
                          lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)]);
        }
    }
}

TEST_CASE("gr(Theta) injectivity certificates") {
    SECTION("1x1 base case") {
        GrThetaMatrix r = gr_theta_matrix(1, 1);
        CHECK(r.matrix.rows() == 1);
        CHECK(r.matrix.cols() == 1);
        CHECK(r.matrix.at(0, 0) == 1);
        CHECK(r.rank == 1);
        CHECK(r.injective);
    }
    SECTION("degree 1, two generators") {
        GrThetaMatrix r = gr_theta_matrix(2, 1);
        CHECK(r.matrix.rows() == 2);
        CHECK(r.matrix.cols() == 3);
        CHECK(r.rank == 2);
        CHECK(r.injective);
    }
    SECTION("witt ranks achieved in low degrees") {
        for (int n = 1; n <= 3; ++n)
            for (int m = 1; m <= 3; ++m) CHECK(gr_theta_matrix(n, m).injective);
        CHECK(gr_theta_matrix(3, 2).rank == witt_rank(3, 2));
    }
}

TEST_CASE("delta example") {
    DeltaExampleReport rep = delta_example_check();
    CHECK(rep.coeff_t1 == -1);
    CHECK(rep.coeff_t2 == 2);
    CHECK(rep.delta_nonzero);
    CHECK(rep.independence_rank == 3);
    CHECK(rep.pass);
}

TEST_CASE("derivation representation") {
    SECTION("default assignment satisfies the relations, n <= 4") {
        for (int n = 2; n <= 4; ++n) {
            DerivationRepReport rep = derivation_rep_validate(default_derivation_assignment(n));
            CHECK(rep.relations_hold);
        }
    }
    SECTION("zero assignment satisfies relations but is not injective") {
        DerivationAssignment z = zero_derivation_assignment(2);
        CHECK(derivation_rep_validate(z).relations_hold);
        CHECK(!ad_theta_matrix(z, 2, 1).injective);
    }
    SECTION("Ad o gr(Theta) has full rank in low degrees") {
        for (int n = 2; n <= 3; ++n) {
            DerivationAssignment a = default_derivation_assignment(n);
            for (int m = 1; m <= 3; ++m) {
                AdThetaMatrix r = ad_theta_matrix(a, n, m);
                CHECK(r.rank == witt_rank(n, m));
                CHECK(r.injective);
            }
        }
        CHECK(ad_theta_matrix(default_derivation_assignment(2), 2, 1).rank == 2);
    }
}
