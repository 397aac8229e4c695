// Acceptance suite: one line per criterion, nonzero exit when any fails.
// Every expected value is pinned here; nothing is recalibrated at runtime.

#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "braidlab/braid.hpp"
#include "braidlab/homology.hpp"
#include "braidlab/kohno.hpp"
#include "braidlab/magnus.hpp"
#include "braidlab/simplicial.hpp"

using namespace braidlab;

namespace {

struct Harness {
    int failures = 0;

    void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        std::string detail;
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::printf("[%s] criterion %2d: %s (%lld ms)%s%s\n", ok ? "PASS" : "FAIL", id,
                    name.c_str(), static_cast<long long>(ms), detail.empty() ? "" : " -- ",
                    detail.c_str());
        std::fflush(stdout);
        if (!ok) ++failures;
    }
};

FreeWord random_reduced_word(std::mt19937_64& rng, const Alphabet& a, int max_len) {
    std::uniform_int_distribution<int> pick(1, a.rank), sgn(0, 1), len(1, max_len);
    std::vector<Letter> raw;
    int L = len(rng);
    for (int i = 0; i < L; ++i) raw.push_back({pick(rng), sgn(rng) ? 1 : -1});
    return FreeWord::reduce(a, raw);
}

}  // namespace

int main() {
    Harness h;

    h.criterion(1, "gr(Theta_3) generator values, string-exact", [](std::string& detail) {
        Alphabet Y3{"y", 3};
        const char* expected[3] = {"B(1,4)+B(2,4)+B(3,4)", "(B(1,3)+B(2,3)) + (B(1,4)+B(2,4))",
                                   "B(1,2) + B(1,3) + B(1,4)"};
        for (int q = 1; q <= 3; ++q) {
            std::string got = to_string(gr_theta(3, LieElement::generator(Y3, q)));
            if (got != expected[q - 1]) {
                detail = "q=" + std::to_string(q) + " got " + got;
                return false;
            }
        }
        return true;
    });

    h.criterion(2, "delta example: coefficients (-1, 2), independence rank 3",
                [](std::string& detail) {
                    DeltaExampleReport r = delta_example_check();
                    if (!(r.coeff_t1 == -1 && r.coeff_t2 == 2)) {
                        detail = "unexpected coefficients";
                        return false;
                    }
                    if (!r.delta_nonzero) {
                        detail = "delta vanished";
                        return false;
                    }
                    if (r.independence_rank != 3) {
                        detail = "rank " + std::to_string(r.independence_rank);
                        return false;
                    }
                    return r.pass;
                });

    h.criterion(3, "gr(Theta_n) injective for n <= 4, m <= 5 (Smith certificates)",
                [](std::string& detail) {
                    for (int n = 1; n <= 4; ++n) {
                        for (int m = 1; m <= 5; ++m) {
                            GrThetaMatrix r = gr_theta_matrix(n, m);
                            if (!r.injective || r.rank != witt_rank(n, m)) {
                                detail = "n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                         " rank " + std::to_string(r.rank);
                                return false;
                            }
                        }
                    }
                    return true;
                });

    h.criterion(4, "Theta faithful on 3x500 random words of length <= 8", [](std::string& detail) {
        std::mt19937_64 rng(2026);
        for (int n = 2; n <= 4; ++n) {
            Alphabet Y{"y", n};
            int done = 0;
            while (done < 500) {
                FreeWord w = random_reduced_word(rng, Y, 8);
                if (w.is_identity()) continue;
                if (braid_is_trivial(theta(n, w).braid())) {
                    detail = "trivial image at n=" + std::to_string(n) + " word " + to_string(w);
                    return false;
                }
                ++done;
            }
        }
        return true;
    });

    h.criterion(5, "simplicial identities (AP level 4, F[S1] level 5) and Theta naturality",
                [](std::string& detail) {
                    IdentityReport fs1 = verify_simplicial_identities<Fs1>(5, 100, 1);
                    if (!fs1.ok()) {
                        detail = "fs1: " + fs1.failures.front();
                        return false;
                    }
                    IdentityReport ap = verify_simplicial_identities<Ap>(4, 100, 2, 4);
                    if (!ap.ok()) {
                        detail = "ap: " + ap.failures.front();
                        return false;
                    }
                    ThetaSimplicialReport t = theta_simplicial_check(3);
                    if (!t.ok()) {
                        detail = t.failures.empty() ? "base case" : t.failures.front();
                        return false;
                    }
                    return true;
                });

    h.criterion(6, "braid relations: residues, oracle ranks, Jacobi on 1000 triples",
                [](std::string& detail) {
                    for (int n = 2; n <= 5; ++n)
                        for (const RelationWitness& w : relations_check(n))
                            if (!w.ok()) {
                                detail = "residue at n=" + std::to_string(n);
                                return false;
                            }
                    for (int n = 2; n <= 4; ++n) {
                        for (int m = 1; m <= 4; ++m) {
                            PresentationOracleResult r = presentation_oracle(n, m);
                            if (r.quotient_rank != kohno_rank(n, m) || !r.basis_matches) {
                                detail = "oracle mismatch n=" + std::to_string(n) +
                                         " m=" + std::to_string(m);
                                return false;
                            }
                        }
                    }
                    std::mt19937_64 rng(3);
                    std::uniform_int_distribution<int> pick_n(3, 4), pick_d(1, 2), coeff(-2, 2);
                    for (int trial = 0; trial < 1000; ++trial) {
                        int n = pick_n(rng);
                        KohnoElement e[3] = {KohnoElement::zero(n), KohnoElement::zero(n),
                                             KohnoElement::zero(n)};
                        for (auto& x : e) {
                            int k = 2 + static_cast<int>(rng() % (n - 1));
                            auto words = lyndon_words(k - 1, pick_d(rng));
                            if (words.empty()) continue;
                            x.component(k).add_term(words[rng() % words.size()], coeff(rng));
                        }
                        KohnoElement jac = kohno_bracket(kohno_bracket(e[0], e[1]), e[2]) +
                                           kohno_bracket(kohno_bracket(e[1], e[2]), e[0]) +
                                           kohno_bracket(kohno_bracket(e[2], e[0]), e[1]);
                        if (!jac.is_zero()) {
                            detail = "Jacobi failed at trial " + std::to_string(trial);
                            return false;
                        }
                    }
                    return true;
                });

    h.criterion(7, "linking pattern of theta(n, y_q) for q <= n <= 5", [](std::string& detail) {
        for (int n = 1; n <= 5; ++n) {
            Alphabet Y{"y", n};
            for (int q = 1; q <= n; ++q) {
                auto lk = linking_matrix(theta(n, FreeWord::generator(Y, q)));
                for (int i = 1; i <= n + 1; ++i) {
                    for (int j = i + 1; j <= n + 1; ++j) {
                        std::int64_t want = (i <= n - q + 1 && n - q + 1 < j) ? 1 : 0;
                        if (lk[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] !=
                            want) {
                            detail = "n=" + std::to_string(n) + " q=" + std::to_string(q);
                            return false;
                        }
                    }
                }
            }
        }
        return true;
    });

    h.criterion(8, "200 random Moore cycles map to Brunnian braids (levels 2-3)",
                [](std::string& detail) {
                    std::mt19937_64 rng(5);
                    Alphabet Y2{"y", 2};
                    FreeWord c2 =
                        commutator(FreeWord::generator(Y2, 1), FreeWord::generator(Y2, 2, -1));
                    // level-3 seed cycles: commutators of degeneracy images of c2
                    FreeWord s0c = apply_hom(degeneracy_fs1(2, 0), c2);
                    FreeWord s1c = apply_hom(degeneracy_fs1(2, 1), c2);
                    FreeWord s2c = apply_hom(degeneracy_fs1(2, 2), c2);
                    std::vector<FreeWord> seeds3 = {commutator(s0c, s2c), commutator(s0c, s1c),
                                                    commutator(s1c, s2c)};
                    int done = 0;
                    while (done < 200) {
                        int level = 2 + static_cast<int>(rng() % 2);
                        Alphabet Y{"y", level};
                        FreeWord cycle(Y);
                        if (level == 2) {
                            cycle = rng() % 2 ? c2 : invert(c2);
                        } else {
                            cycle = seeds3[rng() % seeds3.size()];
                            if (rng() % 2) cycle = invert(cycle);
                        }
                        // conjugate, and sometimes multiply in a second conjugate
                        FreeWord g = random_reduced_word(rng, Y, 3);
                        cycle = conjugate(g, cycle);
                        if (rng() % 2) {
                            FreeWord g2 = random_reduced_word(rng, Y, 2);
                            FreeWord extra =
                                level == 2 ? c2 : seeds3[rng() % seeds3.size()];
                            cycle = multiply(cycle, conjugate(g2, extra));
                        }
                        if (!is_moore_cycle<Fs1>(level, cycle)) continue;  // filter per contract
                        if (!is_brunnian(theta(level, cycle))) {
                            detail = "non-Brunnian image at level " + std::to_string(level);
                            return false;
                        }
                        ++done;
                    }
                    return true;
                });

    h.criterion(9, "E^0 homology: Z at (m,t)=(1,1) and (2,2), zero elsewhere in range",
                [](std::string& detail) {
                    IntegerChainComplex c1 = lie_degree_complex(1, 7);
                    if (!(homology(c1, 1) == AbelianInvariants{1, {}})) {
                        detail = "H(1,1)";
                        return false;
                    }
                    for (int t = 2; t <= 6; ++t)
                        if (!homology(c1, t).is_trivial()) {
                            detail = "H(1," + std::to_string(t) + ")";
                            return false;
                        }
                    IntegerChainComplex c2 = lie_degree_complex(2, 4);
                    if (!homology(c2, 1).is_trivial()) {
                        detail = "H(2,1)";
                        return false;
                    }
                    if (!(homology(c2, 2) == AbelianInvariants{1, {}})) {
                        detail = "H(2,2)";
                        return false;
                    }
                    if (!homology(c2, 3).is_trivial()) {
                        detail = "H(2,3)";
                        return false;
                    }
                    return true;
                });

    h.criterion(10, "every face composite onto P_2 is hit: linking gcd 1, n <= 4",
                [](std::string& detail) {
                    for (int n = 1; n <= 4; ++n) {
                        Alphabet Y{"y", n};
                        std::vector<PureBraid> images;
                        for (int q = 1; q <= n; ++q)
                            images.push_back(theta(n, FreeWord::generator(Y, q)));
                        for (int a = 1; a <= n + 1; ++a) {
                            for (int b = a + 1; b <= n + 1; ++b) {
                                std::int64_t g = 0;
                                for (const PureBraid& im : images) {
                                    SigmaBraid cur = im.braid();
                                    for (int k = n + 1; k >= 1; --k)
                                        if (k != a && k != b) cur = delete_strand(cur, k);
                                    g = std::gcd(g, linking_matrix(PureBraid(cur))[0][1]);
                                }
                                if (g != 1) {
                                    detail = "pair (" + std::to_string(a) + "," +
                                             std::to_string(b) + ") at n=" + std::to_string(n);
                                    return false;
                                }
                            }
                        }
                    }
                    return true;
                });

    h.criterion(11, "derivation representation valid (n <= 4), Ad o gr(Theta) full rank (n,m <= 3)",
                [](std::string& detail) {
                    for (int n = 2; n <= 4; ++n) {
                        DerivationRepReport rep =
                            derivation_rep_validate(default_derivation_assignment(n));
                        if (!rep.relations_hold) {
                            detail = "relations fail at n=" + std::to_string(n) + ": " +
                                     rep.violations.front();
                            return false;
                        }
                    }
                    for (int n = 2; n <= 3; ++n) {
                        DerivationAssignment a = default_derivation_assignment(n);
                        for (int m = 1; m <= 3; ++m) {
                            AdThetaMatrix r = ad_theta_matrix(a, n, m);
                            if (!r.injective || r.rank != witt_rank(n, m)) {
                                detail = "rank " + std::to_string(r.rank) + " at n=" +
                                         std::to_string(n) + " m=" + std::to_string(m);
                                return false;
                            }
                        }
                    }
                    return true;
                });

    if (h.failures == 0)
        std::printf("acceptance: all 11 criteria passed\n");
    else
        std::printf("acceptance: %d criterion(s) FAILED\n", h.failures);
    return h.failures == 0 ? 0 : 1;
}
