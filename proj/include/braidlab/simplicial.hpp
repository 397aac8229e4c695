#pragma once

#include <random>
#include <string>
#include <vector>

#include "braidlab/braid.hpp"
#include "braidlab/freeword.hpp"

namespace braidlab {

// Face and degeneracy tables of the free simplicial group on the circle,
// F[S^1], whose level-n group is free on y_1..y_n.  The generator y_q at
// level n is the simplex <0^{n+1-q}, 1^q>; deleting or duplicating one
// coordinate gives the tables below (a deleted last 0 or 1 falls into the
// basepoint class, i.e. the identity).
inline GroupHom face_fs1(int n, int i) {
    if (n < 1 || i < 0 || i > n) throw index_error("face_fs1: need n >= 1, 0 <= i <= n");
    Alphabet src{"y", n}, dst{"y", n - 1};
    GroupHom h{src, dst, {}};
    for (int q = 1; q <= n; ++q) {
        if (i >= n + 1 - q)
            h.images.push_back(q - 1 == 0 ? FreeWord::identity(dst)
                                          : FreeWord::generator(dst, q - 1));
        else if (q == n)  // only reachable with i == 0
            h.images.push_back(FreeWord::identity(dst));
        else
            h.images.push_back(FreeWord::generator(dst, q));
    }
    return h;
}

inline GroupHom degeneracy_fs1(int n, int j) {
    if (n < 0 || j < 0 || j > n) throw index_error("degeneracy_fs1: need 0 <= j <= n");
    Alphabet src{"y", n}, dst{"y", n + 1};
    GroupHom h{src, dst, {}};
    for (int q = 1; q <= n; ++q)
        h.images.push_back(FreeWord::generator(dst, j >= n + 1 - q ? q + 1 : q));
    return h;
}

// ---------------------------------------------------------------------------
// The two concrete simplicial groups, as value-level policies sharing one
// interface: level groups, faces, degeneracies, and an exact triviality
// decision.

struct Fs1 {
    using Elem = FreeWord;
    static constexpr const char* name = "fs1";

    static Alphabet level_alphabet(int level) { return Alphabet{"y", level}; }
    static Elem identity(int level) { return FreeWord::identity(level_alphabet(level)); }
    static Elem face(int level, int i, const Elem& e) { return apply_hom(face_fs1(level, i), e); }
    static Elem degeneracy(int level, int j, const Elem& e) {
        return apply_hom(degeneracy_fs1(level, j), e);
    }
    static bool trivial(const Elem& e) { return e.is_identity(); }
    static Elem multiply(const Elem& a, const Elem& b) { return braidlab::multiply(a, b); }
    static Elem inverse(const Elem& e) { return invert(e); }

    static std::vector<Elem> generators(int level) {
        std::vector<Elem> out;
        for (int q = 1; q <= level; ++q) out.push_back(FreeWord::generator(level_alphabet(level), q));
        return out;
    }

    static Elem random_element(std::mt19937_64& rng, int level, int length) {
        if (level == 0) return identity(0);
        std::uniform_int_distribution<int> pick(1, level), sgn(0, 1);
        std::vector<Letter> raw;
        for (int t = 0; t < length; ++t) raw.push_back({pick(rng), sgn(rng) ? 1 : -1});
        return FreeWord::reduce(level_alphabet(level), raw);
    }

    static std::string show(const Elem& e) { return to_string(e); }
};

struct Ap {
    using Elem = PureBraid;
    static constexpr const char* name = "ap";

    static Elem identity(int level) { return PureBraid::identity(level + 1); }
    static Elem face(int level, int i, const Elem& e) {
        (void)level;
        return delete_strand(e, i + 1);
    }
    static Elem degeneracy(int level, int j, const Elem& e) {
        (void)level;
        return double_strand(e, j + 1);
    }
    static bool trivial(const Elem& e) { return braid_is_trivial(e.braid()); }
    static Elem multiply(const Elem& a, const Elem& b) { return braidlab::multiply(a, b); }
    static Elem inverse(const Elem& e) { return invert(e); }

    static std::vector<Elem> generators(int level) {
        std::vector<Elem> out;
        for (int r = 1; r <= level; ++r)
            for (int s = r + 1; s <= level + 1; ++s) out.push_back(a_generator(r, s, level + 1));
        return out;
    }

    static Elem random_element(std::mt19937_64& rng, int level, int length) {
        const int n = level + 1;
        if (n < 2) return identity(level);
        std::uniform_int_distribution<int> pick_r(1, n - 1), sgn(0, 1);
        std::vector<Crossing> w;
        for (int t = 0; t < length; ++t) {
            int r = pick_r(rng);
            std::uniform_int_distribution<int> pick_s(r + 1, n);
            PureBraid a = a_generator(r, pick_s(rng), n);
            const auto word = sgn(rng) ? a.braid().word() : invert(a.braid()).word();
            w.insert(w.end(), word.begin(), word.end());
        }
        return PureBraid(SigmaBraid(n, std::move(w)));
    }

    static std::string show(const Elem& e) { return to_string(e); }
};

// ---------------------------------------------------------------------------
// Identity verification

struct IdentityReport {
    std::string instance;
    int max_level = 0;
    long checks = 0;
    std::vector<std::string> failures;  // level, identity, offending element

    bool ok() const { return failures.empty(); }
};

namespace detail {

template <class S>
bool elems_equal(const typename S::Elem& a, const typename S::Elem& b) {
    return S::trivial(S::multiply(a, S::inverse(b)));
}

}  // namespace detail

// Checks every instance of the simplicial identities on the generators of
// each level <= N plus `samples` random elements per level.
template <class S>
IdentityReport verify_simplicial_identities(int max_level, int samples = 0,
                                            std::uint64_t seed = 0, int random_length = 6) {
    IdentityReport rep;
    rep.instance = S::name;
    rep.max_level = max_level;
    std::mt19937_64 rng(seed);

    auto fail = [&rep](int level, const std::string& what) {
        rep.failures.push_back("level " + std::to_string(level) + ": " + what);
    };

    for (int t = 0; t <= max_level; ++t) {
        std::vector<typename S::Elem> elems = S::generators(t);
        for (int s = 0; s < samples; ++s) elems.push_back(S::random_element(rng, t, random_length));

        for (const auto& e : elems) {
            // d_i d_j = d_{j-1} d_i for i < j
            if (t >= 2) {
                for (int j = 1; j <= t; ++j) {
                    for (int i = 0; i < j; ++i) {
                        auto lhs = S::face(t - 1, i, S::face(t, j, e));
                        auto rhs = S::face(t - 1, j - 1, S::face(t, i, e));
                        ++rep.checks;
                        if (!detail::elems_equal<S>(lhs, rhs))
                            fail(t, "d" + std::to_string(i) + " d" + std::to_string(j) +
                                        " != d" + std::to_string(j - 1) + " d" + std::to_string(i) +
                                        " on " + S::show(e));
                    }
                }
            }
            // s_i s_j = s_{j+1} s_i for i <= j
            for (int j = 0; j <= t; ++j) {
                for (int i = 0; i <= j; ++i) {
                    auto lhs = S::degeneracy(t + 1, i, S::degeneracy(t, j, e));
                    auto rhs = S::degeneracy(t + 1, j + 1, S::degeneracy(t, i, e));
                    ++rep.checks;
                    if (!detail::elems_equal<S>(lhs, rhs))
                        fail(t, "s" + std::to_string(i) + " s" + std::to_string(j) + " != s" +
                                    std::to_string(j + 1) + " s" + std::to_string(i) + " on " +
                                    S::show(e));
                }
            }
            // d_i s_j, three cases
            for (int j = 0; j <= t; ++j) {
                auto sj = S::degeneracy(t, j, e);
                for (int i = 0; i <= t + 1; ++i) {
                    auto lhs = S::face(t + 1, i, sj);
                    typename S::Elem rhs = e;
                    if (i < j)
                        rhs = S::degeneracy(t - 1, j - 1, S::face(t, i, e));
                    else if (i == j || i == j + 1)
                        rhs = e;
                    else
                        rhs = S::degeneracy(t - 1, j, S::face(t, i - 1, e));
                    ++rep.checks;
                    if (!detail::elems_equal<S>(lhs, rhs))
                        fail(t, "d" + std::to_string(i) + " s" + std::to_string(j) +
                                    " mismatch on " + S::show(e));
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Moore cycles and boundary certificates

// Cycles Z_t = intersection of all face kernels at level t.  For AP this is
// the Brunnian condition.
template <class S>
bool is_moore_cycle(int t, const typename S::Elem& e) {
    if (t == 0) return true;  // no faces at level 0
    for (int i = 0; i <= t; ++i)
        if (!S::trivial(S::face(t, i, e))) return false;
    return true;
}

// Certifies w in B_t: z at level t+1 with d_i(z) = 1 for i >= 1 and
// d_0(z) = w.  A false result certifies nothing.
template <class S>
bool check_boundary_certificate(int t, const typename S::Elem& z, const typename S::Elem& w) {
    for (int i = 1; i <= t + 1; ++i)
        if (!S::trivial(S::face(t + 1, i, z))) return false;
    return detail::elems_equal<S>(S::face(t + 1, 0, z), w);
}

// Bounded search for a boundary certificate: random quasi-cycles z (all
// faces i >= 1 trivial) are not enumerable in general, so this only walks
// products of degeneracy images of known cycles.  Absence of a hit proves
// nothing.
template <class S>
bool bounded_boundary_search(int t, const typename S::Elem& w,
                             const std::vector<typename S::Elem>& candidates) {
    for (const auto& z : candidates)
        if (check_boundary_certificate<S>(t, z, w)) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Theta as a simplicial morphism

struct ThetaSimplicialReport {
    int max_level = 0;
    long checks = 0;
    bool base_case_ok = false;  // Theta_1(y_1) = A_{1,2}
    std::vector<std::string> failures;

    bool ok() const { return base_case_ok && failures.empty(); }
};

// Verifies Theta d_i = d_i Theta and Theta s_j = s_j Theta on all generators
// up to the given level, plus the normalization Theta_1(y_1) = A_{1,2}.
// Uniqueness needs no search: every y_q is a degeneracy image of y_1, so a
// simplicial morphism is pinned down by the image of y_1.
inline ThetaSimplicialReport theta_simplicial_check(int max_level) {
    ThetaSimplicialReport rep;
    rep.max_level = max_level;

    Alphabet Y1{"y", 1};
    rep.base_case_ok =
        braid_equal(theta(1, FreeWord::generator(Y1, 1)).braid(), a_generator(1, 2, 2).braid());

    for (int n = 1; n <= max_level; ++n) {
        Alphabet Y{"y", n};
        for (int q = 1; q <= n; ++q) {
            FreeWord yq = FreeWord::generator(Y, q);
            PureBraid image = theta(n, yq);
            for (int i = 0; i <= n; ++i) {
                PureBraid lhs = delete_strand(image, i + 1);
                FreeWord faced = apply_hom(face_fs1(n, i), yq);
                PureBraid rhs = n - 1 == 0 ? PureBraid::identity(1) : theta(n - 1, faced);
                ++rep.checks;
                if (!braid_equal(lhs.braid(), rhs.braid()))
                    rep.failures.push_back("d" + std::to_string(i) + " Theta != Theta d" +
                                           std::to_string(i) + " on y" + std::to_string(q) +
                                           " at level " + std::to_string(n));
            }
            for (int j = 0; j <= n; ++j) {
                PureBraid lhs = double_strand(image, j + 1);
                PureBraid rhs = theta(n + 1, apply_hom(degeneracy_fs1(n, j), yq));
                ++rep.checks;
                if (!braid_equal(lhs.braid(), rhs.braid()))
                    rep.failures.push_back("s" + std::to_string(j) + " Theta != Theta s" +
                                           std::to_string(j) + " on y" + std::to_string(q) +
                                           " at level " + std::to_string(n));
            }
        }
    }
    return rep;
}

}  // namespace braidlab
