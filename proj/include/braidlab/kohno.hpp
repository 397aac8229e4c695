#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "braidlab/freelie.hpp"
#include "braidlab/intmatrix.hpp"

namespace braidlab {

// gr(P_n) in its component normal form: the direct sum over k = 2..n of the
// free Lie rings L[B_{1,k}, ..., B_{k-1,k}], with a component of lower k
// acting on higher components by derivations.  The normal form is justified
// against the raw presentation by presentation_oracle below, not assumed.

inline Alphabet kohno_component_alphabet(int k) {
    return Alphabet{"B:" + std::to_string(k), k - 1};
}

class KohnoElement {
  public:
    explicit KohnoElement(int strands) : strands_(strands) {
        if (strands_ < 2) throw index_error("KohnoElement: need at least 2 strands");
        comps_.reserve(static_cast<std::size_t>(strands_ - 1));
        for (int k = 2; k <= strands_; ++k)
            comps_.push_back(LieElement::zero(kohno_component_alphabet(k)));
    }

    static KohnoElement zero(int strands) { return KohnoElement(strands); }

    // The degree-1 generator B_{i,j} sitting in component j.
    static KohnoElement generator(int i, int j, int strands) {
        if (!(1 <= i && i < j && j <= strands))
            throw index_error("kohno generator: need 1 <= i < j <= n");
        KohnoElement e(strands);
        e.component(j) = LieElement::generator(kohno_component_alphabet(j), i);
        return e;
    }

    int strands() const { return strands_; }

    LieElement& component(int k) {
        if (k < 2 || k > strands_) throw index_error("KohnoElement: component out of range");
        return comps_[static_cast<std::size_t>(k - 2)];
    }
    const LieElement& component(int k) const {
        if (k < 2 || k > strands_) throw index_error("KohnoElement: component out of range");
        return comps_[static_cast<std::size_t>(k - 2)];
    }

    bool is_zero() const {
        for (const auto& c : comps_)
            if (!c.is_zero()) return false;
        return true;
    }

    int degree() const {
        int d = 0;
        for (const auto& c : comps_) d = std::max(d, c.degree());
        return d;
    }

    KohnoElement& operator+=(const KohnoElement& o) {
        check_strands(o);
        for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] += o.comps_[k];
        return *this;
    }
    KohnoElement& operator-=(const KohnoElement& o) {
        check_strands(o);
        for (std::size_t k = 0; k < comps_.size(); ++k) comps_[k] -= o.comps_[k];
        return *this;
    }
    KohnoElement& operator*=(const Int& c) {
        for (auto& e : comps_) e *= c;
        return *this;
    }
    friend KohnoElement operator+(KohnoElement a, const KohnoElement& b) { return a += b; }
    friend KohnoElement operator-(KohnoElement a, const KohnoElement& b) { return a -= b; }
    friend KohnoElement operator*(const Int& c, KohnoElement a) { return a *= c; }

    bool operator==(const KohnoElement& o) const {
        return strands_ == o.strands_ && comps_ == o.comps_;
    }

  private:
    void check_strands(const KohnoElement& o) const {
        if (strands_ != o.strands_) throw index_error("KohnoElement: strand count mismatch");
    }

    int strands_;
    std::vector<LieElement> comps_;
};

namespace detail {

// Derivation of component t induced by the generator B_{i,j} (j < t):
//   B_{s,t} -> 0 for s not in {i,j},
//   B_{i,t} -> [B_{i,t}, B_{j,t}],
//   B_{j,t} -> [B_{j,t}, B_{i,t}].
// These are forced by the infinitesimal braid relations; relations_check
// and the Jacobi property suite certify them.
inline DerivationTable kohno_cross_derivation(int i, int j, int t) {
    Alphabet a = kohno_component_alphabet(t);
    DerivationTable d = DerivationTable::zero(a);
    LieElement bracket = lie_bracket(LieElement::generator(a, i), LieElement::generator(a, j));
    d.images[static_cast<std::size_t>(i - 1)] = bracket;
    d.images[static_cast<std::size_t>(j - 1)] = -bracket;
    return d;
}

// Applies the component-j Lie word u to v (a component-t element, j < t),
// nested brackets acting as commutators of derivations.
inline LieElement kohno_cross_apply(const Word& u, int j, int t, const LieElement& v) {
    if (u.size() == 1) return apply_derivation(kohno_cross_derivation(u[0], j, t), v);
    auto [u1, u2] = standard_factorization(u);
    return kohno_cross_apply(u1, j, t, kohno_cross_apply(u2, j, t, v)) -
           kohno_cross_apply(u2, j, t, kohno_cross_apply(u1, j, t, v));
}

}  // namespace detail

inline KohnoElement kohno_bracket(const KohnoElement& a, const KohnoElement& b) {
    if (a.strands() != b.strands()) throw index_error("kohno_bracket: strand count mismatch");
    const int n = a.strands();
    KohnoElement r(n);
    for (int j = 2; j <= n; ++j) {
        const LieElement& aj = a.component(j);
        if (aj.is_zero()) continue;
        for (int t = 2; t <= n; ++t) {
            const LieElement& bt = b.component(t);
            if (bt.is_zero()) continue;
            if (j == t) {
                r.component(j) += lie_bracket(aj, bt);
            } else if (j < t) {
                for (const auto& [u, cu] : aj.terms()) {
                    LieElement img = detail::kohno_cross_apply(u, j, t, bt);
                    img *= cu;
                    r.component(t) += img;
                }
            } else {  // j > t: [a_j, b_t] = -(b_t acting on a_j)
                for (const auto& [u, cu] : bt.terms()) {
                    LieElement img = detail::kohno_cross_apply(u, t, j, aj);
                    img *= -cu;
                    r.component(j) += img;
                }
            }
        }
    }
    return r;
}

// Rank of the degree-m part in the component normal form.
inline std::int64_t kohno_rank(int n, int m) {
    if (n < 2 || m < 1) throw index_error("kohno_rank: need n >= 2, m >= 1");
    std::int64_t total = 0;
    for (int k = 2; k <= n; ++k) total += witt_rank(k - 1, m);
    return total;
}

// ---------------------------------------------------------------------------
// Relation checking

struct RelationWitness {
    int family = 0;                 // 1, 2 or 3
    std::array<int, 4> indices{};   // (i,j,s,t), (i,s,j,0), (i,j,t,0)
    KohnoElement residue;

    bool ok() const { return residue.is_zero(); }
};

// Normal-form residues of every instance of the three relation families.
// All must vanish for the engine to be considered sound.
inline std::vector<RelationWitness> relations_check(int n) {
    if (n < 2) throw index_error("relations_check: need n >= 2");
    std::vector<RelationWitness> out;
    auto B = [n](int i, int j) { return KohnoElement::generator(i, j, n); };
    // (1) [B_{i,j}, B_{s,t}] = 0 for disjoint pairs
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s = i; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    out.push_back({1, {i, j, s, t}, kohno_bracket(B(i, j), B(s, t))});
                }
    // (2) [B_{i,j}, B_{i,s} + B_{s,j}] = 0 for i < s < j
    for (int i = 1; i <= n; ++i)
        for (int s = i + 1; s <= n; ++s)
            for (int j = s + 1; j <= n; ++j)
                out.push_back({2, {i, s, j, 0}, kohno_bracket(B(i, j), B(i, s) + B(s, j))});
    // (3) [B_{i,j}, B_{i,t} + B_{j,t}] = 0 for i < j < t
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int t = j + 1; t <= n; ++t)
                out.push_back({3, {i, j, t, 0}, kohno_bracket(B(i, j), B(i, t) + B(j, t))});
    return out;
}

// ---------------------------------------------------------------------------
// Independent presentation oracle

// Index of the pair (i,j), 1 <= i < j <= n, in lexicographic order.
inline int pair_index(int i, int j, int n) {
    int idx = 0;
    for (int a = 1; a < n; ++a)
        for (int b = a + 1; b <= n; ++b) {
            ++idx;
            if (a == i && b == j) return idx;
        }
    throw index_error("pair_index: invalid pair");
}

struct PresentationOracleResult {
    int n = 0, m = 0;
    std::int64_t free_rank = 0;      // dim of degree m of L[B_{i,j} | i<j]
    std::int64_t ideal_rank = 0;     // dim of the degree-m layer of the relation ideal
    std::int64_t quotient_rank = 0;  // free_rank - ideal_rank
    bool basis_matches = false;      // normal-form basis maps to a basis of the quotient
};

// Computes the degree-m piece of the free Lie ring on all B_{i,j} modulo the
// ideal spanned by ad-words of generators applied to the degree-2 relation
// elements.  Entirely independent of the component normal form above; used
// as the oracle for kohno_rank and kohno_bracket.
inline PresentationOracleResult presentation_oracle(int n, int m, int max_n = 4, int max_m = 4) {
    if (n < 2 || m < 1) throw index_error("presentation_oracle: need n >= 2, m >= 1");
    if (n > max_n || m > max_m) throw budget_error("presentation_oracle: budget exceeded");

    const int R = n * (n - 1) / 2;
    Alphabet Z{"Z", R};
    auto gen = [&](int i, int j) { return LieElement::generator(Z, pair_index(i, j, n)); };

    // degree-2 relation elements
    std::vector<LieElement> rels;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int s = i; s <= n; ++s)
                for (int t = s + 1; t <= n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j)
                        continue;
                    rels.push_back(lie_bracket(gen(i, j), gen(s, t)));
                }
    for (int i = 1; i <= n; ++i)
        for (int s = i + 1; s <= n; ++s)
            for (int j = s + 1; j <= n; ++j)
                rels.push_back(lie_bracket(gen(i, j), gen(i, s) + gen(s, j)));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int t = j + 1; t <= n; ++t)
                rels.push_back(lie_bracket(gen(i, j), gen(i, t) + gen(j, t)));

    const std::vector<Word> basis = lyndon_words(R, m);
    std::map<Word, int, GradedLex> column;
    for (std::size_t k = 0; k < basis.size(); ++k) column[basis[k]] = static_cast<int>(k);

    auto coords = [&](const LieElement& e) {
        std::vector<Int> row(basis.size());
        for (const auto& [w, c] : e.terms()) row[static_cast<std::size_t>(column.at(w))] = c;
        return row;
    };

    // span of the degree-m layer of the ideal: left-normed ad-words of
    // generators applied to each relation element
    std::vector<std::vector<Int>> ideal_rows;
    std::vector<LieElement> layer = rels;
    for (int d = 2; d < m; ++d) {
        std::vector<LieElement> next;
        for (const LieElement& e : layer)
            for (int g = 1; g <= R; ++g)
                next.push_back(lie_bracket(LieElement::generator(Z, g), e));
        layer = std::move(next);
    }
    if (m >= 2)
        for (const LieElement& e : layer)
            if (!e.is_zero()) ideal_rows.push_back(coords(e));

    PresentationOracleResult res;
    res.n = n;
    res.m = m;
    res.free_rank = static_cast<std::int64_t>(basis.size());
    IntMatrix ideal = IntMatrix::from_rows(ideal_rows);
    if (ideal.rows() == 0) ideal = IntMatrix(0, static_cast<int>(basis.size()));
    res.ideal_rank = ideal.rows() == 0 ? 0 : rank_of(ideal);
    res.quotient_rank = res.free_rank - res.ideal_rank;

    // The component normal-form basis embeds as Lyndon words in the full
    // alphabet (the relabeling is order-preserving); check that it is a
    // basis of the quotient: independent modulo the ideal and spanning.
    std::vector<std::vector<Int>> joint = ideal_rows;
    std::int64_t count = 0;
    for (int k = 2; k <= n; ++k) {
        for (const Word& w : lyndon_words(k - 1, m)) {
            Word relabeled;
            relabeled.reserve(w.size());
            for (int letter : w) relabeled.push_back(pair_index(letter, k, n));
            joint.push_back(coords(LieElement::basis_term(Z, relabeled)));
            ++count;
        }
    }
    IntMatrix joint_m = IntMatrix::from_rows(joint);
    std::int64_t joint_rank = joint_m.rows() == 0 ? 0 : rank_of(joint_m);
    res.basis_matches = (count == kohno_rank(n, m)) && (joint_rank == res.ideal_rank + count) &&
                        (joint_rank == res.free_rank);
    return res;
}

// ---------------------------------------------------------------------------
// gr(Theta)

// Image of the generator y_q: the sum of B_{i,j} over 1 <= i <= n-q+1 < j <= n+1,
// landing in gr(P_{n+1}).
inline KohnoElement gr_theta_generator(int n, int q) {
    if (!(1 <= q && q <= n)) throw index_error("gr_theta_generator: need 1 <= q <= n");
    KohnoElement e(n + 1);
    for (int j = n - q + 2; j <= n + 1; ++j)
        for (int i = 1; i <= n - q + 1; ++i) e += KohnoElement::generator(i, j, n + 1);
    return e;
}

// Linear extension of y_q -> gr_theta_generator over the Lyndon basis,
// brackets evaluated through kohno_bracket.
inline KohnoElement gr_theta(int n, const LieElement& e) {
    if (e.alphabet().rank != n) throw index_error("gr_theta: rank mismatch");
    auto value = [&](auto&& self, const Word& w) -> KohnoElement {
        if (w.size() == 1) return gr_theta_generator(n, w[0]);
        auto [u, v] = standard_factorization(w);
        return kohno_bracket(self(self, u), self(self, v));
    };
    KohnoElement r(n + 1);
    for (const auto& [w, c] : e.terms()) {
        KohnoElement t = value(value, w);
        t *= c;
        r += t;
    }
    return r;
}

// Coordinates of the degree-m part in the concatenated component bases.
inline std::vector<Int> kohno_coordinates(const KohnoElement& e, int m) {
    std::vector<Int> out;
    for (int k = 2; k <= e.strands(); ++k) {
        const std::vector<Word> basis = lyndon_words(k - 1, m);
        std::map<Word, Int, GradedLex> wanted;
        for (const auto& [w, c] : e.component(k).terms())
            if (static_cast<int>(w.size()) == m) wanted[w] = c;
        for (const Word& w : basis) {
            auto it = wanted.find(w);
            out.push_back(it == wanted.end() ? Int(0) : it->second);
        }
    }
    return out;
}

struct GrThetaMatrix {
    int n = 0, m = 0;
    IntMatrix matrix;                    // rows: Lyndon basis of L[y]_m; cols: gr_m(P_{n+1})
    std::int64_t rank = 0;
    std::vector<Int> elementary_divisors;
    bool injective = false;              // rank == witt_rank(n, m)
};

// Matrix of gr(Theta_n) in degree m with a Smith-normal-form rank
// certificate for injectivity.
inline GrThetaMatrix gr_theta_matrix(int n, int m) {
    if (n < 1 || m < 1) throw index_error("gr_theta_matrix: need n >= 1, m >= 1");
    GrThetaMatrix res;
    res.n = n;
    res.m = m;
    const std::vector<Word> domain = lyndon_words(n, m);
    Alphabet Y{"y", n};
    std::vector<std::vector<Int>> rows;
    rows.reserve(domain.size());
    for (const Word& w : domain)
        rows.push_back(kohno_coordinates(gr_theta(n, LieElement::basis_term(Y, w)), m));
    res.matrix = IntMatrix::from_rows(rows);
    if (res.matrix.rows() == 0) res.matrix = IntMatrix(0, static_cast<int>(kohno_rank(n + 1, m)));
    SmithNormalForm snf = smith_normal_form(res.matrix);
    res.rank = snf.rank;
    res.elementary_divisors = snf.invariant_factors;
    res.injective = (res.rank == witt_rank(n, m));
    return res;
}

// ---------------------------------------------------------------------------
// The delta example: gr(Theta_3) on the left-normed bracket [[[y1,y2],y3],y2]

struct DeltaExampleReport {
    Int coeff_t1 = 0, coeff_t2 = 0;   // decomposition E = coeff_t1*T1 + coeff_t2*T2 + delta
    std::int64_t independence_rank = 0;
    std::vector<Int> elementary_divisors;  // integral saturation data for {T1, T2, delta}
    bool delta_nonzero = false;
    bool pass = false;
    std::string image_normal_form;    // full normal form of E, for inspection
    std::string delta_normal_form;
};

inline std::string to_string(const KohnoElement& e);

inline DeltaExampleReport delta_example_check() {
    Alphabet Y{"y", 3};
    LieTree tree = LieTree::node(
        LieTree::node(LieTree::node(LieTree::leaf(1), LieTree::leaf(2)), LieTree::leaf(3)),
        LieTree::leaf(2));
    KohnoElement image = gr_theta(3, lie_normal_form(Y, tree));

    auto B = [](int i, int j) { return KohnoElement::generator(i, j, 4); };
    KohnoElement gamma1 = B(1, 4) + B(2, 4) + B(3, 4);
    KohnoElement gamma2 = B(3, 4);
    KohnoElement gamma3 = B(2, 4) + B(3, 4);
    KohnoElement t1 = kohno_bracket(kohno_bracket(kohno_bracket(gamma1, gamma2), gamma3), gamma2);
    KohnoElement t2 = kohno_bracket(kohno_bracket(kohno_bracket(gamma1, gamma3), gamma2), gamma2);

    DeltaExampleReport rep;
    rep.coeff_t1 = -1;
    rep.coeff_t2 = 2;
    KohnoElement delta = image - (rep.coeff_t1 * t1 + rep.coeff_t2 * t2);
    rep.delta_nonzero = !delta.is_zero();

    std::vector<std::vector<Int>> rows{kohno_coordinates(t1, 4), kohno_coordinates(t2, 4),
                                       kohno_coordinates(delta, 4)};
    SmithNormalForm snf = smith_normal_form(IntMatrix::from_rows(rows));
    rep.independence_rank = snf.rank;
    rep.elementary_divisors = snf.invariant_factors;
    rep.image_normal_form = to_string(image);
    rep.delta_normal_form = to_string(delta);
    rep.pass = rep.delta_nonzero && rep.independence_rank == 3;
    return rep;
}

// ---------------------------------------------------------------------------
// Derivation representation Ad : gr(P_{n+1}) -> Der(L[x_1..x_n])

struct DerivationAssignment {
    int n = 0;  // target is L[x_1..x_n]
    std::map<std::pair<int, int>, DerivationTable> table;  // keyed by (i,j), i<j<=n+1

    const DerivationTable& image(int i, int j) const {
        auto it = table.find({i, j});
        if (it == table.end())
            throw index_error("DerivationAssignment: no image for B_{" + std::to_string(i) + "," +
                              std::to_string(j) + "}");
        return it->second;
    }
};

// B_{i,j} (j <= n) acts by x_i -> [x_i,x_j], x_j -> [x_j,x_i]; the last
// column, B_{i,n+1}, acts as ad(x_i).  The second rule is not written in
// the source presentation; it is validated by the relation checker below.
inline DerivationAssignment default_derivation_assignment(int n) {
    if (n < 1) throw index_error("default_derivation_assignment: need n >= 1");
    Alphabet X{"x", n};
    DerivationAssignment a;
    a.n = n;
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            DerivationTable d = DerivationTable::zero(X);
            LieElement bracket =
                lie_bracket(LieElement::generator(X, i), LieElement::generator(X, j));
            d.images[static_cast<std::size_t>(i - 1)] = bracket;
            d.images[static_cast<std::size_t>(j - 1)] = -bracket;
            a.table[{i, j}] = std::move(d);
        }
        a.table[{i, n + 1}] = DerivationTable::adjoint(X, i);
    }
    return a;
}

inline DerivationAssignment zero_derivation_assignment(int n) {
    Alphabet X{"x", n};
    DerivationAssignment a;
    a.n = n;
    for (int i = 1; i <= n + 1; ++i)
        for (int j = i + 1; j <= n + 1; ++j) a.table[{i, j}] = DerivationTable::zero(X);
    return a;
}

struct DerivationRepReport {
    int n = 0;
    bool relations_hold = false;
    std::vector<std::string> violations;  // per failed relation instance
};

// Validates that the assignment satisfies all three relation families as
// commutators of derivations over indices 1..n+1.
inline DerivationRepReport derivation_rep_validate(const DerivationAssignment& a) {
    DerivationRepReport rep;
    rep.n = a.n;
    const int top = a.n + 1;
    auto comm = [&](int i, int j, int s, int t) {
        return derivation_commutator(a.image(i, j), a.image(s, t));
    };
    auto record = [&](int family, std::initializer_list<int> idx, const DerivationTable& residue) {
        if (residue.is_zero()) return;
        std::string msg = "family " + std::to_string(family) + " indices (";
        bool first = true;
        for (int v : idx) {
            if (!first) msg += ",";
            msg += std::to_string(v);
            first = false;
        }
        msg += ")";
        rep.violations.push_back(msg);
    };
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            for (int s = i; s <= top; ++s)
                for (int t = s + 1; t <= top; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    record(1, {i, j, s, t}, comm(i, j, s, t));
                }
    for (int i = 1; i <= top; ++i)
        for (int s = i + 1; s <= top; ++s)
            for (int j = s + 1; j <= top; ++j) {
                DerivationTable r = comm(i, j, i, s);
                r += comm(i, j, s, j);
                record(2, {i, s, j}, r);
            }
    for (int i = 1; i <= top; ++i)
        for (int j = i + 1; j <= top; ++j)
            for (int t = j + 1; t <= top; ++t) {
                DerivationTable r = comm(i, j, i, t);
                r += comm(i, j, j, t);
                record(3, {i, j, t}, r);
            }
    rep.relations_hold = rep.violations.empty();
    return rep;
}

// Evaluates the represented derivation of a Kohno element: component words
// map to iterated commutators of the assigned tables.
inline DerivationTable ad_of(const DerivationAssignment& a, const KohnoElement& e) {
    if (e.strands() != a.n + 1) throw index_error("ad_of: strand count does not match assignment");
    Alphabet X{"x", a.n};
    auto word_table = [&](auto&& self, const Word& w, int k) -> DerivationTable {
        if (w.size() == 1) return a.image(w[0], k);
        auto [u, v] = standard_factorization(w);
        return derivation_commutator(self(self, u, k), self(self, v, k));
    };
    DerivationTable total = DerivationTable::zero(X);
    for (int k = 2; k <= e.strands(); ++k) {
        for (const auto& [w, c] : e.component(k).terms()) {
            DerivationTable t = word_table(word_table, w, k);
            t *= c;
            total += t;
        }
    }
    return total;
}

struct AdThetaMatrix {
    int n = 0, m = 0;
    IntMatrix matrix;
    std::int64_t rank = 0;
    bool injective = false;
};

// Rank certificate for Ad o gr(Theta_n) in degree m: coordinates of the
// image derivations are read off generator by generator in degree m+1.
inline AdThetaMatrix ad_theta_matrix(const DerivationAssignment& a, int n, int m) {
    if (a.n != n) throw index_error("ad_theta_matrix: assignment rank mismatch");
    AdThetaMatrix res;
    res.n = n;
    res.m = m;
    Alphabet Y{"y", n};
    const std::vector<Word> domain = lyndon_words(n, m);
    const std::vector<Word> target = lyndon_words(n, m + 1);
    std::map<Word, int, GradedLex> col;
    for (std::size_t k = 0; k < target.size(); ++k) col[target[k]] = static_cast<int>(k);
    std::vector<std::vector<Int>> rows;
    for (const Word& w : domain) {
        DerivationTable d = ad_of(a, gr_theta(n, LieElement::basis_term(Y, w)));
        std::vector<Int> row(static_cast<std::size_t>(n) * target.size());
        for (int g = 1; g <= n; ++g)
            for (const auto& [tw, c] : d.image(g).terms())
                row[static_cast<std::size_t>(g - 1) * target.size() +
                    static_cast<std::size_t>(col.at(tw))] = c;
        rows.push_back(std::move(row));
    }
    res.matrix = IntMatrix::from_rows(rows);
    if (res.matrix.rows() == 0)
        res.matrix = IntMatrix(0, static_cast<int>(static_cast<std::size_t>(n) * target.size()));
    res.rank = res.matrix.rows() == 0 ? 0 : rank_of(res.matrix);
    res.injective = (res.rank == witt_rank(n, m));
    return res;
}

// ---------------------------------------------------------------------------

// Component-by-component printing: components in increasing k, Lyndon order
// inside; a component is parenthesized when the element spans several
// components and the component has several terms.
inline std::string to_string(const KohnoElement& e) {
    if (e.is_zero()) return "0";
    int nonzero = 0;
    for (int k = 2; k <= e.strands(); ++k)
        if (!e.component(k).is_zero()) ++nonzero;
    std::string out;
    for (int k = 2; k <= e.strands(); ++k) {
        const LieElement& c = e.component(k);
        if (c.is_zero()) continue;
        std::string part;
        for (const auto& [w, coeff] : c.terms()) {
            if (!part.empty()) part += coeff > 0 ? "+" : "-";
            else if (coeff < 0) part += "-";
            Int a = abs_int(coeff);
            if (a != 1) part += a.str() + "*";
            // bracket string with B(i,k) labels
            auto render = [&](auto&& self, const Word& w2) -> std::string {
                if (w2.size() == 1)
                    return "B(" + std::to_string(w2[0]) + "," + std::to_string(k) + ")";
                auto [u, v] = standard_factorization(w2);
                return "[" + self(self, u) + "," + self(self, v) + "]";
            };
            part += render(render, w);
        }
        if (nonzero > 1 && c.terms().size() > 1) part = "(" + part + ")";
        if (!out.empty()) out += " + ";
        out += part;
    }
    return out;
}

}  // namespace braidlab
