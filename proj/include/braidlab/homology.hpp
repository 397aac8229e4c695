#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/freelie.hpp"
#include "braidlab/intmatrix.hpp"
#include "braidlab/simplicial.hpp"

namespace braidlab {

// The degree-m slice of the descending-central-series E^0 of F[S^1]: at
// simplicial level t the chain group is the degree-m part of the free Lie
// ring on y_1..y_t, and the boundary is the alternating sum of the face
// substitutions.  Boundary matrices act on column vectors: shape
// dim C_{t-1} x dim C_t.
struct IntegerChainComplex {
    int lie_degree = 0;
    int top_level = 0;
    std::vector<std::vector<Word>> bases;    // bases[t], t = 0..top_level
    std::vector<IntMatrix> boundaries;       // boundaries[t] = del_t for t >= 1; [0] unused

    const IntMatrix& boundary(int t) const {
        if (t < 1 || t > top_level) throw index_error("chain complex: missing boundary data");
        return boundaries[static_cast<std::size_t>(t)];
    }
    int dim(int t) const {
        if (t < 0 || t > top_level) throw index_error("chain complex: level out of range");
        return static_cast<int>(bases[static_cast<std::size_t>(t)].size());
    }
};

namespace detail {

// Substitutes the face table into one Lyndon bracket: each letter maps to a
// generator of the smaller alphabet or to zero, and a zero kills the whole
// bracket.  Returns the renormalized element over y_1..y_{n-1}.
inline LieElement face_substitute(const Word& w, const GroupHom& face, const Alphabet& target) {
    auto eval = [&](auto&& self, const Word& part) -> LieElement {
        if (part.size() == 1) {
            const FreeWord& img = face.image(part[0]);
            if (img.is_identity()) return LieElement::zero(target);
            return LieElement::generator(target, img.letters()[0].gen);
        }
        auto [u, v] = standard_factorization(part);
        return lie_bracket(self(self, u), self(self, v));
    };
    return eval(eval, w);
}

}  // namespace detail

inline IntegerChainComplex lie_degree_complex(int m, int top_level) {
    if (m < 1 || top_level < 1) throw index_error("lie_degree_complex: need m >= 1, N >= 1");
    IntegerChainComplex c;
    c.lie_degree = m;
    c.top_level = top_level;
    c.bases.push_back({});  // level 0: rank-0 free group, no degree-m classes
    for (int t = 1; t <= top_level; ++t) c.bases.push_back(lyndon_words(t, m));
    c.boundaries.resize(static_cast<std::size_t>(top_level) + 1);

    for (int t = 1; t <= top_level; ++t) {
        const std::vector<Word>& domain = c.bases[static_cast<std::size_t>(t)];
        const std::vector<Word>& target = c.bases[static_cast<std::size_t>(t - 1)];
        std::map<Word, int, GradedLex> col;
        for (std::size_t k = 0; k < target.size(); ++k) col[target[k]] = static_cast<int>(k);

        IntMatrix d(static_cast<int>(target.size()), static_cast<int>(domain.size()));
        Alphabet smaller{"y", t - 1};
        for (std::size_t j = 0; j < domain.size(); ++j) {
            LieElement image(smaller);
            for (int i = 0; i <= t; ++i) {
                LieElement term = detail::face_substitute(domain[j], face_fs1(t, i), smaller);
                if (i % 2) term *= Int(-1);
                image += term;
            }
            for (const auto& [w, coeff] : image.terms())
                d.at(col.at(w), static_cast<int>(j)) = coeff;
        }
        c.boundaries[static_cast<std::size_t>(t)] = std::move(d);
    }
    return c;
}

// Canonical form of a finitely generated abelian group.
struct AbelianInvariants {
    std::int64_t free_rank = 0;
    std::vector<Int> torsion;  // invariant factors > 1, each dividing the next

    bool is_trivial() const { return free_rank == 0 && torsion.empty(); }
    bool operator==(const AbelianInvariants& o) const = default;
};

inline std::string to_string(const AbelianInvariants& a) {
    if (a.is_trivial()) return "0";
    std::string s;
    if (a.free_rank > 0) {
        s = "Z";
        if (a.free_rank > 1) s += "^" + std::to_string(a.free_rank);
    }
    for (const Int& d : a.torsion) s += (s.empty() ? "Z/" : " + Z/") + d.str();
    return s;
}

// ker(d_out) / im(d_in) where d_out: C -> C' and d_in: C'' -> C, both in
// column convention.  Kernel coordinates are exact, the quotient is read
// from the Smith form of the inclusion.
inline AbelianInvariants homology_of_pair(const IntMatrix& d_out, const IntMatrix& d_in) {
    if (d_out.cols() != d_in.rows()) throw index_error("homology_of_pair: shape mismatch");
    IntMatrix kernel = kernel_basis(d_out);
    IntMatrix expressed = solve_exact(kernel, d_in);  // throws unless im(d_in) <= ker(d_out)
    SmithNormalForm s = smith_normal_form(expressed, false);
    AbelianInvariants inv;
    inv.free_rank = kernel.cols() - s.rank;
    for (const Int& f : s.invariant_factors)
        if (f > 1) inv.torsion.push_back(f);
    return inv;
}

inline AbelianInvariants homology(const IntegerChainComplex& c, int t) {
    if (t < 1 || t + 1 > c.top_level) throw index_error("homology: missing boundary data at t");
    return homology_of_pair(c.boundary(t), c.boundary(t + 1));
}

// Moore (normalized) version of the same slice: N_t = intersection of the
// kernels of d_1..d_t, with differential d_0.  Dold-Kan: its homology must
// match the unnormalized complex; keeping both is a deliberate cross-check.
struct NormalizedComplex {
    int lie_degree = 0;
    int top_level = 0;
    std::vector<int> dims;             // dim N_t
    std::vector<IntMatrix> boundaries; // boundaries[t]: N_t -> N_{t-1}, t >= 1
};

inline NormalizedComplex normalized_complex(int m, int top_level) {
    IntegerChainComplex c = lie_degree_complex(m, top_level);
    NormalizedComplex n;
    n.lie_degree = m;
    n.top_level = top_level;

    // kernels of the positive faces, levelwise
    std::vector<IntMatrix> inclusion;  // C_t x dim N_t
    for (int t = 0; t <= top_level; ++t) {
        int ct = c.dim(t);
        if (t == 0) {
            inclusion.push_back(IntMatrix::identity(ct));
        } else {
            Alphabet smaller{"y", t - 1};
            std::map<Word, int, GradedLex> col;
            const auto& target = c.bases[static_cast<std::size_t>(t - 1)];
            for (std::size_t k = 0; k < target.size(); ++k) col[target[k]] = static_cast<int>(k);
            std::vector<std::vector<Int>> stacked;
            for (int i = 1; i <= t; ++i) {
                // rows of (d_i)_* in column convention
                IntMatrix di(static_cast<int>(target.size()), ct);
                for (int j = 0; j < ct; ++j) {
                    LieElement im = detail::face_substitute(c.bases[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)],
                                                            face_fs1(t, i), smaller);
                    for (const auto& [w, coeff] : im.terms()) di.at(col.at(w), j) = coeff;
                }
                for (int rr = 0; rr < di.rows(); ++rr) {
                    std::vector<Int> row(static_cast<std::size_t>(ct));
                    for (int j = 0; j < ct; ++j) row[static_cast<std::size_t>(j)] = di.at(rr, j);
                    stacked.push_back(std::move(row));
                }
            }
            IntMatrix all = IntMatrix::from_rows(stacked);
            if (all.rows() == 0) all = IntMatrix(0, ct);
            inclusion.push_back(kernel_basis(all));
        }
        n.dims.push_back(inclusion.back().cols());
    }

    n.boundaries.resize(static_cast<std::size_t>(top_level) + 1);
    for (int t = 1; t <= top_level; ++t) {
        // d_0 restricted to N_t, expressed in the N_{t-1} coordinates
        Alphabet smaller{"y", t - 1};
        const auto& target = c.bases[static_cast<std::size_t>(t - 1)];
        std::map<Word, int, GradedLex> col;
        for (std::size_t k = 0; k < target.size(); ++k) col[target[k]] = static_cast<int>(k);
        IntMatrix d0(static_cast<int>(target.size()), c.dim(t));
        for (int j = 0; j < c.dim(t); ++j) {
            LieElement im = detail::face_substitute(c.bases[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)],
                                                    face_fs1(t, 0), smaller);
            for (const auto& [w, coeff] : im.terms()) d0.at(col.at(w), j) = coeff;
        }
        IntMatrix restricted = multiply(d0, inclusion[static_cast<std::size_t>(t)]);
        n.boundaries[static_cast<std::size_t>(t)] =
            solve_exact(inclusion[static_cast<std::size_t>(t - 1)], restricted);
    }
    return n;
}

inline AbelianInvariants homology(const NormalizedComplex& c, int t) {
    if (t < 1 || t + 1 > c.top_level) throw index_error("homology: missing boundary data at t");
    return homology_of_pair(c.boundaries[static_cast<std::size_t>(t)],
                            c.boundaries[static_cast<std::size_t>(t + 1)]);
}

}  // namespace braidlab
