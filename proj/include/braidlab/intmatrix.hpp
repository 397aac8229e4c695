#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidlab/bigint.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {

// Dense matrix over the integers.  Everything downstream (ranks, kernels,
// homology, injectivity certificates) reduces to exact Smith normal form.
class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), v_(std::size_t(rows) * std::size_t(cols)) {
        if (rows < 0 || cols < 0) throw index_error("IntMatrix: negative dimensions");
    }

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
        int r = static_cast<int>(rows.size());
        int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
        IntMatrix m(r, c);
        for (int i = 0; i < r; ++i) {
            if (static_cast<int>(rows[std::size_t(i)].size()) != c)
                throw index_error("IntMatrix::from_rows: ragged rows");
            for (int j = 0; j < c; ++j) m.at(i, j) = rows[std::size_t(i)][std::size_t(j)];
        }
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Int& at(int i, int j) { return v_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)]; }
    const Int& at(int i, int j) const {
        return v_[std::size_t(i) * std::size_t(cols_) + std::size_t(j)];
    }

    bool is_zero() const {
        for (const Int& x : v_)
            if (x != 0) return false;
        return true;
    }

    bool operator==(const IntMatrix& o) const = default;

    void swap_rows(int a, int b) {
        for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void swap_cols(int a, int b) {
        for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    // row[a] += c * row[b]
    void add_row(int a, int b, const Int& c) {
        for (int j = 0; j < cols_; ++j) at(a, j) += c * at(b, j);
    }
    void add_col(int a, int b, const Int& c) {
        for (int i = 0; i < rows_; ++i) at(i, a) += c * at(i, b);
    }
    void negate_row(int a) {
        for (int j = 0; j < cols_; ++j) at(a, j) = -at(a, j);
    }

  private:
    int rows_ = 0, cols_ = 0;
    std::vector<Int> v_;
};

inline IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw index_error("IntMatrix multiply: shape mismatch");
    IntMatrix r(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            const Int& aik = a.at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < b.cols(); ++j) {
                const Int& bkj = b.at(k, j);
                if (bkj != 0) r.at(i, j) += aik * bkj;
            }
        }
    return r;
}

struct SmithNormalForm {
    IntMatrix U, D, V;                   // U * M * V == D, U and V unimodular
    std::vector<Int> invariant_factors;  // positive diagonal, each dividing the next
    std::int64_t rank = 0;
};

// Diagonalization by elementary row/column operations.  Pivots are chosen
// with minimal absolute value; after a pivot clears its row and column, any
// remaining entry it does not divide is folded into its row, which makes
// the divisibility chain come out automatically.
inline SmithNormalForm smith_normal_form(const IntMatrix& input, bool verify = true) {
    SmithNormalForm s;
    s.D = input;
    s.U = IntMatrix::identity(input.rows());
    s.V = IntMatrix::identity(input.cols());
    IntMatrix& d = s.D;
    const int r = d.rows(), c = d.cols();

    for (int t = 0; t < (r < c ? r : c); ++t) {
        // locate minimal nonzero entry in the trailing block
        int pi = -1, pj = -1;
        for (int i = t; i < r; ++i)
            for (int j = t; j < c; ++j)
                if (d.at(i, j) != 0 &&
                    (pi < 0 || abs_int(d.at(i, j)) < abs_int(d.at(pi, pj)))) {
                    pi = i;
                    pj = j;
                }
        if (pi < 0) break;
        if (pi != t) {
            d.swap_rows(t, pi);
            s.U.swap_rows(t, pi);
        }
        if (pj != t) {
            d.swap_cols(t, pj);
            s.V.swap_cols(t, pj);
        }

        bool dirty = true;
        while (dirty) {
            dirty = false;
            // clear the pivot column
            for (int i = t + 1; i < r; ++i) {
                while (d.at(i, t) != 0) {
                    Int q = d.at(i, t) / d.at(t, t);
                    if (q != 0) {
                        d.add_row(i, t, -q);
                        s.U.add_row(i, t, -q);
                    }
                    if (d.at(i, t) != 0) {  // remainder became the smaller pivot
                        d.swap_rows(t, i);
                        s.U.swap_rows(t, i);
                        dirty = true;
                    }
                }
            }
            // clear the pivot row
            for (int j = t + 1; j < c; ++j) {
                while (d.at(t, j) != 0) {
                    Int q = d.at(t, j) / d.at(t, t);
                    if (q != 0) {
                        d.add_col(j, t, -q);
                        s.V.add_col(j, t, -q);
                    }
                    if (d.at(t, j) != 0) {
                        d.swap_cols(t, j);
                        s.V.swap_cols(t, j);
                        dirty = true;
                    }
                }
            }
            if (dirty) continue;
            // fold in any entry the pivot does not divide
            for (int i = t + 1; i < r && !dirty; ++i)
                for (int j = t + 1; j < c && !dirty; ++j)
                    if (d.at(i, j) % d.at(t, t) != 0) {
                        d.add_row(t, i, 1);
                        s.U.add_row(t, i, 1);
                        dirty = true;
                    }
        }
        if (d.at(t, t) < 0) {
            d.negate_row(t);
            s.U.negate_row(t);
        }
    }

    for (int t = 0; t < (r < c ? r : c); ++t)
        if (d.at(t, t) != 0) {
            s.invariant_factors.push_back(d.at(t, t));
            ++s.rank;
        }

    if (verify) {
        if (!(multiply(multiply(s.U, input), s.V) == s.D))
            throw internal_error("smith_normal_form: U*M*V != D");
        for (std::size_t k = 0; k + 1 < s.invariant_factors.size(); ++k)
            if (s.invariant_factors[k + 1] % s.invariant_factors[k] != 0)
                throw internal_error("smith_normal_form: invariant factor chain broken");
    }
    return s;
}

inline std::int64_t rank_of(const IntMatrix& m) { return smith_normal_form(m, false).rank; }

// Columns form a basis of the integer kernel (a direct summand of Z^cols).
inline IntMatrix kernel_basis(const IntMatrix& m) {
    SmithNormalForm s = smith_normal_form(m, false);
    int free_cols = m.cols() - static_cast<int>(s.rank);
    IntMatrix k(m.cols(), free_cols);
    for (int j = 0; j < free_cols; ++j)
        for (int i = 0; i < m.cols(); ++i) k.at(i, j) = s.V.at(i, static_cast<int>(s.rank) + j);
    return k;
}

// Solves A X = B exactly over the integers; throws internal_error when no
// integral solution exists.
inline IntMatrix solve_exact(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows() != b.rows()) throw index_error("solve_exact: row mismatch");
    SmithNormalForm s = smith_normal_form(a, false);
    IntMatrix ub = multiply(s.U, b);
    IntMatrix y(a.cols(), b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < b.cols(); ++j) {
            if (i < s.rank) {
                const Int& pivot = s.D.at(i, i);
                if (ub.at(i, j) % pivot != 0)
                    throw internal_error("solve_exact: no integral solution (division)");
                if (i < y.rows()) y.at(i, j) = ub.at(i, j) / pivot;
            } else if (ub.at(i, j) != 0) {
                throw internal_error("solve_exact: no integral solution (rank)");
            }
        }
    }
    return multiply(s.V, y);
}

inline std::string to_string(const IntMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j) out += ' ';
            out += m.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

}  // namespace braidlab
