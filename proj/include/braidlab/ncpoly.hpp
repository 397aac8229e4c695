#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidlab/alphabet.hpp"
#include "braidlab/bigint.hpp"
#include "braidlab/errors.hpp"

namespace braidlab {

// Truncated polynomial in noncommuting symbols a1..ar with integer
// coefficients.  Monomials are letter sequences of length <= max_degree;
// zero coefficients are never stored.
class NCPolynomial {
  public:
    using Monomial = std::vector<int>;  // 1-based symbol indices

    NCPolynomial(Alphabet alphabet, int max_degree)
        : alphabet_(std::move(alphabet)), max_degree_(max_degree) {
        if (max_degree_ < 0) throw index_error("NCPolynomial: negative truncation degree");
    }

    static NCPolynomial zero(Alphabet a, int d) { return NCPolynomial(std::move(a), d); }

    static NCPolynomial one(Alphabet a, int d) {
        NCPolynomial p(std::move(a), d);
        p.coeffs_[{}] = 1;
        return p;
    }

    const Alphabet& alphabet() const { return alphabet_; }
    int max_degree() const { return max_degree_; }
    const std::map<Monomial, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    Int coeff(const Monomial& m) const {
        auto it = coeffs_.find(m);
        return it == coeffs_.end() ? Int(0) : it->second;
    }

    void add_term(const Monomial& m, const Int& c) {
        if (c == 0 || static_cast<int>(m.size()) > max_degree_) return;
        for (int g : m) alphabet_.check_index(g);
        Int& slot = coeffs_[m];
        slot += c;
        if (slot == 0) coeffs_.erase(m);
    }

    NCPolynomial& operator+=(const NCPolynomial& o) {
        require_same(alphabet_, o.alphabet_, "NCPolynomial add");
        for (const auto& [m, c] : o.coeffs_) add_term(m, c);
        return *this;
    }

    NCPolynomial& operator-=(const NCPolynomial& o) {
        require_same(alphabet_, o.alphabet_, "NCPolynomial sub");
        for (const auto& [m, c] : o.coeffs_) add_term(m, -c);
        return *this;
    }

    friend NCPolynomial operator+(NCPolynomial a, const NCPolynomial& b) { return a += b; }
    friend NCPolynomial operator-(NCPolynomial a, const NCPolynomial& b) { return a -= b; }

    friend NCPolynomial operator*(const NCPolynomial& a, const NCPolynomial& b) {
        require_same(a.alphabet_, b.alphabet_, "NCPolynomial mul");
        NCPolynomial r(a.alphabet_, std::min(a.max_degree_, b.max_degree_));
        for (const auto& [ma, ca] : a.coeffs_) {
            for (const auto& [mb, cb] : b.coeffs_) {
                if (static_cast<int>(ma.size() + mb.size()) > r.max_degree_) continue;
                Monomial m = ma;
                m.insert(m.end(), mb.begin(), mb.end());
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    NCPolynomial homogeneous_part(int degree) const {
        NCPolynomial r(alphabet_, max_degree_);
        for (const auto& [m, c] : coeffs_)
            if (static_cast<int>(m.size()) == degree) r.coeffs_.emplace(m, c);
        return r;
    }

    // Smallest degree with a nonzero term, or -1 if zero.
    int min_degree() const {
        int best = -1;
        for (const auto& [m, c] : coeffs_) {
            int d = static_cast<int>(m.size());
            if (best < 0 || d < best) best = d;
        }
        return best;
    }

    bool operator==(const NCPolynomial& o) const {
        return alphabet_ == o.alphabet_ && coeffs_ == o.coeffs_;
    }

  private:
    Alphabet alphabet_;
    int max_degree_;
    std::map<Monomial, Int> coeffs_;
};

inline std::string to_string(const NCPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : p.coeffs()) {
        if (!s.empty()) s += c > 0 ? " + " : " - ";
        else if (c < 0) s += "-";
        Int a = abs_int(c);
        if (a != 1 || m.empty()) s += a.str();
        for (int g : m) s += p.alphabet().symbol + std::to_string(g);
    }
    return s;
}

}  // namespace braidlab
