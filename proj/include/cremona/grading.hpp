#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cremona/poly.hpp"

namespace cremona {

// Element of the character lattice M = Z^{n-1} of the diagonal torus.
using MVec = std::vector<int>;
// Element of the dual lattice N.
using NVec = std::vector<int>;

std::string to_string_mvec(const MVec& m);

MVec mvec_add(const MVec& a, const MVec& b);
MVec mvec_sub(const MVec& a, const MVec& b);

/// A character of the diagonal torus, written as diag(g_1..g_n) -> prod g_j^{b_j}.
/// Two exponent vectors differing by a multiple of (1,...,1) give the same
/// character; the stored representative has b_n = 0.
class CharClass {
public:
    explicit CharClass(std::vector<int> beta);  // normalizes

    const std::vector<int>& beta() const { return beta_; }
    int dim() const { return static_cast<int>(beta_.size()); }

    friend bool operator==(const CharClass& a, const CharClass& b) {
        return a.beta_ == b.beta_;
    }
    friend bool operator!=(const CharClass& a, const CharClass& b) { return !(a == b); }
    friend bool operator<(const CharClass& a, const CharClass& b) {
        return a.beta_ < b.beta_;
    }

private:
    std::vector<int> beta_;
};

std::string to_string(const CharClass& c);

CharClass normalize_char(const std::vector<int>& beta);
MVec char_to_mvec(const CharClass& c);
CharClass mvec_to_char(const MVec& m);

// Degree of the monomial x^alpha in the M-grading: deg x_i = mu_i for i < n
// and deg x_n = -(mu_1 + ... + mu_{n-1}).
MVec mdeg_monomial(const ExponentVec& alpha);

// Degree of the generator x_j, as an MVec.
MVec generator_degree(int n, int j);

// Decomposition of f into semi-invariant pieces, keyed by M-degree.
std::map<MVec, Poly> homogeneous_components(const Poly& f);

/// Homogeneity verdict: the zero polynomial is homogeneous of every degree
/// and gets its own verdict so callers can treat it as compatible with
/// anything.
struct HomogeneityVerdict {
    enum class Kind { Zero, Homogeneous, Mixed };
    Kind kind;
    MVec degree;  // meaningful only when Homogeneous

    bool is_zero() const { return kind == Kind::Zero; }
    bool is_homogeneous() const { return kind == Kind::Homogeneous; }
};

HomogeneityVerdict is_homogeneous(const Poly& f);

// All alpha >= 0 with mdeg_monomial(alpha) = m and total degree <= dmax,
// sorted in graded-lex order. These are alpha = (m_1+s,...,m_{n-1}+s,s).
std::vector<ExponentVec> monomial_basis(int n, const MVec& m, int dmax);

}  // namespace cremona
