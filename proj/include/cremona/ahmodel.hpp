#pragma once

#include <string>
#include <vector>

#include "cremona/derivation.hpp"
#include "cremona/grading.hpp"

namespace cremona {
namespace ahmodel {

/// Vertices of the standard (n-1)-simplex in N: the dual basis vectors
/// nu_1..nu_{n-1} together with the origin. The divisor is fixed to
/// Delta * [0] on the affine line.
struct SimplexModel {
    int n;

    explicit SimplexModel(int n_) : n(n_) {
        if (n < 2) throw std::invalid_argument("SimplexModel: n must be >= 2");
    }

    // Pairing <v_i, m> of vertex i (1-based) against m.
    int vertex_pairing(int i, const MVec& m) const;
    std::vector<NVec> vertices() const;
};

/// A term c * t^r * chi^m of (the fraction field of) the graded algebra.
struct ADMonomial {
    Rat coeff;
    int r;
    MVec m;

    friend bool operator==(const ADMonomial& a, const ADMonomial& b) {
        return a.coeff == b.coeff && a.r == b.r && a.m == b.m;
    }
};

std::string to_string(const ADMonomial& t);

/// The triple (lambda, i, e) parameterizing a horizontal-type homogeneous
/// derivation attached to vertex v_i.
struct ADDerivationSpec {
    Rat lambda;
    int i;
    MVec e;
};

std::string to_string(const ADDerivationSpec& spec);

// Evaluation of the divisor at m: min over vertices of <v, m>, i.e.
// min(0, m_1, ..., m_{n-1}).
int dd_eval(const MVec& m);

// Whether t^r * chi^m lies in the graded algebra: r >= max(0, -dd_eval(m)).
bool membership(int r, const MVec& m);

// The dictionary with polynomial coordinates: x_i = chi^{mu_i} for i < n
// and x_n = t * chi^{-(1,...,1)}. Mutually inverse bijections between
// monomials of the polynomial ring and lattice points of the algebra.
std::pair<int, MVec> to_ad(const ExponentVec& alpha);
ExponentVec from_ad(int r, const MVec& m);  // throws on non-member input

// Local nilpotency condition: <v_j, e> >= <v_i, e> + 1 for all j != i.
bool admissible(int n, int i, const MVec& e);

struct ADApplyResult {
    bool is_zero;
    ADMonomial term;   // valid when !is_zero
    bool in_algebra;   // false flags a result leaving the graded algebra
};

// The derivation formula: t^r * chi^m maps to
// lambda * (r + <v_i, m>) * t^{r - <v_i, e> - 1} * chi^{m + e}.
ADApplyResult ad_apply(const ADDerivationSpec& spec, const ADMonomial& term);

// The monomial derivation lambda * x^alpha * d/dx_i matching the spec under
// the dictionary. Requires admissibility, which makes all alpha entries
// non-negative.
Derivation translate_spec(const ADDerivationSpec& spec);

// Inverse of translate_spec on pairs (i, alpha) with alpha_i = 0: the e with
// translate_spec(1, i, e) = x^alpha * d/dx_i.
MVec spec_degree_from_alpha(int n, int i, const ExponentVec& alpha);

// Brute-force scan: does ad_apply map every member monomial with
// r + sum |m_k| <= bound to zero or a member?
bool closure_check(const ADDerivationSpec& spec, int bound);

}  // namespace ahmodel
}  // namespace cremona
