#pragma once

#include <string>
#include <vector>

#include "cremona/ahmodel.hpp"
#include "cremona/derivation.hpp"
#include "cremona/grading.hpp"

namespace cremona {
namespace classify {

/// One classified root vector x^alpha * d/dx_i together with its root.
struct RootVectorEntry {
    int i;
    ExponentVec alpha;   // alpha_i = 0
    CharClass root;      // normalize_char(alpha - unit_i)
    MVec mvec;           // char_to_mvec(root)
};

// All pairs (i, alpha) with alpha_i = 0 and total degree <= dmax, each with
// its root; sorted by i, then graded-lex on alpha.
std::vector<RootVectorEntry> enumerate_root_vectors(int n, int dmax);

// The character diag(g_1..g_n) -> g_i^{-1} * prod g_j^{alpha_j}.
CharClass root_character(int i, const ExponentVec& alpha);

// Whether the character with exponents beta is a root: the minimum of the
// beta_j is achieved exactly once. Invariant under shifts by (1,...,1).
bool is_root_character(const std::vector<int>& beta);

struct CrossValidateReport {
    int n = 0;
    int dmax = 0;
    int ebox = 0;
    int entries = 0;
    int specs_checked = 0;
    std::vector<std::string> violations;

    bool pass() const { return violations.empty(); }
};

// Cross-validates the enumeration against the polyhedral-divisor
// parameterization: (a) every admissible (i, e) in the box translates to an
// enumerated entry with root e; (b) every entry reachable from the box comes
// from exactly one admissible spec; (c) no two entries share a character.
// Every entry is additionally re-certified through root_check.
CrossValidateReport cross_validate(int n, int dmax, int ebox);

struct OracleReport {
    int n = 0;
    int dmax = 0;
    long budget = 0;
    unsigned seed = 0;
    long tested = 0;
    long homogeneous_lnd_found = 0;
    int theorem_checked = 0;
    int theorem_passed = 0;
    std::vector<std::string> counterexamples;

    bool pass() const {
        return counterexamples.empty() && theorem_passed == theorem_checked;
    }
};

// Seeded search for counterexamples: random homogeneous derivation
// candidates (up to 2 nonzero images, up to 2 terms each, small rational
// coefficients); every candidate that is a proven LND and homogeneous must
// be of the monomial normal form. Also re-checks every classified
// derivation in range through root_check.
OracleReport oracle_search(int n, int dmax, long budget, unsigned seed);

}  // namespace classify
}  // namespace cremona
