#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cremona/grading.hpp"
#include "cremona/poly.hpp"

namespace cremona {

/// A K-derivation of the polynomial ring, given by its generator images
/// d(x_1),...,d(x_n). Extends to the whole ring by the Leibniz rule.
class Derivation {
public:
    Derivation(int n, std::vector<Poly> images);

    static Derivation monomial(int n, const Rat& lambda, int i, const ExponentVec& alpha);

    int dim() const { return n_; }
    const std::vector<Poly>& images() const { return images_; }
    const Poly& image(int j) const { return images_.at(j - 1); }  // 1-based
    bool is_zero() const;

    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.n_ == b.n_ && a.images_ == b.images_;
    }
    friend bool operator!=(const Derivation& a, const Derivation& b) { return !(a == b); }

private:
    int n_;
    std::vector<Poly> images_;
};

Poly apply(const Derivation& d, const Poly& f);

/// Nilpotency certificate. Vanishing of every generator chain within the
/// cap proves local nilpotency on the whole ring (Leibniz rule); a cap
/// exhaustion is inconclusive, never a "not LND" claim.
struct LndVerdict {
    bool proven;
    int cap;
    // When proven: minimal k_j with d^{k_j}(x_j) = 0, one per generator.
    std::vector<int> orders;
    // When not proven: generators whose chain did not reach zero.
    std::vector<int> unresolved;
};

int default_cap(const Derivation& d);

LndVerdict lnd_check(const Derivation& d, int cap);

// Degree e = deg d(x_j) - deg x_j, required to agree across all nonzero
// images. Zero images are compatible with any degree. Throws on the zero
// derivation.
std::optional<MVec> derivation_homogeneity(const Derivation& d);

/// A polynomial automorphism of affine n-space given by coordinate images.
struct Automorphism {
    int n;
    std::vector<Poly> images;

    static Automorphism identity(int n);

    friend bool operator==(const Automorphism& a, const Automorphism& b) {
        return a.n == b.n && a.images == b.images;
    }
};

// Composition (a then b as substitutions): (compose(a,b))(x_j) = b(x_j) with
// x_i replaced by a(x_i), i.e. the automorphism sending f to a(b(f)).
Automorphism compose(const Automorphism& a, const Automorphism& b);

// exp(t*d) as an automorphism; requires a Proven verdict for d.
Automorphism exp(const Derivation& d, const Rat& t, const LndVerdict& verdict);
Automorphism exp(const Derivation& d, const Rat& t);  // runs lnd_check(default_cap)

bool is_volume_preserving(const Automorphism& a);

// Generator images of g o d o g^{-1} for the generic torus element
// g = diag(s_1,...,s_{n-1},(s_1...s_{n-1})^{-1}) with formal parameters.
std::vector<TorusPoly> conjugate_formal(const Derivation& d);

/// Outcome of the root-vector decision.
struct RootCheckResult {
    enum class Status { IsRoot, NotHomogeneous, NotLndWithinCap, ZeroDerivation };
    Status status;
    // Valid when IsRoot: the root and the normal form lambda * x^alpha * d/dx_i.
    MVec root;
    Rat lambda;
    int index = 0;
    ExponentVec alpha;
    LndVerdict verdict{false, 0, {}, {}};

    bool is_root() const { return status == Status::IsRoot; }
};

// Decides whether d is a root vector of the volume-preserving automorphism
// group with respect to the diagonal torus. IsRoot requires: d nonzero,
// proven locally nilpotent within the cap, homogeneous of some degree e,
// and the exact conjugation identity conjugate_formal(d) = s^e * d. The
// returned normal form is extracted from the single nonzero monomial image;
// a homogeneous proven LND violating that shape raises
// internal_inconsistency_error.
RootCheckResult root_check(const Derivation& d, int cap);

struct internal_inconsistency_error : std::logic_error {
    using std::logic_error::logic_error;
};

std::string to_string(const Derivation& d);

}  // namespace cremona
