#include "cremona/derivation.hpp"

#include <stdexcept>

namespace cremona {

Derivation::Derivation(int n, std::vector<Poly> images)
    : n_(n), images_(std::move(images)) {
    if (n_ < 2) throw std::invalid_argument("Derivation: dimension must be >= 2");
    if (static_cast<int>(images_.size()) != n_)
        throw std::invalid_argument("Derivation: expected n generator images");
    for (const Poly& p : images_)
        if (p.dim() != n_)
            throw std::invalid_argument("Derivation: image dimension mismatch");
}

Derivation Derivation::monomial(int n, const Rat& lambda, int i, const ExponentVec& alpha) {
    if (i < 1 || i > n) throw std::invalid_argument("Derivation::monomial: index out of range");
    std::vector<Poly> images(n, Poly::zero(n));
    images[i - 1] = Poly::monomial(n, alpha, lambda);
    return Derivation(n, std::move(images));
}

bool Derivation::is_zero() const {
    for (const Poly& p : images_)
        if (!p.is_zero()) return false;
    return true;
}

Poly apply(const Derivation& d, const Poly& f) {
    if (f.dim() != d.dim()) throw std::invalid_argument("Derivation::apply: dimension mismatch");
    Poly r(d.dim());
    for (int i = 1; i <= d.dim(); ++i) {
        const Poly& img = d.image(i);
        if (img.is_zero()) continue;
        r = r + img * partial(f, i);
    }
    return r;
}

int default_cap(const Derivation& d) {
    int degs = 0;
    for (const Poly& p : d.images())
        if (!p.is_zero()) degs += p.degree();
    return 2 * d.dim() + degs + 4;
}

LndVerdict lnd_check(const Derivation& d, int cap) {
    if (cap < 1) throw std::invalid_argument("lnd_check: cap must be >= 1");
    LndVerdict v{true, cap, std::vector<int>(d.dim(), -1), {}};
    for (int j = 1; j <= d.dim(); ++j) {
        Poly chain = Poly::variable(d.dim(), j);
        int order = -1;
        for (int k = 1; k <= cap; ++k) {
            chain = apply(d, chain);
            if (chain.is_zero()) {
                order = k;
                break;
            }
        }
        if (order < 0) {
            v.proven = false;
            v.unresolved.push_back(j);
        } else {
            v.orders[j - 1] = order;
        }
    }
    if (!v.proven) v.orders.clear();
    return v;
}

std::optional<MVec> derivation_homogeneity(const Derivation& d) {
    if (d.is_zero()) throw std::invalid_argument("derivation_homogeneity: zero derivation");
    std::optional<MVec> e;
    for (int j = 1; j <= d.dim(); ++j) {
        const Poly& img = d.image(j);
        HomogeneityVerdict h = is_homogeneous(img);
        if (h.is_zero()) continue;
        if (!h.is_homogeneous()) return std::nullopt;
        MVec ej = mvec_sub(h.degree, generator_degree(d.dim(), j));
        if (!e)
            e = std::move(ej);
        else if (*e != ej)
            return std::nullopt;
    }
    return e;
}

Automorphism Automorphism::identity(int n) {
    std::vector<Poly> images;
    images.reserve(n);
    for (int i = 1; i <= n; ++i) images.push_back(Poly::variable(n, i));
    return {n, std::move(images)};
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
    if (a.n != b.n) throw std::invalid_argument("compose: dimension mismatch");
    std::vector<Poly> images;
    images.reserve(a.n);
    for (const Poly& g : b.images) images.push_back(substitute(g, a.images));
    return {a.n, std::move(images)};
}

Automorphism exp(const Derivation& d, const Rat& t, const LndVerdict& verdict) {
    if (!verdict.proven)
        throw std::invalid_argument("exp: derivation is not a proven LND");
    std::vector<Poly> images;
    images.reserve(d.dim());
    for (int j = 1; j <= d.dim(); ++j) {
        Poly sum = Poly::variable(d.dim(), j);
        Poly chain = sum;
        Rat coef = 1;
        for (int k = 1; k < verdict.orders[j - 1]; ++k) {
            chain = apply(d, chain);
            coef *= t;
            coef /= k;
            sum = sum + coef * chain;
        }
        images.push_back(std::move(sum));
    }
    return {d.dim(), std::move(images)};
}

Automorphism exp(const Derivation& d, const Rat& t) {
    return exp(d, t, lnd_check(d, default_cap(d)));
}

bool is_volume_preserving(const Automorphism& a) {
    std::vector<std::vector<Poly>> jac(a.n, std::vector<Poly>(a.n, Poly::zero(a.n)));
    for (int i = 0; i < a.n; ++i)
        for (int j = 0; j < a.n; ++j) jac[i][j] = partial(a.images[j], i + 1);
    return det(jac) == Poly::constant(a.n, 1);
}

namespace {

// Laurent weight of x^alpha under the generic torus element
// g(x_k) = s_k x_k with s_n = (s_1...s_{n-1})^{-1}: each x_k (k < n)
// contributes +alpha_k to slot k, x_n contributes -alpha_n to every slot.
std::vector<int> torus_weight(const ExponentVec& alpha) {
    const int rank = static_cast<int>(alpha.size()) - 1;
    std::vector<int> w(rank);
    for (int k = 0; k < rank; ++k) w[k] = alpha[k] - alpha[rank];
    return w;
}

}  // namespace

std::vector<TorusPoly> conjugate_formal(const Derivation& d) {
    const int n = d.dim();
    const int rank = n - 1;
    std::vector<TorusPoly> out;
    out.reserve(n);
    for (int j = 1; j <= n; ++j) {
        TorusPoly img(n);
        for (const auto& [alpha, c] : d.image(j).terms()) {
            std::vector<int> w = torus_weight(alpha);
            // g^{-1} applied to x_j contributes s_j^{-1} (s_n^{-1} for j = n)
            if (j < n)
                w[j - 1] -= 1;
            else
                for (int& e : w) e += 1;
            img.add_term(alpha, LaurentScalar::monomial(w, c));
        }
        out.push_back(std::move(img));
    }
    return out;
}

RootCheckResult root_check(const Derivation& d, int cap) {
    RootCheckResult r;
    if (d.is_zero()) {
        r.status = RootCheckResult::Status::ZeroDerivation;
        return r;
    }
    // Homogeneity is decidable, so a mixed-degree derivation gets the
    // definitive negative even when nilpotency is also inconclusive.
    std::optional<MVec> e = derivation_homogeneity(d);
    if (!e) {
        r.status = RootCheckResult::Status::NotHomogeneous;
        return r;
    }
    r.verdict = lnd_check(d, cap);
    if (!r.verdict.proven) {
        r.status = RootCheckResult::Status::NotLndWithinCap;
        return r;
    }

    // Conjugation identity, checked on the nose: g o d o g^{-1} = s^e * d.
    std::vector<TorusPoly> conj = conjugate_formal(d);
    LaurentScalar chi = LaurentScalar::monomial(*e, 1);
    for (int j = 1; j <= d.dim(); ++j) {
        if (conj[j - 1] != chi * TorusPoly::from_poly(d.image(j)))
            throw internal_inconsistency_error(
                "root_check: homogeneous derivation fails the conjugation identity");
    }

    // Normal form lambda * x^alpha * d/dx_i from the single nonzero image.
    int index = 0;
    for (int j = 1; j <= d.dim(); ++j) {
        if (d.image(j).is_zero()) continue;
        if (index != 0)
            throw internal_inconsistency_error(
                "root_check: homogeneous proven LND with more than one nonzero image");
        index = j;
    }
    const Poly& img = d.image(index);
    if (img.term_count() != 1)
        throw internal_inconsistency_error(
            "root_check: homogeneous proven LND with a non-monomial image");
    const auto& [alpha, lambda] = *img.terms().begin();
    if (alpha[index - 1] != 0)
        throw internal_inconsistency_error(
            "root_check: monomial image depends on its own variable");

    r.status = RootCheckResult::Status::IsRoot;
    r.root = *e;
    r.lambda = lambda;
    r.index = index;
    r.alpha = alpha;
    return r;
}

std::string to_string(const Derivation& d) {
    std::string s;
    for (int j = 1; j <= d.dim(); ++j) {
        if (j > 1) s += ", ";
        s += to_string(d.image(j));
    }
    return s;
}

}  // namespace cremona
