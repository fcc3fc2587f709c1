#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cremona/rational.hpp"

namespace cremona {

// Exponent multi-index alpha of a monomial x^alpha; length is the ambient
// dimension n.
using ExponentVec = std::vector<int>;

int total_degree(const ExponentVec& alpha);

// Graded lexicographic order, the one canonical order used everywhere.
bool grlex_less(const ExponentVec& a, const ExponentVec& b);

// Term maps are kept leading-term-first so printing and hashing are
// deterministic.
struct GrlexGreater {
    bool operator()(const ExponentVec& a, const ExponentVec& b) const {
        return grlex_less(b, a);
    }
};

/// Sparse multivariate polynomial over Q in n >= 1 variables.
/// Invariant: no stored coefficient is zero.
class Poly {
public:
    using TermMap = std::map<ExponentVec, Rat, GrlexGreater>;

    explicit Poly(int n) : n_(check_dim(n)) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const Rat& c);
    static Poly variable(int n, int i);  // i is 1-based
    static Poly monomial(int n, const ExponentVec& alpha, const Rat& c);

    int dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // Total degree of the polynomial; -1 for the zero polynomial.
    int degree() const;

    Rat coeff(const ExponentVec& alpha) const;

    Poly& add_term(const ExponentVec& alpha, const Rat& c);

    Poly operator-() const;
    friend Poly operator+(const Poly& f, const Poly& g);
    friend Poly operator-(const Poly& f, const Poly& g);
    friend Poly operator*(const Poly& f, const Poly& g);
    friend Poly operator*(const Rat& c, const Poly& f);
    friend bool operator==(const Poly& f, const Poly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const Poly& f, const Poly& g) { return !(f == g); }

private:
    static int check_dim(int n);
    int n_;
    TermMap terms_;
};

Poly pow(const Poly& f, int k);
Poly partial(const Poly& f, int i);  // i is 1-based
Poly substitute(const Poly& f, const std::vector<Poly>& images);

// Determinant by cofactor expansion with memoization on column subsets.
// Requires a square matrix with n <= 8 rows.
Poly det(const std::vector<std::vector<Poly>>& matrix);

std::string to_string(const Poly& f);

/// Laurent monomial ring in the formal torus parameters s_1..s_{n-1},
/// used as a coefficient ring for formal conjugation. Exponents may be
/// negative.
class LaurentScalar {
public:
    using TermMap = std::map<std::vector<int>, Rat>;

    LaurentScalar() = default;
    static LaurentScalar constant(const Rat& c, int rank);
    static LaurentScalar monomial(const std::vector<int>& w, const Rat& c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // True when the scalar does not involve any parameter.
    bool is_parameter_free() const;

    LaurentScalar& add_term(const std::vector<int>& w, const Rat& c);

    friend LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b);
    friend LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b);
    friend bool operator==(const LaurentScalar& a, const LaurentScalar& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const LaurentScalar& a, const LaurentScalar& b) {
        return !(a == b);
    }

private:
    TermMap terms_;
};

std::string to_string(const LaurentScalar& s);

/// Polynomial in x_1..x_n with LaurentScalar coefficients.
class TorusPoly {
public:
    using TermMap = std::map<ExponentVec, LaurentScalar, GrlexGreater>;

    explicit TorusPoly(int n) : n_(n) {}

    static TorusPoly from_poly(const Poly& f);

    int dim() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    TorusPoly& add_term(const ExponentVec& alpha, const LaurentScalar& s);

    friend TorusPoly operator+(const TorusPoly& f, const TorusPoly& g);
    friend TorusPoly operator*(const LaurentScalar& s, const TorusPoly& f);
    friend bool operator==(const TorusPoly& f, const TorusPoly& g) {
        return f.n_ == g.n_ && f.terms_ == g.terms_;
    }
    friend bool operator!=(const TorusPoly& f, const TorusPoly& g) {
        return !(f == g);
    }

private:
    int n_;
    TermMap terms_;
};

std::string to_string(const TorusPoly& f);

}  // namespace cremona
