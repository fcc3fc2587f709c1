#include "cremona/poly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace cremona {

int total_degree(const ExponentVec& alpha) {
    int d = 0;
    for (int a : alpha) d += a;
    return d;
}

bool grlex_less(const ExponentVec& a, const ExponentVec& b) {
    const int da = total_degree(a), db = total_degree(b);
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

int Poly::check_dim(int n) {
    if (n < 1) throw std::invalid_argument("Poly: dimension must be >= 1");
    return n;
}

Poly Poly::constant(int n, const Rat& c) {
    Poly p(n);
    p.add_term(ExponentVec(n, 0), c);
    return p;
}

Poly Poly::variable(int n, int i) {
    if (i < 1 || i > n) throw std::invalid_argument("Poly::variable: index out of range");
    ExponentVec alpha(n, 0);
    alpha[i - 1] = 1;
    return monomial(n, alpha, 1);
}

Poly Poly::monomial(int n, const ExponentVec& alpha, const Rat& c) {
    Poly p(n);
    p.add_term(alpha, c);
    return p;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    // Leading term has maximal graded-lex order, hence maximal total degree.
    return total_degree(terms_.begin()->first);
}

Rat Poly::coeff(const ExponentVec& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? Rat(0) : it->second;
}

Poly& Poly::add_term(const ExponentVec& alpha, const Rat& c) {
    if (static_cast<int>(alpha.size()) != n_)
        throw std::invalid_argument("Poly::add_term: exponent length mismatch");
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("Poly::add_term: negative exponent");
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(alpha, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [a, c] : terms_) r.terms_.emplace(a, -c);
    return r;
}

static void require_same_dim(int a, int b, const char* op) {
    if (a != b) throw std::invalid_argument(std::string(op) + ": dimension mismatch");
}

Poly operator+(const Poly& f, const Poly& g) {
    require_same_dim(f.n_, g.n_, "Poly::add");
    Poly r = f;
    for (const auto& [a, c] : g.terms_) r.add_term(a, c);
    return r;
}

Poly operator-(const Poly& f, const Poly& g) {
    require_same_dim(f.n_, g.n_, "Poly::sub");
    Poly r = f;
    for (const auto& [a, c] : g.terms_) r.add_term(a, -c);
    return r;
}

Poly operator*(const Poly& f, const Poly& g) {
    require_same_dim(f.n_, g.n_, "Poly::mul");
    Poly r(f.n_);
    ExponentVec sum(f.n_);
    for (const auto& [a, ca] : f.terms_) {
        for (const auto& [b, cb] : g.terms_) {
            for (int k = 0; k < f.n_; ++k) sum[k] = a[k] + b[k];
            r.add_term(sum, ca * cb);
        }
    }
    return r;
}

Poly operator*(const Rat& c, const Poly& f) {
    Poly r(f.n_);
    if (c == 0) return r;
    for (const auto& [a, ca] : f.terms_) r.terms_.emplace(a, c * ca);
    return r;
}

Poly pow(const Poly& f, int k) {
    if (k < 0) throw std::invalid_argument("Poly::pow: negative exponent");
    Poly r = Poly::constant(f.dim(), 1);
    Poly base = f;
    while (k > 0) {
        if (k & 1) r = r * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return r;
}

Poly partial(const Poly& f, int i) {
    if (i < 1 || i > f.dim()) throw std::invalid_argument("Poly::partial: index out of range");
    Poly r(f.dim());
    for (const auto& [a, c] : f.terms()) {
        if (a[i - 1] == 0) continue;
        ExponentVec b = a;
        b[i - 1] -= 1;
        r.add_term(b, c * a[i - 1]);
    }
    return r;
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
    if (static_cast<int>(images.size()) != f.dim())
        throw std::invalid_argument("Poly::substitute: wrong number of images");
    int m = images.empty() ? f.dim() : images[0].dim();
    for (const Poly& g : images) require_same_dim(g.dim(), m, "Poly::substitute");
    Poly r(m);
    for (const auto& [a, c] : f.terms()) {
        Poly t = Poly::constant(m, c);
        for (int k = 0; k < f.dim(); ++k)
            if (a[k] > 0) t = t * pow(images[k], a[k]);
        r = r + t;
    }
    return r;
}

namespace {

// det of the minor on the given column mask, expanding along the row equal
// to the number of already-consumed columns.
Poly det_minor(const std::vector<std::vector<Poly>>& m, unsigned cols, int row,
               std::unordered_map<unsigned, Poly>& memo, int n) {
    auto it = memo.find(cols);
    if (it != memo.end()) return it->second;
    Poly r(m[0][0].dim());
    int sign = 1;
    for (int j = 0; j < n; ++j) {
        if (!(cols & (1u << j))) continue;
        const Poly& entry = m[row][j];
        if (!entry.is_zero()) {
            Poly sub = row + 1 == n ? Poly::constant(entry.dim(), 1)
                                    : det_minor(m, cols & ~(1u << j), row + 1, memo, n);
            Poly contrib = entry * sub;
            r = sign > 0 ? r + contrib : r - contrib;
        }
        sign = -sign;
    }
    memo.emplace(cols, r);
    return r;
}

}  // namespace

Poly det(const std::vector<std::vector<Poly>>& matrix) {
    const int n = static_cast<int>(matrix.size());
    if (n == 0 || n > 8) throw std::invalid_argument("det: matrix size must be 1..8");
    for (const auto& row : matrix) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("det: non-square input");
        for (const Poly& p : row)
            require_same_dim(p.dim(), matrix[0][0].dim(), "det");
    }
    std::unordered_map<unsigned, Poly> memo;
    return det_minor(matrix, (1u << n) - 1, 0, memo, n);
}

namespace {

std::string monomial_factors(const ExponentVec& a) {
    std::string s;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(k + 1);
        if (a[k] > 1) s += "^" + std::to_string(a[k]);
    }
    return s;
}

}  // namespace

std::string to_string(const Poly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, c] : f.terms()) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string vars = monomial_factors(a);
        if (vars.empty()) {
            out += rat_to_string(abs);
        } else if (abs == 1) {
            out += vars;
        } else {
            out += rat_to_string(abs) + "*" + vars;
        }
    }
    return out;
}

LaurentScalar LaurentScalar::constant(const Rat& c, int rank) {
    return monomial(std::vector<int>(rank, 0), c);
}

LaurentScalar LaurentScalar::monomial(const std::vector<int>& w, const Rat& c) {
    LaurentScalar s;
    s.add_term(w, c);
    return s;
}

bool LaurentScalar::is_parameter_free() const {
    for (const auto& [w, c] : terms_)
        for (int e : w)
            if (e != 0) return false;
    return true;
}

LaurentScalar& LaurentScalar::add_term(const std::vector<int>& w, const Rat& c) {
    if (c == 0) return *this;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
    return *this;
}

LaurentScalar operator+(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

LaurentScalar operator*(const LaurentScalar& a, const LaurentScalar& b) {
    LaurentScalar r;
    for (const auto& [wa, ca] : a.terms_) {
        for (const auto& [wb, cb] : b.terms_) {
            std::vector<int> w(wa.size());
            for (std::size_t k = 0; k < w.size(); ++k) w[k] = wa[k] + wb[k];
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

std::string to_string(const LaurentScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : s.terms()) {
        Rat abs = c < 0 ? Rat(-c) : c;
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string vars;
        for (std::size_t k = 0; k < w.size(); ++k) {
            if (w[k] == 0) continue;
            if (!vars.empty()) vars += "*";
            vars += "s" + std::to_string(k + 1);
            if (w[k] != 1) vars += "^" + std::to_string(w[k]);
        }
        if (vars.empty()) {
            out += rat_to_string(abs);
        } else if (abs == 1) {
            out += vars;
        } else {
            out += rat_to_string(abs) + "*" + vars;
        }
    }
    return out;
}

TorusPoly TorusPoly::from_poly(const Poly& f) {
    TorusPoly r(f.dim());
    const int rank = f.dim() - 1;
    for (const auto& [a, c] : f.terms())
        r.terms_.emplace(a, LaurentScalar::constant(c, rank));
    return r;
}

TorusPoly& TorusPoly::add_term(const ExponentVec& alpha, const LaurentScalar& s) {
    if (static_cast<int>(alpha.size()) != n_)
        throw std::invalid_argument("TorusPoly::add_term: exponent length mismatch");
    if (s.is_zero()) return *this;
    auto [it, inserted] = terms_.emplace(alpha, s);
    if (!inserted) {
        it->second = it->second + s;
        if (it->second.is_zero()) terms_.erase(it);
    }
    return *this;
}

TorusPoly operator+(const TorusPoly& f, const TorusPoly& g) {
    require_same_dim(f.n_, g.n_, "TorusPoly::add");
    TorusPoly r = f;
    for (const auto& [a, s] : g.terms_) r.add_term(a, s);
    return r;
}

TorusPoly operator*(const LaurentScalar& s, const TorusPoly& f) {
    TorusPoly r(f.n_);
    for (const auto& [a, t] : f.terms_) r.add_term(a, s * t);
    return r;
}

std::string to_string(const TorusPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [a, s] : f.terms()) {
        if (!first) out += " + ";
        first = false;
        std::string vars = monomial_factors(a);
        std::string scalar = to_string(s);
        if (s.terms().size() > 1) scalar = "(" + scalar + ")";
        out += vars.empty() ? scalar : scalar + "*" + vars;
    }
    return out;
}

}  // namespace cremona
