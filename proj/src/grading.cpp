#include "cremona/grading.hpp"

#include <algorithm>
#include <stdexcept>

namespace cremona {

std::string to_string_mvec(const MVec& m) {
    std::string s = "(";
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(m[k]);
    }
    return s + ")";
}

MVec mvec_add(const MVec& a, const MVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mvec_add: length mismatch");
    MVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] + b[k];
    return r;
}

MVec mvec_sub(const MVec& a, const MVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("mvec_sub: length mismatch");
    MVec r(a.size());
    for (std::size_t k = 0; k < a.size(); ++k) r[k] = a[k] - b[k];
    return r;
}

CharClass::CharClass(std::vector<int> beta) : beta_(std::move(beta)) {
    if (beta_.size() < 2) throw std::invalid_argument("CharClass: need length >= 2");
    const int last = beta_.back();
    for (int& b : beta_) b -= last;
}

std::string to_string(const CharClass& c) {
    std::string s = "(";
    for (std::size_t k = 0; k < c.beta().size(); ++k) {
        if (k) s += ",";
        s += std::to_string(c.beta()[k]);
    }
    return s + ")";
}

CharClass normalize_char(const std::vector<int>& beta) { return CharClass(beta); }

MVec char_to_mvec(const CharClass& c) {
    return MVec(c.beta().begin(), c.beta().end() - 1);
}

CharClass mvec_to_char(const MVec& m) {
    std::vector<int> beta(m);
    beta.push_back(0);
    return CharClass(std::move(beta));
}

MVec mdeg_monomial(const ExponentVec& alpha) {
    if (alpha.size() < 2) throw std::invalid_argument("mdeg_monomial: need n >= 2");
    const int last = alpha.back();
    MVec m(alpha.size() - 1);
    for (std::size_t k = 0; k + 1 < alpha.size(); ++k) m[k] = alpha[k] - last;
    return m;
}

MVec generator_degree(int n, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("generator_degree: index out of range");
    MVec m(n - 1, 0);
    if (j < n)
        m[j - 1] = 1;
    else
        std::fill(m.begin(), m.end(), -1);
    return m;
}

std::map<MVec, Poly> homogeneous_components(const Poly& f) {
    std::map<MVec, Poly> comps;
    for (const auto& [alpha, c] : f.terms()) {
        MVec m = mdeg_monomial(alpha);
        auto it = comps.find(m);
        if (it == comps.end()) it = comps.emplace(m, Poly::zero(f.dim())).first;
        it->second.add_term(alpha, c);
    }
    return comps;
}

HomogeneityVerdict is_homogeneous(const Poly& f) {
    if (f.is_zero()) return {HomogeneityVerdict::Kind::Zero, {}};
    MVec m = mdeg_monomial(f.terms().begin()->first);
    for (const auto& [alpha, c] : f.terms())
        if (mdeg_monomial(alpha) != m) return {HomogeneityVerdict::Kind::Mixed, {}};
    return {HomogeneityVerdict::Kind::Homogeneous, std::move(m)};
}

std::vector<ExponentVec> monomial_basis(int n, const MVec& m, int dmax) {
    if (static_cast<int>(m.size()) != n - 1)
        throw std::invalid_argument("monomial_basis: mvec length mismatch");
    if (dmax < 0) throw std::invalid_argument("monomial_basis: dmax must be >= 0");
    int smin = 0;
    for (int mk : m) smin = std::max(smin, -mk);
    std::vector<ExponentVec> out;
    for (int s = smin;; ++s) {
        ExponentVec alpha(n);
        alpha[n - 1] = s;
        int deg = s;
        for (int k = 0; k < n - 1; ++k) {
            alpha[k] = m[k] + s;
            deg += alpha[k];
        }
        if (deg > dmax) break;
        out.push_back(std::move(alpha));
    }
    return out;  // increasing s is graded-lex increasing
}

}  // namespace cremona
