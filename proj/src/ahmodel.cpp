#include "cremona/ahmodel.hpp"

#include <algorithm>
#include <functional>

namespace cremona {
namespace ahmodel {

int SimplexModel::vertex_pairing(int i, const MVec& m) const {
    if (i < 1 || i > n) throw std::invalid_argument("vertex_pairing: index out of range");
    if (static_cast<int>(m.size()) != n - 1)
        throw std::invalid_argument("vertex_pairing: mvec length mismatch");
    return i < n ? m[i - 1] : 0;
}

std::vector<NVec> SimplexModel::vertices() const {
    std::vector<NVec> vs(n, NVec(n - 1, 0));
    for (int i = 0; i < n - 1; ++i) vs[i][i] = 1;
    return vs;
}

std::string to_string(const ADMonomial& t) {
    return rat_to_string(t.coeff) + " * t^" + std::to_string(t.r) + " * chi^" +
           to_string_mvec(t.m);
}

std::string to_string(const ADDerivationSpec& spec) {
    return "lambda=" + rat_to_string(spec.lambda) + ", i=" + std::to_string(spec.i) +
           ", e=" + to_string_mvec(spec.e);
}

int dd_eval(const MVec& m) {
    int v = 0;
    for (int mk : m) v = std::min(v, mk);
    return v;
}

bool membership(int r, const MVec& m) { return r >= std::max(0, -dd_eval(m)); }

std::pair<int, MVec> to_ad(const ExponentVec& alpha) {
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("to_ad: negative exponent");
    return {alpha.back(), mdeg_monomial(alpha)};
}

ExponentVec from_ad(int r, const MVec& m) {
    if (!membership(r, m)) throw std::invalid_argument("from_ad: (r, m) is not a member");
    ExponentVec alpha(m.size() + 1);
    for (std::size_t k = 0; k < m.size(); ++k) alpha[k] = m[k] + r;
    alpha.back() = r;
    return alpha;
}

bool admissible(int n, int i, const MVec& e) {
    if (i < 1 || i > n) throw std::invalid_argument("admissible: index out of range");
    SimplexModel simplex(n);
    const int vie = simplex.vertex_pairing(i, e);
    for (int j = 1; j <= n; ++j) {
        if (j == i) continue;
        if (simplex.vertex_pairing(j, e) < vie + 1) return false;
    }
    return true;
}

ADApplyResult ad_apply(const ADDerivationSpec& spec, const ADMonomial& term) {
    const int n = static_cast<int>(spec.e.size()) + 1;
    SimplexModel simplex(n);
    Rat coeff = spec.lambda * term.coeff * (term.r + simplex.vertex_pairing(spec.i, term.m));
    if (coeff == 0) return {true, {}, true};
    ADMonomial out{coeff, term.r - simplex.vertex_pairing(spec.i, spec.e) - 1,
                   mvec_add(term.m, spec.e)};
    const bool member = membership(out.r, out.m);
    return {false, std::move(out), member};
}

Derivation translate_spec(const ADDerivationSpec& spec) {
    const int n = static_cast<int>(spec.e.size()) + 1;
    if (spec.lambda == 0) throw std::invalid_argument("translate_spec: lambda must be nonzero");
    if (!admissible(n, spec.i, spec.e))
        throw std::invalid_argument("translate_spec: inadmissible spec");
    ExponentVec alpha(n, 0);
    if (spec.i < n) {
        const int ei = spec.e[spec.i - 1];
        alpha[n - 1] = -ei - 1;
        for (int k = 1; k < n; ++k)
            if (k != spec.i) alpha[k - 1] = spec.e[k - 1] - ei - 1;
    } else {
        for (int k = 1; k < n; ++k) alpha[k - 1] = spec.e[k - 1] - 1;
    }
    return Derivation::monomial(n, spec.lambda, spec.i, alpha);
}

MVec spec_degree_from_alpha(int n, int i, const ExponentVec& alpha) {
    if (static_cast<int>(alpha.size()) != n)
        throw std::invalid_argument("spec_degree_from_alpha: length mismatch");
    if (alpha[i - 1] != 0)
        throw std::invalid_argument("spec_degree_from_alpha: alpha_i must be 0");
    MVec e(n - 1);
    if (i < n) {
        const int ei = -alpha[n - 1] - 1;
        e[i - 1] = ei;
        for (int k = 1; k < n; ++k)
            if (k != i) e[k - 1] = alpha[k - 1] + ei + 1;
    } else {
        for (int k = 1; k < n; ++k) e[k - 1] = alpha[k - 1] + 1;
    }
    return e;
}

bool closure_check(const ADDerivationSpec& spec, int bound) {
    if (bound < 1) throw std::invalid_argument("closure_check: bound must be >= 1");
    const int rank = static_cast<int>(spec.e.size());
    MVec m(rank, -bound);
    bool ok = true;
    // Walk the box |m_k| <= bound in odometer order.
    std::function<void(int)> scan = [&](int k) {
        if (!ok) return;
        if (k == rank) {
            int msize = 0;
            for (int mk : m) msize += std::abs(mk);
            if (msize > bound) return;
            for (int r = std::max(0, -dd_eval(m)); r + msize <= bound; ++r) {
                ADApplyResult res = ad_apply(spec, {Rat(1), r, m});
                if (!res.is_zero && !res.in_algebra) {
                    ok = false;
                    return;
                }
            }
            return;
        }
        for (m[k] = -bound; m[k] <= bound; ++m[k]) scan(k + 1);
    };
    scan(0);
    return ok;
}

}  // namespace ahmodel
}  // namespace cremona
