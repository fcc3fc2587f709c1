#include "cremona/classify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace cremona {
namespace classify {

namespace {

// All alpha >= 0 with total degree <= dmax, graded-lex ascending.
std::vector<ExponentVec> exponents_up_to(int n, int dmax) {
    std::vector<ExponentVec> out;
    ExponentVec alpha(n, 0);
    std::function<void(int, int)> rec = [&](int k, int budget) {
        if (k == n) {
            out.push_back(alpha);
            return;
        }
        for (int a = 0; a <= budget; ++a) {
            alpha[k] = a;
            rec(k + 1, budget - a);
        }
        alpha[k] = 0;
    };
    rec(0, dmax);
    std::sort(out.begin(), out.end(), grlex_less);
    return out;
}

ExponentVec alpha_from_spec(int n, int i, const MVec& e) {
    ExponentVec alpha(n, 0);
    if (i < n) {
        const int ei = e[i - 1];
        alpha[n - 1] = -ei - 1;
        for (int k = 1; k < n; ++k)
            if (k != i) alpha[k - 1] = e[k - 1] - ei - 1;
    } else {
        for (int k = 1; k < n; ++k) alpha[k - 1] = e[k - 1] - 1;
    }
    return alpha;
}

}  // namespace

std::vector<RootVectorEntry> enumerate_root_vectors(int n, int dmax) {
    if (n < 2 || n > 8) throw std::invalid_argument("enumerate_root_vectors: n must be in 2..8");
    if (dmax < 0 || dmax > 12)
        throw std::invalid_argument("enumerate_root_vectors: dmax must be in 0..12");
    std::vector<RootVectorEntry> out;
    std::vector<ExponentVec> all = exponents_up_to(n, dmax);
    for (int i = 1; i <= n; ++i) {
        for (const ExponentVec& alpha : all) {
            if (alpha[i - 1] != 0) continue;
            CharClass root = root_character(i, alpha);
            MVec mvec = char_to_mvec(root);
            out.push_back({i, alpha, std::move(root), std::move(mvec)});
        }
    }
    return out;
}

CharClass root_character(int i, const ExponentVec& alpha) {
    if (i < 1 || i > static_cast<int>(alpha.size()))
        throw std::invalid_argument("root_character: index out of range");
    if (alpha[i - 1] != 0)
        throw std::invalid_argument("root_character: alpha_i must be 0");
    std::vector<int> beta(alpha.begin(), alpha.end());
    beta[i - 1] -= 1;
    return normalize_char(beta);
}

bool is_root_character(const std::vector<int>& beta) {
    if (beta.empty()) throw std::invalid_argument("is_root_character: empty input");
    const int mn = *std::min_element(beta.begin(), beta.end());
    return std::count(beta.begin(), beta.end(), mn) == 1;
}

CrossValidateReport cross_validate(int n, int dmax, int ebox) {
    if (ebox < 0 || ebox > 6) throw std::invalid_argument("cross_validate: ebox must be in 0..6");
    CrossValidateReport rep;
    rep.n = n;
    rep.dmax = dmax;
    rep.ebox = ebox;

    std::vector<RootVectorEntry> entries = enumerate_root_vectors(n, dmax);
    rep.entries = static_cast<int>(entries.size());

    // Lookup from (i, alpha) to entry position, and character uniqueness (c).
    std::map<std::pair<int, ExponentVec>, std::size_t> by_key;
    std::map<CharClass, std::size_t> by_char;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const RootVectorEntry& en = entries[k];
        by_key.emplace(std::make_pair(en.i, en.alpha), k);
        auto [it, fresh] = by_char.emplace(en.root, k);
        if (!fresh)
            rep.violations.push_back("character " + to_string(en.root) +
                                     " shared by entries " + std::to_string(it->second) +
                                     " and " + std::to_string(k));
    }

    // Entry invariants: re-certify each derivation through root_check.
    for (const RootVectorEntry& en : entries) {
        if (en.alpha[en.i - 1] != 0) {
            rep.violations.push_back("entry (i=" + std::to_string(en.i) + ", alpha=" +
                                     to_string_mvec(en.alpha) + "): alpha_i != 0");
            continue;
        }
        Derivation d = Derivation::monomial(n, Rat(1), en.i, en.alpha);
        RootCheckResult rc = root_check(d, default_cap(d));
        if (!rc.is_root() || rc.root != en.mvec || rc.index != en.i || rc.alpha != en.alpha)
            rep.violations.push_back("entry (i=" + std::to_string(en.i) + ", alpha=" +
                                     to_string_mvec(en.alpha) + ") fails root_check");
        if (mvec_to_char(en.mvec) != en.root)
            rep.violations.push_back("entry (i=" + std::to_string(en.i) + ", alpha=" +
                                     to_string_mvec(en.alpha) + "): mvec/root mismatch");
    }

    // (a) every admissible spec in the box lands on an entry with root e.
    MVec e(n - 1, -ebox);
    std::function<void(int)> scan = [&](int k) {
        if (k < n - 1) {
            for (e[k] = -ebox; e[k] <= ebox; ++e[k]) scan(k + 1);
            return;
        }
        for (int i = 1; i <= n; ++i) {
            if (!ahmodel::admissible(n, i, e)) continue;
            ++rep.specs_checked;
            ahmodel::ADDerivationSpec spec{Rat(1), i, e};
            Derivation d = ahmodel::translate_spec(spec);
            const auto& [alpha, lambda] = *d.image(i).terms().begin();
            if (total_degree(alpha) > dmax) continue;  // outside the enumerated range
            auto it = by_key.find(std::make_pair(i, alpha));
            if (it == by_key.end()) {
                rep.violations.push_back("spec " + to_string(spec) + " has no enumerated entry");
            } else if (entries[it->second].mvec != e) {
                rep.violations.push_back("spec " + to_string(spec) + " root mismatch: entry has " +
                                         to_string_mvec(entries[it->second].mvec));
            }
        }
    };
    scan(0);

    // (b) every entry reachable from the box arises from exactly one
    // admissible spec.
    for (const RootVectorEntry& en : entries) {
        MVec e0 = ahmodel::spec_degree_from_alpha(n, en.i, en.alpha);
        bool in_box = true;
        for (int ek : e0) in_box = in_box && std::abs(ek) <= ebox;
        if (!in_box) continue;
        if (!ahmodel::admissible(n, en.i, e0)) {
            rep.violations.push_back("entry (i=" + std::to_string(en.i) + ", alpha=" +
                                     to_string_mvec(en.alpha) + "): preimage spec inadmissible");
            continue;
        }
        // Count all admissible (i, e') in the box hitting this entry.
        int hits = 0;
        MVec ep(n - 1, -ebox);
        std::function<void(int)> count = [&](int k) {
            if (k < n - 1) {
                for (ep[k] = -ebox; ep[k] <= ebox; ++ep[k]) count(k + 1);
                return;
            }
            if (ahmodel::admissible(n, en.i, ep) && alpha_from_spec(n, en.i, ep) == en.alpha)
                ++hits;
        };
        count(0);
        if (hits != 1)
            rep.violations.push_back("entry (i=" + std::to_string(en.i) + ", alpha=" +
                                     to_string_mvec(en.alpha) + "): " + std::to_string(hits) +
                                     " admissible specs (expected 1)");
    }

    return rep;
}

OracleReport oracle_search(int n, int dmax, long budget, unsigned seed) {
    if (n < 2 || n > 3) throw std::invalid_argument("oracle_search: n must be 2 or 3");
    if (dmax < 0 || dmax > 4) throw std::invalid_argument("oracle_search: dmax must be in 0..4");
    OracleReport rep;
    rep.n = n;
    rep.dmax = dmax;
    rep.budget = budget;
    rep.seed = seed;

    constexpr int kCap = 16;
    const int ebox = dmax + 1;
    const Rat coeff_pool[6] = {Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(1, 2), Rat(-1, 2)};

    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> e_dist(-ebox, ebox);
    std::uniform_int_distribution<int> gen_dist(1, n);
    std::uniform_int_distribution<int> count_dist(1, 2);
    std::uniform_int_distribution<int> coeff_dist(0, 5);

    // Budget counts materialized candidates; attempts whose sampled degree
    // admits no monomials are retried, with a hard attempt ceiling.
    for (long attempts = 0; rep.tested < budget && attempts < 50 * budget; ++attempts) {
        MVec e(n - 1);
        for (int& ek : e) ek = e_dist(rng);

        std::set<int> gens;
        const int ngens = count_dist(rng);
        while (static_cast<int>(gens.size()) < ngens) gens.insert(gen_dist(rng));

        std::vector<Poly> images(n, Poly::zero(n));
        for (int j : gens) {
            std::vector<ExponentVec> basis =
                monomial_basis(n, mvec_add(generator_degree(n, j), e), dmax);
            if (basis.empty()) continue;
            std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
            const int nterms = count_dist(rng);
            for (int t = 0; t < nterms; ++t)
                images[j - 1].add_term(basis[pick(rng)], coeff_pool[coeff_dist(rng)]);
        }
        Derivation d(n, std::move(images));
        if (d.is_zero()) continue;
        ++rep.tested;

        std::optional<MVec> hom = derivation_homogeneity(d);
        if (!hom) continue;
        LndVerdict v = lnd_check(d, kCap);
        if (!v.proven) continue;
        ++rep.homogeneous_lnd_found;

        // The Theorem demands the normal form lambda * x^alpha * d/dx_i
        // with alpha_i = 0.
        int nonzero = 0, idx = 0;
        for (int j = 1; j <= n; ++j)
            if (!d.image(j).is_zero()) {
                ++nonzero;
                idx = j;
            }
        const bool monomial_form = nonzero == 1 && d.image(idx).term_count() == 1 &&
                                   d.image(idx).terms().begin()->first[idx - 1] == 0;
        if (!monomial_form)
            rep.counterexamples.push_back("candidate " + to_string(d));
    }

    // Every classified derivation in range must pass root_check.
    for (const RootVectorEntry& en : enumerate_root_vectors(n, dmax)) {
        ++rep.theorem_checked;
        Derivation d = Derivation::monomial(n, Rat(1), en.i, en.alpha);
        RootCheckResult rc = root_check(d, kCap);
        if (rc.is_root() && rc.root == en.mvec) ++rep.theorem_passed;
    }

    return rep;
}

}  // namespace classify
}  // namespace cremona
