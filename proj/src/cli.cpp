#include "cremona/cli.hpp"

#include <cstdlib>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cremona/ahmodel.hpp"
#include "cremona/classify.hpp"
#include "cremona/derivation.hpp"
#include "cremona/parse.hpp"

namespace cremona {
namespace cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::vector<int> parse_int_list(const std::string& src, int expect, const char* what) {
    std::vector<int> out;
    std::stringstream ss(src);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        out.push_back(std::stoi(item, &used));
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw parse_error(std::string(what) + ": bad integer list", used);
    }
    if (expect >= 0 && static_cast<int>(out.size()) != expect)
        throw parse_error(std::string(what) + ": expected " + std::to_string(expect) +
                              " entries, got " + std::to_string(out.size()),
                          0);
    return out;
}

int effective_cap(const Derivation& d, int cap_flag) {
    if (cap_flag > 0) return cap_flag;
    if (const char* env = std::getenv("CREMONA_CAP")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return default_cap(d);
}

struct Ctx {
    std::ostringstream out;
    std::ostringstream err;
    int code = kOk;
};

void cmd_lnd(Ctx& ctx, int n, int cap_flag, const std::string& src) {
    Derivation d = parse_derivation(src, n);
    LndVerdict v = lnd_check(d, effective_cap(d, cap_flag));
    if (v.proven) {
        ctx.out << "proven LND; orders:";
        for (int k : v.orders) ctx.out << " " << k;
        ctx.out << "\n";
    } else {
        ctx.out << "inconclusive: cap " << v.cap << " exhausted on generators:";
        for (int j : v.unresolved) ctx.out << " x" << j;
        ctx.out << "\n";
        ctx.code = kInconclusive;
    }
}

void cmd_homog(Ctx& ctx, int n, const std::string& src, bool degree_only) {
    Derivation d = parse_derivation(src, n);
    if (d.is_zero()) {
        ctx.out << "zero derivation\n";
        ctx.code = kNegative;
        return;
    }
    std::optional<MVec> e = derivation_homogeneity(d);
    if (!e) {
        ctx.out << "not homogeneous\n";
        ctx.code = kNegative;
        return;
    }
    if (degree_only)
        ctx.out << to_string_mvec(*e) << "\n";
    else
        ctx.out << "homogeneous of degree " << to_string_mvec(*e) << "\n";
}

void cmd_root_check(Ctx& ctx, int n, int cap_flag, const std::string& src) {
    Derivation d = parse_derivation(src, n);
    RootCheckResult r = root_check(d, effective_cap(d, cap_flag));
    switch (r.status) {
        case RootCheckResult::Status::IsRoot:
            ctx.out << "root vector; root " << to_string_mvec(r.root) << "; normal form lambda="
                    << rat_to_string(r.lambda) << ", i=" << r.index << ", alpha=("
                    << [&] {
                           std::string s;
                           for (std::size_t k = 0; k < r.alpha.size(); ++k)
                               s += (k ? "," : "") + std::to_string(r.alpha[k]);
                           return s;
                       }()
                    << ")\n";
            break;
        case RootCheckResult::Status::NotHomogeneous:
            ctx.out << "not a root: not homogeneous\n";
            ctx.code = kNegative;
            break;
        case RootCheckResult::Status::NotLndWithinCap:
            ctx.out << "inconclusive: not proven LND within cap " << r.verdict.cap << "\n";
            ctx.code = kInconclusive;
            break;
        case RootCheckResult::Status::ZeroDerivation:
            ctx.out << "not a root: zero derivation\n";
            ctx.code = kNegative;
            break;
    }
}

void cmd_exp(Ctx& ctx, int n, int cap_flag, const std::string& t_src, const std::string& src) {
    Derivation d = parse_derivation(src, n);
    Rat t = parse_rat(t_src);
    LndVerdict v = lnd_check(d, effective_cap(d, cap_flag));
    if (!v.proven) {
        ctx.out << "inconclusive: not proven LND within cap " << v.cap << "\n";
        ctx.code = kInconclusive;
        return;
    }
    Automorphism a = exp(d, t, v);
    for (int j = 0; j < n; ++j) ctx.out << (j ? ", " : "") << to_string(a.images[j]);
    ctx.out << "\n";
}

void cmd_jac(Ctx& ctx, int n, const std::string& src) {
    Derivation d = parse_derivation(src, n);  // reuse the n-image list parser
    Automorphism a{n, d.images()};
    std::vector<std::vector<Poly>> jac(n, std::vector<Poly>(n, Poly::zero(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) jac[i][j] = partial(a.images[j], i + 1);
    Poly dt = det(jac);
    ctx.out << "jacobian determinant: " << to_string(dt) << "\n";
    if (dt != Poly::constant(n, 1)) ctx.code = kNegative;
}

void cmd_roots(Ctx& ctx, int n, int dmax, bool as_json) {
    std::vector<classify::RootVectorEntry> entries = classify::enumerate_root_vectors(n, dmax);
    if (as_json) {
        json doc;
        doc["n"] = n;
        doc["max_deg"] = dmax;
        doc["roots"] = json::array();
        for (const auto& en : entries) {
            json item;
            item["i"] = en.i;
            item["alpha"] = en.alpha;
            item["character"] = en.root.beta();
            item["mvec"] = en.mvec;
            doc["roots"].push_back(std::move(item));
        }
        ctx.out << doc.dump() << "\n";
        return;
    }
    ctx.out << entries.size() << " root vectors (n=" << n << ", max_deg=" << dmax << ")\n";
    for (const auto& en : entries) {
        Derivation d = Derivation::monomial(n, Rat(1), en.i, en.alpha);
        ctx.out << to_string(d.image(en.i)) << " d/dx" << en.i << "  character "
                << to_string(en.root) << "  mvec " << to_string_mvec(en.mvec) << "\n";
    }
}

void cmd_char(Ctx& ctx, int n, const std::string& beta_src) {
    std::vector<int> beta = parse_int_list(beta_src, n, "--beta");
    CharClass c = normalize_char(beta);
    if (classify::is_root_character(beta)) {
        ctx.out << "root; class " << to_string(c) << "\n";
    } else {
        ctx.out << "not a root; class " << to_string(c) << "\n";
        ctx.code = kNegative;
    }
}

void cmd_verify(Ctx& ctx, int n, int dmax, int ebox, long budget, unsigned seed, bool as_json) {
    classify::CrossValidateReport cv = classify::cross_validate(n, dmax, ebox);
    bool have_oracle = n <= 3;
    classify::OracleReport oc;
    if (have_oracle) oc = classify::oracle_search(n, std::min(dmax, 4), budget, seed);

    std::vector<std::string> violations = cv.violations;
    if (have_oracle) {
        for (const std::string& v : oc.counterexamples) violations.push_back(v);
        if (oc.theorem_passed != oc.theorem_checked)
            violations.push_back("theorem-listed derivations failing root_check: " +
                                 std::to_string(oc.theorem_checked - oc.theorem_passed));
    }
    const bool pass = violations.empty();

    if (as_json) {
        json doc;
        doc["tested"] = have_oracle ? oc.tested : 0;
        doc["violations"] = violations;
        doc["pass"] = pass;
        ctx.out << doc.dump() << "\n";
    } else {
        ctx.out << "cross-validate: " << cv.entries << " entries, " << cv.specs_checked
                << " admissible specs";
        ctx.out << (cv.pass() ? "; pass" : "; FAIL") << "\n";
        if (have_oracle)
            ctx.out << "oracle: " << oc.tested << " candidates tested, "
                    << oc.homogeneous_lnd_found << " homogeneous proven LNDs, "
                    << oc.counterexamples.size() << " counterexamples; theorem "
                    << oc.theorem_passed << "/" << oc.theorem_checked << "\n";
        for (const std::string& v : violations) ctx.out << "violation: " << v << "\n";
        ctx.out << (pass ? "PASS" : "FAIL") << "\n";
    }
    if (!pass) ctx.code = kNegative;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
    Ctx ctx;

    CLI::App app{"root vectors of the volume-preserving automorphism group "
                 "with respect to the diagonal torus"};
    app.require_subcommand(1);

    int n = 0, cap = 0, dmax = 0, ebox = 5, idx = 0, r_exp = 0;
    long budget = 10000;
    unsigned seed = 1;
    bool as_json = false;
    std::string deriv_src, t_src = "1", beta_src, m_src, e_src, lambda_src = "1";

    auto add_n = [&](CLI::App* cmd) {
        cmd->add_option("--n", n, "ambient dimension (2..8)")->required()
            ->check(CLI::Range(2, 8));
    };

    CLI::App* lnd = app.add_subcommand("lnd", "certify local nilpotency");
    add_n(lnd);
    lnd->add_option("--cap", cap, "iteration cap");
    lnd->add_option("derivation", deriv_src, "derivation expression")->required();

    CLI::App* homog = app.add_subcommand("homog", "test homogeneity");
    add_n(homog);
    homog->add_option("derivation", deriv_src, "derivation expression")->required();

    CLI::App* degree = app.add_subcommand("degree", "degree of a homogeneous derivation");
    add_n(degree);
    degree->add_option("derivation", deriv_src, "derivation expression")->required();

    CLI::App* rootc = app.add_subcommand("root-check", "decide the root-vector property");
    add_n(rootc);
    rootc->add_option("--cap", cap, "iteration cap");
    rootc->add_option("derivation", deriv_src, "derivation expression")->required();

    CLI::App* expc = app.add_subcommand("exp", "exponentiate a proven LND");
    add_n(expc);
    expc->add_option("--cap", cap, "iteration cap");
    expc->add_option("--t", t_src, "parameter t (rational)")->required();
    expc->add_option("derivation", deriv_src, "derivation expression")->required();

    CLI::App* jac = app.add_subcommand("jac", "Jacobian determinant of a coordinate map");
    add_n(jac);
    jac->add_option("images", deriv_src, "comma-separated coordinate images")->required();

    CLI::App* roots = app.add_subcommand("roots", "enumerate root vectors");
    add_n(roots);
    roots->add_option("--max-deg", dmax, "degree bound")->required()->check(CLI::Range(0, 12));
    roots->add_flag("--json", as_json, "machine-readable output");

    CLI::App* chr = app.add_subcommand("char", "test whether a character is a root");
    add_n(chr);
    chr->add_option("--beta", beta_src, "character exponents b1,...,bn")->required();

    CLI::App* ah = app.add_subcommand("ah", "polyhedral-divisor model");
    ah->require_subcommand(1);
    CLI::App* ah_eval = ah->add_subcommand("eval", "evaluate the divisor at m");
    add_n(ah_eval);
    ah_eval->add_option("--m", m_src, "lattice point m1,...,m_{n-1}")->required();
    CLI::App* ah_member = ah->add_subcommand("member", "membership of t^r chi^m");
    add_n(ah_member);
    ah_member->add_option("--r", r_exp, "power of t")->required();
    ah_member->add_option("--m", m_src, "lattice point m1,...,m_{n-1}")->required();
    CLI::App* ah_translate = ah->add_subcommand("translate", "spec to monomial derivation");
    add_n(ah_translate);
    ah_translate->add_option("--i", idx, "vertex index")->required();
    ah_translate->add_option("--e", e_src, "degree e1,...,e_{n-1}")->required();
    ah_translate->add_option("--lambda", lambda_src, "scalar lambda");
    CLI::App* ah_adm = ah->add_subcommand("admissible", "local-nilpotency condition on (i, e)");
    add_n(ah_adm);
    ah_adm->add_option("--i", idx, "vertex index")->required();
    ah_adm->add_option("--e", e_src, "degree e1,...,e_{n-1}")->required();

    CLI::App* verify = app.add_subcommand("verify", "cross-validate and oracle-search");
    add_n(verify);
    verify->add_option("--max-deg", dmax, "degree bound")->required()->check(CLI::Range(0, 12));
    verify->add_option("--ebox", ebox, "degree box radius")->check(CLI::Range(0, 6));
    verify->add_option("--budget", budget, "oracle candidate budget");
    verify->add_option("--seed", seed, "oracle seed");
    verify->add_flag("--json", as_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("cremona");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (lnd->parsed()) cmd_lnd(ctx, n, cap, deriv_src);
        else if (homog->parsed()) cmd_homog(ctx, n, deriv_src, false);
        else if (degree->parsed()) cmd_homog(ctx, n, deriv_src, true);
        else if (rootc->parsed()) cmd_root_check(ctx, n, cap, deriv_src);
        else if (expc->parsed()) cmd_exp(ctx, n, cap, t_src, deriv_src);
        else if (jac->parsed()) cmd_jac(ctx, n, deriv_src);
        else if (roots->parsed()) cmd_roots(ctx, n, dmax, as_json);
        else if (chr->parsed()) cmd_char(ctx, n, beta_src);
        else if (ah_eval->parsed()) {
            MVec m = parse_int_list(m_src, n - 1, "--m");
            ctx.out << ahmodel::dd_eval(m) << "\n";
        } else if (ah_member->parsed()) {
            MVec m = parse_int_list(m_src, n - 1, "--m");
            if (ahmodel::membership(r_exp, m)) {
                ctx.out << "member\n";
            } else {
                ctx.out << "not a member\n";
                ctx.code = kNegative;
            }
        } else if (ah_translate->parsed()) {
            MVec e = parse_int_list(e_src, n - 1, "--e");
            ahmodel::ADDerivationSpec spec{parse_rat(lambda_src), idx, e};
            if (!ahmodel::admissible(n, idx, e)) {
                ctx.out << "inadmissible\n";
                ctx.code = kNegative;
            } else {
                ctx.out << to_string(ahmodel::translate_spec(spec)) << "\n";
            }
        } else if (ah_adm->parsed()) {
            MVec e = parse_int_list(e_src, n - 1, "--e");
            if (ahmodel::admissible(n, idx, e)) {
                ctx.out << "admissible\n";
            } else {
                ctx.out << "inadmissible\n";
                ctx.code = kNegative;
            }
        } else if (verify->parsed()) {
            cmd_verify(ctx, n, dmax, ebox, budget, seed, as_json);
        }
    } catch (const CLI::CallForHelp& e) {
        ctx.out << app.help();
    } catch (const CLI::ParseError& e) {
        ctx.err << e.what() << "\n";
        ctx.code = kUsage;
    } catch (const parse_error& e) {
        ctx.err << "parse error: " << e.what() << "\n";
        ctx.code = kUsage;
    } catch (const std::exception& e) {
        ctx.err << "error: " << e.what() << "\n";
        ctx.code = kUsage;
    }

    return {ctx.code, ctx.out.str(), ctx.err.str()};
}

}  // namespace cli
}  // namespace cremona
