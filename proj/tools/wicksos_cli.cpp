// Command-line front end. Exit codes:
//   0  success (for `check`: member)
//   1  verification failed
//   2  usage, parse, or schema error
//   3  non-member / refusal, with an exact negative witness
//   4  design pool exhausted at the configured norm bound
//   5  internal error
#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>

#include "wicksos/average.hpp"
#include "wicksos/certify.hpp"
#include "wicksos/expr.hpp"
#include "wicksos/json_io.hpp"
#include "wicksos/reduce.hpp"
#include "wicksos/wick.hpp"

using namespace wicksos;

namespace {

struct Options {
    int n = 1;
    std::string hbar = "1";
    std::string mu = "0";
    unsigned degree_cap = 12;
    long norm_bound = 10;
    std::string out;
    bool json = false;
};

Rat parse_rat_flag(const std::string& s, const char* name) {
    try {
        return Rat::parse(s);
    } catch (const std::exception&) {
        throw CLI::ValidationError(std::string(name) + ": expected an exact rational p/q, got '" + s + "'");
    }
}

Poly parse_input(const std::string& expr, const Options& opt) {
    Poly p = parse_poly(expr, opt.n);
    unsigned deg = std::max(p.max_hol_degree(), p.max_antihol_degree());
    if (deg > opt.degree_cap)
        throw std::invalid_argument("input degree " + std::to_string(deg) +
                                    " exceeds --degree-cap " + std::to_string(opt.degree_cap));
    return p;
}

void emit(const std::string& text, const Options& opt) {
    if (opt.out.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
    } else {
        std::ofstream f(opt.out);
        if (!f) throw std::runtime_error("cannot open output file " + opt.out);
        f << text;
    }
}

std::string witness_text(const std::vector<MultiIndex>& basis,
                         const std::vector<GaussRat>& w, const GaussRat& value) {
    Poly psi(basis.empty() ? 1 : (int)basis[0].size() - 1);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (!w[i].is_zero())
            psi.add_term(basis[i], MultiIndex(basis[i].size(), 0), w[i]);
    return "witness psi = " + poly_str(psi) + "\nexpectation <psi, pi(f) psi> = " + value.str();
}

int cmd_check(const std::string& expr, const Options& opt) {
    Poly f = parse_input(expr, opt);
    Rat hbar = parse_rat_flag(opt.hbar, "--hbar");
    Rat mu = parse_rat_flag(opt.mu, "--mu");
    QuadDecision d = quad_member(f, mu, hbar);
    nlohmann::ordered_json j;
    j["member"] = d.member;
    if (d.vacuous) j["note"] = "vacuous: mu < 0 admits no eigenvectors";
    if (d.generic) j["note"] = "R is all Hermitian invariants (mu not of the form hbar*k)";
    if (d.level) j["level"] = *d.level;
    std::string human;
    if (d.member) {
        human = "member";
        if (d.vacuous) human += " (vacuous: mu < 0 admits no eigenvectors)";
        if (d.generic) human += " (R is all Hermitian invariants: mu is not of the form hbar*k)";
        if (d.level) {
            human += " at eigenvalue level k = " + std::to_string(*d.level);
            bool zero = true;
            for (const auto& [dv, col] : d.psd->factors) zero = false;
            if (zero) human += "; representation matrix is zero";
            j["factors"] = d.psd->factors.size();
        }
    } else {
        human = "non-member at eigenvalue level k = " + std::to_string(*d.level) + "\n" +
                witness_text(d.basis, d.psd->witness, d.psd->witness_value);
        nlohmann::ordered_json w = nlohmann::ordered_json::array();
        for (const auto& e : d.psd->witness) w.push_back(e.str());
        j["witness"] = std::move(w);
        j["value"] = d.psd->witness_value.str();
    }
    emit(opt.json ? j.dump(2) + "\n" : human + "\n", opt);
    return d.member ? 0 : 3;
}

int cmd_certify(const std::string& expr, bool minus_one, const Options& opt) {
    Rat hbar = parse_rat_flag(opt.hbar, "--hbar");
    Rat mu = parse_rat_flag(opt.mu, "--mu");
    if (minus_one) {
        Certificate c = certify_minus_one(opt.n, hbar, mu, opt.norm_bound);
        emit(certificate_to_json(c), opt);
        return 0;
    }
    Poly f = parse_input(expr, opt);
    CertifyOutcome out = certify_positive(f, hbar, mu, opt.norm_bound);
    if (std::holds_alternative<Refusal>(out)) {
        const Refusal& r = std::get<Refusal>(out);
        std::cerr << "refused: not in the quadratic module at level k = " << r.level << "\n"
                  << witness_text(r.basis, r.witness, r.value) << "\n";
        return 3;
    }
    emit(certificate_to_json(std::get<Certificate>(out)), opt);
    return 0;
}

int cmd_verify(const std::string& path) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    std::string text((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    Certificate c = certificate_from_json(text);
    VerifyResult r = verify(c);
    if (r.ok) {
        std::cout << "certificate verifies: target = " << poly_str(c.target) << "\n";
        return 0;
    }
    std::cerr << "verification failed: " << r.message << "\n";
    return 1;
}

int cmd_design(unsigned m, const Options& opt) {
    Design d = design_find(opt.n, m, opt.norm_bound);
    emit(design_to_json(d), opt);
    return 0;
}

int cmd_reduce(const std::string& expr, unsigned level, bool psi, const Options& opt) {
    Poly f = parse_input(expr, opt);
    Rat hbar = parse_rat_flag(opt.hbar, "--hbar");
    if (psi) {
        CpnPoly c = psi_map(f, hbar);
        nlohmann::ordered_json j;
        j["degree"] = c.d;
        j["rep"] = poly_str(c.rep);
        emit(opt.json ? j.dump(2) + "\n"
                      : "class degree " + std::to_string(c.d) + "\nrep = " + poly_str(c.rep) + "\n",
             opt);
        return 0;
    }
    NormalForm nf = normal_form_at_level(f, level, hbar);
    bool match = pi_matrix(f, level, hbar).op == pi_matrix(nf.g, level, hbar).op;
    nlohmann::ordered_json j;
    j["g"] = poly_str(nf.g);
    j["ideal_h"] = poly_str(nf.ideal_h);
    j["supp_terms"] = nf.supp.size();
    j["matrix_equal"] = match;
    std::string human = "normal form at level k = " + std::to_string(level) + ":\n  g = " +
                        poly_str(nf.g) + "\n  ideal witness h = " + poly_str(nf.ideal_h) +
                        "\n  generator terms above level: " + std::to_string(nf.supp.size()) +
                        "\n  representation matrices of f and g at level k agree: " +
                        (match ? "yes" : "NO") + "\n";
    emit(opt.json ? j.dump(2) + "\n" : human, opt);
    return match ? 0 : 5;
}

int cmd_classify(const Options& opt) {
    Rat hbar = parse_rat_flag(opt.hbar, "--hbar");
    HbarClass c = exceptional_hbar(hbar, opt.n);
    nlohmann::ordered_json j;
    j["exceptional"] = c.exceptional;
    std::string human;
    if (c.exceptional) {
        j["k"] = c.k;
        j["reduced_dim"] = c.reduced_dim.str();
        human = "unique nontrivial quadratic module: k = " + std::to_string(c.k) +
                ", reduced dimension d = " + c.reduced_dim.str() + "\n";
    } else {
        human = "all representations trivial\n";
    }
    emit(opt.json ? j.dump(2) + "\n" : human, opt);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Wick star-product algebra, its eigenspace reduction, and "
                 "sums-of-Hermitian-squares certificates"};
    app.require_subcommand(1);

    Options opt;
    std::string expr, expr2, path;
    unsigned m = 0, level = 0;
    bool minus_one = false, psi = false;

    auto add_common = [&](CLI::App* sub, bool needs_mu) {
        sub->add_option("--n", opt.n, "complex dimension parameter (ambient space has 1+n coordinates)")
            ->check(CLI::Range(1, 8));
        sub->add_option("--hbar", opt.hbar, "deformation parameter, exact rational");
        if (needs_mu) sub->add_option("--mu", opt.mu, "momentum value, exact rational");
        sub->add_option("--degree-cap", opt.degree_cap, "maximum accepted input degree");
        sub->add_option("--norm-bound", opt.norm_bound, "design candidate pool norm bound");
        sub->add_option("--out", opt.out, "write output to this file instead of stdout");
        sub->add_flag("--json", opt.json, "structured JSON output");
    };

    auto* star = app.add_subcommand("star", "star product of two expressions");
    star->add_option("f", expr)->required();
    star->add_option("g", expr2)->required();
    add_common(star, false);

    auto* check = app.add_subcommand("check", "membership in the quadratic module of the reduction");
    check->add_option("f", expr)->required();
    add_common(check, true);

    auto* certify = app.add_subcommand("certify", "emit a verified sums-of-squares-plus-ideal certificate");
    certify->add_option("f", expr);
    certify->add_flag("--target-minus-one", minus_one, "certify -1 instead of an input expression");
    add_common(certify, true);

    auto* verifyc = app.add_subcommand("verify", "independently re-verify a certificate file");
    verifyc->add_option("path", path)->required();

    auto* design = app.add_subcommand("design", "find an exact weighted design");
    design->add_option("--m", m, "design strength")->required();
    add_common(design, false);

    auto* reduce = app.add_subcommand("reduce", "normal form at an eigenvalue level, or the projective class");
    reduce->add_option("f", expr)->required();
    reduce->add_option("--level", level, "eigenvalue level k");
    reduce->add_flag("--psi", psi, "compute the projective-space class instead");
    add_common(reduce, false);

    auto* classify = app.add_subcommand("classify", "representation classification for a given hbar");
    add_common(classify, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (star->parsed()) {
            Poly f = parse_input(expr, opt);
            Poly g = parse_input(expr2, opt);
            Poly r = wick_star(f, g, parse_rat_flag(opt.hbar, "--hbar"));
            if (opt.json) {
                nlohmann::ordered_json j;
                j["result"] = poly_str(r);
                emit(j.dump(2) + "\n", opt);
            } else {
                emit(poly_str(r) + "\n", opt);
            }
            return 0;
        }
        if (check->parsed()) return cmd_check(expr, opt);
        if (certify->parsed()) {
            if (!minus_one && expr.empty()) {
                std::cerr << "certify: an expression (or --target-minus-one) is required\n";
                return 2;
            }
            return cmd_certify(expr, minus_one, opt);
        }
        if (verifyc->parsed()) return cmd_verify(path);
        if (design->parsed()) return cmd_design(m, opt);
        if (reduce->parsed()) return cmd_reduce(expr, level, psi, opt);
        if (classify->parsed()) return cmd_classify(opt);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const SchemaError& e) {
        std::cerr << "schema error: " << e.what() << "\n";
        return 2;
    } catch (const DesignNotFound& e) {
        std::cerr << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 5;
    }
    return 2;
}
