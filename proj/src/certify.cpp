#include "wicksos/certify.hpp"

#include <map>
#include <stdexcept>

#include "wicksos/expr.hpp"
#include "wicksos/wick.hpp"

namespace wicksos {

namespace {

Poly jminusmu(int n, const Rat& mu) {
    return momentum_map(n) - Poly::constant(n, GaussRat(mu));
}

Poly star_square(const Poly& g, const Rat& hbar) {
    return wick_star(g.conj(), g, hbar);
}

/// Accumulates atoms (merging equal polynomials) and the ideal witness while
/// building a certificate bottom-up.
struct Builder {
    int n;
    Rat hbar;
    Rat mu;
    std::map<std::string, SosAtom> atoms;
    Poly witness;

    Builder(int n_, Rat hbar_, Rat mu_) : n(n_), hbar(std::move(hbar_)), mu(std::move(mu_)), witness(n_) {}

    void add_atom(const Rat& lambda, const Poly& g) {
        if (lambda.is_zero() || g.is_zero()) return;
        if (!(lambda > Rat(0)))
            throw std::logic_error("certificate assembly: nonpositive weight");
        std::string key = poly_str(g);
        auto it = atoms.find(key);
        if (it == atoms.end())
            atoms.emplace(std::move(key), SosAtom{lambda, g});
        else {
            it->second.lambda += lambda;
        }
    }

    void add_witness(const Poly& h) { witness += h; }

    /// Absorb scale * (a^* . c . a) for a certified piece c: atoms conjugate
    /// to g*a, the witness conjugates inside the ideal (J is central).
    void add_conjugated(const Certificate& c, const Poly& a, const Rat& scale) {
        for (const auto& atom : c.sos)
            add_atom(scale * atom.lambda, wick_star(atom.g, a, hbar));
        if (!c.witness_h.is_zero()) {
            Poly conj_w = wick_star(wick_star(a.conj(), c.witness_h, hbar), a, hbar);
            add_witness(GaussRat(scale) * conj_w);
        }
    }

    void add_scaled(const Certificate& c, const Rat& scale) {
        for (const auto& atom : c.sos) add_atom(scale * atom.lambda, atom.g);
        add_witness(GaussRat(scale) * c.witness_h);
    }

    Certificate finish(Poly target, int meta_k, std::string design_ref) {
        Certificate c(n);
        c.hbar = hbar;
        c.mu = mu;
        c.target = std::move(target);
        for (auto& [key, atom] : atoms) c.sos.push_back(std::move(atom));
        c.witness_h = witness;
        c.meta_k = meta_k;
        c.design_ref = std::move(design_ref);
        auto res = verify(c);
        if (!res.ok)
            throw std::logic_error("internal certificate failed verification: " + res.message);
        c.verified = true;
        return c;
    }
};

std::string design_ref_str(const char* kind, int n, unsigned m, std::size_t atoms) {
    return std::string(kind) + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
           " atoms=" + std::to_string(atoms);
}

/// Witness h with omega(f)*1 - average(f) = (J - mu) * h, assembled from
/// the per-level reductions of J^s against the momentum constraint.
Poly invariant_state_witness(const Poly& f, const Rat& hbar, const Rat& mu) {
    int n = f.n();
    Poly h(n);
    for (unsigned s = 0; s <= f.top_level(); ++s) {
        Poly fs = f.level(s);
        if (fs.is_zero()) continue;
        GaussRat gamma = omega_k(fs);
        if (gamma.is_zero()) continue;
        auto [reduced, hs] = falling_reduce(s, Poly::constant(n, GaussRat(1)), mu, hbar);
        // J^s - hbar^s falling(mu/hbar, s) = (J - mu) * hs
        h -= gamma * hs;
    }
    return h;
}

struct GeneratorCache {
    std::map<std::string, Certificate> memo;
};

Certificate holo_square_impl(const HoloPoly& f, const Rat& hbar, long norm_bound);

/// Certificate for -z^M zbar^M at mu = hbar(|M|-1), via the multinomial
/// complement of J^{|M|} inside the level.
Certificate neg_monomial_square(int n, const MultiIndex& M, const Rat& hbar,
                                long norm_bound, GeneratorCache& cache) {
    unsigned kk = mi_abs(M);  // = k+1 in the reduction at level k
    Rat mu = hbar * Rat((long)kk - 1);
    Builder b(n, hbar, mu);
    Rat front = mi_factorial(M) / factorial(kk);
    for (const auto& N : multiindices((std::size_t)n + 1, kk)) {
        if (N == M) continue;
        Certificate cn = holo_square_impl(HoloPoly::monomial(n, N), hbar, norm_bound);
        b.add_scaled(cn, front * (factorial(kk) / mi_factorial(N)));
    }
    // J^{kk} = (J - mu) * J^{kk-1} exactly
    b.add_witness(GaussRat(-front) * momentum_power(n, kk - 1));
    Poly target = Poly::monomial(n, M, M, GaussRat(-1));
    return b.finish(target, (int)kk - 1, design_ref_str("single", n, kk, 0));
}

Certificate holo_square_impl(const HoloPoly& f, const Rat& hbar, long norm_bound) {
    if (!(hbar > Rat(0)))
        throw std::invalid_argument("sos_holomorphic_square: hbar must be > 0");
    int n = f.n();
    unsigned k = f.poly().max_hol_degree();
    if (!f.is_zero() && f.poly().grade(k, 0) != f.poly())
        throw std::invalid_argument("sos_holomorphic_square: f not homogeneous");
    if (k == 0) {
        // nothing to prove: |f(0)|^2 as a plain square of a constant
        Certificate c(n);
        c.hbar = hbar;
        c.mu = Rat(0);
        c.target = f.poly() * f.poly().conj();
        if (!f.is_zero()) {
            GaussRat v = f.poly().coeff(MultiIndex((std::size_t)n + 1, 0),
                                        MultiIndex((std::size_t)n + 1, 0));
            c.sos.push_back(SosAtom{v.norm2(), Poly::constant(n, GaussRat(1))});
        }
        auto res = verify(c);
        if (!res.ok) throw std::logic_error("trivial square certificate failed: " + res.message);
        c.verified = true;
        return c;
    }
    Rat mu = hbar * Rat((long)k - 1);
    Design d = design_find(n, k, norm_bound);
    Builder b(n, hbar, mu);

    // weights of the averaged square of the degree-k coordinate power
    std::vector<Rat> w(k + 1);
    Rat tau(0);
    for (unsigned t = 0; t <= k; ++t) {
        w[t] = pow(hbar, t) * factorial(k) * factorial(k) * factorial((unsigned)n) /
               (factorial(t) * factorial(k - t) * factorial(k - t + (unsigned)n));
        tau += w[t] * pow(hbar, k - t) * falling(Rat(-1), k - t);
    }
    Rat tau_closed = pow(hbar, k) * factorial(k) * Rat((long)n) / Rat((long)(k + (unsigned)n));
    if (tau != tau_closed)
        throw std::logic_error("sos_holomorphic_square: scalar chain mismatch");

    Poly fbar = f.poly().conj();
    for (const auto& atom : d.atoms) {
        Poly lin(n);
        for (std::size_t j = 0; j < atom.v.size(); ++j)
            lin += atom.v[j] * Poly::variable(n, j);
        Poly g = lin.pow_ptwise(k) * fbar;
        b.add_atom(atom.lambda / (pow(Rat(atom.norm), k) * tau), g);
    }
    Poly ffbar = f.poly() * fbar;
    for (unsigned t = 0; t <= k; ++t) {
        auto [reduced, ht] = falling_reduce(k - t, ffbar, mu, hbar);
        b.add_witness(GaussRat(-(w[t] / tau)) * ht);
    }
    return b.finish(ffbar, (int)k - 1,
                    design_ref_str("single", n, k, d.atoms.size()));
}

Certificate supp_generator_impl(int n, const MultiIndex& K, const MultiIndex& L,
                                int m, const Rat& hbar, long norm_bound,
                                GeneratorCache& cache) {
    unsigned kk = mi_abs(K);
    if (kk == 0 || mi_abs(L) != kk)
        throw std::invalid_argument("sos_supp_generator: need |K| = |L| >= 1");
    m = ((m % 4) + 4) % 4;
    Rat mu = hbar * Rat((long)kk - 1);
    GaussRat im = GaussRat::i_pow(m);
    GaussRat imc = GaussRat::i_pow(-m);
    Poly target = Poly::monomial(n, K, L, im) + Poly::monomial(n, L, K, imc);

    if (K == L) {
        if (m % 2 == 1) {  // i^m + i^{-m} = 0: the zero target
            Certificate c(n);
            c.hbar = hbar;
            c.mu = mu;
            c.target = Poly(n);
            c.meta_k = (int)kk - 1;
            auto res = verify(c);
            if (!res.ok) throw std::logic_error("empty certificate failed: " + res.message);
            c.verified = true;
            return c;
        }
        Builder b(n, hbar, mu);
        if (m == 0) {
            b.add_scaled(holo_square_impl(HoloPoly::monomial(n, K), hbar, norm_bound), Rat(2));
        } else {
            b.add_scaled(neg_monomial_square(n, K, hbar, norm_bound, cache), Rat(2));
        }
        return b.finish(target, (int)kk - 1, design_ref_str("single", n, kk, 0));
    }

    // polarization: target = f conj(f) - z^K zbar^K - z^L zbar^L with
    // f = z^K + i^{-m} z^L
    Builder b(n, hbar, mu);
    Poly fpoly = Poly::monomial(n, K, MultiIndex(K.size(), 0), GaussRat(1)) +
                 Poly::monomial(n, L, MultiIndex(L.size(), 0), imc);
    b.add_scaled(holo_square_impl(HoloPoly(fpoly), hbar, norm_bound), Rat(1));
    b.add_scaled(neg_monomial_square(n, K, hbar, norm_bound, cache), Rat(1));
    b.add_scaled(neg_monomial_square(n, L, hbar, norm_bound, cache), Rat(1));
    return b.finish(target, (int)kk - 1, design_ref_str("single", n, kk, 0));
}

std::string mi_str(const MultiIndex& k) {
    std::string s = "(";
    for (std::size_t j = 0; j < k.size(); ++j) {
        if (j) s += ",";
        s += std::to_string(k[j]);
    }
    return s + ")";
}

}  // namespace

VerifyResult verify(const Certificate& c) {
    if (c.n < 1) return {false, "dimension must be >= 1"};
    for (const auto& atom : c.sos) {
        if (!(atom.lambda > Rat(0))) return {false, "nonpositive sos weight"};
        if (atom.g.n() != c.n) return {false, "sos atom dimension mismatch"};
        if (!atom.g.is_invariant()) return {false, "sos atom not invariant"};
    }
    if (c.witness_h.n() != c.n) return {false, "witness dimension mismatch"};
    if (!c.witness_h.is_invariant()) return {false, "ideal witness not invariant"};
    if (!c.witness_h.is_hermitian()) return {false, "ideal witness not Hermitian"};
    Poly rhs(c.n);
    for (const auto& atom : c.sos)
        rhs += GaussRat(atom.lambda) * star_square(atom.g, c.hbar);
    rhs += wick_star(jminusmu(c.n, c.mu), c.witness_h, c.hbar);
    if (rhs != c.target) return {false, "identity mismatch: sum does not reproduce target"};
    return {true, "ok"};
}

Certificate certify_minus_one(int n, const Rat& hbar, const Rat& mu, long norm_bound) {
    if (n < 1) throw std::invalid_argument("certify_minus_one: n must be >= 1");
    if (!(hbar > Rat(0)))
        throw std::invalid_argument("certify_minus_one: hbar must be > 0");
    Rat x = mu / hbar;
    if (x.is_integer() && x >= Rat(0))
        throw std::invalid_argument("certify_minus_one: mu = hbar k is excluded");
    if (x.is_integer() && x <= Rat(-(long)n - 1))
        throw std::invalid_argument("certify_minus_one: mu = -hbar(1+n+k) is excluded");

    // exponent choice from the sign analysis of the falling factorials
    unsigned k;
    if (mu > Rat(0)) {
        k = (unsigned)(x.floor().get_si() + 2);  // smallest k with x - (k-1) < 0
    } else {
        long cand = (-x - Rat((long)n)).floor().get_si() + 1;  // smallest k with x + n + k > 0
        k = (unsigned)std::max(1L, cand);
    }

    MultiIndex K0((std::size_t)n + 1, 0), K1((std::size_t)n + 1, 0);
    K0[0] = k;
    K1[1] = k;
    Poly f = Poly::monomial(n, K0, K1, GaussRat(1));  // z_0^k zbar_1^k
    Poly F = wick_star(f.conj(), f, hbar);

    GaussRat alpha_g = -omega_hbar_mu(F, hbar, mu);
    if (!alpha_g.is_real() || !(alpha_g.re() > Rat(0)))
        throw std::logic_error("certify_minus_one: functional value not negative");
    Rat alpha = alpha_g.re();

    PairDesign d = pair_design_find(n, k, norm_bound);

    Builder b(n, hbar, mu);
    for (const auto& atom : d.atoms) {
        Poly lv(n), lw(n);
        for (std::size_t j = 0; j < atom.v.size(); ++j) {
            lv += atom.v[j] * Poly::variable(n, j);
            lw += atom.w[j] * Poly::variable(n, j);
        }
        Poly g = lv.pow_ptwise(k) * lw.conj().pow_ptwise(k);
        Rat scale = atom.lambda /
                    (pow(Rat(atom.norm_v), k) * pow(Rat(atom.norm_w), k) * alpha);
        b.add_atom(scale, g);
    }
    Poly h = invariant_state_witness(F, hbar, mu);
    b.add_witness(GaussRat(Rat(1) / alpha) * h);

    Certificate c = b.finish(Poly::constant(n, GaussRat(-1)), (int)k,
                             design_ref_str("pair", n, k, d.atoms.size()));
    c.meta_alpha = alpha;
    return c;
}

Certificate sos_holomorphic_square(const HoloPoly& f, const Rat& hbar, long norm_bound) {
    return holo_square_impl(f, hbar, norm_bound);
}

Certificate sos_supp_generator(int n, const MultiIndex& K, const MultiIndex& L,
                               int m, const Rat& hbar, long norm_bound) {
    GeneratorCache cache;
    return supp_generator_impl(n, K, L, m, hbar, norm_bound, cache);
}

CertifyOutcome certify_positive(const Poly& f, const Rat& hbar, const Rat& mu,
                                long norm_bound) {
    int n = f.n();
    if (!(hbar > Rat(0)))
        throw std::invalid_argument("certify_positive: hbar must be > 0");
    if (mu < Rat(0)) throw std::invalid_argument("certify_positive: mu must be >= 0");
    if (!f.is_invariant() || !f.is_hermitian())
        throw std::invalid_argument("certify_positive: f must be invariant Hermitian");

    QuadDecision qd = quad_member(f, mu, hbar);
    if (!qd.member) {
        Refusal r;
        r.level = *qd.level;
        r.basis = qd.basis;
        r.witness = qd.psd->witness;
        r.value = qd.psd->witness_value;
        return r;
    }

    Rat x = mu / hbar;
    if (!x.is_integer()) {
        // generic momentum: everything is certified through the -1 certificate
        // via 4 f = (f+1)^* (f+1) - (f-1)^* (f-1)
        Certificate m1 = certify_minus_one(n, hbar, mu, norm_bound);
        Builder b(n, hbar, mu);
        Poly one = Poly::constant(n, GaussRat(1));
        b.add_atom(Rat(1, 4), f + one);
        b.add_conjugated(m1, f - one, Rat(1, 4));
        Certificate c = b.finish(f, -1, m1.design_ref);
        c.meta_alpha = m1.meta_alpha;
        return c;
    }

    unsigned k = (unsigned)x.num().get_ui();
    // exact special cases with canonical short certificates
    Poly one = Poly::constant(n, GaussRat(1));
    if (f.top_level() == 0) {
        GaussRat c0 = f.coeff(MultiIndex((std::size_t)n + 1, 0), MultiIndex((std::size_t)n + 1, 0));
        Builder b(n, hbar, mu);
        if (!c0.is_zero()) b.add_atom(c0.re(), one);
        return b.finish(f, (int)k, "none");
    }
    if (f == jminusmu(n, mu)) {
        Builder b(n, hbar, mu);
        b.add_witness(one);
        return b.finish(f, (int)k, "none");
    }

    Builder b(n, hbar, mu);
    // eigenspace factorization through the exact LDL^* of the weighted form
    const PsdResult& psd = *qd.psd;
    MultiIndex K0((std::size_t)n + 1, 0);
    K0[0] = k;
    Rat w_k0 = pow(hbar, k) * mi_factorial(K0);
    for (const auto& [dvalue, col] : psd.factors) {
        Poly g(n);
        for (std::size_t i = 0; i < qd.basis.size(); ++i) {
            if (col[i].is_zero()) continue;
            Rat wi = pow(hbar, k) * mi_factorial(qd.basis[i]);
            g.add_term(K0, qd.basis[i], col[i].conj() / GaussRat(wi));
        }
        b.add_atom(dvalue / w_k0, g);
    }
    Poly sos_part(n);
    for (const auto& [key, atom] : b.atoms)
        sos_part += GaussRat(atom.lambda) * star_square(atom.g, hbar);
    Poly r = f - sos_part;

    NormalForm nf = normal_form_at_level(r, k, hbar);
    if (!nf.g.is_zero())
        throw std::logic_error("certify_positive: residual has a nonzero reduced part");
    b.add_witness(nf.ideal_h);

    // discharge the part generated by the level-(k+1) monomials:
    // e b + b^* e^* = (1/4)[(b+1)^* E0 (b+1) + (b-1)^* E2 (b-1)
    //                      + (1-ib)^* E1 (1-ib) + (1+ib)^* E3 (1+ib)]
    GeneratorCache cache;
    auto generator = [&](const MultiIndex& M, const MultiIndex& Mp, int m) -> const Certificate& {
        std::string key = mi_str(M) + mi_str(Mp) + ":" + std::to_string(m);
        auto it = cache.memo.find(key);
        if (it == cache.memo.end()) {
            it = cache.memo
                     .emplace(key, supp_generator_impl(n, M, Mp, m, hbar, norm_bound, cache))
                     .first;
        }
        return it->second;
    };
    GaussRat iunit = GaussRat::i();
    for (const auto& [e, bb] : nf.supp) {
        const auto& ekey = e.terms().begin()->first;
        Poly bplus = bb + one, bminus = bb - one;
        Poly ib = iunit * bb;
        b.add_conjugated(generator(ekey.K, ekey.L, 0), bplus, Rat(1, 8));
        b.add_conjugated(generator(ekey.K, ekey.L, 2), bminus, Rat(1, 8));
        b.add_conjugated(generator(ekey.K, ekey.L, 1), one - ib, Rat(1, 8));
        b.add_conjugated(generator(ekey.K, ekey.L, 3), one + ib, Rat(1, 8));
    }
    return b.finish(f, (int)k, "per-generator single designs");
}

Certificate transport_to_negative_hbar(const Certificate& c) {
    if (!(c.hbar > Rat(0)))
        throw std::invalid_argument("transport: source certificate must have hbar > 0");
    Certificate t(c.n);
    t.hbar = -c.hbar;
    t.mu = c.mu + c.hbar * Rat((long)c.n + 1);
    t.target = phi_sign(c.target, c.hbar);
    for (const auto& atom : c.sos)
        t.sos.push_back(SosAtom{atom.lambda, phi_sign(atom.g, c.hbar)});
    t.witness_h = phi_sign(c.witness_h, c.hbar);
    t.meta_k = c.meta_k;
    t.design_ref = c.design_ref + " (transported)";
    auto res = verify(t);
    if (!res.ok)
        throw std::logic_error("transported certificate failed verification: " + res.message);
    t.verified = true;
    return t;
}

}  // namespace wicksos
