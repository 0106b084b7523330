#include "wicksos/wick.hpp"

#include <stdexcept>

namespace wicksos {

namespace {

Rat site_coef(unsigned aj, unsigned bj, unsigned tj) {
    return falling(Rat((long)aj), tj) * falling(Rat((long)bj), tj) / factorial(tj);
}

/// Enumerate contraction multi-indices T with T_j <= min(a_j, b_j), calling
/// fn(T, |T|, prod_j falling(a_j,T_j) falling(b_j,T_j) / T_j!).
template <typename F>
void contractions_rec(const MultiIndex& a, const MultiIndex& b, MultiIndex& t,
                      std::size_t pos, const Rat& coef, F&& fn) {
    if (pos == a.size()) {
        fn(t, mi_abs(t), coef);
        return;
    }
    unsigned cap = std::min(a[pos], b[pos]);
    for (unsigned e = 0; e <= cap; ++e) {
        t[pos] = e;
        contractions_rec(a, b, t, pos + 1, coef * site_coef(a[pos], b[pos], e), fn);
    }
    t[pos] = 0;
}

template <typename F>
void contractions(const MultiIndex& a, const MultiIndex& b, F&& fn) {
    MultiIndex t(a.size(), 0);
    contractions_rec(a, b, t, 0, Rat(1), fn);
}

Poly star_impl(const Poly& f, const Poly& g, const Rat& hbar, bool anti) {
    if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    Poly r(f.n());
    Rat base = anti ? -hbar : hbar;
    std::vector<Rat> hpow{Rat(1)};
    auto hb = [&](unsigned t) -> const Rat& {
        while (hpow.size() <= t) hpow.push_back(hpow.back() * base);
        return hpow[t];
    };
    for (const auto& [kf, cf] : f.terms()) {
        for (const auto& [kg, cg] : g.terms()) {
            // Wick pairs zbar-derivatives of f with z-derivatives of g;
            // the anti product pairs the opposite sides.
            const MultiIndex& a = anti ? kf.K : kf.L;
            const MultiIndex& b = anti ? kg.L : kg.K;
            GaussRat cc = cf * cg;
            contractions(a, b, [&](const MultiIndex& t, unsigned tot, const Rat& comb) {
                GaussRat c = cc * GaussRat(hb(tot) * comb);
                r.add_term(mi_sub(mi_add(kf.K, kg.K), t), mi_sub(mi_add(kf.L, kg.L), t), c);
            });
        }
    }
    return r;
}

/// One application of the Laplacian sum_j d^2/dz_j dzbar_j.
Poly laplacian(const Poly& f) {
    Poly r(f.n());
    for (const auto& [key, c] : f.terms()) {
        for (std::size_t j = 0; j < key.K.size(); ++j) {
            if (key.K[j] == 0 || key.L[j] == 0) continue;
            MultiIndex K = key.K, L = key.L;
            GaussRat nc = c * GaussRat(Rat((long)K[j]) * Rat((long)L[j]));
            K[j] -= 1;
            L[j] -= 1;
            r.add_term(K, L, nc);
        }
    }
    return r;
}

Poly theta_series(const Poly& f, const Rat& coef) {
    Poly result = f;
    Poly cur = f;
    Rat scale(1);
    unsigned m = 0;
    while (true) {
        cur = laplacian(cur);
        if (cur.is_zero()) break;
        ++m;
        scale *= coef / Rat((long)m);
        result += GaussRat(scale) * cur;
    }
    return result;
}

/// Precompose with componentwise conjugation: z^K zbar^L -> z^L zbar^K.
Poly swap_bar(const Poly& f) {
    Poly r(f.n());
    for (const auto& [key, c] : f.terms()) r.add_term(key.L, key.K, c);
    return r;
}

}  // namespace

Poly wick_star(const Poly& f, const Poly& g, const Rat& hbar) {
    return star_impl(f, g, hbar, false);
}

Poly anti_wick_star(const Poly& f, const Poly& g, const Rat& hbar) {
    return star_impl(f, g, hbar, true);
}

Poly commutator_over_ihbar(const Poly& f, const Poly& g, const Rat& hbar) {
    if (hbar.is_zero()) throw std::invalid_argument("commutator_over_ihbar: hbar = 0");
    Poly num = wick_star(f, g, hbar) - wick_star(g, f, hbar);
    GaussRat inv = GaussRat(1) / GaussRat(Rat(0), hbar);
    return inv * num;
}

Poly poisson(const Poly& f, const Poly& g) {
    if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    Poly acc(f.n());
    for (std::size_t j = 0; j < f.nvars(); ++j) {
        acc += f.dzbar(j) * g.dz(j);
        acc -= f.dz(j) * g.dzbar(j);
    }
    return (GaussRat(1) / GaussRat::i()) * acc;
}

Poly theta(const Poly& f, const Rat& hbar) { return theta_series(f, -hbar); }

Poly theta_inv(const Poly& f, const Rat& hbar) { return theta_series(f, hbar); }

Poly phi_sign(const Poly& f, const Rat& hbar) {
    if (!(hbar > Rat(0))) throw std::invalid_argument("phi_sign: hbar must be > 0");
    return swap_bar(theta(f, hbar));
}

Poly phi_sign_inv(const Poly& f, const Rat& hbar) {
    if (!(hbar > Rat(0))) throw std::invalid_argument("phi_sign_inv: hbar must be > 0");
    return theta_inv(swap_bar(f), hbar);
}

}  // namespace wicksos
