#include "wicksos/reduce.hpp"

#include <map>
#include <stdexcept>

#include "wicksos/linalg.hpp"
#include "wicksos/wick.hpp"

namespace wicksos {

namespace {

Poly jminusmu(int n, const Rat& mu) {
    return momentum_map(n) - Poly::constant(n, GaussRat(mu));
}

/// Signed difference pattern K - L; multiplication by J preserves it, so
/// the division system block-diagonalizes over it.
using DiffKey = std::vector<long>;

DiffKey diff_key(const MultiIndex& k, const MultiIndex& l) {
    DiffKey d(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) d[j] = (long)k[j] - (long)l[j];
    return d;
}

/// Solve J * x = p for x of bidegree (m-1, m-1), p of bidegree (m, m).
/// Multiplication by J is injective, so the solution is unique when it
/// exists.
std::optional<Poly> divide_by_j(const Poly& p, unsigned m) {
    int n = p.n();
    std::size_t nv = p.nvars();
    auto kset = multiindices(nv, m - 1);
    // unknown indices grouped by difference pattern
    std::map<DiffKey, std::vector<std::pair<MultiIndex, MultiIndex>>> unknowns;
    for (const auto& K : kset)
        for (const auto& L : kset) unknowns[diff_key(K, L)].push_back({K, L});
    // equations grouped the same way
    std::map<DiffKey, std::vector<std::pair<TermKey, GaussRat>>> eqs;
    auto mset = multiindices(nv, m);
    for (const auto& K : mset)
        for (const auto& L : mset)
            eqs[diff_key(K, L)].push_back({TermKey{K, L}, p.coeff(K, L)});

    Poly x(n);
    for (auto& [dk, eqlist] : eqs) {
        auto uit = unknowns.find(dk);
        std::size_t ncols = uit == unknowns.end() ? 0 : uit->second.size();
        if (ncols == 0) {
            for (const auto& [key, rhs] : eqlist)
                if (!rhs.is_zero()) return std::nullopt;
            continue;
        }
        std::map<std::pair<MultiIndex, MultiIndex>, std::size_t> colidx;
        for (std::size_t j = 0; j < ncols; ++j) colidx[uit->second[j]] = j;
        std::vector<std::vector<GaussRat>> a(eqlist.size(), std::vector<GaussRat>(ncols));
        std::vector<GaussRat> b(eqlist.size());
        for (std::size_t i = 0; i < eqlist.size(); ++i) {
            const auto& [key, rhs] = eqlist[i];
            b[i] = rhs;
            for (std::size_t j = 0; j < nv; ++j) {
                if (key.K[j] == 0 || key.L[j] == 0) continue;
                MultiIndex K = key.K, L = key.L;
                K[j] -= 1;
                L[j] -= 1;
                auto it = colidx.find({K, L});
                if (it != colidx.end()) a[i][it->second] += GaussRat(1);
            }
        }
        auto sol = solve_exact(std::move(a), std::move(b));
        if (!sol) return std::nullopt;
        for (std::size_t j = 0; j < ncols; ++j)
            x.add_term(uit->second[j].first, uit->second[j].second, (*sol)[j]);
    }
    // confirm (the per-block solves are necessary, not obviously sufficient
    // against stray unknown couplings)
    if (momentum_map(n) * x != p) return std::nullopt;
    return x;
}

void require_invariant(const Poly& f, const char* where) {
    if (!f.is_invariant())
        throw std::invalid_argument(std::string(where) + ": input not invariant");
}

void require_positive(const Rat& hbar, const char* where) {
    if (!(hbar > Rat(0)))
        throw std::invalid_argument(std::string(where) + ": hbar must be > 0");
}

/// Greedy sub-multi-index of size c, filled from the leading coordinate.
MultiIndex greedy_sub(const MultiIndex& k, unsigned c) {
    MultiIndex m(k.size(), 0);
    unsigned left = c;
    for (std::size_t j = 0; j < k.size() && left > 0; ++j) {
        unsigned take = std::min<unsigned>(k[j], left);
        m[j] = take;
        left -= take;
    }
    return m;
}

void check_cpn_hbar(const Rat& hbar, const char* where) {
    if (hbar.is_zero())
        throw std::invalid_argument(std::string(where) + ": hbar must be nonzero");
    Rat inv = Rat(1) / hbar;
    if (inv.is_integer() && inv > Rat(0))
        throw std::invalid_argument(std::string(where) +
                                    ": hbar = 1/k is excluded");
}

}  // namespace

std::pair<Poly, Poly> falling_reduce(unsigned k, const Poly& g, const Rat& mu,
                                     const Rat& hbar) {
    require_positive(hbar, "falling_reduce");
    if (!g.is_zero() && g.grade(g.top_level(), g.top_level()) != g)
        throw std::invalid_argument("falling_reduce: g not homogeneous balanced");
    int n = g.n();
    unsigned l = g.is_zero() ? 0 : g.top_level();
    Rat x = mu / hbar - Rat((long)l);
    // h_j+1 = J^j g + c_j h_j with c_j = hbar (x - j); h_0 = 0
    Poly h(n);
    Poly jpow = Poly::constant(n, GaussRat(1));
    Poly jp = momentum_map(n);
    for (unsigned j = 0; j < k; ++j) {
        Rat c = hbar * (x - Rat((long)j));
        h = jpow * g + GaussRat(c) * h;
        if (j + 1 < k) jpow = jpow * jp;
    }
    Poly reduced = GaussRat(pow(hbar, k) * falling(x, k)) * g;
    // recompute the defining identity exactly
    Poly lhs = jp.pow_ptwise(k) * g - reduced;
    if (wick_star(jminusmu(n, mu), h, hbar) != lhs)
        throw std::logic_error("falling_reduce: verification failed");
    return {reduced, h};
}

std::optional<Poly> ideal_member(const Poly& f, const Rat& mu, const Rat& hbar) {
    require_invariant(f, "ideal_member");
    require_positive(hbar, "ideal_member");
    int n = f.n();
    if (f.is_zero()) return Poly(n);
    Poly h(n);
    Poly rem = f;
    Poly gen = jminusmu(n, mu);
    for (unsigned m = f.top_level(); m >= 1; --m) {
        Poly pm = rem.level(m);
        if (!pm.is_zero()) {
            auto x = divide_by_j(pm, m);
            if (!x) return std::nullopt;
            h += *x;
            rem -= wick_star(gen, *x, hbar);
        }
        if (m == 1) break;
    }
    if (!rem.is_zero()) return std::nullopt;  // the constant-level constraint
    return h;
}

NormalForm normal_form_at_level(const Poly& f, unsigned k, const Rat& hbar) {
    require_invariant(f, "normal_form_at_level");
    require_positive(hbar, "normal_form_at_level");
    int n = f.n();
    NormalForm nf{Poly(n), Poly(n), {}};
    Poly work = f;

    // pass 1: push every component above level k into products with a
    // bidegree-(k+1, k+1) monomial on the left; corrections stay above k
    for (unsigned l = work.top_level(); l > k; --l) {
        Poly comp = work.level(l);
        for (const auto& [key, c] : comp.terms()) {
            MultiIndex M = greedy_sub(key.K, k + 1);
            MultiIndex Mp = greedy_sub(key.L, k + 1);
            Poly e = Poly::monomial(n, M, Mp, GaussRat(1));
            Poly b = Poly::monomial(n, mi_sub(key.K, M), mi_sub(key.L, Mp), c);
            work -= wick_star(e, b, hbar);
            nf.supp.emplace_back(std::move(e), std::move(b));
        }
        if (!work.level(l).is_zero())
            throw std::logic_error("normal_form_at_level: level not cleared");
        if (l == k + 1) break;
    }

    // pass 2: J-power formula on the remaining levels <= k
    Rat mu = hbar * Rat((long)k);
    for (unsigned l = 0; l <= k; ++l) {
        Poly fl = work.level(l);
        if (fl.is_zero()) continue;
        Rat scale = Rat(1) / (pow(hbar, k - l) * factorial(k - l));
        nf.g += GaussRat(scale) * (momentum_power(n, k - l) * fl);
        auto [reduced, h] = falling_reduce(k - l, fl, mu, hbar);
        // scale * (J^{k-l} fl) - fl = (J - mu) * (scale * h)
        nf.ideal_h -= GaussRat(scale) * h;
    }
    return nf;
}

QuadDecision quad_member(const Poly& f, const Rat& mu, const Rat& hbar) {
    require_invariant(f, "quad_member");
    require_positive(hbar, "quad_member");
    if (!f.is_hermitian()) throw std::invalid_argument("quad_member: f not Hermitian");
    QuadDecision d;
    if (mu < Rat(0)) {
        d.member = true;
        d.vacuous = true;
        return d;
    }
    Rat x = mu / hbar;
    if (!x.is_integer()) {
        d.member = true;
        d.generic = true;
        return d;
    }
    unsigned k = (unsigned)x.num().get_ui();
    d.level = k;
    FockMatrix m = pi_matrix(f, k, hbar);
    d.basis = m.basis;
    d.psd = psd_check(m.weighted_form());
    d.member = d.psd->psd;
    return d;
}

bool cpn_equal(const CpnPoly& p, const CpnPoly& q) {
    if (p.rep.is_zero() && q.rep.is_zero()) return true;
    const CpnPoly& lo = p.d <= q.d ? p : q;
    const CpnPoly& hi = p.d <= q.d ? q : p;
    return momentum_power(lo.rep.n(), hi.d - lo.d) * lo.rep == hi.rep;
}

CpnPoly cpn_zero(int n) { return CpnPoly{0, Poly(n)}; }

CpnPoly cpn_one(int n) { return CpnPoly{0, Poly::constant(n, GaussRat(1))}; }

CpnPoly psi_map(const Poly& f, const Rat& hbar) {
    require_invariant(f, "psi_map");
    check_cpn_hbar(hbar, "psi_map");
    int n = f.n();
    if (f.is_zero()) return cpn_zero(n);
    unsigned d = f.top_level();
    Rat invh = Rat(1) / hbar;
    Poly rep(n);
    for (unsigned k = 0; k <= d; ++k) {
        Poly fk = f.level(k);
        if (fk.is_zero()) continue;
        Rat c = pow(hbar, k) * falling(invh, k);
        rep += GaussRat(c) * (momentum_power(n, d - k) * fk);
    }
    return CpnPoly{d, rep};
}

CpnPoly red_star(const CpnPoly& p, const CpnPoly& q, int n, const Rat& hbar) {
    check_cpn_hbar(hbar, "red_star");
    Rat invh = Rat(1) / hbar;
    auto lift = [&](const CpnPoly& c) {
        Rat scale = pow(hbar, c.d) * falling(invh, c.d);
        if (scale.is_zero()) throw std::logic_error("red_star: vanishing section scale");
        return GaussRat(Rat(1) / scale) * c.rep;
    };
    return psi_map(wick_star(lift(p), lift(q), hbar), hbar);
}

HbarClass exceptional_hbar(const Rat& hbar, int n) {
    check_cpn_hbar(hbar, "exceptional_hbar");
    HbarClass c;
    Rat minv = -(Rat(1) / hbar);  // solves 1 + n + k = -1/hbar
    if (minv.is_integer() && minv >= Rat((long)n + 1)) {
        c.exceptional = true;
        c.k = (unsigned)(minv - Rat((long)n + 1)).num().get_ui();
        c.reduced_dim = binom((unsigned long)n + c.k, c.k);
    } else {
        c.reduced_dim = Rat(0);
    }
    return c;
}

}  // namespace wicksos
