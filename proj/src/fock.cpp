#include "wicksos/fock.hpp"

#include <stdexcept>

namespace wicksos {

namespace {

void require_positive(const Rat& hbar, const char* where) {
    if (!(hbar > Rat(0)))
        throw std::invalid_argument(std::string(where) + ": hbar must be > 0");
}

}  // namespace

HoloPoly::HoloPoly(Poly p) : p_(std::move(p)) {
    if (p_.max_antihol_degree() != 0)
        throw std::invalid_argument("HoloPoly: antiholomorphic term present");
}

HoloPoly HoloPoly::monomial(int n, const MultiIndex& K, const GaussRat& c) {
    return HoloPoly(Poly::monomial(n, K, MultiIndex(K.size(), 0), c));
}

GaussRat fock_inner(const HoloPoly& f, const HoloPoly& g, const Rat& hbar) {
    require_positive(hbar, "fock_inner");
    if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    GaussRat acc;
    for (const auto& [key, cf] : f.poly().terms()) {
        GaussRat cg = g.poly().coeff(key.K, key.L);
        if (cg.is_zero()) continue;
        acc += cf.conj() * cg * GaussRat(pow(hbar, mi_abs(key.K)) * mi_factorial(key.K));
    }
    return acc;
}

HoloPoly pi_apply(const Poly& f, const HoloPoly& g, const Rat& hbar) {
    require_positive(hbar, "pi_apply");
    if (f.n() != g.n()) throw std::invalid_argument("dimension mismatch");
    Poly out(f.n());
    for (const auto& [kf, cf] : f.terms()) {
        Rat hl = pow(hbar, mi_abs(kf.L));
        for (const auto& [kg, cg] : g.poly().terms()) {
            if (!mi_le(kf.L, kg.K)) continue;
            Rat deriv(1);
            for (std::size_t j = 0; j < kf.L.size(); ++j)
                deriv *= falling(Rat((long)kg.K[j]), kf.L[j]);
            out.add_term(mi_add(kf.K, mi_sub(kg.K, kf.L)), MultiIndex(kf.K.size(), 0),
                         cf * cg * GaussRat(hl * deriv));
        }
    }
    return HoloPoly(std::move(out));
}

bool HermMatrix::is_hermitian() const {
    for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j <= i; ++j)
            if (a[i][j] != a[j][i].conj()) return false;
    return true;
}

HermMatrix FockMatrix::weighted_form() const {
    HermMatrix h;
    h.dim = dim();
    h.a.assign(h.dim, std::vector<GaussRat>(h.dim));
    for (std::size_t i = 0; i < h.dim; ++i)
        for (std::size_t j = 0; j < h.dim; ++j) h.a[i][j] = GaussRat(gram[i]) * op[i][j];
    return h;
}

FockMatrix pi_matrix(const Poly& f, unsigned k, const Rat& hbar) {
    require_positive(hbar, "pi_matrix");
    if (!f.is_invariant()) throw std::invalid_argument("pi_matrix: f is not invariant");
    FockMatrix m;
    m.n = f.n();
    m.level = k;
    m.hbar = hbar;
    m.basis = multiindices(f.nvars(), k);
    std::size_t d = m.basis.size();
    m.op.assign(d, std::vector<GaussRat>(d));
    m.gram.reserve(d);
    Rat hk = pow(hbar, k);
    for (const auto& K : m.basis) m.gram.push_back(hk * mi_factorial(K));

    std::map<MultiIndex, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index[m.basis[i]] = i;

    for (std::size_t j = 0; j < d; ++j) {
        HoloPoly img = pi_apply(f, HoloPoly::monomial(f.n(), m.basis[j]), hbar);
        for (const auto& [key, c] : img.poly().terms()) {
            auto it = index.find(key.K);
            if (it == index.end())
                throw std::logic_error("pi_matrix: image left the eigenspace");
            m.op[it->second][j] = c;
        }
    }
    return m;
}

GaussRat herm_form(const HermMatrix& m, const std::vector<GaussRat>& v,
                   const std::vector<GaussRat>& w) {
    GaussRat acc;
    for (std::size_t i = 0; i < m.dim; ++i) {
        if (v[i].is_zero()) continue;
        GaussRat row;
        for (std::size_t j = 0; j < m.dim; ++j) {
            if (w[j].is_zero()) continue;
            row += m.a[i][j] * w[j];
        }
        acc += v[i].conj() * row;
    }
    return acc;
}

PsdResult psd_check(const HermMatrix& m) {
    if (!m.is_hermitian()) throw std::invalid_argument("psd_check: matrix is not Hermitian");
    std::size_t d = m.dim;
    GMatrix s = m.a;
    std::vector<char> done(d, false);
    PsdResult res;
    std::vector<std::size_t> pivots;

    // Straighten a raw certificate-of-negativity vector (supported on the
    // not-yet-eliminated indices) into original coordinates: make it
    // orthogonal to every earlier factor column.
    auto finish_witness = [&](std::vector<GaussRat> v) {
        for (std::size_t fi = res.factors.size(); fi-- > 0;) {
            const auto& col = res.factors[fi].second;
            GaussRat beta;
            for (std::size_t j = 0; j < d; ++j) beta += col[j].conj() * v[j];
            v[pivots[fi]] -= beta;
        }
        res.psd = false;
        res.witness = std::move(v);
        res.witness_value = herm_form(m, res.witness, res.witness);
        if (!(res.witness_value.is_real() && res.witness_value.re() < Rat(0)))
            throw std::logic_error("psd_check: witness failed to certify negativity");
        res.factors.clear();
        return res;
    };

    while (true) {
        std::size_t p = d;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i] || s[i][i].is_zero()) continue;
            p = i;
            break;
        }
        if (p == d) {
            // all remaining diagonal entries vanish
            for (std::size_t i = 0; i < d; ++i) {
                if (done[i]) continue;
                for (std::size_t j = i + 1; j < d; ++j) {
                    if (done[j] || s[i][j].is_zero()) continue;
                    std::vector<GaussRat> v(d);
                    v[i] = -s[i][j];
                    v[j] = GaussRat(1);
                    return finish_witness(std::move(v));
                }
            }
            res.psd = true;  // remainder is exactly zero
            return res;
        }
        if (!s[p][p].is_real()) throw std::logic_error("psd_check: non-real diagonal");
        Rat piv = s[p][p].re();
        if (piv < Rat(0)) {
            std::vector<GaussRat> v(d);
            v[p] = GaussRat(1);
            return finish_witness(std::move(v));
        }
        std::vector<GaussRat> col(d);
        GaussRat inv = GaussRat(1) / GaussRat(piv);
        for (std::size_t i = 0; i < d; ++i)
            if (!done[i]) col[i] = s[i][p] * inv;
        for (std::size_t i = 0; i < d; ++i) {
            if (done[i]) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (done[j]) continue;
                s[i][j] -= GaussRat(piv) * col[i] * col[j].conj();
            }
        }
        done[p] = true;
        res.factors.emplace_back(piv, std::move(col));
        pivots.push_back(p);
    }
}

}  // namespace wicksos
