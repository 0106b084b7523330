#include "wicksos/poly.hpp"

#include <stdexcept>

namespace wicksos {

Poly Poly::constant(int n, const GaussRat& c) {
    Poly p(n);
    MultiIndex zero(p.nvars(), 0);
    p.add_term(zero, zero, c);
    return p;
}

Poly Poly::variable(int n, std::size_t j) {
    Poly p(n);
    if (j >= p.nvars()) throw std::invalid_argument("variable index out of range");
    p.add_term(mi_unit(p.nvars(), j), MultiIndex(p.nvars(), 0), GaussRat(1));
    return p;
}

Poly Poly::covariable(int n, std::size_t j) {
    Poly p(n);
    if (j >= p.nvars()) throw std::invalid_argument("variable index out of range");
    p.add_term(MultiIndex(p.nvars(), 0), mi_unit(p.nvars(), j), GaussRat(1));
    return p;
}

Poly Poly::monomial(int n, MultiIndex K, MultiIndex L, GaussRat c) {
    Poly p(n);
    if (K.size() != p.nvars() || L.size() != p.nvars())
        throw std::invalid_argument("monomial: wrong multi-index length");
    p.add_term(K, L, c);
    return p;
}

void Poly::add_term(const MultiIndex& K, const MultiIndex& L, const GaussRat& c) {
    if (c.is_zero()) return;
    TermKey key{K, L};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

GaussRat Poly::coeff(const MultiIndex& K, const MultiIndex& L) const {
    auto it = terms_.find(TermKey{K, L});
    return it == terms_.end() ? GaussRat() : it->second;
}

Poly Poly::operator-() const {
    Poly r(n_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.K, k.L, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (n_ != o.n_) throw std::invalid_argument("dimension mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.K, k.L, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
    Poly r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(mi_add(ka.K, kb.K), mi_add(ka.L, kb.L), ca * cb);
    return r;
}

Poly operator*(const GaussRat& c, const Poly& p) {
    Poly r(p.n_);
    if (c.is_zero()) return r;
    for (const auto& [k, v] : p.terms_) r.terms_.emplace(k, c * v);
    return r;
}

Poly Poly::conj() const {
    Poly r(n_);
    for (const auto& [k, c] : terms_) r.add_term(k.L, k.K, c.conj());
    return r;
}

Poly Poly::grade(unsigned k, unsigned l) const {
    Poly r(n_);
    for (const auto& [key, c] : terms_)
        if (mi_abs(key.K) == k && mi_abs(key.L) == l) r.terms_.emplace(key, c);
    return r;
}

unsigned Poly::max_hol_degree() const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, mi_abs(k.K));
    return m;
}

unsigned Poly::max_antihol_degree() const {
    unsigned m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, mi_abs(k.L));
    return m;
}

Poly Poly::deg_hol_minus_antihol() const {
    Poly r(n_);
    for (const auto& [k, c] : terms_) {
        long d = (long)mi_abs(k.K) - (long)mi_abs(k.L);
        r.add_term(k.K, k.L, GaussRat(Rat(d)) * c);
    }
    return r;
}

bool Poly::is_invariant() const {
    for (const auto& [k, c] : terms_)
        if (mi_abs(k.K) != mi_abs(k.L)) return false;
    return true;
}

Poly Poly::act(const GMatrix& m) const {
    if (m.size() != nvars()) throw std::invalid_argument("act: dimension mismatch");
    for (const auto& row : m)
        if (row.size() != nvars()) throw std::invalid_argument("act: dimension mismatch");

    // linear forms z_i -> sum_j m[i][j] z_j and the conjugate substitution
    std::vector<Poly> zsub, zbsub;
    for (std::size_t i = 0; i < nvars(); ++i) {
        Poly zs(n_), zbs(n_);
        for (std::size_t j = 0; j < nvars(); ++j) {
            zs += m[i][j] * Poly::variable(n_, j);
            zbs += m[i][j].conj() * Poly::covariable(n_, j);
        }
        zsub.push_back(zs);
        zbsub.push_back(zbs);
    }
    // cache powers on demand
    std::vector<std::vector<Poly>> zpow(nvars(), {Poly::constant(n_, GaussRat(1))});
    std::vector<std::vector<Poly>> zbpow(nvars(), {Poly::constant(n_, GaussRat(1))});
    auto power = [&](std::vector<std::vector<Poly>>& cache, const std::vector<Poly>& base,
                     std::size_t i, unsigned e) -> const Poly& {
        while (cache[i].size() <= e) cache[i].push_back(cache[i].back() * base[i]);
        return cache[i][e];
    };
    Poly r(n_);
    for (const auto& [key, c] : terms_) {
        Poly t = Poly::constant(n_, c);
        for (std::size_t i = 0; i < nvars(); ++i) {
            if (key.K[i] > 0) t = t * power(zpow, zsub, i, key.K[i]);
            if (key.L[i] > 0) t = t * power(zbpow, zbsub, i, key.L[i]);
        }
        r += t;
    }
    return r;
}

GaussRat Poly::evaluate(const std::vector<GaussRat>& w) const {
    if (w.size() != nvars()) throw std::invalid_argument("evaluate: dimension mismatch");
    GaussRat r;
    for (const auto& [key, c] : terms_) {
        GaussRat t = c;
        for (std::size_t j = 0; j < nvars(); ++j) {
            if (key.K[j] > 0) t *= pow(w[j], key.K[j]);
            if (key.L[j] > 0) t *= pow(w[j].conj(), key.L[j]);
        }
        r += t;
    }
    return r;
}

Poly Poly::dz(std::size_t j) const {
    Poly r(n_);
    for (const auto& [key, c] : terms_) {
        if (key.K[j] == 0) continue;
        MultiIndex K = key.K;
        GaussRat nc = c * GaussRat(Rat((long)K[j]));
        K[j] -= 1;
        r.add_term(K, key.L, nc);
    }
    return r;
}

Poly Poly::dzbar(std::size_t j) const {
    Poly r(n_);
    for (const auto& [key, c] : terms_) {
        if (key.L[j] == 0) continue;
        MultiIndex L = key.L;
        GaussRat nc = c * GaussRat(Rat((long)L[j]));
        L[j] -= 1;
        r.add_term(key.K, L, nc);
    }
    return r;
}

Poly Poly::pow_ptwise(unsigned e) const {
    Poly r = Poly::constant(n_, GaussRat(1));
    for (unsigned j = 0; j < e; ++j) r = r * (*this);
    return r;
}

Poly momentum_map(int n) {
    Poly j(n);
    for (std::size_t i = 0; i < j.nvars(); ++i)
        j.add_term(mi_unit(j.nvars(), i), mi_unit(j.nvars(), i), GaussRat(1));
    return j;
}

Poly momentum_power(int n, unsigned k) { return momentum_map(n).pow_ptwise(k); }

GMatrix matmul(const GMatrix& a, const GMatrix& b) {
    std::size_t r = a.size(), m = b.size(), c = b.empty() ? 0 : b[0].size();
    GMatrix out(r, std::vector<GaussRat>(c));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_unitary(const GMatrix& m) {
    std::size_t d = m.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            GaussRat s;
            for (std::size_t k = 0; k < d; ++k) s += m[i][k] * m[j][k].conj();
            if (s != (i == j ? GaussRat(1) : GaussRat())) return false;
        }
    return true;
}

}  // namespace wicksos
