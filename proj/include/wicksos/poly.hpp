#ifndef WICKSOS_POLY_HPP
#define WICKSOS_POLY_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wicksos/multiindex.hpp"
#include "wicksos/rational.hpp"

namespace wicksos {

/// Key of one monomial z^K zbar^L.
struct TermKey {
    MultiIndex K, L;

    friend bool operator==(const TermKey&, const TermKey&) = default;
};

/// Canonical term order: total degree descending, then K lex descending,
/// then L lex descending. Map iteration order doubles as print order.
struct TermOrder {
    bool operator()(const TermKey& a, const TermKey& b) const {
        unsigned da = mi_abs(a.K) + mi_abs(a.L);
        unsigned db = mi_abs(b.K) + mi_abs(b.L);
        if (da != db) return da > db;
        int c = mi_lex_cmp(a.K, b.K);
        if (c != 0) return c > 0;
        return mi_lex_cmp(a.L, b.L) > 0;
    }
};

using GMatrix = std::vector<std::vector<GaussRat>>;

/// Element of the bigraded polynomial *-algebra on C^{1+n}: a finitely
/// supported map (K, L) -> coefficient. Zero coefficients are never stored.
/// Immutable value semantics; every operation allocates a fresh result.
class Poly {
public:
    using TermMap = std::map<TermKey, GaussRat, TermOrder>;

    explicit Poly(int n = 1) : n_(n) {}

    static Poly zero(int n) { return Poly(n); }
    static Poly constant(int n, const GaussRat& c);
    static Poly variable(int n, std::size_t j);     // z_j
    static Poly covariable(int n, std::size_t j);   // zbar_j
    static Poly monomial(int n, MultiIndex K, MultiIndex L, GaussRat c);

    int n() const { return n_; }
    std::size_t nvars() const { return static_cast<std::size_t>(n_) + 1; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const MultiIndex& K, const MultiIndex& L, const GaussRat& c);
    GaussRat coeff(const MultiIndex& K, const MultiIndex& L) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    /// Commutative pointwise product.
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const GaussRat& c, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Pointwise complex conjugation: antilinear, swaps K and L.
    Poly conj() const;
    bool is_hermitian() const { return *this == conj(); }

    /// Projection onto the (k, l)-bihomogeneous component.
    Poly grade(unsigned k, unsigned l) const;
    /// Shorthand for the balanced component grade(l, l).
    Poly level(unsigned l) const { return grade(l, l); }

    unsigned max_hol_degree() const;
    unsigned max_antihol_degree() const;
    /// Max of |K| over terms; for invariant elements this is the top level.
    unsigned top_level() const { return max_hol_degree(); }

    /// z^K zbar^L -> (|K| - |L|) z^K zbar^L, extended linearly.
    Poly deg_hol_minus_antihol() const;
    /// True iff every term has |K| = |L|.
    bool is_invariant() const;

    /// Pullback along w -> Mw: z_i -> sum_j M[i][j] z_j and conjugates.
    Poly act(const GMatrix& m) const;

    /// Substitute z_j = w_j, zbar_j = conj(w_j).
    GaussRat evaluate(const std::vector<GaussRat>& w) const;

    /// d/dz_j and d/dzbar_j.
    Poly dz(std::size_t j) const;
    Poly dzbar(std::size_t j) const;

    Poly pow_ptwise(unsigned e) const;

private:
    int n_;
    TermMap terms_;
};

/// The momentum map J = sum_j z_j zbar_j.
Poly momentum_map(int n);

/// J^k as a pointwise power (multinomial expansion).
Poly momentum_power(int n, unsigned k);

bool is_unitary(const GMatrix& m);
GMatrix matmul(const GMatrix& a, const GMatrix& b);

}  // namespace wicksos

#endif
