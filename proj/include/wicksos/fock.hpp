#ifndef WICKSOS_FOCK_HPP
#define WICKSOS_FOCK_HPP

#include <utility>
#include <vector>

#include "wicksos/poly.hpp"

namespace wicksos {

/// A purely holomorphic polynomial (every term has L = 0): an element of the
/// dense domain carrying the representation.
class HoloPoly {
public:
    explicit HoloPoly(Poly p);
    HoloPoly(int n) : p_(n) {}

    static HoloPoly monomial(int n, const MultiIndex& K, const GaussRat& c = GaussRat(1));

    const Poly& poly() const { return p_; }
    int n() const { return p_.n(); }
    bool is_zero() const { return p_.is_zero(); }

    friend bool operator==(const HoloPoly& a, const HoloPoly& b) { return a.p_ == b.p_; }

private:
    Poly p_;
};

/// Inner product on holomorphic polynomials, defined combinatorially by
/// <z^K, z^L> = delta_{K,L} hbar^|K| K!. Antilinear in the first slot.
/// Requires hbar > 0.
GaussRat fock_inner(const HoloPoly& f, const HoloPoly& g, const Rat& hbar);

/// Apply the representation of f to g: z^K zbar^L acts as
/// z^K hbar^|L| d^|L|/dz^L, extended linearly. Requires hbar > 0.
HoloPoly pi_apply(const Poly& f, const HoloPoly& g, const Rat& hbar);

/// Square matrix over the Gaussian rationals with entry(i,j) = conj(entry(j,i)).
struct HermMatrix {
    std::size_t dim = 0;
    GMatrix a;

    bool is_hermitian() const;
};

/// Matrix of the representation of an invariant f restricted to the level-k
/// eigenspace, in the monomial basis (lex descending), together with the
/// diagonal Gram weights hbar^k K! of that basis.
struct FockMatrix {
    int n = 1;
    unsigned level = 0;
    Rat hbar;
    std::vector<MultiIndex> basis;
    GMatrix op;             // column j = image of basis[j]
    std::vector<Rat> gram;  // gram[i] = hbar^k basis[i]!

    std::size_t dim() const { return basis.size(); }
    /// The sesquilinear form <psi, pi(f) psi> in coefficient coordinates:
    /// diag(gram) * op. Hermitian whenever f is Hermitian.
    HermMatrix weighted_form() const;
};

/// Requires f invariant and hbar > 0. Dimension is binom(n+k, k).
FockMatrix pi_matrix(const Poly& f, unsigned k, const Rat& hbar);

/// Exact positive-semidefiniteness decision via pivoted LDL^*.
/// On success, M = sum_i d_i c_i c_i^* with d_i > 0 exactly.
/// On failure, <witness, M witness> = witness_value < 0 exactly.
struct PsdResult {
    bool psd = false;
    std::vector<std::pair<Rat, std::vector<GaussRat>>> factors;
    std::vector<GaussRat> witness;
    GaussRat witness_value;
};

PsdResult psd_check(const HermMatrix& m);

/// <v, M w> for the plain (unweighted) inner product.
GaussRat herm_form(const HermMatrix& m, const std::vector<GaussRat>& v,
                   const std::vector<GaussRat>& w);

}  // namespace wicksos

#endif
