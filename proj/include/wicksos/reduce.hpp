#ifndef WICKSOS_REDUCE_HPP
#define WICKSOS_REDUCE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "wicksos/fock.hpp"
#include "wicksos/poly.hpp"

namespace wicksos {

/// For g homogeneous of bidegree (l, l):
///   J^k g - hbar^k falling(mu/hbar - l, k) g = (J - mu) * h   (star product)
/// Returns (hbar^k falling(mu/hbar - l, k) g, h), built by induction on k;
/// the identity is recomputed exactly before returning.
std::pair<Poly, Poly> falling_reduce(unsigned k, const Poly& g, const Rat& mu,
                                     const Rat& hbar);

/// Decide membership of an invariant f in the star ideal generated by
/// J - mu, by the graded downward solve. Returns h with
/// f = (J - mu) *_hbar h, or nothing.
std::optional<Poly> ideal_member(const Poly& f, const Rat& mu, const Rat& hbar);

/// Output of the two-pass rewriting at level k: the exact identity is
///   f = g + (J - hbar k) *_hbar ideal_h + sum_i e_i *_hbar b_i
/// with g in the (k,k)-component, every e_i a monomial of bidegree
/// (k+1, k+1) and every b_i invariant.
struct NormalForm {
    Poly g;
    Poly ideal_h;
    std::vector<std::pair<Poly, Poly>> supp;
};

NormalForm normal_form_at_level(const Poly& f, unsigned k, const Rat& hbar);

/// Membership decision for the quadratic module of the J-reduction at mu.
struct QuadDecision {
    bool member = false;
    /// mu < 0: no eigenvectors at all, so membership holds vacuously.
    bool vacuous = false;
    /// mu not of the form hbar k: the module is all Hermitian invariants.
    bool generic = false;
    /// Set when mu = hbar k.
    std::optional<unsigned> level;
    std::vector<MultiIndex> basis;
    std::optional<PsdResult> psd;
};

/// Requires f invariant Hermitian, hbar > 0.
QuadDecision quad_member(const Poly& f, const Rat& mu, const Rat& hbar);

/// Polynomial function on projective space, represented by a balanced
/// bihomogeneous lift: (d, rep) with rep of bidegree (d, d). Two values are
/// equal iff they agree after raising the lower one by J-powers.
struct CpnPoly {
    unsigned d = 0;
    Poly rep;
};

bool cpn_equal(const CpnPoly& p, const CpnPoly& q);
CpnPoly cpn_zero(int n);
CpnPoly cpn_one(int n);

/// Quotient map onto the projective algebra:
/// representative sum_k hbar^k falling(1/hbar, k) J^{d-k} f_k at the top
/// degree d. Kernel is exactly the star ideal of J - 1.
/// Requires hbar not in {0} u {1/k : k >= 1} and f invariant.
CpnPoly psi_map(const Poly& f, const Rat& hbar);

/// Reduced star product: lift through the homogeneous section, star
/// multiply, push back. Independent of the lift degree.
CpnPoly red_star(const CpnPoly& p, const CpnPoly& q, int n, const Rat& hbar);

/// Representation-theoretic classification of a given hbar < 0 or generic
/// value: either every representation of the projective algebra is trivial,
/// or there is a unique nontrivial quadratic module of reduced dimension
/// binom(n+k, k).
struct HbarClass {
    bool exceptional = false;
    unsigned k = 0;
    Rat reduced_dim;
};

HbarClass exceptional_hbar(const Rat& hbar, int n);

}  // namespace wicksos

#endif
