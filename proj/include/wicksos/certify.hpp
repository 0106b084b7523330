#ifndef WICKSOS_CERTIFY_HPP
#define WICKSOS_CERTIFY_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wicksos/average.hpp"
#include "wicksos/fock.hpp"
#include "wicksos/poly.hpp"
#include "wicksos/reduce.hpp"

namespace wicksos {

struct SosAtom {
    Rat lambda;  // > 0
    Poly g;      // invariant
};

/// Proof object for the exact identity
///   target = sum_j lambda_j conj(g_j) *_hbar g_j + (J - mu) *_hbar witness_h
/// with every g_j invariant, witness_h Hermitian invariant and lambda_j > 0.
struct Certificate {
    int n = 1;
    Rat hbar;
    Rat mu;
    Poly target;
    std::vector<SosAtom> sos;
    Poly witness_h;
    bool verified = false;
    // metadata
    int meta_k = -1;
    std::string design_ref;
    std::optional<Rat> meta_alpha;

    Certificate() : target(1), witness_h(1) {}
    explicit Certificate(int n_)
        : n(n_), target(n_), witness_h(n_) {}
};

struct VerifyResult {
    bool ok = false;
    std::string message;
};

/// Recomputes the defining identity and all side conditions with exact
/// arithmetic; true only on exact equality.
VerifyResult verify(const Certificate& c);

/// Structured refusal when the target is not in the quadratic module: a
/// concrete eigenspace vector with a strictly negative expectation.
struct Refusal {
    unsigned level = 0;
    std::vector<MultiIndex> basis;
    std::vector<GaussRat> witness;
    GaussRat value;
};

using CertifyOutcome = std::variant<Certificate, Refusal>;

/// Certificate for -1 at a momentum mu outside {hbar k} u {-hbar(1+n+k)}.
/// Requires hbar > 0.
Certificate certify_minus_one(int n, const Rat& hbar, const Rat& mu,
                              long norm_bound = 10);

/// Certificate for f conj(f) at mu = hbar (deg f - 1), f homogeneous
/// holomorphic of degree >= 1 (degree 0 yields the trivial certificate).
Certificate sos_holomorphic_square(const HoloPoly& f, const Rat& hbar,
                                   long norm_bound = 10);

/// Certificate for i^m z^K zbar^L + i^{-m} z^L zbar^K at mu = hbar(|K|-1),
/// |K| = |L| >= 1, m in {0,1,2,3}. The family is closed under negation
/// (m -> m+2), which is what makes these usable as two-sided generators.
Certificate sos_supp_generator(int n, const MultiIndex& K, const MultiIndex& L,
                               int m, const Rat& hbar, long norm_bound = 10);

/// Full pipeline for invariant Hermitian f with mu >= 0, hbar > 0:
/// membership is checked first and a Refusal returned when it fails;
/// otherwise the returned certificate has been verified.
CertifyOutcome certify_positive(const Poly& f, const Rat& hbar, const Rat& mu,
                                long norm_bound = 10);

/// Transport a certificate to the opposite deformation sign through the
/// sign isomorphism; the momentum shifts by hbar(1+n). The transported
/// certificate is re-verified in the target algebra.
Certificate transport_to_negative_hbar(const Certificate& c);

}  // namespace wicksos

#endif
