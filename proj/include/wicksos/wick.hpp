#ifndef WICKSOS_WICK_HPP
#define WICKSOS_WICK_HPP

#include "wicksos/poly.hpp"

namespace wicksos {

/// Wick star product f *_hbar g. Bilinear, associative; the zeroth-order
/// term is the pointwise product. Computed by term-pair convolution: for
/// each contraction multi-index T the pair (z^K1 zbar^L1, z^K2 zbar^L2)
/// contributes hbar^|T| prod_j falling(L1_j,T_j) falling(K2_j,T_j) / T!
/// on z^{K1+K2-T} zbar^{L1+L2-T}.
Poly wick_star(const Poly& f, const Poly& g, const Rat& hbar);

/// Anti-Wick product: contractions pair d/dz on the left factor with
/// d/dzbar on the right, weighted by (-hbar)^|T|.
Poly anti_wick_star(const Poly& f, const Poly& g, const Rat& hbar);

/// (f *_hbar g - g *_hbar f) / (i hbar); requires hbar != 0.
Poly commutator_over_ihbar(const Poly& f, const Poly& g, const Rat& hbar);

/// Poisson bracket of the standard Kaehler structure:
/// (1/i) sum_j (df/dzbar_j dg/dz_j - df/dz_j dg/dzbar_j).
Poly poisson(const Poly& f, const Poly& g);

/// Equivalence transformation exp(-hbar Laplacian); terminating series.
Poly theta(const Poly& f, const Rat& hbar);
/// Inverse of theta (the same series with +hbar).
Poly theta_inv(const Poly& f, const Rat& hbar);

/// Sign isomorphism between the hbar and -hbar algebras:
/// theta followed by precomposition with coordinate conjugation
/// (z^K zbar^L -> z^L zbar^K, coefficients unchanged). Requires hbar > 0.
Poly phi_sign(const Poly& f, const Rat& hbar);
Poly phi_sign_inv(const Poly& f, const Rat& hbar);

}  // namespace wicksos

#endif
