#ifndef WICKSOS_AVERAGE_HPP
#define WICKSOS_AVERAGE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "wicksos/poly.hpp"

namespace wicksos {

/// The invariant functional on the level-k component:
/// <omega_k, z^K zbar^L> = delta_{K,L} K! n!/(k+n)!.
/// Requires f homogeneous of bidegree (k, k); k is inferred from f.
GaussRat omega_k(const Poly& f);

/// sum_k hbar^k falling(mu/hbar, k) omega_k(f_k) over the homogeneous
/// components f_k. Requires f invariant, hbar > 0.
GaussRat omega_hbar_mu(const Poly& f, const Rat& hbar, const Rat& mu);

/// Averaging over the unitary group, computed level by level:
/// sum_k J^k omega_k(f_k). Idempotent. Requires f invariant.
Poly average(const Poly& f);

/// One weighted atom: a Gaussian-integer vector with its norm.
struct DesignAtom {
    Rat lambda;                // > 0
    std::vector<GaussRat> v;   // Gaussian-integer entries
    long norm = 0;             // sum |v_j|^2
};

/// Exact finite substitute for group averaging of single-row translates:
/// for every s <= m,
///   sum_j lambda_j N_j^{-s} (v_j.z)^s (conj(v_j).zb)^s = s! n!/(s+n)! J^s.
struct Design {
    int n = 1;
    unsigned m = 0;
    std::vector<DesignAtom> atoms;
};

/// Symbolically expands the design sums for all s <= m and compares exactly.
bool design_verify(const Design& d);

class DesignNotFound : public std::runtime_error {
public:
    explicit DesignNotFound(const std::string& msg) : std::runtime_error(msg) {}
};

/// Deterministic search: candidate Gaussian-integer vectors of bounded norm
/// (coordinate vectors first, then increasing norm), exact nonnegative
/// weight solve. Throws DesignNotFound when the pool up to norm_bound is
/// exhausted; never returns an unverified design.
Design design_find(int n, unsigned m, long norm_bound = 10);

/// Atom carrying two orthogonal rows of a (row-rescaled) unitary.
struct PairAtom {
    Rat lambda;
    std::vector<GaussRat> v, w;  // Gaussian-integer entries, <v, w> = 0
    long norm_v = 0, norm_w = 0;
};

/// Two-row refinement used by certificate generation. Averages translates
/// in which the second row always appears at full power k: for 0 <= a <= k,
///   sum_j lambda_j Nv^{-a} Nw^{-k} (v.z conj(v).zb)^a (w.z conj(w).zb)^k
///     = a! k! n!/(a+k+n)! J^{a+k},
/// together with sum_j lambda_j = 1.
struct PairDesign {
    int n = 1;
    unsigned k = 0;
    std::vector<PairAtom> atoms;
};

bool pair_design_verify(const PairDesign& d);
PairDesign pair_design_find(int n, unsigned k, long norm_bound = 10);

/// Canonical projective representatives of nonzero Gaussian-integer vectors
/// with norm <= bound, deterministically ordered.
std::vector<std::pair<std::vector<GaussRat>, long>> gaussian_vector_pool(int n, long bound);

}  // namespace wicksos

#endif
