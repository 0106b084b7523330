#ifndef WICKSOS_TEST_UTIL_HPP
#define WICKSOS_TEST_UTIL_HPP

#include <random>
#include <vector>

#include "wicksos/poly.hpp"
#include "wicksos/wick.hpp"

namespace wicksos::testutil {

using Rng = std::mt19937_64;

inline Rat rand_rat(Rng& rng, long maxnum = 9, long maxden = 9) {
    std::uniform_int_distribution<long> num(-maxnum, maxnum);
    std::uniform_int_distribution<long> den(1, maxden);
    return Rat(num(rng), den(rng));
}

inline Rat rand_rat_nonzero(Rng& rng, long maxnum = 9, long maxden = 9) {
    while (true) {
        Rat r = rand_rat(rng, maxnum, maxden);
        if (!r.is_zero()) return r;
    }
}

inline GaussRat rand_gauss(Rng& rng, long maxnum = 4, long maxden = 4) {
    return GaussRat(rand_rat(rng, maxnum, maxden), rand_rat(rng, maxnum, maxden));
}

inline MultiIndex rand_multiindex(Rng& rng, std::size_t len, unsigned total) {
    MultiIndex k(len, 0);
    std::uniform_int_distribution<std::size_t> pos(0, len - 1);
    for (unsigned j = 0; j < total; ++j) k[pos(rng)] += 1;
    return k;
}

inline Poly rand_monomial(Rng& rng, int n, unsigned maxdeg) {
    std::uniform_int_distribution<unsigned> deg(0, maxdeg);
    std::size_t len = (std::size_t)n + 1;
    return Poly::monomial(n, rand_multiindex(rng, len, deg(rng)),
                          rand_multiindex(rng, len, deg(rng)), rand_gauss(rng));
}

inline Poly rand_poly(Rng& rng, int n, unsigned terms, unsigned maxdeg) {
    Poly p(n);
    for (unsigned t = 0; t < terms; ++t) p += rand_monomial(rng, n, maxdeg);
    return p;
}

/// Random invariant element with levels <= maxlevel.
inline Poly rand_invariant(Rng& rng, int n, unsigned terms, unsigned maxlevel) {
    Poly p(n);
    std::uniform_int_distribution<unsigned> lvl(0, maxlevel);
    std::size_t len = (std::size_t)n + 1;
    for (unsigned t = 0; t < terms; ++t) {
        unsigned l = lvl(rng);
        p += Poly::monomial(n, rand_multiindex(rng, len, l), rand_multiindex(rng, len, l),
                            rand_gauss(rng));
    }
    return p;
}

inline Poly rand_hermitian_invariant(Rng& rng, int n, unsigned terms, unsigned maxlevel) {
    Poly p = rand_invariant(rng, n, terms, maxlevel);
    return p + p.conj();
}

/// Exact unitary: coordinate permutation composed with diagonal phases from
/// the fourth roots of unity.
inline GMatrix rand_unitary(Rng& rng, int n) {
    std::size_t d = (std::size_t)n + 1;
    std::vector<std::size_t> perm(d);
    for (std::size_t i = 0; i < d; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::uniform_int_distribution<int> ph(0, 3);
    GMatrix m(d, std::vector<GaussRat>(d));
    for (std::size_t i = 0; i < d; ++i) m[i][perm[i]] = GaussRat::i_pow(ph(rng));
    return m;
}

/// Independent slow route for the star product: literal derivative sums.
inline Poly wick_star_slow(const Poly& f, const Poly& g, const Rat& hbar) {
    int n = f.n();
    unsigned cap = std::min(f.max_antihol_degree(), g.max_hol_degree());
    Poly acc(n);
    std::vector<std::pair<Poly, Poly>> frontier{{f, g}};  // t-fold derivative pairs
    // t = 0 term
    acc += f * g;
    Rat hpow(1);
    std::vector<std::pair<Poly, Poly>> cur = std::move(frontier);
    for (unsigned t = 1; t <= cap; ++t) {
        hpow *= hbar;
        std::vector<std::pair<Poly, Poly>> next;
        for (const auto& [df, dg] : cur) {
            for (std::size_t j = 0; j < (std::size_t)n + 1; ++j)
                next.emplace_back(df.dzbar(j), dg.dz(j));
        }
        cur = std::move(next);
        Poly sum(n);
        for (const auto& [df, dg] : cur) sum += df * dg;
        acc += GaussRat(hpow / factorial(t)) * sum;
    }
    return acc;
}

/// Exact rational point on the unit momentum level set via the stereographic
/// chart of the real sphere S^{2n+1}.
inline std::vector<GaussRat> rand_unit_sphere_point(Rng& rng, int n) {
    std::size_t realdim = 2 * ((std::size_t)n + 1);
    std::vector<Rat> u(realdim - 1);
    for (auto& x : u) x = rand_rat(rng, 3, 3);
    Rat s(0);
    for (const auto& x : u) s += x * x;
    Rat denom = s + Rat(1);
    std::vector<Rat> coords(realdim);
    for (std::size_t j = 0; j + 1 < realdim; ++j) coords[j] = Rat(2) * u[j] / denom;
    coords[realdim - 1] = (s - Rat(1)) / denom;
    std::vector<GaussRat> w((std::size_t)n + 1);
    for (std::size_t j = 0; j < w.size(); ++j)
        w[j] = GaussRat(coords[2 * j], coords[2 * j + 1]);
    return w;
}

}  // namespace wicksos::testutil

#endif
