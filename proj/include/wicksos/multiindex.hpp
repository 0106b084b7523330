#ifndef WICKSOS_MULTIINDEX_HPP
#define WICKSOS_MULTIINDEX_HPP

#include <cstdint>
#include <vector>

#include "wicksos/rational.hpp"

namespace wicksos {

/// Exponent vector over the 1+n coordinates.
using MultiIndex = std::vector<std::uint32_t>;

inline unsigned mi_abs(const MultiIndex& k) {
    unsigned s = 0;
    for (auto e : k) s += e;
    return s;
}

/// K! = prod K_j!
inline Rat mi_factorial(const MultiIndex& k) {
    Rat r(1);
    for (auto e : k) r *= factorial(e);
    return r;
}

/// Lexicographic comparison, entry by entry.
inline int mi_lex_cmp(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] != b[j]) return a[j] < b[j] ? -1 : 1;
    }
    return 0;
}

inline bool mi_le(const MultiIndex& a, const MultiIndex& b) {
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] > b[j]) return false;
    return true;
}

inline MultiIndex mi_add(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] += b[j];
    return r;
}

/// a - b; requires b <= a componentwise.
inline MultiIndex mi_sub(const MultiIndex& a, const MultiIndex& b) {
    MultiIndex r(a);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] -= b[j];
    return r;
}

inline MultiIndex mi_unit(std::size_t len, std::size_t j) {
    MultiIndex r(len, 0);
    r[j] = 1;
    return r;
}

/// All multi-indices of length len with |K| = total, ordered lex descending
/// (z0-heavy first). This is the basis order used for Fock matrices.
std::vector<MultiIndex> multiindices(std::size_t len, unsigned total);

}  // namespace wicksos

#endif
