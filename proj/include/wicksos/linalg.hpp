#ifndef WICKSOS_LINALG_HPP
#define WICKSOS_LINALG_HPP

#include <optional>
#include <vector>

#include "wicksos/rational.hpp"

namespace wicksos {

/// Solve A x = b exactly (A may be tall / rank-deficient). Returns one
/// solution with free variables set to zero, or nothing if inconsistent.
std::optional<std::vector<GaussRat>> solve_exact(
    std::vector<std::vector<GaussRat>> a, std::vector<GaussRat> b);

/// Find x >= 0 with A x = b exactly, or nothing if infeasible.
/// Rows are first reduced to an independent subset, then a Phase-I simplex
/// with Bland's rule runs on the reduced system; fully deterministic.
std::optional<std::vector<Rat>> solve_nonnegative(
    std::vector<std::vector<Rat>> a, std::vector<Rat> b);

}  // namespace wicksos

#endif
