#pragma once

#include <optional>
#include <vector>

#include "bethe/rational.hpp"

namespace bethe {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major, rectangular

struct AffineSolution {
    RationalVector particular;               // one exact solution of M x = b
    std::vector<RationalVector> null_basis;  // basis of { x : M x = 0 }
};

/*
 * Exact Gauss-Jordan elimination over Q. Returns nullopt when the system
 * is inconsistent; otherwise a particular solution (free variables set to
 * zero) and a basis of the null space, one vector per free column.
 * Pivoting is by first nonzero entry, so the output is deterministic.
 */
std::optional<AffineSolution> solve_affine_linear(const RationalMatrix& M, const RationalVector& b);

}  // namespace bethe
