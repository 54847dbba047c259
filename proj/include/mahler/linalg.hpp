#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace mahler {

using RatMatrix = std::vector<std::vector<mpq_class>>;

// reduced row echelon form in place; returns pivot columns
std::vector<size_t> rref(RatMatrix &A, size_t cols);

// some solution of A x = b, or nothing if inconsistent
std::optional<std::vector<mpq_class>> solve_linear(const RatMatrix &A,
                                                   const std::vector<mpq_class> &b);

// basis of the right kernel, one vector per free column in increasing order
std::vector<std::vector<mpq_class>> nullspace(const RatMatrix &A, size_t cols);

} // namespace mahler
