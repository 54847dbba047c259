#include "mahler/linalg.hpp"

namespace mahler {

std::vector<size_t> rref(RatMatrix &A, size_t cols) {
  std::vector<size_t> pivots;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < A.size(); ++c) {
    size_t sel = row;
    while (sel < A.size() && A[sel][c] == 0)
      ++sel;
    if (sel == A.size())
      continue;
    std::swap(A[sel], A[row]);
    mpq_class inv = 1 / A[row][c];
    for (auto &x : A[row])
      x *= inv;
    for (size_t r = 0; r < A.size(); ++r) {
      if (r == row || A[r][c] == 0)
        continue;
      mpq_class f = A[r][c];
      for (size_t k = 0; k < A[r].size(); ++k)
        A[r][k] -= f * A[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

std::optional<std::vector<mpq_class>> solve_linear(const RatMatrix &A,
                                                   const std::vector<mpq_class> &b) {
  size_t cols = A.empty() ? 0 : A[0].size();
  RatMatrix aug = A;
  for (size_t i = 0; i < aug.size(); ++i)
    aug[i].push_back(b[i]);
  auto piv = rref(aug, cols + 1);
  if (!piv.empty() && piv.back() == cols)
    return std::nullopt;
  std::vector<mpq_class> x(cols, mpq_class(0));
  for (size_t r = 0; r < piv.size(); ++r)
    x[piv[r]] = aug[r][cols];
  return x;
}

std::vector<std::vector<mpq_class>> nullspace(const RatMatrix &A, size_t cols) {
  RatMatrix R = A;
  auto piv = rref(R, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : piv)
    is_pivot[c] = true;
  std::vector<std::vector<mpq_class>> basis;
  for (size_t f = 0; f < cols; ++f) {
    if (is_pivot[f])
      continue;
    std::vector<mpq_class> v(cols, mpq_class(0));
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r)
      v[piv[r]] = -R[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace mahler
