#include "ikeda/arith/linalg.hpp"

namespace ikeda {

Poly<Rat> charpoly(const Matrix<Rat>& a) {
  std::size_t n = a.size();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  Matrix<Rat> m = zero_matrix<Rat>(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rat> am = matmul(a, m);
    for (std::size_t i = 0; i < n; ++i) am[i][i] += c[n - k + 1];
    m = std::move(am);
    Matrix<Rat> t = matmul(a, m);
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += t[i][i];
    c[n - k] = -tr / static_cast<long>(k);
  }
  return Poly<Rat>(std::move(c));
}

}  // namespace ikeda
