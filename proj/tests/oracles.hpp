#pragma once

// Test-side oracles kept independent of the library's computation paths.

#include <random>
#include <vector>

#include "weiltor/intpoly.hpp"
#include "weiltor/matrix.hpp"

namespace weiltor::testing {

/// det(tI - M) by evaluation at n+1 points and Lagrange interpolation.
/// Independent of the Faddeev-LeVerrier path.
inline std::vector<Rat> charpoly_by_interpolation(const rat_matrix& m) {
  size_t n = m.rows;
  std::vector<Rat> xs(n + 1), ys(n + 1);
  for (size_t k = 0; k <= n; ++k) {
    xs[k] = Rat(Int(k));
    rat_matrix s(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) s.at(i, j) = (i == j ? xs[k] : Rat(0)) - m.at(i, j);
    ys[k] = det(s);
  }
  // Lagrange, assembled coefficient-wise with rat_poly arithmetic
  rat_poly acc;
  for (size_t k = 0; k <= n; ++k) {
    rat_poly term({ys[k]});
    for (size_t j = 0; j <= n; ++j) {
      if (j == k) continue;
      rat_poly lin({-xs[j], Rat(1)});
      term = term * lin * (Rat(1) / (xs[k] - xs[j]));
    }
    acc = acc + term;
  }
  std::vector<Rat> c(n + 1, Rat(0));
  for (size_t i = 0; i < acc.c.size(); ++i) c[i] = acc.c[i];
  return c;
}

/// Sum of principal i x i minors by explicit subset enumeration.
inline Rat principal_minor_sum(const rat_matrix& m, unsigned i) {
  size_t n = m.rows;
  std::vector<size_t> idx(i);
  Rat total = 0;
  // enumerate i-subsets of {0..n-1}
  std::vector<size_t> sel;
  struct rec_t {
    const rat_matrix& m;
    unsigned i;
    Rat& total;
    void go(std::vector<size_t>& sel, size_t start) {
      if (sel.size() == i) {
        rat_matrix sub(i, i);
        for (size_t a = 0; a < i; ++a)
          for (size_t b = 0; b < i; ++b) sub.at(a, b) = m.at(sel[a], sel[b]);
        total += det(sub);
        return;
      }
      for (size_t k = start; k < m.rows; ++k) {
        sel.push_back(k);
        go(sel, k + 1);
        sel.pop_back();
      }
    }
  } rec{m, i, total};
  rec.go(sel, 0);
  (void)idx;
  return total;
}

inline rat_matrix random_int_matrix(std::mt19937& rng, size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> dist(lo, hi);
  rat_matrix m(n, n);
  for (auto& v : m.a) v = Rat(dist(rng));
  return m;
}

}  // namespace weiltor::testing
