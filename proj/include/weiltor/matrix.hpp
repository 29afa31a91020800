#pragma once

#include <vector>

#include "weiltor/intpoly.hpp"
#include "weiltor/numeric.hpp"

namespace weiltor {

/// Dense rational matrix, row major.
struct rat_matrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  rat_matrix() = default;
  rat_matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  static rat_matrix identity(size_t n);

  Rat& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Rat& at(size_t i, size_t j) const { return a[i * cols + j]; }

  bool operator==(const rat_matrix&) const = default;
};

rat_matrix operator*(const rat_matrix& x, const rat_matrix& y);
rat_matrix operator-(const rat_matrix& x, const rat_matrix& y);
rat_matrix scalar_mul(const rat_matrix& x, const Rat& s);
rat_matrix kronecker(const rat_matrix& x, const rat_matrix& y);

Rat trace(const rat_matrix& m);
Rat det(rat_matrix m);  // Gaussian elimination over Q
size_t rank(rat_matrix m);

/// Characteristic polynomial of a square matrix, monic in t
/// (Faddeev-LeVerrier). Returned ascending: c_0, ..., c_{n-1}, 1.
std::vector<Rat> charpoly(const rat_matrix& m);

/// Coefficients c_0..c_{r-1} of P(t) = t^r + c_{r-1} t^{r-1} + ... + c_0
/// given the power sums s_k = Tr(alpha^k), k = 1..r.
/// Encodes c_{r-i} = (-1)^i e_i(eigenvalues).
std::vector<Rat> charpoly_from_power_sums(const std::vector<Rat>& s);

/// Trace of the antisymmetrized i-th tensor power: the i-th elementary
/// symmetric function of the eigenvalues, equal to the sum of the principal
/// i x i minors. Throws if i exceeds the dimension.
Rat antisymmetrizer_trace(const rat_matrix& m, unsigned i);

/// True iff the eigenvalue lambda of m is semisimple: ker(m - lambda) equals
/// ker((m - lambda)^2).
bool eigenvalue_semisimple(const rat_matrix& m, const Rat& lambda);

}  // namespace weiltor
