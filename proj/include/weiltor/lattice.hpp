#pragma once

#include <optional>
#include <vector>

#include "weiltor/numeric.hpp"

namespace weiltor {

/// Dense integer matrix, row major. Lattices are row spans.
struct int_matrix {
  size_t rows = 0, cols = 0;
  std::vector<Int> a;

  int_matrix() = default;
  int_matrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Int(0)) {}
  static int_matrix identity(size_t n);
  static int_matrix from_rows(const std::vector<std::vector<Int>>& rows_in);

  Int& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Int& at(size_t i, size_t j) const { return a[i * cols + j]; }
  std::vector<Int> row(size_t i) const;
  void append_row(const std::vector<Int>& r);

  bool operator==(const int_matrix&) const = default;
};

int_matrix operator*(const int_matrix& x, const int_matrix& y);
int_matrix transpose(const int_matrix& m);

struct hnf_result {
  int_matrix h;   ///< row HNF, zero rows at the bottom
  int_matrix u;   ///< unimodular, u * input = h
  size_t rank = 0;
  std::vector<size_t> pivot_cols;
};

/// Canonical row Hermite normal form (pivots positive, entries above pivots
/// reduced to [0, pivot)).
hnf_result hnf(const int_matrix& m);

/// Solves y * H = v for the echelon H of an hnf_result; zero rows get 0.
std::optional<std::vector<Int>> solve_hnf(const hnf_result& H, const std::vector<Int>& v);

/// Is v in the row span (over Z)? Optionally returns x with x * m = v.
bool in_lattice(const int_matrix& m, const std::vector<Int>& v,
                std::vector<Int>* coords = nullptr);

/// Basis (as rows) of {x : m * x^T = 0} over Z. Always saturated.
int_matrix kernel_rows(const int_matrix& m);

/// Saturation of the row span: (span tensor Q) intersected with Z^n.
int_matrix saturation(const int_matrix& m);

/// Basis of the intersection of two row lattices.
int_matrix lattice_intersection(const int_matrix& a, const int_matrix& b);

/// Equality of row lattices (via canonical HNF of nonzero rows).
bool lattice_equal(const int_matrix& a, const int_matrix& b);

size_t lattice_rank(const int_matrix& m);

struct snf_result {
  int_matrix d;   ///< diagonal, d_i | d_{i+1}
  int_matrix u;   ///< u * input * v = d
  int_matrix v;
  size_t rank = 0;
};

snf_result snf(const int_matrix& m);

struct lll_result {
  int_matrix basis;
  std::vector<Rat> gs_norms_sq;  ///< Gram-Schmidt norms of the reduced basis
};

/// Exact-arithmetic LLL with delta = 3/4. Rows must be linearly independent.
/// min(gs_norms_sq) is a rigorous lower bound on the squared length of any
/// nonzero lattice vector.
lll_result lll_reduce(const int_matrix& m);

}  // namespace weiltor
