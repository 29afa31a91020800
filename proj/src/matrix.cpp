#include "weiltor/matrix.hpp"

namespace weiltor {

rat_matrix rat_matrix::identity(size_t n) {
  rat_matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

rat_matrix operator*(const rat_matrix& x, const rat_matrix& y) {
  if (x.cols != y.rows) throw internal_error("matrix product shape mismatch");
  rat_matrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

rat_matrix operator-(const rat_matrix& x, const rat_matrix& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw internal_error("matrix shape mismatch");
  rat_matrix r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

rat_matrix scalar_mul(const rat_matrix& x, const Rat& s) {
  rat_matrix r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

rat_matrix kronecker(const rat_matrix& x, const rat_matrix& y) {
  rat_matrix r(x.rows * y.rows, x.cols * y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) {
      if (x.at(i, j) == 0) continue;
      for (size_t k = 0; k < y.rows; ++k)
        for (size_t l = 0; l < y.cols; ++l)
          r.at(i * y.rows + k, j * y.cols + l) = x.at(i, j) * y.at(k, l);
    }
  return r;
}

Rat trace(const rat_matrix& m) {
  if (m.rows != m.cols) throw internal_error("trace of non-square matrix");
  Rat t = 0;
  for (size_t i = 0; i < m.rows; ++i) t += m.at(i, i);
  return t;
}

Rat det(rat_matrix m) {
  if (m.rows != m.cols) throw internal_error("det of non-square matrix");
  size_t n = m.rows;
  Rat d = 1;
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && m.at(piv, col) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      for (size_t j = 0; j < n; ++j) std::swap(m.at(piv, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rat inv = Rat(1) / m.at(col, col);
    for (size_t i = col + 1; i < n; ++i) {
      Rat f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (size_t j = col; j < n; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

size_t rank(rat_matrix m) {
  size_t r = 0;
  for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
    size_t piv = r;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != r)
      for (size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(r, j));
    Rat inv = Rat(1) / m.at(r, col);
    for (size_t i = r + 1; i < m.rows; ++i) {
      Rat f = m.at(i, col) * inv;
      if (f == 0) continue;
      for (size_t j = col; j < m.cols; ++j) m.at(i, j) -= f * m.at(r, j);
    }
    ++r;
  }
  return r;
}

std::vector<Rat> charpoly(const rat_matrix& m) {
  if (m.rows != m.cols) throw internal_error("charpoly of non-square matrix");
  size_t n = m.rows;
  // Faddeev-LeVerrier: M_1 = M, c_{n-1} = -tr M_1, M_{k+1} = M (M_k + c_{n-k} I)
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  rat_matrix mk = m;
  for (size_t k = 1; k <= n; ++k) {
    Rat ck = -trace(mk) / Rat(Int(k));
    c[n - k] = ck;
    if (k < n) {
      rat_matrix t = mk;
      for (size_t i = 0; i < n; ++i) t.at(i, i) += ck;
      mk = m * t;
    }
  }
  return c;
}

std::vector<Rat> charpoly_from_power_sums(const std::vector<Rat>& s) {
  if (s.empty()) throw internal_error("charpoly_from_power_sums: empty power sums");
  return poly_from_power_sums(s);
}

Rat antisymmetrizer_trace(const rat_matrix& m, unsigned i) {
  if (m.rows != m.cols) throw internal_error("antisymmetrizer_trace: non-square");
  if (i > m.rows) throw internal_error("antisymmetrizer_trace: index exceeds dimension");
  if (i == 0) return 1;
  // e_i(eigenvalues) = (-1)^i c_{n-i} of the monic characteristic polynomial
  std::vector<Rat> c = charpoly(m);
  Rat v = c[m.rows - i];
  return (i % 2) ? -v : v;
}

bool eigenvalue_semisimple(const rat_matrix& m, const Rat& lambda) {
  if (m.rows != m.cols) throw internal_error("eigenvalue_semisimple: non-square");
  rat_matrix s = m;
  for (size_t i = 0; i < m.rows; ++i) s.at(i, i) -= lambda;
  size_t r1 = rank(s);
  size_t r2 = rank(s * s);
  return r1 == r2;
}

}  // namespace weiltor
