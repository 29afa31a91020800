#include "weiltor/lattice.hpp"

#include <algorithm>

namespace weiltor {

int_matrix int_matrix::identity(size_t n) {
  int_matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int_matrix int_matrix::from_rows(const std::vector<std::vector<Int>>& rows_in) {
  int_matrix m;
  if (rows_in.empty()) return m;
  m.rows = rows_in.size();
  m.cols = rows_in[0].size();
  m.a.reserve(m.rows * m.cols);
  for (const auto& r : rows_in) {
    if (r.size() != m.cols) throw internal_error("from_rows: ragged rows");
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  return m;
}

std::vector<Int> int_matrix::row(size_t i) const {
  return std::vector<Int>(a.begin() + i * cols, a.begin() + (i + 1) * cols);
}

void int_matrix::append_row(const std::vector<Int>& r) {
  if (rows == 0 && cols == 0) cols = r.size();
  if (r.size() != cols) throw internal_error("append_row: wrong width");
  a.insert(a.end(), r.begin(), r.end());
  ++rows;
}

int_matrix operator*(const int_matrix& x, const int_matrix& y) {
  if (x.cols != y.rows) throw internal_error("int matrix product shape mismatch");
  int_matrix r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t k = 0; k < x.cols; ++k) {
      const Int& v = x.at(i, k);
      if (v == 0) continue;
      for (size_t j = 0; j < y.cols; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

int_matrix transpose(const int_matrix& m) {
  int_matrix r(m.cols, m.rows);
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) r.at(j, i) = m.at(i, j);
  return r;
}

namespace {

void swap_rows(int_matrix& m, size_t i, size_t j) {
  if (i == j) return;
  for (size_t k = 0; k < m.cols; ++k) std::swap(m.at(i, k), m.at(j, k));
}

// row_i -= f * row_j
void row_axpy(int_matrix& m, size_t i, size_t j, const Int& f) {
  if (f == 0) return;
  for (size_t k = 0; k < m.cols; ++k) m.at(i, k) -= f * m.at(j, k);
}

}  // namespace

hnf_result hnf(const int_matrix& m) {
  hnf_result res;
  res.h = m;
  res.u = int_matrix::identity(m.rows);
  int_matrix& h = res.h;
  int_matrix& u = res.u;
  size_t r = 0;
  for (size_t col = 0; col < m.cols && r < m.rows; ++col) {
    // gcd all entries below (and at) r in this column into row r
    size_t nz = r;
    while (nz < h.rows && h.at(nz, col) == 0) ++nz;
    if (nz == h.rows) continue;
    swap_rows(h, r, nz);
    swap_rows(u, r, nz);
    for (size_t i = r + 1; i < h.rows; ++i) {
      while (h.at(i, col) != 0) {
        Int q = h.at(r, col) / h.at(i, col);  // truncated division
        row_axpy(h, r, i, q);
        row_axpy(u, r, i, q);
        swap_rows(h, r, i);
        swap_rows(u, r, i);
      }
    }
    if (h.at(r, col) < 0) {
      for (size_t k = 0; k < h.cols; ++k) h.at(r, k) = -h.at(r, k);
      for (size_t k = 0; k < u.cols; ++k) u.at(r, k) = -u.at(r, k);
    }
    // reduce entries above the pivot
    const Int& piv = h.at(r, col);
    for (size_t i = 0; i < r; ++i) {
      Int q = h.at(i, col) / piv;
      // floor division for canonical range [0, piv)
      if (h.at(i, col) - q * piv < 0) q -= 1;
      row_axpy(h, i, r, q);
      row_axpy(u, i, r, q);
    }
    res.pivot_cols.push_back(col);
    ++r;
  }
  res.rank = r;
  return res;
}

std::optional<std::vector<Int>> solve_hnf(const hnf_result& H, const std::vector<Int>& v) {
  if (v.size() != H.h.cols) throw internal_error("solve_hnf: dimension mismatch");
  std::vector<Int> rem = v;
  std::vector<Int> y(H.h.rows, Int(0));
  for (size_t i = 0; i < H.rank; ++i) {
    size_t pc = H.pivot_cols[i];
    const Int& piv = H.h.at(i, pc);
    if (rem[pc] % piv != 0) return std::nullopt;
    Int f = rem[pc] / piv;
    y[i] = f;
    if (f != 0)
      for (size_t k = 0; k < H.h.cols; ++k) rem[k] -= f * H.h.at(i, k);
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return y;
}

bool in_lattice(const int_matrix& m, const std::vector<Int>& v, std::vector<Int>* coords) {
  if (m.rows == 0) {
    for (const auto& x : v)
      if (x != 0) return false;
    if (coords) coords->assign(0, Int(0));
    return true;
  }
  hnf_result H = hnf(m);
  auto y = solve_hnf(H, v);
  if (!y) return false;
  if (coords) {
    // x = y * U
    coords->assign(m.rows, Int(0));
    for (size_t j = 0; j < m.rows; ++j) {
      Int acc = 0;
      for (size_t i = 0; i < m.rows; ++i) acc += (*y)[i] * H.u.at(i, j);
      (*coords)[j] = acc;
    }
  }
  return true;
}

int_matrix kernel_rows(const int_matrix& m) {
  // left kernel of m^T equals {x : m x^T = 0}; HNF transform rows on the
  // zero rows of H form a basis.
  int_matrix t = transpose(m);
  hnf_result H = hnf(t);
  int_matrix out(0, 0);
  out.cols = m.cols;
  for (size_t i = H.rank; i < H.h.rows; ++i) out.append_row(H.u.row(i));
  return out;
}

int_matrix saturation(const int_matrix& m) {
  int_matrix k = kernel_rows(m);
  if (k.rows == 0) {
    // full rank: saturation is Z^n
    return int_matrix::identity(m.cols);
  }
  return kernel_rows(k);
}

int_matrix lattice_intersection(const int_matrix& a, const int_matrix& b) {
  // kernel of (c_a, c_b) -> c_a A - c_b B, then map back through A
  int_matrix stacked(a.rows + b.rows, a.cols);
  for (size_t i = 0; i < a.rows; ++i)
    for (size_t j = 0; j < a.cols; ++j) stacked.at(i, j) = a.at(i, j);
  for (size_t i = 0; i < b.rows; ++i)
    for (size_t j = 0; j < b.cols; ++j) stacked.at(a.rows + i, j) = -b.at(i, j);
  // left kernel of `stacked`
  int_matrix lk = kernel_rows(transpose(stacked));
  int_matrix out(0, 0);
  out.cols = a.cols;
  for (size_t i = 0; i < lk.rows; ++i) {
    std::vector<Int> x(a.cols, Int(0));
    for (size_t r = 0; r < a.rows; ++r)
      for (size_t j = 0; j < a.cols; ++j) x[j] += lk.at(i, r) * a.at(r, j);
    bool nonzero = false;
    for (const auto& v : x) nonzero = nonzero || v != 0;
    if (nonzero) out.append_row(x);
  }
  // canonicalize
  hnf_result H = hnf(out);
  int_matrix res(0, 0);
  res.cols = a.cols;
  for (size_t i = 0; i < H.rank; ++i) res.append_row(H.h.row(i));
  return res;
}

bool lattice_equal(const int_matrix& a, const int_matrix& b) {
  hnf_result ha = hnf(a), hb = hnf(b);
  if (ha.rank != hb.rank) return false;
  for (size_t i = 0; i < ha.rank; ++i)
    if (ha.h.row(i) != hb.h.row(i)) return false;
  return true;
}

size_t lattice_rank(const int_matrix& m) { return hnf(m).rank; }

snf_result snf(const int_matrix& m) {
  snf_result res;
  res.d = m;
  res.u = int_matrix::identity(m.rows);
  res.v = int_matrix::identity(m.cols);
  int_matrix& d = res.d;
  int_matrix& u = res.u;
  int_matrix& v = res.v;

  auto col_axpy = [&](int_matrix& mm, size_t j, size_t k, const Int& f) {
    if (f == 0) return;
    for (size_t i = 0; i < mm.rows; ++i) mm.at(i, j) -= f * mm.at(i, k);
  };
  auto swap_cols = [&](int_matrix& mm, size_t j, size_t k) {
    if (j == k) return;
    for (size_t i = 0; i < mm.rows; ++i) std::swap(mm.at(i, j), mm.at(i, k));
  };

  size_t t = 0;
  while (t < d.rows && t < d.cols) {
    // find a nonzero pivot in the submatrix
    size_t pi = t, pj = t;
    bool found = false;
    for (size_t i = t; i < d.rows && !found; ++i)
      for (size_t j = t; j < d.cols && !found; ++j)
        if (d.at(i, j) != 0) { pi = i; pj = j; found = true; }
    if (!found) break;
    swap_rows(d, t, pi);
    swap_rows(u, t, pi);
    swap_cols(d, t, pj);
    swap_cols(v, t, pj);
    // eliminate row and column t
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (size_t i = t + 1; i < d.rows; ++i) {
        while (d.at(i, t) != 0) {
          Int q = d.at(t, t) / d.at(i, t);
          row_axpy(d, t, i, q);
          row_axpy(u, t, i, q);
          swap_rows(d, t, i);
          swap_rows(u, t, i);
          dirty = true;
        }
      }
      for (size_t j = t + 1; j < d.cols; ++j) {
        while (d.at(t, j) != 0) {
          Int q = d.at(t, t) / d.at(t, j);
          col_axpy(d, t, j, q);
          col_axpy(v, t, j, q);
          swap_cols(d, t, j);
          swap_cols(v, t, j);
          dirty = true;
        }
      }
    }
    if (d.at(t, t) < 0) {
      for (size_t i = 0; i < d.rows; ++i) d.at(i, t) = -d.at(i, t);
      for (size_t i = 0; i < v.rows; ++i) v.at(i, t) = -v.at(i, t);
    }
    ++t;
  }
  // enforce divisibility chain
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i + 1 < t; ++i) {
      if (d.at(i + 1, i + 1) % d.at(i, i) != 0) {
        // add column i+1 to column i, re-eliminate the 2x2 block
        for (size_t r = 0; r < d.rows; ++r) d.at(r, i) += d.at(r, i + 1);
        for (size_t r = 0; r < v.rows; ++r) v.at(r, i) += v.at(r, i + 1);
        // now d has entries at (i,i) and (i+1,i); gcd them
        while (d.at(i + 1, i) != 0) {
          Int q = d.at(i, i) / d.at(i + 1, i);
          row_axpy(d, i, i + 1, q);
          row_axpy(u, i, i + 1, q);
          swap_rows(d, i, i + 1);
          swap_rows(u, i, i + 1);
        }
        // clear (i, i+1)
        while (d.at(i, i + 1) != 0) {
          Int q = d.at(i, i + 1) / d.at(i, i);
          col_axpy(d, i + 1, i, q);
          col_axpy(v, i + 1, i, q);
        }
        if (d.at(i, i) < 0) {
          for (size_t r = 0; r < d.rows; ++r) d.at(r, i) = -d.at(r, i);
          for (size_t r = 0; r < v.rows; ++r) v.at(r, i) = -v.at(r, i);
        }
        if (d.at(i + 1, i + 1) < 0) {
          for (size_t r = 0; r < d.rows; ++r) d.at(r, i + 1) = -d.at(r, i + 1);
          for (size_t r = 0; r < v.rows; ++r) v.at(r, i + 1) = -v.at(r, i + 1);
        }
        changed = true;
      }
    }
  }
  res.rank = 0;
  for (size_t i = 0; i < t; ++i)
    if (d.at(i, i) != 0) ++res.rank;
  return res;
}

lll_result lll_reduce(const int_matrix& m) {
  size_t n = m.rows;
  int_matrix b = m;
  if (n == 0) return {b, {}};

  auto dot = [&](size_t i, size_t j) {
    Rat s = 0;
    for (size_t k = 0; k < b.cols; ++k) s += Rat(b.at(i, k)) * Rat(b.at(j, k));
    return s;
  };

  std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
  std::vector<Rat> bstar(n, Rat(0));  // squared GS norms

  auto gram_schmidt = [&]() {
    // b*_i . b*_i and mu via the recurrence on inner products
    std::vector<std::vector<Rat>> inner(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j <= i; ++j) inner[i][j] = dot(i, j);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < i; ++j) {
        Rat s = inner[i][j];
        for (size_t k = 0; k < j; ++k) s -= mu[i][k] * mu[j][k] * bstar[k];
        if (bstar[j] == 0) throw internal_error("lll: dependent rows");
        mu[i][j] = s / bstar[j];
      }
      Rat s = inner[i][i];
      for (size_t k = 0; k < i; ++k) s -= mu[i][k] * mu[i][k] * bstar[k];
      bstar[i] = s;
      if (bstar[i] == 0) throw internal_error("lll: dependent rows");
    }
  };

  auto size_reduce = [&](size_t k, size_t j) {
    // round mu[k][j] to nearest integer
    Rat mkj = mu[k][j];
    Int q = num(mkj) / den(mkj);
    Rat frac = mkj - Rat(q);
    if (frac > Rat(1, 2)) q += 1;
    if (frac < Rat(-1, 2)) q -= 1;
    if (q == 0) return;
    for (size_t c = 0; c < b.cols; ++c) b.at(k, c) -= q * b.at(j, c);
  };

  const Rat delta(3, 4);
  gram_schmidt();
  size_t k = 1;
  while (k < n) {
    for (size_t j = k; j-- > 0;) size_reduce(k, j);
    gram_schmidt();
    if (bstar[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      ++k;
    } else {
      swap_rows(b, k, k - 1);
      gram_schmidt();
      k = std::max<size_t>(k - 1, 1);
    }
  }
  return {b, bstar};
}

}  // namespace weiltor
