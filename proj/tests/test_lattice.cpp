#include "doctest.h"
#include "weiltor/lattice.hpp"

using namespace weiltor;

namespace {
int_matrix from_rows(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<Int>> r;
  for (auto& row : rows) {
    std::vector<Int> x;
    for (long v : row) x.emplace_back(v);
    r.push_back(std::move(x));
  }
  return int_matrix::from_rows(r);
}
std::vector<Int> vec(std::vector<long> v) {
  std::vector<Int> x;
  for (long a : v) x.emplace_back(a);
  return x;
}
}  // namespace

TEST_CASE("hnf basics") {
  auto m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}});
  auto H = hnf(m);
  CHECK(H.rank == 3);
  // transform consistency: u * m = h
  CHECK(H.u * m == H.h);
  // pivots positive
  for (size_t i = 0; i < H.rank; ++i) CHECK(H.h.at(i, H.pivot_cols[i]) > 0);
}

TEST_CASE("membership and coordinates") {
  auto m = from_rows({{1, 2, 0}, {0, 4, 1}});
  std::vector<Int> coords;
  CHECK(in_lattice(m, vec({1, 6, 1}), &coords));
  REQUIRE(coords.size() == 2);
  CHECK(coords[0] * m.at(0, 0) + coords[1] * m.at(1, 0) == 1);
  CHECK(coords[0] * m.at(0, 1) + coords[1] * m.at(1, 1) == 6);
  CHECK(coords[0] * m.at(0, 2) + coords[1] * m.at(1, 2) == 1);
  CHECK(!in_lattice(m, vec({0, 1, 0})));
  CHECK(in_lattice(m, vec({0, 0, 0})));
}

TEST_CASE("kernel rows") {
  auto m = from_rows({{1, 2, 3}});
  auto k = kernel_rows(m);
  CHECK(k.rows == 2);
  for (size_t i = 0; i < k.rows; ++i) {
    Int dot = 0;
    for (size_t j = 0; j < 3; ++j) dot += m.at(0, j) * k.at(i, j);
    CHECK(dot == 0);
  }
  // full-rank square matrix has trivial kernel
  CHECK(kernel_rows(from_rows({{2, 0}, {0, 3}})).rows == 0);
}

TEST_CASE("saturation") {
  // span{(2,4)} saturates to span{(1,2)}
  auto sat = saturation(from_rows({{2, 4}}));
  CHECK(lattice_equal(sat, from_rows({{1, 2}})));
  // span{(2,0),(0,2)} saturates to Z^2
  auto sat2 = saturation(from_rows({{2, 0}, {0, 2}}));
  CHECK(lattice_equal(sat2, from_rows({{1, 0}, {0, 1}})));
}

TEST_CASE("lattice intersection") {
  // 2Z^2 intersect diagonal lattice {(a,a)} = {(2a,2a)}
  auto i = lattice_intersection(from_rows({{2, 0}, {0, 2}}), from_rows({{1, 1}}));
  CHECK(lattice_equal(i, from_rows({{2, 2}})));
  // even-sum sublattice of Z^2 intersect Z(1,0) = Z(2,0)
  auto even = from_rows({{1, 1}, {0, 2}});
  auto j = lattice_intersection(even, from_rows({{1, 0}}));
  CHECK(lattice_equal(j, from_rows({{2, 0}})));
}

TEST_CASE("snf") {
  auto m = from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  auto s = snf(m);
  CHECK(s.u * m * s.v == s.d);
  // divisibility chain
  for (size_t i = 0; i + 1 < s.rank; ++i) {
    CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
  }
  // pairing-relations example: rows {e1+e2, 2e3} over Z^3 -> diag(1, 2)
  auto pair_rel = from_rows({{1, 1, 0}, {0, 0, 2}});
  auto s2 = snf(pair_rel);
  CHECK(s2.rank == 2);
  CHECK(s2.d.at(0, 0) == 1);
  CHECK(s2.d.at(1, 1) == 2);
}

TEST_CASE("lll reduces and preserves the lattice") {
  auto m = from_rows({{1, 0, 0, 100007}, {0, 1, 0, 200014}, {0, 0, 1, 300021}});
  auto red = lll_reduce(m);
  CHECK(lattice_equal(m, red.basis));
  // the relation (2, -1, 0) + last coord 0 hides in this lattice; LLL must
  // surface a vector with tiny last coordinate
  Int best = 1000000;
  for (size_t i = 0; i < red.basis.rows; ++i) best = std::min(best, abs_int(red.basis.at(i, 3)));
  CHECK(best == 0);
  // GS lower bound is positive
  for (auto& g : red.gs_norms_sq) CHECK(g > 0);
}

TEST_CASE("lattice equality is basis independent") {
  auto a = from_rows({{1, 2}, {3, 4}});
  auto b = from_rows({{4, 6}, {3, 4}});  // row ops of a
  CHECK(lattice_equal(a, b));
  CHECK(!lattice_equal(a, from_rows({{2, 4}, {3, 4}})));
}
