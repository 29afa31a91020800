#include "doctest.h"
#include "oracles.hpp"
#include "weiltor/matrix.hpp"

using namespace weiltor;
using namespace weiltor::testing;

namespace {
rat_matrix from_rows(std::vector<std::vector<int>> rows) {
  rat_matrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < m.rows; ++i)
    for (size_t j = 0; j < m.cols; ++j) m.at(i, j) = Rat(rows[i][j]);
  return m;
}
}  // namespace

TEST_CASE("det and rank") {
  CHECK(det(from_rows({{1, 1}, {0, 2}})) == 2);
  CHECK(det(from_rows({{1, 2}, {2, 4}})) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(rat_matrix::identity(4)) == 4);
}

TEST_CASE("charpoly from power sums matches spec examples") {
  // s = (3,5) -> t^2 - 3t + 2
  auto c = charpoly_from_power_sums({Rat(3), Rat(5)});
  CHECK(c == std::vector<Rat>{Rat(2), Rat(-3)});
  // s = (3,3,3) -> (t-1)^3 = t^3 - 3t^2 + 3t - 1
  auto c2 = charpoly_from_power_sums({Rat(3), Rat(3), Rat(3)});
  CHECK(c2 == std::vector<Rat>{Rat(-1), Rat(3), Rat(-3)});
  // s = (0, -2q), q = 2 -> t^2 + 2 (eigenvalues +-sqrt(-2))
  auto c3 = charpoly_from_power_sums({Rat(0), Rat(-4)});
  CHECK(c3 == std::vector<Rat>{Rat(2), Rat(0)});
}

TEST_CASE("antisymmetrizer trace examples") {
  rat_matrix d = from_rows({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(antisymmetrizer_trace(d, 2) == 11);  // e_2(1,2,3)
  CHECK(antisymmetrizer_trace(rat_matrix::identity(4), 4) == 1);
  CHECK_THROWS(antisymmetrizer_trace(d, 4));
}

TEST_CASE("trace identities on random matrices") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 30; ++trial) {
    size_t n = 2 + trial % 5;
    rat_matrix m = random_int_matrix(rng, n);
    auto cp = charpoly(m);
    auto oracle = charpoly_by_interpolation(m);
    CHECK(cp == oracle);

    // power sums from actual traces of powers
    std::vector<Rat> s;
    rat_matrix pw = m;
    for (size_t k = 1; k <= n; ++k) {
      s.push_back(trace(pw));
      if (k < n) pw = pw * m;
    }
    auto c = charpoly_from_power_sums(s);
    for (size_t i = 0; i < n; ++i) CHECK(c[i] == cp[i]);

    // antisymmetrizer trace equals principal minor sums and the charpoly
    // coefficient identity c_{r-i} = (-1)^i Tr(wedge^i)
    for (unsigned i = 1; i <= n; ++i) {
      Rat e = antisymmetrizer_trace(m, i);
      CHECK(e == principal_minor_sum(m, i));
      Rat from_cp = (i % 2) ? -cp[n - i] : cp[n - i];
      CHECK(e == from_cp);
    }
  }
}

TEST_CASE("semisimplicity transfer for paired eigenvalues") {
  // alpha with eigenvalue pairs (a, q/a), q = 2, a = 1: eigenvalues 1,1,2,2.
  // Jordan block at 1 => eigenvalue q of alpha (x) alpha is not semisimple.
  rat_matrix jordan = from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  rat_matrix diag = from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}});
  CHECK(!eigenvalue_semisimple(jordan, Rat(1)));
  CHECK(eigenvalue_semisimple(diag, Rat(1)));

  rat_matrix jj = kronecker(jordan, jordan);
  rat_matrix dd = kronecker(diag, diag);
  CHECK(!eigenvalue_semisimple(jj, Rat(2)));
  CHECK(eigenvalue_semisimple(dd, Rat(2)));

  // a CM-style rotation block: t^2 - t + 2 companion, pairs multiply to q=2
  rat_matrix comp = from_rows({{0, -2}, {1, 1}});
  CHECK(eigenvalue_semisimple(kronecker(comp, comp), Rat(2)));
}

TEST_CASE("kronecker shape") {
  rat_matrix a = from_rows({{1, 2}, {3, 4}});
  rat_matrix b = rat_matrix::identity(3);
  rat_matrix k = kronecker(a, b);
  CHECK(k.rows == 6);
  CHECK(trace(k) == 15);
}
