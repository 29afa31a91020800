#include "doctest.h"
#include "weiltor/factor.hpp"

using namespace weiltor;

namespace {
int_poly expand(const std::vector<std::pair<int_poly, int>>& fac) {
  int_poly p = int_poly::one();
  for (auto& [f, m] : fac)
    for (int i = 0; i < m; ++i) p = p * f;
  return p;
}
}  // namespace

TEST_CASE("distinct rational roots") {
  // t^2 - 3t + 2 = (t-1)(t-2)
  auto fac = factor_rational(int_poly::from({2, -3, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(fac[0].first == int_poly::from({-2, 1}));
  CHECK(fac[1].first == int_poly::from({-1, 1}));
}

TEST_CASE("t^4 - 4 splits into two quadratics") {
  auto fac = factor_rational(int_poly::from({-4, 0, 0, 0, 1}));
  REQUIRE(fac.size() == 2);
  CHECK(expand(fac) == int_poly::from({-4, 0, 0, 0, 1}));
  for (auto& [f, m] : fac) {
    CHECK(f.degree() == 2);
    CHECK(m == 1);
  }
}

TEST_CASE("repeated factor via squarefree decomposition") {
  int_poly f = int_poly::from({2, -1, 1});
  auto fac = factor_rational(f * f);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == f);
  CHECK(fac[0].second == 2);
}

TEST_CASE("irreducibility") {
  CHECK(is_irreducible_q(int_poly::from({2, -1, 1})));
  CHECK(is_irreducible_q(int_poly::from({1, 1, 1, 1, 1})));   // Phi_5
  CHECK(is_irreducible_q(int_poly::from({4, -3, 0, 1})));     // no rational root, cubic
  CHECK(!is_irreducible_q(int_poly::from({-4, 0, 0, 0, 1})));
  CHECK(is_irreducible_q(int_poly::from({4, 0, -3, 0, 1})));  // biquadratic CM field
}

TEST_CASE("powers of t and content") {
  // 6t^3 + 6t^2 = 6 t^2 (t+1)
  auto fac = factor_rational(int_poly::from({0, 0, 6, 6}));
  int_poly rebuilt = expand(fac);
  CHECK(rebuilt == int_poly::from({0, 0, 1, 1}));
}

TEST_CASE("non-monic input") {
  // (2t+1)(3t-5)
  int_poly f = int_poly::from({1, 2}) * int_poly::from({-5, 3});
  auto fac = factor_rational(f);
  REQUIRE(fac.size() == 2);
  CHECK(expand(fac) == f);
}

TEST_CASE("round trip on products of weil-style quadratics") {
  int_poly f = int_poly::from({2, -1, 1}) * int_poly::from({2, 1, 1}) *
               int_poly::from({2, -2, 1}) * int_poly::from({3, 0, 1});
  auto fac = factor_rational(f);
  CHECK(fac.size() == 4);
  CHECK(expand(fac) == f);
  for (auto& [g, m] : fac) CHECK(m == 1);
}

TEST_CASE("degree 22 weil-style product factors quickly") {
  // K3-like: (t^2 - t + 9) * middle factors (t^2 - 3bt + 9)^k, q = 3
  int_poly f = int_poly::from({9, -1, 1});
  int_poly m0 = int_poly::from({9, 0, 1});
  int_poly m1 = int_poly::from({9, -3, 1});
  int_poly m2 = int_poly::from({9, 3, 1});
  int_poly prod = f;
  for (int i = 0; i < 4; ++i) prod = prod * m0;
  for (int i = 0; i < 3; ++i) prod = prod * m1 * m2;
  CHECK(prod.degree() == 22);
  auto fac = factor_rational(prod);
  CHECK(expand(fac) == prod);
  REQUIRE(fac.size() == 4);
}

TEST_CASE("hensel pair lift") {
  // f = (t-1)(t-2) mod 5^k
  int_poly f = int_poly::from({2, -3, 1});
  auto [g, h] = hensel_lift_pair(f, zpoly(5, {4, 1}), zpoly(5, {3, 1}), Int(5), Int(100000));
  // g = t - 1 exactly after symmetric reduction (roots are rational)
  CHECK(g == int_poly::from({-1, 1}));
  CHECK(h == int_poly::from({-2, 1}));

  // an inert-style pair: f = (t^2+1)(t-3) mod 5 -> t^2+1 irreducible mod 3? use p=3
  int_poly f2 = int_poly::from({1, 0, 1}) * int_poly::from({-3, 1});
  auto [g2, h2] = hensel_lift_pair(f2, zpoly(3, {1, 0, 1}), zpoly(3, {0, 1}), Int(3), Int(1000));
  CHECK(g2 == int_poly::from({1, 0, 1}));
  CHECK(h2 == int_poly::from({-3, 1}));
}
