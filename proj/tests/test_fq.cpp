#include "doctest.h"
#include "weiltor/fq.hpp"

using namespace weiltor;

TEST_CASE("zpoly arithmetic") {
  zpoly a(5, {1, 2, 3});
  zpoly b(5, {4, 1});
  CHECK((a + b) == zpoly(5, {0, 3, 3}));
  CHECK((a * b).degree() == 3);
  zpoly q, r;
  divrem(a, b, q, r);
  CHECK((b * q + r) == a);
  CHECK(eval(a, 2) == (1 + 4 + 12) % 5);
}

TEST_CASE("zpoly gcd") {
  // (x-1)(x-2) and (x-1)(x-3) mod 7
  zpoly f = zpoly(7, {6, 1}) * zpoly(7, {5, 1});
  zpoly g = zpoly(7, {6, 1}) * zpoly(7, {4, 1});
  CHECK(gcd(f, g) == zpoly(7, {6, 1}));
}

TEST_CASE("irreducibility over F_l") {
  CHECK(is_irreducible(zpoly(2, {1, 1, 1})));        // x^2+x+1 mod 2
  CHECK(!is_irreducible(zpoly(2, {1, 0, 1})));       // (x+1)^2 mod 2
  CHECK(is_irreducible(zpoly(3, {1, 0, 1})));        // x^2+1 mod 3
  CHECK(!is_irreducible(zpoly(5, {1, 0, 1})));       // x^2+1 splits mod 5
  CHECK(is_irreducible(zpoly(2, {1, 1, 0, 0, 1})));  // x^4+x+1 mod 2
}

TEST_CASE("factor_mod_l splits and preserves multiplicity") {
  // (x^2+1)(x+1)^2 mod 3
  zpoly f = zpoly(3, {1, 0, 1}) * zpoly(3, {1, 1}) * zpoly(3, {1, 1});
  auto fac = factor_mod_l(f);
  REQUIRE(fac.size() == 2);
  int deg_sum = 0;
  for (auto& [g, m] : fac) {
    CHECK(is_irreducible(g));
    deg_sum += g.degree() * m;
  }
  CHECK(deg_sum == 4);

  // x^9 - x mod 3 = product of all monic irreducibles of degree dividing 2
  zpoly x9(3, std::vector<std::uint64_t>{0, 2, 0, 0, 0, 0, 0, 0, 0, 1});
  auto fac2 = factor_mod_l(x9);
  int total = 0;
  for (auto& [g, m] : fac2) total += g.degree() * m;
  CHECK(total == 9);
}

TEST_CASE("factor degrees give the Frobenius cycle type") {
  // x^2+x+1 mod 2 irreducible: type {2}
  CHECK(factor_degrees(zpoly(2, {1, 1, 1})) == std::vector<int>{2});
  // t^2 - t + 2 mod 11: -7 is a QR mod 11 so it splits: type {1,1}
  CHECK(factor_degrees(zpoly(11, {2, 10, 1})) == std::vector<int>{1, 1});
  // mod 3: -7 = 2 is a non-residue: inert: type {2}
  CHECK(factor_degrees(zpoly(3, {2, 2, 1})) == std::vector<int>{2});
}

TEST_CASE("field arithmetic in F_9") {
  auto ctx = make_field(3, 2);
  CHECK(ctx->card == 9);
  fq_elem x = fq_from_poly(ctx, zpoly::x(3));
  fq_elem one = fq_from_int(ctx, 1);
  // multiplicative group has order 8
  CHECK(fq_pow(x, 8) == one);
  // Frobenius squared is the identity on F_9
  CHECK(frobenius(frobenius(x)) == x);
  // inverses
  fq_elem y = x + one;
  CHECK((y * fq_inv(y)) == one);
}

TEST_CASE("field construction variants give different moduli, same field size") {
  auto a = make_field(5, 3, 0);
  auto b = make_field(5, 3, 1);
  CHECK(a->card == b->card);
  CHECK(is_irreducible(a->modulus));
  CHECK(is_irreducible(b->modulus));
}

TEST_CASE("roots in extension fields") {
  // t^2 - t + 2 has two roots in F_{3^2} (inert prime)
  auto ctx = make_field(3, 2);
  auto roots = roots_in_fq(int_poly::from({2, -1, 1}), ctx);
  CHECK(roots.size() == 2);
  for (auto& r : roots) {
    fq_elem v = r * r - r + fq_from_int(ctx, 2);
    CHECK(v.is_zero());
  }
  // roots are Frobenius conjugates
  CHECK((frobenius(roots[0]) == roots[1]));

  // over F_11 (split) the roots already live in the prime field
  auto ctx11 = make_field(11, 1);
  auto roots11 = roots_in_fq(int_poly::from({2, -1, 1}), ctx11);
  CHECK(roots11.size() == 2);

  // char-2 splitting: t^2 + t + 1 over F_4
  auto ctx4 = make_field(2, 2);
  auto roots4 = roots_in_fq(int_poly::from({1, 1, 1}), ctx4);
  CHECK(roots4.size() == 2);
}
