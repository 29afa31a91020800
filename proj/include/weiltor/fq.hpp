#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "weiltor/intpoly.hpp"
#include "weiltor/numeric.hpp"

namespace weiltor {

/// Dense polynomial over the prime field F_l, coefficients in [0, l).
struct zpoly {
  std::uint64_t l = 0;
  std::vector<std::uint64_t> c;

  zpoly() = default;
  zpoly(std::uint64_t mod, std::vector<std::uint64_t> coeffs);
  static zpoly from_int_poly(const int_poly& p, std::uint64_t l);
  static zpoly x(std::uint64_t l) { return zpoly(l, {0, 1}); }

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  std::uint64_t lead() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const zpoly&) const = default;
};

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t l);

zpoly operator+(const zpoly& a, const zpoly& b);
zpoly operator-(const zpoly& a, const zpoly& b);
zpoly operator*(const zpoly& a, const zpoly& b);
zpoly mul_scalar(const zpoly& a, std::uint64_t s);
void divrem(const zpoly& a, const zpoly& b, zpoly& q, zpoly& r);
zpoly gcd(const zpoly& a, const zpoly& b);  // monic
zpoly make_monic(const zpoly& a);
zpoly derivative(const zpoly& a);
std::uint64_t eval(const zpoly& a, std::uint64_t x);
/// base^e mod m
zpoly powmod(const zpoly& base, const Int& e, const zpoly& m);

bool is_irreducible(const zpoly& f);

/// Complete factorization over F_l into monic irreducibles with
/// multiplicities (handles non-squarefree input and the char-p x^l pattern).
/// Deterministically seeded; `seed` only affects internal randomization.
std::vector<std::pair<zpoly, int>> factor_mod_l(const zpoly& f, std::uint64_t seed = 1);

/// Degrees of the irreducible factors of a squarefree monic f (the Frobenius
/// cycle type), ascending with repeats.
std::vector<int> factor_degrees(const zpoly& f, std::uint64_t seed = 1);

/// The field F_{l^d} presented as F_l[x]/(modulus).
struct fq_ctx {
  std::uint64_t l = 0;
  int d = 1;
  zpoly modulus;
  Int card;  // l^d
};

using fq_ctx_ptr = std::shared_ptr<const fq_ctx>;

/// Deterministic field construction; different `variant` values give
/// different irreducible moduli for the same (l, d).
fq_ctx_ptr make_field(std::uint64_t l, int d, std::uint64_t variant = 0);

/// Field element: residue modulo ctx->modulus.
struct fq_elem {
  fq_ctx_ptr ctx;
  zpoly v;

  bool is_zero() const { return v.is_zero(); }
  bool operator==(const fq_elem&) const = default;
};

fq_elem fq_zero(const fq_ctx_ptr& ctx);
fq_elem fq_from_int(const fq_ctx_ptr& ctx, const Int& a);
fq_elem fq_from_poly(const fq_ctx_ptr& ctx, const zpoly& p);
fq_elem operator+(const fq_elem& a, const fq_elem& b);
fq_elem operator-(const fq_elem& a, const fq_elem& b);
fq_elem operator*(const fq_elem& a, const fq_elem& b);
fq_elem fq_inv(const fq_elem& a);
fq_elem fq_pow(const fq_elem& a, const Int& e);
fq_elem frobenius(const fq_elem& a);  // a^l

/// All roots of p (reduced mod l) in F_{l^d}, each exactly once.
std::vector<fq_elem> roots_in_fq(const int_poly& p, const fq_ctx_ptr& ctx,
                                 std::uint64_t seed = 1);

}  // namespace weiltor
