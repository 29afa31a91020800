#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "weiltor/numeric.hpp"

namespace weiltor {

/// Integer polynomial, coefficients ascending. The zero polynomial has an
/// empty coefficient vector; otherwise the leading coefficient is nonzero.
struct int_poly {
  std::vector<Int> c;

  int_poly() = default;
  explicit int_poly(std::vector<Int> coeffs) : c(std::move(coeffs)) { normalize(); }
  static int_poly from(std::initializer_list<long> coeffs);
  static int_poly zero() { return int_poly(); }
  static int_poly one() { return int_poly({Int(1)}); }
  static int_poly x() { return int_poly({Int(0), Int(1)}); }
  /// t^k
  static int_poly monomial(unsigned k, Int coeff = Int(1));

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }  // -1 for zero
  const Int& lead() const { return c.back(); }
  Int coeff(int i) const { return (i >= 0 && i < (int)c.size()) ? c[i] : Int(0); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const int_poly&) const = default;
};

int_poly operator+(const int_poly& a, const int_poly& b);
int_poly operator-(const int_poly& a, const int_poly& b);
int_poly operator-(const int_poly& a);
int_poly operator*(const int_poly& a, const int_poly& b);
int_poly operator*(const int_poly& a, const Int& s);

Int eval(const int_poly& p, const Int& x);
Rat eval(const int_poly& p, const Rat& x);

int_poly derivative(const int_poly& p);

/// Content (gcd of coefficients, sign of leading coefficient), zero poly -> 0.
Int content(const int_poly& p);
/// p / content(p), leading coefficient positive. Zero stays zero.
int_poly primitive_part(const int_poly& p);

/// Division by a monic divisor: p = q*d + r exactly over Z.
void divrem_monic(const int_poly& p, const int_poly& d, int_poly& q, int_poly& r);
/// Exact division test over Q (works for any nonzero divisor).
std::optional<int_poly> divide_exact(const int_poly& p, const int_poly& d);
bool divides(const int_poly& d, const int_poly& p);

/// Primitive gcd over Z (via rational remainder sequence on primitive parts).
int_poly gcd(const int_poly& a, const int_poly& b);

Int resultant(const int_poly& a, const int_poly& b);
Int discriminant(const int_poly& p);

/// p(t + s)
int_poly shift(const int_poly& p, const Int& s);
/// p(s * t)
int_poly scale_arg(const int_poly& p, const Int& s);
/// lead^(deg-1) * p(t/lead): monic integer polynomial with roots lead*root.
int_poly monicize(const int_poly& p);

/// Yun squarefree decomposition of a primitive polynomial:
/// p = lc * prod f_i^{m_i}, the f_i squarefree, pairwise coprime, primitive.
std::vector<std::pair<int_poly, int>> squarefree_decomposition(const int_poly& p);
int_poly squarefree_part(const int_poly& p);

/// Power sums s_1..s_k of the roots of a monic polynomial (Newton identities).
std::vector<Rat> power_sums(const int_poly& p, int k);

/// Monic polynomial of degree r with prescribed power sums s_1..s_r
/// (inverse Newton identities); coefficients are rational in general.
std::vector<Rat> poly_from_power_sums(const std::vector<Rat>& s);

/// Monic integer polynomial whose roots are the k-th powers of p's roots
/// (with multiplicity). p must be monic.
int_poly root_power_transform(const int_poly& p, unsigned k);

/// Monic integer polynomial whose roots are all pairwise products of roots
/// of a and roots of b (with multiplicity). a, b monic.
int_poly root_product_compose(const int_poly& a, const int_poly& b);

/// Multiplicity of x0 as a root of p (0 if not a root).
int root_multiplicity(const int_poly& p, const Rat& x0);

int_poly cyclotomic(unsigned n);

/// For p of even degree 2g satisfying t^(2g) p(Q/t) = Q^g p(t), the "trace
/// polynomial" H with p(t) = t^g H(t + Q/t). Returns nullopt if the
/// functional equation with positive sign does not hold.
std::optional<int_poly> trace_polynomial(const int_poly& p, const Int& Q);

/// Monic integer polynomial with roots Q/root over p's roots, if all those
/// are algebraic integers: (-1)^deg * t^deg p(Q/t)/p(0) up to normalization.
std::optional<int_poly> reversed_scaled(const int_poly& p, const Int& Q);

std::string to_string(const int_poly& p, const char* var = "t");

/// Rational-coefficient polynomial (ascending), used by remainder sequences.
struct rat_poly {
  std::vector<Rat> c;

  rat_poly() = default;
  explicit rat_poly(std::vector<Rat> coeffs) : c(std::move(coeffs)) { normalize(); }
  explicit rat_poly(const int_poly& p);

  void normalize();
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
  const Rat& lead() const { return c.back(); }

  bool operator==(const rat_poly&) const = default;
};

rat_poly operator+(const rat_poly& a, const rat_poly& b);
rat_poly operator-(const rat_poly& a, const rat_poly& b);
rat_poly operator*(const rat_poly& a, const rat_poly& b);
rat_poly operator*(const rat_poly& a, const Rat& s);
Rat eval(const rat_poly& p, const Rat& x);
rat_poly derivative(const rat_poly& p);
void divrem(const rat_poly& a, const rat_poly& b, rat_poly& q, rat_poly& r);
rat_poly gcd(const rat_poly& a, const rat_poly& b);  // monic gcd
/// Clears denominators to a primitive integer polynomial.
int_poly clear_denominators(const rat_poly& p);

}  // namespace weiltor
