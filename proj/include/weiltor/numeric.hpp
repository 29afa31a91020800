#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace weiltor {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rat abs_rat(const Rat& a) { return a < 0 ? Rat(-a) : a; }

inline int sgn(const Int& a) { return a.sign(); }
inline int sgn(const Rat& a) { return a.sign(); }

Int gcd_int(Int a, Int b);
Int lcm_int(const Int& a, const Int& b);

/// Extended gcd: returns g and sets u, v with a*u + b*v = g >= 0.
Int gcd_ext(const Int& a, const Int& b, Int& u, Int& v);

Int pow_int(const Int& base, unsigned long e);
Rat pow_rat(const Rat& base, long e);

/// Largest k with p^k | a (a != 0). Throws on a == 0.
long ord_p(const Int& a, const Int& p);

/// floor(sqrt(a)) for a >= 0.
Int isqrt_floor(const Int& a);
/// Exact square root if a is a perfect square.
std::optional<Int> perfect_sqrt(const Int& a);

/// Removes all square factors: a = s^2 * r with r squarefree (a != 0).
/// Only intended for desk-scale inputs; factors by trial division.
void squarefree_split(const Int& a, Int& squarefree, Int& square_root_part);

bool is_prime_u64(std::uint64_t n);
bool is_prime(const Int& n);

/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);

struct prime_power {
  Int p;
  unsigned a = 0;
};

/// Writes q = p^a with p prime, a >= 1, or nullopt.
std::optional<prime_power> as_prime_power(const Int& q);

/// Euler phi for small n.
std::uint64_t euler_phi(std::uint64_t n);

/// All N >= 1 with phi(N) <= bound, ascending.
std::vector<std::uint64_t> orders_with_phi_at_most(std::uint64_t bound);

/// n choose k as a big integer.
Int binomial(unsigned long n, unsigned long k);

std::string to_string(const Int& a);
std::string to_string(const Rat& a);

struct internal_error : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace weiltor
