#include "weiltor/numeric.hpp"

#include <algorithm>

namespace weiltor {

Int gcd_int(Int a, Int b) {
  a = abs_int(a);
  b = abs_int(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

Int lcm_int(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs_int(a / gcd_int(a, b) * b);
}

Int gcd_ext(const Int& a, const Int& b, Int& u, Int& v) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r; old_r = r; r = tmp;
    tmp = old_s - q * s; old_s = s; s = tmp;
    tmp = old_t - q * t; old_t = t; t = tmp;
  }
  if (old_r < 0) { old_r = -old_r; old_s = -old_s; old_t = -old_t; }
  u = old_s;
  v = old_t;
  return old_r;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r = 1, b = base;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat pow_rat(const Rat& base, long e) {
  if (e >= 0) {
    return Rat(pow_int(num(base), (unsigned long)e), pow_int(den(base), (unsigned long)e));
  }
  if (base == 0) throw internal_error("pow_rat: zero to negative power");
  return Rat(pow_int(den(base), (unsigned long)(-e)), pow_int(num(base), (unsigned long)(-e)));
}

long ord_p(const Int& a, const Int& p) {
  if (a == 0) throw internal_error("ord_p of zero");
  Int x = abs_int(a);
  long k = 0;
  while (x % p == 0) {
    x /= p;
    ++k;
  }
  return k;
}

Int isqrt_floor(const Int& a) {
  if (a < 0) throw internal_error("isqrt of negative");
  if (a == 0) return 0;
  Int x = Int(1) << ((msb(a) / 2) + 1);
  for (;;) {
    Int y = (x + a / x) / 2;
    if (y >= x) break;
    x = y;
  }
  return x;
}

std::optional<Int> perfect_sqrt(const Int& a) {
  if (a < 0) return std::nullopt;
  Int r = isqrt_floor(a);
  if (r * r == a) return r;
  return std::nullopt;
}

void squarefree_split(const Int& a, Int& squarefree, Int& square_root_part) {
  if (a == 0) throw internal_error("squarefree_split of zero");
  Int x = abs_int(a);
  squarefree = a < 0 ? -1 : 1;
  square_root_part = 1;
  for (Int d = 2; d * d <= x; ++d) {
    if (x % d != 0) continue;
    int e = 0;
    while (x % d == 0) { x /= d; ++e; }
    if (e & 1) squarefree *= d;
    square_root_part *= pow_int(d, e / 2);
  }
  squarefree *= x;
}

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) -> std::uint64_t {
    return (std::uint64_t)((unsigned __int128)a * b % m);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
      if (e & 1) r = mulmod(r, a, m);
      a = mulmod(a, a, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) { d >>= 1; ++s; }
  // deterministic Miller-Rabin bases for 64-bit inputs
  for (std::uint64_t a : {2ull, 325ull, 9375ull, 28178ull, 450775ull, 9780504ull, 1795265022ull}) {
    std::uint64_t x = powmod(a % n, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) { witness = false; break; }
    }
    if (witness) return false;
  }
  return true;
}

bool is_prime(const Int& n) {
  if (n < 2) return false;
  if (n <= Int(UINT64_MAX)) return is_prime_u64(n.convert_to<std::uint64_t>());
  // desk scale: inputs are always word-sized primes
  return mpz_probab_prime_p(n.backend().data(), 40) > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

std::optional<prime_power> as_prime_power(const Int& q) {
  if (q < 2) return std::nullopt;
  // find smallest prime factor by trial division, then check q = p^a
  Int p = 0;
  Int x = q;
  for (Int d = 2; d * d <= x; ++d) {
    if (x % d == 0) { p = d; break; }
  }
  if (p == 0) p = x;  // q prime
  prime_power pp;
  pp.p = p;
  Int r = q;
  while (r % p == 0) { r /= p; ++pp.a; }
  if (r != 1) return std::nullopt;
  return pp;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::uint64_t> orders_with_phi_at_most(std::uint64_t bound) {
  // phi(N) >= sqrt(N/2), so N <= 2*bound^2 suffices as a scan range
  std::vector<std::uint64_t> out;
  std::uint64_t cap = 2 * bound * bound + 2;
  for (std::uint64_t n = 1; n <= cap; ++n) {
    if (euler_phi(n) <= bound) out.push_back(n);
  }
  return out;
}

Int binomial(unsigned long n, unsigned long k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (unsigned long i = 0; i < k; ++i) {
    r *= Int(n - i);
    r /= Int(i + 1);
  }
  return r;
}

std::string to_string(const Int& a) { return a.str(); }
std::string to_string(const Rat& a) { return a.str(); }

}  // namespace weiltor
