#include "weiltor/fq.hpp"

#include <algorithm>

namespace weiltor {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 addm(u64 a, u64 b, u64 l) {
  u64 s = a + b;
  if (s >= l || s < a) s -= l;
  return s;
}
u64 subm(u64 a, u64 b, u64 l) { return a >= b ? a - b : a + l - b; }
u64 mulm(u64 a, u64 b, u64 l) { return (u64)((u128)a * b % l); }

u64 powm(u64 a, u64 e, u64 l) {
  u64 r = 1 % l;
  a %= l;
  while (e) {
    if (e & 1) r = mulm(r, a, l);
    a = mulm(a, a, l);
    e >>= 1;
  }
  return r;
}

// xorshift for deterministic internal randomization
struct det_rng {
  u64 s;
  explicit det_rng(u64 seed) : s(seed * 2685821657736338717ull + 1) {}
  u64 next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
};

}  // namespace

zpoly::zpoly(std::uint64_t mod, std::vector<std::uint64_t> coeffs) : l(mod), c(std::move(coeffs)) {
  for (auto& x : c) x %= l;
  normalize();
}

zpoly zpoly::from_int_poly(const int_poly& p, std::uint64_t l) {
  std::vector<u64> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) {
    Int r = p.c[i] % Int(l);
    if (r < 0) r += Int(l);
    c[i] = r.convert_to<u64>();
  }
  zpoly out;
  out.l = l;
  out.c = std::move(c);
  out.normalize();
  return out;
}

void zpoly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t l) {
  // extended Euclid on signed 128-bit
  __int128 t = 0, newt = 1, r = l, newr = a % l;
  while (newr != 0) {
    __int128 q = r / newr;
    __int128 tmp = t - q * newt; t = newt; newt = tmp;
    tmp = r - q * newr; r = newr; newr = tmp;
  }
  if (r != 1) throw internal_error("mod_inv: not invertible");
  if (t < 0) t += l;
  return (u64)t;
}

zpoly operator+(const zpoly& a, const zpoly& b) {
  zpoly r;
  r.l = a.l ? a.l : b.l;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = addm(r.c[i], b.c[i], r.l);
  r.normalize();
  return r;
}

zpoly operator-(const zpoly& a, const zpoly& b) {
  zpoly r;
  r.l = a.l ? a.l : b.l;
  r.c.resize(std::max(a.c.size(), b.c.size()), 0);
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = subm(r.c[i], b.c[i], r.l);
  r.normalize();
  return r;
}

zpoly operator*(const zpoly& a, const zpoly& b) {
  if (a.is_zero() || b.is_zero()) {
    zpoly r;
    r.l = a.l ? a.l : b.l;
    return r;
  }
  zpoly r;
  r.l = a.l;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (!a.c[i]) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = addm(r.c[i + j], mulm(a.c[i], b.c[j], r.l), r.l);
  }
  r.normalize();
  return r;
}

zpoly mul_scalar(const zpoly& a, std::uint64_t s) {
  zpoly r = a;
  s %= r.l;
  for (auto& x : r.c) x = mulm(x, s, r.l);
  r.normalize();
  return r;
}

void divrem(const zpoly& a, const zpoly& b, zpoly& q, zpoly& r) {
  if (b.is_zero()) throw internal_error("zpoly division by zero");
  u64 l = b.l;
  r = a;
  r.l = l;
  q.l = l;
  q.c.clear();
  int db = b.degree();
  if (r.degree() < db) return;
  q.c.assign(r.degree() - db + 1, 0);
  u64 binv = mod_inv(b.lead(), l);
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    u64 f = mulm(r.lead(), binv, l);
    q.c[k] = f;
    for (int i = 0; i <= db; ++i) r.c[k + i] = subm(r.c[k + i], mulm(f, b.c[i], l), l);
    r.normalize();
  }
  q.normalize();
}

zpoly gcd(const zpoly& a, const zpoly& b) {
  zpoly f = a, g = b;
  if (f.l == 0) f.l = g.l;
  if (g.l == 0) g.l = f.l;
  while (!g.is_zero()) {
    zpoly q, r;
    divrem(f, g, q, r);
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  return make_monic(f);
}

zpoly make_monic(const zpoly& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return mul_scalar(a, mod_inv(a.lead(), a.l));
}

zpoly derivative(const zpoly& a) {
  zpoly r;
  r.l = a.l;
  if (a.c.size() <= 1) return r;
  r.c.resize(a.c.size() - 1);
  for (size_t i = 1; i < a.c.size(); ++i) r.c[i - 1] = mulm(a.c[i], i % a.l, a.l);
  r.normalize();
  return r;
}

std::uint64_t eval(const zpoly& a, std::uint64_t x) {
  u64 r = 0;
  for (size_t i = a.c.size(); i-- > 0;) r = addm(mulm(r, x, a.l), a.c[i], a.l);
  return r;
}

zpoly powmod(const zpoly& base, const Int& e, const zpoly& m) {
  zpoly result(m.l, {1});
  zpoly b = base;
  {
    zpoly q, r;
    divrem(b, m, q, r);
    b = r;
  }
  Int exp = e;
  while (exp > 0) {
    if ((exp & 1) == 1) {
      zpoly q, r;
      divrem(result * b, m, q, r);
      result = r;
    }
    zpoly q, r;
    divrem(b * b, m, q, r);
    b = r;
    exp >>= 1;
  }
  return result;
}

bool is_irreducible(const zpoly& f) {
  int d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  u64 l = f.l;
  zpoly x = zpoly::x(l);
  // x^(l^d) == x mod f
  zpoly xp = powmod(x, pow_int(Int(l), d), f);
  if (!(xp == x)) return false;
  // gcd(x^(l^(d/e)) - x, f) == 1 for prime divisors e of d
  for (int e = 2; e <= d; ++e) {
    if (d % e != 0) continue;
    bool eprime = true;
    for (int k = 2; k * k <= e; ++k)
      if (e % k == 0) { eprime = false; break; }
    if (!eprime) continue;
    zpoly xe = powmod(x, pow_int(Int(l), d / e), f);
    zpoly g = gcd(xe - x, f);
    if (g.degree() != 0) return false;
  }
  return true;
}

namespace {

// equal-degree splitting of a monic squarefree product of degree-e irreducibles
void edf(const zpoly& f, int e, det_rng& rng, std::vector<zpoly>& out) {
  int d = f.degree();
  if (d == e) {
    out.push_back(f);
    return;
  }
  u64 l = f.l;
  for (;;) {
    // random polynomial of degree < d
    zpoly a;
    a.l = l;
    a.c.resize(d);
    for (int i = 0; i < d; ++i) a.c[i] = rng.next() % l;
    a.normalize();
    if (a.is_zero()) continue;
    zpoly g;
    if (l == 2) {
      // trace map sum a^(2^i), i < e
      zpoly t = a, cur = a;
      for (int i = 1; i < e; ++i) {
        zpoly q, r;
        divrem(cur * cur, f, q, r);
        cur = r;
        t = t + cur;
      }
      g = gcd(t, f);
    } else {
      Int exp = (pow_int(Int(l), e) - 1) / 2;
      zpoly ap = powmod(a, exp, f);
      g = gcd(ap - zpoly(l, {1}), f);
    }
    if (g.degree() > 0 && g.degree() < d) {
      zpoly q, r;
      divrem(f, g, q, r);
      edf(make_monic(g), e, rng, out);
      edf(make_monic(q), e, rng, out);
      return;
    }
  }
}

// distinct-degree factorization of a monic squarefree polynomial
std::vector<std::pair<zpoly, int>> ddf(const zpoly& f) {
  std::vector<std::pair<zpoly, int>> parts;  // (product, degree)
  zpoly rest = f;
  u64 l = f.l;
  zpoly x = zpoly::x(l);
  zpoly h = x;
  int i = 1;
  while (rest.degree() >= 2 * i) {
    h = powmod(h, Int(l), rest);
    zpoly g = gcd(h - x, rest);
    if (g.degree() > 0) {
      parts.emplace_back(g, i);
      zpoly q, r;
      divrem(rest, g, q, r);
      rest = make_monic(q);
      zpoly qq, rr;
      divrem(h, rest, qq, rr);
      h = rr;
    }
    ++i;
  }
  if (rest.degree() > 0) parts.emplace_back(rest, rest.degree());
  return parts;
}

}  // namespace

std::vector<std::pair<zpoly, int>> factor_mod_l(const zpoly& f, std::uint64_t seed) {
  u64 l = f.l;
  std::vector<std::pair<zpoly, int>> out;
  if (f.degree() <= 0) return out;
  det_rng rng(seed * 1099511628211ull + l);

  // peel multiplicities: work on the squarefree part, recurse on the rest
  zpoly work = make_monic(f);
  int outer_mult = 1;
  for (;;) {
    zpoly df = derivative(work);
    if (df.is_zero()) {
      // work = g(x^l) = (frobenius-adjusted g)^l
      int d = work.degree();
      zpoly g;
      g.l = l;
      g.c.resize(d / l + 1);
      for (int i = 0; i * (int)l <= d; ++i) {
        // coefficient c_{il} is an l-th power; its l-th root is c^(l^{e-1})
        // over F_l the root of a in F_l is a itself (Frobenius fixes F_l)
        g.c[i] = work.c[i * l];
      }
      g.normalize();
      work = g;
      outer_mult *= (int)l;
      continue;
    }
    break;
  }
  zpoly sf = gcd(work, derivative(work));
  zpoly sqfree;
  {
    zpoly q, r;
    divrem(work, sf, q, r);
    sqfree = make_monic(q);
  }
  for (auto& [prod, deg] : ddf(sqfree)) {
    std::vector<zpoly> irr;
    edf(prod, deg, rng, irr);
    for (auto& g : irr) {
      // multiplicity of g in the original work polynomial
      int m = 0;
      zpoly rest = work;
      for (;;) {
        zpoly q, r;
        divrem(rest, g, q, r);
        if (!r.is_zero()) break;
        rest = q;
        ++m;
      }
      out.emplace_back(g, m * outer_mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    return a.first.c < b.first.c;
  });
  return out;
}

std::vector<int> factor_degrees(const zpoly& f, std::uint64_t seed) {
  std::vector<int> degs;
  for (auto& [g, m] : factor_mod_l(f, seed))
    for (int i = 0; i < m; ++i) degs.push_back(g.degree());
  std::sort(degs.begin(), degs.end());
  return degs;
}

fq_ctx_ptr make_field(std::uint64_t l, int d, std::uint64_t variant) {
  if (!is_prime_u64(l)) throw internal_error("make_field: modulus not prime");
  if (d < 1) throw internal_error("make_field: degree < 1");
  auto ctx = std::make_shared<fq_ctx>();
  ctx->l = l;
  ctx->d = d;
  ctx->card = pow_int(Int(l), d);
  if (d == 1) {
    ctx->modulus = zpoly::x(l);
    return ctx;
  }
  // deterministic scan for an irreducible monic polynomial of degree d
  det_rng rng(variant * 7919 + l * 31 + (u64)d);
  for (u64 attempt = 0;; ++attempt) {
    zpoly f;
    f.l = l;
    f.c.assign(d + 1, 0);
    f.c[d] = 1;
    for (int i = 0; i < d; ++i) f.c[i] = rng.next() % l;
    f.normalize();
    if (f.degree() != d) continue;
    if (is_irreducible(f)) {
      ctx->modulus = f;
      return ctx;
    }
    if (attempt > 10000) throw internal_error("make_field: no irreducible found");
  }
}

namespace {
zpoly reduce_mod_ctx(const fq_ctx_ptr& ctx, const zpoly& p) {
  if (ctx->d == 1) {
    // modulus is x: residue is the constant term
    zpoly r;
    r.l = ctx->l;
    if (!p.c.empty() && p.c[0] != 0) r.c = {p.c[0]};
    return r;
  }
  zpoly q, r;
  divrem(p, ctx->modulus, q, r);
  return r;
}
}  // namespace

fq_elem fq_zero(const fq_ctx_ptr& ctx) {
  fq_elem e;
  e.ctx = ctx;
  e.v.l = ctx->l;
  return e;
}

fq_elem fq_from_int(const fq_ctx_ptr& ctx, const Int& a) {
  Int r = a % Int(ctx->l);
  if (r < 0) r += Int(ctx->l);
  fq_elem e = fq_zero(ctx);
  u64 v = r.convert_to<u64>();
  if (v) e.v.c = {v};
  return e;
}

fq_elem fq_from_poly(const fq_ctx_ptr& ctx, const zpoly& p) {
  fq_elem e = fq_zero(ctx);
  e.v = reduce_mod_ctx(ctx, p);
  return e;
}

fq_elem operator+(const fq_elem& a, const fq_elem& b) {
  fq_elem r = a;
  r.v = a.v + b.v;
  return r;
}

fq_elem operator-(const fq_elem& a, const fq_elem& b) {
  fq_elem r = a;
  r.v = a.v - b.v;
  return r;
}

fq_elem operator*(const fq_elem& a, const fq_elem& b) {
  fq_elem r = a;
  r.v = reduce_mod_ctx(a.ctx, a.v * b.v);
  return r;
}

fq_elem fq_inv(const fq_elem& a) {
  if (a.is_zero()) throw internal_error("fq_inv of zero");
  if (a.ctx->d == 1) {
    fq_elem r = fq_zero(a.ctx);
    r.v.c = {mod_inv(a.v.c[0], a.ctx->l)};
    return r;
  }
  // extended Euclid in F_l[x]
  zpoly r0 = a.ctx->modulus, r1 = a.v;
  zpoly s0(a.ctx->l, {}), s1(a.ctx->l, {1});
  while (!r1.is_zero()) {
    zpoly q, r;
    divrem(r0, r1, q, r);
    zpoly s = s0 - q * s1;
    r0 = r1;
    r1 = r;
    s0 = s1;
    s1 = s;
  }
  if (r0.degree() != 0) throw internal_error("fq_inv: not invertible");
  fq_elem out = fq_zero(a.ctx);
  out.v = reduce_mod_ctx(a.ctx, mul_scalar(s0, mod_inv(r0.c[0], a.ctx->l)));
  return out;
}

fq_elem fq_pow(const fq_elem& a, const Int& e) {
  if (e < 0) return fq_pow(fq_inv(a), -e);
  fq_elem r = fq_from_int(a.ctx, 1);
  fq_elem b = a;
  Int exp = e;
  while (exp > 0) {
    if ((exp & 1) == 1) r = r * b;
    b = b * b;
    exp >>= 1;
  }
  return r;
}

fq_elem frobenius(const fq_elem& a) { return fq_pow(a, Int(a.ctx->l)); }

namespace {

// polynomial over F_{l^d}, used only for root finding
struct fqpoly {
  fq_ctx_ptr ctx;
  std::vector<fq_elem> c;

  void normalize() {
    while (!c.empty() && c.back().is_zero()) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return (int)c.size() - 1; }
};

fqpoly fqp_from_int_poly(const int_poly& p, const fq_ctx_ptr& ctx) {
  fqpoly f;
  f.ctx = ctx;
  for (const auto& a : p.c) f.c.push_back(fq_from_int(ctx, a));
  f.normalize();
  return f;
}

fqpoly fqp_mul(const fqpoly& a, const fqpoly& b) {
  fqpoly r;
  r.ctx = a.ctx;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, fq_zero(a.ctx));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = r.c[i + j] + a.c[i] * b.c[j];
  }
  r.normalize();
  return r;
}

fqpoly fqp_sub(const fqpoly& a, const fqpoly& b) {
  fqpoly r;
  r.ctx = a.ctx ? a.ctx : b.ctx;
  r.c.resize(std::max(a.c.size(), b.c.size()), fq_zero(r.ctx));
  for (size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) r.c[i] = r.c[i] - b.c[i];
  r.normalize();
  return r;
}

void fqp_divrem(const fqpoly& a, const fqpoly& b, fqpoly& q, fqpoly& r) {
  if (b.is_zero()) throw internal_error("fqpoly division by zero");
  r = a;
  q.ctx = a.ctx;
  q.c.clear();
  int db = b.degree();
  if (a.degree() < db) return;
  q.c.assign(a.degree() - db + 1, fq_zero(a.ctx));
  fq_elem binv = fq_inv(b.c.back());
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    fq_elem f = r.c.back() * binv;
    q.c[k] = f;
    for (int i = 0; i <= db; ++i) r.c[k + i] = r.c[k + i] - f * b.c[i];
    r.normalize();
  }
}

fqpoly fqp_gcd(const fqpoly& a, const fqpoly& b) {
  fqpoly f = a, g = b;
  while (!g.is_zero()) {
    fqpoly q, r;
    fqp_divrem(f, g, q, r);
    f = g;
    g = r;
  }
  if (!f.is_zero()) {
    fq_elem inv = fq_inv(f.c.back());
    for (auto& x : f.c) x = x * inv;
  }
  return f;
}

fqpoly fqp_powmod_x(const fq_ctx_ptr& ctx, const Int& e, const fqpoly& m) {
  fqpoly result;
  result.ctx = ctx;
  result.c = {fq_from_int(ctx, 1)};
  fqpoly b;
  b.ctx = ctx;
  b.c = {fq_zero(ctx), fq_from_int(ctx, 1)};
  {
    fqpoly q, r;
    fqp_divrem(b, m, q, r);
    b = r;
  }
  Int exp = e;
  while (exp > 0) {
    if ((exp & 1) == 1) {
      fqpoly q, r;
      fqp_divrem(fqp_mul(result, b), m, q, r);
      result = r;
    }
    fqpoly q, r;
    fqp_divrem(fqp_mul(b, b), m, q, r);
    b = r;
    exp >>= 1;
  }
  return result;
}

void fqp_roots_split(const fqpoly& f, det_rng& rng, std::vector<fq_elem>& out) {
  // f is monic, squarefree, splits into linears over the field
  int d = f.degree();
  if (d == 0) return;
  if (d == 1) {
    // root = -c0
    out.push_back(fq_zero(f.ctx) - f.c[0]);
    return;
  }
  const fq_ctx_ptr& ctx = f.ctx;
  u64 l = ctx->l;
  for (;;) {
    // random polynomial of degree < deg f with F_{l^d} coefficients;
    // gcd with a^((q-1)/2) - 1 (odd q) or with the trace map of a (l = 2)
    fqpoly a;
    a.ctx = ctx;
    for (int j = 0; j < d; ++j) {
      zpoly rv;
      rv.l = l;
      rv.c.resize(ctx->d);
      for (int i = 0; i < ctx->d; ++i) rv.c[i] = rng.next() % l;
      rv.normalize();
      a.c.push_back(fq_from_poly(ctx, rv));
    }
    a.normalize();
    if (a.is_zero() || a.degree() == 0) continue;

    fqpoly g;
    if (l == 2) {
      // trace map sum a^(2^i) over the field; in char 2 add and sub agree
      fqpoly t = a, cur = a;
      for (int i = 1; i < ctx->d; ++i) {
        fqpoly q, r;
        fqp_divrem(fqp_mul(cur, cur), f, q, r);
        cur = r;
        t = fqp_sub(t, cur);
      }
      g = fqp_gcd(t, f);
    } else {
      Int exp = (ctx->card - 1) / 2;
      // a^exp mod f
      fqpoly base = a, result;
      result.ctx = ctx;
      result.c = {fq_from_int(ctx, 1)};
      Int e2 = exp;
      {
        fqpoly q, r;
        fqp_divrem(base, f, q, r);
        base = r;
      }
      while (e2 > 0) {
        if ((e2 & 1) == 1) {
          fqpoly q, r;
          fqp_divrem(fqp_mul(result, base), f, q, r);
          result = r;
        }
        fqpoly q, r;
        fqp_divrem(fqp_mul(base, base), f, q, r);
        base = r;
        e2 >>= 1;
      }
      fqpoly one;
      one.ctx = ctx;
      one.c = {fq_from_int(ctx, 1)};
      g = fqp_gcd(fqp_sub(result, one), f);
    }
    if (g.degree() > 0 && g.degree() < d) {
      fqpoly q, r;
      fqp_divrem(f, g, q, r);
      fqp_roots_split(g, rng, out);
      fqp_roots_split(q, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<fq_elem> roots_in_fq(const int_poly& p, const fq_ctx_ptr& ctx, std::uint64_t seed) {
  det_rng rng(seed * 6364136223846793005ull + ctx->l);
  fqpoly f = fqp_from_int_poly(p, ctx);
  if (f.is_zero()) throw internal_error("roots_in_fq: zero polynomial");
  // normalize monic
  fq_elem inv = fq_inv(f.c.back());
  for (auto& x : f.c) x = x * inv;
  // the product of (x - root) over distinct roots: gcd(f, x^card - x)
  fqpoly xq = fqp_powmod_x(ctx, ctx->card, f);
  fqpoly x;
  x.ctx = ctx;
  x.c = {fq_zero(ctx), fq_from_int(ctx, 1)};
  fqpoly lin = fqp_gcd(fqp_sub(xq, x), f);
  std::vector<fq_elem> roots;
  fqp_roots_split(lin, rng, roots);
  return roots;
}

}  // namespace weiltor
