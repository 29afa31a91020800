#include "weiltor/factor.hpp"

#include <algorithm>

namespace weiltor {

namespace {

Int mod_reduce(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

Int mod_symmetric(const Int& a, const Int& m) {
  Int r = mod_reduce(a, m);
  if (2 * r > m) r -= m;
  return r;
}

int_poly reduce(const int_poly& p, const Int& m) {
  int_poly r = p;
  for (auto& x : r.c) x = mod_reduce(x, m);
  r.normalize();
  return r;
}

int_poly reduce_symmetric(const int_poly& p, const Int& m) {
  int_poly r = p;
  for (auto& x : r.c) x = mod_symmetric(x, m);
  r.normalize();
  return r;
}

int_poly mulmod(const int_poly& a, const int_poly& b, const Int& m) {
  return reduce(a * b, m);
}

// division by a monic divisor with coefficients mod m
void divrem_monic_mod(const int_poly& a, const int_poly& d, const Int& m, int_poly& q,
                      int_poly& r) {
  r = reduce(a, m);
  int dd = d.degree();
  q = int_poly();
  if (r.degree() < dd) return;
  std::vector<Int> qc(r.degree() - dd + 1, Int(0));
  while (!r.is_zero() && r.degree() >= dd) {
    int k = r.degree() - dd;
    Int f = r.lead();
    qc[k] = f;
    for (int i = 0; i <= dd; ++i) r.c[k + i] = mod_reduce(r.c[k + i] - f * d.c[i], m);
    r.normalize();
  }
  q = int_poly(std::move(qc));
}

int_poly from_zpoly(const zpoly& p) {
  std::vector<Int> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) c[i] = Int(p.c[i]);
  return int_poly(std::move(c));
}

// Bezout pair s*g + t*h = 1 over F_p, deg s < deg h, deg t < deg g
void bezout_mod_p(const zpoly& g, const zpoly& h, int_poly& s, int_poly& t, const Int& p) {
  zpoly r0 = g, r1 = h;
  zpoly s0(g.l, {1}), s1(g.l, {});
  zpoly t0(g.l, {}), t1(g.l, {1});
  while (!r1.is_zero()) {
    zpoly q, r;
    divrem(r0, r1, q, r);
    zpoly ns = s0 - q * s1;
    zpoly nt = t0 - q * t1;
    r0 = r1; r1 = r;
    s0 = s1; s1 = ns;
    t0 = t1; t1 = nt;
  }
  if (r0.degree() != 0) throw internal_error("hensel: factors not coprime mod p");
  std::uint64_t inv = mod_inv(r0.c[0], g.l);
  s = from_zpoly(mul_scalar(s0, inv));
  t = from_zpoly(mul_scalar(t0, inv));
  (void)p;
}

}  // namespace

std::pair<int_poly, int_poly> hensel_lift_pair(const int_poly& f, const zpoly& g0,
                                               const zpoly& h0, const Int& p,
                                               const Int& target) {
  if (!f.is_monic()) throw internal_error("hensel_lift_pair: f not monic");
  if (!g0.is_monic() || !h0.is_monic()) throw internal_error("hensel_lift_pair: factors not monic");
  if (g0.degree() + h0.degree() != f.degree())
    throw internal_error("hensel_lift_pair: degree mismatch");

  int_poly g = from_zpoly(g0), h = from_zpoly(h0);
  int_poly s, t;
  bezout_mod_p(g0, h0, s, t, p);

  Int m = p;
  while (m < target) {
    Int m2 = m * m;
    // lift factors: e = f - g h, (q, r) = qr(s e, h), g += t e + q g, h += r
    int_poly e = reduce(f - g * h, m2);
    int_poly q, r;
    divrem_monic_mod(mulmod(s, e, m2), h, m2, q, r);
    g = reduce(g + mulmod(t, e, m2) + mulmod(q, g, m2), m2);
    h = reduce(h + r, m2);
    // lift the Bezout pair: b = s g + t h - 1, (c, d) = qr(s b, h)
    int_poly b = reduce(mulmod(s, g, m2) + mulmod(t, h, m2) - int_poly::one(), m2);
    int_poly cq, dr;
    divrem_monic_mod(mulmod(s, b, m2), h, m2, cq, dr);
    s = reduce(s - dr, m2);
    t = reduce(t - mulmod(t, b, m2) - mulmod(cq, g, m2), m2);
    m = m2;
  }
  return {reduce_symmetric(g, m), reduce_symmetric(h, m)};
}

namespace {

// lift all mod-p factors of monic f to mod p^k >= target via a chain of
// two-factor lifts
std::vector<int_poly> lift_chain(const int_poly& f, const std::vector<zpoly>& factors,
                                 const Int& p, const Int& target) {
  std::vector<int_poly> out;
  int_poly rest = f;
  for (size_t i = 0; i + 1 < factors.size(); ++i) {
    zpoly h0 = factors[i + 1];
    for (size_t j = i + 2; j < factors.size(); ++j) h0 = h0 * factors[j];
    auto [g, h] = hensel_lift_pair(rest, factors[i], h0, p, target);
    out.push_back(g);
    rest = h;
  }
  out.push_back(rest);
  return out;
}

// Mignotte-style bound on coefficients of monic factors of monic f
Int factor_coeff_bound(const int_poly& f) {
  Int norm2_sq = 0;
  for (const auto& c : f.c) norm2_sq += c * c;
  Int norm2 = isqrt_floor(norm2_sq) + 1;
  return (Int(1) << (unsigned)(f.degree() + 1)) * norm2;
}

std::vector<int_poly> factor_squarefree_monic(const int_poly& f) {
  int d = f.degree();
  if (d <= 1) return {f};

  // choose a prime keeping f squarefree mod p, preferring few modular factors
  Int disc = discriminant(f);
  std::vector<std::pair<zpoly, int>> best_fac;
  std::uint64_t best_p = 0;
  int tried = 0;
  for (std::uint64_t p = 3; tried < 4; p += 2) {
    if (!is_prime_u64(p)) continue;
    if (disc % Int(p) == 0) continue;
    zpoly fp = zpoly::from_int_poly(f, p);
    if (fp.degree() != d) continue;  // p divides the leading coefficient
    auto fac = factor_mod_l(fp, /*seed=*/p);
    ++tried;
    if (best_p == 0 || fac.size() < best_fac.size()) {
      best_fac = fac;
      best_p = p;
    }
    if (best_fac.size() == 1) break;
  }
  if (best_fac.size() == 1) return {f};  // irreducible mod best_p

  Int p(best_p);
  Int target = 2 * factor_coeff_bound(f) + 1;
  std::vector<zpoly> modular;
  for (auto& [g, m] : best_fac) {
    if (m != 1) throw internal_error("factor: squarefree input not squarefree mod p");
    modular.push_back(g);
  }
  std::vector<int_poly> lifted = lift_chain(f, modular, p, target);
  Int pk = p;
  while (pk < target) pk *= pk;

  // Zassenhaus recombination over subsets, by increasing cardinality
  std::vector<int_poly> result;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < lifted.size(); ++i) alive[i] = (int)i;
  int_poly rem = f;

  auto try_subsets = [&](auto&& self, size_t card) -> bool {
    // enumerate subsets of `alive` of size `card`
    std::vector<size_t> sel;
    auto rec = [&](auto&& rec_ref, size_t start) -> bool {
      if (sel.size() == card) {
        int_poly prod = int_poly::one();
        for (size_t s : sel) prod = reduce(prod * lifted[alive[s]], pk);
        prod = reduce_symmetric(prod, pk);
        auto q = divide_exact(rem, prod);
        if (q.has_value()) {
          result.push_back(prod);
          // remove used factors
          std::vector<int> next;
          for (size_t i = 0; i < alive.size(); ++i)
            if (std::find(sel.begin(), sel.end(), i) == sel.end()) next.push_back(alive[i]);
          alive = next;
          rem = *q;
          return true;
        }
        return false;
      }
      for (size_t k = start; k < alive.size(); ++k) {
        sel.push_back(k);
        if (rec_ref(rec_ref, k + 1)) return true;
        sel.pop_back();
      }
      return false;
    };
    (void)self;
    return rec(rec, 0);
  };

  size_t card = 1;
  while (2 * card <= alive.size()) {
    if (try_subsets(try_subsets, card)) continue;  // retry same cardinality
    ++card;
  }
  if (rem.degree() > 0) result.push_back(rem);
  return result;
}

}  // namespace

std::vector<std::pair<int_poly, int>> factor_rational(const int_poly& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_rational: zero polynomial");
  std::vector<std::pair<int_poly, int>> out;
  int_poly f = primitive_part(p);
  if (f.degree() <= 0) return out;

  // split off powers of t
  size_t v = 0;
  while (v < f.c.size() && f.c[v] == 0) ++v;
  if (v > 0) {
    out.emplace_back(int_poly::x(), (int)v);
    f = int_poly(std::vector<Int>(f.c.begin() + v, f.c.end()));
  }

  for (auto& [g, mult] : squarefree_decomposition(f)) {
    int_poly work = g;
    Int a = work.lead();
    bool scaled = false;
    if (a != 1) {
      work = monicize(work);
      scaled = true;
    }
    for (auto& h : factor_squarefree_monic(work)) {
      int_poly factor = h;
      if (scaled) factor = primitive_part(scale_arg(h, a));
      if (factor.lead() < 0) factor = -factor;
      out.emplace_back(factor, mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.degree() != y.first.degree()) return x.first.degree() < y.first.degree();
    return x.first.c < y.first.c;
  });
  return out;
}

bool is_irreducible_q(const int_poly& p) {
  if (p.degree() <= 0) return false;
  auto f = factor_rational(p);
  return f.size() == 1 && f[0].second == 1 && f[0].first.degree() == p.degree();
}

}  // namespace weiltor
