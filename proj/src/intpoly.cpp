#include "weiltor/intpoly.hpp"

#include <sstream>

namespace weiltor {

int_poly int_poly::from(std::initializer_list<long> coeffs) {
  std::vector<Int> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return int_poly(std::move(c));
}

int_poly int_poly::monomial(unsigned k, Int coeff) {
  std::vector<Int> c(k + 1, Int(0));
  c[k] = std::move(coeff);
  return int_poly(std::move(c));
}

void int_poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int_poly operator+(const int_poly& a, const int_poly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return int_poly(std::move(c));
}

int_poly operator-(const int_poly& a, const int_poly& b) {
  std::vector<Int> c(std::max(a.c.size(), b.c.size()), Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return int_poly(std::move(c));
}

int_poly operator-(const int_poly& a) {
  int_poly r = a;
  for (auto& x : r.c) x = -x;
  return r;
}

int_poly operator*(const int_poly& a, const int_poly& b) {
  if (a.is_zero() || b.is_zero()) return int_poly();
  std::vector<Int> c(a.c.size() + b.c.size() - 1, Int(0));
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  }
  return int_poly(std::move(c));
}

int_poly operator*(const int_poly& a, const Int& s) {
  if (s == 0) return int_poly();
  int_poly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

Int eval(const int_poly& p, const Int& x) {
  Int r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
  return r;
}

Rat eval(const int_poly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + Rat(p.c[i]);
  return r;
}

int_poly derivative(const int_poly& p) {
  if (p.c.size() <= 1) return int_poly();
  std::vector<Int> c(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) c[i - 1] = p.c[i] * Int(i);
  return int_poly(std::move(c));
}

Int content(const int_poly& p) {
  Int g = 0;
  for (const auto& x : p.c) g = gcd_int(g, x);
  if (!p.is_zero() && p.lead() < 0) g = -g;
  return g;
}

int_poly primitive_part(const int_poly& p) {
  if (p.is_zero()) return p;
  Int ct = content(p);
  int_poly r = p;
  for (auto& x : r.c) x /= ct;
  return r;
}

void divrem_monic(const int_poly& p, const int_poly& d, int_poly& q, int_poly& r) {
  if (!d.is_monic()) throw internal_error("divrem_monic: divisor not monic");
  r = p;
  int dd = d.degree();
  if (p.degree() < dd) { q = int_poly(); return; }
  std::vector<Int> qc(p.degree() - dd + 1, Int(0));
  while (r.degree() >= dd) {
    int k = r.degree() - dd;
    Int f = r.lead();
    qc[k] = f;
    for (int i = 0; i <= dd; ++i) r.c[k + i] -= f * d.c[i];
    r.normalize();
  }
  q = int_poly(std::move(qc));
}

std::optional<int_poly> divide_exact(const int_poly& p, const int_poly& d) {
  if (d.is_zero()) return std::nullopt;
  if (p.is_zero()) return int_poly();
  rat_poly q, r;
  divrem(rat_poly(p), rat_poly(d), q, r);
  if (!r.is_zero()) return std::nullopt;
  for (const auto& x : q.c) {
    if (den(x) != 1) return std::nullopt;
  }
  std::vector<Int> c(q.c.size());
  for (size_t i = 0; i < q.c.size(); ++i) c[i] = num(q.c[i]);
  return int_poly(std::move(c));
}

bool divides(const int_poly& d, const int_poly& p) {
  if (d.is_zero()) return p.is_zero();
  if (p.is_zero()) return true;
  rat_poly q, r;
  divrem(rat_poly(p), rat_poly(d), q, r);
  return r.is_zero();
}

int_poly gcd(const int_poly& a, const int_poly& b) {
  rat_poly g = gcd(rat_poly(a), rat_poly(b));
  if (g.is_zero()) return int_poly();
  return clear_denominators(g);
}

Int resultant(const int_poly& a, const int_poly& b) {
  // Euclidean remainder sequence over Q; exact for desk-scale degrees.
  if (a.is_zero() || b.is_zero()) return 0;
  rat_poly f(a), g(b);
  Rat acc = 1;
  for (;;) {
    int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      acc *= pow_rat(g.c[0], df);
      break;
    }
    if (df == 0) {
      acc *= pow_rat(f.c[0], dg);
      break;
    }
    if (df < dg) {
      if ((long(df) * dg) % 2 == 1) acc = -acc;
      std::swap(f, g);
      continue;
    }
    rat_poly q, r;
    divrem(f, g, q, r);
    if (r.is_zero()) return 0;
    int dr = r.degree();
    acc *= pow_rat(g.lead(), df - dr);
    if ((long(df) * dg) % 2 == 1) acc = -acc;
    f = g;
    g = r;
  }
  if (den(acc) != 1) throw internal_error("resultant: non-integer result");
  return num(acc);
}

Int discriminant(const int_poly& p) {
  if (p.degree() <= 0) throw internal_error("discriminant of constant");
  Int r = resultant(p, derivative(p));
  Int lead = p.lead();
  Int d = r / lead;
  long n = p.degree();
  if (((n * (n - 1)) / 2) % 2 == 1) d = -d;
  return d;
}

int_poly shift(const int_poly& p, const Int& s) {
  // Horner: p(t+s)
  int_poly r;
  for (size_t i = p.c.size(); i-- > 0;) {
    // r = r*(t+s) + c[i]
    if (!r.is_zero()) {
      int_poly rt = int_poly::monomial(1) * r;
      r = rt + r * s;
    }
    r = r + int_poly({p.c[i]});
  }
  return r;
}

int_poly scale_arg(const int_poly& p, const Int& s) {
  int_poly r = p;
  Int f = 1;
  for (size_t i = 0; i < r.c.size(); ++i) {
    r.c[i] *= f;
    f *= s;
  }
  r.normalize();
  return r;
}

int_poly monicize(const int_poly& p) {
  if (p.is_zero() || p.degree() == 0) throw internal_error("monicize: degenerate");
  if (p.is_monic()) return p;
  Int a = p.lead();
  int d = p.degree();
  // a^(d-1) p(t/a): coeff_i -> c_i * a^(d-1-i)
  std::vector<Int> c(p.c.size());
  for (int i = 0; i <= d; ++i) {
    // exactness: c_d * a^(d-1-d) = c_d / a = 1 handled separately
    if (i == d) c[i] = 1;
    else c[i] = p.c[i] * pow_int(a, d - 1 - i);
  }
  return int_poly(std::move(c));
}

std::vector<std::pair<int_poly, int>> squarefree_decomposition(const int_poly& p) {
  std::vector<std::pair<int_poly, int>> out;
  int_poly f = primitive_part(p);
  if (f.degree() <= 0) return out;
  int_poly a = gcd(f, derivative(f));
  int_poly b = *divide_exact(f, a);
  int_poly c = *divide_exact(derivative(f), a);
  int_poly d = c - derivative(b);
  int m = 1;
  while (!(b.degree() == 0)) {
    int_poly g = gcd(b, d);
    if (g.degree() > 0) out.emplace_back(primitive_part(g), m);
    b = *divide_exact(b, g);
    c = *divide_exact(d, g);
    d = c - derivative(b);
    ++m;
  }
  return out;
}

int_poly squarefree_part(const int_poly& p) {
  auto dec = squarefree_decomposition(p);
  int_poly r = int_poly::one();
  for (auto& [f, m] : dec) r = r * f;
  return r;
}

std::vector<Rat> power_sums(const int_poly& p, int k) {
  if (!p.is_monic()) throw internal_error("power_sums: not monic");
  int d = p.degree();
  // e_i = (-1)^i c_{d-i}
  std::vector<Rat> e(d + 1, Rat(0));
  e[0] = 1;
  for (int i = 1; i <= d; ++i) e[i] = Rat((i % 2 ? -1 : 1) * p.c[d - i]);
  std::vector<Rat> s(k + 1, Rat(0));
  for (int j = 1; j <= k; ++j) {
    // Newton: s_j = e_1 s_{j-1} - e_2 s_{j-2} + ... + (-1)^{j-1} j e_j  (e_i = 0 for i > d)
    Rat acc = 0;
    for (int i = 1; i < j; ++i) {
      if (i <= d) {
        Rat t = e[i] * s[j - i];
        acc += (i % 2 ? t : -t);
      }
    }
    if (j <= d) acc += Rat((j % 2 ? 1 : -1) * j) * e[j];
    s[j] = acc;
  }
  s.erase(s.begin());
  return s;
}

std::vector<Rat> poly_from_power_sums(const std::vector<Rat>& s) {
  int r = (int)s.size();
  std::vector<Rat> e(r + 1, Rat(0));
  e[0] = 1;
  for (int k = 1; k <= r; ++k) {
    // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} s_i
    Rat acc = 0;
    for (int i = 1; i <= k; ++i) {
      Rat t = e[k - i] * s[i - 1];
      acc += (i % 2 ? t : -t);
    }
    e[k] = acc / Rat(k);
  }
  // coefficients of t^r + c_{r-1}t^{r-1} + ... + c_0:  c_{r-i} = (-1)^i e_i
  std::vector<Rat> c(r, Rat(0));
  for (int i = 1; i <= r; ++i) c[r - i] = (i % 2 ? -e[i] : e[i]);
  return c;
}

namespace {
int_poly monic_from_rational_coeffs(const std::vector<Rat>& c) {
  std::vector<Int> ic(c.size() + 1);
  for (size_t i = 0; i < c.size(); ++i) {
    if (den(c[i]) != 1) throw internal_error("expected integral coefficients");
    ic[i] = num(c[i]);
  }
  ic[c.size()] = 1;
  return int_poly(std::move(ic));
}
}  // namespace

int_poly root_power_transform(const int_poly& p, unsigned k) {
  if (!p.is_monic()) throw internal_error("root_power_transform: not monic");
  int d = p.degree();
  if (d == 0) return int_poly::one();
  std::vector<Rat> s = power_sums(p, d * (int)k);
  std::vector<Rat> sk(d);
  for (int j = 1; j <= d; ++j) sk[j - 1] = s[j * k - 1];
  return monic_from_rational_coeffs(poly_from_power_sums(sk));
}

int_poly root_product_compose(const int_poly& a, const int_poly& b) {
  if (!a.is_monic() || !b.is_monic()) throw internal_error("root_product_compose: not monic");
  int da = a.degree(), db = b.degree();
  int d = da * db;
  if (d == 0) return int_poly::one();
  std::vector<Rat> sa = power_sums(a, d), sb = power_sums(b, d);
  std::vector<Rat> s(d);
  for (int j = 0; j < d; ++j) s[j] = sa[j] * sb[j];
  return monic_from_rational_coeffs(poly_from_power_sums(s));
}

int root_multiplicity(const int_poly& p, const Rat& x0) {
  int m = 0;
  int_poly f = p;
  while (!f.is_zero() && eval(f, x0) == 0) {
    ++m;
    f = derivative(f);
  }
  return m;
}

int_poly cyclotomic(unsigned n) {
  // x^n - 1 divided by all lower cyclotomics; uncached, sizes are tiny
  std::vector<Int> xn(n + 1, Int(0));
  xn[0] = -1;
  xn[n] = 1;
  int_poly f{std::vector<Int>(xn)};
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) f = *divide_exact(f, cyclotomic(d));
  }
  return f;
}

std::optional<int_poly> trace_polynomial(const int_poly& p, const Int& Q) {
  int d = p.degree();
  if (d <= 0 || d % 2 != 0 || !p.is_monic()) return std::nullopt;
  int g = d / 2;
  // require c_{g-j} = c_{g+j} * Q^j
  for (int j = 1; j <= g; ++j) {
    if (p.coeff(g - j) != p.coeff(g + j) * pow_int(Q, j)) return std::nullopt;
  }
  // w_0 = 2, w_1 = u, w_{j+1} = u w_j - Q w_{j-1};  H = c_g + sum c_{g+j} w_j
  int_poly w0 = int_poly({Int(2)});
  int_poly w1 = int_poly::x();
  int_poly H = int_poly({p.coeff(g)});
  if (g >= 1) H = H + w1 * p.coeff(g + 1);
  for (int j = 2; j <= g; ++j) {
    int_poly w2 = int_poly::x() * w1 - w0 * Q;
    H = H + w2 * p.coeff(g + j);
    w0 = w1;
    w1 = w2;
  }
  return H;
}

std::optional<int_poly> reversed_scaled(const int_poly& p, const Int& Q) {
  if (p.is_zero() || p.coeff(0) == 0) return std::nullopt;
  int d = p.degree();
  // t^d p(Q/t) has coefficients c_{d-i} Q^{d-i}; monic form divides by p(0)
  std::vector<Int> c(d + 1);
  for (int i = 0; i <= d; ++i) c[i] = p.coeff(d - i) * pow_int(Q, d - i);
  Int c0 = c[d];  // = p(0)
  for (int i = 0; i <= d; ++i) {
    if (c[i] % c0 != 0) return std::nullopt;
    c[i] /= c0;
  }
  return int_poly(std::move(c));
}

std::string to_string(const int_poly& p, const char* var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    Int a = p.coeff(i);
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    Int aa = abs_int(a);
    if (aa != 1 || i == 0) os << aa.str();
    if (i >= 1) {
      if (aa != 1) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
    first = false;
  }
  return os.str();
}

rat_poly::rat_poly(const int_poly& p) {
  c.reserve(p.c.size());
  for (const auto& x : p.c) c.emplace_back(x);
}

void rat_poly::normalize() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

rat_poly operator+(const rat_poly& a, const rat_poly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] += b.c[i];
  return rat_poly(std::move(c));
}

rat_poly operator-(const rat_poly& a, const rat_poly& b) {
  std::vector<Rat> c(std::max(a.c.size(), b.c.size()), Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i) c[i] += a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] -= b.c[i];
  return rat_poly(std::move(c));
}

rat_poly operator*(const rat_poly& a, const rat_poly& b) {
  if (a.is_zero() || b.is_zero()) return rat_poly();
  std::vector<Rat> c(a.c.size() + b.c.size() - 1, Rat(0));
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j) c[i + j] += a.c[i] * b.c[j];
  return rat_poly(std::move(c));
}

rat_poly operator*(const rat_poly& a, const Rat& s) {
  if (s == 0) return rat_poly();
  rat_poly r = a;
  for (auto& x : r.c) x *= s;
  return r;
}

Rat eval(const rat_poly& p, const Rat& x) {
  Rat r = 0;
  for (size_t i = p.c.size(); i-- > 0;) r = r * x + p.c[i];
  return r;
}

rat_poly derivative(const rat_poly& p) {
  if (p.c.size() <= 1) return rat_poly();
  std::vector<Rat> c(p.c.size() - 1);
  for (size_t i = 1; i < p.c.size(); ++i) c[i - 1] = p.c[i] * Rat(Int(i));
  return rat_poly(std::move(c));
}

void divrem(const rat_poly& a, const rat_poly& b, rat_poly& q, rat_poly& r) {
  if (b.is_zero()) throw internal_error("rat_poly division by zero");
  r = a;
  int db = b.degree();
  if (a.degree() < db) { q = rat_poly(); return; }
  std::vector<Rat> qc(a.degree() - db + 1, Rat(0));
  while (r.degree() >= db) {
    int k = r.degree() - db;
    Rat f = r.lead() / b.lead();
    qc[k] = f;
    for (int i = 0; i <= db; ++i) r.c[k + i] -= f * b.c[i];
    r.normalize();
  }
  q = rat_poly(std::move(qc));
}

rat_poly gcd(const rat_poly& a, const rat_poly& b) {
  rat_poly f = a, g = b;
  while (!g.is_zero()) {
    rat_poly q, r;
    divrem(f, g, q, r);
    f = g;
    g = r;
  }
  if (f.is_zero()) return f;
  Rat inv = Rat(1) / f.lead();
  return f * inv;
}

int_poly clear_denominators(const rat_poly& p) {
  Int d = 1;
  for (const auto& x : p.c) d = lcm_int(d, den(x));
  std::vector<Int> c(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) c[i] = num(p.c[i]) * (d / den(p.c[i]));
  return primitive_part(int_poly(std::move(c)));
}

}  // namespace weiltor
