#include "artin/nt/finite_field.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::nt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }
u64 addmod(u64 a, u64 b, u64 p) { return (a + b) % p; }
u64 submod(u64 a, u64 b, u64 p) { return (a + p - b) % p; }

u64 powmod(u64 a, u64 k, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (k) {
    if (k & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    k >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionError("inverse of zero in F_p");
  return powmod(a, p - 2, p);
}

u64 reduce_signed(std::int64_t v, u64 p) {
  auto m = static_cast<std::int64_t>(p);
  auto r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

}  // namespace

Fq Fq::prime(std::uint64_t p) {
  if (!is_prime(p)) throw PreconditionError("F_p needs a prime, got " + std::to_string(p));
  Fq f;
  f.p = p;
  return f;
}

Fq Fq::quadratic(std::uint64_t p, std::int64_t c0, std::int64_t c1) {
  Fq f = prime(p);
  f.e = 2;
  f.c0 = reduce_signed(c0, p);
  f.c1 = reduce_signed(c1, p);
  // t^2 - c1 t - c0 has no root in F_p.
  for (u64 x = 0; x < p; ++x)
    if (submod(submod(mulmod(x, x, p), mulmod(f.c1, x, p), p), f.c0, p) == 0)
      throw PreconditionError("defining quadratic is reducible mod " + std::to_string(p));
  return f;
}

mpz_class Fq::size() const {
  mpz_class q;
  mpz_ui_pow_ui(q.get_mpz_t(), p, e);
  return q;
}

FqElem fq_from_int(const Fq& f, std::int64_t v) { return {reduce_signed(v, f.p), 0}; }

FqElem fq_add(const Fq& f, FqElem x, FqElem y) { return {addmod(x.a, y.a, f.p), addmod(x.b, y.b, f.p)}; }
FqElem fq_sub(const Fq& f, FqElem x, FqElem y) { return {submod(x.a, y.a, f.p), submod(x.b, y.b, f.p)}; }
FqElem fq_neg(const Fq& f, FqElem x) { return {submod(0, x.a, f.p), submod(0, x.b, f.p)}; }

FqElem fq_mul(const Fq& f, FqElem x, FqElem y) {
  const u64 p = f.p;
  if (f.e == 1) return {mulmod(x.a, y.a, p), 0};
  u64 bd = mulmod(x.b, y.b, p);
  u64 a = addmod(mulmod(x.a, y.a, p), mulmod(bd, f.c0, p), p);
  u64 b = addmod(addmod(mulmod(x.a, y.b, p), mulmod(x.b, y.a, p), p), mulmod(bd, f.c1, p), p);
  return {a, b};
}

FqElem fq_inv(const Fq& f, FqElem x) {
  const u64 p = f.p;
  if (x.is_zero()) throw DivisionError("inverse of zero in F_q");
  if (f.e == 1) return {invmod(x.a, p), 0};
  // (a + bt)(a + b c1 - b t) = a^2 + a b c1 - b^2 c0.
  u64 n = submod(addmod(mulmod(x.a, x.a, p), mulmod(mulmod(x.a, x.b, p), f.c1, p), p),
                 mulmod(mulmod(x.b, x.b, p), f.c0, p), p);
  u64 ni = invmod(n, p);
  return {mulmod(addmod(x.a, mulmod(x.b, f.c1, p), p), ni, p), mulmod(submod(0, x.b, p), ni, p)};
}

FqElem fq_pow(const Fq& f, FqElem x, const mpz_class& k) {
  if (k < 0) return fq_pow(f, fq_inv(f, x), -k);
  FqElem r{1 % f.p, 0};
  auto bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (auto i = bits; i-- > 0;) {
    r = fq_mul(f, r, r);
    if (mpz_tstbit(k.get_mpz_t(), i)) r = fq_mul(f, r, x);
  }
  return r;
}

FqElem fq_frobenius(const Fq& f, FqElem x) {
  if (f.e == 1) return x;
  // t -> c1 - t, the other root of the defining quadratic.
  return {addmod(x.a, mulmod(x.b, f.c1, f.p), f.p), submod(0, x.b, f.p)};
}

std::string fq_str(const Fq& f, FqElem x) {
  if (f.e == 1 || x.b == 0) return std::to_string(x.a);
  std::string t = x.b == 1 ? "t" : std::to_string(x.b) + "t";
  return x.a == 0 ? t : std::to_string(x.a) + "+" + t;
}

void trim(FqPoly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

long degree(const FqPoly& a) { return static_cast<long>(a.size()) - 1; }

FqPoly poly_add(const Fq& f, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fq_add(f, i < a.size() ? a[i] : FqElem{}, i < b.size() ? b[i] : FqElem{});
  trim(r);
  return r;
}

FqPoly poly_sub(const Fq& f, const FqPoly& a, const FqPoly& b) {
  FqPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = fq_sub(f, i < a.size() ? a[i] : FqElem{}, i < b.size() ? b[i] : FqElem{});
  trim(r);
  return r;
}

FqPoly poly_mul(const Fq& f, const FqPoly& a, const FqPoly& b) {
  if (a.empty() || b.empty()) return {};
  FqPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fq_add(f, r[i + j], fq_mul(f, a[i], b[j]));
  }
  trim(r);
  return r;
}

std::pair<FqPoly, FqPoly> poly_divmod(const Fq& f, const FqPoly& a, const FqPoly& b) {
  if (b.empty()) throw DivisionError("polynomial division by zero");
  FqPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  FqPoly q(r.size() - b.size() + 1);
  FqElem lead_inv = fq_inv(f, b.back());
  for (std::size_t k = q.size(); k-- > 0;) {
    FqElem c = fq_mul(f, r[k + b.size() - 1], lead_inv);
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = fq_sub(f, r[k + j], fq_mul(f, c, b[j]));
  }
  r.resize(b.size() - 1);
  trim(r);
  trim(q);
  return {q, r};
}

FqPoly poly_mod(const Fq& f, const FqPoly& a, const FqPoly& b) { return poly_divmod(f, a, b).second; }

FqPoly poly_monic(const Fq& f, const FqPoly& a) {
  if (a.empty()) return a;
  FqElem li = fq_inv(f, a.back());
  FqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = fq_mul(f, a[i], li);
  return r;
}

FqPoly poly_gcd(const Fq& f, FqPoly a, FqPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = poly_mod(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(f, a);
}

FqPoly poly_derivative(const Fq& f, const FqPoly& a) {
  if (a.size() <= 1) return {};
  FqPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i)
    r[i - 1] = fq_mul(f, a[i], fq_from_int(f, static_cast<std::int64_t>(i % f.p)));
  trim(r);
  return r;
}

FqPoly poly_powmod(const Fq& f, FqPoly base, const mpz_class& k, const FqPoly& m) {
  FqPoly r{FqElem{1 % f.p, 0}};
  r = poly_mod(f, r, m);
  base = poly_mod(f, base, m);
  auto bits = mpz_sizeinbase(k.get_mpz_t(), 2);
  for (auto i = bits; i-- > 0;) {
    r = poly_mod(f, poly_mul(f, r, r), m);
    if (mpz_tstbit(k.get_mpz_t(), i)) r = poly_mod(f, poly_mul(f, r, base), m);
  }
  return r;
}

std::string poly_str(const Fq& f, const FqPoly& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << fq_str(f, a[i]);
  }
  return os.str();
}

std::vector<unsigned> Factorization::degrees() const {
  std::vector<unsigned> out;
  for (const auto& [g, m] : factors)
    for (unsigned k = 0; k < m; ++k) out.push_back(static_cast<unsigned>(degree(g)));
  std::sort(out.rbegin(), out.rend());
  return out;
}

namespace {

FqPoly x_poly() { return {FqElem{}, FqElem{1, 0}}; }

// p-th root of a polynomial whose derivative vanishes.
FqPoly pth_root(const Fq& f, const FqPoly& a) {
  FqPoly r;
  // x -> x^(q/p) inverts Frobenius on F_q.
  mpz_class qp = f.size() / f.p;
  for (std::size_t i = 0; i < a.size(); i += f.p) r.push_back(fq_pow(f, a[i], qp));
  trim(r);
  return r;
}

void squarefree(const Fq& f, const FqPoly& a, unsigned mult, std::vector<std::pair<FqPoly, unsigned>>& out) {
  if (degree(a) <= 0) return;
  auto da = poly_derivative(f, a);
  if (da.empty()) {
    squarefree(f, pth_root(f, a), mult * static_cast<unsigned>(f.p), out);
    return;
  }
  auto c = poly_gcd(f, a, da);
  auto w = poly_divmod(f, a, c).first;
  unsigned i = 1;
  while (degree(w) > 0) {
    auto y = poly_gcd(f, w, c);
    auto z = poly_divmod(f, w, y).first;
    if (degree(z) > 0) out.push_back({poly_monic(f, z), i * mult});
    ++i;
    w = y;
    c = poly_divmod(f, c, y).first;
  }
  if (degree(c) > 0) squarefree(f, pth_root(f, c), mult * static_cast<unsigned>(f.p), out);
}

FqElem random_elem(const Fq& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> d(0, f.p - 1);
  FqElem x{d(rng), 0};
  if (f.e == 2) x.b = d(rng);
  return x;
}

// Splits a squarefree monic product of irreducibles of degree d.
void equal_degree(const Fq& f, const FqPoly& a, unsigned d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  auto n = static_cast<unsigned>(degree(a));
  if (n == d) {
    out.push_back(a);
    return;
  }
  const mpz_class q = f.size();
  mpz_class qd;
  mpz_pow_ui(qd.get_mpz_t(), q.get_mpz_t(), d);
  for (;;) {
    FqPoly r(n);
    for (auto& c : r) c = random_elem(f, rng);
    trim(r);
    if (degree(r) <= 0) continue;
    auto g = poly_gcd(f, r, a);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, poly_divmod(f, a, g).first, d, rng, out);
      return;
    }
    FqPoly b;
    if (f.p % 2 == 1) {
      b = poly_powmod(f, r, (qd - 1) / 2, a);
      b = poly_sub(f, b, {FqElem{1, 0}});
    } else {
      // Trace to F_2: r + r^2 + ... + r^(2^(k-1)), k = e d.
      unsigned k = f.e * d;
      FqPoly t = poly_mod(f, r, a), acc = t;
      for (unsigned i = 1; i < k; ++i) {
        t = poly_mod(f, poly_mul(f, t, t), a);
        acc = poly_add(f, acc, t);
      }
      b = acc;
    }
    g = poly_gcd(f, b, a);
    if (degree(g) > 0 && degree(g) < n) {
      equal_degree(f, g, d, rng, out);
      equal_degree(f, poly_divmod(f, a, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factor_poly(const Fq& f, const FqPoly& input, std::uint64_t seed) {
  FqPoly a = input;
  trim(a);
  if (a.empty()) throw PreconditionError("factor_poly: zero polynomial");
  Factorization out;
  out.unit = a.back();
  a = poly_monic(f, a);
  std::vector<std::pair<FqPoly, unsigned>> sqf;
  squarefree(f, a, 1, sqf);
  std::mt19937_64 rng(seed);
  const mpz_class q = f.size();
  for (const auto& [g, m] : sqf) {
    // Distinct-degree: gcd(x^(q^i) - x, g).
    FqPoly rest = g;
    FqPoly h = x_poly();
    for (unsigned i = 1; 2 * i <= static_cast<unsigned>(degree(rest)); ++i) {
      h = poly_powmod(f, h, q, rest);
      auto part = poly_gcd(f, poly_sub(f, h, x_poly()), rest);
      if (degree(part) > 0) {
        std::vector<FqPoly> pieces;
        equal_degree(f, part, i, rng, pieces);
        for (auto& pc : pieces) out.factors.push_back({pc, m});
        rest = poly_divmod(f, rest, part).first;
        h = poly_mod(f, h, rest);
      }
    }
    if (degree(rest) > 0) out.factors.push_back({poly_monic(f, rest), m});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return std::lexicographical_compare(x.first.begin(), x.first.end(), y.first.begin(), y.first.end(),
                                        [](FqElem u, FqElem v) { return std::pair(u.a, u.b) < std::pair(v.a, v.b); });
  });
  return out;
}

bool is_irreducible(const Fq& f, const FqPoly& input) {
  FqPoly a = poly_monic(f, input);
  long n = degree(a);
  if (n < 1) return false;
  if (n == 1) return true;
  const mpz_class q = f.size();
  auto frob_power = [&](long k) {
    FqPoly h = x_poly();
    for (long i = 0; i < k; ++i) h = poly_powmod(f, h, q, a);
    return h;
  };
  if (poly_sub(f, frob_power(n), x_poly()).size() != 0) return false;
  for (long r = 2; r <= n; ++r) {
    if (n % r != 0) continue;
    bool prime = true;
    for (long s = 2; s * s <= r; ++s) prime = prime && r % s != 0;
    if (!prime) continue;
    if (degree(poly_gcd(f, poly_sub(f, frob_power(n / r), x_poly()), a)) != 0) return false;
  }
  return true;
}

FqPoly expand(const Fq& f, const Factorization& fac) {
  FqPoly r{fac.unit};
  for (const auto& [g, m] : fac.factors)
    for (unsigned k = 0; k < m; ++k) r = poly_mul(f, r, g);
  return r;
}

FqPoly reduce_mod(const ZPoly& a, std::uint64_t p) {
  FqPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_class m = a[i] % static_cast<unsigned long>(p);
    if (m < 0) m += static_cast<unsigned long>(p);
    r[i] = {m.get_ui(), 0};
  }
  trim(r);
  return r;
}

std::string zpoly_str(const ZPoly& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ",";
    os << a[i].get_str();
  }
  return os.str();
}

ZPoly parse_zpoly(const std::string& text) {
  ZPoly out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw ParseError("empty coefficient in '" + text + "'");
    mpz_class v;
    if (v.set_str(item.substr(b, e - b + 1), 10) != 0) throw ParseError("bad coefficient '" + item + "'");
    out.push_back(v);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  if (out.empty()) throw ParseError("zero polynomial");
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
    if (n % d == 0) return n == d;
  return mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(n)).get_mpz_t(), 30) > 0;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<bool> comp(bound + 1, false);
  std::vector<std::uint64_t> out;
  for (u64 i = 2; i <= bound; ++i) {
    if (comp[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) comp[j] = true;
  }
  return out;
}

int legendre(const mpz_class& a, std::uint64_t p) {
  return mpz_kronecker_ui(a.get_mpz_t(), static_cast<unsigned long>(p));
}

std::uint64_t sqrt_mod(const mpz_class& value, std::uint64_t p) {
  mpz_class r = value % static_cast<unsigned long>(p);
  if (r < 0) r += static_cast<unsigned long>(p);
  u64 a = r.get_ui();
  if (a == 0) return 0;
  if (p == 2) return a;
  if (powmod(a, (p - 1) / 2, p) != 1) throw PreconditionError("not a square mod " + std::to_string(p));
  u64 q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
  u64 m = s, c = powmod(z, q, p), t = powmod(a, q, p), x = powmod(a, (q + 1) / 2, p);
  while (t != 1) {
    u64 i = 0, t2 = t;
    while (t2 != 1) {
      t2 = mulmod(t2, t2, p);
      ++i;
    }
    u64 b = c;
    for (u64 j = 0; j + 1 < m - i; ++j) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    x = mulmod(x, b, p);
  }
  return std::min(x, p - x);
}

}  // namespace artin::nt
