#include "artin/nt/quartic.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::nt {

namespace {

// Closed discriminant formulas in the coefficients (leading first: a x^n + ...).
template <class T, class K>
T disc_formula(const std::vector<T>& f, K k) {
  const std::size_t n = f.size() - 1;
  if (n == 1) return k(1);
  if (n == 2) {
    const T &a = f[2], &b = f[1], &c = f[0];
    return b * b - k(4) * a * c;
  }
  if (n == 3) {
    const T &a = f[3], &b = f[2], &c = f[1], &d = f[0];
    return b * b * c * c - k(4) * a * c * c * c - k(4) * b * b * b * d - k(27) * a * a * d * d +
           k(18) * a * b * c * d;
  }
  if (n == 4) {
    const T &a = f[4], &b = f[3], &c = f[2], &d = f[1], &e = f[0];
    return k(256) * a * a * a * e * e * e - k(192) * a * a * b * d * e * e - k(128) * a * a * c * c * e * e +
           k(144) * a * a * c * d * d * e - k(27) * a * a * d * d * d * d + k(144) * a * b * b * c * e * e -
           k(6) * a * b * b * d * d * e - k(80) * a * b * c * c * d * e + k(18) * a * b * c * d * d * d +
           k(16) * a * c * c * c * c * e - k(4) * a * c * c * c * d * d - k(27) * b * b * b * b * e * e +
           k(18) * b * b * b * c * d * e - k(4) * b * b * b * d * d * d - k(4) * b * b * c * c * c * e +
           b * b * c * c * d * d;
  }
  throw PreconditionError("closed discriminant formula only for degree 1..4");
}

// det of a square matrix over a field by Gaussian elimination.
template <class T, class IsZero>
T determinant(std::vector<std::vector<T>> m, const T& one, IsZero is_zero) {
  const std::size_t n = m.size();
  T det = one;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && is_zero(m[piv][col])) ++piv;
    if (piv == n) return one - one;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = (one - one) - det;
    }
    det = det * m[col][col];
    T inv = one / m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (is_zero(m[r][col])) continue;
      T factor = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] = m[r][c] - factor * m[col][c];
    }
  }
  return det;
}

// (-1)^(n(n-1)/2) Res(f, f') / a_n, coefficients constant first.
template <class T, class K, class IsZero>
T disc_resultant(const std::vector<T>& f, K k, IsZero is_zero) {
  const std::size_t n = f.size() - 1;
  if (n < 1) throw PreconditionError("discriminant of a constant");
  if (n == 1) return k(1);
  std::vector<T> df(n);
  for (std::size_t i = 1; i <= n; ++i) df[i - 1] = f[i] * k(static_cast<long>(i));
  const std::size_t m = n - 1, size = n + m;
  std::vector<std::vector<T>> s(size, std::vector<T>(size, k(0)));
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t i = 0; i <= n; ++i) s[r][r + i] = f[n - i];
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t i = 0; i <= m; ++i) s[m + r][r + i] = df[m - i];
  T res = determinant(s, k(1), is_zero);
  T d = res / f[n];
  if ((n * (n - 1) / 2) % 2 == 1) d = k(0) - d;
  return d;
}

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  for (mpz_class k = 1; k * k <= n; ++k)
    if (n % k == 0) {
      out.push_back(k);
      if (k * k != n) out.push_back(n / k);
    }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class eval(const ZPoly& f, const mpz_class& x) {
  mpz_class r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

bool is_square(const mpz_class& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()); }

ZPoly make_monic_quartic(const ZPoly& f) {
  if (f.size() != 5) throw PreconditionError("expected a quartic, got degree " + std::to_string(f.size() - 1));
  const mpz_class& a = f[4];
  if (a == 1) return f;
  // a^3 f(x / a) is monic with integer coefficients.
  ZPoly g(5);
  mpz_class pw = 1;
  for (std::size_t i = 4; i-- > 0;) {
    g[i] = f[i] * pw;
    pw *= a;
  }
  g[4] = 1;
  return g;
}

}  // namespace

mpz_class discriminant(const ZPoly& f) {
  if (f.size() < 2) throw PreconditionError("discriminant of a constant");
  if (f.size() <= 5) {
    std::vector<mpz_class> g(f.begin(), f.end());
    return disc_formula(g, [](long v) { return mpz_class(v); });
  }
  std::vector<mpq_class> q(f.begin(), f.end());
  auto d = disc_resultant(q, [](long v) { return mpq_class(v); }, [](const mpq_class& x) { return x == 0; });
  return d.get_num();
}

QuadNum discriminant(const EPoly& f) {
  if (f.size() < 2 || f.size() > 5) throw PreconditionError("discriminant over E needs degree 1..4");
  long d = f.back().d;
  return disc_formula(f, [d](long v) { return QuadNum(d, v); });
}

QuadNum discriminant_sylvester(const EPoly& f) {
  if (f.size() < 2) throw PreconditionError("discriminant of a constant");
  long d = f.back().d;
  return disc_resultant(f, [d](long v) { return QuadNum(d, v); }, [](const QuadNum& x) { return x.is_zero(); });
}

ZPoly resolvent_cubic(const ZPoly& f) {
  auto g = f;
  if (g.size() != 5 || g[4] != 1) throw PreconditionError("resolvent_cubic needs a monic quartic");
  const mpz_class &a = g[3], &b = g[2], &c = g[1], &d = g[0];
  return {-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, 1};
}

std::vector<unsigned> cycle_type(const ZPoly& f, std::uint64_t p) {
  if (f.size() < 2) throw PreconditionError("cycle_type of a constant");
  auto pm = static_cast<unsigned long>(p);
  if (f.back() % pm == 0 || discriminant(f) % pm == 0)
    throw PreconditionError("prime " + std::to_string(p) + " is ramified or divides the leading coefficient");
  auto fq = Fq::prime(p);
  return factor_poly(fq, reduce_mod(f, p)).degrees();
}

std::vector<mpz_class> rational_roots(const ZPoly& f) {
  if (f.empty() || f.back() != 1) throw PreconditionError("rational_roots needs a monic integer polynomial");
  std::vector<mpz_class> out;
  std::size_t low = 0;
  while (low < f.size() && f[low] == 0) ++low;
  if (low > 0) out.push_back(0);
  ZPoly g(f.begin() + static_cast<long>(low), f.end());
  for (const auto& k : divisors(g[0]))
    for (const mpz_class& r : {mpz_class(k), mpz_class(-k)})
      if (eval(g, r) == 0) out.push_back(r);
  std::sort(out.begin(), out.end());
  return out;
}

bool quartic_reducible(const ZPoly& f) {
  if (f.size() != 5 || f[4] != 1) throw PreconditionError("quartic_reducible needs a monic quartic");
  if (!rational_roots(f).empty()) return true;
  const mpz_class &a = f[3], &b = f[2], &c = f[1], &d = f[0];
  // (x^2 + u x + v)(x^2 + u' x + v') with v v' = d.
  for (const auto& k : divisors(d))
    for (const mpz_class& v : {mpz_class(k), mpz_class(-k)}) {
      mpz_class w = d / v;
      if (v != w) {
        mpz_class num = c - a * v, den = w - v;
        if (num % den != 0) continue;
        mpz_class u = num / den, u2 = a - u;
        if (u * u2 + v + w == b) return true;
      } else {
        if (c != a * v) continue;
        mpz_class disc = a * a - 4 * (b - 2 * v);
        if (!is_square(disc)) continue;
        mpz_class s;
        mpz_sqrt(s.get_mpz_t(), disc.get_mpz_t());
        if ((a + s) % 2 == 0) return true;
      }
    }
  return false;
}

std::string to_string(QuarticGroup g) {
  switch (g) {
    case QuarticGroup::S4:
      return "S4";
    case QuarticGroup::A4:
      return "A4";
    case QuarticGroup::D4:
      return "D4";
    case QuarticGroup::C4:
      return "C4";
    case QuarticGroup::V:
      return "V";
  }
  return "?";
}

QuarticGroup quartic_galois_over_Q(const ZPoly& input) {
  auto f = make_monic_quartic(input);
  const mpz_class disc = discriminant(f);
  if (disc == 0) throw PreconditionError("quartic is not separable");
  // Cheap certificate first: irreducible modulo some unramified prime.
  bool certified = false;
  for (auto p : primes_up_to(200)) {
    if (disc % static_cast<unsigned long>(p) == 0) continue;
    if (cycle_type(f, p) == std::vector<unsigned>{4}) {
      certified = true;
      break;
    }
  }
  if (!certified && quartic_reducible(f)) throw PreconditionError("quartic is reducible over Q");
  auto roots = rational_roots(resolvent_cubic(f));
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  if (roots.empty()) return is_square(disc) ? QuarticGroup::A4 : QuarticGroup::S4;
  if (roots.size() >= 2) return QuarticGroup::V;
  // One rational root r: C4 iff x^2 - r x + d and x^2 + a x + (b - r) split over Q(sqrt D).
  const mpz_class &a = f[3], &b = f[2], &d = f[0], &r = roots[0];
  auto splits = [&](const mpz_class& delta) { return is_square(delta) || is_square(delta * disc); };
  return splits(r * r - 4 * d) && splits(a * a - 4 * (b - r)) ? QuarticGroup::C4 : QuarticGroup::D4;
}

std::string to_string(const CycleType& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

const std::map<CycleType, double>& s4_densities() {
  static const std::map<CycleType, double> d{{{1, 1, 1, 1}, 1.0 / 24},
                                             {{2, 1, 1}, 6.0 / 24},
                                             {{2, 2}, 3.0 / 24},
                                             {{3, 1}, 8.0 / 24},
                                             {{4}, 6.0 / 24}};
  return d;
}

namespace {

void finish_report(SamplingReport& r) {
  bool ok = true;
  std::ostringstream os;
  for (const auto& [type, dens] : s4_densities()) {
    double expected = dens * static_cast<double>(r.samples);
    auto it = r.counts.find(type);
    double seen = it == r.counts.end() ? 0.0 : static_cast<double>(it->second);
    bool within = std::abs(seen - expected) <= r.tolerance * expected;
    ok = ok && within;
    os << to_string(type) << " " << seen << "/" << expected << (within ? " ok" : " off") << "; ";
  }
  for (const auto& [type, n] : r.counts)
    if (!s4_densities().count(type)) {
      ok = false;
      os << to_string(type) << " " << n << " not an S4 type; ";
    }
  r.s4_consistent = ok;
  r.verdict = (ok ? "consistent with S4: " : "not consistent with S4: ") + os.str();
}

// Runs `type_at` over candidate primes in increasing order until `count`
// samples (non-empty results) are collected.
template <class F>
SamplingReport sample(std::size_t count, par::Exec exec, F type_at) {
  if (count < 100) throw PreconditionError("frobenius_sampling needs at least 100 samples");
  SamplingReport r;
  std::uint64_t bound = std::max<std::uint64_t>(1000, count * 16);
  auto primes = primes_up_to(bound);
  std::size_t next = 0;
  // Chunks sized from the usable fraction seen so far; results are consumed in
  // prime order, so the outcome does not depend on the chunking or the threads.
  while (r.samples < count) {
    if (next == primes.size()) {
      if (bound > (1u << 26)) throw PreconditionError("too few usable primes for frobenius_sampling");
      bound *= 4;
      primes = primes_up_to(bound);
    }
    const std::size_t want = count - r.samples;
    const double usable = next == 0 ? 0.5 : std::max(0.05, static_cast<double>(r.samples) / static_cast<double>(next));
    const std::size_t chunk =
        std::min(primes.size() - next, static_cast<std::size_t>(static_cast<double>(want) / usable * 1.1) + 16);
    std::vector<std::optional<CycleType>> types(chunk);
    par::for_each_index(chunk, [&](std::size_t i) { types[i] = type_at(primes[next + i]); }, exec);
    for (std::size_t i = 0; i < chunk && r.samples < count; ++i) {
      if (!types[i]) continue;
      ++r.counts[*types[i]];
      r.per_prime.emplace_back(primes[next + i], *types[i]);
      ++r.samples;
      r.largest_prime = primes[next + i];
    }
    next += chunk;
  }
  finish_report(r);
  return r;
}

}  // namespace

SamplingReport frobenius_sampling(const ZPoly& f, std::size_t count, par::Exec exec) {
  const mpz_class bad = discriminant(f) * f.back();
  if (bad == 0) throw PreconditionError("polynomial is not separable");
  return sample(count, exec, [&](std::uint64_t p) -> std::optional<CycleType> {
    if (bad % static_cast<unsigned long>(p) == 0) return std::nullopt;
    return factor_poly(Fq::prime(p), reduce_mod(f, p)).degrees();
  });
}

SamplingReport frobenius_sampling(const QuadField& e, const EPoly& f, std::size_t count, par::Exec exec) {
  for (const auto& c : f)
    if (!is_integral(e, c)) throw PreconditionError("polynomial over E must have integral coefficients");
  const QuadNum disc = discriminant(f);
  if (disc.is_zero()) throw PreconditionError("polynomial is not separable");
  return sample(count, exec, [&](std::uint64_t p) -> std::optional<CycleType> {
    if (p == 2 || kronecker_disc(e, p) != 1) return std::nullopt;
    auto root = sqrt_mod(mpz_class(e.d), p);
    if (reduce_split(disc, p, root) == 0 || reduce_split(f.back(), p, root) == 0) return std::nullopt;
    FqPoly g;
    for (const auto& c : f) g.push_back({reduce_split(c, p, root), 0});
    trim(g);
    return factor_poly(Fq::prime(p), g).degrees();
  });
}

bool condition_i(const Fq& f, const FqPoly& f1) {
  if (degree(f1) != 4 || !is_irreducible(f, f1)) return false;
  return std::any_of(f1.begin(), f1.end(), [](FqElem c) { return c.b != 0; });
}

bool condition_ii(const Fq& f, const FqPoly& f2) {
  if (degree(f2) != 4) return false;
  auto fac = factor_poly(f, f2, 7);
  if (fac.degrees() != std::vector<unsigned>{2, 1, 1}) return false;
  return std::all_of(fac.factors.begin(), fac.factors.end(), [](const auto& x) { return x.second == 1; });
}

bool condition_iii(const Fq& f, const FqPoly& f3) {
  if (degree(f3) != 4) return false;
  return factor_poly(f, f3, 7).degrees() == std::vector<unsigned>{3, 1};
}

bool condition_v(const QuadNum& disc) {
  if (disc.is_zero()) return false;
  auto dt = disc.conj();
  return !square_in_quadratic(dt) && !square_in_quadratic(disc * dt);
}

std::array<bool, 5> verify_candidate(const QuarticCandidate& c, std::vector<std::string>* evidence) {
  std::array<bool, 5> flags{};
  std::vector<std::string> ev(5);
  const auto& e = c.field;
  const auto& f = c.coefficients;
  bool shape = f.size() == 5 && f[4] == QuadNum(e.d, 1) &&
               std::all_of(f.begin(), f.end(), [&](const QuadNum& x) { return is_integral(e, x); });
  std::array<FqPoly, 3> red;
  std::array<Fq, 3> fields;
  bool inert = true;
  for (std::size_t j = 0; j < 3; ++j) {
    if (kronecker_disc(e, c.primes[j]) != -1) {
      inert = false;
      continue;
    }
    fields[j] = residue_field(e, c.primes[j]);
    if (shape) red[j] = reduce_inert(e, fields[j], f);
  }
  if (!shape || !inert) {
    if (evidence) *evidence = {"not a monic integral quartic over three inert primes"};
    return flags;
  }
  flags[0] = condition_i(fields[0], red[0]);
  ev[0] = "f mod " + std::to_string(c.primes[0]) + " = [" + poly_str(fields[0], red[0]) + "] " +
          (flags[0] ? "irreducible of degree 4 with a coefficient outside F_p" : "fails");
  flags[1] = condition_ii(fields[1], red[1]);
  ev[1] = "f mod " + std::to_string(c.primes[1]) + " factor degrees " +
          to_string(factor_poly(fields[1], red[1], 11).degrees()) + (flags[1] ? " distinct linears" : "");
  flags[2] = condition_iii(fields[2], red[2]);
  ev[2] = "f mod " + std::to_string(c.primes[2]) + " factor degrees " +
          to_string(factor_poly(fields[2], red[2], 11).degrees());
  flags[3] = true;
  for (std::size_t j = 0; j < 3; ++j) flags[3] = flags[3] && red[j] == c.residues[j];
  ev[3] = flags[3] ? "f = f_j mod p_j for j = 1, 2, 3" : "reduction differs from the stored residue";
  auto disc = discriminant_sylvester(f);
  bool disc_ok = disc == c.disc;
  auto dt = disc.conj();
  bool sq1 = square_in_quadratic(dt), sq2 = square_in_quadratic(disc * dt);
  flags[4] = disc_ok && !disc.is_zero() && !sq1 && !sq2;
  ev[4] = "D = " + disc.str() + (disc_ok ? "" : " (stored value differs)") + "; D^theta square in E: " +
          (sq1 ? "yes" : "no") + "; D D^theta square in E: " + (sq2 ? "yes" : "no");
  if (evidence) *evidence = std::move(ev);
  return flags;
}

QuarticCandidate search_quartic(const QuadField& e, const std::array<std::uint64_t, 3>& primes,
                                const SearchOptions& opts) {
  if (primes[0] == primes[1] || primes[0] == primes[2] || primes[1] == primes[2])
    throw PreconditionError("search_quartic needs three distinct primes");
  std::array<Fq, 3> fields;
  for (std::size_t j = 0; j < 3; ++j) fields[j] = residue_field(e, primes[j]);  // throws unless inert
  std::mt19937_64 rng(opts.seed);
  using Check = bool (*)(const Fq&, const FqPoly&);
  const std::array<Check, 3> checks{condition_i, condition_ii, condition_iii};
  if (opts.targets) {
    for (std::size_t j = 0; j < 3; ++j) {
      const auto& t = (*opts.targets)[j];
      if (degree(t) != 4 || !(t.back() == FqElem{1, 0}))
        throw PreconditionError("residue target " + std::to_string(j + 1) + " is not a monic quartic");
      for (const auto& x : t)
        if (x.a >= primes[j] || x.b >= primes[j])
          throw PreconditionError("residue target " + std::to_string(j + 1) + " has entries outside the field");
      if (!checks[j](fields[j], t))
        throw PreconditionError("residue target " + std::to_string(j + 1) + " violates its condition");
    }
  }
  mpz_class modulus = 1;
  for (auto p : primes) modulus *= static_cast<unsigned long>(p);
  std::uniform_int_distribution<long> height(-opts.repair_height, opts.repair_height);

  auto random_monic = [&](const Fq& f) {
    std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
    FqPoly g(5);
    for (std::size_t i = 0; i < 4; ++i) g[i] = {d(rng), d(rng)};
    g[4] = {1, 0};
    return g;
  };
  // Integer congruent to r[j] mod p_j, centred in (-P/2, P/2].
  auto crt = [&](const std::array<std::uint64_t, 3>& r) {
    mpz_class x = 0;
    for (std::size_t j = 0; j < 3; ++j) {
      mpz_class pj = static_cast<unsigned long>(primes[j]);
      mpz_class m = modulus / pj, inv;
      mpz_invert(inv.get_mpz_t(), m.get_mpz_t(), pj.get_mpz_t());
      x += mpz_class(static_cast<unsigned long>(r[j])) * m * inv;
    }
    x %= modulus;
    if (2 * x > modulus) x -= modulus;
    return x;
  };

  std::size_t attempts = 0, repairs = 0, base_draws = 0;
  while (attempts < opts.budget) {
    std::array<FqPoly, 3> res;
    bool ok = true;
    for (std::size_t j = 0; j < 3 && ok; ++j) {
      if (opts.targets) {
        res[j] = (*opts.targets)[j];
        continue;
      }
      for (;;) {
        if (attempts >= opts.budget) {
          ok = false;
          break;
        }
        ++attempts;
        res[j] = random_monic(fields[j]);
        if (checks[j](fields[j], res[j])) break;
      }
    }
    if (!ok) break;
    ++base_draws;
    EPoly base(5);
    for (std::size_t i = 0; i < 4; ++i) {
      std::array<std::uint64_t, 3> ra{}, rb{};
      for (std::size_t j = 0; j < 3; ++j) {
        ra[j] = res[j][i].a;
        rb[j] = res[j][i].b;
      }
      base[i] = QuadNum::from_omega(e, crt(ra), crt(rb));
    }
    base[4] = QuadNum(e.d, 1);
    for (std::size_t r = 0; r <= opts.repairs_per_base && attempts < opts.budget; ++r) {
      ++attempts;
      EPoly f = base;
      if (r > 0) {
        ++repairs;
        for (std::size_t i = 0; i < 4; ++i)
          f[i] = f[i] + QuadNum::from_omega(e, modulus * height(rng), modulus * height(rng));
      }
      auto disc = discriminant(f);
      if (!condition_v(disc)) continue;
      QuarticCandidate c;
      c.field = e;
      c.primes = primes;
      c.coefficients = f;
      c.residues = res;
      c.disc = disc;
      c.attempts = attempts;
      c.repairs = r;
      c.flags = verify_candidate(c, &c.evidence);
      if (std::all_of(c.flags.begin(), c.flags.end(), [](bool b) { return b; })) return c;
      throw ConsistencyError("search produced a candidate that fails re-verification: " + epoly_str(f));
    }
    if (opts.targets && repairs > opts.budget) break;
  }
  throw SearchFailure("search_quartic exhausted " + std::to_string(attempts) + " attempts (" +
                      std::to_string(base_draws) + " residue triples, " + std::to_string(repairs) + " repairs)");
}

}  // namespace artin::nt
