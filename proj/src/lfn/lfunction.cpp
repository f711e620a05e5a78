#include "artin/lfn/lfunction.hpp"

#include <boost/math/special_functions/zeta.hpp>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "artin/chr/table.hpp"
#include "artin/errors.hpp"
#include "artin/grp/named.hpp"

namespace artin::lfn {

namespace {

std::string coeff_str(const Cyclo& c) {
  if (auto q = c.rational()) return cyc::to_string(*q);
  return "(" + c.str() + ")";
}

EulerFactor trimmed(EulerFactor f) {
  while (f.coeffs.size() > 1 && f.coeffs.back().is_zero()) f.coeffs.pop_back();
  return f;
}

std::vector<std::uint64_t> primes_to(std::uint64_t bound) { return nt::primes_up_to(bound); }

}  // namespace

std::string EulerFactor::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const Cyclo& c = coeffs[k];
    if (c.is_zero()) continue;
    std::string body;
    auto q = c.rational();
    bool negative = q && *q < 0;
    if (k == 0) {
      body = coeff_str(negative ? -c : c);
    } else {
      std::string mono = k == 1 ? "T" : "T^" + std::to_string(k);
      if (q && (*q == 1 || *q == -1))
        body = mono;
      else
        body = coeff_str(negative ? -c : c) + "*" + mono;
    }
    if (first)
      os << (negative ? "-" : "") << body;
    else
      os << (negative ? "-" : "+") << body;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

std::complex<double> EulerFactor::eval(std::complex<double> t) const {
  std::complex<double> r = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * t + coeffs[k].to_complex();
  return r;
}

EulerFactor multiply(const EulerFactor& a, const EulerFactor& b) {
  EulerFactor r;
  r.p = a.p ? a.p : b.p;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Cyclo(0));
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return trimmed(r);
}

EulerFactor local_factor(const ClassFunction& chi, ClassId c, std::uint64_t p) {
  if (!chr::is_character(chi, *chr::table_of(chi.group())))
    throw NotACharacterError("local_factor needs a character");
  EulerFactor f;
  f.p = p;
  f.coeffs = chr::charpoly_of_class(chi, c);
  return trimmed(f);
}

EulerFactor dedekind_local(const nt::ZPoly& f, std::uint64_t p) {
  EulerFactor r;
  r.p = p;
  for (unsigned d : nt::cycle_type(f, p)) {
    EulerFactor one;
    one.coeffs.assign(d + 1, Cyclo(0));
    one.coeffs[0] = Cyclo(1);
    one.coeffs[d] = Cyclo(-1);
    r = multiply(r, one);
  }
  r.p = p;
  return r;
}

ClassFunction a_NF_character(const Subgroup& h) {
  return chr::induce(h, ClassFunction::trivial(h.group)) - ClassFunction::trivial(h.parent);
}

nt::CycleType cycle_type_of(const grp::Perm& g) {
  nt::CycleType t;
  std::vector<bool> seen(g.degree(), false);
  for (std::size_t i = 0; i < g.degree(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (std::size_t j = i; !seen[j]; j = g[j]) {
      seen[j] = true;
      ++len;
    }
    t.push_back(len);
  }
  std::sort(t.rbegin(), t.rend());
  return t;
}

bool GaloisArithData::unramified(std::uint64_t p) const {
  auto pm = static_cast<unsigned long>(p);
  return disc % pm != 0 && f.back() % pm != 0;
}

ClassId GaloisArithData::frobenius_class(std::uint64_t p) const {
  if (!unramified(p)) throw PreconditionError("prime " + std::to_string(p) + " is ramified");
  auto type = nt::cycle_type(f, p);
  auto it = classes_of_type.find(type);
  if (it == classes_of_type.end())
    throw ConsistencyError("cycle type " + nt::to_string(type) + " at p=" + std::to_string(p) + " is not in " +
                           group_name);
  return it->second.front();
}

GaloisArithData galois_data(const nt::ZPoly& f) {
  const long n = static_cast<long>(f.size()) - 1;
  if (n < 2 || n > 4) throw PreconditionError("galois_data handles degrees 2..4");
  GaloisArithData d;
  d.f = f;
  d.disc = nt::discriminant(f);
  if (d.disc == 0) throw PreconditionError("polynomial is not separable");
  using grp::Perm;
  if (n == 2) {
    if (mpz_perfect_square_p(d.disc.get_mpz_t())) throw PreconditionError("quadratic is reducible");
    d.group = grp::cyclic(2);
    d.group_name = "C2";
  } else if (n == 3) {
    // lead^2 f(x / lead) is monic with integer coefficients
    nt::ZPoly g(4);
    mpz_class pw = 1;
    for (std::size_t i = 3; i-- > 0;) {
      g[i] = f[i] * pw;
      pw *= f[3];
    }
    g[3] = 1;
    if (!nt::rational_roots(g).empty()) throw PreconditionError("cubic is reducible over Q");
    bool square = d.disc > 0 && mpz_perfect_square_p(d.disc.get_mpz_t());
    d.group = square ? grp::cyclic(3) : grp::symmetric(3);
    d.group_name = square ? "C3" : "S3";
  } else {
    auto g = nt::quartic_galois_over_Q(f);
    d.group_name = nt::to_string(g);
    switch (g) {
      case nt::QuarticGroup::S4:
        d.group = grp::symmetric(4);
        break;
      case nt::QuarticGroup::A4:
        d.group = grp::alternating(4);
        break;
      case nt::QuarticGroup::D4:
        d.group = grp::dihedral(4);
        break;
      case nt::QuarticGroup::C4:
        d.group = grp::cyclic(4);
        break;
      case nt::QuarticGroup::V:
        d.group = grp::klein_four();
        break;
    }
  }
  const auto& g = *d.group;
  std::vector<grp::Elem> fix;
  for (grp::Elem x = 0; x < g.order(); ++x)
    if (g.perm(x)[0] == 0) fix.push_back(x);
  d.stabilizer = grp::make_subgroup(d.group, fix);
  for (ClassId c = 0; c < g.class_count(); ++c)
    d.classes_of_type[cycle_type_of(g.perm(g.classes().representatives[c]))].push_back(c);
  return d;
}

std::string DedekindLine::str() const {
  return "p=" + std::to_string(p) + " zetaN=" + zeta_n.str() + " rhs=" + rhs.str() + " ok=" + (ok ? "true" : "false");
}

DedekindReport verify_dedekind(const GaloisArithData& data, std::uint64_t bound, const std::optional<Subgroup>& h,
                               par::Exec exec) {
  const auto a = a_NF_character(h ? *h : data.stabilizer);
  const auto primes = primes_to(bound);
  DedekindReport r;
  std::vector<std::uint64_t> good;
  for (auto p : primes) (data.unramified(p) ? good : r.skipped).push_back(p);
  r.lines.resize(good.size());
  EulerFactor one_minus_t;
  one_minus_t.coeffs = {Cyclo(1), Cyclo(-1)};
  // Class functions are evaluated once per class; lookups stay read-only in the loop.
  std::map<ClassId, EulerFactor> by_class;
  for (ClassId c = 0; c < data.group->class_count(); ++c) by_class[c] = multiply(one_minus_t, local_factor(a, c));
  par::for_each_index(
      good.size(),
      [&](std::size_t i) {
        auto p = good[i];
        auto& line = r.lines[i];
        line.p = p;
        line.type = nt::cycle_type(data.f, p);
        line.zeta_n = dedekind_local(data.f, p);
        auto it = data.classes_of_type.find(line.type);
        if (it == data.classes_of_type.end()) {
          line.ok = false;
          return;
        }
        line.ok = true;
        for (ClassId c : it->second) {
          line.rhs = by_class.at(c);
          line.rhs.p = p;
          line.ok = line.ok && line.rhs == line.zeta_n;
        }
      },
      exec);
  for (const auto& line : r.lines)
    if (!line.ok) {
      r.first_failure = line.p;
      break;
    }
  return r;
}

bool transitivity_check(const Subgroup& hl, const Subgroup& hn) {
  if (hl.parent != hn.parent) throw PreconditionError("subgroups of different groups");
  if (!grp::is_subgroup_of(hl, hn)) throw PreconditionError("transitivity_check needs nested subgroups");
  auto pos = grp::inclusion_map(hl, hn);
  auto inner = grp::make_subgroup(hn.group, pos);
  auto a_ln = a_NF_character(inner);
  auto lhs = a_NF_character(hl);
  auto rhs = chr::induce(hn, a_ln) + a_NF_character(hn);
  return lhs == rhs;
}

std::string DirichletSeries::dump() const {
  std::ostringstream os;
  for (std::size_t n = 1; n <= length; ++n) os << "n=" << n << " a=" << coeff_str(a[n]) << "\n";
  return os.str();
}

DirichletSeries dirichlet_expand(const std::map<std::uint64_t, EulerFactor>& factors, std::size_t length) {
  if (length < 1) throw PreconditionError("series length must be positive");
  DirichletSeries s;
  s.length = length;
  s.a.assign(length + 1, Cyclo(0));
  s.a[1] = Cyclo(1);
  for (auto p : primes_to(length)) {
    auto it = factors.find(p);
    if (it == factors.end()) {
      s.skipped.push_back(p);
      continue;
    }
    const auto& poly = it->second.coeffs;
    if (poly.empty() || !(poly[0] == Cyclo(1))) throw PreconditionError("local factor must have constant term 1");
    s.included.push_back(p);
    s.max_degree = std::max(s.max_degree, it->second.degree());
    // b_k: coefficients of 1 / P(T) for p^k <= length
    std::size_t top = 0;
    for (std::size_t pk = p; pk <= length; pk *= p) {
      ++top;
      if (pk > length / p) break;
    }
    std::vector<Cyclo> b{Cyclo(1)};
    for (std::size_t k = 1; k <= top; ++k) {
      Cyclo v(0);
      for (std::size_t j = 1; j <= k && j < poly.size(); ++j) v -= poly[j] * b[k - j];
      b.push_back(v);
    }
    // numbers built from earlier primes times powers of p; descending n keeps sources untouched
    for (std::size_t n = length / p; n >= 1; --n) {
      if (n % p == 0 || s.a[n].is_zero()) continue;
      std::size_t m = n;
      for (std::size_t k = 1; k < b.size() && m <= length / p; ++k) {
        m *= p;
        s.a[m] = s.a[n] * b[k];
      }
    }
  }
  return s;
}

NumericValue numeric_eval(const DirichletSeries& series, double s) {
  if (!(s > 1.0)) throw PreconditionError("numeric_eval needs real s > 1");
  NumericValue v;
  for (std::size_t n = 1; n <= series.length; ++n)
    if (!series.a[n].is_zero()) v.value += series.a[n].to_complex() * std::pow(static_cast<double>(n), -s);
  // |a_n| <= d_k(n) with k the largest local degree; the tail of the majorant
  // sum d_k(n) n^-s is zeta(s)^k minus its own partial sum.
  const long k = std::max<long>(1, series.max_degree);
  std::vector<double> dk(series.length + 1, 1.0);
  for (long step = 1; step < k; ++step) {
    std::vector<double> next(series.length + 1, 0.0);
    for (std::size_t d = 1; d <= series.length; ++d)
      for (std::size_t m = d; m <= series.length; m += d) next[m] += dk[d];
    dk.swap(next);
  }
  double partial = 0;
  for (std::size_t n = 1; n <= series.length; ++n) partial += dk[n] * std::pow(static_cast<double>(n), -s);
  double full = std::pow(boost::math::zeta(s), static_cast<double>(k));
  v.error_bound = std::max(0.0, full - partial) + 1e-12 * full;
  return v;
}

std::string PoleProbe::str() const {
  std::ostringstream os;
  os.precision(4);
  for (std::size_t i = 0; i < grid.size(); ++i)
    os << "s=" << grid[i] << " logL=" << log_l[i] << " logZeta=" << log_zeta[i] << "\n";
  os << "slope=" << slope << " expected=" << expected << " tolerance=" << tolerance
     << " within=" << (within ? "true" : "false") << "\n";
  return os.str();
}

PoleProbe pole_order_probe(const ClassFunction& chi, const GaloisArithData& data, std::uint64_t bound,
                           std::vector<double> grid) {
  if (grid.size() < 2) throw PreconditionError("pole_order_probe needs at least two grid points");
  for (double s : grid)
    if (!(s > 1.0 && s <= 2.0)) throw PreconditionError("grid points must lie in (1, 2]");
  PoleProbe r;
  r.grid = grid;
  auto prod = chr::tensor(chi, chi.conj());
  auto m = chr::norm_squared(chi);
  if (m.get_den() != 1) throw PreconditionError("<chi, chi> is not an integer");
  r.expected = m.get_num().get_si();
  std::vector<EulerFactor> by_class;
  for (ClassId c = 0; c < data.group->class_count(); ++c) by_class.push_back(local_factor(prod, c));
  std::vector<std::pair<std::uint64_t, ClassId>> frob;
  for (auto p : primes_to(bound))
    if (data.unramified(p)) frob.emplace_back(p, data.frobenius_class(p));
  for (double s : grid) {
    double ll = 0, lz = 0;
    for (auto [p, c] : frob) {
      double t = std::pow(static_cast<double>(p), -s);
      ll -= std::log(std::abs(by_class[c].eval(t)));
      lz -= std::log1p(-t);
    }
    r.log_l.push_back(ll);
    r.log_zeta.push_back(lz);
  }
  const double n = static_cast<double>(grid.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    mx += r.log_zeta[i] / n;
    my += r.log_l[i] / n;
  }
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    sxy += (r.log_zeta[i] - mx) * (r.log_l[i] - my);
    sxx += (r.log_zeta[i] - mx) * (r.log_zeta[i] - mx);
  }
  r.slope = sxy / sxx;
  r.within = std::abs(r.slope - static_cast<double>(r.expected)) <= r.tolerance;
  return r;
}

}  // namespace artin::lfn
