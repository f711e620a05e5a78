#include "artin/cyc/cyclo.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>
#include <ostream>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::cyc {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty rational");
  if (s.front() == '+') s.erase(s.begin());
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational: " + std::string(text));
  if (q.get_den() == 0) throw ParseError("zero denominator: " + std::string(text));
  q.canonicalize();
  return q;
}

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  unsigned m = n;
  for (unsigned p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

unsigned lcm(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

namespace {

std::mutex& table_mutex() {
  static std::mutex m;
  return m;
}

// Exact division of integer polynomials (constant term first); the divisor is monic.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<long> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    long c = num[i];
    quot[i - dn] = c;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

std::vector<long> compute_cyclotomic(unsigned n) {
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (unsigned d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_monic(poly, cyclotomic_polynomial(d));
  return poly;
}

}  // namespace

const std::vector<long>& cyclotomic_polynomial(unsigned n) {
  static std::map<unsigned, std::unique_ptr<std::vector<long>>> cache;
  static std::recursive_mutex m;
  std::lock_guard lock(m);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto poly = std::make_unique<std::vector<long>>(compute_cyclotomic(n));
  auto& ref = *poly;
  cache.emplace(n, std::move(poly));
  return ref;
}

namespace detail {

struct Basis {
  unsigned n;
  unsigned phi;
  // reduce[k] = coefficients of zeta^k in the power basis, 0 <= k < n.
  std::vector<std::vector<long>> reduce;
};

}  // namespace detail

using detail::Basis;

const Basis* Cyclo::basis_for(unsigned n) {
  if (n == 0) throw ConductorError("conductor must be positive");
  static std::map<unsigned, std::unique_ptr<Basis>> cache;
  {
    std::lock_guard lock(table_mutex());
    auto it = cache.find(n);
    if (it != cache.end()) return it->second.get();
  }
  const auto& phi_poly = cyclotomic_polynomial(n);
  auto basis = std::make_unique<Basis>();
  basis->n = n;
  basis->phi = euler_phi(n);
  const unsigned phi = basis->phi;
  basis->reduce.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (unsigned k = 0; k < n; ++k) {
    basis->reduce[k] = cur;
    // multiply by zeta: shift up, then replace zeta^phi by -sum Phi_i zeta^i
    long top = cur[phi - 1];
    for (unsigned i = phi - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    for (unsigned i = 0; i < phi; ++i) cur[i] -= top * phi_poly[i];
  }
  std::lock_guard lock(table_mutex());
  auto [it, inserted] = cache.emplace(n, std::move(basis));
  return it->second.get();
}

const Basis* Cyclo::rational_basis() {
  static const Basis* const b = basis_for(1);
  return b;
}

Cyclo::Cyclo() : Cyclo(rational_basis(), {Rational(0)}) {}

Cyclo::Cyclo(long value) : Cyclo(rational_basis(), {Rational(value)}) {}

Cyclo::Cyclo(const Rational& value) : Cyclo(rational_basis(), {value}) { coeffs_[0].canonicalize(); }

Cyclo::Cyclo(const Basis* basis, std::vector<Rational> coeffs)
    : basis_(basis), coeffs_(std::move(coeffs)) {}

Cyclo::Cyclo(unsigned conductor, std::vector<Rational> coeffs) : basis_(basis_for(conductor)) {
  // Accept any length; interpret entry i as the coefficient of zeta^i.
  coeffs_.assign(basis_->phi, Rational(0));
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    coeffs[i].canonicalize();
    if (coeffs[i] == 0) continue;
    const auto& red = basis_->reduce[i % basis_->n];
    for (unsigned j = 0; j < basis_->phi; ++j)
      if (red[j] != 0) coeffs_[j] += coeffs[i] * red[j];
  }
}

Cyclo Cyclo::root_of_unity(unsigned n, long k) {
  const Basis* b = basis_for(n);
  long r = k % static_cast<long>(n);
  if (r < 0) r += n;
  std::vector<Rational> c(b->phi);
  for (unsigned j = 0; j < b->phi; ++j) c[j] = b->reduce[r][j];
  return Cyclo(b, std::move(c));
}

unsigned Cyclo::conductor() const { return basis_->n; }

bool Cyclo::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

std::optional<Rational> Cyclo::rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return std::nullopt;
  return coeffs_[0];
}

std::optional<long> Cyclo::integer() const {
  auto q = rational();
  if (!q || q->get_den() != 1 || !q->get_num().fits_slong_p()) return std::nullopt;
  return q->get_num().get_si();
}

std::complex<double> Cyclo::to_complex() const {
  std::complex<double> z = 0;
  const double n = basis_->n;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n;
    z += coeffs_[i].get_d() * std::polar(1.0, angle);
  }
  return z;
}

Cyclo Cyclo::promote(unsigned m) const {
  const unsigned n = basis_->n;
  if (m % n != 0)
    throw ConductorError("cannot promote conductor " + std::to_string(n) + " to " +
                         std::to_string(m));
  if (m == n) return *this;
  const Basis* target = basis_for(m);
  const unsigned step = m / n;
  std::vector<Rational> out(target->phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& red = target->reduce[(i * step) % m];
    for (unsigned j = 0; j < target->phi; ++j)
      if (red[j] != 0) out[j] += coeffs_[i] * red[j];
  }
  return Cyclo(target, std::move(out));
}

Cyclo Cyclo::galois(long k) const {
  const long n = basis_->n;
  long kk = ((k % n) + n) % n;
  if (std::gcd(kk, n) != 1) throw ConductorError("galois exponent not a unit");
  std::vector<Rational> out(basis_->phi, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    const auto& red = basis_->reduce[(static_cast<long>(i) * kk) % n];
    for (unsigned j = 0; j < basis_->phi; ++j)
      if (red[j] != 0) out[j] += coeffs_[i] * red[j];
  }
  return Cyclo(basis_, std::move(out));
}

Cyclo Cyclo::conj() const { return galois(static_cast<long>(basis_->n) - 1); }

void Cyclo::align(Cyclo& a, Cyclo& b) {
  if (a.basis_ == b.basis_) return;
  const unsigned m = lcm(a.basis_->n, b.basis_->n);
  if (a.basis_->n != m) a = a.promote(m);
  if (b.basis_->n != m) b = b.promote(m);
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  if (other.basis_->n == 1) {
    coeffs_[0] += other.coeffs_[0];
    return *this;
  }
  if (basis_ == other.basis_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
  }
  Cyclo b = other;
  align(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  if (other.basis_->n == 1) {
    coeffs_[0] -= other.coeffs_[0];
    return *this;
  }
  if (basis_ == other.basis_) {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    return *this;
  }
  Cyclo b = other;
  align(*this, b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Cyclo& Cyclo::operator*=(const Cyclo& other) {
  *this = *this * other;
  return *this;
}

Cyclo operator*(const Cyclo& x, const Cyclo& y) {
  if (y.basis_->n == 1 || x.basis_->n == 1) {
    const Cyclo& big = y.basis_->n == 1 ? x : y;
    const Rational& q = y.basis_->n == 1 ? y.coeffs_[0] : x.coeffs_[0];
    if (q == 0) return Cyclo();
    Cyclo r = big;
    if (q != 1)
      for (auto& c : r.coeffs_) c *= q;
    return r;
  }
  if (x.basis_ != y.basis_) {
    Cyclo a = x, b = y;
    Cyclo::align(a, b);
    return a * b;
  }
  const Basis* basis = x.basis_;
  const unsigned phi = basis->phi;
  if (phi == 1) return Cyclo(basis, {x.coeffs_[0] * y.coeffs_[0]});
  std::vector<Rational> prod(2 * phi - 1, Rational(0));
  for (unsigned i = 0; i < phi; ++i) {
    if (x.coeffs_[i] == 0) continue;
    for (unsigned j = 0; j < phi; ++j) {
      if (y.coeffs_[j] == 0) continue;
      prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
    }
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + phi);
  for (unsigned k = phi; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const auto& red = basis->reduce[k % basis->n];
    for (unsigned j = 0; j < phi; ++j)
      if (red[j] != 0) out[j] += prod[k] * red[j];
  }
  // Rational products drop to conductor 1 so later arithmetic stays cheap.
  bool rational = true;
  for (unsigned j = 1; j < phi && rational; ++j) rational = out[j] == 0;
  if (rational) return Cyclo(Cyclo::rational_basis(), {std::move(out[0])});
  return Cyclo(basis, std::move(out));
}

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

void poly_divmod(const QPoly& num, const QPoly& den, QPoly& quot, QPoly& rem) {
  rem = num;
  trim(rem);
  quot.clear();
  if (rem.size() < den.size()) return;
  quot.assign(rem.size() - den.size() + 1, Rational(0));
  const Rational lead = den.back();
  while (rem.size() >= den.size()) {
    const std::size_t shift = rem.size() - den.size();
    Rational c = rem.back() / lead;
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) rem[shift + i] -= c * den[i];
    rem.pop_back();
    trim(rem);
  }
}

}  // namespace

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero cyclotomic number");
  const auto& phi_int = cyclotomic_polynomial(basis_->n);
  QPoly m(phi_int.begin(), phi_int.end());
  QPoly a = coeffs_;
  trim(a);
  // extended Euclid: track s with s*a == r (mod m)
  QPoly r0 = m, r1 = a;
  QPoly s0, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    QPoly q, r;
    poly_divmod(r0, r1, q, r);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw ConsistencyError("cyclotomic polynomial not irreducible?");
  }
  const Rational c = r1[0];
  for (auto& v : s1) v /= c;
  return Cyclo(basis_->n, s1);
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.basis_ == b.basis_) return a.coeffs_ == b.coeffs_;
  if (a.basis_->n == 1 || b.basis_->n == 1) {
    const Cyclo& r = a.basis_->n == 1 ? a : b;
    const Cyclo& o = a.basis_->n == 1 ? b : a;
    if (o.coeffs_[0] != r.coeffs_[0]) return false;
    for (std::size_t i = 1; i < o.coeffs_.size(); ++i)
      if (o.coeffs_[i] != 0) return false;
    return true;
  }
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b) {
  Cyclo x = a, y = b;
  Cyclo::align(x, y);
  for (std::size_t i = 0; i < x.coeffs_.size(); ++i) {
    int c = cmp(x.coeffs_[i], y.coeffs_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string Cyclo::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << to_string(coeffs_[i]);
  }
  os << ") @ zeta_" << basis_->n;
  return os.str();
}

Cyclo Cyclo::parse(std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) throw ParseError("missing '@ zeta_n' in " + std::string(text));
  auto tuple = text.substr(0, at);
  auto tail = text.substr(at + 1);
  auto zpos = tail.find("zeta_");
  if (zpos == std::string_view::npos) throw ParseError("missing zeta_n in " + std::string(text));
  unsigned n = 0;
  try {
    n = static_cast<unsigned>(std::stoul(std::string(tail.substr(zpos + 5))));
  } catch (const std::exception&) {
    throw ParseError("bad conductor in " + std::string(text));
  }
  auto open = tuple.find('(');
  auto close = tuple.rfind(')');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open)
    throw ParseError("bad coefficient tuple in " + std::string(text));
  auto body = tuple.substr(open + 1, close - open - 1);
  std::vector<Rational> coeffs;
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    auto piece = body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                     : comma - start);
    coeffs.push_back(parse_rational(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  const Basis* b = basis_for(n);
  if (coeffs.size() != b->phi)
    throw ParseError("expected " + std::to_string(b->phi) + " coefficients for zeta_" +
                     std::to_string(n));
  return Cyclo(b, std::move(coeffs));
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

}  // namespace artin::cyc
