#include "artin/nt/quadratic.hpp"

#include <sstream>

#include "artin/errors.hpp"

namespace artin::nt {

namespace {

bool squarefree(long d) {
  long a = d < 0 ? -d : d;
  for (long k = 2; k * k <= a; ++k)
    if (a % (k * k) == 0) return false;
  return true;
}

long mod(long a, long m) { return ((a % m) + m) % m; }

std::uint64_t reduce_q(const mpq_class& q, std::uint64_t p) {
  mpz_class pm = static_cast<unsigned long>(p);
  mpz_class den = q.get_den();
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), pm.get_mpz_t()) == 0)
    throw PreconditionError("denominator not invertible mod " + std::to_string(p));
  mpz_class r = (q.get_num() * inv) % pm;
  if (r < 0) r += pm;
  return r.get_ui();
}

}  // namespace

QuadField QuadField::make(long d) {
  if (d == 0 || d == 1 || !squarefree(d)) throw PreconditionError("Q(sqrt d) needs squarefree d != 0, 1");
  QuadField e;
  e.d = d;
  e.half_integral = mod(d, 4) == 1;
  return e;
}

mpz_class QuadField::discriminant() const { return half_integral ? mpz_class(d) : mpz_class(4 * d); }

QuadNum::QuadNum(long d_, mpq_class x_, mpq_class y_) : d(d_), x(std::move(x_)), y(std::move(y_)) {
  x.canonicalize();
  y.canonicalize();
}

QuadNum QuadNum::from_omega(const QuadField& e, const mpz_class& a, const mpz_class& b) {
  if (!e.half_integral) return QuadNum(e.d, a, b);
  // a + b (1 + sqrt d)/2
  return QuadNum(e.d, mpq_class(a) + mpq_class(b, 2), mpq_class(b, 2));
}

QuadNum QuadNum::conj() const { return QuadNum(d, x, -y); }
mpq_class QuadNum::norm() const { return x * x - d * y * y; }
mpq_class QuadNum::trace() const { return 2 * x; }

QuadNum QuadNum::inverse() const {
  if (is_zero()) throw DivisionError("inverse of zero in a quadratic field");
  mpq_class n = norm();
  return QuadNum(d, x / n, -y / n);
}

std::string QuadNum::str() const {
  std::ostringstream os;
  os << x.get_str();
  if (y != 0) os << (y > 0 ? "+" : "") << y.get_str() << "*sqrt(" << d << ")";
  return os.str();
}

namespace {
void same_field(const QuadNum& a, const QuadNum& b) {
  if (a.d != b.d) throw PreconditionError("quadratic numbers from different fields");
}
}  // namespace

QuadNum operator+(const QuadNum& a, const QuadNum& b) {
  same_field(a, b);
  return QuadNum(a.d, a.x + b.x, a.y + b.y);
}

QuadNum operator-(const QuadNum& a, const QuadNum& b) {
  same_field(a, b);
  return QuadNum(a.d, a.x - b.x, a.y - b.y);
}

QuadNum operator*(const QuadNum& a, const QuadNum& b) {
  same_field(a, b);
  return QuadNum(a.d, a.x * b.x + a.d * a.y * b.y, a.x * b.y + a.y * b.x);
}

std::pair<mpz_class, mpz_class> omega_coords(const QuadField& e, const QuadNum& z) {
  mpq_class a = z.x, b = z.y;
  if (e.half_integral) {
    // z = a' + b' (1 + sqrt d)/2 with b' = 2y, a' = x - y.
    b = 2 * z.y;
    a = z.x - z.y;
  }
  a.canonicalize();
  b.canonicalize();
  if (a.get_den() != 1 || b.get_den() != 1) throw PreconditionError("element is not integral: " + z.str());
  return {a.get_num(), b.get_num()};
}

bool is_integral(const QuadField& e, const QuadNum& z) {
  try {
    omega_coords(e, z);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

bool is_rational_square(const mpq_class& q) {
  if (q < 0) return false;
  return mpz_perfect_square_p(q.get_num().get_mpz_t()) && mpz_perfect_square_p(q.get_den().get_mpz_t());
}

bool square_in_quadratic(const QuadNum& z) {
  if (z.is_zero()) return true;
  if (z.y == 0) {
    // u^2 + d v^2 = x with u v = 0.
    return is_rational_square(z.x) || is_rational_square(z.x / z.d);
  }
  // (u + v sqrt d)^2 = x + y sqrt d forces N(z) = (u^2 - d v^2)^2 and u^2 = (x +- n)/2.
  mpq_class n = z.norm();
  if (!is_rational_square(n)) return false;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_num().get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), n.get_den().get_mpz_t());
  mpq_class s(rn, rd);
  for (const mpq_class& u2 : {mpq_class((z.x + s) / 2), mpq_class((z.x - s) / 2)}) {
    if (u2 == 0 || !is_rational_square(u2)) continue;
    return true;  // v = y / (2u) then satisfies both coordinate equations
  }
  return false;
}

int kronecker_disc(const QuadField& e, std::uint64_t p) {
  return mpz_kronecker_ui(e.discriminant().get_mpz_t(), static_cast<unsigned long>(p));
}

std::vector<std::uint64_t> inert_primes(const QuadField& e, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(bound))
    if (kronecker_disc(e, p) == -1) out.push_back(p);
  return out;
}

std::vector<std::uint64_t> split_primes(const QuadField& e, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (auto p : primes_up_to(bound))
    if (kronecker_disc(e, p) == 1) out.push_back(p);
  return out;
}

Fq residue_field(const QuadField& e, std::uint64_t p) {
  if (kronecker_disc(e, p) != -1) throw PreconditionError(std::to_string(p) + " is not inert");
  if (e.half_integral) {
    // w^2 = w + (d - 1)/4
    return Fq::quadratic(p, (e.d - 1) / 4, 1);
  }
  return Fq::quadratic(p, e.d, 0);
}

FqElem reduce_inert(const QuadField& e, const Fq& f, const QuadNum& z) {
  auto [a, b] = omega_coords(e, z);
  return {reduce_q(mpq_class(a), f.p), reduce_q(mpq_class(b), f.p)};
}

QuadNum lift_inert(const QuadField& e, const Fq&, FqElem x) {
  return QuadNum::from_omega(e, mpz_class(static_cast<unsigned long>(x.a)), mpz_class(static_cast<unsigned long>(x.b)));
}

std::uint64_t reduce_split(const QuadNum& z, std::uint64_t p, std::uint64_t root) {
  auto x = reduce_q(z.x, p), y = reduce_q(z.y, p);
  return static_cast<std::uint64_t>((x + static_cast<unsigned __int128>(y) * root) % p);
}

EPoly theta_conjugate(const EPoly& f) {
  EPoly r;
  r.reserve(f.size());
  for (const auto& c : f) r.push_back(c.conj());
  return r;
}

FqPoly reduce_inert(const QuadField& e, const Fq& f, const EPoly& a) {
  FqPoly r;
  for (const auto& c : a) r.push_back(reduce_inert(e, f, c));
  trim(r);
  return r;
}

std::string epoly_str(const EPoly& a) {
  std::ostringstream os;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) os << ", ";
    os << a[i].str();
  }
  return os.str();
}

EPoly to_epoly(const QuadField& e, const ZPoly& a) {
  EPoly r;
  for (const auto& c : a) r.emplace_back(e.d, mpq_class(c));
  return r;
}

}  // namespace artin::nt
