#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "artin/nt/finite_field.hpp"

namespace artin::nt {

/// Q(sqrt d) for squarefree d != 0, 1. The ring of integers has basis (1, w)
/// with w = (1 + sqrt d) / 2 when d = 1 mod 4 and w = sqrt d otherwise.
struct QuadField {
  long d = -1;
  bool half_integral = false;  // w = (1 + sqrt d) / 2

  static QuadField make(long d);  // throws unless d is squarefree and d != 0, 1
  mpz_class discriminant() const;
};

/// x + y sqrt d.
struct QuadNum {
  long d = -1;
  mpq_class x, y;

  QuadNum() = default;
  QuadNum(long d, mpq_class x, mpq_class y = 0);
  static QuadNum from_omega(const QuadField& e, const mpz_class& a, const mpz_class& b);  // a + b w

  QuadNum conj() const;
  mpq_class norm() const;
  mpq_class trace() const;
  bool is_zero() const { return x == 0 && y == 0; }
  bool is_rational() const { return y == 0; }
  QuadNum inverse() const;  // throws DivisionError on zero
  std::string str() const;

  friend QuadNum operator+(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator-(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator*(const QuadNum& a, const QuadNum& b);
  friend QuadNum operator/(const QuadNum& a, const QuadNum& b) { return a * b.inverse(); }
  QuadNum operator-() const { return QuadNum(d, -x, -y); }
  friend bool operator==(const QuadNum& a, const QuadNum& b) { return a.d == b.d && a.x == b.x && a.y == b.y; }
};

/// Coordinates (a, b) with z = a + b w; throws PreconditionError if z is not integral.
std::pair<mpz_class, mpz_class> omega_coords(const QuadField& e, const QuadNum& z);
bool is_integral(const QuadField& e, const QuadNum& z);

bool is_rational_square(const mpq_class& q);
/// Exact: x = (u + v sqrt d)^2 for rationals u, v.
bool square_in_quadratic(const QuadNum& x);

/// Rational primes p <= bound inert in E (Kronecker symbol of disc(E) at p is -1).
std::vector<std::uint64_t> inert_primes(const QuadField& e, std::uint64_t bound);
/// Rational primes p <= bound split in E.
std::vector<std::uint64_t> split_primes(const QuadField& e, std::uint64_t bound);
int kronecker_disc(const QuadField& e, std::uint64_t p);

/// O_E / p for an inert p, with t the image of w.
Fq residue_field(const QuadField& e, std::uint64_t p);
FqElem reduce_inert(const QuadField& e, const Fq& f, const QuadNum& z);
/// An integral element with omega coordinates in [0, p) reducing to x.
QuadNum lift_inert(const QuadField& e, const Fq& f, FqElem x);
/// Reduction at a degree-1 prime above the split p, sending sqrt d to root.
std::uint64_t reduce_split(const QuadNum& z, std::uint64_t p, std::uint64_t root);

/// Polynomials over E, constant term first.
using EPoly = std::vector<QuadNum>;
EPoly theta_conjugate(const EPoly& f);
FqPoly reduce_inert(const QuadField& e, const Fq& f, const EPoly& a);
std::string epoly_str(const EPoly& a);
EPoly to_epoly(const QuadField& e, const ZPoly& a);

}  // namespace artin::nt
