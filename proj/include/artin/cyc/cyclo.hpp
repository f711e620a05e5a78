#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace artin::cyc {

using Rational = mpq_class;

std::string to_string(const Rational& q);
Rational parse_rational(std::string_view text);

unsigned euler_phi(unsigned n);
unsigned lcm(unsigned a, unsigned b);

// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long>& cyclotomic_polynomial(unsigned n);

namespace detail {
struct Basis;
}

/// An exact element of Q(zeta_n), stored in the power basis
/// 1, zeta, ..., zeta^(phi(n)-1) reduced modulo Phi_n.
///
/// Binary operations on values of different conductors promote both operands
/// to the lcm of the conductors; equality is tested the same way.
class Cyclo {
 public:
  Cyclo();
  Cyclo(long value);  // NOLINT(google-explicit-constructor)
  Cyclo(const Rational& value);  // NOLINT(google-explicit-constructor)
  Cyclo(unsigned conductor, std::vector<Rational> coeffs);

  static Cyclo root_of_unity(unsigned n, long k);

  unsigned conductor() const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  std::optional<Rational> rational() const;
  std::optional<long> integer() const;
  std::complex<double> to_complex() const;

  Cyclo promote(unsigned m) const;
  Cyclo conj() const;
  Cyclo inverse() const;
  // zeta_n -> zeta_n^k for k coprime to n.
  Cyclo galois(long k) const;

  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Cyclo& other);
  Cyclo& operator/=(const Cyclo& other) { return *this *= other.inverse(); }

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator/(const Cyclo& a, const Cyclo& b) { return a * b.inverse(); }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);

  // Lexicographic order on coefficient vectors after promotion to a common
  // conductor. Used only for reproducible sorting.
  friend std::strong_ordering operator<=>(const Cyclo& a, const Cyclo& b);

  // "(c0, c1, ..., c_{phi(n)-1}) @ zeta_n"
  std::string str() const;
  static Cyclo parse(std::string_view text);

 private:
  Cyclo(const detail::Basis* basis, std::vector<Rational> coeffs);
  static const detail::Basis* basis_for(unsigned n);
  static const detail::Basis* rational_basis();
  static void align(Cyclo& a, Cyclo& b);

  const detail::Basis* basis_;
  std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Cyclo& x);

}  // namespace artin::cyc
