#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace artin::nt {

/// F_p (e = 1) or F_p[t] / (t^2 - c1 t - c0) (e = 2).
struct Fq {
  std::uint64_t p = 2;
  unsigned e = 1;
  std::uint64_t c0 = 0, c1 = 0;  // t^2 = c1 t + c0 when e = 2

  static Fq prime(std::uint64_t p);
  /// F_p(t) with t^2 = c1 t + c0; throws if the quadratic is reducible mod p.
  static Fq quadratic(std::uint64_t p, std::int64_t c0, std::int64_t c1 = 0);
  mpz_class size() const;
};

struct FqElem {
  std::uint64_t a = 0, b = 0;  // a + b t
  friend auto operator<=>(const FqElem&, const FqElem&) = default;
  bool is_zero() const { return a == 0 && b == 0; }
};

FqElem fq_from_int(const Fq& f, std::int64_t v);
FqElem fq_add(const Fq& f, FqElem x, FqElem y);
FqElem fq_sub(const Fq& f, FqElem x, FqElem y);
FqElem fq_neg(const Fq& f, FqElem x);
FqElem fq_mul(const Fq& f, FqElem x, FqElem y);
FqElem fq_inv(const Fq& f, FqElem x);  // throws DivisionError on zero
FqElem fq_pow(const Fq& f, FqElem x, const mpz_class& k);
/// The nontrivial automorphism x -> x^p (identity when e = 1).
FqElem fq_frobenius(const Fq& f, FqElem x);
std::string fq_str(const Fq& f, FqElem x);

/// Polynomials over Fq, constant term first, no trailing zeros (zero = empty).
using FqPoly = std::vector<FqElem>;

void trim(FqPoly& a);
long degree(const FqPoly& a);  // -1 for zero
FqPoly poly_add(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_sub(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_mul(const Fq& f, const FqPoly& a, const FqPoly& b);
/// Quotient and remainder; throws DivisionError for b = 0.
std::pair<FqPoly, FqPoly> poly_divmod(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const Fq& f, const FqPoly& a, const FqPoly& b);
FqPoly poly_monic(const Fq& f, const FqPoly& a);
FqPoly poly_gcd(const Fq& f, FqPoly a, FqPoly b);  // monic
FqPoly poly_derivative(const Fq& f, const FqPoly& a);
FqPoly poly_powmod(const Fq& f, FqPoly base, const mpz_class& k, const FqPoly& m);
std::string poly_str(const Fq& f, const FqPoly& a);

struct Factorization {
  FqElem unit;                                     // leading coefficient
  std::vector<std::pair<FqPoly, unsigned>> factors;  // monic irreducible, multiplicity
  /// Degrees of the factors with multiplicity, largest first.
  std::vector<unsigned> degrees() const;
};

/// Squarefree decomposition, distinct-degree splitting and Cantor-Zassenhaus
/// equal-degree splitting with a seeded generator. Throws on the zero polynomial.
Factorization factor_poly(const Fq& f, const FqPoly& a, std::uint64_t seed = 1);
/// Rabin's test.
bool is_irreducible(const Fq& f, const FqPoly& a);
FqPoly expand(const Fq& f, const Factorization& fac);

/// Integer polynomials, constant term first.
using ZPoly = std::vector<mpz_class>;
FqPoly reduce_mod(const ZPoly& a, std::uint64_t p);
std::string zpoly_str(const ZPoly& a);
/// "c0,c1,...,cn".
ZPoly parse_zpoly(const std::string& text);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
/// Legendre/Kronecker symbol (a / p) for an odd prime p.
int legendre(const mpz_class& a, std::uint64_t p);
/// A square root of a mod the odd prime p (Tonelli-Shanks); throws if none.
std::uint64_t sqrt_mod(const mpz_class& a, std::uint64_t p);

}  // namespace artin::nt
