#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/chr/class_function.hpp"
#include "artin/grp/group.hpp"
#include "artin/nt/finite_field.hpp"
#include "artin/nt/quartic.hpp"
#include "artin/par/parallel.hpp"

namespace artin::lfn {

using chr::ClassFunction;
using cyc::Cyclo;
using grp::ClassId;
using grp::GroupPtr;
using grp::Subgroup;

/// A local factor in T = p^-s, constant term first (always 1).
struct EulerFactor {
  std::uint64_t p = 0;
  std::vector<Cyclo> coeffs{Cyclo(1)};

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::string str() const;  // "1-T^3", constant first
  std::complex<double> eval(std::complex<double> t) const;
  friend bool operator==(const EulerFactor& a, const EulerFactor& b) { return a.coeffs == b.coeffs; }
};

EulerFactor multiply(const EulerFactor& a, const EulerFactor& b);

/// det(1 - rho(g) T) for the class c; throws NotACharacterError unless chi is a character.
EulerFactor local_factor(const ClassFunction& chi, ClassId c, std::uint64_t p = 0);
/// prod_i (1 - T^d_i) over the factor degrees d_i of f mod p; throws at ramified p.
EulerFactor dedekind_local(const nt::ZPoly& f, std::uint64_t p);

/// Ind_H^G(1) - 1, the permutation character of G/H minus the trivial one.
ClassFunction a_NF_character(const Subgroup& h);

/// A polynomial over Q with its Galois group as a permutation group on the
/// roots and the map from Frobenius cycle type to conjugacy class.
struct GaloisArithData {
  nt::ZPoly f;
  mpz_class disc;
  GroupPtr group;
  Subgroup stabilizer;  // of the first root: the subgroup fixing Q(root)
  std::string group_name;
  /// Every class with the given cycle type (several when the type does not
  /// separate classes, e.g. 2+2 in D4).
  std::map<nt::CycleType, std::vector<ClassId>> classes_of_type;

  bool unramified(std::uint64_t p) const;  // p divides neither disc nor the leading coefficient
  /// First class of the Frobenius cycle type; throws PreconditionError at ramified p
  /// and ConsistencyError for a type the group does not produce.
  ClassId frobenius_class(std::uint64_t p) const;
};

/// Irreducible integer polynomial of degree 2..4. The group is identified exactly
/// (discriminant for cubics, resolvent cubic for quartics).
GaloisArithData galois_data(const nt::ZPoly& f);
nt::CycleType cycle_type_of(const grp::Perm& g);

struct DedekindLine {
  std::uint64_t p = 0;
  nt::CycleType type;
  EulerFactor zeta_n, rhs;
  bool ok = false;
  std::string str() const;  // p=<p> zetaN=<poly> rhs=<poly> ok=<bool>
};

struct DedekindReport {
  std::vector<DedekindLine> lines;      // unramified primes, increasing
  std::vector<std::uint64_t> skipped;   // ramified primes
  std::optional<std::uint64_t> first_failure;
  bool all_ok() const { return !first_failure.has_value(); }
};

/// Checks dedekind_local(f, p) = (1 - T) * local_factor(a_{N/F}, Frob_p) exactly at
/// every unramified p <= bound, with a_{N/F} built from `h` (the root stabilizer if absent).
DedekindReport verify_dedekind(const GaloisArithData& data, std::uint64_t bound,
                               const std::optional<Subgroup>& h = std::nullopt,
                               par::Exec exec = par::default_exec());

/// a_{L/F} = Ind_N^F(a_{L/N}) + a_{N/F} for subgroups hl <= hn <= G; throws
/// PreconditionError unless nested.
bool transitivity_check(const Subgroup& hl, const Subgroup& hn);

struct DirichletSeries {
  std::size_t length = 0;
  std::vector<Cyclo> a;                 // a[0] unused, a[1] = 1
  std::vector<std::uint64_t> included;  // primes with a nontrivial factor
  std::vector<std::uint64_t> skipped;   // primes whose factor was taken as 1
  long max_degree = 0;
  std::string dump() const;  // one "n=<n> a=<value>" line per n
};

/// Expands prod_p 1/P_p(p^-s) up to n <= length. Primes up to `length` missing
/// from `factors` are treated as skipped (factor 1).
DirichletSeries dirichlet_expand(const std::map<std::uint64_t, EulerFactor>& factors, std::size_t length);

struct NumericValue {
  std::complex<double> value;
  double error_bound = 0;  // tail of zeta(s)^max_degree beyond the truncation
};
/// sum_{n <= N} a_n n^-s for real s > 1; throws PreconditionError otherwise.
NumericValue numeric_eval(const DirichletSeries& series, double s);

struct PoleProbe {
  std::vector<double> grid;
  std::vector<double> log_l, log_zeta;
  double slope = 0;
  long expected = 0;  // <chi, chi>
  double tolerance = 0.35;
  bool within = false;
  std::string str() const;
};

/// Least-squares slope of log L_X(s, chi chi-bar) against log zeta_X(s) over the
/// grid, both partial Euler products over the unramified p <= bound.
PoleProbe pole_order_probe(const ClassFunction& chi, const GaloisArithData& data, std::uint64_t bound,
                           std::vector<double> grid = {1.5, 1.2, 1.1, 1.05});

}  // namespace artin::lfn
