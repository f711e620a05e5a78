#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "artin/nt/finite_field.hpp"
#include "artin/nt/quadratic.hpp"
#include "artin/par/parallel.hpp"

namespace artin::nt {

/// Discriminant of an integer polynomial of degree 1..4 (closed formulas) or
/// higher (resultant of f and f' by fraction-free elimination).
mpz_class discriminant(const ZPoly& f);
/// Closed formula for degree 2..4 over E.
QuadNum discriminant(const EPoly& f);
/// The same from det(Sylvester(f, f')) over E; an independent route.
QuadNum discriminant_sylvester(const EPoly& f);

/// For monic x^4 + a x^3 + b x^2 + c x + d the cubic whose roots are
/// x1 x2 + x3 x4 and its conjugates: y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2).
ZPoly resolvent_cubic(const ZPoly& f);

/// Factor degrees of f mod p, largest first; throws PreconditionError when p
/// divides the discriminant or the leading coefficient.
std::vector<unsigned> cycle_type(const ZPoly& f, std::uint64_t p);

std::vector<mpz_class> rational_roots(const ZPoly& f);  // monic integer f
/// True when the monic integer quartic has a rational root or a factorization
/// into two integer quadratics.
bool quartic_reducible(const ZPoly& f);

enum class QuarticGroup { S4, A4, D4, C4, V };
std::string to_string(QuarticGroup g);
/// Throws PreconditionError unless f is a monic irreducible integer quartic.
QuarticGroup quartic_galois_over_Q(const ZPoly& f);

/// Cycle types as partitions written largest first.
using CycleType = std::vector<unsigned>;
std::string to_string(const CycleType& t);
/// The five cycle types of S4 with their densities.
const std::map<CycleType, double>& s4_densities();

struct SamplingReport {
  std::size_t samples = 0;
  std::uint64_t largest_prime = 0;
  std::map<CycleType, std::size_t> counts;
  std::vector<std::pair<std::uint64_t, CycleType>> per_prime;  // in increasing p
  bool s4_consistent = false;
  double tolerance = 0.30;  // relative, per cycle type
  std::string verdict;
};
/// Unramified rational primes, in order, until `count` samples are taken.
SamplingReport frobenius_sampling(const ZPoly& f, std::size_t count, par::Exec exec = par::default_exec());
/// Degree-1 primes of E (one prime above each split p), in order.
SamplingReport frobenius_sampling(const QuadField& e, const EPoly& f, std::size_t count,
                                  par::Exec exec = par::default_exec());

/// Monic quartic f over O_E with the five conditions attached to three inert primes.
struct QuarticCandidate {
  QuadField field;
  std::array<std::uint64_t, 3> primes{};
  EPoly coefficients;                 // constant term first, leading 1
  std::array<FqPoly, 3> residues;     // f_j = f mod p_j
  QuadNum disc;
  std::array<bool, 5> flags{};
  std::vector<std::string> evidence;  // one entry per condition
  std::size_t attempts = 0;
  std::size_t repairs = 0;            // times h = 0 mod p1 p2 p3 was added for (v)
};

struct SearchOptions {
  std::size_t budget = 1000000;  // attempts
  std::uint64_t seed = 1;
  long repair_height = 3;        // coordinates of h / (p1 p2 p3) drawn from [-H, H]
  std::size_t repairs_per_base = 8;
  /// Fixed residue targets f_j (monic quartics over O_E / p_j); drawn at random if absent.
  std::optional<std::array<FqPoly, 3>> targets;
};

/// Independent recomputation of the five flags (with evidence strings).
std::array<bool, 5> verify_candidate(const QuarticCandidate& c, std::vector<std::string>* evidence = nullptr);
/// Per-residue checks used by the search and by verify_candidate.
bool condition_i(const Fq& f, const FqPoly& f1);
bool condition_ii(const Fq& f, const FqPoly& f2);
bool condition_iii(const Fq& f, const FqPoly& f3);
/// D^theta is not a square in E(sqrt D), decided as: neither D^theta nor D D^theta
/// is a square in E.
bool condition_v(const QuadNum& disc);

/// Throws PreconditionError if a prime is not inert, SearchFailure when the
/// budget runs out.
QuarticCandidate search_quartic(const QuadField& e, const std::array<std::uint64_t, 3>& primes,
                                const SearchOptions& opts = {});

}  // namespace artin::nt
