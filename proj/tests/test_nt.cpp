#include <random>
#include <set>

#include "artin/errors.hpp"
#include "artin/nt/finite_field.hpp"
#include "artin/nt/quadratic.hpp"
#include "artin/nt/quartic.hpp"
#include "doctest.h"

using namespace artin;
using namespace artin::nt;

namespace {

FqPoly from_ints(const Fq& f, std::initializer_list<long> cs) {
  FqPoly r;
  for (long c : cs) r.push_back(fq_from_int(f, c));
  trim(r);
  return r;
}

ZPoly z(std::initializer_list<long> cs) {
  ZPoly r;
  for (long c : cs) r.emplace_back(c);
  return r;
}

FqPoly random_poly(const Fq& f, std::mt19937_64& rng, std::size_t deg) {
  std::uniform_int_distribution<std::uint64_t> d(0, f.p - 1);
  FqPoly r(deg + 1);
  for (auto& c : r) c = {d(rng), f.e == 2 ? d(rng) : 0};
  r.back() = {1, 0};
  return r;
}

}  // namespace

TEST_CASE("finite field arithmetic") {
  auto f = Fq::quadratic(7, -1);  // F_49 = F_7(i)
  CHECK(f.size() == 49);
  FqElem i{0, 1};
  CHECK(fq_mul(f, i, i) == fq_from_int(f, -1));
  CHECK(fq_frobenius(f, i) == fq_neg(f, i));
  CHECK(fq_pow(f, i, 48) == FqElem{1, 0});
  FqElem x{3, 5};
  CHECK(fq_mul(f, x, fq_inv(f, x)) == FqElem{1, 0});
  CHECK_THROWS_AS(fq_inv(f, FqElem{}), DivisionError);
  CHECK_THROWS_AS(Fq::quadratic(5, -1), PreconditionError);  // x^2 + 1 splits mod 5
}

TEST_CASE("factoring over prime fields") {
  auto f5 = Fq::prime(5);
  auto fac = factor_poly(f5, from_ints(f5, {1, 0, 1}));
  REQUIRE(fac.factors.size() == 2);
  std::set<FqPoly> got{fac.factors[0].first, fac.factors[1].first};
  CHECK(got == std::set<FqPoly>{from_ints(f5, {2, 1}), from_ints(f5, {3, 1})});
  CHECK(is_irreducible(Fq::prime(2), from_ints(Fq::prime(2), {1, 1, 0, 1})));
  CHECK(is_irreducible(Fq::prime(3), from_ints(Fq::prime(3), {1, 0, 1})));
  CHECK_FALSE(is_irreducible(f5, from_ints(f5, {1, 0, 1})));
  auto sq = factor_poly(f5, poly_mul(f5, from_ints(f5, {1, 1}), from_ints(f5, {1, 1})));
  REQUIRE(sq.factors.size() == 1);
  CHECK(sq.factors[0].second == 2);
  // x^5 - x = product of all linears over F_5 (inseparable-looking p-th power path).
  auto all = factor_poly(f5, from_ints(f5, {0, -1, 0, 0, 0, 1}));
  CHECK(all.degrees() == std::vector<unsigned>{1, 1, 1, 1, 1});
  CHECK_THROWS_AS(factor_poly(f5, FqPoly{}), PreconditionError);
}

TEST_CASE("factorization multiplies back") {
  std::mt19937_64 rng(3);
  std::vector<Fq> fields{Fq::prime(2), Fq::prime(3), Fq::prime(13), Fq::quadratic(3, -1),
                         Fq::quadratic(2, 1, 1), Fq::quadratic(11, 2), Fq::quadratic(7, 1, 1)};
  for (const auto& f : fields)
    for (int trial = 0; trial < 25; ++trial) {
      auto a = random_poly(f, rng, 1 + trial % 9);
      if (trial % 4 == 0) a = poly_mul(f, a, a);  // repeated factors
      auto fac = factor_poly(f, a, 1 + trial);
      CHECK(expand(f, fac) == a);
      for (const auto& [g, m] : fac.factors) CHECK(is_irreducible(f, g));
      // degrees do not depend on the random seed
      CHECK(factor_poly(f, a, 99).degrees() == fac.degrees());
    }
}

TEST_CASE("cycle types of x^3 - x - 1") {
  auto f = z({-1, -1, 0, 1});
  CHECK(cycle_type(f, 2) == std::vector<unsigned>{3});
  CHECK(cycle_type(f, 5) == std::vector<unsigned>{2, 1});
  CHECK_THROWS_AS(cycle_type(f, 23), PreconditionError);
  try {
    cycle_type(f, 23);
  } catch (const PreconditionError& e) {
    CHECK(std::string(e.what()).find("23") != std::string::npos);
  }
}

TEST_CASE("discriminants and resolvent") {
  CHECK(discriminant(z({-1, -1, 0, 1})) == -23);
  CHECK(discriminant(z({-1, -1, 0, 0, 1})) == -283);
  CHECK(discriminant(z({1, 1, 1, 1, 1})) == 125);
  CHECK(discriminant(z({1, 0, 0, 0, 1})) == 256);
  CHECK(discriminant(z({-3, 0, 1})) == 12);
  CHECK(resolvent_cubic(z({-1, -1, 0, 0, 1})) == z({-1, 4, 0, 1}));
  // closed formula against the resultant route, degree 5 goes through the resultant
  CHECK(discriminant(z({-1, -1, 0, 0, 0, 1})) == 2869);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> c(-9, 9);
  auto e = QuadField::make(-7);
  for (int t = 0; t < 30; ++t) {
    EPoly f(5);
    for (std::size_t i = 0; i < 4; ++i) f[i] = QuadNum::from_omega(e, c(rng), c(rng));
    f[4] = QuadNum(e.d, 1);
    CHECK(discriminant(f) == discriminant_sylvester(f));
  }
}

TEST_CASE("Galois groups of quartics over Q") {
  CHECK(quartic_galois_over_Q(z({-1, -1, 0, 0, 1})) == QuarticGroup::S4);
  CHECK(quartic_galois_over_Q(z({1, 0, 0, 0, 1})) == QuarticGroup::V);
  CHECK(quartic_galois_over_Q(z({1, 1, 1, 1, 1})) == QuarticGroup::C4);
  CHECK(quartic_galois_over_Q(z({-2, 0, 0, 0, 1})) == QuarticGroup::D4);
  CHECK(quartic_galois_over_Q(z({1, 1, 0, 0, 1})) == QuarticGroup::S4);
  CHECK(quartic_galois_over_Q(z({12, 8, 0, 0, 1})) == QuarticGroup::A4);  // disc 576^2
  CHECK_THROWS_AS(quartic_galois_over_Q(z({-1, 0, 0, 0, 1})), PreconditionError);
  CHECK_THROWS_AS(quartic_galois_over_Q(z({2, 0, -3, 0, 1})), PreconditionError);  // (x^2-1)(x^2-2)
  CHECK_THROWS_AS(quartic_galois_over_Q(z({-1, 0, 1})), PreconditionError);
  CHECK(quartic_reducible(z({1, 0, 1, 0, 1})));  // (x^2+x+1)(x^2-x+1)
  CHECK_FALSE(quartic_reducible(z({-1, -1, 0, 0, 1})));
}

TEST_CASE("quadratic fields") {
  auto gi = QuadField::make(-1);
  CHECK(inert_primes(gi, 20) == std::vector<std::uint64_t>{3, 7, 11, 19});
  CHECK(split_primes(gi, 20) == std::vector<std::uint64_t>{5, 13, 17});
  auto q2 = QuadField::make(2);
  CHECK(square_in_quadratic(QuadNum(2, 3, 2)));  // (1 + sqrt 2)^2
  CHECK_FALSE(square_in_quadratic(QuadNum(2, 3)));
  CHECK(square_in_quadratic(QuadNum(2, 2)));  // (sqrt 2)^2
  CHECK(square_in_quadratic(QuadNum(-1, -1)));
  CHECK_THROWS_AS(QuadField::make(12), PreconditionError);
  CHECK_THROWS_AS(residue_field(gi, 5), PreconditionError);
  auto w = QuadField::make(5);
  auto [a, b] = omega_coords(w, QuadNum(5, mpq_class(1, 2), mpq_class(1, 2)));
  CHECK(a == 0);
  CHECK(b == 1);
  CHECK_FALSE(is_integral(q2, QuadNum(2, mpq_class(1, 2))));
}

TEST_CASE("squares in quadratic fields: property") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-20, 20);
  for (long d : {-1L, 2L, -3L, 5L, -15L}) {
    for (int t = 0; t < 40; ++t) {
      QuadNum u(d, mpq_class(c(rng), 1 + (t % 3)), c(rng));
      if (u.is_zero()) continue;
      CHECK(square_in_quadratic(u * u));
      // multiplying a square by a non-square rational (non-square in E too) breaks it
      CHECK_FALSE(square_in_quadratic(u * u * QuadNum(d, 7)));
    }
  }
}

TEST_CASE("residue fields and reduction") {
  for (long d : {-1L, 5L, -3L, 2L}) {
    auto e = QuadField::make(d);
    for (auto p : inert_primes(e, 30)) {
      auto f = residue_field(e, p);
      CHECK(f.size() == mpz_class(static_cast<unsigned long>(p * p)));
      // reduction is a ring map and commutes with conjugation
      QuadNum x = QuadNum::from_omega(e, 4, 7), y = QuadNum::from_omega(e, -3, 2);
      CHECK(reduce_inert(e, f, x * y) == fq_mul(f, reduce_inert(e, f, x), reduce_inert(e, f, y)));
      CHECK(reduce_inert(e, f, x.conj()) == fq_frobenius(f, reduce_inert(e, f, x)));
      CHECK(reduce_inert(e, f, lift_inert(e, f, {1, 1})) == FqElem{1, 1});
    }
    for (auto p : split_primes(e, 40)) {
      if (p == 2) continue;
      auto r = sqrt_mod(mpz_class(d), p);
      QuadNum x = QuadNum::from_omega(e, 4, 7), y = QuadNum::from_omega(e, -3, 2);
      CHECK(reduce_split(x * y, p, r) == reduce_split(x, p, r) * reduce_split(y, p, r) % p);
    }
  }
}

TEST_CASE("quartic search over Q(i)") {
  auto e = QuadField::make(-1);
  auto c = search_quartic(e, {3, 7, 11});
  CHECK(c.coefficients.size() == 5);
  CHECK(c.flags == std::array<bool, 5>{true, true, true, true, true});
  CHECK(c.evidence.size() == 5);
  CHECK(verify_candidate(c) == c.flags);
  // determinism under the fixed seed
  auto again = search_quartic(e, {3, 7, 11});
  CHECK(again.coefficients == c.coefficients);
  // tampering is detected
  auto bad = c;
  bad.coefficients[0] = bad.coefficients[0] + QuadNum(-1, 1);
  auto flags = verify_candidate(bad);
  CHECK_FALSE(flags[3]);
  CHECK_THROWS_AS(search_quartic(e, {3, 5, 7}), PreconditionError);
  CHECK_THROWS_AS(search_quartic(e, {3, 3, 7}), PreconditionError);
  SearchOptions tiny;
  tiny.budget = 3;
  CHECK_THROWS_AS(search_quartic(e, {3, 7, 11}, tiny), SearchFailure);
}

TEST_CASE("quartic search with fixed residues") {
  auto e = QuadField::make(-1);
  std::array<Fq, 3> fs{residue_field(e, 3), residue_field(e, 7), residue_field(e, 11)};
  auto c = search_quartic(e, {3, 7, 11});
  SearchOptions o;
  o.targets = c.residues;
  auto d = search_quartic(e, {3, 7, 11}, o);
  CHECK(d.residues == c.residues);
  auto wrong = c.residues;
  wrong[1] = FqPoly{{0, 0}, {0, 0}, {0, 0}, {0, 0}, {1, 0}};  // x^4 where (2,1,1) is required
  o.targets = wrong;
  CHECK_THROWS_AS(search_quartic(e, {3, 7, 11}, o), PreconditionError);
  wrong[1] = c.residues[2];  // entries outside F_7
  o.targets = wrong;
  CHECK_THROWS_AS(search_quartic(e, {3, 7, 11}, o), PreconditionError);
  CHECK(condition_iii(fs[2], c.residues[2]));
}

TEST_CASE("search over other fields") {
  for (long d : {-3L, 5L, 2L}) {
    auto e = QuadField::make(d);
    auto in = inert_primes(e, 40);
    REQUIRE(in.size() >= 3);
    auto c = search_quartic(e, {in[0], in[1], in[2]});
    CHECK(verify_candidate(c) == std::array<bool, 5>{true, true, true, true, true});
  }
}

TEST_CASE("Frobenius sampling") {
  auto r = frobenius_sampling(z({-1, -1, 0, 0, 1}), 1000, par::Exec::serial);
  CHECK(r.samples == 1000);
  CHECK(r.s4_consistent);
  auto v = frobenius_sampling(z({1, 0, 0, 0, 1}), 200, par::Exec::serial);
  CHECK(v.counts[{4}] == 0);
  CHECK_FALSE(v.s4_consistent);
  auto par = frobenius_sampling(z({-1, -1, 0, 0, 1}), 1000, par::Exec::openmp);
  CHECK(par.counts == r.counts);
  CHECK_THROWS_AS(frobenius_sampling(z({-1, -1, 0, 0, 1}), 50), PreconditionError);
  // over E: the searched quartic has Frobenius types at degree-one primes
  auto e = QuadField::make(-1);
  auto c = search_quartic(e, {3, 7, 11});
  auto re = frobenius_sampling(e, c.coefficients, 1000);
  CHECK(re.samples == 1000);
  CHECK(re.s4_consistent);
}
