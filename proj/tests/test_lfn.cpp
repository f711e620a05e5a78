#include <boost/math/constants/constants.hpp>
#include <numeric>

#include "artin/asai/asai.hpp"
#include "artin/chr/table.hpp"
#include "artin/errors.hpp"
#include "artin/grp/named.hpp"
#include "artin/lfn/lfunction.hpp"
#include "doctest.h"

using namespace artin;
using namespace artin::lfn;

namespace {

nt::ZPoly z(std::initializer_list<long> cs) {
  nt::ZPoly r;
  for (long c : cs) r.emplace_back(c);
  return r;
}

EulerFactor poly(std::initializer_list<long> cs) {
  EulerFactor f;
  f.coeffs.clear();
  for (long c : cs) f.coeffs.emplace_back(c);
  return f;
}

ClassId class_with_type(const GaloisArithData& d, nt::CycleType t) { return d.classes_of_type.at(t).front(); }

Subgroup subgroup_of_order(const GroupPtr& g, std::size_t order, bool normal) {
  for (auto& h : grp::all_subgroups(g))
    if (h.order() == order && h.is_normal == normal) return h;
  throw std::runtime_error("no such subgroup");
}

}  // namespace

TEST_CASE("local factors of S3 characters") {
  auto d = galois_data(z({-1, -1, 0, 1}));
  CHECK(d.group_name == "S3");
  auto t = chr::table_of(d.group);
  auto two = t->irr[0];
  for (const auto& c : t->irr)
    if (c.degree() == 2) two = c;
  CHECK(local_factor(ClassFunction::trivial(d.group), 1) == poly({1, -1}));
  CHECK(local_factor(two, class_with_type(d, {3})) == poly({1, 1, 1}));
  CHECK(local_factor(two, class_with_type(d, {2, 1})) == poly({1, 0, -1}));
  CHECK(local_factor(two, class_with_type(d, {3})).str() == "1+T+T^2");
  CHECK_THROWS_AS(local_factor(two - ClassFunction::trivial(d.group), 0), NotACharacterError);
}

TEST_CASE("additivity of local factors") {
  for (auto name : {"S4", "SL(2,3)", "Q8", "D5"}) {
    auto g = grp::named_group(name);
    auto t = chr::table_of(g);
    for (std::size_t i = 0; i < t->size(); ++i)
      for (std::size_t j = i; j < t->size(); ++j)
        for (ClassId c = 0; c < g->class_count(); ++c)
          CHECK(local_factor(t->irr[i] + t->irr[j], c) ==
                multiply(local_factor(t->irr[i], c), local_factor(t->irr[j], c)));
  }
}

TEST_CASE("Dedekind local factors") {
  auto f = z({-1, -1, 0, 1});
  CHECK(dedekind_local(f, 2) == poly({1, 0, 0, -1}));
  CHECK(dedekind_local(f, 5) == multiply(poly({1, -1}), poly({1, 0, -1})));
  CHECK(dedekind_local(f, 59) == multiply(multiply(poly({1, -1}), poly({1, -1})), poly({1, -1})));
  CHECK_THROWS_AS(dedekind_local(f, 23), PreconditionError);
}

TEST_CASE("a_{N/F} characters") {
  auto s3 = grp::symmetric(3);
  auto h2 = subgroup_of_order(s3, 2, false);
  auto a = a_NF_character(h2);
  CHECK(a.degree() == 2);
  CHECK(chr::is_irreducible(a));
  auto s4 = grp::symmetric(4);
  auto s3_in_s4 = subgroup_of_order(s4, 6, false);
  auto std3 = a_NF_character(s3_in_s4);
  CHECK(std3.degree() == 3);
  CHECK(chr::is_irreducible(std3));
  CHECK(a_NF_character(grp::whole_group(s4)).is_zero());
}

TEST_CASE("Dedekind identity for x^3 - x - 1 and x^4 - x - 1") {
  auto cubic = galois_data(z({-1, -1, 0, 1}));
  auto r3 = verify_dedekind(cubic, 10000);
  CHECK(r3.all_ok());
  CHECK(r3.skipped == std::vector<std::uint64_t>{23});
  CHECK(r3.lines.size() == 1228);
  CHECK(r3.lines.front().str() == "p=2 zetaN=1-T^3 rhs=1-T^3 ok=true");
  auto quartic = galois_data(z({-1, -1, 0, 0, 1}));
  CHECK(quartic.group_name == "S4");
  auto r4 = verify_dedekind(quartic, 10000);
  CHECK(r4.all_ok());
  CHECK(r4.skipped == std::vector<std::uint64_t>{283});
  // the serial and OpenMP paths agree line by line
  auto rp = verify_dedekind(quartic, 2000, std::nullopt, par::Exec::openmp);
  auto rs = verify_dedekind(quartic, 2000, std::nullopt, par::Exec::serial);
  REQUIRE(rp.lines.size() == rs.lines.size());
  for (std::size_t i = 0; i < rp.lines.size(); ++i) CHECK(rp.lines[i].str() == rs.lines[i].str());
}

TEST_CASE("Dedekind identity on other Galois groups") {
  for (auto [f, name] : std::vector<std::pair<nt::ZPoly, std::string>>{{z({1, -3, 0, 1}), "C3"},
                                                                       {z({1, 0, 0, 0, 1}), "V"},
                                                                       {z({1, 1, 1, 1, 1}), "C4"},
                                                                       {z({-2, 0, 0, 0, 1}), "D4"},
                                                                       {z({12, 8, 0, 0, 1}), "A4"},
                                                                       {z({1, 1, 1}), "C2"}}) {
    auto d = galois_data(f);
    CHECK(d.group_name == name);
    CHECK(verify_dedekind(d, 3000).all_ok());
  }
}

TEST_CASE("negative controls report the first failing prime") {
  auto d = galois_data(z({-1, -1, 0, 1}));
  std::swap(d.classes_of_type[{3}], d.classes_of_type[{2, 1}]);
  auto r = verify_dedekind(d, 1000);
  REQUIRE(r.first_failure.has_value());
  CHECK(*r.first_failure == 2);  // x^3 - x - 1 is irreducible mod 2
  auto q = galois_data(z({-1, -1, 0, 0, 1}));
  auto wrong_h = subgroup_of_order(q.group, 4, true);  // V is not a root stabilizer
  CHECK_FALSE(verify_dedekind(q, 1000, wrong_h).all_ok());
}

TEST_CASE("transitivity on subgroup chains of S4") {
  auto s4 = grp::symmetric(4);
  auto subs = grp::all_subgroups(s4);
  std::size_t chains = 0;
  for (const auto& hl : subs)
    for (const auto& hn : subs)
      if (grp::is_subgroup_of(hl, hn)) {
        CHECK(transitivity_check(hl, hn));
        ++chains;
      }
  CHECK(chains > 30);
  auto a4 = subgroup_of_order(s4, 12, true);
  auto c3 = subgroup_of_order(s4, 3, false);
  CHECK_THROWS_AS(transitivity_check(a4, c3), PreconditionError);
}

TEST_CASE("cubic-field shape: a-character of the Sylow-2 fixed field") {
  // The fixed field of a 2-Sylow (which contains V) is a non-Galois cubic field;
  // its a-character is induced from a cubic character of A4.
  auto s4 = grp::symmetric(4);
  auto d4 = subgroup_of_order(s4, 8, false);
  auto a4 = subgroup_of_order(s4, 12, true);
  auto ta = chr::table_of(a4.group);
  int found = 0;
  for (const auto& w : ta->irr)
    if (w.degree() == 1 && !(w == ClassFunction::trivial(a4.group))) {
      CHECK(chr::induce(a4, w) == a_NF_character(d4));
      ++found;
    }
  CHECK(found == 2);
}

TEST_CASE("Dirichlet expansion") {
  std::map<std::uint64_t, EulerFactor> trivial;
  for (auto p : nt::primes_up_to(1000)) trivial[p] = poly({1, -1});
  auto s = dirichlet_expand(trivial, 1000);
  bool all_one = true;
  for (std::size_t n = 1; n <= 1000; ++n) all_one = all_one && s.a[n] == Cyclo(1);
  CHECK(all_one);
  CHECK(s.dump().substr(0, 14) == "n=1 a=1\nn=2 a=");
  // X < N: numbers with a prime factor above X vanish
  std::map<std::uint64_t, EulerFactor> small;
  for (auto p : nt::primes_up_to(10)) small[p] = poly({1, -1});
  auto t = dirichlet_expand(small, 100);
  CHECK(t.a[98] == Cyclo(1));
  CHECK(t.a[22].is_zero());
  CHECK(t.skipped.front() == 11);

  auto zeta = dirichlet_expand(trivial, 1000);
  auto v = numeric_eval(zeta, 2.0);
  double pi2 = boost::math::constants::pi<double>() * boost::math::constants::pi<double>() / 6;
  CHECK(std::abs(v.value.real() - pi2) <= v.error_bound);
  CHECK(v.error_bound < 2e-3);
  CHECK_THROWS_AS(numeric_eval(zeta, 1.0), PreconditionError);
}

TEST_CASE("Dedekind zeta coefficients are multiplicative and non-negative") {
  auto f = z({-1, -1, 0, 1});
  std::map<std::uint64_t, EulerFactor> fac;
  for (auto p : nt::primes_up_to(2000))
    if (p != 23) fac[p] = dedekind_local(f, p);
  auto s = dirichlet_expand(fac, 2000);
  for (std::size_t n = 1; n <= 2000; ++n) {
    auto q = s.a[n].rational();
    REQUIRE(q.has_value());
    CHECK(*q >= 0);
  }
  for (std::size_t m = 2; m < 45; ++m)
    for (std::size_t n = 2; m * n <= 2000; ++n)
      if (std::gcd(m, n) == 1) CHECK(s.a[m * n] == s.a[m] * s.a[n]);
}

TEST_CASE("Asai restriction law on Euler factors") {
  for (auto name : {"S4", "GL(2,3)", "D8"}) {
    auto g = grp::named_group(name);
    for (const auto& s : asai::all_setups(g, false)) {
      auto as = asai::asai_character(s);
      auto ind = chr::induce(s.h, chr::tensor(s.sigma, s.sigma_theta));
      for (ClassId c = 0; c < g->class_count(); ++c)
        CHECK(local_factor(ind, c) == multiply(local_factor(as, c), local_factor(chr::tensor(as, s.delta), c)));
    }
  }
}

TEST_CASE("pole-order probe") {
  auto cubic = galois_data(z({-1, -1, 0, 1}));
  auto triv = pole_order_probe(ClassFunction::trivial(cubic.group), cubic, 10000);
  CHECK(triv.expected == 1);
  CHECK(triv.slope == doctest::Approx(1.0));
  auto t = chr::table_of(cubic.group);
  for (const auto& c : t->irr)
    if (c.degree() == 2) {
      auto r = pole_order_probe(c, cubic, 10000);
      CHECK(r.expected == 1);
      MESSAGE(r.str());
    }
  auto quartic = galois_data(z({-1, -1, 0, 0, 1}));
  auto perm = a_NF_character(quartic.stabilizer) + ClassFunction::trivial(quartic.group);
  auto r = pole_order_probe(perm, quartic, 10000);
  CHECK(r.expected == 2);
  MESSAGE(r.str());
  CHECK_THROWS_AS(pole_order_probe(perm, quartic, 100, {0.9, 1.5}), PreconditionError);
}
