#include <algorithm>
#include <random>

#include "artin/errors.hpp"
#include "artin/grp/group.hpp"
#include "artin/grp/named.hpp"
#include "doctest.h"

using namespace artin::grp;

namespace {

std::vector<std::size_t> sizes(const FiniteGroup& g) { return g.classes().class_sizes; }

std::vector<GroupPtr> small_corpus() {
  return {symmetric(3), symmetric(4), alternating(4), klein_four(), cyclic(4), cyclic(6),
          dihedral(4),  dihedral(5),  quaternion(),   sl23(),       gl23(),    cyclic(8)};
}

void check_group_axioms(const FiniteGroup& g) {
  const std::size_t n = g.order();
  std::mt19937 rng(5);
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(n - 1));
  const bool exhaustive = n <= 64;
  auto triples = exhaustive ? n * n * n : 20000;
  for (std::size_t t = 0; t < triples; ++t) {
    Elem a, b, c;
    if (exhaustive) {
      a = static_cast<Elem>(t / (n * n));
      b = static_cast<Elem>((t / n) % n);
      c = static_cast<Elem>(t % n);
    } else {
      a = pick(rng), b = pick(rng), c = pick(rng);
    }
    REQUIRE(g.product(g.product(a, b), c) == g.product(a, g.product(b, c)));
  }
  for (Elem a = 0; a < n; ++a) {
    REQUIRE(g.product(a, 0) == a);
    REQUIRE(g.product(0, a) == a);
    REQUIRE(g.product(a, g.inverse(a)) == 0);
  }
  REQUIRE(closure(g, g.generators()).size() == n);
  // class equation and power classes
  std::size_t total = 0;
  for (auto s : g.classes().class_sizes) total += s;
  CHECK(total == n);
  for (ClassId c = 0; c < g.class_count(); ++c) {
    CHECK(g.power_class(c, 1) == c);
    for (long k = -3; k <= 5; ++k) {
      ClassId expect = g.power_class(c, k);
      for (Elem x = 0; x < n; ++x)
        if (g.class_of(x) == c) REQUIRE(g.class_of(g.power(x, k)) == expect);
    }
  }
}

}  // namespace

TEST_CASE("construction examples") {
  CHECK(FiniteGroup::from_generators(3, {Perm::parse(3, "(1 2)"), Perm::parse(3, "(1 2 3)")}, "S3")->order() == 6);
  CHECK(FiniteGroup::from_generators(1, {}, "1")->order() == 1);
  CHECK(symmetric(4)->order() == 24);
  CHECK(alternating(5)->order() == 60);
  CHECK(quaternion()->order() == 8);
  CHECK(sl23()->order() == 24);
  CHECK(gl23()->order() == 48);
  CHECK_THROWS_AS(FiniteGroup::from_generators(8, {Perm::parse(8, "(1 2)"), Perm::parse(8, "(1 2 3 4 5 6 7 8)")}, "S8", 1000),
                  artin::SizeLimitError);
}

TEST_CASE("canonical order is breadth-first") {
  auto s3 = symmetric(3);
  CHECK(s3->generators() == std::vector<Elem>{1, 2});
  CHECK(s3->perm(1) == Perm::parse(3, "(1 2)"));
  CHECK(s3->perm(2) == Perm::parse(3, "(1 2 3)"));
}

TEST_CASE("conjugacy class examples") {
  CHECK(sizes(*symmetric(3)) == std::vector<std::size_t>{1, 3, 2});
  CHECK(sizes(*cyclic(4)) == std::vector<std::size_t>{1, 1, 1, 1});
  CHECK(sizes(*symmetric(4)) == std::vector<std::size_t>{1, 3, 6, 8, 6});
  auto s4 = symmetric(4);
  std::vector<std::size_t> sorted = sizes(*s4);
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::size_t>{1, 3, 6, 6, 8});
  CHECK(s4->class_count() == 5);
}

TEST_CASE("group axioms, class equation and power classes on the corpus") {
  for (const auto& g : small_corpus()) {
    CAPTURE(g->label());
    check_group_axioms(*g);
  }
  check_group_axioms(*alternating(5));
}

TEST_CASE("derived series") {
  auto s4 = symmetric(4);
  auto ds = derived_series(s4);
  REQUIRE(ds.size() == 4);
  CHECK(ds[0].order() == 24);
  CHECK(ds[1].order() == 12);
  CHECK(ds[2].order() == 4);
  CHECK(ds[3].order() == 1);
  for (auto& h : ds) CHECK(h.is_normal);
  CHECK(derived_series(cyclic(6)).size() == 2);
  auto a5 = derived_series(alternating(5));
  CHECK(a5.size() == 1);
  CHECK(!is_solvable(alternating(5)));
  CHECK(is_solvable(s4));
  CHECK(is_solvable(gl23()));
}

TEST_CASE("subgroups of small index") {
  auto s4 = symmetric(4);
  auto two = subgroups_of_index(s4, 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].members == derived_series(s4)[1].members);
  auto three = subgroups_of_index(s4, 3);
  CHECK(three.size() == 3);
  for (auto& h : three) CHECK(h.order() == 8);
  CHECK(subgroups_of_index(cyclic(4), 2).size() == 1);
  CHECK(subgroups_of_index(s4, 4).size() == 4);
  CHECK(subgroups_of_index(s4, 6).size() == 7);  // 3 cyclic C4, 1 V normal, 3 non-normal V
  CHECK_THROWS_AS(subgroups_of_index(s4, 12), artin::UnsupportedError);
}

TEST_CASE("low-index search is complete against exhaustive enumeration") {
  std::vector<GroupPtr> groups = small_corpus();
  groups.push_back(direct_product(cyclic(2), dihedral(4)));
  groups.push_back(direct_product(quaternion(), cyclic(2)));
  groups.push_back(direct_product(symmetric(3), symmetric(3)));
  for (const auto& g : groups) {
    CAPTURE(g->label());
    auto all = all_subgroups(g);
    for (std::size_t k = 1; k <= 8; ++k) {
      if (g->order() % k) continue;
      std::set<std::vector<Elem>> expect, got;
      for (auto& h : all)
        if (h.index == k) expect.insert(h.members);
      for (auto& h : subgroups_of_index(g, k)) got.insert(h.members);
      CHECK_MESSAGE(expect == got, "index " << k);
    }
    std::set<std::vector<Elem>> a, b;
    for (auto& h : subgroups_of_index(g, 2)) a.insert(h.members);
    for (auto& h : index_two_subgroups_abelian(g)) b.insert(h.members);
    CHECK(a == b);
  }
}

TEST_CASE("Lagrange and normality on all subgroups") {
  for (const auto& g : {symmetric(4), quaternion(), dihedral(4), sl23()}) {
    for (auto& h : all_subgroups(g)) {
      CHECK(g->order() % h.order() == 0);
      bool normal = true;
      for (Elem x = 0; x < g->order() && normal; ++x)
        for (auto m : h.members)
          if (!h.contains(g->conjugate(m, x))) {
            normal = false;
            break;
          }
      CHECK(normal == h.is_normal);
    }
  }
}

TEST_CASE("Hall subgroups") {
  auto h = hall_subgroup(symmetric(4), {3});
  REQUIRE(h);
  CHECK(h->order() == 3);
  h = hall_subgroup(symmetric(3), {2});
  REQUIRE(h);
  CHECK(h->order() == 2);
  h = hall_subgroup(gl23(), {2, 3});
  REQUIRE(h);
  CHECK(h->order() == 48);
  h = hall_subgroup(gl23(), {2});
  REQUIRE(h);
  CHECK(h->order() == 16);
  CHECK_THROWS_AS(hall_subgroup(alternating(5), {2}), artin::PreconditionError);
}

TEST_CASE("quotients") {
  auto s4 = symmetric(4);
  auto v = derived_series(s4)[2];
  auto q = quotient_by_normal(s4, v);
  CHECK(q.group->order() == 6);
  for (Elem a = 0; a < 24; ++a)
    for (Elem b = 0; b < 24; ++b)
      REQUIRE(q.group->product(q.projection[a], q.projection[b]) == q.projection[s4->product(a, b)]);
  CHECK(quotient_by_normal(s4, trivial_subgroup(s4)).group->order() == 24);
  CHECK(quotient_by_normal(s4, whole_group(s4)).group->order() == 1);
  auto sylow = subgroups_of_index(s4, 3)[0];
  CHECK_THROWS_AS(quotient_by_normal(s4, sylow), artin::PreconditionError);
}

TEST_CASE("products") {
  auto v = direct_product(cyclic(2), cyclic(2));
  CHECK(v->order() == 4);
  CHECK(v->exponent() == 2);
  auto z4 = cyclic(4), q8 = quaternion();
  auto zq = center(q8);
  REQUIRE(zq.order() == 2);
  auto amalg = amalgamated_central_product(z4, q8, {{0, 0}, {z4->power(1, 2), zq.members[1]}});
  CHECK(amalg->order() == 16);
  auto trivial = amalgamated_central_product(z4, q8, {{0, 0}});
  CHECK(trivial->order() == 32);
  auto s3 = symmetric(3);
  CHECK_THROWS_AS(amalgamated_central_product(s3, z4, {{0, 0}, {1, 2}}), artin::PreconditionError);
}

TEST_CASE("group file parsing") {
  auto g = parse_group_text("# S4\ndegree: 4\n\ngen: (1 2)\ngen: (1 2 3 4)  # 4-cycle\n");
  CHECK(g->order() == 24);
  CHECK_THROWS_AS(parse_group_text("gen: (1 2)\n"), artin::ParseError);
  CHECK_THROWS_AS(parse_group_text("degree: 3\ngen: (1 4)\n"), artin::ParseError);
  CHECK(named_group("Z/5")->order() == 5);
  CHECK(named_group("A5")->order() == 60);
  CHECK(named_group("GL(2,3)")->order() == 48);
  CHECK_THROWS_AS(named_group("bogus"), artin::ParseError);
}

TEST_CASE("named matrix groups have the expected structure") {
  auto q8 = quaternion();
  CHECK(sizes(*q8) == std::vector<std::size_t>{1, 1, 2, 2, 2});
  auto sl = sl23();
  CHECK(center(sl).order() == 2);
  CHECK(sl->class_count() == 7);
  auto gl = gl23();
  CHECK(gl->class_count() == 8);
  CHECK(center(gl).order() == 2);
  CHECK(quotient_by_normal(gl, center(gl)).group->class_count() == 5);
}
