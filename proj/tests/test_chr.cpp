#include <algorithm>
#include <chrono>

#include "artin/chr/table.hpp"
#include "artin/errors.hpp"
#include "artin/grp/named.hpp"
#include "doctest.h"

using namespace artin;
using namespace artin::chr;
using namespace artin::grp;

namespace {

std::vector<std::size_t> sorted_degrees(const CharacterTable& t) {
  auto d = t.degrees();
  std::sort(d.begin(), d.end());
  return d;
}

ClassFunction ints(const GroupPtr& g, std::vector<long> v) {
  std::vector<Cyclo> c(v.begin(), v.end());
  return ClassFunction(g, c);
}

// Brute-force oracle for <a, b>: a sum over all group elements.
Cyclo brute_inner(const ClassFunction& a, const ClassFunction& b) {
  const auto& g = *a.group();
  Cyclo s;
  for (Elem x = 0; x < g.order(); ++x) s += a.at_element(x) * b.at_element(x).conj();
  return s * Cyclo(Rational(1, static_cast<long>(g.order())));
}

// Brute-force oracle for induction: (1/|H|) sum over x in G of chi(x g x^-1) on H.
ClassFunction brute_induce(const Subgroup& h, const ClassFunction& chi) {
  const auto& G = *h.parent;
  std::vector<Cyclo> v(G.class_count());
  for (ClassId c = 0; c < G.class_count(); ++c) {
    Elem g = G.classes().representatives[c];
    Cyclo s;
    for (Elem x = 0; x < G.order(); ++x) {
      Elem y = G.conjugate(g, x);
      if (h.contains(y)) s += chi.at_element(h.to_local(y));
    }
    v[c] = s * Cyclo(Rational(1, static_cast<long>(h.order())));
  }
  return ClassFunction(h.parent, v);
}

std::vector<GroupPtr> corpus() {
  return {symmetric(3), symmetric(4), alternating(4), klein_four(), cyclic(4), cyclic(5),
          dihedral(4),  dihedral(5),  quaternion(),   sl23(),       gl23(),    alternating(5),
          direct_product(cyclic(3), symmetric(3))};
}

}  // namespace

TEST_CASE("S3 table") {
  auto g = symmetric(3);
  auto t = character_table(g);
  REQUIRE(t.size() == 3);
  CHECK(t.degrees() == std::vector<std::size_t>{1, 1, 2});
  CHECK(t[0] == ClassFunction::trivial(g));
  // classes: e, transposition, 3-cycle
  CHECK(t[2] == ints(g, {2, 0, -1}));
  CHECK(t[1] == ints(g, {1, -1, 1}));
  CHECK(check_orthogonality(t));
}

TEST_CASE("degree multisets and orthogonality on the corpus") {
  for (const auto& g : corpus()) {
    CAPTURE(g->label());
    auto t = character_table(g);
    CHECK(check_orthogonality(t));
    CHECK(t[0] == ClassFunction::trivial(g));
    // The regular character decomposes with multiplicities equal to degrees.
    auto m = decompose(ClassFunction::regular(g), t);
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(m[i] == static_cast<long>(t.degrees()[i]));
    for (std::size_t i = 0; i < t.size(); ++i) CHECK(brute_inner(t[i], t[i]) == Cyclo(1));
  }
  CHECK(sorted_degrees(character_table(symmetric(4))) == std::vector<std::size_t>{1, 1, 2, 3, 3});
  CHECK(sorted_degrees(character_table(alternating(4))) == std::vector<std::size_t>{1, 1, 1, 3});
  CHECK(sorted_degrees(character_table(quaternion())) == std::vector<std::size_t>{1, 1, 1, 1, 2});
  CHECK(sorted_degrees(character_table(sl23())) == std::vector<std::size_t>{1, 1, 1, 2, 2, 2, 3});
  CHECK(sorted_degrees(character_table(gl23())) == std::vector<std::size_t>{1, 1, 2, 2, 2, 3, 3, 4});
  CHECK(sorted_degrees(character_table(alternating(5))) == std::vector<std::size_t>{1, 3, 3, 4, 5});
}

TEST_CASE("Z/4 characters are i^(jk)") {
  auto g = cyclic(4);
  auto t = character_table(g);
  // canonical order: 0 = e, 1 = generator, 2 = generator^2 ... classes sorted by order
  Elem gen = g->generators()[0];
  for (const auto& chi : t.irr) {
    Cyclo v = chi.at_element(gen);
    bool root = false;
    for (int j = 0; j < 4; ++j) {
      if (!(v == Cyclo::root_of_unity(4, j))) continue;
      root = true;
      for (int k = 0; k < 4; ++k) CHECK(chi.at_element(g->power(gen, k)) == Cyclo::root_of_unity(4, j * k));
    }
    CHECK(root);
  }
}

TEST_CASE("serial and parallel class constants agree") {
  for (const auto& g : {gl23(), symmetric(5)}) {
    auto a = class_structure_constants(*g, par::Exec::serial);
    auto b = class_structure_constants(*g, par::Exec::openmp);
    CHECK(a == b);
  }
  auto g = gl23();
  auto t1 = character_table(g, {par::Exec::serial, 5});
  auto t2 = character_table(g, {par::Exec::openmp, 5});
  CHECK(t1.irr == t2.irr);
}

TEST_CASE("inner products and decomposition") {
  auto g = symmetric(3);
  auto t = character_table(g);
  CHECK(inner_product(ClassFunction::trivial(g), ClassFunction::trivial(g)) == Cyclo(1));
  CHECK(inner_product(t[2], ClassFunction::trivial(g)) == Cyclo(0));
  CHECK(decompose(ClassFunction::regular(g), t) == std::vector<long>{1, 1, 2});
  CHECK_THROWS_AS(decompose(ints(g, {1, 0, 0}), t), NotACharacterError);
  CHECK(fs_indicator(t[2]) == Cyclo(1));
  auto q = quaternion();
  auto tq = character_table(q);
  CHECK(fs_indicator(tq.irr.back()) == Cyclo(-1));
  for (const auto& chi : character_table(sl23()).irr) {
    auto f = fs_indicator(chi).integer();
    REQUIRE(f);
    CHECK((*f == -1 || *f == 0 || *f == 1));
  }
}

TEST_CASE("sym2, alt2, det, charpoly") {
  auto g = symmetric(3);
  auto t = character_table(g);
  auto chi2 = t[2];
  CHECK(sym2(chi2) == ints(g, {3, 1, 0}));
  CHECK(decompose(sym2(chi2), t) == std::vector<long>{1, 0, 1});
  CHECK(alt2(chi2) == ints(g, {1, -1, 1}));
  CHECK(alt2(t[1]).is_zero());
  CHECK(det_character(chi2) == t[1]);
  auto cp = charpoly_of_class(chi2, 2);  // 3-cycle
  CHECK(cp == std::vector<Cyclo>{1, 1, 1});
  cp = charpoly_of_class(chi2, 1);
  CHECK(cp == std::vector<Cyclo>{1, 0, -1});
  CHECK(charpoly_of_class(chi2, 0) == std::vector<Cyclo>{1, -2, 1});
  for (const auto& h : corpus()) {
    auto th = character_table(h);
    for (const auto& chi : th.irr) {
      CHECK(sym2(chi) + alt2(chi) == chi * chi);
      // Newton round trip: the power sums are recovered from the charpoly.
      for (ClassId c = 0; c < h->class_count(); ++c) {
        auto e = elementary_symmetric(chi, c);
        long n = chi.degree();
        // direct check through the recurrence p_k = sum (-1)^(i-1) e_i p_{k-i} ... + (-1)^(k-1) k e_k
        for (long k = 1; k <= n; ++k) {
          Cyclo s = Cyclo(k % 2 ? 1 : -1) * Cyclo(k) * e[k];
          for (long i = 1; i < k; ++i) s += Cyclo((i - 1) % 2 ? -1 : 1) * e[i] * chi[h->power_class(c, k - i)];
          CHECK(s == chi[h->power_class(c, k)]);
        }
      }
      CHECK(is_linear(det_character(chi)));
    }
  }
}

TEST_CASE("induction and restriction") {
  auto s3 = symmetric(3);
  auto a3 = subgroups_of_index(s3, 2).at(0);
  auto ta3 = character_table(a3.group);
  auto omega = ta3[1];
  CHECK(!(omega == ClassFunction::trivial(a3.group)));
  CHECK(induce(a3, omega) == ints(s3, {2, 0, -1}));

  auto s4 = symmetric(4);
  auto t4 = character_table(s4);
  for (auto k : {2u, 3u, 4u, 6u}) {
    for (const auto& h : subgroups_of_index(s4, k)) {
      auto perm = induce(h, ClassFunction::trivial(h.group));
      for (ClassId c = 0; c < s4->class_count(); ++c) {
        // fixed points of the class representative on the cosets
        Elem g = s4->classes().representatives[c];
        long fixed = 0;
        for (Elem x = 0; x < s4->order(); ++x)
          if (h.contains(s4->conjugate(g, s4->inverse(x)))) ++fixed;
        CHECK(perm[c] == Cyclo(Rational(fixed, static_cast<long>(h.order()))));
      }
    }
  }
  auto a4 = subgroups_of_index(s4, 2).at(0);
  for (const auto& chi : t4.irr)
    if (chi.degree() == 3) CHECK(is_irreducible(restrict(chi, a4)));
}

TEST_CASE("Frobenius reciprocity and Mackey for index 2") {
  for (const auto& g : corpus()) {
    if (g->order() > 60) continue;
    auto t = character_table(g);
    for (std::size_t k : {2u, 3u, 4u}) {
      for (const auto& h : subgroups_of_index(g, k)) {
        auto th = character_table(h.group);
        for (const auto& psi : th.irr) {
          auto ind = induce(h, psi);
          CHECK(ind == brute_induce(h, psi));
          CHECK(ind.degree() == psi.degree() * static_cast<long>(k));
          for (const auto& chi : t.irr) CHECK(inner_product(ind, chi) == inner_product(psi, restrict(chi, h)));
          if (k == 2) {
            Elem t_out = 0;
            while (h.contains(t_out)) ++t_out;
            auto tw = outer_twist(h, psi, t_out);
            CHECK(restrict(ind, h) == psi + tw);
            CHECK(outer_twist(h, tw, t_out) == psi);
            // independent of the outer element
            for (Elem t2 = 0; t2 < g->order(); ++t2)
              if (!h.contains(t2)) CHECK(outer_twist(h, psi, t2) == tw);
          }
        }
      }
    }
  }
}

TEST_CASE("outer twist swaps the faithful characters of Z/4 inside D4") {
  auto d4 = dihedral(4);
  Subgroup z4 = generated_subgroup(d4, {d4->generators()[0]});
  REQUIRE(z4.order() == 4);
  auto tz = character_table(z4.group);
  Elem t = d4->generators()[1];
  int swapped = 0;
  for (const auto& chi : tz.irr) {
    auto tw = outer_twist(z4, chi, t);
    if (chi.degree() == 1 && !(tw == chi)) {
      CHECK(tw == chi.conj());
      ++swapped;
    }
  }
  CHECK(swapped == 2);
  CHECK_THROWS_AS(outer_twist(z4, tz[1], 0), PreconditionError);
}

TEST_CASE("adjoint characters") {
  auto q = quaternion();
  auto tq = character_table(q);
  auto ad = ad_character(tq.irr.back());
  CHECK(ad.degree() == 3);
  // the sum of the three non-trivial linear characters
  ClassFunction expect = ClassFunction::zero(q);
  for (std::size_t i = 1; i < 4; ++i) expect += tq[i];
  CHECK(ad == expect);
  for (const auto& g : {gl23(), sl23(), quaternion()}) {
    auto t = character_table(g);
    for (const auto& tau : t.irr) {
      if (tau.degree() != 2) continue;
      auto a = ad_character(tau);
      CHECK(a == a.conj());
      CHECK(det_character(a) == ClassFunction::trivial(g));
      for (auto li : t.linear_indices()) CHECK(ad_character(tau * t[li]) == a);
    }
  }
  CHECK_THROWS_AS(ad_character(tq[0]), PreconditionError);
}

TEST_CASE("tables within the time budget") {
  for (const auto& g : {symmetric(3), symmetric(4), alternating(4), quaternion(), sl23(), gl23()}) {
    auto start = std::chrono::steady_clock::now();
    auto t = character_table(g);
    CHECK(check_orthogonality(t));
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 10.0);
  }
}

TEST_CASE("table formatting") {
  auto t = character_table(symmetric(3));
  auto s = format_table(t);
  CHECK(s.find("group S3 order 6") != std::string::npos);
  CHECK(s.find("(1 2 3)") != std::string::npos);
  CHECK(format_decomposition({1, 0, 2}) == "X0 + 2*X2");
}
