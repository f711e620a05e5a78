#include "artin/ogo/monomial.hpp"

#include "artin/errors.hpp"

namespace artin::ogo {

using chr::ClassFunction;
using cyc::Cyclo;
using grp::ClassId;
using grp::Elem;
using grp::GroupPtr;
using grp::Subgroup;

namespace {

bool squares_to_one(const ClassFunction& l) {
  return l * l == ClassFunction::trivial(l.group());
}

// An abelian normal subgroup that is not central, if one exists.
std::optional<Subgroup> noncentral_abelian_normal(const GroupPtr& g) {
  const auto& G = *g;
  auto z = grp::center(g);
  auto try_members = [&](std::vector<Elem> m) -> std::optional<Subgroup> {
    if (m.size() <= 1 || m.size() == G.order()) return std::nullopt;
    for (auto x : m)
      if (!z.contains(x)) {
        auto s = grp::make_subgroup(g, std::move(m));
        if (s.group->is_abelian()) return s;
        return std::nullopt;
      }
    return std::nullopt;
  };
  auto series = grp::derived_series(g);
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    if (auto s = try_members(it->members)) return s;
  }
  for (Elem x = 1; x < G.order(); ++x)
    if (auto s = try_members(grp::normal_closure(G, {x}))) return s;
  return std::nullopt;
}

std::optional<Monomialization> descend(const ClassFunction& chi);

// chi faithful or not: pass to G / ker(chi) first.
std::optional<Monomialization> via_quotient(const ClassFunction& chi) {
  const auto& g = chi.group();
  auto ker = grp::make_subgroup(g, chr::kernel(chi));
  auto q = grp::quotient_by_normal(g, ker);
  const auto& Q = *q.group;
  std::vector<Elem> lift(Q.order());
  for (Elem x = g->order(); x-- > 0;) lift[q.projection[x]] = x;
  std::vector<Cyclo> v(Q.class_count());
  for (ClassId c = 0; c < Q.class_count(); ++c) v[c] = chi.at_element(lift[Q.classes().representatives[c]]);
  auto inner = descend(ClassFunction(q.group, std::move(v)));
  if (!inner) return std::nullopt;
  std::vector<Elem> members;
  for (Elem x = 0; x < g->order(); ++x)
    if (inner->subgroup.contains(q.projection[x])) members.push_back(x);
  auto h = grp::make_subgroup(g, std::move(members));
  const auto& H = *h.group;
  std::vector<Cyclo> lv(H.class_count());
  for (ClassId c = 0; c < H.class_count(); ++c) {
    Elem x = q.projection[h.embed(H.classes().representatives[c])];
    lv[c] = inner->lambda.at_element(inner->subgroup.to_local(x));
  }
  ClassFunction lambda(h.group, std::move(lv));
  return Monomialization{h, lambda, inner->path, squares_to_one(lambda)};
}

std::optional<Monomialization> descend(const ClassFunction& chi) {
  const auto& g = chi.group();
  if (chi.degree() == 1) {
    auto w = grp::whole_group(g);
    return Monomialization{w, chi, "clifford", squares_to_one(chi)};
  }
  if (chr::kernel(chi).size() > 1) return via_quotient(chi);
  auto a = noncentral_abelian_normal(g);
  if (!a) return monomialize_search(chi);
  const auto& G = *g;
  auto res = chr::restrict(chi, *a);
  auto ta = chr::table_of(a->group);
  auto mult = chr::decompose(res, *ta);
  std::size_t first = 0;
  while (mult[first] == 0) ++first;
  const auto& chi1 = (*ta)[first];
  // Stabilizer of chi1 under conjugation.
  std::vector<Elem> stab;
  for (Elem x = 0; x < G.order(); ++x) {
    bool fixes = true;
    for (Elem i = 0; i < a->order() && fixes; ++i) {
      Elem y = G.conjugate(a->members[i], x);
      fixes = chi1.at_element(a->to_local(y)) == chi1.at_element(i);
    }
    if (fixes) stab.push_back(x);
  }
  if (stab.size() == G.order()) return monomialize_search(chi);
  auto g1 = grp::make_subgroup(g, std::move(stab));
  auto t1 = chr::table_of(g1.group);
  auto res1 = chr::restrict(chi, g1);
  auto a_in_g1 = grp::make_subgroup(g1.group, grp::inclusion_map(*a, g1));
  for (std::size_t i = 0; i < t1->size(); ++i) {
    const auto& psi = (*t1)[i];
    if (psi.degree() * static_cast<long>(g1.index) != chi.degree()) continue;
    if (chr::inner_product(res1, psi).is_zero()) continue;
    // psi must lie over chi1 (as a character of A inside G1).
    auto on_a = chr::restrict(psi, a_in_g1);
    Cyclo over;
    const auto& A = *a_in_g1.group;
    for (ClassId c = 0; c < A.class_count(); ++c) {
      Elem in_a = a->to_local(g1.embed(a_in_g1.embed(A.classes().representatives[c])));
      over += on_a[c] * chi1.at_element(in_a).conj();
    }
    if (over.is_zero()) continue;
    if (!(chr::induce(g1, psi) == chi)) continue;
    auto inner = descend(psi);
    if (!inner) return std::nullopt;
    auto h = grp::lift_subgroup(inner->subgroup, g1);
    return Monomialization{h, inner->lambda, inner->path, inner->quadratic};
  }
  throw ConsistencyError("no Clifford correspondent found over the stabilizer");
}

}  // namespace

std::optional<Monomialization> monomialize_search(const ClassFunction& chi, bool want_quadratic) {
  const auto& g = chi.group();
  long d = chi.degree();
  for (auto& h : grp::subgroups_of_index(g, static_cast<std::size_t>(d))) {
    auto t = chr::table_of(h.group);
    for (auto l : t->linear_indices()) {
      const auto& lambda = (*t)[l];
      bool quad = squares_to_one(lambda);
      if (want_quadratic && !quad) continue;
      if (chr::induce(h, lambda) == chi) return Monomialization{h, lambda, "search", quad};
    }
  }
  return std::nullopt;
}

Monomialization monomialize_odd(const ClassFunction& chi) {
  if (!chr::is_irreducible(chi)) throw PreconditionError("monomialize_odd needs an irreducible character");
  long d = chi.degree();
  if (d % 2 == 0) throw PreconditionError("monomialize_odd needs odd degree");
  auto m = descend(chi);
  if (!m) throw SearchFailure("character is not monomial");
  if (!(chr::induce(m->subgroup, m->lambda) == chi))
    throw ConsistencyError("monomialization does not induce back to the character");
  if (chi == chi.conj() && !m->quadratic) {
    auto q = monomialize_search(chi, true);
    if (!q) throw ConsistencyError("self-dual character has no quadratic monomialization");
    m = std::move(q);
  }
  return *m;
}

}  // namespace artin::ogo
