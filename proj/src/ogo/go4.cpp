#include "artin/ogo/go4.hpp"

#include <algorithm>

#include "artin/errors.hpp"
#include "artin/grp/named.hpp"

namespace artin::ogo {

using chr::Cyclo;
using grp::ClassId;

std::optional<std::size_t> faithful_degree2(const CharacterTable& t) {
  for (std::size_t i = 0; i < t.size(); ++i)
    if (t[i].degree() == 2 && chr::kernel(t[i]).size() == 1) return i;
  return std::nullopt;
}

namespace {

// The unique index-2 subgroup, or throw.
Subgroup unique_index_two(const GroupPtr& g) {
  auto subs = grp::subgroups_of_index(g, 2);
  if (subs.size() != 1)
    throw ConsistencyError(g->label() + " has " + std::to_string(subs.size()) + " index-2 subgroups");
  return subs[0];
}

void check_cover(DoubleCover& d) {
  const auto& G = *d.group;
  if (G.order() != 48) throw ConsistencyError("double cover has order " + std::to_string(G.order()));
  if (d.center.order() != 2) throw ConsistencyError("double cover center is not of order 2");
  auto q = grp::quotient_by_normal(d.group, d.center);
  if (!grp::find_isomorphism(*q.group, *grp::symmetric(4)))
    throw ConsistencyError("double cover modulo its center is not S4");
  if (!grp::find_isomorphism(*d.a4_part.group, *grp::sl23()))
    throw ConsistencyError("index-2 part of the double cover is not SL(2,3)");
  // Lifts of transpositions: outside the A4-part, squaring into the center.
  std::set<unsigned> orders;
  for (Elem g = 0; g < G.order(); ++g) {
    if (d.a4_part.contains(g) || d.center.contains(g)) continue;
    if (d.center.contains(G.product(g, g))) orders.insert(G.element_order(g));
  }
  if (orders.size() != 1) throw ConsistencyError("transposition lifts have mixed orders");
  d.transposition_lift_order = *orders.begin();
  unsigned want = d.kind == CoverKind::tilde ? 2 : 4;
  if (d.transposition_lift_order != want)
    throw ConsistencyError("transposition lifts have order " + std::to_string(d.transposition_lift_order));
}

}  // namespace

DoubleCover double_cover_S4(CoverKind kind) {
  GroupPtr g;
  if (kind == CoverKind::tilde) {
    g = grp::gl23();
  } else {
    auto z4 = grp::cyclic(4);
    auto gl = grp::gl23();
    auto zgl = grp::center(gl);
    Elem i = z4->generators()[0];
    std::vector<Elem> pair_map;
    auto amalg = grp::amalgamated_central_product(z4, gl, {{0, 0}, {z4->power(i, 2), zgl.members[1]}}, &pair_map);
    auto sl = grp::derived_subgroup(grp::whole_group(gl));
    Elem t = 0;
    for (Elem x = 0; x < gl->order(); ++x)
      if (!sl.contains(x) && gl->element_order(x) == 2) {
        t = x;
        break;
      }
    std::size_t nb = gl->order();
    std::vector<Elem> gens;
    for (auto s : sl.generators) gens.push_back(pair_map[0 * nb + s]);
    gens.push_back(pair_map[i * nb + t]);
    auto hat = grp::generated_subgroup(amalg, gens);
    g = grp::as_group(hat, "S4hat");
  }
  DoubleCover d{kind, g, {}, grp::center(g), unique_index_two(g), 0};
  check_cover(d);
  auto t = chr::table_of(g);
  auto f = faithful_degree2(*t);
  if (!f) throw ConsistencyError("double cover has no faithful degree-2 character");
  d.tau = (*t)[*f];
  return d;
}

namespace {

struct SwapBuild {
  GroupPtr total;
  std::vector<std::array<Elem, 3>> coords;
  std::vector<Elem> pair_elem;  // (e * n + h1) * n + h2 -> element
};

SwapBuild build_swap_extension(const GroupPtr& hp, const std::vector<Elem>& cmembers, const std::string& label) {
  const auto& H = *hp;
  const std::size_t nh = H.order();
  auto canonical = [&](Elem h1, Elem h2) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (auto c : cmembers)
      best = std::min<std::size_t>(best, H.product(h1, c) * nh + H.product(h2, H.inverse(c)));
    return best;
  };
  std::vector<std::int32_t> rep_index(nh * nh, -1);
  std::vector<std::size_t> reps;
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) {
      std::size_t key = h1 * nh + h2;
      if (canonical(h1, h2) == key) {
        rep_index[key] = static_cast<std::int32_t>(reps.size());
        reps.push_back(key);
      }
    }
  std::vector<std::int32_t> class_of_pair(nh * nh);
  for (Elem h1 = 0; h1 < nh; ++h1)
    for (Elem h2 = 0; h2 < nh; ++h2) class_of_pair[h1 * nh + h2] = rep_index[canonical(h1, h2)];

  const std::size_t n = 2 * reps.size();
  if (n > grp::kTableCap)
    throw SizeLimitError("extension of order " + std::to_string(n) + " exceeds the table cap");
  auto raw = [&](Elem h1, Elem h2, unsigned e) {
    return static_cast<std::size_t>(class_of_pair[h1 * nh + h2]) * 2 + e;
  };
  auto product = [&](std::size_t a, std::size_t b) {
    Elem x1 = static_cast<Elem>(reps[a / 2] / nh), x2 = static_cast<Elem>(reps[a / 2] % nh);
    Elem y1 = static_cast<Elem>(reps[b / 2] / nh), y2 = static_cast<Elem>(reps[b / 2] % nh);
    unsigned e = a % 2, f = b % 2;
    if (e) std::swap(y1, y2);
    return raw(H.product(x1, y1), H.product(x2, y2), (e + f) % 2);
  };
  std::vector<std::size_t> gens;
  for (auto g : H.generators()) gens.push_back(raw(g, 0, 0));
  gens.push_back(raw(0, 0, 1));
  std::vector<std::string> names(n);
  for (std::size_t r = 0; r < n; ++r) {
    Elem h1 = static_cast<Elem>(reps[r / 2] / nh), h2 = static_cast<Elem>(reps[r / 2] % nh);
    names[r] = "(" + H.element_name(h1) + "," + H.element_name(h2) + ")" + (r % 2 ? "s" : "");
  }
  std::vector<Elem> relabel;
  SwapBuild b;
  b.total = grp::FiniteGroup::from_product(n, product, gens, label, true, std::move(names), &relabel);
  b.coords.resize(n);
  for (std::size_t r = 0; r < n; ++r)
    b.coords[relabel[r]] = {static_cast<Elem>(reps[r / 2] / nh), static_cast<Elem>(reps[r / 2] % nh),
                            static_cast<Elem>(r % 2)};
  b.pair_elem.resize(2 * nh * nh);
  for (unsigned e = 0; e < 2; ++e)
    for (Elem h1 = 0; h1 < nh; ++h1)
      for (Elem h2 = 0; h2 < nh; ++h2) b.pair_elem[(e * nh + h1) * nh + h2] = relabel[raw(h1, h2, e)];
  return b;
}

Subgroup untwisted_part(const GroupPtr& g, const std::vector<std::array<Elem, 3>>& coords) {
  std::vector<Elem> m;
  for (Elem x = 0; x < g->order(); ++x)
    if (coords[x][2] == 0) m.push_back(x);
  return grp::make_subgroup(g, std::move(m));
}

}  // namespace

Go4Extension go4_extension(const GroupPtr& h, const ClassFunction& tau, const Subgroup& c) {
  const auto& H = *h;
  if (tau.group() != h) throw PreconditionError("tau is not a character of the base group");
  if (c.parent != h) throw PreconditionError("C is not a subgroup of the base group");
  if (tau.degree() != 2) throw PreconditionError("tau must have degree 2");
  if (chr::kernel(tau).size() != 1) throw PreconditionError("tau must be faithful");
  for (auto x : c.members) {
    for (auto g : H.generators())
      if (H.product(x, g) != H.product(g, x)) throw PreconditionError("C is not central");
    Cyclo v = tau.at_element(x);
    if (!(v * v.conj() == Cyclo(4))) throw PreconditionError("C does not act by scalars under tau");
  }
  if (2 * H.order() * H.order() / c.order() > grp::kTableCap)
    throw SizeLimitError("GO(4) extension over " + H.label() + " exceeds the table cap");

  auto b = build_swap_extension(h, c.members, "GO4[" + H.label() + "]");
  Go4Extension ext;
  ext.base = h;
  ext.tau = tau;
  ext.scalars = c;
  ext.total = b.total;
  ext.coords = std::move(b.coords);
  ext.index2 = untwisted_part(ext.total, ext.coords);
  ext.swap = b.pair_elem[(1 * H.order() + 0) * H.order() + 0];
  const auto& G = *ext.total;
  std::vector<Cyclo> v(G.class_count());
  for (ClassId k = 0; k < G.class_count(); ++k) {
    auto [h1, h2, e] = ext.coords[G.classes().representatives[k]];
    v[k] = e ? tau.at_element(H.product(h1, h2)) : tau.at_element(h1) * tau.at_element(h2);
  }
  ext.asai4 = ClassFunction(ext.total, std::move(v));
  return ext;
}

Go4Lift go4_lift(const Go4Extension& ext) {
  const auto& H = *ext.base;
  const std::size_t nh = H.order();
  auto b = build_swap_extension(ext.base, {0}, "W[" + H.label() + "]");
  Go4Lift lift;
  lift.group = b.total;
  lift.coords = std::move(b.coords);
  lift.index2 = untwisted_part(lift.group, lift.coords);
  // (h1, h2, e) in W maps to the class of (h1, h2) s^e in the extension.
  std::vector<Elem> ext_elem(2 * nh * nh);
  for (Elem x = 0; x < ext.total->order(); ++x) {
    auto [h1, h2, e] = ext.coords[x];
    for (auto c : ext.scalars.members)
      ext_elem[(e * nh + H.product(h1, H.inverse(c))) * nh + H.product(h2, c)] = x;
  }
  lift.projection.resize(lift.group->order());
  for (Elem w = 0; w < lift.group->order(); ++w) {
    auto [h1, h2, e] = lift.coords[w];
    lift.projection[w] = ext_elem[(e * nh + h1) * nh + h2];
  }
  return lift;
}

std::vector<Matrix> realize(const grp::FiniteGroup& g, const std::vector<Matrix>& images) {
  const auto& gens = g.generators();
  if (images.size() != gens.size()) throw PreconditionError("one image per generator required");
  std::size_t dim = images.empty() ? 1 : images[0].dim();
  std::vector<Matrix> map(g.order());
  std::vector<char> done(g.order(), 0);
  map[0] = Matrix::identity(dim);
  done[0] = 1;
  std::vector<Elem> queue{0};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = g.product(x, gens[j]);
      Matrix m = map[x] * images[j];
      if (!done[y]) {
        done[y] = 1;
        map[y] = std::move(m);
        queue.push_back(y);
      } else if (!(map[y] == m)) {
        throw PreconditionError("generator images do not define a homomorphism");
      }
    }
  }
  return map;
}

std::vector<Matrix> quaternion_matrices(const GroupPtr& q8, const ClassFunction& tau) {
  Cyclo i = Cyclo::root_of_unity(4, 1);
  std::vector<Matrix> units;
  for (int s : {1, -1}) {
    Cyclo c(s);
    units.push_back(Matrix(2, {c, 0, 0, c}));
    units.push_back(Matrix(2, {c * i, 0, 0, -c * i}));
    units.push_back(Matrix(2, {0, c, -c, 0}));
    units.push_back(Matrix(2, {0, c * i, c * i, 0}));
  }
  const auto& gens = q8->generators();
  std::vector<std::size_t> pick(gens.size(), 0);
  for (;;) {
    std::vector<Matrix> imgs;
    for (auto k : pick) imgs.push_back(units[k]);
    try {
      auto m = realize(*q8, imgs);
      bool ok = true;
      for (Elem x = 0; x < q8->order() && ok; ++x) ok = m[x].trace() == tau.at_element(x);
      if (ok) return m;
    } catch (const PreconditionError&) {
    }
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == units.size()) pick[j++] = 0;
    if (j == pick.size()) break;
  }
  throw SearchFailure("no quaternion matrices realize the given character");
}

std::size_t validate_tensor_model(const Go4Extension& ext, const std::vector<Matrix>& a) {
  const auto& G = *ext.total;
  std::vector<Matrix> model(G.order());
  Matrix p = swap_matrix(2);
  for (Elem x = 0; x < G.order(); ++x) {
    auto [h1, h2, e] = ext.coords[x];
    model[x] = kronecker(a[h1], a[h2]);
    if (e) model[x] = model[x] * p;
  }
  std::size_t bad = 0;
  for (Elem x = 0; x < G.order(); ++x) {
    if (!(model[x].trace() == ext.asai4.at_element(x))) ++bad;
    for (Elem y = 0; y < G.order(); ++y)
      if (!(model[x] * model[y] == model[G.product(x, y)])) ++bad;
  }
  return bad;
}

std::optional<std::size_t> is_go_type(const ClassFunction& chi, const CharacterTable& t) {
  auto s = chr::sym2(chi);
  auto one = ClassFunction::trivial(chi.group());
  for (auto i : t.linear_indices()) {
    auto ip = chr::inner_product(s * t[i].conj(), one);
    auto v = ip.integer();
    if (v && *v >= 1) return i;
  }
  return std::nullopt;
}

std::optional<AdRealization> ad_realize_so3(const ClassFunction& chi3, const CharacterTable& t) {
  if (chi3.degree() != 3) throw PreconditionError("ad_realize_so3 needs a degree-3 character");
  if (!(chr::det_character(chi3) == ClassFunction::trivial(chi3.group())))
    throw PreconditionError("ad_realize_so3 needs trivial determinant");
  if (!(chr::fs_indicator(chi3) == Cyclo(1))) throw PreconditionError("ad_realize_so3 needs an orthogonal character");
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (t[i].degree() != 2) continue;
    auto ad = chr::ad_character(t[i]);
    for (auto l : t.linear_indices())
      if (ad * t[l] == chi3) return AdRealization{i, l};
  }
  return std::nullopt;
}

}  // namespace artin::ogo
