#include "artin/asai/asai.hpp"

#include <algorithm>
#include <functional>

#include "artin/errors.hpp"
#include "artin/ogo/go4.hpp"

namespace artin::asai {

using grp::ClassId;

ClassFunction quadratic_character(const Subgroup& h) {
  if (h.index != 2) throw PreconditionError("quadratic_character needs an index-2 subgroup");
  const auto& G = *h.parent;
  std::vector<Cyclo> v(G.class_count());
  for (ClassId c = 0; c < G.class_count(); ++c) v[c] = h.contains(G.classes().representatives[c]) ? 1 : -1;
  return ClassFunction(h.parent, std::move(v));
}

AsaiSetup make_setup(const Subgroup& h, const ClassFunction& sigma) {
  if (h.index != 2) throw PreconditionError("Asai setup needs an index-2 subgroup");
  if (sigma.group() != h.group) throw PreconditionError("sigma is not a character of the subgroup");
  if (sigma.degree() != 2) throw PreconditionError("sigma must have degree 2");
  AsaiSetup s;
  s.g = h.parent;
  s.h = h;
  s.delta = quadratic_character(h);
  s.sigma = sigma;
  Elem theta = 0;
  while (h.contains(theta)) ++theta;
  s.theta = theta;
  s.sigma_theta = chr::outer_twist(h, sigma, theta);
  return s;
}

std::vector<AsaiSetup> all_setups(const GroupPtr& g, bool include_reducible) {
  std::vector<AsaiSetup> out;
  for (const auto& h : grp::subgroups_of_index(g, 2)) {
    auto t = chr::table_of(h.group);
    for (const auto& c : t->irr)
      if (c.degree() == 2) out.push_back(make_setup(h, c));
    if (!include_reducible) continue;
    auto lin = t->linear_indices();
    for (std::size_t i = 0; i < lin.size(); ++i)
      for (std::size_t j = i; j < lin.size(); ++j) out.push_back(make_setup(h, (*t)[lin[i]] + (*t)[lin[j]]));
  }
  return out;
}

namespace {

ClassFunction asai_raw(const AsaiSetup& s) {
  auto ind = chr::induce(s.h, s.sigma);
  return chr::alt2(ind) - chr::induce(s.h, chr::det_character(s.sigma));
}

ClassFunction twist_setup_sigma(const AsaiSetup& s, const ClassFunction& chi) { return s.sigma * chi; }

}  // namespace

ClassFunction asai_character(const AsaiSetup& s) {
  auto as = asai_raw(s);
  auto mult = chr::decompose(as, *chr::table_of(s.g));
  for (auto m : mult)
    if (m < 0) throw ConsistencyError("Asai character has a negative multiplicity");
  return as;
}

ClassFunction transfer_character(const AsaiSetup& s, const ClassFunction& chi) {
  if (chi.group() != s.h.group) throw PreconditionError("transfer: character is not on the subgroup");
  if (!chr::is_linear(chi)) throw PreconditionError("transfer needs a linear character");
  return chr::det_character(chr::induce(s.h, chi)) * s.delta;
}

bool asai_is_irreducible(const AsaiSetup& s) { return chr::is_irreducible(asai_raw(s)); }

std::vector<DihedralSetup> dihedral_setups(const AsaiSetup& s) {
  std::vector<DihedralSetup> out;
  if (!chr::is_irreducible(s.sigma)) return out;
  for (const auto& m : grp::subgroups_of_index(s.h.group, 2)) {
    auto tm = chr::table_of(m.group);
    for (auto l : tm->linear_indices()) {
      if (!(chr::induce(m, (*tm)[l]) == s.sigma)) continue;
      out.push_back(DihedralSetup{s, m, grp::lift_subgroup(m, s.h), (*tm)[l], quadratic_character(m)});
    }
  }
  return out;
}

std::vector<ClassFunction> extensions(const Subgroup& m, const ClassFunction& tau) {
  if (tau.group() != m.group) throw PreconditionError("extension_test: character is not on the subgroup");
  auto tg = chr::table_of(m.parent);
  auto mult = chr::decompose(chr::induce(m, tau), *tg);
  long d = tau.degree();
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i] > 0 && (*tg)[i].degree() <= d) cand.push_back(i);
  std::vector<ClassFunction> out;
  std::function<void(std::size_t, long, ClassFunction)> rec = [&](std::size_t from, long left, ClassFunction acc) {
    if (left == 0) {
      if (chr::restrict(acc, m) == tau) out.push_back(acc);
      return;
    }
    for (std::size_t k = from; k < cand.size(); ++k) {
      long dk = (*tg)[cand[k]].degree();
      if (dk <= left) rec(k, left - dk, acc + (*tg)[cand[k]]);
    }
  };
  rec(0, d, ClassFunction::zero(m.parent));
  return out;
}

std::optional<ClassFunction> extension_test(const Subgroup& m, const ClassFunction& tau) {
  auto e = extensions(m, tau);
  if (e.empty()) return std::nullopt;
  return e.front();
}

CuspidalityVerdict cuspidality_dihedral(const DihedralSetup& d) {
  const auto& s = d.base;
  CuspidalityVerdict v;
  v.m_normal = d.m_in_g.is_normal;
  auto tau = chr::restrict(s.sigma_theta, d.m) * d.chi;
  if (v.m_normal) {
    v.explanation = "M is normal in G";
  } else {
    v.extension = extension_test(d.m_in_g, tau);
    v.explanation = v.extension ? "tau extends to G" : "M not normal and tau does not extend";
    if (chr::norm_squared(tau) != 1) {
      Elem a = 0;
      while (d.m.contains(a)) ++a;
      auto chi_alpha = chr::outer_twist(d.m, d.chi, a);
      auto eps_theta = chr::restrict(chr::outer_twist(s.h, d.epsilon, s.theta), d.m);
      v.chi_ratio_law = d.chi * chi_alpha.conj() == eps_theta;
    }
  }
  v.cuspidal = !v.m_normal && !v.extension;
  if (v.cuspidal != asai_is_irreducible(s))
    throw ConsistencyError("cuspidality criterion disagrees with irreducibility of As on " + s.g->label() +
                           ": " + v.explanation);
  return v;
}

std::vector<std::size_t> selftwist_characters(const ClassFunction& chi, const CharacterTable& t) {
  std::vector<std::size_t> out;
  for (auto l : t.linear_indices())
    if (chi * t[l] == chi) out.push_back(l);
  return out;
}

std::optional<std::size_t> ad_mult_one_check(const ClassFunction& tau, const ClassFunction& tau2,
                                             const CharacterTable& t) {
  if (!(chr::ad_character(tau) == chr::ad_character(tau2)))
    throw PreconditionError("ad_mult_one_check needs equal adjoint characters");
  for (auto l : t.linear_indices())
    if (tau * t[l] == tau2) return l;
  return std::nullopt;
}

std::size_t IdentityReport::passed() const {
  return static_cast<std::size_t>(std::count_if(results.begin(), results.end(), [](const auto& r) { return r.pass; }));
}

std::size_t IdentityReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const auto& r) { return r.normative && !r.pass; }));
}

void IdentityReport::add(std::string name, bool pass, bool normative, std::string detail) {
  results.push_back({std::move(name), pass, normative, std::move(detail)});
}

namespace {
constexpr std::size_t kTwistSample = 4;
}  // namespace

IdentityReport setup_identities(const AsaiSetup& s) {
  IdentityReport r;
  auto as = asai_raw(s);
  auto ss = s.sigma * s.sigma_theta;
  r.add("restriction of As to H is sigma * sigma^theta", chr::restrict(as, s.h) == ss);
  r.add("Ind(sigma * sigma^theta) = As + As * delta", chr::induce(s.h, ss) == as + as * s.delta);

  auto th = chr::table_of(s.h.group);
  bool twist_ok = true;
  auto th_lin = th->linear_indices();
  // A bounded, deterministic sample of twists keeps large groups cheap.
  if (th_lin.size() > kTwistSample) {
    std::vector<std::size_t> pick;
    for (std::size_t i = 0; i < kTwistSample; ++i) pick.push_back(th_lin[i * th_lin.size() / kTwistSample]);
    th_lin = std::move(pick);
  }
  for (auto l : th_lin) {
    auto st = s;
    st.sigma = twist_setup_sigma(s, (*th)[l]);
    st.sigma_theta = chr::outer_twist(s.h, st.sigma, s.theta);
    if (!(asai_raw(st) == as * transfer_character(s, (*th)[l]))) twist_ok = false;
  }
  r.add("As(sigma * chi) = As(sigma) * transfer(chi)", twist_ok);

  // Distinguished case: sigma = Res(sigma0) * mu with sigma0 on G.
  auto tg = chr::table_of(s.g);
  std::vector<ClassFunction> sources;
  for (const auto& c : tg->irr)
    if (c.degree() == 2) sources.push_back(c);
  auto lin = tg->linear_indices();
  if (lin.size() <= 8)
    for (std::size_t i = 0; i < lin.size(); ++i)
      for (std::size_t j = i; j < lin.size(); ++j) sources.push_back((*tg)[lin[i]] + (*tg)[lin[j]]);
  for (const auto& s0 : sources) {
    auto res = chr::restrict(s0, s.h);
    for (auto l : th->linear_indices()) {
      if (!(res * (*th)[l] == s.sigma)) continue;
      auto shape = (chr::det_character(s0) + chr::sym2(s0) * s.delta) * transfer_character(s, (*th)[l]);
      r.add("distinguished: As = (det sigma0 + sym2(sigma0) delta) * transfer(mu)", as == shape);
      return r;
    }
  }
  return r;
}

IdentityReport pair_identities(const ClassFunction& a, const ClassFunction& b) {
  IdentityReport r;
  if (a.degree() != 2 || b.degree() != 2) throw PreconditionError("pair identities need degree-2 characters");
  auto ab = a * b;
  auto da = chr::det_character(a), db = chr::det_character(b);
  r.add("sym2(a b) = sym2 a sym2 b + alt2 a alt2 b", chr::sym2(ab) == chr::sym2(a) * chr::sym2(b) + chr::alt2(a) * chr::alt2(b));
  r.add("alt2(a + b) = a b + det a + det b", chr::alt2(a + b) == ab + da + db);
  r.add("alt2(a b) = det a sym2 b + sym2 a det b", chr::alt2(ab) == da * chr::sym2(b) + chr::sym2(a) * db);
  r.add("alt2(a b) = a b + det a + det b (tensor reading)", chr::alt2(ab) == ab + da + db, false);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

Poly local_polynomial(const ClassFunction& chi, ClassId c) { return chr::charpoly_of_class(chi, c); }

namespace {

// det(1 - (A (x) B) T) from tr/det of two 2x2 matrices.
Poly tensor_quadratic(const Cyclo& s1, const Cyclo& d1, const Cyclo& s2, const Cyclo& d2) {
  Cyclo e1 = s1 * s2;
  Cyclo e2 = d2 * s1 * s1 + d1 * s2 * s2 - Cyclo(2) * d1 * d2;
  Cyclo e3 = d1 * d2 * s1 * s2;
  Cyclo e4 = d1 * d1 * d2 * d2;
  return {Cyclo(1), -e1, e2, -e3, e4};
}

}  // namespace

IdentityReport local_formulas(const AsaiSetup& s) {
  IdentityReport r;
  const auto& G = *s.g;
  auto as = asai_raw(s);
  auto th = chr::table_of(s.h.group);
  std::vector<Poly> as_poly(G.class_count());
  for (ClassId c = 0; c < G.class_count(); ++c) as_poly[c] = local_polynomial(as, c);

  // Principal series: sigma = mu1 + mu2.
  auto mult = chr::decompose(s.sigma, *th);
  std::vector<std::size_t> parts;
  for (std::size_t i = 0; i < mult.size(); ++i)
    for (long k = 0; k < mult[i]; ++k) parts.push_back(i);
  if (parts.size() == 2) {
    const auto& m1 = (*th)[parts[0]];
    const auto& m2 = (*th)[parts[1]];
    auto ind = chr::induce(s.h, m1 * chr::outer_twist(s.h, m2, s.theta));
    auto a = transfer_character(s, m1) * s.delta, b = transfer_character(s, m2) * s.delta;
    r.add("principal series: As = Ind(mu1 mu2^theta) + mu1_0 delta + mu2_0 delta", as == ind + a + b);
    bool euler = true;
    for (ClassId c = 0; c < G.class_count(); ++c) {
      auto rhs = poly_mul(poly_mul(local_polynomial(ind, c), local_polynomial(a, c)), local_polynomial(b, c));
      if (as_poly[c] != rhs) euler = false;
    }
    r.add("principal series Euler factors", euler);
  }

  auto ss = s.sigma * s.sigma_theta;
  auto det_s = chr::det_character(s.sigma), det_t = chr::det_character(s.sigma_theta);
  auto as_delta = as * s.delta;
  bool split_char = true, split_euler = true, split_eigen = true, inert = true, inert_printed = true;
  bool any_split = false, any_inert = false;
  for (ClassId c = 0; c < G.class_count(); ++c) {
    Elem g = G.classes().representatives[c];
    if (s.h.contains(g)) {
      any_split = true;
      auto lh = s.h.to_local(g);
      ClassId ch = s.h.group->class_of(lh);
      if (!(as[c] == ss[ch])) split_char = false;
      if (as_poly[c] != local_polynomial(ss, ch)) split_euler = false;
      auto q = tensor_quadratic(s.sigma[ch], det_s[ch], s.sigma_theta[ch], det_t[ch]);
      if (as_poly[c] != q) split_eigen = false;
    } else {
      any_inert = true;
      ClassId ch = s.h.group->class_of(s.h.to_local(G.product(g, g)));
      const Cyclo& tr = s.sigma[ch];
      const Cyclo& dt = det_s[ch];
      Poly quad_minus{Cyclo(1), tr, dt};   // det(1 + sigma(g^2) T)
      Poly quad_plus{Cyclo(1), -tr, dt};   // det(1 - sigma(g^2) T)
      Poly norm{Cyclo(1), Cyclo(0), -dt};  // 1 - det(sigma(g^2)) T^2
      if (as_poly[c] != poly_mul(quad_minus, norm)) inert = false;
      if (local_polynomial(as_delta, c) != poly_mul(quad_plus, norm)) inert_printed = false;
    }
  }
  if (any_split) {
    r.add("split: As = sigma (x) sigma^theta on H", split_char);
    r.add("split: Euler factor of As = Euler factor of sigma (x) sigma^theta", split_euler);
    r.add("split: eigenvalues alpha_w alpha_tw, alpha_w beta_tw, beta_w alpha_tw, beta_w beta_tw", split_eigen);
  }
  if (any_inert) {
    r.add("inert: Euler factor of As = det(1 + sigma(g^2) T)(1 - det sigma(g^2) T^2)", inert);
    r.add("inert: Euler factor of As delta = det(1 - sigma(g^2) T)(1 - det sigma(g^2) T^2)", inert_printed);
  }
  return r;
}

std::string to_string(Go4Case c) {
  switch (c) {
    case Go4Case::TensorOverF:
      return "TensorOverF";
    case Go4Case::InducedQuadratic:
      return "InducedQuadratic";
    case Go4Case::AsaiTwist:
      return "AsaiTwist";
  }
  return "?";
}

bool Go4Classification::has(Go4Case c) const {
  return std::any_of(matches.begin(), matches.end(), [c](const auto& m) { return m.kind == c; });
}

Go4Classification classify_go4(const ClassFunction& rho, const Subgroup& k) {
  const auto& g = rho.group();
  if (k.parent != g || k.index != 2) throw PreconditionError("classify_go4 needs an index-2 subgroup of rho's group");
  if (rho.degree() != 4 || !chr::is_irreducible(rho))
    throw PreconditionError("classify_go4 needs an irreducible character of degree 4");
  if (!grp::is_solvable(g)) throw PreconditionError("classify_go4 needs a solvable group");
  auto tg = chr::table_of(g);
  if (!ogo::is_go_type(rho, *tg)) throw PreconditionError("rho is not of GO(4)-type");
  auto res = chr::restrict(rho, k);
  if (!chr::is_irreducible(res)) throw PreconditionError("restriction of rho to K is reducible");
  auto tk = chr::table_of(k.group);
  std::vector<std::size_t> two_k;
  for (std::size_t i = 0; i < tk->size(); ++i)
    if ((*tk)[i].degree() == 2) two_k.push_back(i);

  Go4Classification out;
  bool found = false;
  for (std::size_t a = 0; a < two_k.size() && !found; ++a)
    for (std::size_t b = a; b < two_k.size() && !found; ++b)
      if ((*tk)[two_k[a]] * (*tk)[two_k[b]] == res) {
        out.sigma = two_k[a];
        out.sigma2 = two_k[b];
        found = true;
      }
  if (!found) throw PreconditionError("restriction of rho to K is not a tensor product of degree-2 characters");
  const auto& s1 = (*tk)[out.sigma];
  const auto& s2 = (*tk)[out.sigma2];
  for (auto l : tk->linear_indices())
    if (s1 * (*tk)[l] == s2) out.twist_related = true;
  out.both_selftwisted = selftwist_characters(s1, *tk).size() > 1 && selftwist_characters(s2, *tk).size() > 1;

  std::vector<std::size_t> two_g;
  for (std::size_t i = 0; i < tg->size(); ++i)
    if ((*tg)[i].degree() == 2) two_g.push_back(i);
  for (std::size_t a = 0; a < two_g.size(); ++a)
    for (std::size_t b = a; b < two_g.size(); ++b)
      if ((*tg)[two_g[a]] * (*tg)[two_g[b]] == rho)
        out.matches.push_back({Go4Case::TensorOverF, two_g[a], two_g[b],
                               "rho = X" + std::to_string(two_g[a]) + " * X" + std::to_string(two_g[b])});

  auto index2 = grp::subgroups_of_index(g, 2);
  for (std::size_t li = 0; li < index2.size(); ++li) {
    const auto& l = index2[li];
    if (l.members == k.members) continue;
    auto tl = chr::table_of(l.group);
    for (std::size_t e = 0; e < tl->size(); ++e)
      if ((*tl)[e].degree() == 2 && chr::induce(l, (*tl)[e]) == rho)
        out.matches.push_back({Go4Case::InducedQuadratic, li, e,
                               "rho = Ind(X" + std::to_string(e) + ") from index-2 subgroup #" + std::to_string(li)});
  }

  for (auto si : two_k) {
    auto as = asai_raw(make_setup(k, (*tk)[si]));
    for (auto b : tg->linear_indices())
      if (as * (*tg)[b] == rho)
        out.matches.push_back({Go4Case::AsaiTwist, si, b,
                               "rho = As(X" + std::to_string(si) + ") * X" + std::to_string(b)});
  }
  if (out.matches.empty()) throw ConsistencyError("classify_go4 found no case for rho");
  return out;
}

}  // namespace artin::asai
