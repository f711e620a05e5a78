#include "artin/chr/class_function.hpp"

#include <sstream>

#include "artin/errors.hpp"

namespace artin::chr {

ClassFunction::ClassFunction(GroupPtr group, std::vector<Cyclo> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (values_.size() != group_->class_count())
    throw PreconditionError("class function length " + std::to_string(values_.size()) +
                            " does not match " + std::to_string(group_->class_count()) + " classes");
}

ClassFunction ClassFunction::constant(const GroupPtr& g, const Cyclo& c) {
  return ClassFunction(g, std::vector<Cyclo>(g->class_count(), c));
}

ClassFunction ClassFunction::regular(const GroupPtr& g) {
  auto f = zero(g);
  f[0] = Cyclo(static_cast<long>(g->order()));
  return f;
}

long ClassFunction::degree() const {
  auto d = values_[0].integer();
  if (!d) throw NotACharacterError("value at the identity is not an integer: " + values_[0].str());
  return *d;
}

bool ClassFunction::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

ClassFunction ClassFunction::conj() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

ClassFunction ClassFunction::galois(long k) const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = v.galois(k);
  return r;
}

void require_same_group(const ClassFunction& a, const ClassFunction& b) {
  if (a.group() != b.group()) throw PreconditionError("class functions live on different groups");
}

ClassFunction& ClassFunction::operator+=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ClassFunction& ClassFunction::operator-=(const ClassFunction& o) {
  require_same_group(*this, o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  ClassFunction r = *this;
  for (auto& v : r.values_) v = -v;
  return r;
}

ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  ClassFunction r = a;
  for (std::size_t i = 0; i < r.values_.size(); ++i) r.values_[i] *= b.values_[i];
  return r;
}

ClassFunction operator*(const Cyclo& s, const ClassFunction& a) {
  ClassFunction r = a;
  for (auto& v : r.values_) v *= s;
  return r;
}

bool operator==(const ClassFunction& a, const ClassFunction& b) {
  return a.group_ == b.group_ && a.values_ == b.values_;
}

std::string ClassFunction::str() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << "; ";
    if (auto q = values_[i].rational())
      os << cyc::to_string(*q);
    else
      os << values_[i].str();
  }
  os << ']';
  return os.str();
}

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b) {
  require_same_group(a, b);
  const auto& sizes = a.group()->classes().class_sizes;
  Cyclo s;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero() || b[i].is_zero()) continue;
    s += Cyclo(static_cast<long>(sizes[i])) * a[i] * b[i].conj();
  }
  return s * Cyclo(Rational(1, static_cast<long>(a.group()->order())));
}

Rational norm_squared(const ClassFunction& a) {
  auto q = inner_product(a, a).rational();
  if (!q) throw ConsistencyError("<chi, chi> is not rational");
  return *q;
}

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b) { return a * b; }

ClassFunction power_map(const ClassFunction& chi, long k) {
  const auto& g = *chi.group();
  std::vector<Cyclo> v(chi.size());
  for (ClassId c = 0; c < chi.size(); ++c) v[c] = chi[g.power_class(c, k)];
  return ClassFunction(chi.group(), std::move(v));
}

ClassFunction sym2(const ClassFunction& chi) {
  return Cyclo(Rational(1, 2)) * (chi * chi + power_map(chi, 2));
}

ClassFunction alt2(const ClassFunction& chi) {
  return Cyclo(Rational(1, 2)) * (chi * chi - power_map(chi, 2));
}

std::vector<Cyclo> elementary_symmetric(const ClassFunction& chi, ClassId c) {
  long n = chi.degree();
  if (n < 0) throw NotACharacterError("negative degree");
  const auto& g = *chi.group();
  std::vector<Cyclo> p(static_cast<std::size_t>(n) + 1), e(static_cast<std::size_t>(n) + 1);
  for (long k = 1; k <= n; ++k) p[k] = chi[g.power_class(c, k)];
  e[0] = Cyclo(1);
  for (long k = 1; k <= n; ++k) {
    Cyclo s;
    for (long i = 1; i <= k; ++i) {
      Cyclo term = e[k - i] * p[i];
      if (i % 2 == 1)
        s += term;
      else
        s -= term;
    }
    e[k] = s * Cyclo(Rational(1, k));
  }
  return e;
}

std::vector<Cyclo> charpoly_of_class(const ClassFunction& chi, ClassId c) {
  auto e = elementary_symmetric(chi, c);
  for (std::size_t k = 1; k < e.size(); k += 2) e[k] = -e[k];
  return e;
}

ClassFunction det_character(const ClassFunction& chi) {
  std::vector<Cyclo> v(chi.size());
  for (ClassId c = 0; c < chi.size(); ++c) v[c] = elementary_symmetric(chi, c).back();
  return ClassFunction(chi.group(), std::move(v));
}

ClassFunction induce(const Subgroup& h, const ClassFunction& chi) {
  if (chi.group() != h.group) throw PreconditionError("induce: character is not on the given subgroup");
  const auto& G = *h.parent;
  const auto& H = *h.group;
  std::vector<Cyclo> sums(G.class_count());
  const auto& hc = H.classes();
  for (ClassId d = 0; d < hc.class_count; ++d) {
    ClassId c = G.class_of(h.embed(hc.representatives[d]));
    sums[c] += Cyclo(static_cast<long>(hc.class_sizes[d])) * chi[d];
  }
  const auto& gc = G.classes();
  for (ClassId c = 0; c < gc.class_count; ++c) {
    if (sums[c].is_zero()) continue;
    sums[c] *= Cyclo(Rational(static_cast<long>(G.order()),
                              static_cast<long>(H.order() * gc.class_sizes[c])));
  }
  return ClassFunction(h.parent, std::move(sums));
}

ClassFunction restrict(const ClassFunction& chi, const Subgroup& h) {
  if (chi.group() != h.parent) throw PreconditionError("restrict: character is not on the parent group");
  const auto& H = *h.group;
  std::vector<Cyclo> v(H.class_count());
  for (ClassId d = 0; d < H.class_count(); ++d)
    v[d] = chi.at_element(h.embed(H.classes().representatives[d]));
  return ClassFunction(h.group, std::move(v));
}

ClassFunction inflate(const ClassFunction& chi, const GroupPtr& g, const std::vector<Elem>& projection) {
  std::vector<Cyclo> v(g->class_count());
  for (ClassId c = 0; c < g->class_count(); ++c)
    v[c] = chi.at_element(projection[g->classes().representatives[c]]);
  return ClassFunction(g, std::move(v));
}

ClassFunction outer_twist(const Subgroup& h, const ClassFunction& chi, Elem t) {
  if (chi.group() != h.group) throw PreconditionError("outer_twist: character is not on the subgroup");
  if (h.contains(t)) throw PreconditionError("outer_twist: twisting element lies in the subgroup");
  if (!h.is_normal) throw PreconditionError("outer_twist: subgroup is not normal");
  const auto& G = *h.parent;
  const auto& H = *h.group;
  Elem tinv = G.inverse(t);
  std::vector<Cyclo> v(H.class_count());
  for (ClassId d = 0; d < H.class_count(); ++d) {
    Elem x = h.embed(H.classes().representatives[d]);
    v[d] = chi.at_element(h.to_local(G.conjugate(x, tinv)));  // t x t^-1
  }
  return ClassFunction(h.group, std::move(v));
}

ClassFunction ad_character(const ClassFunction& tau) {
  if (tau.degree() != 2) throw PreconditionError("ad_character needs a degree-2 character");
  auto det = det_character(tau);
  auto s = sym2(tau);
  for (ClassId c = 0; c < s.size(); ++c) s[c] /= det[c];
  return s;
}

Cyclo fs_indicator(const ClassFunction& chi) {
  const auto& g = *chi.group();
  Cyclo s;
  for (ClassId c = 0; c < chi.size(); ++c)
    s += Cyclo(static_cast<long>(g.classes().class_sizes[c])) * chi[g.power_class(c, 2)];
  return s * Cyclo(Rational(1, static_cast<long>(g.order())));
}

std::vector<Elem> kernel(const ClassFunction& chi) {
  std::vector<Elem> out;
  const auto& g = *chi.group();
  for (Elem x = 0; x < g.order(); ++x)
    if (chi.at_element(x) == chi[0]) out.push_back(x);
  return out;
}

bool is_linear(const ClassFunction& chi) { return chi[0] == Cyclo(1); }

}  // namespace artin::chr
