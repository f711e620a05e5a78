#pragma once

#include <string>
#include <vector>

#include "artin/cyc/cyclo.hpp"
#include "artin/grp/group.hpp"

namespace artin::chr {

using cyc::Cyclo;
using cyc::Rational;
using grp::ClassId;
using grp::Elem;
using grp::GroupPtr;
using grp::Subgroup;

/// A function on the conjugacy classes of a group, in the canonical class order.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Cyclo> values);

  static ClassFunction constant(const GroupPtr& g, const Cyclo& c);
  static ClassFunction trivial(const GroupPtr& g) { return constant(g, Cyclo(1)); }
  static ClassFunction zero(const GroupPtr& g) { return constant(g, Cyclo(0)); }
  static ClassFunction regular(const GroupPtr& g);

  const GroupPtr& group() const { return group_; }
  const std::vector<Cyclo>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Cyclo& operator[](ClassId c) const { return values_[c]; }
  Cyclo& operator[](ClassId c) { return values_[c]; }
  const Cyclo& at_element(Elem g) const { return values_[group_->class_of(g)]; }

  // Value at the identity class.
  const Cyclo& degree_value() const { return values_[0]; }
  // Degree as an integer; throws NotACharacterError if it is not one.
  long degree() const;
  bool is_zero() const;

  ClassFunction conj() const;
  ClassFunction galois(long k) const;

  ClassFunction& operator+=(const ClassFunction& o);
  ClassFunction& operator-=(const ClassFunction& o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction& b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction& b) { return a -= b; }
  ClassFunction operator-() const;
  friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
  friend ClassFunction operator*(const Cyclo& s, const ClassFunction& a);

  friend bool operator==(const ClassFunction& a, const ClassFunction& b);

  std::string str() const;

 private:
  GroupPtr group_;
  std::vector<Cyclo> values_;
};

void require_same_group(const ClassFunction& a, const ClassFunction& b);

Cyclo inner_product(const ClassFunction& a, const ClassFunction& b);
// <a, a> as an exact rational when it is one.
Rational norm_squared(const ClassFunction& a);

ClassFunction tensor(const ClassFunction& a, const ClassFunction& b);
// g -> chi(g^k)
ClassFunction power_map(const ClassFunction& chi, long k);
ClassFunction sym2(const ClassFunction& chi);
ClassFunction alt2(const ClassFunction& chi);

/// Elementary symmetric functions e_0..e_n of the eigenvalues at class c,
/// from the power sums chi(g^k) via Newton's identities.
std::vector<Cyclo> elementary_symmetric(const ClassFunction& chi, ClassId c);
/// Coefficients of det(1 - rho(g) T), constant term first.
std::vector<Cyclo> charpoly_of_class(const ClassFunction& chi, ClassId c);
ClassFunction det_character(const ClassFunction& chi);

ClassFunction induce(const Subgroup& h, const ClassFunction& chi);
ClassFunction restrict(const ClassFunction& chi, const Subgroup& h);
/// Pull back a class function on a quotient along the projection.
ClassFunction inflate(const ClassFunction& chi, const GroupPtr& g, const std::vector<Elem>& projection);

/// h -> chi(t h t^-1) for h in the normal subgroup H and t outside it.
ClassFunction outer_twist(const Subgroup& h, const ClassFunction& chi, Elem t);

/// Ad(tau) = sym2(tau) * det(tau)^-1 for a degree-2 character.
ClassFunction ad_character(const ClassFunction& tau);

Cyclo fs_indicator(const ClassFunction& chi);

/// Elements g with chi(g) = chi(1).
std::vector<Elem> kernel(const ClassFunction& chi);
bool is_linear(const ClassFunction& chi);

}  // namespace artin::chr
