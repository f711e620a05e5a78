#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "artin/chr/table.hpp"
#include "artin/ogo/matrix.hpp"

namespace artin::ogo {

using chr::CharacterTable;
using chr::ClassFunction;
using grp::Elem;
using grp::GroupPtr;
using grp::Subgroup;

enum class CoverKind { tilde, hat };

struct DoubleCover {
  CoverKind kind;
  GroupPtr group;
  ClassFunction tau;        // a faithful degree-2 character
  Subgroup center;          // order 2
  Subgroup a4_part;         // the unique index-2 subgroup, isomorphic to SL(2,3)
  unsigned transposition_lift_order;
};

/// GL(2,3) for tilde; for hat, the subgroup of Z/4 x_{+-1} GL(2,3) generated by
/// SL(2,3) and i times a lifted transposition. Structural claims are checked
/// and a ConsistencyError is thrown if one fails.
DoubleCover double_cover_S4(CoverKind kind);

/// First faithful degree-2 irreducible of the table, if any.
std::optional<std::size_t> faithful_degree2(const CharacterTable& t);

/// G = ((H x H) / C) x| <s>, where C embeds as c -> (c, c^-1) and s swaps the
/// factors. coords[g] = (h1, h2, e) is a representative of g = (h1, h2) s^e.
struct Go4Extension {
  GroupPtr base;
  ClassFunction tau;
  Subgroup scalars;  // C, a central subgroup of base
  GroupPtr total;
  Subgroup index2;   // elements with e = 0
  ClassFunction asai4;
  Elem swap = 0;
  std::vector<std::array<Elem, 3>> coords;
};

Go4Extension go4_extension(const GroupPtr& h, const ClassFunction& tau, const Subgroup& c);

/// The same construction with C trivial: the wreath square W = H wr Z/2,
/// together with the projection W -> ext.total.
struct Go4Lift {
  GroupPtr group;
  Subgroup index2;
  std::vector<Elem> projection;
  std::vector<std::array<Elem, 3>> coords;
};
Go4Lift go4_lift(const Go4Extension& ext);

/// Explicit matrices rho(g) for a homomorphism determined by generator images;
/// throws if the images do not define a homomorphism.
std::vector<Matrix> realize(const grp::FiniteGroup& g, const std::vector<Matrix>& generator_images);

/// A faithful 2-dimensional matrix representation of Q8 (over Q(i)) matching
/// the given character.
std::vector<Matrix> quaternion_matrices(const GroupPtr& q8, const ClassFunction& tau);

/// Compares the character rules of ext against traces of (A(h1) (x) A(h2)) P^e
/// for explicit matrices A of tau. Returns the number of mismatching elements.
std::size_t validate_tensor_model(const Go4Extension& ext, const std::vector<Matrix>& tau_matrices);

/// Index of a linear lambda with <sym2(chi) lambda^-1, 1> >= 1, if any.
std::optional<std::size_t> is_go_type(const ClassFunction& chi, const CharacterTable& t);

struct AdRealization {
  std::size_t tau;     // degree-2 character index
  std::size_t linear;  // linear character index
};
/// chi3 = Ad(tau) * linear, searched within the group of chi3.
std::optional<AdRealization> ad_realize_so3(const ClassFunction& chi3, const CharacterTable& t);

}  // namespace artin::ogo
