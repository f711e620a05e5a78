#pragma once

#include <optional>
#include <string>

#include "artin/chr/table.hpp"

namespace artin::ogo {

struct Monomialization {
  grp::Subgroup subgroup;      // G1
  chr::ClassFunction lambda;   // linear character of G1 with Ind = chi
  std::string path;            // "clifford" or "search"
  bool quadratic = false;      // lambda^2 = 1
};

/// chi = Ind_{G1}^G(lambda) for a linear lambda, found by Clifford descent
/// through elementary abelian normal subgroups, with a search over subgroups
/// of index deg(chi) as fallback. For self-dual chi the result has
/// lambda^2 = 1 (checked).
Monomialization monomialize_odd(const chr::ClassFunction& chi);

/// The search path alone: first (H, lambda) over subgroups_of_index(G, deg).
/// With want_quadratic only quadratic lambda are accepted.
std::optional<Monomialization> monomialize_search(const chr::ClassFunction& chi, bool want_quadratic = false);

}  // namespace artin::ogo
