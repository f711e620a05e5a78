#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "artin/grp/group.hpp"

namespace artin::grp {

GroupPtr symmetric(unsigned n);
GroupPtr alternating(unsigned n);
GroupPtr cyclic(unsigned n);
GroupPtr dihedral(unsigned n);  // order 2n
GroupPtr klein_four();
GroupPtr quaternion();
GroupPtr sl23();
GroupPtr gl23();
/// Z/n x| Z/m with the generator of Z/m acting as a -> a^r (r^m = 1 mod n).
GroupPtr semidirect_cyclic(unsigned n, unsigned m, unsigned r);
/// The dicyclic group of order 4m: <a, x | a^2m, x^2 = a^m, x a x^-1 = a^-1>.
GroupPtr dicyclic(unsigned m);

/// Fixed list of groups of order <= max_order used by exhaustive sweeps:
/// cyclic, dihedral, dicyclic, metacyclic, the S4 family and small products.
std::vector<GroupPtr> corpus_groups(std::size_t max_order = 64);

/// 2x2 matrices over F_3 (row-major, entries 0..2) as permutations of the
/// eight nonzero row vectors, v -> v*M, so products compose as matrices.
Perm f3_matrix_perm(const std::vector<int>& m);
GroupPtr f3_matrix_group(const std::vector<std::vector<int>>& mats, std::string label);

/// S<n> A<n> V Z/n D<n> Q8 Q<4m> Dic<m> SL(2,3) GL(2,3); throws ParseError otherwise.
GroupPtr named_group(std::string_view name);
std::vector<std::string> named_group_list();

/// `degree: n` followed by `gen: (a b)(c d)` lines; `#` comments.
GroupPtr parse_group_text(std::string_view text, std::string label = "file");
GroupPtr load_group_file(const std::string& path);

}  // namespace artin::grp
