#pragma once

#include <optional>
#include <string>
#include <vector>

#include "artin/chr/table.hpp"

namespace artin::asai {

using chr::CharacterTable;
using chr::ClassFunction;
using cyc::Cyclo;
using grp::Elem;
using grp::GroupPtr;
using grp::Subgroup;

/// An index-2 subgroup H of G, its quadratic character delta, a degree-2
/// character sigma of H and an element theta of G outside H.
struct AsaiSetup {
  GroupPtr g;
  Subgroup h;
  ClassFunction delta;        // on G, kernel H
  ClassFunction sigma;        // on h.group
  ClassFunction sigma_theta;  // sigma conjugated by theta
  Elem theta = 0;
};

/// The linear character of G with kernel h (h of index 2).
ClassFunction quadratic_character(const Subgroup& h);
AsaiSetup make_setup(const Subgroup& h, const ClassFunction& sigma);

/// Every setup of g: all index-2 subgroups and all irreducible degree-2
/// characters, plus (with include_reducible) all sums of two linear ones.
std::vector<AsaiSetup> all_setups(const GroupPtr& g, bool include_reducible);

/// As(sigma) = Lambda^2(Ind sigma) - Ind(det sigma); checked to be a character.
ClassFunction asai_character(const AsaiSetup& s);
/// det(Ind chi) * delta for a linear chi of H.
ClassFunction transfer_character(const AsaiSetup& s, const ClassFunction& chi);
bool asai_is_irreducible(const AsaiSetup& s);

/// sigma = Ind_M^H(chi) with M of index 2 in H; epsilon has kernel M.
struct DihedralSetup {
  AsaiSetup base;
  Subgroup m;             // subgroup of base.h.group
  Subgroup m_in_g;        // the same subgroup inside G
  ClassFunction chi;      // on m.group
  ClassFunction epsilon;  // on base.h.group
};
/// All (M, chi) presenting an irreducible sigma as induced; empty if none.
std::vector<DihedralSetup> dihedral_setups(const AsaiSetup& s);

struct CuspidalityVerdict {
  bool cuspidal = false;
  bool m_normal = false;
  std::optional<ClassFunction> extension;  // of tau = Res_M(sigma^theta) chi to G
  std::optional<bool> chi_ratio_law;       // chi / chi^alpha = epsilon^theta on M, when applicable
  std::string explanation;
};
/// Cuspidal iff M is not normal in G and tau does not extend to G. Throws
/// ConsistencyError if this disagrees with asai_is_irreducible.
CuspidalityVerdict cuspidality_dihedral(const DihedralSetup& d);

/// Characters of G = m.parent of degree deg(tau) restricting to tau, built
/// from constituents of Ind tau (irreducible or sums); sorted by constituents.
std::vector<ClassFunction> extensions(const Subgroup& m, const ClassFunction& tau);
std::optional<ClassFunction> extension_test(const Subgroup& m, const ClassFunction& tau);

/// Indices of the linear characters nu with chi * nu = chi.
std::vector<std::size_t> selftwist_characters(const ClassFunction& chi, const CharacterTable& t);
/// A linear chi with tau' = tau * chi (index into t), given Ad(tau) = Ad(tau').
std::optional<std::size_t> ad_mult_one_check(const ClassFunction& tau, const ClassFunction& tau2,
                                             const CharacterTable& t);

struct IdentityResult {
  std::string name;
  bool pass = false;
  bool normative = true;  // informational entries do not count as failures
  std::string detail;
};
struct IdentityReport {
  std::vector<IdentityResult> results;
  std::size_t passed() const;
  std::size_t failed() const;  // normative failures only
  void add(std::string name, bool pass, bool normative = true, std::string detail = {});
};

/// Exact identities of a setup: the restriction law, the induction split,
/// the twist law through the transfer, and (when sigma is a restriction from
/// G up to twist) the distinguished decomposition.
IdentityReport setup_identities(const AsaiSetup& s);
/// Lambda^2 / sym^2 identities for two degree-2 characters of one group.
IdentityReport pair_identities(const ClassFunction& a, const ClassFunction& b);
/// The local formulas: principal series (sigma a sum of linears), the split
/// rule on classes inside H (character and Euler factor), and the inert rule
/// on classes outside H.
IdentityReport local_formulas(const AsaiSetup& s);

/// Polynomials in T, constant term first.
using Poly = std::vector<Cyclo>;
Poly poly_mul(const Poly& a, const Poly& b);
/// det(1 - rho(g) T) of the character at class c.
Poly local_polynomial(const ClassFunction& chi, grp::ClassId c);

enum class Go4Case { TensorOverF, InducedQuadratic, AsaiTwist };
std::string to_string(Go4Case c);

struct Go4Match {
  Go4Case kind;
  std::size_t first = 0;   // tau / L-list position / sigma (index into K's table)
  std::size_t second = 0;  // tau' / eta / beta (index into G's table)
  std::string witness;
};
struct Go4Classification {
  std::size_t sigma = 0, sigma2 = 0;  // Res_K rho = sigma * sigma2 (indices in K's table)
  std::vector<Go4Match> matches;
  bool twist_related = false;       // sigma2 = sigma * linear
  bool both_selftwisted = false;    // both carry nontrivial self-twists
  bool has(Go4Case c) const;
};
/// Brute-force witness search; throws PreconditionError when the hypotheses
/// (rho irreducible of degree 4 and GO-type, Res_K rho = sigma * sigma2
/// irreducible) fail.
Go4Classification classify_go4(const ClassFunction& rho, const Subgroup& k);

}  // namespace artin::asai
