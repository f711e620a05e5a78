#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "artin/chr/class_function.hpp"
#include "artin/par/parallel.hpp"

namespace artin::chr {

/// Irreducible characters sorted by degree, then by descending lexicographic
/// order of their values, so the trivial character is always first.
struct CharacterTable {
  GroupPtr group;
  std::vector<ClassFunction> irr;
  unsigned long prime = 0;  // the prime the table was computed with

  std::size_t size() const { return irr.size(); }
  const ClassFunction& operator[](std::size_t i) const { return irr[i]; }
  std::vector<std::size_t> degrees() const;
  std::vector<std::size_t> linear_indices() const;
  std::optional<std::size_t> index_of(const ClassFunction& chi) const;
};

using TablePtr = std::shared_ptr<const CharacterTable>;

struct DixonOptions {
  par::Exec exec = par::default_exec();
  int max_primes = 5;
};

CharacterTable character_table(const GroupPtr& g, const DixonOptions& opts = {});
/// Cached per group object.
TablePtr table_of(const GroupPtr& g);

/// Multiplicities <chi, chi_i>; throws NotACharacterError if one is not an integer.
std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& t);
bool is_character(const ClassFunction& chi, const CharacterTable& t);
bool is_irreducible(const ClassFunction& chi);
ClassFunction compose(const std::vector<long>& mult, const CharacterTable& t);

/// Exact row and column orthogonality.
bool check_orthogonality(const CharacterTable& t);

std::string format_table(const CharacterTable& t);
std::string format_decomposition(const std::vector<long>& mult);

}  // namespace artin::chr

namespace artin::chr {

/// a[i][j * k + l] = #{x in C_i : x^-1 z_l in C_j}, z_l the representative of
/// class l; the class-sum structure constants driving the Dixon method.
std::vector<std::vector<std::uint32_t>> class_structure_constants(const grp::FiniteGroup& g,
                                                                  par::Exec exec);

}  // namespace artin::chr
