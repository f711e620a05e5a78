#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace artin::grp {

/// Permutation of {0, ..., degree-1}; printed and parsed 1-based in cycle notation.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::size_t degree);
  explicit Perm(std::vector<std::uint16_t> images);

  static Perm from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles);
  // "(1 2 3)(4 5)"; "()" is the identity.
  static Perm parse(std::size_t degree, std::string_view text);

  std::size_t degree() const { return images_.size(); }
  std::uint16_t operator[](std::size_t i) const { return images_[i]; }
  const std::vector<std::uint16_t>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  // Apply *this first, then other: (a * b)(x) = b(a(x)).
  Perm then(const Perm& other) const;

  std::string cycles() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<std::uint16_t> images_;
};

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept;
};

}  // namespace artin::grp
