#include "artin/grp/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::grp {

Perm::Perm(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), std::uint16_t{0});
}

Perm::Perm(std::vector<std::uint16_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto x : images_) {
    if (x >= images_.size() || seen[x]) throw PreconditionError("not a permutation");
    seen[x] = true;
  }
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<unsigned>>& cycles) {
  Perm p(degree);
  std::vector<bool> moved(degree, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      unsigned a = cyc[i], b = cyc[(i + 1) % cyc.size()];
      if (a < 1 || a > degree || b < 1 || b > degree)
        throw ParseError("cycle point out of range 1.." + std::to_string(degree));
      if (moved[a - 1]) throw ParseError("cycles are not disjoint");
      moved[a - 1] = true;
      p.images_[a - 1] = static_cast<std::uint16_t>(b - 1);
    }
  }
  return p;
}

Perm Perm::parse(std::size_t degree, std::string_view text) {
  std::vector<std::vector<unsigned>> cycles;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in permutation: " + std::string(text));
    ++i;
    std::vector<unsigned> cyc;
    for (;;) {
      while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
        ++i;
      if (i >= text.size()) throw ParseError("unterminated cycle: " + std::string(text));
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("bad character in permutation: " + std::string(text));
      unsigned v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + static_cast<unsigned>(text[i++] - '0');
      cyc.push_back(v);
    }
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
    skip();
  }
  return from_cycles(degree, cycles);
}

bool Perm::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<std::uint16_t>(i);
  return r;
}

Perm Perm::then(const Perm& other) const {
  Perm r(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[i] = other.images_[images_[i]];
  return r;
}

std::string Perm::cycles() const {
  std::ostringstream os;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      if (!first) os << ' ';
      os << j + 1;
      first = false;
      j = images_[j];
    }
    os << ')';
  }
  if (!any) return "()";
  return os.str();
}

std::size_t PermHash::operator()(const Perm& p) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p.images()) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace artin::grp
