#include "artin/grp/named.hpp"

#include <fstream>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::grp {

namespace {

Perm cycle_perm(unsigned degree, std::vector<unsigned> points) {
  return Perm::from_cycles(degree, {std::move(points)});
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

GroupPtr symmetric(unsigned n) {
  if (n < 1) throw PreconditionError("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  if (n >= 2) gens.push_back(cycle_perm(n, {1, 2}));
  if (n >= 3) {
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i + 1;
    gens.push_back(cycle_perm(n, all));
  }
  return FiniteGroup::from_generators(n, gens, "S" + std::to_string(n));
}

GroupPtr alternating(unsigned n) {
  if (n < 1) throw PreconditionError("alternating group needs n >= 1");
  std::vector<Perm> gens;
  for (unsigned i = 3; i <= n; ++i) gens.push_back(cycle_perm(n, {1, 2, i}));
  return FiniteGroup::from_generators(n, gens, "A" + std::to_string(n));
}

GroupPtr cyclic(unsigned n) {
  if (n < 1 || n > 64) throw PreconditionError("cyclic group order must be in 1..64");
  std::vector<Perm> gens;
  if (n > 1) {
    std::vector<unsigned> all(n);
    for (unsigned i = 0; i < n; ++i) all[i] = i + 1;
    gens.push_back(cycle_perm(n, all));
  }
  return FiniteGroup::from_generators(n, gens, "Z/" + std::to_string(n));
}

GroupPtr dihedral(unsigned n) {
  if (n < 3 || n > 64) throw PreconditionError("dihedral D<n> needs 3 <= n <= 64");
  std::vector<unsigned> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i + 1;
  std::vector<std::vector<unsigned>> refl;
  for (unsigned i = 2; i < n + 2 - i; ++i) refl.push_back({i, n + 2 - i});
  return FiniteGroup::from_generators(n, {cycle_perm(n, all), Perm::from_cycles(n, refl)},
                                      "D" + std::to_string(n));
}

GroupPtr klein_four() {
  return FiniteGroup::from_generators(
      4, {Perm::parse(4, "(1 2)(3 4)"), Perm::parse(4, "(1 3)(2 4)")}, "V");
}

Perm f3_matrix_perm(const std::vector<int>& m) {
  if (m.size() != 4) throw PreconditionError("expected a 2x2 matrix");
  auto mod3 = [](int x) { return ((x % 3) + 3) % 3; };
  // nonzero vector (x, y) <-> point x + 3y - 1
  std::vector<std::uint16_t> img(8);
  for (int y = 0; y < 3; ++y)
    for (int x = 0; x < 3; ++x) {
      if (x == 0 && y == 0) continue;
      int nx = mod3(x * m[0] + y * m[2]);
      int ny = mod3(x * m[1] + y * m[3]);
      if (nx == 0 && ny == 0) throw PreconditionError("singular matrix over F_3");
      img[x + 3 * y - 1] = static_cast<std::uint16_t>(nx + 3 * ny - 1);
    }
  return Perm(std::move(img));
}

GroupPtr f3_matrix_group(const std::vector<std::vector<int>>& mats, std::string label) {
  std::vector<Perm> gens;
  for (const auto& m : mats) gens.push_back(f3_matrix_perm(m));
  return FiniteGroup::from_generators(8, gens, std::move(label));
}

GroupPtr quaternion() { return f3_matrix_group({{0, 1, -1, 0}, {1, 1, 1, -1}}, "Q8"); }

GroupPtr sl23() { return f3_matrix_group({{1, 1, 0, 1}, {1, 0, 1, 1}}, "SL(2,3)"); }

GroupPtr gl23() {
  return f3_matrix_group({{1, 1, 0, 1}, {1, 0, 1, 1}, {-1, 0, 0, 1}}, "GL(2,3)");
}

GroupPtr semidirect_cyclic(unsigned n, unsigned m, unsigned r) {
  if (n < 1 || m < 1 || n * m > kTableCap) throw PreconditionError("semidirect_cyclic: bad orders");
  std::vector<unsigned> rpow(m);
  unsigned x = 1;
  for (unsigned e = 0; e < m; ++e, x = x * r % n) rpow[e] = x;
  if (x % n != 1 % n) throw PreconditionError("semidirect_cyclic: r^m is not 1 mod n");
  // raw label k + n e stands for a^k b^e
  auto product = [=](std::size_t u, std::size_t v) -> std::size_t {
    std::size_t k1 = u % n, e1 = u / n, k2 = v % n, e2 = v / n;
    return (k1 + rpow[e1] * k2) % n + n * ((e1 + e2) % m);
  };
  std::vector<std::size_t> gens{1 % n, m > 1 ? n : 0};
  return FiniteGroup::from_product(std::size_t(n) * m, product, gens,
                                   "Z/" + std::to_string(n) + ":Z/" + std::to_string(m) + "^" + std::to_string(r),
                                   true);
}

GroupPtr dicyclic(unsigned m) {
  if (m < 2 || 4 * m > kTableCap) throw PreconditionError("dicyclic: m out of range");
  const std::size_t a = 2 * m;
  // raw label k + 2m e stands for a^k x^e
  auto product = [=](std::size_t u, std::size_t v) -> std::size_t {
    std::size_t k1 = u % a, e1 = u / a, k2 = v % a, e2 = v / a;
    if (e1 == 0) return (k1 + k2) % a + a * e2;
    std::size_t k = (k1 + a - k2) % a;
    if (e2 == 1) return (k + m) % a;
    return k + a;
  };
  std::string label = (m & (m - 1)) == 0 ? "Q" + std::to_string(4 * m) : "Dic" + std::to_string(m);
  return FiniteGroup::from_product(4 * m, product, {1, a}, label, true);
}

std::vector<GroupPtr> corpus_groups(std::size_t max_order) {
  std::vector<GroupPtr> out;
  auto add = [&](GroupPtr g) {
    if (g->order() <= max_order) out.push_back(std::move(g));
  };
  for (unsigned n : {2u, 3u, 4u, 5u, 6u, 7u, 8u, 9u, 12u, 16u}) add(cyclic(n));
  add(klein_four());
  add(symmetric(3));
  add(alternating(4));
  add(symmetric(4));
  add(alternating(5));
  for (unsigned n : {4u, 5u, 6u, 8u, 10u, 12u, 16u}) add(dihedral(n));
  add(quaternion());
  for (unsigned m : {3u, 4u, 5u, 6u, 8u}) add(dicyclic(m));
  add(semidirect_cyclic(5, 4, 2));   // F20
  add(semidirect_cyclic(7, 3, 2));   // F21
  add(semidirect_cyclic(7, 6, 3));   // F42
  add(semidirect_cyclic(3, 8, 2));
  add(semidirect_cyclic(8, 2, 3));   // semidihedral
  add(semidirect_cyclic(8, 2, 5));   // modular
  add(semidirect_cyclic(16, 2, 7));  // semidihedral of order 32
  add(semidirect_cyclic(9, 2, 8));
  add(semidirect_cyclic(4, 4, 3));
  add(semidirect_cyclic(8, 4, 3));
  add(semidirect_cyclic(13, 4, 5));
  add(sl23());
  add(gl23());
  auto z2 = cyclic(2), z3 = cyclic(3), z4 = cyclic(4);
  add(direct_product(z2, z4));
  add(direct_product(direct_product(z2, cyclic(2)), cyclic(2)));
  add(direct_product(z4, cyclic(4)));
  add(direct_product(z2, symmetric(3)));
  add(direct_product(z3, symmetric(3)));
  add(direct_product(symmetric(3), symmetric(3)));
  add(direct_product(z2, alternating(4)));
  add(direct_product(z3, alternating(4)));
  add(direct_product(z2, symmetric(4)));
  add(direct_product(z2, quaternion()));
  add(direct_product(z2, dihedral(4)));
  add(direct_product(z4, symmetric(3)));
  add(direct_product(z3, quaternion()));
  add(direct_product(z2, sl23()));
  add(direct_product(z4, quaternion()));
  add(direct_product(dihedral(4), dihedral(4)));
  add(direct_product(quaternion(), quaternion()));
  add(direct_product(dihedral(4), quaternion()));
  add(direct_product(dihedral(4), cyclic(8)));
  add(direct_product(symmetric(3), dihedral(4)));
  add(direct_product(z2, dicyclic(3)));
  {
    auto q = quaternion();
    add(amalgamated_central_product(z4, q, {{0, 0}, {z4->power(z4->generators()[0], 2), center(q).members[1]}}));
    auto d = dihedral(4);
    add(amalgamated_central_product(d, q, {{0, 0}, {center(d).members[1], center(q).members[1]}}));
  }
  return out;
}

GroupPtr named_group(std::string_view raw) {
  std::string name = trim(raw);
  auto number = [&](std::size_t from) -> unsigned {
    std::string digits = name.substr(from);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("unknown group name '" + name + "'");
    return static_cast<unsigned>(std::stoul(digits));
  };
  if (name == "V") return klein_four();
  if (name == "Q8") return quaternion();
  if (name == "SL(2,3)") return sl23();
  if (name == "GL(2,3)") return gl23();
  if (name.starts_with("Z/")) return cyclic(number(2));
  if (name.starts_with("S") && name.size() > 1) {
    unsigned n = number(1);
    if (n > 7) throw SizeLimitError("S" + std::to_string(n) + " exceeds the construction cap");
    return symmetric(n);
  }
  if (name.starts_with("A") && name.size() > 1) {
    unsigned n = number(1);
    if (n > 8) throw SizeLimitError("A" + std::to_string(n) + " exceeds the construction cap");
    return alternating(n);
  }
  if (name.starts_with("Dic")) return dicyclic(number(3));
  if (name.starts_with("D") && name.size() > 1) return dihedral(number(1));
  if (name.starts_with("Q") && name.size() > 1) {
    unsigned n = number(1);
    if (n < 8 || n % 4 != 0) throw ParseError("Q<n> needs n divisible by 4 and n >= 8");
    return dicyclic(n / 4);
  }
  throw ParseError("unknown group name '" + name + "'");
}

std::vector<std::string> named_group_list() {
  return {"S3", "S4", "S5", "A4", "A5", "V", "Z/n", "D<n>", "Q8", "Q<4m>", "Dic<m>", "SL(2,3)", "GL(2,3)"};
}

GroupPtr parse_group_text(std::string_view text, std::string label) {
  std::istringstream in{std::string(text)};
  std::string line;
  long degree = -1;
  std::vector<std::string> gen_text;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw ParseError("line " + std::to_string(lineno) + ": expected 'key: value'");
    std::string key = trim(t.substr(0, colon)), value = trim(t.substr(colon + 1));
    if (key == "degree") {
      try {
        degree = std::stol(value);
      } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": bad degree");
      }
      if (degree < 1 || degree > 64) throw ParseError("degree must be in 1..64");
    } else if (key == "gen") {
      gen_text.push_back(value);
    } else if (key == "label") {
      label = value;
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (degree < 0) throw ParseError("group file lacks a 'degree:' line");
  std::vector<Perm> gens;
  for (const auto& g : gen_text) gens.push_back(Perm::parse(static_cast<std::size_t>(degree), g));
  return FiniteGroup::from_generators(static_cast<std::size_t>(degree), gens, label);
}

GroupPtr load_group_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open group file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_group_text(ss.str(), path);
}

}  // namespace artin::grp
