#include "artin/grp/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "artin/errors.hpp"
#include "artin/par/parallel.hpp"

namespace artin::grp {

namespace {

constexpr Elem kNone = static_cast<Elem>(-1);

}  // namespace

// ---------------------------------------------------------------------------
// construction

GroupPtr FiniteGroup::from_generators(std::size_t degree, const std::vector<Perm>& gens,
                                      std::string label, std::size_t cap) {
  if (degree > 64) throw PreconditionError("permutation degree above 64");
  for (const auto& g : gens)
    if (g.degree() != degree) throw PreconditionError("generator degree mismatch");

  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->label_ = std::move(label);
  grp->degree_ = degree;
  grp->perms_.push_back(Perm(degree));
  grp->perm_index_.emplace(grp->perms_[0], 0);
  for (std::size_t i = 0; i < grp->perms_.size(); ++i) {
    for (const auto& g : gens) {
      Perm next = grp->perms_[i].then(g);
      if (grp->perm_index_.contains(next)) continue;
      if (grp->perms_.size() >= cap)
        throw SizeLimitError("group '" + grp->label_ + "' exceeds the construction cap of " +
                             std::to_string(cap));
      grp->perm_index_.emplace(next, static_cast<Elem>(grp->perms_.size()));
      grp->perms_.push_back(std::move(next));
    }
  }
  grp->order_ = grp->perms_.size();
  for (const auto& g : gens) grp->gens_.push_back(grp->perm_index_.at(g));

  if (grp->order_ <= kTableCap) {
    const FiniteGroup& G = *grp;
    par::fill_table(
        G.order_,
        [&G](std::size_t a, std::size_t b) {
          return static_cast<std::uint16_t>(G.perm_index_.at(G.perms_[a].then(G.perms_[b])));
        },
        grp->table_, par::default_exec());
  }
  grp->finish();
  return grp;
}

GroupPtr FiniteGroup::from_product(std::size_t n, const RawProduct& product,
                                   const std::vector<std::size_t>& raw_gens, std::string label,
                                   bool canonical, std::vector<std::string> raw_names,
                                   std::vector<Elem>* relabel) {
  if (n > kTableCap)
    throw SizeLimitError("group '" + label + "' of order " + std::to_string(n) +
                         " exceeds the table cap of " + std::to_string(kTableCap));
  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->label_ = std::move(label);
  grp->order_ = n;

  std::vector<std::size_t> raw_of(n);  // canonical -> raw
  std::vector<Elem> canon(n, kNone);   // raw -> canonical
  if (canonical) {
    std::size_t count = 1;
    raw_of[0] = 0;
    canon[0] = 0;
    for (std::size_t i = 0; i < count; ++i) {
      for (auto g : raw_gens) {
        std::size_t y = product(raw_of[i], g);
        if (canon[y] != kNone) continue;
        canon[y] = static_cast<Elem>(count);
        raw_of[count++] = y;
      }
    }
    if (count != n)
      throw PreconditionError("generators of '" + grp->label_ + "' do not generate all " +
                              std::to_string(n) + " elements");
  } else {
    std::iota(raw_of.begin(), raw_of.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) canon[i] = static_cast<Elem>(i);
  }
  for (auto g : raw_gens) grp->gens_.push_back(canon[g]);

  par::fill_table(
      n,
      [&](std::size_t a, std::size_t b) {
        return static_cast<std::uint16_t>(canon[product(raw_of[a], raw_of[b])]);
      },
      grp->table_, par::default_exec());

  if (!raw_names.empty()) {
    grp->names_.resize(n);
    for (std::size_t i = 0; i < n; ++i) grp->names_[i] = raw_names[raw_of[i]];
  }
  if (relabel) *relabel = canon;
  grp->finish();
  return grp;
}

Elem FiniteGroup::perm_product(Elem a, Elem b) const {
  return perm_index_.at(perms_[a].then(perms_[b]));
}

void FiniteGroup::finish() {
  orders_.assign(order_, 0);
  inverse_.assign(order_, 0);
  orders_[0] = 1;
  exponent_ = 1;
  for (Elem a = 0; a < order_; ++a) {
    unsigned k = 1;
    Elem x = a, prev = 0;
    while (x != 0) {
      prev = x;
      x = product(x, a);
      ++k;
    }
    orders_[a] = a == 0 ? 1 : k;
    inverse_[a] = a == 0 ? 0 : prev;  // a^(k-1)
    exponent_ = std::lcm(exponent_, orders_[a]);
  }
  compute_classes();
}

void FiniteGroup::compute_classes() {
  std::vector<ClassId> raw(order_, static_cast<ClassId>(-1));
  std::vector<std::vector<Elem>> orbits;
  for (Elem x = 0; x < order_; ++x) {
    if (raw[x] != static_cast<ClassId>(-1)) continue;
    auto id = static_cast<ClassId>(orbits.size());
    std::vector<Elem> orbit{x};
    raw[x] = id;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto g : gens_) {
        Elem y = conjugate(orbit[i], g);
        if (raw[y] != static_cast<ClassId>(-1)) continue;
        raw[y] = id;
        orbit.push_back(y);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  // Orbits were discovered in order of their minimal member, which is the
  // representative. Sort by (representative order, size, representative).
  std::vector<std::size_t> perm(orbits.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    return std::tuple(orders_[orbits[a][0]], orbits[a].size(), orbits[a][0]) <
           std::tuple(orders_[orbits[b][0]], orbits[b].size(), orbits[b][0]);
  });
  std::vector<ClassId> new_id(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) new_id[perm[i]] = static_cast<ClassId>(i);

  auto& c = classes_;
  c.class_count = orbits.size();
  c.class_of.resize(order_);
  for (Elem x = 0; x < order_; ++x) c.class_of[x] = new_id[raw[x]];
  c.representatives.resize(orbits.size());
  c.class_sizes.resize(orbits.size());
  c.rep_orders.resize(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const auto& orb = orbits[perm[i]];
    c.representatives[i] = orb[0];
    c.class_sizes[i] = orb.size();
    c.rep_orders[i] = orders_[orb[0]];
  }
  c.inverse_class.resize(orbits.size());
  for (std::size_t i = 0; i < perm.size(); ++i)
    c.inverse_class[i] = c.class_of[inverse_[c.representatives[i]]];
}

Elem FiniteGroup::power(Elem a, long k) const {
  long o = orders_[a];
  k %= o;
  if (k < 0) k += o;
  Elem result = 0, base = a;
  while (k > 0) {
    if (k & 1) result = product(result, base);
    base = product(base, base);
    k >>= 1;
  }
  return result;
}

std::optional<Elem> FiniteGroup::find(const Perm& p) const {
  auto it = perm_index_.find(p);
  if (it == perm_index_.end()) return std::nullopt;
  return it->second;
}

std::string FiniteGroup::element_name(Elem a) const {
  if (has_perms()) return perms_[a].cycles();
  if (!names_.empty()) return names_[a];
  return "g" + std::to_string(a);
}

bool FiniteGroup::is_abelian() const {
  for (auto a : gens_)
    for (auto b : gens_)
      if (product(a, b) != product(b, a)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// subgroups

std::vector<Elem> closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (auto s : gens) {
      Elem y = g.product(out[i], s);
      if (in[y]) continue;
      in[y] = 1;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Closure of `gens` under multiplication and under conjugation by `ambient`.
std::vector<Elem> normal_closure_in(const FiniteGroup& g, const std::vector<Elem>& ambient,
                                    const std::vector<Elem>& gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<Elem> out{0};
  in[0] = 1;
  std::vector<Elem> conj_gens;
  auto add = [&](Elem y) {
    if (in[y]) return;
    in[y] = 1;
    out.push_back(y);
  };
  // Normal closure is generated by all ambient-conjugates of gens; grow the
  // set of conjugates and the subgroup together.
  std::vector<Elem> pending(gens.begin(), gens.end());
  std::vector<char> is_gen(g.order(), 0);
  while (!pending.empty()) {
    Elem s = pending.back();
    pending.pop_back();
    if (is_gen[s]) continue;
    is_gen[s] = 1;
    conj_gens.push_back(s);
    for (auto a : ambient) pending.push_back(g.conjugate(s, a));
  }
  for (std::size_t i = 0; i < out.size(); ++i)
    for (auto s : conj_gens) add(g.product(out[i], s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Elem> greedy_generators(const FiniteGroup& g, const std::vector<Elem>& members) {
  std::vector<Elem> gens;
  std::vector<char> covered(g.order(), 0);
  covered[0] = 1;
  std::size_t covered_count = 1;
  for (auto m : members) {
    if (covered[m]) continue;
    gens.push_back(m);
    auto c = closure(g, gens);
    for (auto x : c) covered[x] = 1;
    covered_count = c.size();
    if (covered_count == members.size()) break;
  }
  return gens;
}

}  // namespace

std::vector<Elem> normal_closure(const FiniteGroup& g, const std::vector<Elem>& gens) {
  return normal_closure_in(g, g.generators(), gens);
}

Subgroup make_subgroup(const GroupPtr& parent, std::vector<Elem> members) {
  const FiniteGroup& G = *parent;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members[0] != 0) throw PreconditionError("subgroup must contain the identity");
  if (G.order() % members.size() != 0)
    throw PreconditionError("subset order does not divide the group order");

  Subgroup h;
  h.parent = parent;
  h.local.assign(G.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) h.local[members[i]] = static_cast<std::int32_t>(i);
  h.generators = greedy_generators(G, members);
  if (closure(G, h.generators) != members) throw PreconditionError("subset is not a subgroup");
  h.members = std::move(members);
  h.index = G.order() / h.members.size();

  h.is_normal = true;
  for (auto g : G.generators()) {
    for (auto s : h.generators)
      if (h.local[G.conjugate(s, g)] < 0) {
        h.is_normal = false;
        break;
      }
    if (!h.is_normal) break;
  }

  if (h.members.size() == G.order()) {
    h.group = parent;
  } else if (h.members.size() <= kTableCap) {
    std::vector<std::size_t> raw_gens;
    for (auto s : h.generators) raw_gens.push_back(static_cast<std::size_t>(h.local[s]));
    std::vector<std::string> names;
    names.reserve(h.members.size());
    for (auto m : h.members) names.push_back(G.element_name(m));
    const auto& mem = h.members;
    const auto& loc = h.local;
    h.group = FiniteGroup::from_product(
        mem.size(),
        [&](std::size_t a, std::size_t b) {
          return static_cast<std::size_t>(loc[G.product(mem[a], mem[b])]);
        },
        raw_gens, G.label() + "<" + std::to_string(mem.size()) + ">", false, std::move(names));
  }
  return h;
}

Subgroup whole_group(const GroupPtr& g) {
  std::vector<Elem> all(g->order());
  std::iota(all.begin(), all.end(), Elem{0});
  return make_subgroup(g, std::move(all));
}

Subgroup trivial_subgroup(const GroupPtr& g) { return make_subgroup(g, {0}); }

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<Elem>& gens) {
  return make_subgroup(g, closure(*g, gens));
}

Subgroup lift_subgroup(const Subgroup& sub_of_inner, const Subgroup& inner) {
  Subgroup h;
  h.parent = inner.parent;
  for (auto m : sub_of_inner.members) h.members.push_back(inner.embed(m));
  // inner.members is sorted, so embedding preserves order and the intrinsic
  // group of sub_of_inner is still valid.
  for (auto s : sub_of_inner.generators) h.generators.push_back(inner.embed(s));
  h.local.assign(inner.parent->order(), -1);
  for (std::size_t i = 0; i < h.members.size(); ++i) h.local[h.members[i]] = static_cast<std::int32_t>(i);
  h.index = inner.parent->order() / h.members.size();
  const FiniteGroup& G = *inner.parent;
  h.is_normal = true;
  for (auto g : G.generators())
    for (auto s : h.generators)
      if (h.local[G.conjugate(s, g)] < 0) h.is_normal = false;
  h.group = sub_of_inner.group;
  return h;
}

std::vector<Elem> inclusion_map(const Subgroup& inner, const Subgroup& outer) {
  std::vector<Elem> out(inner.order());
  for (std::size_t i = 0; i < inner.order(); ++i) {
    Elem g = inner.members[i];
    if (!outer.contains(g)) throw PreconditionError("inclusion_map: not a subgroup of the outer group");
    out[i] = outer.to_local(g);
  }
  return out;
}

bool is_subgroup_of(const Subgroup& a, const Subgroup& b) {
  return std::all_of(a.members.begin(), a.members.end(), [&](Elem x) { return b.contains(x); });
}

Subgroup conjugate_subgroup(const Subgroup& h, Elem g) {
  std::vector<Elem> m;
  m.reserve(h.order());
  for (auto x : h.members) m.push_back(h.parent->conjugate(x, g));
  return make_subgroup(h.parent, std::move(m));
}

Subgroup derived_subgroup(const Subgroup& h) {
  const FiniteGroup& G = *h.parent;
  std::vector<Elem> comms;
  for (auto a : h.generators)
    for (auto b : h.generators) {
      Elem c = G.commutator(a, b);
      if (c != 0) comms.push_back(c);
    }
  return make_subgroup(h.parent, normal_closure_in(G, h.generators, comms));
}

std::vector<Subgroup> derived_series(const GroupPtr& g) {
  std::vector<Subgroup> series{whole_group(g)};
  for (;;) {
    Subgroup next = derived_subgroup(series.back());
    if (next.members == series.back().members) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const GroupPtr& g) { return derived_series(g).back().order() == 1; }

Subgroup center(const GroupPtr& g) {
  std::vector<Elem> z;
  for (Elem x = 0; x < g->order(); ++x) {
    bool central = true;
    for (auto s : g->generators())
      if (g->product(x, s) != g->product(s, x)) {
        central = false;
        break;
      }
    if (central) z.push_back(x);
  }
  return make_subgroup(g, std::move(z));
}

// ---------------------------------------------------------------------------
// low-index subgroups

namespace {

using Word = std::vector<std::uint8_t>;

struct CosetSearch {
  const FiniteGroup& G;
  std::size_t k;
  std::size_t r;
  std::vector<Elem> gens;
  std::vector<std::pair<Word, Word>> equations;
  std::vector<int> fwd, back;  // fwd[p * r + j], back[q * r + j]
  std::size_t defined_points = 1;
  std::set<std::vector<Elem>> found;

  CosetSearch(const FiniteGroup& g, std::size_t k_) : G(g), k(k_), gens(g.generators()) {
    r = gens.size();
    fwd.assign(k * r, -1);
    back.assign(k * r, -1);
    build_equations();
  }

  void build_equations() {
    // Words of length <= 3 grouped by value, plus g^order = 1.
    std::map<Elem, Word> first;
    std::vector<Word> words{{}};
    for (std::size_t len = 1; len <= 3 && r <= 8; ++len) {
      std::vector<Word> next;
      for (const auto& w : words)
        if (w.size() == len - 1)
          for (std::size_t j = 0; j < r; ++j) {
            Word v = w;
            v.push_back(static_cast<std::uint8_t>(j));
            next.push_back(v);
          }
      words.insert(words.end(), next.begin(), next.end());
    }
    for (const auto& w : words) {
      Elem v = 0;
      for (auto j : w) v = G.product(v, gens[j]);
      auto [it, inserted] = first.emplace(v, w);
      if (!inserted) equations.emplace_back(it->second, w);
    }
    for (std::size_t j = 0; j < r; ++j) {
      unsigned o = G.element_order(gens[j]);
      if (o > 3 && o <= 64) equations.emplace_back(Word(o, static_cast<std::uint8_t>(j)), Word{});
    }
  }

  int trace(int p, const Word& w) const {
    for (auto j : w) {
      p = fwd[static_cast<std::size_t>(p) * r + j];
      if (p < 0) return -1;
    }
    return p;
  }

  bool consistent() const {
    for (const auto& [u, v] : equations)
      for (std::size_t p = 0; p < defined_points; ++p) {
        int a = trace(static_cast<int>(p), u), b = trace(static_cast<int>(p), v);
        if (a >= 0 && b >= 0 && a != b) return false;
      }
    return true;
  }

  void leaf() {
    // Verify the action is a homomorphism by propagating along the Cayley graph.
    std::vector<std::vector<std::uint8_t>> act(G.order());
    std::vector<char> seen(G.order(), 0);
    act[0].resize(k);
    std::iota(act[0].begin(), act[0].end(), std::uint8_t{0});
    seen[0] = 1;
    std::deque<Elem> queue{0};
    while (!queue.empty()) {
      Elem x = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < r; ++j) {
        Elem y = G.product(x, gens[j]);
        std::vector<std::uint8_t> img(k);
        for (std::size_t p = 0; p < k; ++p) img[p] = static_cast<std::uint8_t>(fwd[act[x][p] * r + j]);
        if (seen[y]) {
          if (act[y] != img) return;
          continue;
        }
        seen[y] = 1;
        act[y] = std::move(img);
        queue.push_back(y);
      }
    }
    std::vector<Elem> stab;
    for (Elem x = 0; x < G.order(); ++x)
      if (act[x][0] == 0) stab.push_back(x);
    found.insert(std::move(stab));
  }

  void search(std::size_t slot) {
    while (slot < k * r && fwd[slot] >= 0) ++slot;
    if (slot == k * r) {
      if (defined_points == k) leaf();
      return;
    }
    std::size_t p = slot / r, j = slot % r;
    if (p >= defined_points) return;  // unreachable point: not transitive
    std::size_t limit = std::min(defined_points + 1, k);
    for (std::size_t q = 0; q < limit; ++q) {
      if (back[q * r + j] >= 0) continue;
      bool fresh = q == defined_points;
      if (fresh) ++defined_points;
      fwd[slot] = static_cast<int>(q);
      back[q * r + j] = static_cast<int>(p);
      if (consistent()) search(slot + 1);
      fwd[slot] = -1;
      back[q * r + j] = -1;
      if (fresh) --defined_points;
    }
  }
};

}  // namespace

std::vector<Subgroup> subgroups_of_index(const GroupPtr& g, std::size_t k) {
  if (k == 0 || g->order() % k != 0) return {};
  if (k == 1) return {whole_group(g)};
  if (k > 8) throw UnsupportedError("subgroups_of_index supports index <= 8");
  CosetSearch s(*g, k);
  s.search(0);
  std::vector<Subgroup> out;
  for (const auto& m : s.found) out.push_back(make_subgroup(g, m));
  return out;
}

std::vector<Subgroup> index_two_subgroups_abelian(const GroupPtr& g) {
  const FiniteGroup& G = *g;
  std::vector<Elem> rels;
  for (auto a : G.generators()) {
    rels.push_back(G.product(a, a));
    for (auto b : G.generators()) rels.push_back(G.commutator(a, b));
  }
  Subgroup n = make_subgroup(g, normal_closure(G, rels));
  Quotient q = quotient_by_normal(g, n);
  const FiniteGroup& Q = *q.group;
  // Q is elementary abelian of order 2^m; coordinates w.r.t. a greedy basis.
  std::vector<Elem> basis;
  std::vector<std::uint32_t> coord(Q.order(), 0);
  std::vector<char> spanned(Q.order(), 0);
  spanned[0] = 1;
  std::vector<Elem> span{0};
  for (Elem x = 1; x < Q.order(); ++x) {
    if (spanned[x]) continue;
    std::size_t bit = basis.size();
    basis.push_back(x);
    std::size_t old = span.size();
    for (std::size_t i = 0; i < old; ++i) {
      Elem y = Q.product(span[i], x);
      spanned[y] = 1;
      coord[y] = coord[span[i]] | (1u << bit);
      span.push_back(y);
    }
  }
  std::vector<Subgroup> out;
  std::size_t m = basis.size();
  for (std::uint32_t f = 1; f < (1u << m); ++f) {
    std::vector<Elem> members;
    for (Elem x = 0; x < G.order(); ++x)
      if (std::popcount(coord[q.projection[x]] & f) % 2 == 0) members.push_back(x);
    out.push_back(make_subgroup(g, std::move(members)));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
  return out;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g) {
  const FiniteGroup& G = *g;
  std::set<std::vector<Elem>> cyclic_sets;
  std::vector<Elem> cyclic_gens;
  for (Elem x = 0; x < G.order(); ++x) {
    auto c = closure(G, {x});
    if (cyclic_sets.insert(c).second) cyclic_gens.push_back(x);
  }
  std::set<std::vector<Elem>> all(cyclic_sets.begin(), cyclic_sets.end());
  std::vector<std::vector<Elem>> work(all.begin(), all.end());
  while (!work.empty()) {
    auto cur = std::move(work.back());
    work.pop_back();
    std::vector<char> in(G.order(), 0);
    for (auto x : cur) in[x] = 1;
    auto cur_gens = greedy_generators(G, cur);
    for (auto c : cyclic_gens) {
      if (in[c]) continue;
      auto gens = cur_gens;
      gens.push_back(c);
      auto join = closure(G, gens);
      if (all.insert(join).second) work.push_back(std::move(join));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : all) out.push_back(make_subgroup(g, m));
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

std::optional<Subgroup> hall_subgroup(const GroupPtr& g, const std::set<unsigned>& primes) {
  const FiniteGroup& G = *g;
  if (!is_solvable(g)) throw PreconditionError("Hall subgroups are only guaranteed for solvable groups");
  std::size_t target = 1, rest = G.order();
  for (auto p : prime_factors(G.order())) {
    while (rest % p == 0) {
      rest /= p;
      if (primes.contains(p)) target *= p;
    }
  }
  auto is_pi = [&](Elem x) {
    for (auto p : prime_factors(G.element_order(x)))
      if (!primes.contains(p)) return false;
    return true;
  };
  std::vector<Elem> cand;
  for (Elem x = 1; x < G.order(); ++x)
    if (is_pi(x)) cand.push_back(x);

  std::set<std::vector<Elem>> visited;
  std::optional<std::vector<Elem>> answer;
  std::function<void(const std::vector<Elem>&, const std::vector<Elem>&)> dfs =
      [&](const std::vector<Elem>& members, const std::vector<Elem>& gens) {
        if (answer) return;
        if (members.size() == target) {
          answer = members;
          return;
        }
        std::vector<char> in(G.order(), 0);
        for (auto x : members) in[x] = 1;
        for (auto c : cand) {
          if (answer) return;
          if (in[c]) continue;
          auto next_gens = gens;
          next_gens.push_back(c);
          auto next = closure(G, next_gens);
          if (target % next.size() != 0) continue;
          if (!visited.insert(next).second) continue;
          dfs(next, next_gens);
        }
      };
  dfs({0}, {});
  if (!answer) return std::nullopt;
  return make_subgroup(g, *answer);
}

// ---------------------------------------------------------------------------
// quotients and products

Quotient quotient_by_normal(const GroupPtr& g, const Subgroup& n) {
  if (!n.is_normal) throw PreconditionError("quotient by a non-normal subgroup");
  const FiniteGroup& G = *g;
  std::vector<std::size_t> coset(G.order(), static_cast<std::size_t>(-1));
  std::vector<Elem> rep;
  for (Elem x = 0; x < G.order(); ++x) {
    if (coset[x] != static_cast<std::size_t>(-1)) continue;
    std::size_t id = rep.size();
    rep.push_back(x);
    for (auto m : n.members) coset[G.product(x, m)] = id;
  }
  std::vector<std::size_t> raw_gens;
  for (auto s : G.generators()) raw_gens.push_back(coset[s]);
  std::vector<std::string> names;
  for (auto x : rep) names.push_back(G.element_name(x) + "N");
  std::vector<Elem> relabel;
  auto q = FiniteGroup::from_product(
      rep.size(), [&](std::size_t a, std::size_t b) { return coset[G.product(rep[a], rep[b])]; },
      raw_gens, G.label() + "/N" + std::to_string(n.order()), true, std::move(names), &relabel);
  Quotient out{q, std::vector<Elem>(G.order())};
  for (Elem x = 0; x < G.order(); ++x) out.projection[x] = relabel[coset[x]];
  return out;
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  std::string label = a->label() + "x" + b->label();
  std::size_t nb = b->order();
  std::size_t n = a->order() * nb;
  if (n <= kTableCap) {
    std::vector<std::size_t> gens;
    for (auto s : a->generators()) gens.push_back(s * nb);
    for (auto s : b->generators()) gens.push_back(s);
    std::vector<std::string> names(n);
    for (std::size_t i = 0; i < n; ++i)
      names[i] = "(" + a->element_name(static_cast<Elem>(i / nb)) + "," +
                 b->element_name(static_cast<Elem>(i % nb)) + ")";
    return FiniteGroup::from_product(
        n,
        [&](std::size_t x, std::size_t y) {
          return a->product(static_cast<Elem>(x / nb), static_cast<Elem>(y / nb)) * nb +
                 b->product(static_cast<Elem>(x % nb), static_cast<Elem>(y % nb));
        },
        gens, label, true, std::move(names));
  }
  if (!a->has_perms() || !b->has_perms())
    throw SizeLimitError("direct product of order " + std::to_string(n) + " exceeds the table cap");
  std::size_t da = a->degree(), db = b->degree();
  std::vector<Perm> gens;
  for (auto s : a->generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = a->perm(s)[i];
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<std::uint16_t>(da + i);
    gens.emplace_back(std::move(img));
  }
  for (auto s : b->generators()) {
    std::vector<std::uint16_t> img(da + db);
    for (std::size_t i = 0; i < da; ++i) img[i] = static_cast<std::uint16_t>(i);
    for (std::size_t i = 0; i < db; ++i) img[da + i] = static_cast<std::uint16_t>(da + b->perm(s)[i]);
    gens.emplace_back(std::move(img));
  }
  return FiniteGroup::from_generators(da + db, gens, label);
}

GroupPtr amalgamated_central_product(const GroupPtr& a, const GroupPtr& b,
                                     const std::vector<std::pair<Elem, Elem>>& identification,
                                     std::vector<Elem>* pair_map) {
  const FiniteGroup& A = *a;
  const FiniteGroup& B = *b;
  std::map<Elem, Elem> phi;
  for (auto [x, y] : identification) phi[x] = y;
  if (!phi.contains(0) || phi[0] != 0) throw PreconditionError("identification must send 1 to 1");
  for (auto [x, y] : phi) {
    for (auto s : A.generators())
      if (A.product(x, s) != A.product(s, x)) throw PreconditionError("identified subgroup of A is not central");
    for (auto s : B.generators())
      if (B.product(y, s) != B.product(s, y)) throw PreconditionError("identified subgroup of B is not central");
    for (auto [x2, y2] : phi) {
      auto it = phi.find(A.product(x, x2));
      if (it == phi.end() || it->second != B.product(y, y2))
        throw PreconditionError("identification is not a homomorphism on a subgroup");
    }
  }
  std::set<Elem> image;
  for (auto [x, y] : phi) image.insert(y);
  if (image.size() != phi.size()) throw PreconditionError("identification is not injective");

  std::size_t nb = B.order();
  auto canonical = [&](Elem x, Elem y) {
    std::size_t best = static_cast<std::size_t>(-1);
    for (auto [c, pc] : phi)
      best = std::min<std::size_t>(best, A.product(x, c) * nb + B.product(y, B.inverse(pc)));
    return best;
  };
  std::size_t n = A.order() * nb / phi.size();
  if (n > kTableCap)
    throw SizeLimitError("central product of order " + std::to_string(n) + " exceeds the table cap");
  std::vector<std::size_t> reps;
  std::unordered_map<std::size_t, std::size_t> index;
  for (Elem x = 0; x < A.order(); ++x)
    for (Elem y = 0; y < nb; ++y) {
      std::size_t c = canonical(x, y);
      if (c == x * nb + y) {
        index[c] = reps.size();
        reps.push_back(c);
      }
    }
  std::vector<std::size_t> gens;
  for (auto s : A.generators()) gens.push_back(index.at(canonical(s, 0)));
  for (auto s : B.generators()) gens.push_back(index.at(canonical(0, s)));
  std::vector<std::string> names;
  for (auto c : reps)
    names.push_back("(" + A.element_name(static_cast<Elem>(c / nb)) + "," +
                    B.element_name(static_cast<Elem>(c % nb)) + ")");
  std::vector<Elem> relabel;
  auto out = FiniteGroup::from_product(
      reps.size(),
      [&](std::size_t u, std::size_t v) {
        Elem x = A.product(static_cast<Elem>(reps[u] / nb), static_cast<Elem>(reps[v] / nb));
        Elem y = B.product(static_cast<Elem>(reps[u] % nb), static_cast<Elem>(reps[v] % nb));
        return index.at(canonical(x, y));
      },
      gens, a->label() + "o" + b->label(), true, std::move(names), &relabel);
  if (pair_map) {
    pair_map->assign(A.order() * nb, 0);
    for (Elem x = 0; x < A.order(); ++x)
      for (Elem y = 0; y < nb; ++y) (*pair_map)[x * nb + y] = relabel[index.at(canonical(x, y))];
  }
  return out;
}

GroupPtr as_group(const Subgroup& h, std::string label, std::vector<Elem>* to_parent) {
  const FiniteGroup& G = *h.parent;
  std::vector<std::size_t> raw_gens;
  for (auto s : h.generators) raw_gens.push_back(static_cast<std::size_t>(h.local[s]));
  std::vector<std::string> names;
  for (auto m : h.members) names.push_back(G.element_name(m));
  std::vector<Elem> relabel;
  auto out = FiniteGroup::from_product(
      h.order(),
      [&](std::size_t x, std::size_t y) {
        return static_cast<std::size_t>(h.local[G.product(h.members[x], h.members[y])]);
      },
      raw_gens, std::move(label), true, std::move(names), &relabel);
  if (to_parent) {
    to_parent->assign(h.order(), 0);
    for (std::size_t i = 0; i < h.order(); ++i) (*to_parent)[relabel[i]] = h.members[i];
  }
  return out;
}

namespace {

// Extends gens -> images to a map on all of a, or nullopt if that is not a
// well-defined homomorphism.
std::optional<std::vector<Elem>> extend_homomorphism(const FiniteGroup& a, const FiniteGroup& b,
                                                     const std::vector<Elem>& images) {
  std::vector<Elem> map(a.order(), kNone);
  map[0] = 0;
  std::vector<Elem> queue{0};
  const auto& gens = a.generators();
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Elem x = queue[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Elem y = a.product(x, gens[j]);
      Elem img = b.product(map[x], images[j]);
      if (map[y] == kNone) {
        map[y] = img;
        queue.push_back(y);
      } else if (map[y] != img) {
        return std::nullopt;
      }
    }
  }
  return map;
}

}  // namespace

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup& a, const FiniteGroup& b) {
  if (a.order() != b.order() || a.class_count() != b.class_count()) return std::nullopt;
  const auto& gens = a.generators();
  std::vector<std::vector<Elem>> cand(gens.size());
  for (std::size_t j = 0; j < gens.size(); ++j)
    for (Elem y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[j])) cand[j].push_back(y);
  std::vector<Elem> images(gens.size());
  std::optional<std::vector<Elem>> found;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (found) return;
    if (j == gens.size()) {
      auto m = extend_homomorphism(a, b, images);
      if (!m) return;
      std::vector<char> hit(b.order(), 0);
      for (auto y : *m) {
        if (hit[y]) return;
        hit[y] = 1;
      }
      found = std::move(m);
      return;
    }
    for (auto y : cand[j]) {
      images[j] = y;
      rec(j + 1);
      if (found) return;
    }
  };
  rec(0);
  return found;
}

std::vector<unsigned> prime_factors(std::size_t n) {
  std::vector<unsigned> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(static_cast<unsigned>(p));
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

}  // namespace artin::grp
