#include "artin/chr/table.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "artin/errors.hpp"

namespace artin::chr {

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return a * b % p; }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a, u64 p) {
  if (a % p == 0) throw DivisionError("inverse of zero mod p");
  return powmod(a, p - 2, p);
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

u64 primitive_root(u64 p) {
  std::vector<u64> factors;
  u64 m = p - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (u64 g = 2; g < p; ++g) {
    bool ok = true;
    for (auto q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;  // p == 2
}

// The primes admissible for the Dixon method, in increasing order.
u64 next_admissible_prime(u64 exponent, u64 above) {
  u64 p = above + 1;
  while (p % exponent != 1 % exponent) ++p;
  while (!is_prime(p)) p += exponent;
  return p;
}

using Vec = std::vector<u64>;

// Rows in reduced row echelon form; pivots[t] is the pivot column of row t.
struct Space {
  std::vector<Vec> rows;
  std::vector<std::size_t> pivots;
};

Space echelon(std::vector<Vec> rows, u64 p) {
  Space s;
  if (rows.empty()) return s;
  std::size_t k = rows[0].size(), r = 0;
  for (std::size_t col = 0; col < k && r < rows.size(); ++col) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    u64 inv = invmod(rows[r][col], p);
    for (auto& x : rows[r]) x = mulmod(x, inv, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][col] == 0) continue;
      u64 f = rows[i][col];
      for (std::size_t j = 0; j < k; ++j) rows[i][j] = (rows[i][j] + p - mulmod(f, rows[r][j], p)) % p;
    }
    s.pivots.push_back(col);
    ++r;
  }
  rows.resize(r);
  s.rows = std::move(rows);
  return s;
}

// Null space of a d x d matrix (row-major), basis vectors of length d.
std::vector<Vec> nullspace(std::vector<Vec> m, u64 p) {
  std::size_t d = m.size();
  Space s = echelon(std::move(m), p);
  std::vector<bool> is_pivot(d, false);
  for (auto c : s.pivots) is_pivot[c] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < d; ++f) {
    if (is_pivot[f]) continue;
    Vec v(d, 0);
    v[f] = 1;
    for (std::size_t t = 0; t < s.rows.size(); ++t) v[s.pivots[t]] = (p - s.rows[t][f]) % p;
    out.push_back(std::move(v));
  }
  return out;
}

// Characteristic polynomial det(x I - R) via reduction to Hessenberg form.
// Coefficients constant term first.
Vec charpoly(std::vector<Vec> h, u64 p) {
  std::size_t n = h.size();
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h[i][m - 1] == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      std::swap(h[i], h[m]);
      for (auto& row : h) std::swap(row[i], row[m]);
    }
    u64 tinv = invmod(h[m][m - 1], p);
    for (std::size_t r = m + 1; r < n; ++r) {
      u64 u = mulmod(h[r][m - 1], tinv, p);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h[r][c] = (h[r][c] + p - mulmod(u, h[m][c], p)) % p;
      for (std::size_t c = 0; c < n; ++c) h[c][m] = (h[c][m] + mulmod(u, h[c][r], p)) % p;
    }
  }
  std::vector<Vec> poly(n + 1);
  poly[0] = {1};
  for (std::size_t m = 0; m < n; ++m) {
    // poly[m+1] = (x - h[m][m]) poly[m] - sum_i h[i][m] prod_{j=i+1..m} h[j][j-1] poly[i]
    Vec next(m + 2, 0);
    for (std::size_t c = 0; c < poly[m].size(); ++c) {
      next[c + 1] = (next[c + 1] + poly[m][c]) % p;
      next[c] = (next[c] + p - mulmod(h[m][m], poly[m][c], p)) % p;
    }
    u64 prod = 1;
    for (std::size_t ii = m; ii-- > 0;) {
      prod = mulmod(prod, h[ii + 1][ii], p);
      u64 f = mulmod(h[ii][m], prod, p);
      if (f == 0) continue;
      for (std::size_t c = 0; c < poly[ii].size(); ++c) next[c] = (next[c] + p - mulmod(f, poly[ii][c], p)) % p;
    }
    poly[m + 1] = std::move(next);
  }
  return poly[n];
}

std::vector<u64> roots_by_scan(const Vec& f, u64 p) {
  std::vector<u64> out;
  for (u64 x = 0; x < p; ++x) {
    u64 v = 0;
    for (std::size_t i = f.size(); i-- > 0;) v = (mulmod(v, x, p) + f[i]) % p;
    if (v == 0) out.push_back(x);
  }
  return out;
}

struct DixonFailure {
  std::string why;
};

std::vector<ClassFunction> dixon_with_prime(const GroupPtr& gp, u64 p,
                                            const std::vector<std::vector<std::uint32_t>>& a) {
  const auto& G = *gp;
  const auto& cls = G.classes();
  const std::size_t k = cls.class_count;
  const u64 n = G.order();

  std::vector<Space> pending;
  {
    std::vector<Vec> id(k, Vec(k, 0));
    for (std::size_t i = 0; i < k; ++i) id[i][i] = 1;
    pending.push_back(echelon(std::move(id), p));
  }
  std::vector<Vec> eigen;  // one-dimensional common eigenspaces
  if (k == 1) {
    eigen.push_back(pending[0].rows[0]);
    pending.clear();
  }
  for (std::size_t i = 1; i < k && !pending.empty(); ++i) {
    std::vector<Space> next;
    for (auto& sp : pending) {
      const std::size_t d = sp.rows.size();
      // Matrix of A_i on the subspace: A v_s = sum_t R[t][s] v_t.
      std::vector<Vec> r(d, Vec(d, 0));
      for (std::size_t s = 0; s < d; ++s) {
        const Vec& v = sp.rows[s];
        for (std::size_t t = 0; t < d; ++t) {
          std::size_t j = sp.pivots[t];
          u64 acc = 0;
          for (std::size_t l = 0; l < k; ++l)
            if (v[l]) acc = (acc + mulmod(a[i][j * k + l] % p, v[l], p)) % p;
          r[t][s] = acc;
        }
      }
      auto roots = roots_by_scan(charpoly(r, p), p);
      std::size_t total = 0;
      for (auto lambda : roots) {
        auto m = r;
        for (std::size_t t = 0; t < d; ++t) m[t][t] = (m[t][t] + p - lambda) % p;
        auto ns = nullspace(std::move(m), p);
        total += ns.size();
        std::vector<Vec> vecs;
        for (const auto& y : ns) {
          Vec w(k, 0);
          for (std::size_t s = 0; s < d; ++s)
            if (y[s])
              for (std::size_t l = 0; l < k; ++l) w[l] = (w[l] + mulmod(y[s], sp.rows[s][l], p)) % p;
          vecs.push_back(std::move(w));
        }
        Space sub = echelon(std::move(vecs), p);
        if (sub.rows.size() == 1)
          eigen.push_back(sub.rows[0]);
        else
          next.push_back(std::move(sub));
      }
      if (total != d) throw DixonFailure{"class matrix not diagonalizable mod " + std::to_string(p)};
    }
    pending = std::move(next);
  }
  if (!pending.empty() || eigen.size() != k)
    throw DixonFailure{"eigenspaces did not split mod " + std::to_string(p)};

  const unsigned e = G.exponent();
  const u64 z = powmod(primitive_root(p), (p - 1) / e, p);
  const u64 zinv = invmod(z, p);
  const u64 einv = invmod(e, p);
  std::vector<std::vector<ClassId>> pc(k, std::vector<ClassId>(e));
  for (ClassId l = 0; l < k; ++l)
    for (unsigned j = 0; j < e; ++j) pc[l][j] = G.power_class(l, j);

  std::vector<ClassFunction> out;
  for (auto& w : eigen) {
    if (w[0] == 0) throw DixonFailure{"eigenvector vanishes at the identity"};
    u64 s0 = invmod(w[0], p);
    for (auto& x : w) x = mulmod(x, s0, p);
    u64 sum = 0;
    for (ClassId l = 0; l < k; ++l)
      sum = (sum + mulmod(mulmod(w[l], w[cls.inverse_class[l]], p), invmod(cls.class_sizes[l] % p, p), p)) % p;
    u64 target = mulmod(n % p, invmod(sum, p), p);
    u64 deg = 0;
    for (u64 d = 1; d * d <= n; ++d)
      if (d * d % p == target) deg = d;
    if (deg == 0) throw DixonFailure{"no integral degree mod " + std::to_string(p)};
    Vec chi(k);
    for (ClassId l = 0; l < k; ++l) chi[l] = mulmod(mulmod(deg, w[l], p), invmod(cls.class_sizes[l] % p, p), p);

    std::vector<Cyclo> values(k);
    for (ClassId l = 0; l < k; ++l) {
      std::vector<Rational> coeffs(e);
      for (unsigned kk = 0; kk < e; ++kk) {
        u64 acc = 0;
        u64 step = powmod(zinv, kk, p), zz = 1;
        for (unsigned j = 0; j < e; ++j) {
          acc = (acc + mulmod(chi[pc[l][j]], zz, p)) % p;
          zz = mulmod(zz, step, p);
        }
        u64 mult = mulmod(acc, einv, p);
        if (mult > deg) throw DixonFailure{"eigenvalue multiplicity out of range mod " + std::to_string(p)};
        coeffs[kk] = static_cast<long>(mult);
      }
      values[l] = Cyclo(e, std::move(coeffs));
    }
    out.emplace_back(gp, std::move(values));
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> class_structure_constants(const grp::FiniteGroup& g,
                                                                  par::Exec exec) {
  const auto& cls = g.classes();
  const std::size_t k = cls.class_count;
  std::vector<std::vector<Elem>> members(k);
  for (Elem x = 0; x < g.order(); ++x) members[g.class_of(x)].push_back(x);
  std::vector<std::vector<std::uint32_t>> a(k, std::vector<std::uint32_t>(k * k, 0));
  par::for_each_index(
      k,
      [&](std::size_t i) {
        auto& ai = a[i];
        for (std::size_t l = 0; l < k; ++l) {
          Elem z = cls.representatives[l];
          for (Elem x : members[i]) ai[g.class_of(g.product(g.inverse(x), z)) * k + l] += 1;
        }
      },
      exec);
  return a;
}

CharacterTable character_table(const GroupPtr& g, const DixonOptions& opts) {
  if (g->order() > grp::kTableCap)
    throw SizeLimitError("character tables are limited to order " + std::to_string(grp::kTableCap));
  auto a = class_structure_constants(*g, opts.exec);
  u64 p = 2 * g->order();
  std::string last;
  for (int attempt = 0; attempt < opts.max_primes; ++attempt) {
    p = next_admissible_prime(g->exponent(), p);
    try {
      auto irr = dixon_with_prime(g, p, a);
      std::sort(irr.begin(), irr.end(), [](const ClassFunction& x, const ClassFunction& y) {
        long dx = x.degree(), dy = y.degree();
        if (dx != dy) return dx < dy;
        return x.values() > y.values();
      });
      CharacterTable t{g, std::move(irr), p};
      long total = 0;
      for (auto d : t.degrees()) total += static_cast<long>(d * d);
      if (total != static_cast<long>(g->order()))
        throw DixonFailure{"degrees do not satisfy the sum-of-squares identity"};
      return t;
    } catch (const DixonFailure& f) {
      last = f.why;
    }
  }
  throw ConsistencyError("character table of '" + g->label() + "' failed after " +
                         std::to_string(opts.max_primes) + " primes: " + last);
}

TablePtr table_of(const GroupPtr& g) {
  static std::mutex mutex;
  static std::map<const grp::FiniteGroup*, std::pair<std::weak_ptr<const grp::FiniteGroup>, TablePtr>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(g.get());
    if (it != cache.end()) {
      if (!it->second.first.expired()) return it->second.second;
      cache.erase(it);
    }
  }
  auto t = std::make_shared<const CharacterTable>(character_table(g));
  std::lock_guard lock(mutex);
  if (cache.size() > 256)
    std::erase_if(cache, [](const auto& kv) { return kv.second.first.expired(); });
  cache[g.get()] = {g, t};
  return t;
}

std::vector<std::size_t> CharacterTable::degrees() const {
  std::vector<std::size_t> d;
  for (const auto& chi : irr) d.push_back(static_cast<std::size_t>(chi.degree()));
  return d;
}

std::vector<std::size_t> CharacterTable::linear_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (is_linear(irr[i])) out.push_back(i);
  return out;
}

std::optional<std::size_t> CharacterTable::index_of(const ClassFunction& chi) const {
  for (std::size_t i = 0; i < irr.size(); ++i)
    if (irr[i] == chi) return i;
  return std::nullopt;
}

std::vector<long> decompose(const ClassFunction& chi, const CharacterTable& t) {
  require_same_group(chi, t.irr.at(0));
  std::vector<long> m;
  for (const auto& x : t.irr) {
    auto ip = inner_product(chi, x);
    auto v = ip.integer();
    if (!v) throw NotACharacterError("non-integral multiplicity " + ip.str());
    m.push_back(*v);
  }
  return m;
}

bool is_character(const ClassFunction& chi, const CharacterTable& t) {
  try {
    auto m = decompose(chi, t);
    bool any = false;
    for (auto x : m) {
      if (x < 0) return false;
      any = any || x > 0;
    }
    return any;
  } catch (const NotACharacterError&) {
    return false;
  }
}

bool is_irreducible(const ClassFunction& chi) {
  return inner_product(chi, chi) == Cyclo(1) && chi[0].rational() && *chi[0].rational() > 0;
}

ClassFunction compose(const std::vector<long>& mult, const CharacterTable& t) {
  auto f = ClassFunction::zero(t.group);
  for (std::size_t i = 0; i < mult.size(); ++i)
    if (mult[i]) f += Cyclo(mult[i]) * t.irr[i];
  return f;
}

bool check_orthogonality(const CharacterTable& t) {
  const auto& G = *t.group;
  const std::size_t k = G.class_count();
  if (t.irr.size() != k) return false;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (inner_product(t.irr[i], t.irr[j]) != Cyclo(i == j ? 1 : 0)) return false;
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = c; d < k; ++d) {
      Cyclo s;
      for (std::size_t i = 0; i < k; ++i) s += t.irr[i][static_cast<ClassId>(c)] * t.irr[i][static_cast<ClassId>(d)].conj();
      long expect = c == d ? static_cast<long>(G.order() / G.classes().class_sizes[c]) : 0;
      if (s != Cyclo(expect)) return false;
    }
  return true;
}

namespace {

std::string value_text(const Cyclo& v) {
  if (auto q = v.rational()) return cyc::to_string(*q);
  return v.str();
}

}  // namespace

std::string format_table(const CharacterTable& t) {
  const auto& G = *t.group;
  const auto& cls = G.classes();
  const std::size_t k = cls.class_count;
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> head{"class"}, reps{"rep"}, sizes{"size"}, orders{"order"};
  for (std::size_t c = 0; c < k; ++c) {
    head.push_back("C" + std::to_string(c));
    reps.push_back(G.element_name(cls.representatives[c]));
    sizes.push_back(std::to_string(cls.class_sizes[c]));
    orders.push_back(std::to_string(cls.rep_orders[c]));
  }
  cells.push_back(head);
  cells.push_back(reps);
  cells.push_back(sizes);
  cells.push_back(orders);
  for (std::size_t i = 0; i < t.irr.size(); ++i) {
    std::vector<std::string> row{"X" + std::to_string(i)};
    for (std::size_t c = 0; c < k; ++c) row.push_back(value_text(t.irr[i][static_cast<ClassId>(c)]));
    cells.push_back(row);
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : cells)
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  std::ostringstream os;
  os << "group " << G.label() << " order " << G.order() << " classes " << k << " exponent "
     << G.exponent() << " prime " << t.prime << "\n";
  for (const auto& row : cells) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      os << row[c];
      if (c + 1 < row.size()) os << std::string(width[c] - row[c].size() + 2, ' ');
    }
    os << "\n";
  }
  return os.str();
}

std::string format_decomposition(const std::vector<long>& mult) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < mult.size(); ++i) {
    if (!mult[i]) continue;
    if (!first) os << " + ";
    if (mult[i] != 1) os << mult[i] << "*";
    os << "X" << i;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace artin::chr
