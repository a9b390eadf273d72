#include "orbichow/group.hpp"

#include "orbichow/numeric.hpp"

#include <algorithm>
#include <cstring>
#include <deque>
#include <numeric>
#include <sstream>

namespace orbichow {

namespace {

std::uint64_t perm_hash(const Permutation& p) {
  return fnv1a64(std::string_view(reinterpret_cast<const char*>(p.images.data()),
                                  p.images.size() * sizeof(std::uint32_t)));
}

Permutation perm_identity(std::uint32_t points) {
  Permutation p;
  p.images.resize(points);
  std::iota(p.images.begin(), p.images.end(), 0u);
  return p;
}

Permutation perm_compose(const Permutation& a, const Permutation& b) {
  // (a*b)(x) = a(b(x))
  Permutation out;
  out.images.resize(a.images.size());
  for (std::size_t x = 0; x < b.images.size(); ++x) out.images[x] = a.images[b.images[x]];
  return out;
}

bool is_permutation_vector(const std::vector<std::uint32_t>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto x : v) {
    if (x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

}  // namespace

std::string cycle_notation(const Permutation& p) {
  const std::size_t n = p.images.size();
  std::vector<bool> done(n, false);
  std::ostringstream out;
  bool any = false;
  for (std::uint32_t start = 0; start < n; ++start) {
    if (done[start] || p.images[start] == start) continue;
    any = true;
    out << '(';
    std::uint32_t x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << (x + 1);
      done[x] = true;
      x = p.images[x];
      first = false;
    } while (x != start);
    out << ')';
  }
  return any ? out.str() : "e";
}

Permutation permutation_from_cycles(const std::vector<std::vector<std::uint32_t>>& cycles,
                                    std::uint32_t points) {
  Permutation p = perm_identity(points);
  std::vector<bool> used(points, false);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      std::uint32_t a = cyc[i];
      if (a < 1 || a > points) throw InputError("cycle entry out of range [1, points]");
      if (used[a - 1]) throw InputError("cycles must be disjoint");
      used[a - 1] = true;
      std::uint32_t b = cyc[(i + 1) % cyc.size()];
      p.images[a - 1] = b - 1;
    }
  }
  return p;
}

FiniteGroup FiniteGroup::abelian(std::vector<std::uint64_t> invariant_factors,
                                 std::uint64_t order_bound) {
  FiniteGroup g;
  g.kind_ = Kind::Abelian;
  g.abelian_flag_ = true;
  g.factors_ = std::move(invariant_factors);
  std::uint64_t order = 1;
  for (auto n : g.factors_) {
    if (n == 0) throw InputError("invariant factor 0 is not a finite cyclic group");
    if (n > order_bound || order > order_bound / n)
      throw BoundError("abelian group order exceeds bound " + std::to_string(order_bound));
    order *= n;
  }
  g.order_ = order;
  g.radix_.assign(g.factors_.size(), 1);
  for (std::size_t i = g.factors_.size(); i-- > 1;)
    g.radix_[i - 1] = g.radix_[i] * g.factors_[i];
  g.identity_ = 0;
  g.finish_construction();
  return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators,
                                           std::uint32_t points,
                                           std::uint64_t order_bound) {
  for (const auto& p : generators)
    if (!is_permutation_vector(p.images, points))
      throw InputError("generator is not a permutation of the stated points");

  // Breadth-first closure.
  std::vector<Permutation> elems{perm_identity(points)};
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> buckets;
  auto lookup = [&](const Permutation& p) -> std::optional<std::size_t> {
    auto it = buckets.find(perm_hash(p));
    if (it == buckets.end()) return std::nullopt;
    for (auto idx : it->second)
      if (elems[idx] == p) return idx;
    return std::nullopt;
  };
  buckets[perm_hash(elems[0])].push_back(0);
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& gen : generators) {
      Permutation next = perm_compose(elems[cur], gen);
      if (lookup(next)) continue;
      if (elems.size() >= order_bound)
        throw BoundError("permutation closure exceeds bound " + std::to_string(order_bound));
      buckets[perm_hash(next)].push_back(elems.size());
      queue.push_back(elems.size());
      elems.push_back(std::move(next));
    }
  }

  std::sort(elems.begin(), elems.end(),
            [](const Permutation& a, const Permutation& b) { return a.images < b.images; });

  FiniteGroup g;
  g.kind_ = Kind::Permutation;
  g.points_ = points;
  g.order_ = elems.size();
  g.perms_ = std::move(elems);
  for (std::size_t i = 0; i < g.perms_.size(); ++i)
    g.perm_buckets_[perm_hash(g.perms_[i])].push_back(static_cast<GroupElement>(i));
  g.identity_ = 0;  // identity is lexicographically least

  for (const auto& p : generators) {
    if (p == perm_identity(points)) continue;
    g.input_gens_.push_back(p);
    auto it = g.perm_buckets_.find(perm_hash(p));
    for (auto idx : it->second)
      if (g.perms_[idx] == p) {
        if (std::find(g.generators_.begin(), g.generators_.end(), idx) == g.generators_.end())
          g.generators_.push_back(idx);
        break;
      }
  }
  g.finish_construction();
  return g;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<std::uint32_t>>& table,
                                    std::uint64_t order_bound) {
  const std::size_t n = table.size();
  if (n == 0) throw InputError("multiplication table is empty");
  if (n > order_bound) throw BoundError("table order exceeds bound " + std::to_string(order_bound));

  FiniteGroup g;
  g.kind_ = Kind::Table;
  g.order_ = n;
  g.table_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (!is_permutation_vector(table[a], n))
      throw InputError("table row " + std::to_string(a) + " is not a permutation of 0..n-1");
    std::copy(table[a].begin(), table[a].end(), g.table_.begin() + static_cast<long>(a * n));
  }
  for (std::size_t b = 0; b < n; ++b) {  // columns must be permutations too
    std::vector<bool> seen(n, false);
    for (std::size_t a = 0; a < n; ++a) {
      auto v = g.table_[a * n + b];
      if (seen[v]) throw InputError("table column " + std::to_string(b) + " repeats an entry");
      seen[v] = true;
    }
  }

  std::optional<GroupElement> identity;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = g.table_[e * n + x] == x && g.table_[x * n + e] == x;
    if (ok) {
      identity = static_cast<GroupElement>(e);
      break;
    }
  }
  if (!identity) throw InputError("table has no two-sided identity");
  g.identity_ = *identity;

  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    return g.table_[g.table_[a * n + b] * n + c] == g.table_[a * n + g.table_[b * n + c]];
  };
  if (n <= 200) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (!assoc(a, b, c)) throw InputError("multiplication table is not associative");
  } else {
    std::uint64_t state = 0x9e3779b97f4a7c15ull;  // deterministic sample
    for (int i = 0; i < 2000000; ++i) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      std::size_t a = (state >> 33) % n, b = (state >> 13) % n, c = state % n;
      if (!assoc(a, b, c)) throw InputError("multiplication table is not associative");
    }
  }

  g.finish_construction();
  return g;
}

void FiniteGroup::finish_construction() {
  const std::size_t n = order_;

  inverse_.assign(n, 0);
  if (kind_ == Kind::Abelian) {
    for (std::size_t a = 0; a < n; ++a) {
      auto ex = exponents(static_cast<GroupElement>(a));
      std::uint64_t idx = 0;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t neg = ex[i] == 0 ? 0 : factors_[i] - ex[i];
        idx += neg * radix_[i];
      }
      inverse_[a] = static_cast<GroupElement>(idx);
    }
  } else {
    std::vector<bool> found(n, false);
    for (GroupElement a = 0; a < n; ++a) {
      if (found[a]) continue;
      for (GroupElement b = 0; b < n; ++b)
        if (mul(a, b) == identity_) {
          if (mul(b, a) != identity_) throw InputError("one-sided inverse in table");
          inverse_[a] = b;
          inverse_[b] = a;
          found[a] = found[b] = true;
          break;
        }
    }
  }

  if (generators_.empty() && kind_ != Kind::Abelian) {
    // Greedy generating chain; each new generator at least doubles the
    // generated subgroup, so this stays small.
    std::vector<bool> known(n, false);
    known[identity_] = true;
    std::size_t known_count = 1;
    for (GroupElement cand = 0; cand < n && known_count < n; ++cand) {
      if (known[cand]) continue;
      generators_.push_back(cand);
      std::deque<GroupElement> queue;
      for (GroupElement x = 0; x < n; ++x)
        if (known[x]) queue.push_back(x);
      while (!queue.empty()) {
        GroupElement cur = queue.front();
        queue.pop_front();
        for (auto gen : generators_) {
          GroupElement next = mul(cur, gen);
          if (!known[next]) {
            known[next] = true;
            ++known_count;
            queue.push_back(next);
          }
        }
      }
    }
  } else if (kind_ == Kind::Abelian) {
    for (std::size_t i = 0; i < factors_.size(); ++i)
      if (factors_[i] > 1) generators_.push_back(static_cast<GroupElement>(radix_[i]));
  }

  if (kind_ != Kind::Abelian) {
    abelian_flag_ = true;
    for (auto a : generators_)
      for (auto b : generators_)
        if (mul(a, b) != mul(b, a)) {
          abelian_flag_ = false;
          break;
        }
  }

  // Conjugacy classes.
  if (abelian_flag_) {
    classes_.resize(n);
    for (GroupElement x = 0; x < n; ++x) {
      classes_[x].representative = x;
      classes_[x].members = {x};
      classes_[x].centralizer_order = n;
    }
  } else {
    std::vector<bool> assigned(n, false);
    for (GroupElement seed = 0; seed < n; ++seed) {
      if (assigned[seed]) continue;
      ConjugacyClass cls;
      std::deque<GroupElement> queue{seed};
      assigned[seed] = true;
      while (!queue.empty()) {
        GroupElement x = queue.front();
        queue.pop_front();
        cls.members.push_back(x);
        for (auto gen : generators_) {
          GroupElement y = conjugate(x, gen);
          if (!assigned[y]) {
            assigned[y] = true;
            queue.push_back(y);
          }
        }
      }
      std::sort(cls.members.begin(), cls.members.end());
      cls.representative = cls.members.front();
      cls.centralizer_order = n / cls.members.size();
      classes_.push_back(std::move(cls));
    }
  }
  std::sort(classes_.begin(), classes_.end(), [this](const ConjugacyClass& a, const ConjugacyClass& b) {
    auto ka = std::tuple(a.size(), element_order(a.representative), a.representative);
    auto kb = std::tuple(b.size(), element_order(b.representative), b.representative);
    return ka < kb;
  });
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (auto m : classes_[c].members) class_of_[m] = static_cast<std::uint32_t>(c);
}

GroupElement FiniteGroup::mul(GroupElement a, GroupElement b) const {
  switch (kind_) {
    case Kind::Abelian: {
      std::uint64_t idx = 0;
      std::uint64_t ra = a, rb = b;
      for (std::size_t i = 0; i < factors_.size(); ++i) {
        std::uint64_t ea = ra / radix_[i], eb = rb / radix_[i];
        ra %= radix_[i];
        rb %= radix_[i];
        idx += ((ea + eb) % factors_[i]) * radix_[i];
      }
      return static_cast<GroupElement>(idx);
    }
    case Kind::Permutation: {
      Permutation prod = perm_compose(perms_[a], perms_[b]);
      auto it = perm_buckets_.find(perm_hash(prod));
      for (auto idx : it->second)
        if (perms_[idx] == prod) return idx;
      throw Error("permutation product escaped the group (internal)");
    }
    case Kind::Table:
      return table_[static_cast<std::size_t>(a) * order_ + b];
  }
  throw Error("unreachable");
}

std::uint64_t FiniteGroup::element_order(GroupElement g) const {
  if (kind_ == Kind::Abelian) {
    auto ex = exponents(g);
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      if (ex[i] == 0) continue;
      r = lcm_u64(r, factors_[i] / std::gcd<std::uint64_t>(ex[i], factors_[i]));
    }
    return r;
  }
  std::uint64_t r = 1;
  GroupElement x = g;
  while (x != identity_) {
    x = mul(x, g);
    ++r;
  }
  return r;
}

std::uint64_t FiniteGroup::centralizer_order(GroupElement g) const {
  if (abelian_flag_) return order_;
  std::uint64_t count = 0;
  for (GroupElement h = 0; h < order_; ++h)
    if (mul(h, g) == mul(g, h)) ++count;
  return count;
}

std::string FiniteGroup::element_name(GroupElement g) const {
  if (g == identity_) return "e";
  switch (kind_) {
    case Kind::Abelian: {
      auto ex = exponents(g);
      std::ostringstream out;
      out << '(';
      for (std::size_t i = 0; i < ex.size(); ++i) {
        if (i) out << ',';
        out << ex[i];
      }
      out << ')';
      return out.str();
    }
    case Kind::Permutation:
      return cycle_notation(perms_[g]);
    case Kind::Table:
      return "g" + std::to_string(g);
  }
  throw Error("unreachable");
}

std::optional<GroupElement> FiniteGroup::find_element(const std::string& name) const {
  if (!name.empty() && name.find_first_not_of("0123456789") == std::string::npos) {
    std::uint64_t idx = std::stoull(name);
    if (idx < order_) return static_cast<GroupElement>(idx);
    return std::nullopt;
  }
  for (GroupElement g = 0; g < order_; ++g)
    if (element_name(g) == name) return g;
  return std::nullopt;
}

const std::vector<std::uint64_t>& FiniteGroup::invariant_factors() const {
  if (kind_ != Kind::Abelian) throw Error("invariant_factors: not an abelian-presented group");
  return factors_;
}

std::vector<std::uint32_t> FiniteGroup::exponents(GroupElement g) const {
  if (kind_ != Kind::Abelian) throw Error("exponents: not an abelian-presented group");
  std::vector<std::uint32_t> ex(factors_.size());
  std::uint64_t r = g;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    ex[i] = static_cast<std::uint32_t>(r / radix_[i]);
    r %= radix_[i];
  }
  return ex;
}

std::uint32_t FiniteGroup::points() const {
  if (kind_ != Kind::Permutation) throw Error("points: not a permutation group");
  return points_;
}

const std::vector<Permutation>& FiniteGroup::permutation_generators() const {
  if (kind_ != Kind::Permutation) throw Error("not a permutation group");
  return input_gens_;
}

const Permutation& FiniteGroup::permutation_of(GroupElement g) const {
  if (kind_ != Kind::Permutation) throw Error("not a permutation group");
  return perms_[g];
}

const std::vector<std::uint32_t>& FiniteGroup::flat_table() const {
  if (kind_ != Kind::Table) throw Error("not a table group");
  return table_;
}

}  // namespace orbichow
