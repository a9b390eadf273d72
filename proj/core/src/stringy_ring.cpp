#include "orbichow/stringy_ring.hpp"

#include "orbichow/errors.hpp"
#include "orbichow/parallel.hpp"
#include "orbichow/twisted_rr.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace orbichow {

namespace {

void normalize_stringy(const BgRing& ring, StringyClass& x) {
  for (auto it = x.terms.begin(); it != x.terms.end();) {
    ring.normalize(it->second);
    if (it->second.empty())
      it = x.terms.erase(it);
    else
      ++it;
  }
}

void accumulate(const BgRing& ring, StringyClass& into, std::size_t sector,
                const EquivariantClass& coeff) {
  auto it = into.terms.find(sector);
  if (it == into.terms.end())
    into.terms.emplace(sector, coeff);
  else
    it->second = ring.add(it->second, coeff);
}

}  // namespace

std::map<std::size_t, Int> bg_product(const FiniteGroup& group, std::size_t class1,
                                      std::size_t class2) {
  const auto& classes = group.conjugacy_classes();
  if (class1 >= classes.size() || class2 >= classes.size())
    throw InputError("bg_product: class index out of range");
  const auto& A = classes[class1].members;
  const auto& B = classes[class2].members;
  const std::uint64_t n = group.order();

  std::map<std::size_t, Int> out;
  std::unordered_set<std::uint64_t> visited;
  visited.reserve(A.size() * B.size());
  const auto key = [n](GroupElement a, GroupElement b) {
    return static_cast<std::uint64_t>(a) * n + b;
  };

  for (const auto seed_a : A) {
    for (const auto seed_b : B) {
      if (visited.count(key(seed_a, seed_b))) continue;

      // Orbit of (a, b) under simultaneous conjugation.
      std::uint64_t orbit_size = 0;
      std::deque<std::pair<GroupElement, GroupElement>> queue{{seed_a, seed_b}};
      visited.insert(key(seed_a, seed_b));
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        ++orbit_size;
        for (const auto g : group.generators()) {
          const auto ca = group.conjugate(a, g);
          const auto cb = group.conjugate(b, g);
          if (visited.insert(key(ca, cb)).second) queue.emplace_back(ca, cb);
        }
      }

      // Stabilizer Z(a) n Z(b) of the pair.
      std::uint64_t stab = 0;
      if (group.is_abelian()) {
        stab = n;
      } else {
        for (GroupElement h = 0; h < n; ++h)
          if (group.mul(h, seed_a) == group.mul(seed_a, h) &&
              group.mul(h, seed_b) == group.mul(seed_b, h))
            ++stab;
      }
      if (orbit_size * stab != n)
        throw std::logic_error("bg_product: orbit-stabilizer mismatch (internal)");

      const auto h = group.mul(seed_a, seed_b);
      const auto out_class = group.class_index_of(h);
      const auto centralizer = classes[out_class].centralizer_order;
      if (centralizer % stab != 0)
        throw std::logic_error("bg_product: stabilizer does not divide C(h) (internal)");
      out[out_class] += centralizer / stab;
    }
  }

  // The orbit weights must reproduce the direct pair count for the class
  // representative; this is what matches the group-algebra class sums.
  std::map<std::size_t, Int> counts;
  for (const auto a : A)
    for (const auto b : B) {
      const auto h = group.mul(a, b);
      const auto k = group.class_index_of(h);
      if (h == classes[k].representative) counts[k] += 1;
    }
  if (counts != out)
    throw std::logic_error("bg_product: orbit weights disagree with pair counts (internal)");
  return out;
}

StringyClass sector_product(const InertiaDecomposition& inertia, const BgRing& ring,
                            std::size_t s1, std::size_t s2) {
  const auto& action = inertia.action();
  const auto& group = action.group();

  if (action.has_characters()) {
    const auto g1 = inertia.sector(s1).representative;
    const auto g2 = inertia.sector(s2).representative;
    const auto h = group.mul(g1, g2);

    const auto degrees = obstruction_degrees(action, g1, g2);
    const auto a1 = action.fractional_exponents(g1);
    const auto a2 = action.fractional_exponents(g2);
    const auto ah = action.fractional_exponents(h);

    EquivariantClass coeff = ring.one();
    for (std::size_t j = 0; j < action.dim(); ++j) {
      const int h1 = degrees[j] == -2 ? 1 : 0;
      // Excess normal direction: V^{g1} n V^{g2} sits inside V^{g1 g2}
      // with one extra direction on coordinates fixed by the product but
      // not the factors.
      const int excess = (ah[j] == 0 && a1[j] != 0) ? 1 : 0;
      const int shift = h1 + excess;
      if (Rational(shift) != a1[j] + a2[j] - ah[j])
        throw std::logic_error("sector_product: degree-shift bookkeeping mismatch (internal)");
      if (shift > 0)
        coeff = ring.mul(coeff, ring.pow(ring.c1(action.characters()[j]),
                                         static_cast<std::uint64_t>(shift)));
    }

    StringyClass out;
    if (!ring.is_zero(coeff)) out.terms.emplace(inertia.sector_of_element(h), std::move(coeff));
    return out;
  }

  if (action.dim() == 0) {
    const auto constants =
        bg_product(group, inertia.sector(s1).class_index, inertia.sector(s2).class_index);
    StringyClass out;
    for (const auto& [cls, c] : constants)
      out.terms.emplace(inertia.sector_of_class(cls), ring.constant(c));
    return out;
  }

  throw InputError(
      "ring products need dim 0 (any group) or an abelian diagonal action; "
      "per-class eigen data only supports ages and Poincare data");
}

StringyClass stringy_product(const InertiaDecomposition& inertia, const BgRing& ring,
                             const StringyClass& x, const StringyClass& y) {
  StringyClass out;
  for (const auto& [s, cs] : x.terms)
    for (const auto& [t, ct] : y.terms) {
      const auto base = sector_product(inertia, ring, s, t);
      const auto c = ring.mul(cs, ct);
      for (const auto& [u, cu] : base.terms) accumulate(ring, out, u, ring.mul(c, cu));
    }
  normalize_stringy(ring, out);
  return out;
}

BgRing coefficient_ring(const LinearAction& action) {
  if (action.has_characters()) return BgRing(action.group().invariant_factors());
  return BgRing::integers();
}

std::string instance_signature(const LinearAction& action) {
  const auto& group = action.group();
  std::ostringstream s;
  switch (group.kind()) {
    case FiniteGroup::Kind::Abelian: {
      s << "abelian[";
      const auto& f = group.invariant_factors();
      for (std::size_t i = 0; i < f.size(); ++i) s << (i ? "," : "") << f[i];
      s << "]";
      break;
    }
    case FiniteGroup::Kind::Permutation: {
      s << "perm[" << group.points();
      for (const auto& gen : group.permutation_generators()) s << ";" << cycle_notation(gen);
      s << "]";
      break;
    }
    case FiniteGroup::Kind::Table: {
      s << "table[";
      const auto& t = group.flat_table();
      for (std::size_t i = 0; i < t.size(); ++i) s << (i ? "," : "") << t[i];
      s << "]";
      break;
    }
  }
  s << ";dim=" << action.dim();
  if (action.kind() == LinearAction::Kind::AbelianDiagonal) {
    s << ";chars=[";
    const auto& rows = action.characters();
    for (std::size_t j = 0; j < rows.size(); ++j) {
      if (j) s << "|";
      for (std::size_t i = 0; i < rows[j].size(); ++i) s << (i ? "," : "") << rows[j][i];
    }
    s << "]";
  } else {
    s << ";eigen={";
    bool first = true;
    for (const auto& [cls, pairs] : action.class_eigen_data()) {
      if (!first) s << ";";
      first = false;
      s << cls << ":";
      for (std::size_t j = 0; j < pairs.size(); ++j)
        s << (j ? "," : "") << pairs[j].k << "/" << pairs[j].r;
    }
    s << "}";
  }
  return s.str();
}

RingTable ring_table(std::shared_ptr<const InertiaDecomposition> inertia, std::size_t max_basis) {
  if (!inertia) throw InputError("ring_table: missing inertia decomposition");
  const auto& action = inertia->action();
  if (action.dim() > 0 && !action.has_characters())
    throw InputError(
        "ring products need dim 0 (any group) or an abelian diagonal action; "
        "per-class eigen data only supports ages and Poincare data");
  const std::size_t n = inertia->size();
  if (n > max_basis)
    throw BoundError("ring table basis " + std::to_string(n) + " exceeds bound " +
                     std::to_string(max_basis));

  RingTable table;
  table.inertia = inertia;
  table.coeff_ring = coefficient_ring(action);
  table.instance_hash = fnv1a64_hex(instance_signature(action));
  table.entries.resize(n * n);
  parallel_for(n * n, [&](std::size_t idx) {
    table.entries[idx] = sector_product(*inertia, table.coeff_ring, idx / n, idx % n);
  });
  return table;
}

StringyClass table_product(const RingTable& table, const StringyClass& x, const StringyClass& y) {
  const auto& ring = table.coeff_ring;
  StringyClass out;
  for (const auto& [s, cs] : x.terms)
    for (const auto& [t, ct] : y.terms) {
      const auto c = ring.mul(cs, ct);
      for (const auto& [u, cu] : table.product(s, t).terms)
        accumulate(ring, out, u, ring.mul(c, cu));
    }
  normalize_stringy(ring, out);
  return out;
}

AssociativityReport verify_associativity(const RingTable& table) {
  const std::size_t n = table.size();
  const auto basis = [&](std::size_t i) {
    StringyClass b;
    b.terms.emplace(i, table.coeff_ring.one());
    return b;
  };

  std::vector<std::optional<std::array<std::size_t, 3>>> row_failure(n);
  parallel_for(
      n,
      [&](std::size_t i) {
        for (std::size_t j = 0; j < n && !row_failure[i]; ++j) {
          const auto& pij = table.product(i, j);
          for (std::size_t k = 0; k < n; ++k) {
            const auto left = table_product(table, pij, basis(k));
            const auto right = table_product(table, basis(i), table.product(j, k));
            if (!(left == right)) {
              row_failure[i] = {{i, j, k}};
              break;
            }
          }
        }
      },
      /*min_parallel=*/8);

  AssociativityReport report;
  report.triples_checked = static_cast<std::uint64_t>(n) * n * n;
  for (const auto& failure : row_failure)
    if (failure) {
      report.ok = false;
      report.counterexample = failure;
      report.triples_checked = 0;  // counts are meaningless on failure
      break;
    }
  return report;
}

AssociativityReport verify_associativity_random(const RingTable& table, std::size_t count,
                                                std::uint64_t seed) {
  const auto& inertia = *table.inertia;
  const auto& ring = table.coeff_ring;
  std::mt19937_64 rng(seed);

  AssociativityReport report;
  for (std::size_t trial = 0; trial < count; ++trial) {
    const auto x = random_stringy_class(inertia, ring, rng);
    const auto y = random_stringy_class(inertia, ring, rng);
    const auto z = random_stringy_class(inertia, ring, rng);
    const auto left = stringy_product(inertia, ring, stringy_product(inertia, ring, x, y), z);
    const auto right = stringy_product(inertia, ring, x, stringy_product(inertia, ring, y, z));
    if (!(left == right)) {
      report.ok = false;
      report.counterexample = {{trial, 0, 0}};
      return report;
    }
  }
  report.triples_checked = count;
  return report;
}

bool check_identity(const RingTable& table) {
  const std::size_t u = table.inertia->untwisted_index();
  for (std::size_t i = 0; i < table.size(); ++i) {
    StringyClass expected;
    expected.terms.emplace(i, table.coeff_ring.one());
    if (!(table.product(u, i) == expected) || !(table.product(i, u) == expected)) return false;
  }
  return true;
}

bool check_commutativity(const RingTable& table) {
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (!(table.product(i, j) == table.product(j, i))) return false;
  return true;
}

bool check_graded_products(const RingTable& table) {
  const auto& inertia = *table.inertia;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = 0; j < table.size(); ++j) {
      const auto& p = table.product(i, j);
      if (p.empty()) continue;
      const auto g = grade(inertia, p);
      if (!g || *g != inertia.sector(i).age + inertia.sector(j).age) return false;
    }
  return true;
}

std::optional<Rational> grade(const InertiaDecomposition& inertia, const StringyClass& x) {
  std::optional<Rational> degree;
  for (const auto& [s, coeff] : x.terms) {
    const auto& age = inertia.sector(s).age;
    for (const auto& [mono, c] : coeff.terms) {
      const Rational total = age + monomial_degree(mono);
      if (!degree)
        degree = total;
      else if (*degree != total)
        return std::nullopt;
    }
  }
  return degree ? *degree : Rational(0);
}

std::map<Rational, std::uint64_t> poincare_polynomial(const InertiaDecomposition& inertia) {
  std::map<Rational, std::uint64_t> counts;
  for (const auto& s : inertia.sectors()) ++counts[s.age];
  return counts;
}

StringyClass random_stringy_class(const InertiaDecomposition& inertia, const BgRing& ring,
                                  std::mt19937_64& rng) {
  const std::size_t n = inertia.size();
  const std::size_t m = ring.generator_count();
  StringyClass out;
  const std::size_t sector_count = 1 + rng() % std::min<std::size_t>(n, 3);
  for (std::size_t s = 0; s < sector_count; ++s) {
    const std::size_t sector = rng() % n;
    EquivariantClass coeff;
    const std::size_t monomials = 1 + rng() % 3;
    for (std::size_t t = 0; t < monomials; ++t) {
      Monomial mono(m, 0u);
      for (std::size_t i = 0; i < m; ++i) mono[i] = static_cast<std::uint32_t>(rng() % 3);
      coeff.terms[mono] += static_cast<std::int64_t>(rng() % 7);
    }
    ring.normalize(coeff);
    if (!coeff.empty()) accumulate(ring, out, sector, coeff);
  }
  normalize_stringy(ring, out);
  return out;
}

}  // namespace orbichow
