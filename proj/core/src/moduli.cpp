#include "orbichow/moduli.hpp"

#include "orbichow/errors.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace orbichow {

std::vector<ModuliComponent> enumerate_components(const FiniteGroup& group,
                                                  std::uint64_t max_order) {
  const std::uint64_t n = group.order();
  if (n > max_order)
    throw BoundError("moduli enumeration bound exceeded: |G| = " + std::to_string(n) + " > " +
                     std::to_string(max_order));

  std::vector<ModuliComponent> components;
  std::vector<bool> visited(n * n, false);
  const auto key = [n](GroupElement a, GroupElement b) {
    return static_cast<std::size_t>(a) * n + b;
  };

  for (GroupElement g1 = 0; g1 < n; ++g1) {
    for (GroupElement g2 = 0; g2 < n; ++g2) {
      if (visited[key(g1, g2)]) continue;

      std::vector<std::pair<GroupElement, GroupElement>> orbit;
      std::deque<std::pair<GroupElement, GroupElement>> queue{{g1, g2}};
      visited[key(g1, g2)] = true;
      while (!queue.empty()) {
        auto [a, b] = queue.front();
        queue.pop_front();
        orbit.emplace_back(a, b);
        for (const auto g : group.generators()) {
          const auto ca = group.conjugate(a, g);
          const auto cb = group.conjugate(b, g);
          if (!visited[key(ca, cb)]) {
            visited[key(ca, cb)] = true;
            queue.emplace_back(ca, cb);
          }
        }
      }
      const auto rep = *std::min_element(orbit.begin(), orbit.end());

      ModuliComponent c;
      const auto a = rep.first, b = rep.second;
      const auto g3 = group.inverse(group.mul(a, b));
      c.triple = {a, b, g3};
      c.orbit_size = orbit.size();
      if (group.is_abelian()) {
        c.aut_order = n;
      } else {
        c.aut_order = 0;
        for (GroupElement h = 0; h < n; ++h)
          if (group.mul(h, a) == group.mul(a, h) && group.mul(h, b) == group.mul(b, h))
            ++c.aut_order;
      }
      if (c.orbit_size * c.aut_order != n)
        throw std::logic_error("moduli: orbit-stabilizer mismatch (internal)");
      c.eval_sectors = {group.class_index_of(a), group.class_index_of(b),
                        group.class_index_of(group.inverse(g3))};
      c.node_indices = {group.element_order(a), group.element_order(b), group.element_order(g3)};
      components.push_back(std::move(c));
    }
  }

  std::sort(components.begin(), components.end(),
            [](const ModuliComponent& x, const ModuliComponent& y) { return x.triple < y.triple; });
  return components;
}

MassCheck mass_check(const FiniteGroup& group, const std::vector<ModuliComponent>& components) {
  MassCheck check;
  check.rhs = Int(group.order()) * group.order();
  check.lhs = 0;
  for (const auto& c : components) check.lhs += Int(group.order()) / c.aut_order;
  check.ok = check.lhs == check.rhs;
  return check;
}

std::optional<std::uint64_t> gluing_index(const ModuliComponent& c1, const ModuliComponent& c2) {
  // eval_sectors[2] already carries the iota twist (the class of g3^-1),
  // so balanced gluing is a direct sector match against marking 1 of c2.
  if (c1.eval_sectors[2] != c2.eval_sectors[0]) return std::nullopt;
  const auto r = c1.node_indices[2];
  if (r != c2.node_indices[0])
    throw std::logic_error("gluing_index: matched sectors with different indices (internal)");
  return r;
}

std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Int>>
bg_constants_from_components(const FiniteGroup& group,
                             const std::vector<ModuliComponent>& components) {
  const auto& classes = group.conjugacy_classes();
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Int>> constants;
  for (const auto& c : components) {
    const auto out_class = c.eval_sectors[2];
    const auto centralizer = classes[out_class].centralizer_order;
    if (centralizer % c.aut_order != 0)
      throw std::logic_error("moduli: aut order does not divide C(h) (internal)");
    constants[{c.eval_sectors[0], c.eval_sectors[1]}][out_class] += centralizer / c.aut_order;
  }
  return constants;
}

}  // namespace orbichow
