#include "orbichow/inertia.hpp"

#include "orbichow/errors.hpp"

#include <algorithm>
#include <tuple>
#include <utility>

namespace orbichow {

InertiaDecomposition::InertiaDecomposition(std::shared_ptr<const LinearAction> action)
    : action_(std::move(action)) {
  if (!action_) throw InputError("inertia needs an action");
  const auto& group = action_->group();
  const auto& classes = group.conjugacy_classes();

  sectors_.reserve(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto rep = classes[c].representative;
    Sector s;
    s.class_index = c;
    s.representative = rep;
    s.label = group.element_name(rep);
    s.index_r = group.element_order(rep);
    s.fixed_dim = action_->fixed_subspace_dim(rep);
    s.age = action_->age_total(rep);
    s.aut_order_x1 = classes[c].centralizer_order;
    if (s.aut_order_x1 % s.index_r != 0)
      throw Error("sector automorphism order not divisible by its index (internal)");
    s.aut_order_x1bar = s.aut_order_x1 / s.index_r;
    s.class_size = classes[c].size();
    s.untwisted = rep == group.identity();
    sectors_.push_back(std::move(s));
  }

  std::sort(sectors_.begin(), sectors_.end(), [](const Sector& a, const Sector& b) {
    return std::tuple(!a.untwisted, a.age, a.index_r, a.representative) <
           std::tuple(!b.untwisted, b.age, b.index_r, b.representative);
  });

  by_class_.assign(classes.size(), 0);
  for (std::size_t i = 0; i < sectors_.size(); ++i) {
    by_class_[sectors_[i].class_index] = i;
    if (sectors_[i].untwisted) untwisted_ = i;
  }

  iota_.resize(sectors_.size());
  for (std::size_t i = 0; i < sectors_.size(); ++i) {
    const auto inv = group.inverse(sectors_[i].representative);
    iota_[i] = by_class_[group.class_index_of(inv)];
  }
  for (std::size_t i = 0; i < sectors_.size(); ++i)
    if (iota_[iota_[i]] != i) throw Error("iota is not an involution (internal)");
}

std::vector<Sector> inertia_components(const std::shared_ptr<const LinearAction>& action) {
  return InertiaDecomposition(action).sectors();
}

PicardGroupData PicardGroupData::make(std::size_t free_rank, std::vector<Int> torsion,
                                      std::vector<Int> element) {
  for (const auto& t : torsion)
    if (t < 1) throw InputError("torsion invariant factors must be >= 1");
  if (element.size() != free_rank + torsion.size())
    throw InputError("Picard element length must be free_rank + #torsion");
  PicardGroupData p{free_rank, std::move(torsion), std::move(element)};
  for (std::size_t i = 0; i < p.torsion.size(); ++i) {
    Int& c = p.element[free_rank + i];
    c %= p.torsion[i];
    if (c < 0) c += p.torsion[i];
  }
  return p;
}

bool root_section_exists(const PicardGroupData& picard, const Int& r) {
  if (r < 1) throw InputError("root index r must be >= 1");
  for (std::size_t i = 0; i < picard.free_rank; ++i)
    if (picard.element[i] % r != 0) return false;
  for (std::size_t i = 0; i < picard.torsion.size(); ++i) {
    // r*x = c (mod t) is solvable iff gcd(r,t) divides c.
    const Int g = boost::multiprecision::gcd(r, picard.torsion[i]);
    if (picard.element[picard.free_rank + i] % g != 0) return false;
  }
  return true;
}

}  // namespace orbichow
