#include "orbichow/action.hpp"

#include "orbichow/errors.hpp"

#include <utility>

namespace orbichow {

LinearAction LinearAction::abelian_diagonal(std::shared_ptr<const FiniteGroup> group,
                                            std::size_t dim,
                                            std::vector<std::vector<std::int64_t>> characters) {
  if (!group) throw InputError("action needs a group");
  if (group->kind() != FiniteGroup::Kind::Abelian)
    throw InputError("character matrices attach to an abelian (invariant-factor) group spec");
  const auto& factors = group->invariant_factors();
  if (characters.size() != dim)
    throw InputError("character matrix must have one row per coordinate");
  for (auto& row : characters) {
    if (row.size() != factors.size())
      throw InputError("character row length must match the number of invariant factors");
    for (std::size_t i = 0; i < row.size(); ++i)
      row[i] = mod_floor(row[i], static_cast<std::int64_t>(factors[i]));
  }
  LinearAction a;
  a.kind_ = Kind::AbelianDiagonal;
  a.group_ = std::move(group);
  a.dim_ = dim;
  a.characters_ = std::move(characters);
  return a;
}

LinearAction LinearAction::class_eigen(std::shared_ptr<const FiniteGroup> group,
                                       std::size_t dim,
                                       std::map<std::size_t, std::vector<EigenPair>> data) {
  if (!group) throw InputError("action needs a group");
  const auto& classes = group->conjugacy_classes();
  for (const auto& [cls, pairs] : data) {
    if (cls >= classes.size()) throw InputError("class_eigen: class index out of range");
    if (pairs.size() != dim) throw InputError("class_eigen: need one (k,r) pair per coordinate");
    const auto r = classes[cls].representative;
    const auto order = static_cast<std::int64_t>(group->element_order(r));
    for (const auto& p : pairs) {
      if (p.r != order)
        throw InputError("class_eigen: r must equal the order of class representative " +
                         group->element_name(r));
      if (p.k < 0 || p.k >= p.r) throw InputError("class_eigen: need 0 <= k < r");
    }
  }
  LinearAction a;
  a.kind_ = Kind::ClassEigen;
  a.group_ = std::move(group);
  a.dim_ = dim;
  a.class_eigen_ = std::move(data);
  return a;
}

LinearAction LinearAction::point(std::shared_ptr<const FiniteGroup> group) {
  if (group && group->kind() == FiniteGroup::Kind::Abelian)
    return abelian_diagonal(std::move(group), 0, {});
  return class_eigen(std::move(group), 0, {});
}

std::vector<EigenPair> LinearAction::eigen_exponents(GroupElement g) const {
  if (kind_ == Kind::ClassEigen) {
    if (dim_ == 0) return {};
    auto it = class_eigen_.find(group_->class_index_of(g));
    if (it == class_eigen_.end())
      throw InputError("no eigen data supplied for the class of " + group_->element_name(g));
    return it->second;
  }

  const auto& factors = group_->invariant_factors();
  const auto ex = group_->exponents(g);
  const auto r = static_cast<std::int64_t>(group_->element_order(g));
  std::vector<EigenPair> out;
  out.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j) {
    // chi_j(g) as an element of (1/r)Z / Z, evaluated exactly.
    Rational frac = 0;
    for (std::size_t i = 0; i < factors.size(); ++i)
      frac += Rational(characters_[j][i] * static_cast<std::int64_t>(ex[i]),
                       static_cast<std::int64_t>(factors[i]));
    Rational scaled = frac * r;
    if (!is_integer(scaled))
      throw Error("character value not in (1/r)Z (internal)");
    Int k = rational_num(scaled) % r;
    if (k < 0) k += r;
    out.push_back({static_cast<std::int64_t>(k), r});
  }
  return out;
}

std::vector<Rational> LinearAction::fractional_exponents(GroupElement g) const {
  auto pairs = eigen_exponents(g);
  std::vector<Rational> out;
  out.reserve(pairs.size());
  for (const auto& p : pairs) out.push_back(p.fraction());
  return out;
}

AgeVector LinearAction::age(GroupElement g) const {
  AgeVector v;
  v.per_coordinate = fractional_exponents(g);
  for (const auto& a : v.per_coordinate) v.total += a;
  return v;
}

Rational LinearAction::age_total(GroupElement g) const { return age(g).total; }

std::size_t LinearAction::fixed_subspace_dim(GroupElement g) const {
  std::size_t fixed = 0;
  for (const auto& p : eigen_exponents(g))
    if (p.k == 0) ++fixed;
  return fixed;
}

}  // namespace orbichow
