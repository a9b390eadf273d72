#pragma once

// JSON parsing and deterministic serialization for every external
// surface: instance specs (group + action), sector tables, ring tables,
// Poincare data, moduli components, twisted line-bundle data and Picard
// data. Emitted JSON is byte-stable: objects serialize with sorted keys
// and every array is filled in a canonical order.
//
// Input schemas (one group form per document, "action" optional):
//   {"abelian": [n1, ...], "action": {...}}
//   {"permutations": [[[1,2],[3,4]], ...], "points": N}   (1-based cycles)
//   {"table": [[...], ...]}                               (0-based indices)
// Actions:
//   {"dim": n, "characters": [[c11, ..., c1m], ...]}      (abelian groups)
//   {"dim": n, "class_eigen": {"<class label>": [[k, r], ...], ...}}

#include "orbichow/action.hpp"
#include "orbichow/group.hpp"
#include "orbichow/inertia.hpp"
#include "orbichow/moduli.hpp"
#include "orbichow/stringy_ring.hpp"
#include "orbichow/twisted_rr.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbichow {

struct Instance {
  std::shared_ptr<const FiniteGroup> group;
  std::shared_ptr<const LinearAction> action;
};

Instance parse_instance(const nlohmann::json& doc,
                        std::uint64_t max_group_order = FiniteGroup::kDefaultOrderBound);

nlohmann::json canonical_group_json(const FiniteGroup& group);
/// Group keys plus an "action" object when the action carries data.
nlohmann::json canonical_instance_json(const LinearAction& action);

nlohmann::json int_to_json(const Int& v);
Int int_from_json(const nlohmann::json& j);
Rational rational_from_json(const nlohmann::json& j);

std::string monomial_key(const Monomial& m);
Monomial monomial_from_key(const std::string& key, std::size_t generators);
nlohmann::json equivariant_to_json(const EquivariantClass& c);
EquivariantClass equivariant_from_json(const BgRing& ring, const nlohmann::json& j);
/// Human form, e.g. "2*t1*t2^2 + 3"; "0" for the zero class.
std::string equivariant_to_text(const EquivariantClass& c);

nlohmann::json sector_to_json(const InertiaDecomposition& inertia, std::size_t index);
nlohmann::json inertia_to_json(const InertiaDecomposition& inertia);
std::string inertia_to_text(const InertiaDecomposition& inertia);

nlohmann::json stringy_to_json(const InertiaDecomposition& inertia, const StringyClass& x);
nlohmann::json table_to_json(const RingTable& table);
RingTable table_from_json(const nlohmann::json& doc,
                          std::uint64_t max_group_order = FiniteGroup::kDefaultOrderBound);
std::string table_to_text(const RingTable& table);

nlohmann::json poincare_to_json(const InertiaDecomposition& inertia);
std::string poincare_to_text(const InertiaDecomposition& inertia);

nlohmann::json moduli_to_json(const FiniteGroup& group,
                              const std::vector<ModuliComponent>& components,
                              const MassCheck& mass);
std::string moduli_to_text(const FiniteGroup& group,
                           const std::vector<ModuliComponent>& components, const MassCheck& mass);

/// {"degree": d, "monodromies": [[k,r],[k,r],[k,r]]}; degree is a JSON
/// number or an exact "p/q" string.
TwistedLineBundle bundle_from_json(const nlohmann::json& doc);

/// {"free_rank": k, "torsion": [...], "element": [...]}; entries may be
/// numbers or decimal strings.
PicardGroupData picard_from_json(const nlohmann::json& doc);

}  // namespace orbichow
