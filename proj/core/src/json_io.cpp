#include "orbichow/json_io.hpp"

#include "orbichow/errors.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

namespace orbichow {

using nlohmann::json;

namespace {

const json& require_key(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::uint64_t uint_from_json(const json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(std::string(what) + " must be a nonnegative integer");
  return j.get<std::uint64_t>();
}

std::vector<std::vector<std::uint32_t>> cycles_of(const Permutation& p) {
  std::vector<std::vector<std::uint32_t>> cycles;
  std::vector<bool> done(p.images.size(), false);
  for (std::uint32_t start = 0; start < p.images.size(); ++start) {
    if (done[start] || p.images[start] == start) continue;
    std::vector<std::uint32_t> cyc;
    std::uint32_t x = start;
    do {
      cyc.push_back(x + 1);
      done[x] = true;
      x = p.images[x];
    } while (x != start);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

std::shared_ptr<const FiniteGroup> parse_group(const json& doc, std::uint64_t max_group_order) {
  const int forms = static_cast<int>(doc.contains("abelian")) +
                    static_cast<int>(doc.contains("permutations")) +
                    static_cast<int>(doc.contains("table"));
  if (forms != 1)
    throw InputError(
        "group spec needs exactly one of \"abelian\", \"permutations\"+\"points\", \"table\"");

  if (doc.contains("abelian")) {
    const auto& arr = doc["abelian"];
    if (!arr.is_array()) throw InputError("\"abelian\" must be an array of invariant factors");
    std::vector<std::uint64_t> factors;
    for (const auto& v : arr) factors.push_back(uint_from_json(v, "invariant factor"));
    return std::make_shared<FiniteGroup>(FiniteGroup::abelian(std::move(factors), max_group_order));
  }

  if (doc.contains("permutations")) {
    const auto points = static_cast<std::uint32_t>(uint_from_json(require_key(doc, "points"), "points"));
    const auto& gens_json = doc["permutations"];
    if (!gens_json.is_array()) throw InputError("\"permutations\" must be an array of generators");
    std::vector<Permutation> gens;
    for (const auto& gen : gens_json) {
      if (!gen.is_array()) throw InputError("each generator must be an array of cycles");
      std::vector<std::vector<std::uint32_t>> cycles;
      for (const auto& cyc : gen) {
        if (!cyc.is_array()) throw InputError("each cycle must be an array of 1-based points");
        std::vector<std::uint32_t> c;
        for (const auto& v : cyc) c.push_back(static_cast<std::uint32_t>(uint_from_json(v, "cycle point")));
        cycles.push_back(std::move(c));
      }
      gens.push_back(permutation_from_cycles(cycles, points));
    }
    return std::make_shared<FiniteGroup>(
        FiniteGroup::from_permutations(gens, points, max_group_order));
  }

  const auto& rows_json = doc["table"];
  if (!rows_json.is_array()) throw InputError("\"table\" must be an array of rows");
  std::vector<std::vector<std::uint32_t>> rows;
  for (const auto& row : rows_json) {
    if (!row.is_array()) throw InputError("each table row must be an array");
    std::vector<std::uint32_t> r;
    for (const auto& v : row) r.push_back(static_cast<std::uint32_t>(uint_from_json(v, "table entry")));
    rows.push_back(std::move(r));
  }
  return std::make_shared<FiniteGroup>(FiniteGroup::from_table(rows, max_group_order));
}

std::size_t class_index_from_label(const FiniteGroup& group, const std::string& label) {
  if (!label.empty() && label.find_first_not_of("0123456789") == std::string::npos) {
    const auto idx = std::stoull(label);
    if (idx >= group.conjugacy_classes().size())
      throw InputError("class index " + label + " out of range");
    return idx;
  }
  const auto elem = group.find_element(label);
  if (!elem) throw InputError("unknown class label \"" + label + "\"");
  return group.class_index_of(*elem);
}

std::shared_ptr<const LinearAction> parse_action(std::shared_ptr<const FiniteGroup> group,
                                                 const json& doc) {
  if (!doc.contains("action"))
    return std::make_shared<LinearAction>(LinearAction::point(std::move(group)));

  const auto& a = doc["action"];
  if (!a.is_object()) throw InputError("\"action\" must be an object");
  const auto dim = static_cast<std::size_t>(uint_from_json(require_key(a, "dim"), "dim"));
  if (a.contains("characters") && a.contains("class_eigen"))
    throw InputError("action takes \"characters\" or \"class_eigen\", not both");

  if (a.contains("characters")) {
    const auto& rows = a["characters"];
    if (!rows.is_array()) throw InputError("\"characters\" must be an array of rows");
    std::vector<std::vector<std::int64_t>> characters;
    for (const auto& row : rows) {
      if (!row.is_array()) throw InputError("each character row must be an array");
      std::vector<std::int64_t> r;
      for (const auto& v : row) {
        if (!v.is_number_integer()) throw InputError("character entries must be integers");
        r.push_back(v.get<std::int64_t>());
      }
      characters.push_back(std::move(r));
    }
    return std::make_shared<LinearAction>(
        LinearAction::abelian_diagonal(std::move(group), dim, std::move(characters)));
  }

  if (a.contains("class_eigen")) {
    const auto& eig = a["class_eigen"];
    if (!eig.is_object()) throw InputError("\"class_eigen\" must be an object keyed by class label");
    std::map<std::size_t, std::vector<EigenPair>> data;
    for (const auto& [label, pairs_json] : eig.items()) {
      const auto cls = class_index_from_label(*group, label);
      if (!pairs_json.is_array()) throw InputError("class eigen data must be an array of [k,r]");
      std::vector<EigenPair> pairs;
      for (const auto& p : pairs_json) {
        if (!p.is_array() || p.size() != 2) throw InputError("eigen pair must be [k, r]");
        pairs.push_back({p[0].get<std::int64_t>(), p[1].get<std::int64_t>()});
      }
      if (!data.emplace(cls, std::move(pairs)).second)
        throw InputError("duplicate class label in class_eigen");
    }
    return std::make_shared<LinearAction>(
        LinearAction::class_eigen(std::move(group), dim, std::move(data)));
  }

  if (dim != 0)
    throw InputError("action with dim > 0 needs \"characters\" or \"class_eigen\"");
  return std::make_shared<LinearAction>(LinearAction::point(std::move(group)));
}

json rational_to_json(const Rational& q) { return to_string(q); }

}  // namespace

Instance parse_instance(const nlohmann::json& doc, std::uint64_t max_group_order) {
  if (!doc.is_object()) throw InputError("instance spec must be a JSON object");
  Instance inst;
  inst.group = parse_group(doc, max_group_order);
  inst.action = parse_action(inst.group, doc);
  return inst;
}

json canonical_group_json(const FiniteGroup& group) {
  json out = json::object();
  switch (group.kind()) {
    case FiniteGroup::Kind::Abelian:
      out["abelian"] = group.invariant_factors();
      break;
    case FiniteGroup::Kind::Permutation: {
      json gens = json::array();
      for (const auto& g : group.permutation_generators()) gens.push_back(cycles_of(g));
      out["permutations"] = std::move(gens);
      out["points"] = group.points();
      break;
    }
    case FiniteGroup::Kind::Table: {
      const auto& flat = group.flat_table();
      const auto n = group.order();
      json rows = json::array();
      for (std::uint64_t a = 0; a < n; ++a) {
        json row = json::array();
        for (std::uint64_t b = 0; b < n; ++b) row.push_back(flat[a * n + b]);
        rows.push_back(std::move(row));
      }
      out["table"] = std::move(rows);
      break;
    }
  }
  return out;
}

json canonical_instance_json(const LinearAction& action) {
  json out = canonical_group_json(action.group());
  if (action.kind() == LinearAction::Kind::AbelianDiagonal) {
    if (action.dim() > 0) {
      json a;
      a["dim"] = action.dim();
      a["characters"] = action.characters();
      out["action"] = std::move(a);
    }
  } else if (action.dim() > 0 || !action.class_eigen_data().empty()) {
    json eig = json::object();
    const auto& classes = action.group().conjugacy_classes();
    for (const auto& [cls, pairs] : action.class_eigen_data()) {
      json arr = json::array();
      for (const auto& p : pairs) arr.push_back(json::array({p.k, p.r}));
      eig[action.group().element_name(classes[cls].representative)] = std::move(arr);
    }
    json a;
    a["dim"] = action.dim();
    a["class_eigen"] = std::move(eig);
    out["action"] = std::move(a);
  }
  return out;
}

json int_to_json(const Int& v) {
  static const Int kMin = std::numeric_limits<std::int64_t>::min();
  static const Int kMax = std::numeric_limits<std::int64_t>::max();
  if (v >= kMin && v <= kMax) return v.convert_to<std::int64_t>();
  return v.str();
}

Int int_from_json(const json& j) {
  if (j.is_number_unsigned()) return Int(j.get<std::uint64_t>());
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::runtime_error&) {
      throw InputError("cannot parse integer \"" + j.get<std::string>() + "\"");
    }
  }
  throw InputError("expected an integer (number or decimal string)");
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer() || j.is_number_unsigned()) return Rational(int_from_json(j));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  throw InputError("expected a rational (integer or \"p/q\" string)");
}

std::string monomial_key(const Monomial& m) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out << ',';
    out << m[i];
  }
  out << ']';
  return out.str();
}

Monomial monomial_from_key(const std::string& key, std::size_t generators) {
  if (key.size() < 2 || key.front() != '[' || key.back() != ']')
    throw InputError("monomial key must look like \"[a,b,...]\"");
  Monomial m;
  std::string body = key.substr(1, key.size() - 2);
  if (!body.empty()) {
    std::istringstream in(body);
    std::string part;
    while (std::getline(in, part, ',')) {
      if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
        throw InputError("bad monomial exponent \"" + part + "\"");
      m.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    }
  }
  if (m.size() != generators)
    throw InputError("monomial key has " + std::to_string(m.size()) + " exponents, ring has " +
                     std::to_string(generators) + " generators");
  return m;
}

json equivariant_to_json(const EquivariantClass& c) {
  json out = json::object();
  for (const auto& [mono, coeff] : c.terms) out[monomial_key(mono)] = int_to_json(coeff);
  return out;
}

EquivariantClass equivariant_from_json(const BgRing& ring, const json& j) {
  if (!j.is_object()) throw InputError("equivariant class must be a JSON object");
  EquivariantClass c;
  for (const auto& [key, value] : j.items())
    c.terms[monomial_from_key(key, ring.generator_count())] = int_from_json(value);
  ring.normalize(c);
  return c;
}

std::string equivariant_to_text(const EquivariantClass& c) {
  if (c.terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [mono, coeff] : c.terms) {
    if (!first) out << " + ";
    first = false;
    const bool constant = monomial_degree(mono) == 0;
    if (constant || coeff != 1) {
      out << coeff.str();
      if (!constant) out << "*";
    }
    bool star = false;
    for (std::size_t i = 0; i < mono.size(); ++i) {
      if (mono[i] == 0) continue;
      if (star) out << "*";
      star = true;
      out << "t" << (i + 1);
      if (mono[i] > 1) out << "^" << mono[i];
    }
  }
  return out.str();
}

json sector_to_json(const InertiaDecomposition& inertia, std::size_t index) {
  const auto& s = inertia.sector(index);
  json out;
  out["label"] = s.label;
  out["class_size"] = s.class_size;
  out["index_r"] = s.index_r;
  out["fixed_dim"] = s.fixed_dim;
  out["age"] = rational_to_json(s.age);
  out["aut_order_X1"] = s.aut_order_x1;
  out["aut_order_X1bar"] = s.aut_order_x1bar;
  out["untwisted"] = s.untwisted;
  out["iota"] = inertia.sector(inertia.iota(index)).label;
  return out;
}

json inertia_to_json(const InertiaDecomposition& inertia) {
  json out;
  out["instance"] = canonical_instance_json(inertia.action());
  out["hash"] = fnv1a64_hex(instance_signature(inertia.action()));
  out["dim"] = inertia.action().dim();
  out["group_order"] = inertia.group().order();
  json sectors = json::array();
  for (std::size_t i = 0; i < inertia.size(); ++i) sectors.push_back(sector_to_json(inertia, i));
  out["sectors"] = std::move(sectors);
  return out;
}

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::string render_rows(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::ostringstream out;
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out << "  ";
      out << pad(row[i], i + 1 == row.size() ? 0 : width[i]);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace

std::string inertia_to_text(const InertiaDecomposition& inertia) {
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"sector", "age", "r", "fixed", "|class|", "autX1", "autX1bar", "iota"});
  for (std::size_t i = 0; i < inertia.size(); ++i) {
    const auto& s = inertia.sector(i);
    rows.push_back({s.label, to_string(s.age), std::to_string(s.index_r),
                    std::to_string(s.fixed_dim), std::to_string(s.class_size),
                    std::to_string(s.aut_order_x1), std::to_string(s.aut_order_x1bar),
                    inertia.sector(inertia.iota(i)).label});
  }
  return render_rows(rows);
}

json stringy_to_json(const InertiaDecomposition& inertia, const StringyClass& x) {
  json out = json::object();
  for (const auto& [sector, coeff] : x.terms)
    out[inertia.sector(sector).label] = equivariant_to_json(coeff);
  return out;
}

json table_to_json(const RingTable& table) {
  const auto& inertia = *table.inertia;
  json out;
  out["type"] = "stringy_ring_table";
  out["instance"] = canonical_instance_json(inertia.action());
  out["hash"] = table.instance_hash;
  out["coefficient_ring"] = {{"invariant_factors", table.coeff_ring.invariant_factors()}};
  json basis = json::array();
  for (std::size_t i = 0; i < inertia.size(); ++i) basis.push_back(inertia.sector(i).label);
  out["basis"] = std::move(basis);
  json sectors = json::array();
  for (std::size_t i = 0; i < inertia.size(); ++i) sectors.push_back(sector_to_json(inertia, i));
  out["sectors"] = std::move(sectors);
  json products = json::array();
  for (std::size_t i = 0; i < inertia.size(); ++i)
    for (std::size_t j = 0; j < inertia.size(); ++j) {
      json entry;
      entry["left"] = inertia.sector(i).label;
      entry["right"] = inertia.sector(j).label;
      entry["value"] = stringy_to_json(inertia, table.product(i, j));
      products.push_back(std::move(entry));
    }
  out["products"] = std::move(products);
  return out;
}

RingTable table_from_json(const nlohmann::json& doc, std::uint64_t max_group_order) {
  if (!doc.is_object() || doc.value("type", "") != std::string("stringy_ring_table"))
    throw InputError("not a stringy ring table document");
  const auto inst = parse_instance(require_key(doc, "instance"), max_group_order);
  auto inertia = std::make_shared<InertiaDecomposition>(inst.action);

  RingTable table;
  table.inertia = inertia;
  table.coeff_ring = BgRing(
      require_key(doc, "coefficient_ring").at("invariant_factors").get<std::vector<std::uint64_t>>());
  table.instance_hash = fnv1a64_hex(instance_signature(*inst.action));
  if (doc.contains("hash") && doc["hash"].get<std::string>() != table.instance_hash)
    throw InputError("table hash does not match its embedded instance");

  const std::size_t n = inertia->size();
  std::map<std::string, std::size_t> by_label;
  for (std::size_t i = 0; i < n; ++i) by_label[inertia->sector(i).label] = i;

  const auto& basis = require_key(doc, "basis");
  if (!basis.is_array() || basis.size() != n)
    throw InputError("basis size does not match the instance's sector count");
  for (std::size_t i = 0; i < n; ++i)
    if (basis[i].get<std::string>() != inertia->sector(i).label)
      throw InputError("basis labels do not match the canonical sector order");

  const auto lookup = [&](const std::string& label) {
    auto it = by_label.find(label);
    if (it == by_label.end()) throw InputError("unknown sector label \"" + label + "\"");
    return it->second;
  };

  table.entries.assign(n * n, StringyClass{});
  std::vector<bool> seen(n * n, false);
  const auto& products = require_key(doc, "products");
  if (!products.is_array()) throw InputError("\"products\" must be an array");
  for (const auto& entry : products) {
    const auto i = lookup(require_key(entry, "left").get<std::string>());
    const auto j = lookup(require_key(entry, "right").get<std::string>());
    if (seen[i * n + j]) throw InputError("duplicate product entry");
    seen[i * n + j] = true;
    StringyClass value;
    for (const auto& [label, coeff] : require_key(entry, "value").items())
      value.terms[lookup(label)] = equivariant_from_json(table.coeff_ring, coeff);
    table.entries[i * n + j] = std::move(value);
  }
  if (!std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }))
    throw InputError("products array does not cover every basis pair");
  return table;
}

std::string table_to_text(const RingTable& table) {
  const auto& inertia = *table.inertia;
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"left", "right", "product"});
  for (std::size_t i = 0; i < inertia.size(); ++i)
    for (std::size_t j = 0; j < inertia.size(); ++j) {
      std::ostringstream value;
      const auto& p = table.product(i, j);
      if (p.empty()) {
        value << "0";
      } else {
        bool first = true;
        for (const auto& [sector, coeff] : p.terms) {
          if (!first) value << " + ";
          first = false;
          value << "(" << equivariant_to_text(coeff) << ")*1_{"
                << inertia.sector(sector).label << "}";
        }
      }
      rows.push_back({inertia.sector(i).label, inertia.sector(j).label, value.str()});
    }
  return render_rows(rows);
}

json poincare_to_json(const InertiaDecomposition& inertia) {
  json out;
  out["instance"] = canonical_instance_json(inertia.action());
  json terms = json::array();
  for (const auto& [age, count] : poincare_polynomial(inertia)) {
    json term;
    term["age"] = rational_to_json(age);
    term["count"] = count;
    terms.push_back(std::move(term));
  }
  out["poincare"] = std::move(terms);
  return out;
}

std::string poincare_to_text(const InertiaDecomposition& inertia) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [age, count] : poincare_polynomial(inertia)) {
    if (!first) out << " + ";
    first = false;
    if (count != 1 || age == 0) out << count;
    if (age != 0) {
      if (count != 1) out << "*";
      out << "q";
      if (age != 1) out << "^(" << to_string(age) << ")";
    }
  }
  out << "\n";
  return out.str();
}

json moduli_to_json(const FiniteGroup& group, const std::vector<ModuliComponent>& components,
                    const MassCheck& mass) {
  const auto& classes = group.conjugacy_classes();
  json out;
  out["group"] = canonical_group_json(group);
  out["group_order"] = group.order();
  out["component_count"] = components.size();
  json comps = json::array();
  for (const auto& c : components) {
    json entry;
    entry["triple"] = {group.element_name(c.triple[0]), group.element_name(c.triple[1]),
                       group.element_name(c.triple[2])};
    entry["aut_order"] = c.aut_order;
    entry["orbit_size"] = c.orbit_size;
    entry["eval_sectors"] = {group.element_name(classes[c.eval_sectors[0]].representative),
                             group.element_name(classes[c.eval_sectors[1]].representative),
                             group.element_name(classes[c.eval_sectors[2]].representative)};
    entry["node_indices"] = c.node_indices;
    comps.push_back(std::move(entry));
  }
  out["components"] = std::move(comps);
  out["mass_check"] = {{"lhs", int_to_json(mass.lhs)},
                       {"rhs", int_to_json(mass.rhs)},
                       {"ok", mass.ok}};
  return out;
}

std::string moduli_to_text(const FiniteGroup& group,
                           const std::vector<ModuliComponent>& components, const MassCheck& mass) {
  const auto& classes = group.conjugacy_classes();
  std::vector<std::vector<std::string>> rows;
  rows.push_back({"g1", "g2", "g3", "aut", "orbit", "ev1", "ev2", "ev3*", "r1", "r2", "r3"});
  for (const auto& c : components) {
    rows.push_back({group.element_name(c.triple[0]), group.element_name(c.triple[1]),
                    group.element_name(c.triple[2]), std::to_string(c.aut_order),
                    std::to_string(c.orbit_size),
                    group.element_name(classes[c.eval_sectors[0]].representative),
                    group.element_name(classes[c.eval_sectors[1]].representative),
                    group.element_name(classes[c.eval_sectors[2]].representative),
                    std::to_string(c.node_indices[0]), std::to_string(c.node_indices[1]),
                    std::to_string(c.node_indices[2])});
  }
  std::ostringstream out;
  out << render_rows(rows);
  out << "mass check: " << mass.lhs.str() << (mass.ok ? " == " : " != ") << mass.rhs.str() << "\n";
  return out.str();
}

TwistedLineBundle bundle_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("line bundle spec must be a JSON object");
  TwistedLineBundle b;
  b.orb_degree = rational_from_json(require_key(doc, "degree"));
  const auto& monos = require_key(doc, "monodromies");
  if (!monos.is_array() || monos.size() != 3)
    throw InputError("\"monodromies\" must be an array of exactly three [k, r] pairs");
  for (std::size_t i = 0; i < 3; ++i) {
    const auto& p = monos[i];
    if (!p.is_array() || p.size() != 2) throw InputError("monodromy must be a [k, r] pair");
    b.monodromies[i] = {p[0].get<std::int64_t>(), p[1].get<std::int64_t>()};
  }
  return b;
}

PicardGroupData picard_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("Picard spec must be a JSON object");
  const auto free_rank = static_cast<std::size_t>(
      uint_from_json(require_key(doc, "free_rank"), "free_rank"));
  std::vector<Int> torsion, element;
  for (const auto& t : require_key(doc, "torsion")) torsion.push_back(int_from_json(t));
  for (const auto& c : require_key(doc, "element")) element.push_back(int_from_json(c));
  return PicardGroupData::make(free_rank, std::move(torsion), std::move(element));
}

}  // namespace orbichow
