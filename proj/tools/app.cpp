#include "app.hpp"

#include "orbichow/errors.hpp"
#include "orbichow/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace orbichow::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string effective_cache_dir(const JobSpec& spec) {
  if (!spec.cache_dir.empty()) return spec.cache_dir;
  if (const char* env = std::getenv("ORBICHOW_CACHE_DIR")) return env;
  return {};
}

std::string cache_key(const JobSpec& spec, const json& input) {
  std::ostringstream key;
  key << spec.command << "|" << input.dump() << "|" << spec.format << "|" << spec.seed << "|"
      << spec.max_group_order << "|" << spec.random_triples;
  return fnv1a64_hex(key.str());
}

struct Rendered {
  std::string output;
  bool property_failure = false;
};

Rendered run_inertia(const JobSpec& spec, const json& input) {
  const auto inst = parse_instance(input, spec.max_group_order);
  InertiaDecomposition inertia(inst.action);
  if (spec.format == "table") return {inertia_to_text(inertia)};
  return {dump(inertia_to_json(inertia))};
}

Rendered run_ring(const JobSpec& spec, const json& input) {
  const auto inst = parse_instance(input, spec.max_group_order);
  auto inertia = std::make_shared<InertiaDecomposition>(inst.action);
  const auto table = ring_table(inertia);
  if (spec.format == "table") return {table_to_text(table)};
  return {dump(table_to_json(table))};
}

Rendered run_verify(const JobSpec& spec, const json& input) {
  RingTable table;
  if (input.is_object() && input.value("type", "") == std::string("stringy_ring_table")) {
    table = table_from_json(input, spec.max_group_order);
  } else {
    const auto inst = parse_instance(input, spec.max_group_order);
    table = ring_table(std::make_shared<InertiaDecomposition>(inst.action));
  }

  const bool identity = check_identity(table);
  const bool commutativity = check_commutativity(table);
  const bool graded = check_graded_products(table);
  const auto assoc = verify_associativity(table);
  const auto random = verify_associativity_random(table, spec.random_triples, spec.seed);
  const bool ok = identity && commutativity && graded && assoc.ok && random.ok;

  if (spec.format == "table") {
    std::ostringstream out;
    out << "identity:             " << (identity ? "pass" : "FAIL") << "\n"
        << "commutativity:        " << (commutativity ? "pass" : "FAIL") << "\n"
        << "graded products:      " << (graded ? "pass" : "FAIL") << "\n"
        << "associativity:        " << (assoc.ok ? "pass" : "FAIL") << " ("
        << assoc.triples_checked << " basis triples)\n"
        << "random associativity: " << (random.ok ? "pass" : "FAIL") << " ("
        << random.triples_checked << " triples, seed " << spec.seed << ")\n";
    return {out.str(), !ok};
  }

  json checks;
  checks["identity"] = identity;
  checks["commutativity"] = commutativity;
  checks["graded_products"] = graded;
  json assoc_json;
  assoc_json["ok"] = assoc.ok;
  assoc_json["triples"] = assoc.triples_checked;
  if (assoc.counterexample) {
    const auto& [i, j, k] = *assoc.counterexample;
    assoc_json["counterexample"] = {table.inertia->sector(i).label,
                                    table.inertia->sector(j).label,
                                    table.inertia->sector(k).label};
  }
  checks["associativity"] = std::move(assoc_json);
  checks["random_associativity"] = {
      {"ok", random.ok}, {"triples", random.triples_checked}, {"seed", spec.seed}};

  json report;
  report["instance"] = canonical_instance_json(table.inertia->action());
  report["hash"] = table.instance_hash;
  report["checks"] = std::move(checks);
  report["ok"] = ok;
  return {dump(report), !ok};
}

Rendered run_poincare(const JobSpec& spec, const json& input) {
  const auto inst = parse_instance(input, spec.max_group_order);
  InertiaDecomposition inertia(inst.action);
  if (spec.format == "table") return {poincare_to_text(inertia)};
  return {dump(poincare_to_json(inertia))};
}

Rendered run_moduli(const JobSpec& spec, const json& input) {
  const auto inst = parse_instance(input, spec.max_group_order);
  const auto components = enumerate_components(*inst.group);
  const auto mass = mass_check(*inst.group, components);
  if (spec.format == "table")
    return {moduli_to_text(*inst.group, components, mass), !mass.ok};
  return {dump(moduli_to_json(*inst.group, components, mass)), !mass.ok};
}

Rendered run_rr(const JobSpec& spec, const json& input) {
  const auto bundle = bundle_from_json(input);
  const auto degree = pushforward_degree(bundle);
  const auto h = p1_cohomology(degree);
  json out;
  out["degree"] = to_string(bundle.orb_degree);
  json monos = json::array();
  for (const auto& m : bundle.monodromies) monos.push_back(json::array({m.k, m.r}));
  out["monodromies"] = std::move(monos);
  out["pushforward_degree"] = int_to_json(degree);
  out["h0"] = int_to_json(h.h0);
  out["h1"] = int_to_json(h.h1);
  if (spec.format == "table") {
    std::ostringstream text;
    text << "pushforward degree " << degree.str() << ", h0 = " << h.h0.str()
         << ", h1 = " << h.h1.str() << "\n";
    return {text.str()};
  }
  return {dump(out)};
}

Rendered run_roots(const JobSpec& spec, const json& input) {
  const auto picard = picard_from_json(input);
  const Int r = int_from_json(input.contains("r") ? input["r"] : json(1));
  const bool exists = root_section_exists(picard, r);
  if (spec.format == "table")
    return {std::string("root section ") + (exists ? "exists" : "does not exist") + "\n"};
  json out;
  out["free_rank"] = picard.free_rank;
  json torsion = json::array();
  for (const auto& t : picard.torsion) torsion.push_back(int_to_json(t));
  out["torsion"] = std::move(torsion);
  json element = json::array();
  for (const auto& c : picard.element) element.push_back(int_to_json(c));
  out["element"] = std::move(element);
  out["r"] = int_to_json(r);
  out["exists"] = exists;
  return {dump(out)};
}

}  // namespace

RunResult run(const JobSpec& spec) {
  try {
    if (spec.format != "json" && spec.format != "table")
      throw InputError("unknown format \"" + spec.format + "\" (use json or table)");

    json input;
    try {
      input = json::parse(read_file(spec.input_path));
    } catch (const json::parse_error& e) {
      throw InputError(std::string("input is not valid JSON: ") + e.what());
    }

    const std::string cache_dir = effective_cache_dir(spec);
    std::filesystem::path cache_file;
    if (!cache_dir.empty()) {
      cache_file = std::filesystem::path(cache_dir) / (cache_key(spec, input) + ".out");
      if (std::filesystem::exists(cache_file)) {
        std::ifstream in(cache_file, std::ios::binary);
        std::ostringstream buf;
        buf << in.rdbuf();
        return {0, buf.str(), ""};
      }
    }

    Rendered rendered;
    if (spec.command == "inertia")
      rendered = run_inertia(spec, input);
    else if (spec.command == "ring")
      rendered = run_ring(spec, input);
    else if (spec.command == "verify")
      rendered = run_verify(spec, input);
    else if (spec.command == "poincare")
      rendered = run_poincare(spec, input);
    else if (spec.command == "moduli")
      rendered = run_moduli(spec, input);
    else if (spec.command == "rr")
      rendered = run_rr(spec, input);
    else if (spec.command == "roots")
      rendered = run_roots(spec, input);
    else
      throw InputError("unknown command \"" + spec.command + "\"");

    if (rendered.property_failure) return {1, rendered.output, ""};

    if (!cache_file.empty()) {
      std::filesystem::create_directories(cache_file.parent_path());
      std::ofstream out(cache_file, std::ios::binary);
      out << rendered.output;
    }
    return {0, rendered.output, ""};
  } catch (const NonIntegralDegree& e) {
    return {2, "", std::string("error: ") + e.what()};
  } catch (const InputError& e) {
    return {2, "", std::string("error: ") + e.what()};
  } catch (const Error& e) {
    return {2, "", std::string("error: ") + e.what()};
  } catch (const std::exception& e) {
    return {2, "", std::string("internal error: ") + e.what()};
  }
}

}  // namespace orbichow::cli
