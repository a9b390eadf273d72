#pragma once

// Job runner behind the orbichow CLI: one command per process, JSON in,
// deterministic JSON or aligned-text out, optional content-addressed
// result caching.

#include "orbichow/group.hpp"

#include <cstdint>
#include <string>

namespace orbichow::cli {

struct JobSpec {
  std::string command;  // inertia | ring | verify | poincare | moduli | rr | roots
  std::string input_path;
  std::string format = "json";  // json | table
  std::string cache_dir;        // empty: fall back to ORBICHOW_CACHE_DIR, else no cache
  std::uint64_t max_group_order = FiniteGroup::kDefaultOrderBound;
  std::uint64_t seed = 1;
  std::uint64_t random_triples = 1000;
};

struct RunResult {
  int exit_code = 0;    // 0 ok, 1 property failure, 2 input error
  std::string output;   // stdout payload
  std::string message;  // stderr payload (diagnostics)
};

RunResult run(const JobSpec& spec);

}  // namespace orbichow::cli
