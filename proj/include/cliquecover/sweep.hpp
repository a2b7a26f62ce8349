#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cliquecover/graph.hpp"

namespace cliquecover {

struct SweepOptions {
  int n = 6;
  int t = 4;
  bool exhaustive = true;        // otherwise random sampling
  long long samples = 100;       // random mode
  unsigned long long seed = 1;   // random mode
  int max_omega = 0;             // > 0: cap the clique number of sampled graphs
  long long node_limit = 10'000'000;
};

struct SweepWitness {
  unsigned long long mask = 0;               // exhaustive mode
  std::vector<std::pair<int, int>> edges;    // random mode
  long long cover = 0;
  bool turan = false;
};

struct SweepReport {
  SweepOptions options;
  long long instances = 0;
  long long target = 0;          // k_t of the balanced t-partite graph on n
  long long max_cover = 0;
  std::string max_cover_ratio;   // max_cover / target, exact
  std::vector<SweepWitness> equality_witnesses;  // cover == target
  // Instances whose cover exceeds the target, or whose near-extremal exact
  // solve ran out of budget; expected empty.
  std::vector<std::string> failures;
};

// Exhaustive mode (requires n <= 6): exact minimum covers for every labeled
// graph on n vertices.  Random mode: seeded corpus with densities from
// pick_density, constructive upper bounds, and exact solves on instances at
// or above the target.
SweepReport run_sweep(const SweepOptions& opt);

nlohmann::ordered_json sweep_report_to_json(const SweepReport& report);

}  // namespace cliquecover
