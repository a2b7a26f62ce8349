#include "cliquecover/sweep.hpp"

#include <stdexcept>

#include "cliquecover/bounds.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/exact.hpp"
#include "cliquecover/random.hpp"

namespace cliquecover {

SweepReport run_sweep(const SweepOptions& opt) {
  if (opt.n < 1) throw std::invalid_argument("sweep requires n >= 1");
  if (opt.t < 2) throw std::invalid_argument("sweep requires t >= 2");
  if (opt.exhaustive && opt.n > 6)
    throw std::invalid_argument("exhaustive sweeps are limited to n <= 6");
  if (!opt.exhaustive && opt.samples < 1)
    throw std::invalid_argument("random sweeps need at least one sample");

  SweepReport report;
  report.options = opt;
  report.target = count_cliques(turan_graph(opt.n, opt.t), opt.t);

  ExactOptions exact_opt;
  exact_opt.node_limit = opt.node_limit;

  auto note_cover = [&](long long cover) {
    if (cover > report.max_cover) report.max_cover = cover;
  };

  if (opt.exhaustive) {
    const int bits = opt.n * (opt.n - 1) / 2;
    const unsigned long long total = 1ull << bits;
    for (unsigned long long mask = 0; mask < total; ++mask) {
      Graph g = graph_from_mask(opt.n, mask);
      ExactResult ex = exact_min_cover(g, opt.t, exact_opt);
      ++report.instances;
      note_cover(ex.size);
      if (ex.size > report.target)
        report.failures.push_back("mask " + std::to_string(mask) + ": minimum cover " +
                                  std::to_string(ex.size) + " exceeds target " +
                                  std::to_string(report.target));
      if (ex.size == report.target)
        report.equality_witnesses.push_back({mask, {}, ex.size, is_turan(g, opt.t)});
    }
  } else {
    Rng rng(opt.seed);
    for (long long i = 0; i < opt.samples; ++i) {
      Graph g = random_graph(opt.n, pick_density(rng), rng);
      if (opt.max_omega > 0) g = cap_clique_number(std::move(g), opt.max_omega, rng);
      ++report.instances;
      long long upper = -1;
      if (opt.t == 4) upper = build_4cover(g).size();
      if (upper >= 0 && upper < report.target) {
        note_cover(upper);
        continue;
      }
      // Near-extremal (or no constructive bound available): solve exactly.
      try {
        ExactResult ex = exact_min_cover(g, opt.t, exact_opt);
        note_cover(ex.size);
        if (ex.size > report.target)
          report.failures.push_back("sample " + std::to_string(i) + ": minimum cover " +
                                    std::to_string(ex.size) + " exceeds target " +
                                    std::to_string(report.target));
        if (ex.size == report.target)
          report.equality_witnesses.push_back({0, g.edges(), ex.size, is_turan(g, opt.t)});
      } catch (const BudgetExceededError& e) {
        note_cover(e.best_upper_bound);
        report.failures.push_back("sample " + std::to_string(i) +
                                  ": exact solve exceeded the node budget (best upper bound " +
                                  std::to_string(e.best_upper_bound) + ")");
      }
    }
  }

  report.max_cover_ratio =
      report.target > 0 ? to_string(rat(report.max_cover) / report.target) : "undefined";
  return report;
}

nlohmann::ordered_json sweep_report_to_json(const SweepReport& report) {
  nlohmann::ordered_json j;
  j["n"] = report.options.n;
  j["t"] = report.options.t;
  j["mode"] = report.options.exhaustive ? "exhaustive" : "random";
  if (!report.options.exhaustive) {
    j["samples"] = report.options.samples;
    j["seed"] = report.options.seed;
    j["max_omega"] = report.options.max_omega;
  }
  j["instances"] = report.instances;
  j["target"] = report.target;
  j["max_cover"] = report.max_cover;
  j["max_cover_ratio"] = report.max_cover_ratio;
  j["equality_witnesses"] = nlohmann::ordered_json::array();
  for (const auto& w : report.equality_witnesses) {
    nlohmann::ordered_json item;
    if (report.options.exhaustive) item["mask"] = w.mask;
    else {
      auto edges = nlohmann::ordered_json::array();
      for (auto [u, v] : w.edges) edges.push_back({u, v});
      item["edges"] = std::move(edges);
    }
    item["cover"] = w.cover;
    item["turan"] = w.turan;
    j["equality_witnesses"].push_back(std::move(item));
  }
  j["failures"] = report.failures;
  return j;
}

}  // namespace cliquecover
