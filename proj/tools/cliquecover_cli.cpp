#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cliquecover/bounds.hpp"
#include "cliquecover/certificate.hpp"
#include "cliquecover/cliques.hpp"
#include "cliquecover/cover.hpp"
#include "cliquecover/exact.hpp"
#include "cliquecover/graph.hpp"
#include "cliquecover/random.hpp"
#include "cliquecover/sweep.hpp"

namespace cc = cliquecover;
using nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;   // validation failures
constexpr int kExitResource = 2;  // parse errors, bad input, exhausted budgets

void write_text(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << text;
}

void write_json(const ordered_json& j, const std::string& out_path) {
  write_text(j.dump(2) + "\n", out_path);
}

long long resolve_node_limit(const std::optional<long long>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("CCL_NODE_LIMIT")) {
    char* end = nullptr;
    long long value = std::strtoll(env, &end, 10);
    if (end == env || *end != '\0' || value <= 0)
      throw std::invalid_argument("CCL_NODE_LIMIT must be a positive integer, got '" +
                                  std::string(env) + "'");
    return value;
  }
  return cc::ExactOptions{}.node_limit;
}

std::pair<long long, long long> parse_range(const std::string& text) {
  auto sep = text.find("..");
  if (sep == std::string::npos)
    throw std::invalid_argument("range must look like a..b, got '" + text + "'");
  long long a = std::stoll(text.substr(0, sep));
  long long b = std::stoll(text.substr(sep + 2));
  if (a > b) throw std::invalid_argument("empty range '" + text + "'");
  return {a, b};
}

ordered_json report_json(const std::string& check, const cc::BoundReport& report) {
  ordered_json j;
  j["check"] = check;
  j["pass"] = report.pass;
  j["items"] = ordered_json::array();
  for (const auto& item : report.items)
    j["items"].push_back({{"name", item.name},
                          {"pass", item.pass},
                          {"lhs", item.lhs},
                          {"rhs", item.rhs}});
  return j;
}

void item(cc::BoundReport& report, const std::string& name, bool pass, const std::string& lhs,
          const std::string& rhs) {
  report.items.push_back({name, pass, lhs, rhs});
  if (!pass) report.pass = false;
}

cc::BoundReport check_erdos(long long lo, long long hi) {
  cc::BoundReport report;
  for (long long n = lo; n <= hi; ++n) {
    bool all = true;
    std::string witness = "all k <= 6, t < k agree";
    for (int k = 2; k <= 6; ++k)
      for (int t = 1; t < k; ++t) {
        long long formula = cc::erdos_h(n, k, t);
        long long brute = cc::count_cliques(cc::turan_graph(static_cast<int>(n), k - 1), t);
        if (formula != brute) {
          all = false;
          witness = "k=" + std::to_string(k) + " t=" + std::to_string(t) + ": " +
                    std::to_string(formula) + " vs " + std::to_string(brute);
        }
      }
    item(report, "n=" + std::to_string(n), all, witness, "");
  }
  return report;
}

cc::BoundReport check_moonmoser(long long lo, long long hi) {
  if (lo < 1 || hi > 7)
    throw std::invalid_argument("moonmoser is exhaustive over labeled graphs; range limited to 1..7");
  cc::BoundReport report;
  for (long long n = lo; n <= hi; ++n) {
    long long checked = 0, skipped = 0;
    bool all = true;
    std::string witness;
    unsigned long long total = 1ull << (n * (n - 1) / 2);
    for (unsigned long long mask = 0; mask < total && all; ++mask) {
      cc::Graph g = cc::graph_from_mask(static_cast<int>(n), mask);
      for (int t = 2; t <= 3; ++t) {
        if (cc::count_cliques(g, t) == 0 || cc::count_cliques(g, t - 1) == 0) {
          ++skipped;
          continue;
        }
        cc::MoonMoserCheck mm = cc::moon_moser_check(g, t);
        ++checked;
        if (!mm.holds) {
          all = false;
          witness = "mask " + std::to_string(mask) + " t=" + std::to_string(t) + " slack " +
                    cc::to_string(mm.slack);
          break;
        }
      }
    }
    if (all)
      witness = std::to_string(checked) + " cases hold, " + std::to_string(skipped) +
                " skipped for zero counts";
    item(report, "n=" + std::to_string(n), all, witness, "");
  }
  return report;
}

cc::BoundReport check_eq1(long long lo, long long hi) {
  cc::BoundReport report;
  bool single = lo == hi;
  for (long long n = lo; n <= hi; ++n) {
    cc::BoundReport one = cc::turan_k4_identities(n);
    if (single) return one;
    std::string witness = "all identities hold";
    for (const auto& it : one.items)
      if (!it.pass) witness = it.name + ": " + it.lhs + " vs " + it.rhs;
    item(report, "n=" + std::to_string(n), one.pass, witness, "");
  }
  return report;
}

cc::BoundReport check_appendix_a(long long lo, long long hi) {
  cc::BoundReport report;
  for (int c = 6; c <= 10; ++c) {
    long long from = std::max<long long>(lo, c);
    bool positive = true, matches = true, derivative = true;
    std::string witness = "margin > 0, cubic agrees, derivative > 0";
    for (long long n = from; n <= hi; ++n) {
      cc::Rational direct = cc::peel_margin(n, c);
      if (direct <= 0 && positive) {
        positive = false;
        witness = "margin " + cc::to_string(direct) + " at n=" + std::to_string(n);
      }
      if (direct != cc::peel_margin_cubic(n, c) && matches) {
        matches = false;
        witness = "cubic " + cc::to_string(cc::peel_margin_cubic(n, c)) + " != direct " +
                  cc::to_string(direct) + " at n=" + std::to_string(n);
      }
      if (cc::peel_margin_cubic_derivative(n, c) <= 0 && derivative) {
        derivative = false;
        witness = "derivative not positive at n=" + std::to_string(n);
      }
    }
    item(report, "c=" + std::to_string(c) + " n=" + std::to_string(from) + ".." +
                     std::to_string(hi),
         positive && matches && derivative, witness, "");
  }
  return report;
}

cc::BoundReport check_appendix_b(long long lo, long long hi) {
  cc::BoundReport report;
  for (long long n = std::max<long long>(lo, 6); n <= hi; ++n) {
    cc::Rational direct = cc::base_case_margin(n);
    cc::Rational cubic = cc::base_case_margin_cubic(n);
    bool excluded = n == 97 || n == 101;
    std::string name = "n=" + std::to_string(n) + (excluded ? " (excluded)" : "");
    item(report, name, excluded || direct > 0, cc::to_string(direct), "0");
    if (cubic != direct)
      item(report, "n=" + std::to_string(n) + " case-cubic mismatch (direct is authoritative)",
           true, cc::to_string(direct), cc::to_string(cubic));
  }
  return report;
}

void chain_items(cc::BoundReport& report, const cc::ChainCheckResult& r, bool detailed) {
  std::string prefix = "n=" + std::to_string(r.n);
  std::string summary = std::to_string(r.pairs) + " pairs, " +
                        std::to_string(r.equalities.size()) + " equalities, " +
                        std::to_string(r.violations.size()) + " violations";
  item(report, prefix + " sweep", r.pass, summary, "increment " + cc::to_string(r.increment));
  if (!detailed) return;
  for (const auto& e : r.equalities)
    item(report, prefix + " equality", true,
         "d=" + std::to_string(e.d) + " q=" + std::to_string(e.q) + " branch " +
             std::to_string(e.branch),
         cc::to_string(r.increment));
  item(report, prefix + " endpoint q=" + std::to_string(r.endpoint_low_q),
       r.endpoint_low_value < r.endpoint_bound, cc::to_string(r.endpoint_low_value),
       cc::to_string(r.endpoint_bound));
  item(report, prefix + " endpoint q=" + std::to_string(r.endpoint_high_q),
       r.endpoint_high_value < r.endpoint_bound, cc::to_string(r.endpoint_high_value),
       cc::to_string(r.endpoint_bound));
}

cc::BoundReport check_chain(std::optional<long long> n, std::optional<std::string> range) {
  cc::BoundReport report;
  if (n) {
    chain_items(report, cc::chain_check(*n), true);
    return report;
  }
  if (range) {
    auto [lo, hi] = parse_range(*range);
    for (long long v = std::max<long long>(lo, 6); v <= hi; ++v)
      chain_items(report, cc::chain_check(v), false);
    return report;
  }
  chain_items(report, cc::chain_check(97), true);
  chain_items(report, cc::chain_check(101), true);
  for (long long v = 105; v <= 200; ++v) chain_items(report, cc::chain_check(v), false);
  return report;
}

int run(int argc, char** argv) {
  CLI::App app{"clique cover construction, exact solving and bound verification"};
  app.require_subcommand(1);

  // turan
  auto* cmd_turan = app.add_subcommand("turan", "write a balanced multipartite graph edge list");
  int turan_n = 0, turan_t = 4;
  std::string turan_out;
  cmd_turan->add_option("--n", turan_n, "vertex count")->required();
  cmd_turan->add_option("--t", turan_t, "part count");
  cmd_turan->add_option("--out", turan_out, "output file (default stdout)");

  // cover
  auto* cmd_cover = app.add_subcommand("cover", "build a constructive clique cover certificate");
  int cover_t = 4;
  bool cover_refine = false;
  std::string cover_in, cover_out, cover_trace;
  cmd_cover->add_option("--t", cover_t, "cover order (3 or 4)");
  cmd_cover->add_option("--in", cover_in, "edge-list input file")->required();
  cmd_cover->add_option("--out", cover_out, "certificate output file (default stdout)");
  cmd_cover->add_flag("--refine", cover_refine, "apply the 3-cover refinement (t = 3 only)");
  cmd_cover->add_option("--trace", cover_trace,
                        "write the sequence reduction trace JSON here (t = 3 only)");

  // exact
  auto* cmd_exact = app.add_subcommand("exact", "solve the minimum cover exactly");
  int exact_t = 4;
  std::string exact_in, exact_out;
  std::optional<long long> exact_nodes;
  cmd_exact->add_option("--t", exact_t, "cover order");
  cmd_exact->add_option("--in", exact_in, "edge-list input file")->required();
  cmd_exact->add_option("--out", exact_out, "certificate output file (default stdout)");
  cmd_exact->add_option("--node-limit", exact_nodes, "branch-and-bound node budget");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "validate a certificate against a graph");
  std::string verify_in, verify_cert, verify_out;
  cmd_verify->add_option("--in", verify_in, "edge-list input file")->required();
  cmd_verify->add_option("--cert", verify_cert, "certificate JSON file")->required();
  cmd_verify->add_option("--out", verify_out, "report output file (default stdout)");

  // bounds
  auto* cmd_bounds = app.add_subcommand("bounds", "verify closed-form bounds and identities");
  std::string bounds_check, bounds_out;
  std::optional<long long> bounds_n;
  std::optional<std::string> bounds_range;
  cmd_bounds->add_option("--check", bounds_check, "erdos|moonmoser|eq1|appendixA|appendixB|chain")
      ->required();
  cmd_bounds->add_option("--n", bounds_n, "single value to check");
  cmd_bounds->add_option("--range", bounds_range, "inclusive range a..b");
  cmd_bounds->add_option("--out", bounds_out, "report output file (default stdout)");

  // sweep
  auto* cmd_sweep = app.add_subcommand("sweep", "search for covers matching the balanced target");
  cc::SweepOptions sweep_opt;
  bool sweep_random = false;
  std::string sweep_out;
  std::optional<long long> sweep_nodes;
  cmd_sweep->add_option("--n", sweep_opt.n, "vertex count")->required();
  cmd_sweep->add_option("--t", sweep_opt.t, "cover order");
  cmd_sweep->add_flag("--random", sweep_random, "sample random graphs instead of all graphs");
  cmd_sweep->add_option("--samples", sweep_opt.samples, "random mode: number of graphs");
  cmd_sweep->add_option("--seed", sweep_opt.seed, "random mode: generator seed");
  cmd_sweep->add_option("--max-omega", sweep_opt.max_omega,
                        "random mode: cap the clique number of sampled graphs");
  cmd_sweep->add_option("--node-limit", sweep_nodes, "branch-and-bound node budget");
  cmd_sweep->add_option("--out", sweep_out, "report output file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (cmd_turan->parsed()) {
    cc::Graph g = cc::turan_graph(turan_n, turan_t);
    std::ostringstream text;
    cc::write_edge_list(g, text);
    write_text(text.str(), turan_out);
    return kExitOk;
  }

  if (cmd_cover->parsed()) {
    if (cover_t != 3 && cover_t != 4)
      throw std::invalid_argument("cover supports --t 3 and --t 4");
    if (cover_t == 4 && (cover_refine || !cover_trace.empty()))
      throw std::invalid_argument("--refine and --trace apply to --t 3 only");
    cc::Graph g = cc::read_edge_list_file(cover_in);
    cc::CoverCertificate cert;
    if (cover_t == 4) {
      cert = cc::build_4cover(g);
    } else {
      cc::Build3CoverResult built = cc::build_3cover(g);
      if (!cover_trace.empty())
        write_json(cc::trace_to_json(cc::reduce(built.sequence)), cover_trace);
      if (cover_refine) built = cc::refine_3cover(g, built);
      cert = std::move(built.cert);
    }
    write_json(cc::certificate_to_json(cert), cover_out);
    return kExitOk;
  }

  if (cmd_exact->parsed()) {
    cc::Graph g = cc::read_edge_list_file(exact_in);
    cc::ExactOptions opt;
    opt.node_limit = resolve_node_limit(exact_nodes);
    cc::ExactResult result = cc::exact_min_cover(g, exact_t, opt);
    write_json(cc::certificate_to_json(result.cert), exact_out);
    // The certificate JSON itself carries "size"; echo it when it went to a file.
    if (!exact_out.empty()) std::cout << result.size << "\n";
    return kExitOk;
  }

  if (cmd_verify->parsed()) {
    cc::Graph g = cc::read_edge_list_file(verify_in);
    std::ifstream in(verify_cert);
    if (!in) throw std::runtime_error("cannot open certificate file: " + verify_cert);
    nlohmann::json j = nlohmann::json::parse(in);
    cc::CoverCertificate cert = cc::certificate_from_json(j);
    cc::ValidationResult result = cc::validate_cover(g, cert);
    ordered_json report;
    report["ok"] = result.ok;
    report["message"] = result.ok ? "certificate valid" : result.message;
    report["size"] = cert.size();
    write_json(report, verify_out);
    return result.ok ? kExitOk : kExitInvalid;
  }

  if (cmd_bounds->parsed()) {
    cc::BoundReport report;
    auto span = [&](long long lo, long long hi) -> std::pair<long long, long long> {
      if (bounds_n) return {*bounds_n, *bounds_n};
      if (bounds_range) return parse_range(*bounds_range);
      return {lo, hi};
    };
    if (bounds_check == "erdos") {
      auto [lo, hi] = span(1, 20);
      report = check_erdos(lo, hi);
    } else if (bounds_check == "moonmoser") {
      auto [lo, hi] = span(4, 6);
      report = check_moonmoser(lo, hi);
    } else if (bounds_check == "eq1") {
      auto [lo, hi] = span(4, 1000);
      report = check_eq1(lo, hi);
    } else if (bounds_check == "appendixA") {
      auto [lo, hi] = span(6, 2000);
      report = check_appendix_a(lo, hi);
    } else if (bounds_check == "appendixB") {
      auto [lo, hi] = span(6, 104);
      report = check_appendix_b(lo, hi);
    } else if (bounds_check == "chain") {
      report = check_chain(bounds_n, bounds_range);
    } else {
      throw std::invalid_argument("unknown check '" + bounds_check +
                                  "'; expected erdos|moonmoser|eq1|appendixA|appendixB|chain");
    }
    write_json(report_json(bounds_check, report), bounds_out);
    return report.pass ? kExitOk : kExitInvalid;
  }

  if (cmd_sweep->parsed()) {
    sweep_opt.exhaustive = !sweep_random;
    sweep_opt.node_limit = resolve_node_limit(sweep_nodes);
    cc::SweepReport report = cc::run_sweep(sweep_opt);
    write_json(cc::sweep_report_to_json(report), sweep_out);
    if (report.failures.empty()) return kExitOk;
    for (const auto& f : report.failures)
      if (f.find("budget") != std::string::npos) return kExitResource;
    return kExitInvalid;
  }

  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const cc::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitResource;
  } catch (const cc::BudgetExceededError& e) {
    std::cerr << e.what() << "\n";
    return kExitResource;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "certificate parse error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  }
}
