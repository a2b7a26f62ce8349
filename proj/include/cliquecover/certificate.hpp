#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cliquecover/graph.hpp"
#include "cliquecover/sequence.hpp"

namespace cliquecover {

enum class Provenance { C1, C2, C3, refinement, peel, extension, exact };

const char* provenance_name(Provenance p);
Provenance provenance_from_name(const std::string& name);

// A t-clique cover witness: a list of cliques (each of size >= t) such that
// every t-clique of the host graph lies inside some member.
struct CoverCertificate {
  int t = 0;
  int n = 0;  // host graph order
  std::vector<std::vector<int>> cliques;    // each sorted ascending
  std::vector<Provenance> provenance;       // parallel to cliques
  std::optional<std::vector<std::vector<int>>> partition;  // for 3-cover outputs

  long long size() const { return static_cast<long long>(cliques.size()); }
};

struct ValidationResult {
  bool ok = true;
  std::string message;  // first violation with a witness
};

// Checks each member is a clique of g with at least t vertices and that every
// t-clique of g is contained in some member.
ValidationResult validate_cover(const Graph& g, const CoverCertificate& cert);

// {"t":..,"n":..,"cliques":[[..]..],"provenance":["C1",..],"size":..}
// plus "partition" when present.
nlohmann::ordered_json certificate_to_json(const CoverCertificate& cert);
CoverCertificate certificate_from_json(const nlohmann::json& j);

// {"steps":[{"op":..,"f_before":..,"f_after":..},..],"final":[..],"type":..}
nlohmann::ordered_json trace_to_json(const ReductionTrace& trace);

}  // namespace cliquecover
