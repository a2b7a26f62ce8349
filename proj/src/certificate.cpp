#include "cliquecover/certificate.hpp"

#include <algorithm>
#include <sstream>

#include "cliquecover/cliques.hpp"

namespace cliquecover {

const char* provenance_name(Provenance p) {
  switch (p) {
    case Provenance::C1: return "C1";
    case Provenance::C2: return "C2";
    case Provenance::C3: return "C3";
    case Provenance::refinement: return "refinement";
    case Provenance::peel: return "peel";
    case Provenance::extension: return "extension";
    case Provenance::exact: return "exact";
  }
  return "?";
}

Provenance provenance_from_name(const std::string& name) {
  for (Provenance p : {Provenance::C1, Provenance::C2, Provenance::C3, Provenance::refinement,
                       Provenance::peel, Provenance::extension, Provenance::exact})
    if (name == provenance_name(p)) return p;
  throw std::invalid_argument("unknown provenance tag '" + name + "'");
}

namespace {

std::string show(const std::vector<int>& verts) {
  std::ostringstream ss;
  ss << "{";
  for (size_t i = 0; i < verts.size(); ++i) ss << (i ? "," : "") << verts[i];
  ss << "}";
  return ss.str();
}

}  // namespace

ValidationResult validate_cover(const Graph& g, const CoverCertificate& cert) {
  if (cert.t < 2) return {false, "certificate t must be at least 2"};
  if (cert.n != g.size())
    return {false, "certificate is for order " + std::to_string(cert.n) +
                       " but the graph has " + std::to_string(g.size()) + " vertices"};
  int n = g.size();
  std::vector<VertexSet> members;
  members.reserve(cert.cliques.size());
  for (size_t i = 0; i < cert.cliques.size(); ++i) {
    const auto& verts = cert.cliques[i];
    if (static_cast<int>(verts.size()) < cert.t)
      return {false, "member " + std::to_string(i) + " " + show(verts) + " has fewer than t = " +
                         std::to_string(cert.t) + " vertices"};
    VertexSet s(n);
    for (int v : verts) {
      if (v < 0 || v >= n)
        return {false, "member " + std::to_string(i) + " contains out-of-range vertex " +
                           std::to_string(v)};
      if (s.contains(v))
        return {false, "member " + std::to_string(i) + " repeats vertex " + std::to_string(v)};
      s.add(v);
    }
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b)
        if (!g.adjacent(verts[a], verts[b]))
          return {false, "member " + std::to_string(i) + " " + show(verts) +
                             " is not a clique: " + std::to_string(verts[a]) + " and " +
                             std::to_string(verts[b]) + " are not adjacent"};
    members.push_back(std::move(s));
  }
  ValidationResult result;
  for_each_clique(g, cert.t, [&](const std::vector<int>& clique) {
    for (const auto& member : members) {
      bool inside = true;
      for (int v : clique)
        if (!member.contains(v)) {
          inside = false;
          break;
        }
      if (inside) return true;
    }
    result = {false, "uncovered " + std::to_string(cert.t) + "-clique " + show(clique)};
    return false;
  });
  return result;
}

nlohmann::ordered_json certificate_to_json(const CoverCertificate& cert) {
  nlohmann::ordered_json j;
  j["t"] = cert.t;
  j["n"] = cert.n;
  j["cliques"] = cert.cliques;
  std::vector<std::string> tags;
  tags.reserve(cert.provenance.size());
  for (Provenance p : cert.provenance) tags.emplace_back(provenance_name(p));
  j["provenance"] = tags;
  j["size"] = cert.cliques.size();
  if (cert.partition) j["partition"] = *cert.partition;
  return j;
}

CoverCertificate certificate_from_json(const nlohmann::json& j) {
  CoverCertificate cert;
  try {
    cert.t = j.at("t").get<int>();
    cert.n = j.at("n").get<int>();
    cert.cliques = j.at("cliques").get<std::vector<std::vector<int>>>();
    if (j.contains("provenance")) {
      for (const auto& name : j.at("provenance"))
        cert.provenance.push_back(provenance_from_name(name.get<std::string>()));
      if (cert.provenance.size() != cert.cliques.size())
        throw std::invalid_argument("provenance and cliques lengths differ");
    } else {
      cert.provenance.assign(cert.cliques.size(), Provenance::exact);
    }
    if (j.contains("size") &&
        j.at("size").get<long long>() != static_cast<long long>(cert.cliques.size()))
      throw std::invalid_argument("size field disagrees with the clique list");
    if (j.contains("partition"))
      cert.partition = j.at("partition").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
  for (auto& clique : cert.cliques) std::sort(clique.begin(), clique.end());
  return cert;
}

nlohmann::ordered_json trace_to_json(const ReductionTrace& trace) {
  nlohmann::ordered_json steps = nlohmann::ordered_json::array();
  for (const auto& step : trace.steps) {
    nlohmann::ordered_json s;
    s["op"] = step.op;
    s["f_before"] = step.f_before;
    s["f_after"] = step.f_after;
    steps.push_back(std::move(s));
  }
  nlohmann::ordered_json j;
  j["steps"] = std::move(steps);
  j["final"] = trace.final.entries();
  j["type"] = trace.final_type;
  return j;
}

}  // namespace cliquecover
