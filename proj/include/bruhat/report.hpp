#pragma once

// JSON / CSV / text renderings of reports. Every JSON document carries
// "schema": "1".

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "bruhat/orbits.hpp"
#include "bruhat/sigma.hpp"
#include "bruhat/table.hpp"
#include "bruhat/verify.hpp"

namespace bruhat {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

inline Json orbit_json(const std::string& type, const DoubleWord& d, const OrbitReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = type;
  j["word"] = d.str();
  j["m"] = r.m;
  j["orbit_count"] = r.orbit_count;
  Json hist = Json::array();
  for (auto [size, count] : r.histogram) hist.push_back({{"size", size}, {"count", count}});
  j["histogram"] = hist;
  Json reps = Json::array();
  for (SignMask x : r.representatives) reps.push_back(to_bitstring(x, r.m));
  j["representatives"] = reps;
  return j;
}

/// Adds the explicit member list of every orbit.
inline void add_orbit_lists(Json& j, const std::vector<TransvectionF2>& gens, const OrbitReport& r) {
  Json all = Json::array();
  for (SignMask rep : r.representatives) {
    Json members = Json::array();
    for (SignMask x : orbit_of(gens, rep)) members.push_back(to_bitstring(x, r.m));
    all.push_back(members);
  }
  j["orbits"] = all;
}

inline std::string orbit_csv(const OrbitReport& r) {
  std::ostringstream os;
  os << "representative,size\n";
  for (std::size_t k = 0; k < r.representatives.size(); ++k)
    os << to_bitstring(r.representatives[k], r.m) << ',' << r.sizes[k] << '\n';
  return os.str();
}

inline std::string orbit_text(const std::string& type, const DoubleWord& d, const OrbitReport& r) {
  std::ostringstream os;
  os << "type " << type << "  word " << d.str() << "  m = " << r.m << '\n';
  os << "orbits: " << r.orbit_count << '\n';
  os << "size  count\n";
  for (auto [size, count] : r.histogram) os << std::setw(4) << size << "  " << count << '\n';
  return os.str();
}

inline Json table_json(const std::vector<TableRow>& rows) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["uv"] = "e,w0";
  Json out = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["type"] = r.type;
    row["m"] = r.m;
    row["word"] = r.word;
    row["expected"] = r.expected ? Json(*r.expected) : Json(nullptr);
    row["computed"] = r.computed ? Json(*r.computed) : Json(nullptr);
    row["status"] = !r.computed ? r.note : (r.matches() ? "match" : "MISMATCH");
    out.push_back(row);
  }
  j["rows"] = out;
  return j;
}

inline std::string table_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "type,m,expected,computed,status\n";
  for (const auto& r : rows) {
    os << r.type << ',' << r.m << ',' << (r.expected ? std::to_string(*r.expected) : "") << ','
       << (r.computed ? std::to_string(*r.computed) : "") << ','
       << (!r.computed ? r.note : (r.matches() ? "match" : "MISMATCH")) << '\n';
  }
  return os.str();
}

inline std::string table_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(6) << "type" << std::right << std::setw(4) << "m" << std::setw(10)
     << "expected" << std::setw(10) << "computed" << "  status\n";
  for (const auto& r : rows) {
    os << std::left << std::setw(6) << r.type << std::right << std::setw(4) << r.m << std::setw(10)
       << (r.expected ? std::to_string(*r.expected) : "-") << std::setw(10)
       << (r.computed ? std::to_string(*r.computed) : "-") << "  "
       << (!r.computed ? r.note : (r.matches() ? "match" : "MISMATCH")) << '\n';
  }
  return os.str();
}

inline Json sigma_json(const std::string& type, const SigmaGraph& g) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = type;
  j["word"] = g.word().str();
  j["m"] = g.m();
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", e.from}, {"to", e.to}, {"kind", to_string(e.kind)}});
  j["edges"] = edges;
  j["bounded"] = g.word().bounded_indices();
  return j;
}

inline Json verify_json(const VerifyReport& r) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["check"] = r.check;
  j["group"] = r.group;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["trials"] = r.trials;
  j["evaluations"] = r.evaluations;
  j["failure_count"] = r.failure_count;
  Json fails = Json::array();
  for (const auto& f : r.failures) fails.push_back({{"seed", f.seed}, {"detail", f.detail}});
  j["failures"] = fails;
  return j;
}

}  // namespace bruhat
