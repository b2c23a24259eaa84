#pragma once

#include <fstream>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "vsl/diagram.hpp"
#include "vsl/homology.hpp"
#include "vsl/vfb.hpp"

namespace vsl {

// Insertion-ordered so emitted documents keep the schema field order.
using Json = nlohmann::ordered_json;

namespace detail {

inline void require_object_keys(const Json& j, const std::string& what,
                                std::initializer_list<const char*> required,
                                std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw std::invalid_argument(what + " must be a JSON object");
  auto in = [](const std::string& key, std::initializer_list<const char*> list) {
    for (const char* k : list)
      if (key == k) return true;
    return false;
  };
  for (const char* key : required)
    if (!j.contains(key))
      throw std::invalid_argument(what + " is missing field \"" + key + "\"");
  for (const auto& item : j.items())
    if (!in(item.key(), required) && !in(item.key(), optional))
      throw std::invalid_argument(what + " has unexpected field \"" + item.key() + "\"");
}

inline CrossingKind crossing_kind_from_string(const std::string& s) {
  if (s == "real+") return CrossingKind::RealPositive;
  if (s == "real-") return CrossingKind::RealNegative;
  if (s == "virtual") return CrossingKind::Virtual;
  if (s == "flat") return CrossingKind::Flat;
  throw std::invalid_argument("unknown crossing kind \"" + s +
                              "\" (expected real+, real-, virtual, or flat)");
}

inline Json crossing_to_json(const Crossing& c) {
  Json j;
  j["id"] = c.id;
  j["kind"] = to_string(c.kind);
  if (c.over_slot >= 0) j["over_slot"] = c.over_slot;
  if (c.left_slot >= 0) j["left_slot"] = c.left_slot;
  return j;
}

// Slots are not serialized: each crossing id appears in exactly two passage
// positions, and scanning the lines in (line, position) order recovers the
// two slots already in canonical order.
inline std::vector<Crossing> crossings_from_json(const Json& j,
                                                 const std::vector<std::vector<int>>& lines,
                                                 const std::string& what) {
  if (!j.is_array()) throw std::invalid_argument(what + ": \"crossings\" must be an array");
  std::vector<Crossing> crossings;
  crossings.reserve(j.size());
  for (const Json& cj : j) {
    require_object_keys(cj, what + " crossing", {"id", "kind"}, {"over_slot", "left_slot"});
    Crossing c;
    c.id = cj.at("id").get<int>();
    c.kind = crossing_kind_from_string(cj.at("kind").get<std::string>());
    if (cj.contains("over_slot")) c.over_slot = cj.at("over_slot").get<int>();
    if (cj.contains("left_slot")) c.left_slot = cj.at("left_slot").get<int>();
    crossings.push_back(c);
  }
  for (Crossing& c : crossings) {
    int found = 0;
    for (std::size_t line = 0; line < lines.size(); ++line)
      for (std::size_t pos = 0; pos < lines[line].size(); ++pos)
        if (lines[line][pos] == c.id) {
          if (found < 2)
            c.slots[static_cast<std::size_t>(found)] = {static_cast<int>(line),
                                                        static_cast<int>(pos)};
          ++found;
        }
    if (found != 2)
      throw std::invalid_argument(what + ": crossing " + std::to_string(c.id) +
                                  " must appear in exactly two passages, found " +
                                  std::to_string(found));
  }
  return crossings;
}

}  // namespace detail

/** Schema: {n, strands: [[crossing id…]…], pi: 1-based endpoint permutation,
 *  crossings: [{id, kind, over_slot?, left_slot?}…]}. */
inline Json to_json(const StringLinkDiagram& d) {
  require_valid(d);
  Json j;
  j["n"] = d.n;
  j["strands"] = d.strands;
  std::vector<int> pi;
  pi.reserve(d.end_lane.size());
  for (int lane : d.end_lane) pi.push_back(lane + 1);
  j["pi"] = pi;
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings) crossings.push_back(detail::crossing_to_json(c));
  j["crossings"] = std::move(crossings);
  return j;
}

inline StringLinkDiagram string_link_from_json(const Json& j) {
  const std::string what = "string link diagram";
  detail::require_object_keys(j, what, {"n", "strands", "pi", "crossings"});
  StringLinkDiagram d;
  d.n = j.at("n").get<int>();
  d.strands = j.at("strands").get<std::vector<std::vector<int>>>();
  for (int lane : j.at("pi").get<std::vector<int>>()) d.end_lane.push_back(lane - 1);
  d.crossings = detail::crossings_from_json(j.at("crossings"), d.strands, what);
  require_valid(d);
  return d;
}

/** Schema: {components: [[crossing id…]…], crossings: as for string links}. */
inline Json to_json(const FlatLinkDiagram& d) {
  require_valid(d);
  Json j;
  j["components"] = d.components;
  Json crossings = Json::array();
  for (const Crossing& c : d.crossings) crossings.push_back(detail::crossing_to_json(c));
  j["crossings"] = std::move(crossings);
  return j;
}

inline FlatLinkDiagram flat_link_from_json(const Json& j) {
  const std::string what = "flat link diagram";
  detail::require_object_keys(j, what, {"components", "crossings"});
  FlatLinkDiagram d;
  d.components = j.at("components").get<std::vector<std::vector<int>>>();
  d.crossings = detail::crossings_from_json(j.at("crossings"), d.components, what);
  require_valid(d);
  return d;
}

/** Schema: {order, star: [[..]], circ: [[..]]}; row = left operand b,
 *  column = right operand a. */
inline Json to_json(const FiniteVfb& S) {
  detail::require_table_shape(S);
  Json j;
  j["order"] = S.order;
  j["star"] = S.star;
  j["circ"] = S.circ;
  return j;
}

/** Parses and shape-checks a table; the axioms are NOT checked here, so a
 *  loaded table can be handed to validate_vfb for a report. */
inline FiniteVfb vfb_from_json(const Json& j) {
  detail::require_object_keys(j, "virtual flat biquandle", {"order", "star", "circ"});
  FiniteVfb S;
  S.order = j.at("order").get<int>();
  S.star = j.at("star").get<std::vector<std::vector<int>>>();
  S.circ = j.at("circ").get<std::vector<std::vector<int>>>();
  detail::require_table_shape(S);
  return S;
}

/** Schema: {coeff: "Z" or "Z<m>", table: square integer matrix}. */
inline Json to_json(const Cochain2& phi) {
  Json j;
  j["coeff"] = to_string(phi.coeff);
  Json table = Json::array();
  for (const auto& row : phi.table) {
    Json jr = Json::array();
    for (const Int& v : row) {
      if (!v.fits_slong_p())
        throw std::invalid_argument("cochain entry " + int_str(v) + " does not fit in JSON");
      jr.push_back(static_cast<long long>(v.get_si()));
    }
    table.push_back(std::move(jr));
  }
  j["table"] = std::move(table);
  return j;
}

inline Cochain2 cochain2_from_json(const Json& j) {
  const std::string what = "cochain";
  detail::require_object_keys(j, what, {"coeff", "table"});
  Cochain2 phi;
  phi.coeff = parse_coefficients(j.at("coeff").get<std::string>());
  for (const auto& row : j.at("table").get<std::vector<std::vector<long>>>()) {
    phi.table.emplace_back();
    for (long v : row) phi.table.back().push_back(phi.coeff.reduce(Int(v)));
  }
  const std::size_t m = phi.table.size();
  if (m == 0) throw std::invalid_argument(what + ": table must be nonempty");
  for (const auto& row : phi.table)
    if (row.size() != m)
      throw std::invalid_argument(what + ": table must be square, got a row of " +
                                  std::to_string(row.size()) + " entries in a " +
                                  std::to_string(m) + "-row table");
  return phi;
}

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

inline void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

}  // namespace vsl
