#pragma once

// JSON forms shared by the library and the command line:
//
//   map          {"dom_gaps":[...],"ran_gaps":[...]}
//   bicyclic     {"m":...,"n":...}
//   zero / int   {"kind":"zero"} | {"kind":"int","value":...}
//   tagged map   {"kind":"map","dom_gaps":[...],"ran_gaps":[...]}
//   solutions    {"equation":{...},"solutions":[map, ...]}

#include <string>
#include <vector>

#include "json.hpp"

#include "cofin/bicyclic.hpp"
#include "cofin/cof_map.hpp"
#include "cofin/extensions.hpp"
#include "cofin/green.hpp"

namespace cofin {

using Json = nlohmann::ordered_json;

inline Json to_json(GapSet const& s) {
  Json out = Json::array();
  for (Int v : s) out.push_back(v);
  return out;
}

inline Json to_json(CofMap const& g) {
  return Json{{"dom_gaps", to_json(g.dom_gaps())}, {"ran_gaps", to_json(g.ran_gaps())}};
}

inline Json to_json(Bicyclic const& x) { return Json{{"m", x.m}, {"n", x.n}}; }

inline Json tagged_map_json(CofMap const& g) {
  return Json{{"kind", "map"}, {"dom_gaps", to_json(g.dom_gaps())}, {"ran_gaps", to_json(g.ran_gaps())}};
}

inline Json to_json(GroupInt x) { return Json{{"kind", "int"}, {"value", x.value}}; }
inline Json to_json(AdjoinedZero) { return Json{{"kind", "zero"}}; }

inline Json to_json(ZeroElement const& x) {
  if (auto const* g = std::get_if<CofMap>(&x)) return tagged_map_json(*g);
  return to_json(AdjoinedZero{});
}

inline Json to_json(AdjElement const& x) {
  if (auto const* g = std::get_if<CofMap>(&x)) return tagged_map_json(*g);
  return to_json(std::get<GroupInt>(x));
}

inline Json to_json(SolutionSet const& s) {
  Json solutions = Json::array();
  for (auto const& x : s.solutions) solutions.push_back(to_json(x));
  char const* form = s.side == Side::right ? "a*x=b" : "x*a=b";
  return Json{{"equation",
               {{"side", s.side == Side::right ? "right" : "left"},
                {"form", form},
                {"a", to_json(s.factor)},
                {"b", to_json(s.target)}}},
              {"solutions", std::move(solutions)}};
}

// Throws std::invalid_argument on schema violations.
inline GapSet gap_set_from_json(Json const& j) {
  if (!j.is_array()) throw std::invalid_argument("gap set must be a JSON array");
  std::vector<Int> values;
  for (auto const& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("gap set entries must be integers");
    values.push_back(v.get<Int>());
  }
  return GapSet(std::move(values));
}

inline CofMap cof_map_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("dom_gaps") || !j.contains("ran_gaps")) {
    throw std::invalid_argument("map must be an object with dom_gaps and ran_gaps");
  }
  return make(gap_set_from_json(j.at("dom_gaps")), gap_set_from_json(j.at("ran_gaps")));
}

inline Bicyclic bicyclic_from_json(Json const& j) {
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.at("m").is_number_unsigned() ||
      !j.at("n").is_number_unsigned()) {
    throw std::invalid_argument("bicyclic element must be an object with nonnegative m and n");
  }
  return {j.at("m").get<std::uint64_t>(), j.at("n").get<std::uint64_t>()};
}

namespace detail {
inline std::string kind_of(Json const& j) {
  if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string()) {
    throw std::invalid_argument("tagged element must carry a string \"kind\"");
  }
  return j.at("kind").get<std::string>();
}
}  // namespace detail

inline ZeroElement zero_element_from_json(Json const& j) {
  auto const kind = detail::kind_of(j);
  if (kind == "zero") return AdjoinedZero{};
  if (kind == "map") return cof_map_from_json(j);
  throw std::invalid_argument("unknown kind for zero-adjoined element: " + kind);
}

inline AdjElement adj_element_from_json(Json const& j) {
  auto const kind = detail::kind_of(j);
  if (kind == "int") {
    if (!j.contains("value") || !j.at("value").is_number_integer()) {
      throw std::invalid_argument("int element needs an integer value");
    }
    return GroupInt{j.at("value").get<Int>()};
  }
  if (kind == "map") return cof_map_from_json(j);
  throw std::invalid_argument("unknown kind for adjunction element: " + kind);
}

}  // namespace cofin
