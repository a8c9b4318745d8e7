#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "oblab/bipolarity.hpp"
#include "oblab/matrix.hpp"
#include "oblab/rational.hpp"
#include "oblab/seifert.hpp"

namespace oblab {

using Json = nlohmann::ordered_json;

/// Exact rational as {"num","den"} decimal strings; no floating point.
inline Json rat_json(const Rat& v) {
  Rat c = v;
  c.canonicalize();
  return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

inline Json int_json(const Int& v) { return Json(v.get_str()); }

inline Json int_matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json rat_matrix_json(const RatMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rat_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Seifert matrix input: {"name": ..., "matrix": [[...], ...]}.
inline SeifertMatrix seifert_from_json(const Json& j) {
  if (!j.contains("matrix") || !j["matrix"].is_array())
    throw std::invalid_argument("expected a \"matrix\" array");
  const Json& rows = j["matrix"];
  IntMatrix v(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != rows.size())
      throw std::invalid_argument("matrix must be square");
    for (std::size_t k = 0; k < rows.size(); ++k) {
      const Json& e = rows[i][k];
      v(i, k) = e.is_string() ? Int(e.get<std::string>().c_str())
                              : Int(e.get<long>());
    }
  }
  return SeifertMatrix(v);
}

inline Json level_json(const Level& l) {
  return l.forall ? Json("forall") : Json(l.n);
}

inline Level level_from_json(const Json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() != "forall")
      throw std::invalid_argument("bad level");
    return Level::all();
  }
  return Level::at(j.get<long>());
}

inline Json certificate_json(const Certificate& c) {
  Json j;
  j["rule"] = c.rule;
  j["knot"] = c.knot;
  j["polarity"] = polarity_str(c.polarity);
  j["level"] = level_json(c.level);
  if (!c.attribute.empty()) j["attribute"] = c.attribute;
  if (c.rule == "satellite") {
    j["pattern"] = c.pattern;
    j["depth"] = c.depth.omega ? Json("omega") : Json(c.depth.k);
  }
  if (!c.premises.empty()) {
    Json prem = Json::array();
    for (const auto& p : c.premises) prem.push_back(certificate_json(p));
    j["premises"] = std::move(prem);
  }
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  Certificate c;
  c.rule = j.at("rule").get<std::string>();
  c.knot = j.at("knot").get<std::string>();
  std::string pol = j.at("polarity").get<std::string>();
  if (pol != "negative" && pol != "positive")
    throw std::invalid_argument("bad polarity");
  c.polarity = pol == "negative" ? Polarity::negative : Polarity::positive;
  c.level = level_from_json(j.at("level"));
  if (j.contains("attribute")) c.attribute = j["attribute"].get<std::string>();
  if (j.contains("pattern")) c.pattern = j["pattern"].get<std::string>();
  if (j.contains("depth")) {
    if (j["depth"].is_string()) {
      if (j["depth"].get<std::string>() != "omega")
        throw std::invalid_argument("bad depth");
      c.depth = EtaDepth::null_homotopic();
    } else {
      c.depth = EtaDepth::of(j["depth"].get<long>());
    }
  }
  if (j.contains("premises"))
    for (const Json& p : j["premises"])
      c.premises.push_back(certificate_from_json(p));
  return c;
}

inline Json fact_base_json(const FactBase& f) {
  Json j = Json::object();
  for (const auto& [knot, attrs] : f) {
    Json a = Json::array();
    for (const auto& s : attrs) a.push_back(s);
    j[knot] = std::move(a);
  }
  return j;
}

inline FactBase fact_base_from_json(const Json& j) {
  FactBase f;
  for (auto it = j.begin(); it != j.end(); ++it)
    for (const Json& a : it.value()) f[it.key()].insert(a.get<std::string>());
  return f;
}

}  // namespace oblab
