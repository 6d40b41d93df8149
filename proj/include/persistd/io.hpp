#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "persistd/bottleneck.hpp"
#include "persistd/error.hpp"
#include "persistd/interval.hpp"
#include "persistd/pmodule.hpp"

// Serialization of modules and certificates.
//
//   module:      {"summands": [{"interval": "[0,2)", "multiplicity": 1}, ...]}
//   certificate: {"threshold": "p/q", "pairs": [[i,j], ...],
//                 "unmatched_m": [...], "unmatched_n": [...]}
//
// A bare JSON string holding an interval is read as a one-summand module.

namespace persistd {

using json = nlohmann::json;

inline json module_to_json(const PModule& m) {
  json summands = json::array();
  for (const auto& s : m.summands()) {
    summands.push_back({{"interval", to_string(s.interval)}, {"multiplicity", s.multiplicity}});
  }
  return {{"summands", std::move(summands)}};
}

inline std::string serialize_module(const PModule& m) { return module_to_json(m).dump(); }

namespace detail {

inline Interval summand_interval(const std::string& text, const std::string& where) {
  Interval i;
  try {
    i = parse_interval(text);
  } catch (const ParseError& e) {
    throw ParseError(where + ": " + e.message(), e.position());
  }
  if (i.is_empty()) throw ParseError(where + ": summand interval is empty", 0);
  return i;
}

// nlohmann reports the 1-based index of the last byte read.
inline std::size_t json_error_offset(const json::parse_error& e) { return e.byte > 0 ? e.byte - 1 : 0; }

}  // namespace detail

inline PModule module_from_json(const json& doc) {
  if (doc.is_string()) return PModule({detail::summand_interval(doc.get<std::string>(), "module")});
  if (!doc.is_object() || !doc.contains("summands") || !doc["summands"].is_array()) {
    throw ParseError("module JSON must be an object with a \"summands\" array", 0);
  }
  std::vector<Summand> summands;
  std::size_t index = 0;
  for (const auto& entry : doc["summands"]) {
    const std::string where = "summands[" + std::to_string(index++) + "]";
    if (!entry.is_object() || !entry.contains("interval") || !entry["interval"].is_string()) {
      throw ParseError(where + ": expected {\"interval\": <text>, \"multiplicity\": n}", 0);
    }
    std::size_t mult = 1;
    if (entry.contains("multiplicity")) {
      const auto& m = entry["multiplicity"];
      if (!m.is_number_unsigned() || m.get<std::size_t>() == 0) {
        throw ParseError(where + ": multiplicity must be a positive integer", 0);
      }
      mult = m.get<std::size_t>();
    }
    summands.push_back(
        {detail::summand_interval(entry["interval"].get<std::string>(), where + ".interval"), mult});
  }
  return PModule(std::move(summands));
}

/// Parses the JSON module format. JSON syntax errors carry the byte offset
/// of the failure; interval errors name the summand and the offset inside
/// its interval text.
inline PModule parse_module(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), detail::json_error_offset(e));
  }
  return module_from_json(doc);
}

inline json certificate_to_json(const MatchingCertificate& cert) {
  json pairs = json::array();
  for (const auto& [i, j] : cert.pairs) pairs.push_back({i, j});
  return {{"threshold", to_string(cert.threshold)},
          {"pairs", std::move(pairs)},
          {"unmatched_m", cert.unmatched_m},
          {"unmatched_n", cert.unmatched_n}};
}

inline MatchingCertificate certificate_from_json(const json& doc) {
  try {
    MatchingCertificate cert;
    cert.threshold = Distance(parse_ext_rational(doc.at("threshold").get<std::string>()));
    for (const auto& p : doc.at("pairs")) {
      if (!p.is_array() || p.size() != 2) throw ParseError("pairs must be [i,j] arrays", 0);
      cert.pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    cert.unmatched_m = doc.at("unmatched_m").get<std::vector<std::size_t>>();
    cert.unmatched_n = doc.at("unmatched_n").get<std::vector<std::size_t>>();
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  } catch (const DomainError& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what(), 0);
  }
}

inline MatchingCertificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), detail::json_error_offset(e));
  }
  return certificate_from_json(doc);
}

}  // namespace persistd
