#pragma once

#include <sstream>
#include <string>

#include "json.hpp"

#include "corel/matrix.hpp"
#include "corel/validation.hpp"

namespace corel::cli {

// Reports must be byte-identical across runs, so everything below is a pure
// function of the input and nlohmann's ordered_json keeps key order fixed.
using json = nlohmann::ordered_json;

inline json matrix_json(const RatMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline std::string format_matrix(const RatMatrix& m, const std::string& indent) {
  std::ostringstream out;
  if (m.rows() == 0) {
    out << indent << "[]\n";
    return out.str();
  }
  for (int i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (int j = 0; j < m.cols(); ++j) out << " " << to_string(m(i, j));
    out << " ]\n";
  }
  return out.str();
}

inline json checks_json(const ValidationReport& rep) {
  json arr = json::array();
  for (const auto& c : rep.checks) {
    json e;
    e["check"] = c.check;
    e["ok"] = c.ok;
    if (!c.detail.empty()) e["detail"] = c.detail;
    arr.push_back(std::move(e));
  }
  return arr;
}

inline void print_checks(std::ostringstream& out, const ValidationReport& rep) {
  for (const auto& c : rep.checks) {
    out << "  [" << (c.ok ? "ok" : "FAIL") << "] " << c.check;
    if (!c.ok && !c.detail.empty()) out << " (" << c.detail << ")";
    out << "\n";
  }
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace corel::cli
