#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "mbfun/mero.hpp"
#include "mbfun/multiplier.hpp"
#include "mbfun/nc_resolution.hpp"
#include "mbfun/unipoly.hpp"

namespace mbfun {

inline constexpr const char* kReportSchemaVersion = "1";

nlohmann::json rational_json(const Rational& r);  // "p/q"
nlohmann::json rationals_json(const std::vector<Rational>& rs);
nlohmann::json rationals_json(const RationalSet& rs);

// {"polynomial", "factored", "coefficients", "splits", "roots": [{"root", "multiplicity"}]}
nlohmann::json bfunction_json(const BFunction& b);
nlohmann::json witness_json(const EquationWitness& w, unsigned N);
nlohmann::json mero_json(const MeroResult& r);
nlohmann::json chart_json(const NCChart& c);
nlohmann::json jump_report_json(const JumpReport& r, const std::vector<std::string>& coords);

// Top-level report: schema_version, command, inputs, status, result, notes.
struct Report {
  std::vector<std::string> command;
  nlohmann::json inputs = nlohmann::json::object();
  std::string status = "CERTIFIED";
  nlohmann::json result = nlohmann::json::object();
  std::vector<std::string> notes;
  std::optional<double> seconds;

  nlohmann::json to_json() const;
  // Indented "key: value" text for terminals.
  std::string to_text() const;
};

}  // namespace mbfun
