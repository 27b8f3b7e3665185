#include "mbfun/report.hpp"

#include <sstream>

namespace mbfun {

using nlohmann::json;

json rational_json(const Rational& r) { return to_pq_string(r); }

json rationals_json(const std::vector<Rational>& rs) {
  json a = json::array();
  for (const auto& r : rs) a.push_back(rational_json(r));
  return a;
}

json rationals_json(const RationalSet& rs) { return rationals_json(std::vector<Rational>(rs.begin(), rs.end())); }

json bfunction_json(const BFunction& b) {
  json coeffs = json::array();
  for (const auto& c : b.poly().coefficients()) coeffs.push_back(rational_json(c));
  json roots = json::array();
  if (b.roots()) {
    for (const auto& rm : *b.roots()) {
      roots.push_back({{"root", rational_json(rm.root)}, {"multiplicity", rm.multiplicity}});
    }
  }
  return {{"polynomial", b.poly().to_string()},
          {"factored", b.to_string()},
          {"coefficients", coeffs},
          {"splits", b.splits()},
          {"roots", roots}};
}

json witness_json(const EquationWitness& w, unsigned N) {
  json ops = json::array();
  for (const auto& P : w.operators) ops.push_back(P.to_string());
  return {{"N", N}, {"g_multiplier", w.g_multiplier}, {"b", w.b.to_string()}, {"operators", ops}};
}

json mero_json(const MeroResult& r) {
  json j{{"b", bfunction_json(r.b)}, {"kernel_degree", r.kernel_degree}};
  j["witness"] = r.witness ? witness_json(*r.witness, r.witness_N) : json(nullptr);
  return j;
}

json chart_json(const NCChart& c) { return {{"label", c.label}, {"a", c.a}, {"b", c.b}, {"kappa", c.kappa}}; }

json jump_report_json(const JumpReport& r, const std::vector<std::string>& coords) {
  json ideals = json::array();
  for (const auto& I : r.ideals) ideals.push_back(I.to_string(coords));
  return {{"jumps", rationals_json(r.jumps)},
          {"ideals", ideals},
          {"lct", r.lct ? rational_json(*r.lct) : json(nullptr)},
          {"upper", rational_json(r.upper)}};
}

json Report::to_json() const {
  json j{{"schema_version", kReportSchemaVersion},
         {"command", command},
         {"inputs", inputs},
         {"status", status},
         {"result", result},
         {"notes", notes}};
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

namespace {

void emit(std::ostringstream& os, const json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_object() || (v.is_array() && !v.empty() && (v.front().is_object() || v.front().is_array()))) {
        os << pad << k << ":\n";
        emit(os, v, indent + 2);
      } else {
        os << pad << k << ": ";
        emit(os, v, 0);
        os << "\n";
      }
    }
  } else if (j.is_array()) {
    if (!j.empty() && (j.front().is_object() || j.front().is_array())) {
      for (const auto& v : j) {
        os << pad << "-\n";
        emit(os, v, indent + 2);
      }
    } else {
      os << "[";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ", ";
        emit(os, j[i], 0);
      }
      os << "]";
    }
  } else if (j.is_string()) {
    os << j.get<std::string>();
  } else if (j.is_null()) {
    os << "-";
  } else {
    os << j.dump();
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  std::string cmd;
  for (const auto& c : command) cmd += (cmd.empty() ? "" : " ") + c;
  os << "command: " << cmd << "\n";
  os << "status: " << status << "\n";
  if (!inputs.empty()) {
    os << "inputs:\n";
    emit(os, inputs, 2);
  }
  os << "result:\n";
  emit(os, result, 2);
  for (const auto& n : notes) os << "note: " << n << "\n";
  if (seconds) os << "seconds: " << *seconds << "\n";
  return os.str();
}

}  // namespace mbfun
