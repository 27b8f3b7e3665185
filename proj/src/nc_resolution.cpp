#include "mbfun/nc_resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

namespace mbfun {

void NCChart::validate() const {
  const std::string who = label.empty() ? "chart" : "chart " + label;
  if (a.empty()) throw std::invalid_argument(who + ": empty exponent vectors");
  if (b.size() != a.size() || kappa.size() != a.size()) {
    throw std::invalid_argument(who + ": a, b and kappa must have the same length");
  }
  for (const auto* v : {&a, &b, &kappa}) {
    if (std::any_of(v->begin(), v->end(), [](auto e) { return e < 0; })) {
      throw std::invalid_argument(who + ": exponents must be nonnegative");
    }
  }
  const auto zero = [](const std::vector<std::int64_t>& v) {
    return std::all_of(v.begin(), v.end(), [](auto e) { return e == 0; });
  };
  if (zero(a) && zero(b)) throw std::invalid_argument(who + ": a and b are both zero");
}

RationalSet roots_nc(const NCChart& chart, std::int64_t m) {
  chart.validate();
  RationalSet out;
  for (std::size_t i = 0; i < chart.dimension(); ++i) {
    const std::int64_t c = chart.a[i] - chart.b[i];
    if (c <= 0) continue;
    for (std::int64_t k = 1; k <= c; ++k) {
      Rational r(Integer(static_cast<long>(m * chart.b[i] - k)), Integer(static_cast<long>(c)));
      r.canonicalize();
      out.insert(r);
    }
  }
  return out;
}

BoundSet bound_set(const std::vector<NCChart>& charts, std::int64_t m) {
  if (charts.empty()) throw std::invalid_argument("at least one chart is required");
  BoundSet B;
  for (const auto& c : charts) B.residues.merge(roots_nc(c, m));
  return B;
}

bool member(const BoundSet& B, const Rational& r) {
  return std::any_of(B.residues.begin(), B.residues.end(), [&](const Rational& q) {
    const Rational d = q - r;
    return is_integer(d) && d >= 0;
  });
}

RationalSet eigenvalue_classes(const std::vector<Rational>& roots) {
  RationalSet out;
  for (const auto& r : roots) out.insert(fractional_part(r));
  return out;
}

std::optional<std::int64_t> check_lemma4(const std::vector<Rational>& roots_small_m,
                                         const std::vector<Rational>& roots_big_m, std::int64_t l_cap) {
  std::int64_t need = 0;
  for (const auto& r : roots_small_m) {
    std::optional<Integer> best;
    for (const auto& q : roots_big_m) {
      const Rational d = q - r;
      if (!is_integer(d) || d < 0) continue;
      const Integer i = d.get_num();
      if (!best || i < *best) best = i;
    }
    if (!best || *best > l_cap) return std::nullopt;
    need = std::max<std::int64_t>(need, best->get_si());
  }
  return need;
}

namespace {

std::vector<std::int64_t> int_array(const nlohmann::json& j, const char* key, const std::string& who) {
  if (!j.contains(key) || !j.at(key).is_array()) {
    throw std::invalid_argument(who + ": missing integer array \"" + key + "\"");
  }
  std::vector<std::int64_t> out;
  for (const auto& e : j.at(key)) {
    if (!e.is_number_integer()) throw std::invalid_argument(who + ": \"" + key + "\" must hold integers");
    out.push_back(e.get<std::int64_t>());
  }
  return out;
}

}  // namespace

std::vector<NCChart> parse_charts(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("chart file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("charts") || !doc.at("charts").is_array()) {
    throw std::invalid_argument("chart file needs a top-level \"charts\" array");
  }
  std::vector<NCChart> charts;
  for (const auto& c : doc.at("charts")) {
    if (!c.is_object()) throw std::invalid_argument("each chart must be an object");
    NCChart chart;
    if (c.contains("label")) {
      if (!c.at("label").is_string()) throw std::invalid_argument("chart label must be a string");
      chart.label = c.at("label").get<std::string>();
    }
    const std::string who = "chart " + (chart.label.empty() ? std::to_string(charts.size()) : chart.label);
    chart.a = int_array(c, "a", who);
    chart.b = int_array(c, "b", who);
    chart.kappa = c.contains("kappa") ? int_array(c, "kappa", who) : std::vector<std::int64_t>(chart.a.size(), 0);
    chart.validate();
    charts.push_back(std::move(chart));
  }
  if (charts.empty()) throw std::invalid_argument("chart file has no charts");
  return charts;
}

std::string charts_to_json(const std::vector<NCChart>& charts) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : charts) {
    arr.push_back({{"label", c.label}, {"a", c.a}, {"b", c.b}, {"kappa", c.kappa}});
  }
  return nlohmann::json{{"charts", arr}}.dump();
}

std::vector<std::string> chart_coordinates(std::size_t n) {
  if (n <= 3) {
    const std::vector<std::string> xyz{"x", "y", "z"};
    return {xyz.begin(), xyz.begin() + static_cast<std::ptrdiff_t>(n)};
  }
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

}  // namespace mbfun
