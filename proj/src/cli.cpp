#include "mbfun/cli.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "mbfun/annihilator.hpp"
#include "mbfun/error.hpp"
#include "mbfun/mero.hpp"
#include "mbfun/multiplier.hpp"
#include "mbfun/nc_resolution.hpp"
#include "mbfun/oracle.hpp"
#include "mbfun/parser.hpp"
#include "mbfun/report.hpp"

namespace mbfun {

namespace {

using nlohmann::json;

struct Options {
  bool json_out = false;
  bool timing = false;
  std::string F, G;
  unsigned m = 0, m_prime = 0;
  std::string certify;
  unsigned max_kernel_degree = 0;
  std::string weights;
  std::optional<std::int64_t> d1, d2;
  std::string charts_file;
  std::string upper;
  std::int64_t cap = 5;
};

CertifyBounds parse_certify(const std::string& text, CertifyBounds dflt) {
  if (text.empty()) return dflt;
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--certify expects N,DEG");
  try {
    std::size_t used = 0;
    const auto part = [&](const std::string& s) {
      const long v = std::stol(s, &used);
      if (used != s.size() || v <= 0 || v > 64) throw UsageError("--certify values must be integers in 1..64");
      return static_cast<unsigned>(v);
    };
    return {part(text.substr(0, comma)), part(text.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw UsageError("--certify expects N,DEG");
  }
}

std::vector<std::int64_t> parse_weights(const std::string& text) {
  std::vector<std::int64_t> w;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw UsageError("weights must be nonnegative integers");
      w.push_back(v);
    } catch (const std::logic_error&) {
      throw UsageError("--weights expects a comma-separated list of integers");
    }
  }
  if (w.empty()) throw UsageError("--weights expects a comma-separated list of integers");
  return w;
}

MultiPoly parse_arg(const std::string& text, const char* what) {
  try {
    return parse_poly(text);
  } catch (const SyntaxError& e) {
    throw UsageError(std::string(what) + ": " + e.what());
  }
}

std::vector<NCChart> load_charts(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read chart file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_charts(ss.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(path + ": " + e.what());
  }
}

std::vector<Rational> all_roots(const std::vector<NCChart>& charts, unsigned m) {
  const auto B = bound_set(charts, m);
  return {B.residues.begin(), B.residues.end()};
}

void add_mero(Report& r, const MeroResult& res) {
  r.status = to_string(res.status);
  r.result = mero_json(res);
  r.notes.insert(r.notes.end(), res.notes.begin(), res.notes.end());
}

MeroOptions mero_options(const Options& o) {
  MeroOptions mo;
  mo.bounds = parse_certify(o.certify, {});
  mo.max_kernel_degree = o.max_kernel_degree;
  return mo;
}

json fg_inputs(const MultiPoly& F, const MultiPoly& G, std::optional<unsigned> m) {
  json j{{"F", F.to_string()}, {"G", G.to_string()}};
  if (m) j["m"] = *m;
  return j;
}

Rational parse_upper(const std::string& text) {
  try {
    const Rational q = parse_rational(text);
    if (q <= 0) throw UsageError("--upper must be positive");
    return q;
  } catch (const std::invalid_argument&) {
    throw UsageError("--upper expects a rational p/q");
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bernstein-Sato polynomials of meromorphic functions F/G", "mbfun"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "print the report as JSON");
  app.add_flag("--timing", o.timing, "include wall-clock time in the report");

  const auto fg = [&](CLI::App* c) {
    c->add_option("F", o.F, "numerator polynomial")->required();
    c->add_option("G", o.G, "denominator polynomial")->required();
    c->fallthrough();
  };

  auto* bf = app.add_subcommand("bf", "b-functions")->require_subcommand(1)->fallthrough();
  auto* classic = bf->add_subcommand("classic", "classical Bernstein-Sato polynomial of F")->fallthrough();
  classic->add_option("F", o.F, "polynomial")->required();
  classic->add_option("--certify", o.certify, "oracle bounds N,DEG (default 1,6)");
  auto* mero = bf->add_subcommand("mero", "meromorphic b-function of F/G of order m");
  fg(mero);
  mero->add_option("--m", o.m, "order m >= 0")->required();
  mero->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");
  mero->add_option("--max-kernel-degree", o.max_kernel_degree, "annihilator search degree cap");
  auto* simple = bf->add_subcommand("simple", "b-function of the single-shift equation");
  fg(simple);
  simple->add_option("--m", o.m, "order m >= 0")->required();
  simple->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");
  auto* reduced = bf->add_subcommand("reduced", "reduced b-function (quasi-homogeneous F/G)");
  fg(reduced);
  reduced->add_option("--weights", o.weights, "weights w_1,...,w_n (variables sorted by name)")->required();
  reduced->add_option("--d1", o.d1, "weighted degree of F");
  reduced->add_option("--d2", o.d2, "weighted degree of G");
  reduced->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");
  auto* sabbah = bf->add_subcommand("sabbah-line", "Bernstein-Sato ideal of (F,G) on s2 = -s-m-2");
  fg(sabbah);
  sabbah->add_option("--m", o.m, "order m >= 0")->required();

  auto* nc = app.add_subcommand("nc", "normal-crossing root bounds")->require_subcommand(1)->fallthrough();
  std::vector<CLI::App*> nc_cmds;
  for (const char* name : {"roots", "bound", "eigen"}) {
    auto* c = nc->add_subcommand(name)->fallthrough();
    c->add_option("--charts", o.charts_file, "chart JSON file")->required();
    c->add_option("--m", o.m, "order m >= 0")->required();
    nc_cmds.push_back(c);
  }
  nc_cmds[0]->description("K_q root set of each chart");
  nc_cmds[1]->description("residues of the bound set B");
  nc_cmds[2]->description("eigenvalue classes of the bound set");

  auto* jump = app.add_subcommand("jump", "jumping numbers")->require_subcommand(1)->fallthrough();
  auto* jump_nc = jump->add_subcommand("nc", "jumping numbers of each chart")->fallthrough();
  jump_nc->add_option("--charts", o.charts_file, "chart JSON file")->required();
  jump_nc->add_option("--upper", o.upper, "largest alpha (default n + max c_i)");

  auto* check = app.add_subcommand("check", "consistency checks")->require_subcommand(1)->fallthrough();
  auto* lemma4 = check->add_subcommand("lemma4", "roots for m' lie in roots for m shifted by 0..l");
  fg(lemma4);
  lemma4->add_option("--m", o.m, "larger order m")->required();
  lemma4->add_option("--m-prime", o.m_prime, "smaller order m' <= m")->required();
  lemma4->add_option("--cap", o.cap, "largest shift l (default 5)");
  lemma4->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");
  auto* thm41 = check->add_subcommand("thm41", "roots of b_mero lie in the bound set");
  fg(thm41);
  thm41->add_option("--m", o.m, "order m >= 0")->required();
  thm41->add_option("--charts", o.charts_file, "chart JSON file")->required();
  thm41->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");
  auto* corjump = check->add_subcommand("corjump", "jumping numbers against the roots of b_mero(F,G,0)");
  fg(corjump);
  corjump->add_option("--charts", o.charts_file, "chart JSON file (first chart is used)")->required();
  corjump->add_option("--upper", o.upper, "largest alpha (default n + max c_i)");
  corjump->add_option("--certify", o.certify, "oracle bounds N,DEG (default 3,6)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "mbfun: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  r.command = args;
  try {
    if (classic->parsed()) {
      const auto F = parse_arg(o.F, "F");
      const auto bounds = parse_certify(o.certify, {1, 6});
      r.inputs = {{"F", F.to_string()}};
      MeroResult res;
      res.b = bernstein_sato(F);
      certify(res, F, MultiPoly::constant(F.variables(), 1), 0, bounds);
      add_mero(r, res);
    } else if (mero->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      r.inputs = fg_inputs(F, G, o.m);
      add_mero(r, b_mero(F, G, o.m, mero_options(o)));
    } else if (simple->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      r.inputs = fg_inputs(F, G, o.m);
      add_mero(r, b_simple(F, G, o.m, mero_options(o)));
    } else if (reduced->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      const auto w = parse_weights(o.weights);
      if (w.size() != common_coordinates({F, G}).size()) {
        throw UsageError("--weights needs one entry per variable of F and G");
      }
      std::int64_t d1 = 0, d2 = 0;
      if (o.d1 && o.d2) {
        d1 = *o.d1;
        d2 = *o.d2;
      } else {
        const auto d = quasi_degrees(F, G, w);
        if (!d) throw MathError("f is not quasi-homogeneous for the given weights");
        d1 = o.d1.value_or(d->first);
        d2 = o.d2.value_or(d->second);
      }
      r.inputs = fg_inputs(F, G, std::nullopt);
      r.inputs["weights"] = w;
      r.inputs["d1"] = d1;
      r.inputs["d2"] = d2;
      add_mero(r, reduced_b(F, G, w, d1, d2, mero_options(o)));
    } else if (sabbah->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      r.inputs = fg_inputs(F, G, o.m);
      const auto res = sabbah_line(F, G, o.m);
      json ideal = json::array();
      for (const auto& p : res.ideal) ideal.push_back(p.to_string());
      r.result = {{"b", bfunction_json(res.b)}, {"ideal", ideal}};
      const auto w = verify_functional_equation(res.b, F, G, o.m, 1, 6);
      r.result["witness"] = w ? witness_json(*w, 1) : json(nullptr);
      r.status = w ? "CERTIFIED" : "UNCERTIFIED";
      if (!w) r.notes.push_back("no single-shift witness within operator degree 6");
    } else if (nc_cmds[0]->parsed() || nc_cmds[1]->parsed() || nc_cmds[2]->parsed()) {
      const auto charts = load_charts(o.charts_file);
      r.inputs = {{"charts", json::array()}, {"m", o.m}};
      for (const auto& c : charts) r.inputs["charts"].push_back(chart_json(c));
      if (nc_cmds[0]->parsed()) {
        json per = json::array();
        for (const auto& c : charts) per.push_back({{"label", c.label}, {"roots", rationals_json(roots_nc(c, o.m))}});
        r.result = {{"charts", per}, {"roots", rationals_json(all_roots(charts, o.m))}};
      } else if (nc_cmds[1]->parsed()) {
        r.result = {{"residues", rationals_json(bound_set(charts, o.m).residues)}};
      } else {
        r.result = {{"classes", rationals_json(eigenvalue_classes(all_roots(charts, o.m)))}};
      }
    } else if (jump_nc->parsed()) {
      const auto charts = load_charts(o.charts_file);
      r.inputs = {{"charts", json::array()}};
      json per = json::array();
      for (const auto& c : charts) {
        r.inputs["charts"].push_back(chart_json(c));
        const Rational upper = o.upper.empty() ? default_jump_upper(c) : parse_upper(o.upper);
        auto j = jump_report_json(jumping_numbers_nc(c, upper), chart_coordinates(c.dimension()));
        j["label"] = c.label;
        per.push_back(j);
      }
      r.result = {{"charts", per}};
    } else if (lemma4->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      if (o.m_prime > o.m) throw UsageError("--m-prime must not exceed --m");
      r.inputs = fg_inputs(F, G, o.m);
      r.inputs["m_prime"] = o.m_prime;
      r.inputs["cap"] = o.cap;
      const auto opts = mero_options(o);
      const auto big = b_mero(F, G, o.m, opts), small = b_mero(F, G, o.m_prime, opts);
      if (!big.b.splits() || !small.b.splits()) throw MathError("b-function does not split over Q");
      const auto l = check_lemma4(small.b.root_multiset(), big.b.root_multiset(), o.cap);
      r.result = {{"holds", l.has_value()},
                  {"l", l ? json(*l) : json(nullptr)},
                  {"b_m", bfunction_json(big.b)},
                  {"b_m_prime", bfunction_json(small.b)}};
      r.status = !l ? "FAILED" : (big.status == Certification::Certified && small.status == Certification::Certified)
                                     ? "CERTIFIED"
                                     : "UNCERTIFIED";
    } else if (thm41->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      const auto charts = load_charts(o.charts_file);
      r.inputs = fg_inputs(F, G, o.m);
      r.inputs["charts"] = json::array();
      for (const auto& c : charts) r.inputs["charts"].push_back(chart_json(c));
      const auto res = b_mero(F, G, o.m, mero_options(o));
      if (!res.b.splits()) throw MathError("b-function does not split over Q");
      const auto B = bound_set(charts, o.m);
      bool contained = true, negative = true;
      json outside = json::array();
      for (const auto& root : res.b.root_set()) {
        if (!member(B, root)) {
          contained = false;
          outside.push_back(rational_json(root));
        }
        if (root >= 0) negative = false;
      }
      const bool holds = contained && (o.m != 0 || negative);
      r.result = {{"holds", holds},
                  {"contained", contained},
                  {"outside", outside},
                  {"b", bfunction_json(res.b)},
                  {"residues", rationals_json(B.residues)}};
      if (o.m == 0) r.result["negative"] = negative;
      r.status = !holds ? "FAILED" : to_string(res.status);
    } else if (corjump->parsed()) {
      const auto F = parse_arg(o.F, "F"), G = parse_arg(o.G, "G");
      const auto charts = load_charts(o.charts_file);
      const auto& c = charts.front();
      r.inputs = fg_inputs(F, G, 0u);
      r.inputs["charts"] = json::array({chart_json(c)});
      const auto res = b_mero(F, G, 0, mero_options(o));
      const Rational upper = o.upper.empty() ? default_jump_upper(c) : parse_upper(o.upper);
      const auto rep = jumping_numbers_nc(c, upper);
      const bool holds = check_cor_jump(rep, res.b);
      r.result = {{"holds", holds},
                  {"b", bfunction_json(res.b)},
                  {"jumps", jump_report_json(rep, chart_coordinates(c.dimension()))}};
      r.status = !holds ? "FAILED" : to_string(res.status);
    }
  } catch (const UsageError& e) {
    err << "mbfun: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "mbfun: " << e.what() << "\n";
    return 2;
  } catch (const CapabilityError& e) {
    err << "mbfun: capability limit: " << e.what() << "\n";
    return 1;
  } catch (const MathError& e) {
    err << "mbfun: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "mbfun: internal error: " << e.what() << "\n";
    return 1;
  }
  if (o.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  if (o.json_out) {
    out << r.to_json().dump(2) << "\n";
  } else {
    out << r.to_text();
  }
  return 0;
}

}  // namespace mbfun
