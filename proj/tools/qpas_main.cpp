#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "qpas/analysis.hpp"
#include "qpas/appendix.hpp"
#include "qpas/families.hpp"
#include "qpas/io.hpp"
#include "qpas/report.hpp"

namespace {

using json = nlohmann::ordered_json;

struct global_options {
  double tolerance = 0.0;  // 0: defaults
  std::string format = "json";
  std::string output;
  int threads = 1;

  qpas::tolerance_policy policy() const {
    qpas::tolerance_policy tol;
    if (tolerance > 0) {
      tol.snap = tolerance;
      tol.zero = 10 * tolerance;
    }
    return tol;
  }
};

void emit(const global_options& g, const json& j) {
  const std::string text = g.format == "csv" ? qpas::json_to_csv(j) : j.dump(2) + "\n";
  if (g.output.empty())
    std::cout << text;
  else
    qpas::write_file(g.output, text);
}

void emit_text(const global_options& g, const std::string& text) {
  if (g.output.empty())
    std::cout << text;
  else
    qpas::write_file(g.output, text);
}

std::string hex64(std::uint64_t v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

int run_analyze(const global_options& g, const std::string& input, bool timing) {
  const std::string bytes = qpas::read_file(input);
  qpas::loaded_point_set lps =
      input.size() > 4 && input.substr(input.size() - 4) == ".csv"
          ? qpas::parse_point_set_csv(bytes, g.policy())
          : qpas::parse_point_set_json(bytes, g.policy());

  qpas::analyze_options opt;
  opt.threads = g.threads;
  opt.timing = timing;

  qpas::report_meta meta;
  meta.input = input;
  meta.digest = hex64(qpas::fnv1a64(bytes));
  meta.backend = lps.backend;
  meta.tol = g.policy();
  meta.threads = g.threads;
  meta.include_timing = timing;

  json rep;
  bool warned = false;
  if (auto* exact = std::get_if<qpas::point_set<qpas::Rat>>(&lps.data)) {
    auto ar = qpas::analyze(*exact, opt);
    warned = !ar.warnings.empty();
    rep = qpas::render_report(ar, meta);
  } else {
    auto ar = qpas::analyze(std::get<qpas::point_set<double>>(lps.data), opt);
    warned = !ar.warnings.empty();
    rep = qpas::render_report(ar, meta);
  }
  emit(g, rep);
  if (warned) std::cerr << "analyze: completed with warnings (see report)\n";
  return 0;
}

std::string quad_entry_str(const qpas::appendix1_parameters& ap, const qpas::quad_expr& e) {
  if (e.v == 0) return qpas::rat_str(e.u);
  if (ap.alpha) {
    qpas::Rat v = e.u + e.v * *ap.alpha;
    return qpas::rat_str(v);
  }
  return qpas::rat_str(e.u) + "+" + qpas::rat_str(e.v) + "*sqrt(" +
         qpas::rat_str(ap.alpha_sq) + ")";
}

json quad_matrix_json(const qpas::appendix1_parameters& ap, const qpas::quad_matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(quad_entry_str(ap, e));
    out.push_back(std::move(r));
  }
  return out;
}

json rat_matrix_json(const qpas::rat_matrix& m) {
  json out = json::array();
  for (const auto& row : m) {
    json r = json::array();
    for (const auto& e : row) r.push_back(qpas::rat_str(e));
    out.push_back(std::move(r));
  }
  return out;
}

int run_params(const global_options& g, int appendix, int n, long long big_n, int r) {
  json j;
  if (appendix == 1) {
    const qpas::appendix1_parameters ap = qpas::appendix1(n, big_n);
    qpas::validate_appendix1(ap);
    j["appendix"] = 1;
    j["n"] = ap.n;
    j["N"] = ap.N;
    j["x_size"] = 2 * ap.N;
    j["alpha_sq"] = qpas::rat_str(ap.alpha_sq);
    j["alpha"] = ap.alpha ? json(qpas::rat_str(*ap.alpha)) : json(nullptr);
    for (int i = 0; i < 5; ++i)
      j["B" + std::to_string(i)] = quad_matrix_json(ap, ap.B[static_cast<std::size_t>(i)]);
    j["P"] = quad_matrix_json(ap, ap.P);
    j["Q"] = quad_matrix_json(ap, ap.Q);
    j["B1_star"] = rat_matrix_json(ap.B1_star);
  } else if (appendix == 2) {
    const qpas::appendix2_parameters ap = qpas::appendix2(r);
    j["appendix"] = 2;
    j["r"] = ap.r;
    j["n"] = ap.n;
    j["N"] = ap.N;
    j["x_size"] = 2 * ap.N;
    for (int i = 0; i < 5; ++i)
      j["B" + std::to_string(i)] = rat_matrix_json(ap.B[static_cast<std::size_t>(i)]);
    j["P"] = rat_matrix_json(ap.P);
    j["Q"] = rat_matrix_json(ap.Q);
    j["B1_star"] = rat_matrix_json(ap.B1_star);
  } else {
    throw CLI::ValidationError("--appendix must be 1 or 2");
  }
  emit(g, j);
  return 0;
}

int run_scan(const global_options& g, const std::string& m_range, int n_max) {
  long long m_lo = 0, m_hi = 0;
  const auto dots = m_range.find("..");
  try {
    if (dots == std::string::npos) {
      m_lo = m_hi = std::stoll(m_range);
    } else {
      m_lo = std::stoll(m_range.substr(0, dots));
      m_hi = std::stoll(m_range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw CLI::ValidationError("--m expects an integer or a range like 2..5");
  }
  const auto candidates = qpas::feasibility_scan(n_max, m_lo, m_hi);
  json j;
  j["m_min"] = m_lo;
  j["m_max"] = m_hi;
  j["n_max"] = n_max;
  json list = json::array();
  for (const auto& c : candidates) {
    json e;
    e["n"] = c.n;
    e["N"] = c.N;
    e["x_size"] = 2 * c.N;
    e["m"] = c.m;
    json mult = json::array();
    for (const auto& mv : c.multiplicities) mult.push_back(mv.get_str());
    e["multiplicities"] = std::move(mult);
    e["krein_min"] = qpas::rat_str(c.krein_min);
    e["rational"] = c.rational_ok;
    e["integral"] = c.integral_ok;
    e["nonnegative"] = c.nonnegative_ok;
    list.push_back(std::move(e));
  }
  j["candidates"] = std::move(list);
  emit(g, j);
  return 0;
}

int run_generate(const global_options& g, const std::string& family, int n, int r,
                 const std::string& from_bases) {
  const auto write_rat = [&](const qpas::point_set<qpas::Rat>& ps) {
    emit_text(g, g.format == "csv" ? qpas::point_set_to_csv(ps) : qpas::point_set_to_json(ps));
  };
  const auto write_float = [&](const qpas::point_set<double>& ps) {
    emit_text(g, g.format == "csv" ? qpas::point_set_to_csv(ps) : qpas::point_set_to_json(ps));
  };

  if (family == "cross") {
    write_rat(qpas::cross_polytope(n, g.policy()));
  } else if (family == "icosahedron") {
    write_float(qpas::icosahedron(g.policy()));
  } else if (family == "simplex") {
    write_float(qpas::simplex(n, g.policy()));
  } else if (family == "mub") {
    if (!from_bases.empty()) {
      const qpas::mub_bases_file bf = qpas::read_mub_bases(from_bases);
      write_rat(qpas::mub_from_bases(bf.dimension, bf.bases, g.policy()));
    } else {
      write_rat(qpas::real_mub_design(r, g.policy()));
    }
  } else {
    throw CLI::ValidationError("unknown family '" + family +
                               "' (expected cross|icosahedron|simplex|mub)");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Association-scheme parameters of antipodal spherical designs"};
  app.require_subcommand(1);
  app.fallthrough();

  global_options g;
  app.add_option("--tolerance", g.tolerance,
                 "Clustering tolerance (zero test uses 10x this value)");
  app.add_option("--format", g.format, "Output format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--output,-o", g.output, "Output path (default stdout)");
  app.add_option("--threads", g.threads, "Worker threads for Gram and triple counting")
      ->check(CLI::PositiveNumber);

  std::string analyze_input;
  bool analyze_timing = false;
  auto* analyze = app.add_subcommand("analyze", "Analyze a point-set file end to end");
  analyze->add_option("input", analyze_input, "Point-set file (.json or .csv)")->required();
  analyze->add_flag("--timing", analyze_timing, "Include stage timings in the report");

  std::string gen_family;
  int gen_n = 4;
  int gen_r = 1;
  std::string gen_bases;
  auto* generate = app.add_subcommand("generate", "Generate a bundled point-set family");
  generate->add_option("--family", gen_family, "cross|icosahedron|simplex|mub")->required();
  generate->add_option("--n", gen_n, "Dimension parameter (cross, simplex)");
  generate->add_option("--r", gen_r, "MUB parameter (n = 2^{2r})");
  generate->add_option("--from-bases", gen_bases, "MUB escape hatch: bases file to validate");

  int par_appendix = 0;
  int par_n = 0;
  long long par_big_n = 0;
  int par_r = 1;
  auto* params = app.add_subcommand("params", "Evaluate closed-form parameter tables");
  params->add_option("--appendix", par_appendix, "1 (general n, N) or 2 (n = 2^{2r})")
      ->required();
  params->add_option("--n", par_n, "Dimension n (appendix 1)");
  params->add_option("--N", par_big_n, "Half the point count (appendix 1)");
  params->add_option("--r", par_r, "Family parameter r (appendix 2)");

  std::string scan_m = "2..5";
  int scan_n_max = 64;
  auto* scan = app.add_subcommand("scan", "Feasibility scan over alpha = 1/m");
  scan->add_option("--m", scan_m, "m value or range, e.g. 4 or 2..5");
  scan->add_option("--n-max", scan_n_max, "Largest dimension to scan");

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) return run_analyze(g, analyze_input, analyze_timing);
    if (generate->parsed()) return run_generate(g, gen_family, gen_n, gen_r, gen_bases);
    if (params->parsed()) return run_params(g, par_appendix, par_n, par_big_n, par_r);
    if (scan->parsed()) return run_scan(g, scan_m, scan_n_max);
  } catch (const qpas::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qpas::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::Error& e) {
    return app.exit(e);
  }
  return 0;
}
