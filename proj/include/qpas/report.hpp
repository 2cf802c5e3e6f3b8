#pragma once

#include <json.hpp>

#include <string>

#include "qpas/analysis.hpp"
#include "qpas/io.hpp"

namespace qpas {

struct report_meta {
  std::string input;   // path or family description
  std::string digest;  // fnv1a64 of the input bytes, hex
  std::string backend; // "rational" | "float"
  tolerance_policy tol;
  int threads = 1;
  bool include_timing = false;
};

/// Flattens a report to "path,value" CSV rows (arrays indexed, depth-first,
/// preserving key order).
std::string json_to_csv(const nlohmann::ordered_json& j);

namespace detail {

template <class S>
nlohmann::ordered_json scalar_json(const S& v, int digits) {
  return format_scalar(v, digits);
}

template <class S>
nlohmann::ordered_json vector_json(const std::vector<S>& v, int digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const S& x : v) arr.push_back(scalar_json(x, digits));
  return arr;
}

template <class S>
nlohmann::ordered_json matrix_json(const std::vector<std::vector<S>>& m, int digits) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : m) arr.push_back(vector_json(row, digits));
  return arr;
}

template <class S>
nlohmann::ordered_json clause_json(const clause_result<S>& c, int digits) {
  nlohmann::ordered_json j;
  j["pass"] = c.pass;
  j["deviation"] = scalar_json(c.deviation, digits);
  if (!c.witness.empty()) j["witness"] = c.witness;
  return j;
}

}  // namespace detail

template <class S>
nlohmann::ordered_json render_report(const analysis_result<S>& ar, const report_meta& meta) {
  using json = nlohmann::ordered_json;
  const int digits = meta.tol.report_digits;
  json j;
  j["input"] = meta.input;
  j["digest"] = meta.digest;
  j["backend"] = meta.backend;
  j["tolerance"] = {{"snap", format_scalar(meta.tol.snap, 6)},
                    {"zero", format_scalar(meta.tol.zero, 6)}};
  j["dimension"] = ar.dim;
  j["size"] = ar.size;
  j["degree"] = ar.s;
  j["strength"] = ar.t;
  j["antipodal"] = ar.anti.antipodal;
  j["hypotheses"] = {{"antipodal", ar.hypotheses.antipodal},
                     {"t_ge_2s_minus_3", ar.hypotheses.strength_ok},
                     {"applicable", ar.hypotheses.applicable}};
  j["spectrum"] = detail::vector_json(ar.spectrum_values, digits);
  if (ar.canonical) j["spectrum_canonical"] = detail::vector_json(ar.canonical->alpha, digits);
  j["distance_invariant"] = ar.distribution.invariant;
  if (!ar.distribution.per_point.empty()) {
    json row = json::array();
    for (long long c : ar.distribution.per_point[0]) row.push_back(c);
    j["distribution"] = std::move(row);
  }

  if (ar.params) {
    const scheme_parameters<S>& pr = *ar.params;
    json valencies = json::array();
    for (long long k : pr.valencies) valencies.push_back(k);
    j["valencies"] = std::move(valencies);
    j["multiplicities"] = detail::vector_json(pr.multiplicities, digits);
    j["P"] = detail::matrix_json(pr.P, digits);
    j["Q"] = detail::matrix_json(pr.Q, digits);
    json b_list = json::array();
    for (const auto& bi : pr.b_matrices) {
      json bm = json::array();
      for (const auto& row : bi) {
        json r = json::array();
        for (long long v : row) r.push_back(v);
        bm.push_back(std::move(r));
      }
      b_list.push_back(std::move(bm));
    }
    j["B"] = std::move(b_list);
    j["B1_star"] = detail::matrix_json(pr.b1_star, digits);
    json krein = json::array();
    const int m = pr.s + 1;
    for (int i = 0; i < m; ++i) {
      json plane = json::array();
      for (int jj = 0; jj < m; ++jj) {
        json row = json::array();
        for (int k = 0; k < m; ++k) row.push_back(detail::scalar_json(pr.krein.at(i, jj, k), digits));
        plane.push_back(std::move(row));
      }
      krein.push_back(std::move(plane));
    }
    j["krein"] = std::move(krein);
    j["krein_min"] = detail::scalar_json(pr.krein.min_entry, digits);
    j["q_polynomial"] = pr.q_polynomial;
    j["idempotent_ordering"] = pr.idempotent_ordering;
  }

  if (ar.theorem) {
    const theorem_report<S>& tr = *ar.theorem;
    json t;
    t["p1_signs"] = detail::clause_json(tr.p1_signs, digits);
    t["q_parity"] = detail::clause_json(tr.q_parity, digits);
    t["multiplicities"] = detail::clause_json(tr.multiplicities, digits);
    t["krein_parity"] = detail::clause_json(tr.krein_parity, digits);
    t["b1_star"] = detail::clause_json(tr.b1_star, digits);
    t["all_pass"] = tr.all_pass;
    j["theorem"] = std::move(t);
  }

  json warnings = json::array();
  for (const std::string& w : ar.warnings) warnings.push_back(w);
  j["warnings"] = std::move(warnings);

  if (meta.include_timing) {
    json t = json::array();
    for (const auto& [stage, ms] : ar.timings_ms)
      t.push_back({{"stage", stage}, {"ms", ms}});
    j["timing"] = std::move(t);
  }
  return j;
}

}  // namespace qpas
