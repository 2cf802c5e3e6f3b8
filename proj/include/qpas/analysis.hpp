#pragma once

#include <chrono>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpas/pointset.hpp"
#include "qpas/scheme.hpp"
#include "qpas/theorems.hpp"

namespace qpas {

struct analyze_options {
  int threads = 1;
  int t_max = -1;  // < 0: probe up to 2s (the theoretical maximum)
  bool timing = false;
};

template <class S>
struct analysis_result {
  int dim = 0;
  int size = 0;
  std::vector<S> spectrum_values;  // A(X) ascending
  int s = 0;
  int t = 0;
  antipodal_info anti;
  hypothesis_record hypotheses;
  std::optional<inner_product_spectrum<S>> canonical;
  distance_distribution_result distribution;
  std::optional<scheme_parameters<S>> params;
  std::optional<theorem_report<S>> theorem;
  std::vector<std::string> warnings;
  std::vector<std::pair<std::string, double>> timings_ms;
};

/// Full pipeline: Gram -> spectrum -> strength/antipodality -> classes ->
/// triple counting -> parameters -> theorem clauses. Hypothesis failures are
/// findings (recorded, extraction skipped); tolerance and scheme violations
/// propagate as exceptions.
template <class S>
analysis_result<S> analyze(const point_set<S>& ps, const analyze_options& opt = {}) {
  using clock = std::chrono::steady_clock;
  analysis_result<S> out;
  out.dim = ps.dim();
  out.size = ps.size();

  auto t0 = clock::now();
  auto lap = [&](const char* stage) {
    if (!opt.timing) return;
    const auto t1 = clock::now();
    out.timings_ms.emplace_back(
        stage, std::chrono::duration<double, std::milli>(t1 - t0).count());
    t0 = t1;
  };

  const gram_matrix<S> gm = compute_gram(ps, opt.threads);
  lap("gram");
  const spectrum_info<S> sp = spectrum(ps, gm);
  out.spectrum_values = sp.values;
  out.s = sp.degree();
  out.anti = is_antipodal(gm, ps.tol());
  lap("spectrum");

  const int t_cap = opt.t_max > 0 ? opt.t_max : 2 * out.s;
  gegenbauer_basis basis(ps.dim(), std::max(2 * out.s + 4, t_cap + 1));
  out.t = strength(sp, basis, t_cap, ps.tol());
  lap("strength");

  out.hypotheses = check_applicability(out.s, out.t, out.anti.antipodal);

  std::optional<canonical_spectrum<S>> canon;
  if (out.hypotheses.applicable) {
    try {
      canon = canonical_ordering(sp.values, out.anti.antipodal, ps.tol());
      out.canonical = canon->spec;
    } catch (const not_antipodal_spectrum& e) {
      out.warnings.emplace_back(e.what());
      out.hypotheses.applicable = false;
    }
  }

  if (!canon) {
    // Non-canonical fallback: classes in ascending spectrum order, so the
    // distance distribution is still reported.
    canonical_spectrum<S> flat;
    flat.spec.alpha.push_back(S(1));
    for (const S& v : sp.values) flat.spec.alpha.push_back(v);
    flat.class_of_value.resize(sp.values.size());
    for (std::size_t i = 0; i < sp.values.size(); ++i)
      flat.class_of_value[i] = static_cast<int>(i) + 1;
    out.distribution = distance_distribution(sp, flat);
    if (!out.hypotheses.antipodal)
      out.warnings.emplace_back("hypotheses fail: point set is not antipodal");
    else if (!out.hypotheses.strength_ok)
      out.warnings.emplace_back("hypotheses fail: t < 2s - 3");
    return out;
  }

  out.distribution = distance_distribution(sp, *canon);
  const class_matrix cm = build_classes(sp, *canon);
  lap("classes");
  const association_scheme sch = intersection_numbers(cm, opt.threads);
  lap("triple_count");
  out.params = compute_parameters(sch, canon->spec, basis, ps.tol());
  lap("parameters");
  out.theorem = check_theorem(*out.params, ps.dim(), out.hypotheses, ps.tol());
  lap("theorem_checks");
  if (!out.theorem->all_pass)
    out.warnings.emplace_back("one or more theorem clauses failed");
  return out;
}

}  // namespace qpas
