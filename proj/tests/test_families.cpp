#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qpas/analysis.hpp"
#include "qpas/appendix.hpp"
#include "qpas/families.hpp"
#include "test_util.hpp"

using qpas::Rat;
using testutil::R;

namespace {

qpas::rat_matrix must_rationalize(const qpas::appendix1_parameters& ap,
                                  const qpas::quad_matrix& m) {
  auto r = ap.rationalized(m);
  REQUIRE(r.has_value());
  return *r;
}

}  // namespace

TEST_CASE("cross-polytope generator") {
  const auto ps = qpas::cross_polytope(3);
  CHECK(ps.size() == 6);
  CHECK(ps.dim() == 3);
  const auto ar = qpas::analyze(ps);
  CHECK(ar.s == 2);
  CHECK(ar.t == 3);
  CHECK(ar.anti.antipodal);
  const auto sq = qpas::analyze(qpas::cross_polytope(2));
  CHECK(sq.s == 2);
  CHECK(sq.t == 3);
}

TEST_CASE("icosahedron generator") {
  const auto ps = qpas::icosahedron();
  CHECK(ps.size() == 12);
  CHECK(ps.dim() == 3);
  const auto ar = qpas::analyze(ps);
  CHECK(ar.s == 3);
  CHECK(ar.t == 5);
  const double b = 1.0 / std::sqrt(5.0);
  CHECK(ar.spectrum_values[1] == doctest::Approx(-b).epsilon(1e-12));
}

TEST_CASE("real MUB design r = 1 is the 24-cell up to isometry") {
  const auto ps = qpas::real_mub_design(1);
  CHECK(ps.size() == 24);
  CHECK(ps.dim() == 4);
  const auto ar = qpas::analyze(ps);
  CHECK(ar.s == 4);
  CHECK(ar.t == 5);

  // Classic 24-cell: permutations of (+-1, +-1, 0, 0)/sqrt(2).
  std::vector<std::vector<double>> pts;
  const double h = 1.0 / std::sqrt(2.0);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int sa : {1, -1})
        for (int sb : {1, -1}) {
          std::vector<double> p(4, 0.0);
          p[static_cast<std::size_t>(a)] = sa * h;
          p[static_cast<std::size_t>(b)] = sb * h;
          pts.push_back(std::move(p));
        }
  qpas::point_set<double> classic(4, std::move(pts));
  REQUIRE(classic.size() == 24);

  // Identical sorted Gram multisets.
  auto grams = [](auto& set) {
    std::vector<double> g;
    const auto gm = qpas::compute_gram(set);
    for (double v : gm.g) g.push_back(v);
    std::sort(g.begin(), g.end());
    return g;
  };
  std::vector<double> g1;
  {
    const auto gm = qpas::compute_gram(ps);
    for (const Rat& v : gm.g) g1.push_back(qpas::to_double(v));
    std::sort(g1.begin(), g1.end());
  }
  const auto g2 = grams(classic);
  REQUIRE(g1.size() == g2.size());
  for (std::size_t i = 0; i < g1.size(); ++i) CHECK(std::abs(g1[i] - g2[i]) <= 1e-9);

  // And the classic coordinates give the same parameters.
  const auto ar2 = qpas::analyze(classic);
  REQUIRE(ar2.params.has_value());
  CHECK(ar2.params->valencies == std::vector<long long>{1, 1, 8, 8, 6});
  CHECK(ar2.theorem->all_pass);
}

TEST_CASE("real MUB design r = 2") {
  const auto ps = qpas::real_mub_design(2);
  CHECK(ps.size() == 288);
  CHECK(ps.dim() == 16);
  // Inner products take only the advertised values.
  const auto gm = qpas::compute_gram(ps);
  const auto sp = qpas::spectrum(ps, gm);
  CHECK(sp.values == std::vector<Rat>{R(-1), R(-1, 4), R(0), R(1, 4)});
}

TEST_CASE("MUB construction bounds and escape hatch") {
  CHECK_THROWS_AS(qpas::real_mub_design(0), qpas::construction_unavailable);
  CHECK_THROWS_AS(qpas::real_mub_design(3), qpas::construction_unavailable);

  // Externally supplied bases: the standard basis and two Hadamard-type ones.
  using basis = std::vector<std::vector<Rat>>;
  basis std4, h1, h2;
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> e(4, R(0));
    e[static_cast<std::size_t>(i)] = R(1);
    std4.push_back(std::move(e));
  }
  const long sgn1[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  const long sgn2[4][4] = {{1, 1, 1, -1}, {1, 1, -1, 1}, {1, -1, 1, 1}, {-1, 1, 1, 1}};
  for (int i = 0; i < 4; ++i) {
    std::vector<Rat> v1, v2;
    for (int j = 0; j < 4; ++j) {
      v1.push_back(R(sgn1[i][j], 2));
      v2.push_back(R(sgn2[i][j], 2));
    }
    h1.push_back(std::move(v1));
    h2.push_back(std::move(v2));
  }
  const auto ps = qpas::mub_from_bases(4, {std4, h1, h2});
  CHECK(ps.size() == 24);
  const auto ar = qpas::analyze(ps);
  CHECK(ar.s == 4);
  CHECK(ar.t == 5);
  REQUIRE(ar.theorem.has_value());
  CHECK(ar.theorem->all_pass);

  // A non-unbiased bundle is rejected.
  basis h_bad = h1;
  std::swap(h_bad[0], h_bad[1]);
  h_bad[0][0] = R(1);
  h_bad[0][1] = R(0);
  h_bad[0][2] = R(0);
  h_bad[0][3] = R(0);
  CHECK_THROWS_AS(qpas::mub_from_bases(4, {std4, h_bad}), qpas::construction_unavailable);
  // Orthonormality is validated too.
  basis not_on = std4;
  not_on[0] = not_on[1];
  CHECK_THROWS_AS(qpas::mub_from_bases(4, {not_on, h1}), qpas::construction_unavailable);
}

TEST_CASE("appendix 1 evaluation at (4, 12)") {
  const auto ap = qpas::appendix1(4, 12);
  qpas::validate_appendix1(ap);
  CHECK(ap.alpha_sq == R(1, 4));
  REQUIRE(ap.alpha.has_value());
  CHECK(*ap.alpha == R(1, 2));

  const auto p = must_rationalize(ap, ap.P);
  CHECK(p[0][4] == R(6));
  CHECK(ap.B1_star[4][3] == R(1));
  CHECK(ap.B1_star[3][4] == R(4));

  // Whole-table agreement with the specialized family at r = 1.
  const auto a2 = qpas::appendix2(1);
  CHECK(p == a2.P);
  CHECK(must_rationalize(ap, ap.Q) == a2.Q);
  for (int i = 0; i < 5; ++i)
    CHECK(must_rationalize(ap, ap.B[static_cast<std::size_t>(i)]) ==
          a2.B[static_cast<std::size_t>(i)]);
  CHECK(ap.B1_star == a2.B1_star);
}

TEST_CASE("appendix 1 and 2 agree at r = 2 as well") {
  const auto a2 = qpas::appendix2(2);
  const auto ap = qpas::appendix1(a2.n, a2.N);
  qpas::validate_appendix1(ap);
  CHECK(must_rationalize(ap, ap.P) == a2.P);
  CHECK(must_rationalize(ap, ap.Q) == a2.Q);
  for (int i = 0; i < 5; ++i)
    CHECK(must_rationalize(ap, ap.B[static_cast<std::size_t>(i)]) ==
          a2.B[static_cast<std::size_t>(i)]);
  CHECK(ap.B1_star == a2.B1_star);
}

TEST_CASE("appendix 1 carries irrational entries symbolically") {
  // (4, 13): alpha^2 = (39 - 24)/(6 * 9) = 5/18, not a square.
  const auto ap = qpas::appendix1(4, 13);
  CHECK_FALSE(ap.alpha.has_value());
  CHECK(ap.alpha_sq == R(5, 18));
  CHECK_FALSE(ap.rationalized(ap.P).has_value());
  CHECK_FALSE(ap.rationalized(ap.Q).has_value());
  // The dual matrix is rational regardless.
  for (const auto& row : ap.B1_star)
    for (const Rat& v : row) CHECK(v.get_den() != 0);
  // Internal identities hold symbolically.
  qpas::validate_appendix1(ap);
}

TEST_CASE("appendix 1 range validation") {
  CHECK_THROWS_AS(qpas::appendix1(2, 5), qpas::parameter_out_of_range);
  CHECK_THROWS_AS(qpas::appendix1(4, 10), qpas::parameter_out_of_range);  // N <= n(n+1)/2
  CHECK_THROWS_AS(qpas::appendix1(4, 21), qpas::parameter_out_of_range);  // N > bound
  CHECK_NOTHROW(qpas::appendix1(4, 11));
  CHECK_NOTHROW(qpas::appendix1(4, 20));
}

TEST_CASE("appendix 2 specializations") {
  const auto a1 = qpas::appendix2(1);
  CHECK(a1.n == 4);
  CHECK(a1.N == 12);
  CHECK(a1.Q[0] == std::vector<Rat>{R(1), R(4), R(9), R(8), R(2)});
  CHECK(a1.B1_star == qpas::rat_matrix{{R(0), R(1), R(0), R(0), R(0)},
                                       {R(4), R(0), R(4, 3), R(0), R(0)},
                                       {R(0), R(3), R(0), R(3), R(0)},
                                       {R(0), R(0), R(8, 3), R(0), R(4)},
                                       {R(0), R(0), R(0), R(1), R(0)}});
  const auto a2 = qpas::appendix2(2);
  CHECK(a2.P[0] == std::vector<Rat>{R(1), R(1), R(128), R(128), R(30)});
  CHECK(a2.Q[0] == std::vector<Rat>{R(1), R(16), R(135), R(128), R(8)});
  CHECK_THROWS_AS(qpas::appendix2(0), qpas::parameter_out_of_range);
}

TEST_CASE("feasibility scan") {
  const auto m2 = qpas::feasibility_scan(64, 2, 2);
  REQUIRE_FALSE(m2.empty());
  bool has_4_12 = false;
  for (const auto& c : m2) {
    if (c.n == 4 && c.N == 12) has_4_12 = true;
    CHECK(c.rational_ok);
    CHECK(c.integral_ok);
    CHECK(c.nonnegative_ok);
    qpas::Int sum(0);
    for (const auto& m : c.multiplicities) sum += m;
    CHECK(sum == qpas::Int(2) * qpas::Int(static_cast<long>(c.N)));
    CHECK(c.krein_min >= 0);
    // Every candidate re-validates from scratch.
    CHECK_NOTHROW(qpas::validate_appendix1(qpas::appendix1(c.n, c.N)));
  }
  CHECK(has_4_12);

  const auto m4 = qpas::feasibility_scan(32, 4, 4);
  bool has_16_144 = false;
  for (const auto& c : m4)
    if (c.n == 16 && c.N == 144) has_16_144 = true;
  CHECK(has_16_144);

  CHECK(qpas::feasibility_scan(50, 1, 1).empty());
}

TEST_CASE("simplex generator") {
  const auto ps = qpas::simplex(4);
  CHECK(ps.size() == 5);
  CHECK(ps.dim() == 5);
  const auto gm = qpas::compute_gram(ps);
  for (int x = 0; x < 5; ++x)
    for (int y = 0; y < 5; ++y)
      if (x != y) CHECK(gm.at(x, y) == doctest::Approx(-0.25).epsilon(1e-12));
}
