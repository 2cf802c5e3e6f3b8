#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qpas/analysis.hpp"
#include "qpas/families.hpp"
#include "qpas/theorems.hpp"
#include "test_util.hpp"

using qpas::Rat;
using testutil::R;

TEST_CASE("applicability record") {
  {
    const auto ar = qpas::analyze(qpas::icosahedron());
    CHECK(ar.s == 3);
    CHECK(ar.t == 5);
    CHECK(ar.hypotheses.antipodal);
    CHECK(ar.hypotheses.applicable);
  }
  {
    const auto ar = qpas::analyze(qpas::real_mub_design(1));
    CHECK(ar.s == 4);
    CHECK(ar.t == 5);
    CHECK(ar.hypotheses.strength_ok);  // 5 >= 2*4 - 3
    CHECK(ar.hypotheses.applicable);
  }
  {
    const auto ar = qpas::analyze(qpas::simplex(4));
    CHECK_FALSE(ar.hypotheses.antipodal);
    CHECK_FALSE(ar.hypotheses.applicable);
    CHECK_FALSE(ar.params.has_value());
    CHECK_FALSE(ar.warnings.empty());
  }
  const auto h = qpas::check_applicability(4, 4, true);
  CHECK_FALSE(h.strength_ok);  // 4 < 2*4 - 3
  CHECK_FALSE(h.applicable);
}

TEST_CASE("P_1 column signs") {
  const qpas::tolerance_policy tol;
  {
    const auto ar = qpas::analyze(qpas::real_mub_design(1));
    REQUIRE(ar.params.has_value());
    std::vector<Rat> col;
    for (int i = 0; i <= 4; ++i) col.push_back(ar.params->P[static_cast<std::size_t>(i)][1]);
    CHECK(col == std::vector<Rat>{R(1), R(-1), R(1), R(-1), R(1)});
    CHECK(qpas::check_p1_signs(*ar.params, tol).pass);
  }
  {
    const auto ar = qpas::analyze(qpas::cross_polytope(4));
    REQUIRE(ar.params.has_value());
    std::vector<Rat> col;
    for (int i = 0; i <= 2; ++i) col.push_back(ar.params->P[static_cast<std::size_t>(i)][1]);
    CHECK(col == std::vector<Rat>{R(1), R(-1), R(1)});
  }
  {
    const auto ar = qpas::analyze(qpas::icosahedron());
    REQUIRE(ar.params.has_value());
    const auto res = qpas::check_p1_signs(*ar.params, tol);
    CHECK(res.pass);
    for (int i = 0; i <= 3; ++i)
      CHECK(std::abs(ar.params->P[static_cast<std::size_t>(i)][1] - (i % 2 ? -1.0 : 1.0)) <=
            1e-10);
  }
}

TEST_CASE("Q parity relations") {
  const qpas::tolerance_policy tol;
  const auto ar = qpas::analyze(qpas::real_mub_design(1));
  REQUIRE(ar.params.has_value());
  const auto& q = ar.params->Q;
  // Rows for the +-1/2 pair.
  CHECK(q[2] == std::vector<Rat>{R(1), R(-2), R(0), R(2), R(-1)});
  CHECK(q[3] == std::vector<Rat>{R(1), R(2), R(0), R(-2), R(-1)});
  // s even: odd columns vanish on the last row.
  CHECK(q[4][1] == R(0));
  CHECK(q[4][3] == R(0));
  CHECK(qpas::check_q_parity(*ar.params, tol).pass);
  // Column 0 is all ones.
  for (int i = 0; i <= 4; ++i) CHECK(q[static_cast<std::size_t>(i)][0] == R(1));
}

TEST_CASE("multiplicity closed forms") {
  const qpas::tolerance_policy tol;
  CHECK(qpas::expected_multiplicities(4, 4, 24) ==
        std::vector<Rat>{R(1), R(4), R(9), R(8), R(2)});
  CHECK(qpas::expected_multiplicities(3, 3, 12) == std::vector<Rat>{R(1), R(3), R(5), R(3)});
  for (int n = 2; n <= 10; ++n)
    CHECK(qpas::expected_multiplicities(n, 2, 2 * n) ==
          std::vector<Rat>{R(1), R(n), R(n - 1)});

  for (const auto& ar :
       {qpas::analyze(qpas::real_mub_design(1)), qpas::analyze(qpas::cross_polytope(7))}) {
    REQUIRE(ar.params.has_value());
    const auto res = qpas::check_multiplicities(*ar.params, ar.dim, tol);
    CHECK(res.pass);
    CHECK(res.deviation == R(0));
  }
  const auto ico = qpas::analyze(qpas::icosahedron());
  CHECK(qpas::check_multiplicities(*ico.params, 3, tol).pass);
}

TEST_CASE("Krein parity vanishing") {
  const qpas::tolerance_policy tol;
  for (const auto& ar :
       {qpas::analyze(qpas::real_mub_design(1)), qpas::analyze(qpas::cross_polytope(5))}) {
    REQUIRE(ar.params.has_value());
    CHECK(ar.params->krein.at(1, 1, 1) == R(0));
    const auto res = qpas::check_krein_parity(*ar.params, tol);
    CHECK(res.pass);
    CHECK(res.deviation == R(0));
    // The q_{0j}^k slice is delta-supported: E_0 is the o-product identity
    // up to the 1/|X| scaling.
    for (int j = 0; j <= ar.params->s; ++j)
      for (int k = 0; k <= ar.params->s; ++k)
        CHECK(ar.params->krein.at(0, j, k) == (j == k ? R(1) : R(0)));
  }
  const auto ico = qpas::analyze(qpas::icosahedron());
  CHECK(qpas::check_krein_parity(*ico.params, tol).pass);
}

TEST_CASE("dual intersection matrix closed forms") {
  const qpas::tolerance_policy tol;
  {
    const auto band = qpas::expected_b1star_band(4, 4, 24);
    REQUIRE(band.valid);
    CHECK(band.super == std::vector<Rat>{R(1), R(4, 3), R(3), R(4)});
    CHECK(band.sub == std::vector<Rat>{R(4), R(3), R(8, 3), R(1)});
  }
  {
    const auto band = qpas::expected_b1star_band(3, 3, 12);
    REQUIRE(band.valid);
    CHECK(band.super == std::vector<Rat>{R(1), R(6, 5), R(3)});
    CHECK(band.sub == std::vector<Rat>{R(3), R(2), R(9, 5)});
  }
  // c_1* = 1 for every dimension (s >= 3 keeps it in the generic range).
  for (int n = 2; n <= 12; ++n) {
    const auto band = qpas::expected_b1star_band(n, 4, 1000);
    REQUIRE(band.valid);
    CHECK(band.super[0] == R(1));
    CHECK(band.sub[0] == R(n));
  }
  for (const auto& ar :
       {qpas::analyze(qpas::real_mub_design(1)), qpas::analyze(qpas::cross_polytope(2)),
        qpas::analyze(qpas::cross_polytope(9))}) {
    REQUIRE(ar.params.has_value());
    const auto res = qpas::check_b1star(*ar.params, ar.dim, tol);
    CHECK(res.pass);
    CHECK(res.deviation == R(0));
  }
  const auto ico = qpas::analyze(qpas::icosahedron());
  CHECK(qpas::check_b1star(*ico.params, 3, tol).pass);
}

TEST_CASE("every clause passes on the bundled families with zero exact deviation") {
  for (const auto& ar :
       {qpas::analyze(qpas::real_mub_design(1)), qpas::analyze(qpas::cross_polytope(3)),
        qpas::analyze(qpas::cross_polytope(6))}) {
    REQUIRE(ar.theorem.has_value());
    const auto& tr = *ar.theorem;
    CHECK(tr.all_pass);
    CHECK(tr.p1_signs.deviation == R(0));
    CHECK(tr.q_parity.deviation == R(0));
    CHECK(tr.multiplicities.deviation == R(0));
    CHECK(tr.krein_parity.deviation == R(0));
    CHECK(tr.b1_star.deviation == R(0));
  }
}

TEST_CASE("corrupted classes produce witnesses, never silent passes") {
  // Class-level mutation: covered in detail in the scheme suite; here the
  // checker-level counterpart on doctored parameters.
  const auto ar = qpas::analyze(qpas::real_mub_design(1));
  REQUIRE(ar.params.has_value());
  auto bad = *ar.params;
  bad.P[2][1] = R(2);  // violates P_1(i) = (-1)^i
  const qpas::tolerance_policy tol;
  const auto res = qpas::check_p1_signs(bad, tol);
  CHECK_FALSE(res.pass);
  CHECK(res.deviation == R(1));
  CHECK(res.witness == "P_1(2)");

  auto bad2 = *ar.params;
  bad2.b1_star[0][2] = R(1, 7);  // off the band
  const auto res2 = qpas::check_b1star(bad2, 4, tol);
  CHECK_FALSE(res2.pass);
  CHECK_FALSE(res2.witness.empty());
}
