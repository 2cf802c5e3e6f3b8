#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "qpas/rational.hpp"

namespace qpas {

/// Value of the form u + v * sqrt(alpha_sq), carried exactly. The radical
/// collapses to a rational only when alpha_sq is a square in Q.
struct quad_expr {
  Rat u = Rat(0);
  Rat v = Rat(0);

  bool is_rational() const { return v == 0; }
};

using quad_matrix = std::vector<std::vector<quad_expr>>;
using rat_matrix = std::vector<std::vector<Rat>>;

/// Closed-form scheme parameters of the degree-4, strength-5 family in two
/// integer parameters (n, N), |X| = 2N. Entries are exact; the only radical
/// is alpha = sqrt((3N - n^2 - 2n) / ((n+2)(N-n))), the positive nonzero
/// inner product.
struct appendix1_parameters {
  int n = 0;
  long long N = 0;
  Rat alpha_sq;
  std::optional<Rat> alpha;  // engaged when alpha_sq is a rational square
  std::array<quad_matrix, 5> B;
  quad_matrix P, Q;
  rat_matrix B1_star;  // always rational

  /// All-rational view of a matrix; nullopt when a radical survives.
  std::optional<rat_matrix> rationalized(const quad_matrix& m) const;
};

/// Evaluates every closed form at (n, N). Requires n >= 3 and
/// n(n+1)/2 < N <= n(n+1)(n+2)/6.
appendix1_parameters appendix1(int n, long long N);

/// Internal consistency of an evaluated table set: PQ = |X| I, rational
/// multiplicities summing to |X|, and B_i column sums equal to the valencies.
/// Throws parameter_out_of_range on violation.
void validate_appendix1(const appendix1_parameters& ap);

/// Same family specialized to n = 2^{2r}, N = 2^{4r-1} + 2^{2r}; all entries
/// rational. r >= 1.
struct appendix2_parameters {
  int r = 0;
  int n = 0;
  long long N = 0;
  std::array<rat_matrix, 5> B;
  rat_matrix P, Q, B1_star;
};

appendix2_parameters appendix2(int r);

struct feasibility_candidate {
  int n = 0;
  long long N = 0;
  long long m = 0;  // alpha = 1/m
  std::vector<Int> multiplicities;
  Rat krein_min;
  bool rational_ok = false;
  bool integral_ok = false;
  bool nonnegative_ok = false;
};

/// Scans alpha = 1/m over m in [m_min, m_max] and n in [3, n_max]: solves
/// for N, keeps integer N inside the admissible range, and validates
/// rationality, integrality and nonnegativity of the derived parameters.
/// Only candidates with every flag true are returned.
std::vector<feasibility_candidate> feasibility_scan(int n_max, long long m_min,
                                                    long long m_max);

}  // namespace qpas
