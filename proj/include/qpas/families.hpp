#pragma once

#include <vector>

#include "qpas/pointset.hpp"

namespace qpas {

/// The 2n points +-e_i (exact backend); degree 2, strength 3.
point_set<Rat> cross_polytope(int n, tolerance_policy tol = {});

/// The 12 icosahedron vertices in R^3 (float backend); degree 3, strength 5.
point_set<double> icosahedron(tolerance_policy tol = {});

/// Regular simplex: n+1 unit vectors in R^{n+1} at mutual inner product -1/n
/// (float backend). Canonical non-antipodal input.
point_set<double> simplex(int n, tolerance_policy tol = {});

/// The +- closure of 2^{2r-1}+1 pairwise mutually unbiased orthonormal bases
/// of R^{2^{2r}} (standard basis plus Hadamard-type bases from an alternating
/// matrix spread over F_2). Exact backend; |X| = 2^{4r} + 2^{2r+1} and the
/// cross-basis inner products have magnitude 2^{-r}.
/// Implemented for r = 1 and r = 2.
point_set<Rat> real_mub_design(int r, tolerance_policy tol = {});

/// Escape hatch: build the same design from externally supplied orthonormal
/// bases (validated for mutual unbiasedness before the +- closure is formed).
point_set<Rat> mub_from_bases(int dim, const std::vector<std::vector<std::vector<Rat>>>& bases,
                              tolerance_policy tol = {});

}  // namespace qpas
