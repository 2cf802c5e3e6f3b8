#include "qpas/rational.hpp"

#include <cctype>

#include "qpas/errors.hpp"

namespace qpas {

Rat make_rat(long num, long den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat make_rat(const Int& num, const Int& den) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw parse_error("empty rational literal");
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw parse_error("bad rational literal: '" + text + "'");
  if (q.get_den() == 0) throw parse_error("zero denominator: '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

std::optional<Rat> is_rational_square(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int num = q.get_num();
  const Int den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return make_rat(rn, rd);
}

Int binomial(long a, long b) {
  if (b < 0 || b > a) return Int(0);
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return r;
}

Int factorial(long a) {
  Int r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(a < 0 ? 0 : a));
  return r;
}

double to_double(const Rat& q) { return q.get_d(); }

ambiguous_cluster::ambiguous_cluster(double a, double b, double eps)
    : error("ambiguous cluster: values " + std::to_string(a) + " and " +
            std::to_string(b) + " are separated by more than eps but at most "
            "2*eps (eps = " + std::to_string(eps) + ")"),
      lhs(a), rhs(b), eps_snap(eps) {}

dimension_too_small::dimension_too_small(int n)
    : error("ambient dimension must be >= 2, got " + std::to_string(n)) {}

cap_exceeded::cap_exceeded(int requested, int cap)
    : error("degree " + std::to_string(requested) +
            " exceeds the cached cap " + std::to_string(cap)) {}

not_antipodal_spectrum::not_antipodal_spectrum(const std::string& why)
    : error("inner-product set is not antipodal: " + why) {}

unclassified_pair::unclassified_pair(int px, int py, const std::string& value)
    : error("Gram entry (" + std::to_string(px) + "," + std::to_string(py) +
            ") = " + value + " matches no spectrum class"),
      x(px), y(py) {}

static std::string violation_text(const scheme_violation& w) {
  return "not an association scheme: pairs (" + std::to_string(w.x) + "," +
         std::to_string(w.y) + ") and (" + std::to_string(w.x_ref) + "," +
         std::to_string(w.y_ref) + ") share a class but count(" +
         std::to_string(w.i) + "," + std::to_string(w.j) + ") differs: " +
         std::to_string(w.count) + " vs " + std::to_string(w.ref_count);
}

not_a_scheme::not_a_scheme(const scheme_violation& w)
    : error(violation_text(w)), witness(w) {}

split_failure::split_failure(const std::string& why)
    : error("idempotent split failed: " + why) {}

non_diagonalizable::non_diagonalizable(const std::string& why)
    : error("eigenmatrix extraction failed: " + why) {}

negative_krein::negative_krein(const krein_witness& w)
    : error("negative Krein number q_{" + std::to_string(w.i) + "," +
            std::to_string(w.j) + "}^" + std::to_string(w.k) + " = " + w.value),
      witness(w) {}

construction_unavailable::construction_unavailable(const std::string& why)
    : error("construction unavailable: " + why) {}

parse_error::parse_error(const std::string& why) : error("parse error: " + why) {}

invalid_point_set::invalid_point_set(const std::string& why)
    : error("invalid point set: " + why) {}

parameter_out_of_range::parameter_out_of_range(const std::string& why)
    : error("parameter out of range: " + why) {}

}  // namespace qpas
