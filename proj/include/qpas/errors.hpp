#pragma once

#include <stdexcept>
#include <string>

namespace qpas {

/// Base class for every error raised by the library.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

/// Tolerance cannot resolve a value spectrum: two inputs sit in the
/// (eps, 2*eps] dead zone where merging is inconsistent.
class ambiguous_cluster : public error {
 public:
  ambiguous_cluster(double a, double b, double eps);
  double lhs, rhs, eps_snap;
};

class dimension_too_small : public error {
 public:
  explicit dimension_too_small(int n);
};

class cap_exceeded : public error {
 public:
  cap_exceeded(int requested, int cap);
};

class not_antipodal_spectrum : public error {
 public:
  explicit not_antipodal_spectrum(const std::string& why);
};

class unclassified_pair : public error {
 public:
  unclassified_pair(int x, int y, const std::string& value);
  int x, y;
};

/// Triple counting found two pairs in the same class with different
/// (i, j)-counts, so the distance classes do not form a scheme.
struct scheme_violation {
  int x = 0, y = 0;          // offending pair
  int x_ref = 0, y_ref = 0;  // reference pair of the same class
  int i = 0, j = 0;          // class indices whose count differs
  long long count = 0, ref_count = 0;
};

class not_a_scheme : public error {
 public:
  explicit not_a_scheme(const scheme_violation& w);
  scheme_violation witness;
};

class split_failure : public error {
 public:
  explicit split_failure(const std::string& why);
};

class non_diagonalizable : public error {
 public:
  explicit non_diagonalizable(const std::string& why);
};

struct krein_witness {
  int i = 0, j = 0, k = 0;
  std::string value;
};

class negative_krein : public error {
 public:
  explicit negative_krein(const krein_witness& w);
  krein_witness witness;
};

class construction_unavailable : public error {
 public:
  explicit construction_unavailable(const std::string& why);
};

class parse_error : public error {
 public:
  explicit parse_error(const std::string& why);
};

class invalid_point_set : public error {
 public:
  explicit invalid_point_set(const std::string& why);
};

class parameter_out_of_range : public error {
 public:
  explicit parameter_out_of_range(const std::string& why);
};

}  // namespace qpas
