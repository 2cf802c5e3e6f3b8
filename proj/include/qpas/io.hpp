#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "qpas/pointset.hpp"

namespace qpas {

struct loaded_point_set {
  std::string backend;  // "rational" | "float"
  std::variant<point_set<Rat>, point_set<double>> data;
};

/// Reads the point-set file format. ".csv" parses as CSV (one point per row,
/// rational when any token contains '/'), everything else as the JSON object
/// {"dimension": n, "scalar": "rational"|"float", "points": [[...], ...]}
/// with rational coordinates as "p/q" strings and float coordinates as
/// numbers.
loaded_point_set read_point_set(const std::string& path, tolerance_policy tol = {});

loaded_point_set parse_point_set_json(const std::string& text, tolerance_policy tol = {});
loaded_point_set parse_point_set_csv(const std::string& text, tolerance_policy tol = {});

std::string point_set_to_json(const point_set<Rat>& ps);
std::string point_set_to_json(const point_set<double>& ps);
std::string point_set_to_csv(const point_set<Rat>& ps);
std::string point_set_to_csv(const point_set<double>& ps);

/// Basis bundle for the MUB escape hatch:
/// {"dimension": n, "bases": [[[...], ...], ...]} with rational coordinates.
struct mub_bases_file {
  int dimension = 0;
  std::vector<std::vector<std::vector<Rat>>> bases;
};
mub_bases_file read_mub_bases(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

std::uint64_t fnv1a64(const std::string& bytes);

std::string format_scalar(const Rat& v, int digits);
std::string format_scalar(double v, int digits);

}  // namespace qpas
