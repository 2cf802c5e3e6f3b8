#include "qpas/io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace qpas {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << content;
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string format_scalar(const Rat& v, int) { return rat_str(v); }

std::string format_scalar(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

namespace {

Rat coord_to_rat(const json& c) {
  if (c.is_string()) return parse_rat(c.get<std::string>());
  if (c.is_number_integer()) return Rat(c.get<long>());
  throw parse_error("rational coordinate must be a \"p/q\" string or an integer");
}

std::vector<std::vector<Rat>> parse_rat_points(const json& pts, int dim) {
  std::vector<std::vector<Rat>> out;
  for (const json& row : pts) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw parse_error("point with wrong arity");
    std::vector<Rat> p;
    p.reserve(row.size());
    for (const json& c : row) p.push_back(coord_to_rat(c));
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<std::vector<double>> parse_float_points(const json& pts, int dim) {
  std::vector<std::vector<double>> out;
  for (const json& row : pts) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      throw parse_error("point with wrong arity");
    std::vector<double> p;
    p.reserve(row.size());
    for (const json& c : row) {
      if (!c.is_number()) throw parse_error("float coordinate must be a number");
      p.push_back(c.get<double>());
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

loaded_point_set parse_point_set_json(const std::string& text, tolerance_policy tol) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dimension") || !j.contains("points"))
    throw parse_error("expected {\"dimension\", \"scalar\", \"points\"}");
  const int dim = j.at("dimension").get<int>();
  const std::string backend = j.value("scalar", std::string("float"));
  if (backend == "rational") {
    return {backend, point_set<Rat>(dim, parse_rat_points(j.at("points"), dim), tol)};
  } else if (backend == "float") {
    return {backend, point_set<double>(dim, parse_float_points(j.at("points"), dim), tol)};
  }
  throw parse_error("scalar must be \"rational\" or \"float\"");
}

loaded_point_set parse_point_set_csv(const std::string& text, tolerance_policy tol) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  bool rational = false;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) {
      const auto b = cell.find_first_not_of(" \t");
      const auto e = cell.find_last_not_of(" \t");
      if (b == std::string::npos) throw parse_error("empty CSV cell");
      cell = cell.substr(b, e - b + 1);
      if (cell.find('/') != std::string::npos) rational = true;
      cells.push_back(cell);
    }
    rows.push_back(std::move(cells));
  }
  if (rows.empty()) throw parse_error("empty CSV point set");
  const int dim = static_cast<int>(rows[0].size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != dim) throw parse_error("ragged CSV rows");

  if (rational) {
    std::vector<std::vector<Rat>> pts;
    for (const auto& r : rows) {
      std::vector<Rat> p;
      for (const auto& c : r) p.push_back(parse_rat(c));
      pts.push_back(std::move(p));
    }
    return {"rational", point_set<Rat>(dim, std::move(pts), tol)};
  }
  std::vector<std::vector<double>> pts;
  for (const auto& r : rows) {
    std::vector<double> p;
    for (const auto& c : r) {
      try {
        std::size_t used = 0;
        p.push_back(std::stod(c, &used));
        if (used != c.size()) throw parse_error("bad float literal '" + c + "'");
      } catch (const parse_error&) {
        throw;
      } catch (const std::exception&) {
        throw parse_error("bad float literal '" + c + "'");
      }
    }
    pts.push_back(std::move(p));
  }
  return {"float", point_set<double>(dim, std::move(pts), tol)};
}

loaded_point_set read_point_set(const std::string& path, tolerance_policy tol) {
  const std::string text = read_file(path);
  if (path.size() > 4 && path.substr(path.size() - 4) == ".csv")
    return parse_point_set_csv(text, tol);
  return parse_point_set_json(text, tol);
}

std::string point_set_to_json(const point_set<Rat>& ps) {
  json j;
  j["dimension"] = ps.dim();
  j["scalar"] = "rational";
  json pts = json::array();
  for (int i = 0; i < ps.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < ps.dim(); ++k) row.push_back(rat_str(ps.coord(i, k)));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

std::string point_set_to_json(const point_set<double>& ps) {
  json j;
  j["dimension"] = ps.dim();
  j["scalar"] = "float";
  json pts = json::array();
  for (int i = 0; i < ps.size(); ++i) {
    json row = json::array();
    for (int k = 0; k < ps.dim(); ++k) row.push_back(ps.coord(i, k));
    pts.push_back(std::move(row));
  }
  j["points"] = std::move(pts);
  return j.dump(2) + "\n";
}

std::string point_set_to_csv(const point_set<Rat>& ps) {
  std::ostringstream out;
  for (int i = 0; i < ps.size(); ++i) {
    for (int k = 0; k < ps.dim(); ++k) out << (k ? "," : "") << rat_str(ps.coord(i, k));
    out << "\n";
  }
  return out.str();
}

std::string point_set_to_csv(const point_set<double>& ps) {
  std::ostringstream out;
  for (int i = 0; i < ps.size(); ++i) {
    for (int k = 0; k < ps.dim(); ++k)
      out << (k ? "," : "") << format_scalar(ps.coord(i, k), 17);
    out << "\n";
  }
  return out.str();
}

mub_bases_file read_mub_bases(const std::string& path) {
  json j;
  try {
    j = json::parse(read_file(path));
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception& e) {
    throw parse_error(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("dimension") || !j.contains("bases"))
    throw parse_error("expected {\"dimension\", \"bases\"}");
  mub_bases_file out;
  out.dimension = j.at("dimension").get<int>();
  for (const json& basis : j.at("bases")) {
    std::vector<std::vector<Rat>> vectors;
    for (const json& row : basis) {
      std::vector<Rat> v;
      for (const json& c : row) v.push_back(coord_to_rat(c));
      vectors.push_back(std::move(v));
    }
    out.bases.push_back(std::move(vectors));
  }
  return out;
}

}  // namespace qpas
