#include "qpas/report.hpp"

#include <sstream>

namespace qpas {

namespace {

void flatten(const nlohmann::ordered_json& j, const std::string& prefix,
             std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten(value, prefix.empty() ? key : prefix + "." + key, out);
  } else if (j.is_array()) {
    std::size_t i = 0;
    for (const auto& value : j) flatten(value, prefix + "[" + std::to_string(i++) + "]", out);
  } else if (j.is_string()) {
    out << prefix << "," << j.get<std::string>() << "\n";
  } else {
    out << prefix << "," << j.dump() << "\n";
  }
}

}  // namespace

std::string json_to_csv(const nlohmann::ordered_json& j) {
  std::ostringstream out;
  flatten(j, "", out);
  return out.str();
}

}  // namespace qpas
