#include "hsa/report.hpp"

#include <json.hpp>

#include <sstream>

namespace hsa {

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  if (r.pass) {
    os << "pass\n";
  } else {
    os << "fail (" << r.failures.size() << " nonzero residual"
       << (r.failures.size() == 1 ? "" : "s") << ")\n";
    for (const auto& f : r.failures) {
      os << "  " << f.identity << " at";
      for (const auto& b : f.inputs) os << ' ' << to_string(b);
      os << ": residual " << to_string(f.residual) << '\n';
    }
  }
  if (!r.note.empty()) os << "note: " << r.note << '\n';
  return os.str();
}

std::string report_to_json(const CheckReport& r, double elapsed_ms) {
  nlohmann::json j;
  j["pass"] = r.pass;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    nlohmann::json jf;
    jf["identity"] = f.identity;
    jf["inputs"] = nlohmann::json::array();
    for (const auto& b : f.inputs) jf["inputs"].push_back(to_string(b));
    jf["residual"] = nlohmann::json::array();
    for (const auto& [b, q] : f.residual.terms())
      jf["residual"].push_back({to_string(b), to_string(q)});
    j["failures"].push_back(std::move(jf));
  }
  if (!r.note.empty()) j["note"] = r.note;
  j["timing_ms"] = elapsed_ms;
  return j.dump(2);
}

} // namespace hsa
