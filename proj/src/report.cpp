#include "silk/report.hpp"

#include <cstdlib>
#include <sstream>

#include "silk/print.hpp"

namespace silk {

std::size_t env_fuel() {
  const char* v = std::getenv("SILK_FUEL");
  if (!v || !*v) return kDefaultFuel;
  char* end = nullptr;
  unsigned long long x = std::strtoull(v, &end, 10);
  if (*end != '\0' || x == 0) return kDefaultFuel;
  return static_cast<std::size_t>(x);
}

nlohmann::json counts_json(const RuleCounts& c) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [r, k] : c) j[rule_name(r)] = k;
  return j;
}

nlohmann::json report_json(const CheckReport& r, const std::string& status, std::size_t fuel) {
  nlohmann::json j;
  j["format_version"] = kFormatVersion;
  j["status"] = status;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : r.failures) {
    j["failures"].push_back({{"path", f.path}, {"rule", f.rule}, {"message", f.message}});
  }
  j["counts"] = counts_json(r.counts);
  j["inferences"] = total_inferences(r.counts);
  j["fuel"] = fuel;
  j["strategy"] = kStrategy;
  j["rewrite_steps"] = r.rewrite_steps;
  return j;
}

std::string report_text(const CheckReport& r) {
  std::ostringstream os;
  for (const auto& f : r.failures) os << f.path << " [" << f.rule << "]: " << f.message << "\n";
  return os.str();
}

std::string counts_text(const RuleCounts& c) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, k] : c) {
    os << (first ? "" : " ") << rule_name(r) << "=" << k;
    first = false;
  }
  return os.str();
}

std::string to_string(const ComponentPair& p) {
  std::string step;
  switch (p.step.kind) {
    case StepKind::Top: step = "T"; break;
    case StepKind::Open: step = to_string(AnnotatedSequent{p.step.seq, p.step.ann}); break;
    case StepKind::ClosedSeq: step = "[" + to_string(p.step.seq) + "]"; break;
    case StepKind::EmptyClosed: step = "[]"; break;
  }
  std::string base = p.base.closed ? "[" + to_string(p.base.seq) + "]" : to_string(p.base.seq);
  return p.id + ": < " + step + " ; " + base + " >";
}

std::string to_string(const ComponentCollection& c) {
  std::ostringstream os;
  for (const auto& g : c.groups) {
    os << "group " << g.id << (g.closed ? " (closed " + std::to_string(g.closure_index) + ")" : " (open)");
    if (g.pattern) os << " pattern " << to_string(g.pattern->seq);
    os << "\n";
    for (const auto& p : g.pairs) os << "  " << to_string(p) << "\n";
  }
  return os.str();
}

}  // namespace silk
