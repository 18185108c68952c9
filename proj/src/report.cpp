#include "sbci/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace sbci {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skipped: return "skipped";
  }
  return "?";
}

bool AxiomReport::passed() const noexcept {
  return std::all_of(verdicts.begin(), verdicts.end(),
                     [](const Verdict& v) { return v.passed(); });
}

const Verdict* AxiomReport::find(const std::string& axiom) const {
  for (const auto& v : verdicts) {
    if (v.axiom == axiom) return &v;
  }
  return nullptr;
}

const Verdict& AxiomReport::at(const std::string& axiom) const {
  if (const Verdict* v = find(axiom)) return *v;
  throw std::out_of_range("no verdict for " + axiom + " in " + system);
}

std::string AxiomReport::fact(const std::string& key) const {
  for (const auto& [k, v] : facts) {
    if (k == key) return v;
  }
  return {};
}

}  // namespace sbci
