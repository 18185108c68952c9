#include "sbci/render.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "sbci/continuous.hpp"
#include "sbci/error.hpp"

namespace sbci {

using nlohmann::json;

namespace {

std::string witness_text(const Verdict& v) {
  std::vector<std::string> parts = v.witness_labels;
  if (parts.empty()) {
    for (Elem e : v.witness) parts.push_back(std::to_string(e));
  }
  if (parts.empty()) {
    for (double d : v.point) parts.push_back(format_real(d));
  }
  if (parts.empty()) return {};
  std::string s = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? ", " : "") + parts[i];
  return s + ")";
}

Status status_from(const std::string& s) {
  if (s == "pass") return Status::pass;
  if (s == "fail") return Status::fail;
  if (s == "skipped") return Status::skipped;
  throw ParseError(1, 1, "unknown status '" + s + "'");
}

json pairs_to_json(const std::vector<std::pair<std::string, std::string>>& ps) {
  json a = json::array();
  for (const auto& [k, v] : ps) a.push_back(json::array({k, v}));
  return a;
}

std::vector<std::pair<std::string, std::string>> pairs_from(const json& a) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& p : a) out.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
  return out;
}

}  // namespace

std::string status_word(const AxiomReport& r, const Verdict& v) {
  if (r.sampled && v.status == Status::pass) return "sampled-pass";
  return to_string(v.status);
}

std::string render_text(const RunReport& run) {
  std::ostringstream out;
  for (const auto& a : run.algebras) out << a << "\n";
  for (const auto& r : run.reports) {
    const bool ok = r.passed();
    out << "[" << r.system << "] " << (ok ? (r.sampled ? "sampled-pass" : "pass") : "fail")
        << "\n";
    std::size_t w = 0;
    for (const auto& v : r.verdicts) w = std::max(w, v.axiom.size());
    for (const auto& v : r.verdicts) {
      std::string line = "  " + v.axiom + std::string(w - v.axiom.size(), ' ') + "  ";
      std::string st = status_word(r, v);
      line += st;
      const std::string wt = witness_text(v);
      if (!wt.empty()) line += std::string(13 - std::min<std::size_t>(st.size(), 12), ' ') + wt;
      out << line << "\n";
      if (!v.detail.empty()) out << "  " << std::string(w + 2, ' ') << v.detail << "\n";
    }
    for (const auto& [k, v] : r.facts) out << "  " << k << ": " << v << "\n";
  }
  if (!run.notes.empty()) {
    std::size_t w = 0;
    for (const auto& n : run.notes) w = std::max(w, n.first.size());
    for (const auto& [k, v] : run.notes) {
      out << k << std::string(w - k.size(), ' ') << "  " << v << "\n";
    }
  }
  for (const auto& [k, s] : run.timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f s", s);
    out << "time " << k << ": " << buf << "\n";
  }
  return out.str();
}

std::string render_machine(const RunReport& run) {
  json j;
  j["command"] = run.command;
  j["exit_code"] = run.exit_code;
  j["reports"] = json::array();
  for (const auto& r : run.reports) {
    json jr;
    jr["system"] = r.system;
    jr["sampled"] = r.sampled;
    jr["passed"] = r.passed();
    jr["verdicts"] = json::array();
    for (const auto& v : r.verdicts) {
      jr["verdicts"].push_back({{"axiom", v.axiom},
                                {"status", to_string(v.status)},
                                {"witness", v.witness},
                                {"witness_labels", v.witness_labels},
                                {"point", v.point},
                                {"detail", v.detail}});
    }
    jr["facts"] = pairs_to_json(r.facts);
    j["reports"].push_back(std::move(jr));
  }
  j["notes"] = pairs_to_json(run.notes);
  j["algebras"] = run.algebras;
  j["timings"] = json::array();
  for (const auto& [k, s] : run.timings) j["timings"].push_back(json::array({k, s}));
  return j.dump(2) + "\n";
}

RunReport parse_machine(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  try {
    RunReport run;
    run.command = j.at("command").get<std::string>();
    run.exit_code = j.at("exit_code").get<int>();
    for (const auto& jr : j.at("reports")) {
      AxiomReport r;
      r.system = jr.at("system").get<std::string>();
      r.sampled = jr.at("sampled").get<bool>();
      for (const auto& jv : jr.at("verdicts")) {
        Verdict v;
        v.axiom = jv.at("axiom").get<std::string>();
        v.status = status_from(jv.at("status").get<std::string>());
        v.witness = jv.at("witness").get<std::vector<Elem>>();
        v.witness_labels = jv.at("witness_labels").get<std::vector<std::string>>();
        v.point = jv.at("point").get<std::vector<double>>();
        v.detail = jv.at("detail").get<std::string>();
        r.verdicts.push_back(std::move(v));
      }
      r.facts = pairs_from(jr.at("facts"));
      run.reports.push_back(std::move(r));
    }
    run.notes = pairs_from(j.at("notes"));
    run.algebras = j.at("algebras").get<std::vector<std::string>>();
    for (const auto& p : j.at("timings")) {
      run.timings.emplace_back(p.at(0).get<std::string>(), p.at(1).get<double>());
    }
    return run;
  } catch (const json::exception& e) {
    throw ParseError(1, 1, std::string("malformed report: ") + e.what());
  }
}

}  // namespace sbci
