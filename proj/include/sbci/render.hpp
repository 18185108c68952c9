#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sbci/report.hpp"

namespace sbci {

/// Everything one command produced.
struct RunReport {
  std::string command;
  std::vector<AxiomReport> reports;
  /// Ordered key/value lines, e.g. expected and computed values of a demo.
  std::vector<std::pair<std::string, std::string>> notes;
  /// Algebras in the text format, e.g. search results.
  std::vector<std::string> algebras;
  /// Seconds per phase; empty unless timings were requested.
  std::vector<std::pair<std::string, double>> timings;
  int exit_code = 0;

  bool operator==(const RunReport&) const = default;
};

/// Status word used in text output: "sampled-pass" for passes of sampled
/// reports, otherwise the Status name.
std::string status_word(const AxiomReport& r, const Verdict& v);

/// Aligned human-readable text.
std::string render_text(const RunReport& run);
/// JSON tree; parse_machine inverts it exactly.
std::string render_machine(const RunReport& run);
/// Throws ParseError on malformed input.
RunReport parse_machine(std::string_view text);

}  // namespace sbci
