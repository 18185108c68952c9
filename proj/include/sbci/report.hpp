#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sbci/algebra.hpp"

namespace sbci {

enum class Status { pass, fail, skipped };

const char* to_string(Status s);

/// One axiom verdict. A failing verdict always carries a witness: element
/// indices for finite carriers, coordinates in `point` for sampled ones.
/// Refutation verdicts (ids ending in "-refuted") pass when they carry a
/// counterexample to the refuted claim.
struct Verdict {
  std::string axiom;
  Status status = Status::pass;
  std::vector<Elem> witness;
  std::vector<std::string> witness_labels;
  std::vector<double> point;
  std::string detail;

  bool passed() const noexcept { return status != Status::fail; }
  bool operator==(const Verdict&) const = default;
};

struct AxiomReport {
  std::string system;
  std::vector<Verdict> verdicts;
  /// True when universal axioms were checked on a sample grid only.
  bool sampled = false;
  std::vector<std::pair<std::string, std::string>> facts;

  bool passed() const noexcept;
  /// Throws std::out_of_range for an unknown axiom id.
  const Verdict& at(const std::string& axiom) const;
  const Verdict* find(const std::string& axiom) const;
  std::string fact(const std::string& key) const;

  bool operator==(const AxiomReport&) const = default;
};

}  // namespace sbci
