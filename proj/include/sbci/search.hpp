#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "sbci/algebra.hpp"
#include "sbci/report.hpp"

namespace sbci {

inline constexpr std::size_t kMaxSearchSizeTwoOps = 4;
inline constexpr std::size_t kMaxSearchSizeOneOp = 5;

struct SearchTask {
  std::size_t size = 1;
  /// Checker names that every model must pass.
  std::vector<std::string> require;
  /// Checker names whose conjunction every model must fail; empty for none.
  std::vector<std::string> forbid;
  /// Stop after this many models; 0 for all.
  std::size_t limit = 0;
};

struct SearchResult {
  std::vector<FiniteAlgebra> models;
  std::uint64_t count = 0;
  /// Partial assignments cut because some law instance was already false.
  std::uint64_t pruned = 0;
  bool exhaustive = true;
};

/// True when some named system in the task reads ->>, so both tables are
/// searched.
bool task_uses_two_operations(const SearchTask& task);

/// Throws Error for an empty or unknown system name and SizeCapExceeded
/// when the size is outside the caps.
void validate(const SearchTask& task);

/// Depth-first search over tables with top fixed at element 0. Each model
/// is passed to `visit` in lexicographic order of its cells; returning
/// false stops the search. `models` in the result stays empty.
SearchResult enumerate(const SearchTask& task,
                       const std::function<bool(const FiniteAlgebra&)>& visit);
/// Same search, collecting the models.
SearchResult enumerate(const SearchTask& task);

/// Every table pair (top 0) checked without pruning. Oracle for enumerate.
std::uint64_t naive_count(const SearchTask& task);

/// Every two-operation algebra of the given size that passes both sbci and
/// pbci must have equal tables and a BCI reduct.
AxiomReport verify_intersection(std::size_t size);

enum class Region { bci, sbci_only, pbci_only, neither, both_unequal };
std::string_view to_string(Region r);
/// Region of the two-table classification; both_unequal would contradict
/// the intersection theorem.
Region classify(const FiniteAlgebra& alg);

}  // namespace sbci
