#include "sbci/search.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "sbci/axioms.hpp"
#include "sbci/error.hpp"
#include "sbci/laws.hpp"
#include "sbci/models.hpp"

namespace sbci {

namespace {

constexpr Elem kTop = 0;

struct Instance {
  laws::Law law;
  std::uint8_t arity;
  std::array<std::int32_t, 5> args;
};

struct Cell {
  std::uint8_t table;
  Elem x, y;
};

bool contains(const std::vector<std::string>& names, std::string_view s) {
  return std::find(names.begin(), names.end(), s) != names.end();
}

class Searcher {
 public:
  Searcher(const SearchTask& task, const std::function<bool(const FiniteAlgebra&)>& visit)
      : task_(task), visit_(visit), n_(task.size), two_ops_(task_uses_two_operations(task)) {
    tables_[0].assign(n_ * n_, PartialModel::kUnknown);
    tables_[1].assign(n_ * n_, PartialModel::kUnknown);
  }

  SearchResult run() {
    if (!force_cells()) return result_;
    collect_instances();
    std::vector<Instance> next;
    if (!filter(pending_, next)) return result_;
    pending_.swap(next);
    order_free_cells();
    levels_.resize(free_.size() + 1);
    levels_[0] = pending_;
    dfs(0);
    return result_;
  }

 private:
  std::int32_t* dimp_table() { return two_ops_ ? tables_[1].data() : tables_[0].data(); }

  bool force(std::uint8_t t, Elem x, Elem y, Elem v) {
    auto& cell = tables_[t][x * n_ + y];
    if (cell != PartialModel::kUnknown && cell != static_cast<std::int32_t>(v)) return false;
    cell = static_cast<std::int32_t>(v);
    return true;
  }

  // Cells fixed by definitional axioms of the required systems.
  bool force_cells() {
    const auto& req = task_.require;
    const std::uint8_t d = two_ops_ ? 1 : 0;
    bool ok = true;
    for (Elem x = 0; x < n_; ++x) {
      if (contains(req, "bci")) {
        ok = ok && force(0, x, x, kTop) && force(0, kTop, x, x);
      }
      if (contains(req, "bck")) ok = ok && force(0, x, kTop, kTop);
      if (contains(req, "sbci")) ok = ok && force(d, kTop, x, x);
      if (contains(req, "sbck")) ok = ok && force(d, x, kTop, kTop);
      if (contains(req, "pbci")) ok = ok && force(0, x, x, kTop) && force(d, x, x, kTop);
    }
    return ok;
  }

  void collect_instances() {
    std::vector<laws::Law> seen;
    for (const auto& name : task_.require) {
      for (laws::Law law : system_laws(name)) {
        if (std::find(seen.begin(), seen.end(), law) != seen.end()) continue;
        seen.push_back(law);
        const int arity = laws::info(law).arity;
        std::array<std::int32_t, 5> a{};
        std::size_t total = 1;
        for (int i = 0; i < arity; ++i) total *= n_;
        for (std::size_t k = 0; k < total; ++k) {
          std::size_t r = k;
          for (int i = arity - 1; i >= 0; --i) {
            a[i] = static_cast<std::int32_t>(r % n_);
            r /= n_;
          }
          pending_.push_back({law, static_cast<std::uint8_t>(arity), a});
        }
      }
    }
  }

  void order_free_cells() {
    const std::uint8_t tables = two_ops_ ? 2 : 1;
    for (std::uint8_t t = 0; t < tables; ++t) {
      for (Elem x = 0; x < n_; ++x) {
        for (Elem y = 0; y < n_; ++y) {
          if (tables_[t][x * n_ + y] == PartialModel::kUnknown) free_.push_back({t, x, y});
        }
      }
    }
    std::stable_sort(free_.begin(), free_.end(), [](const Cell& a, const Cell& b) {
      const auto ka = std::array{std::max(a.x, a.y), Elem{a.table}, a.x, a.y};
      const auto kb = std::array{std::max(b.x, b.y), Elem{b.table}, b.x, b.y};
      return ka < kb;
    });
  }

  // Keeps the instances that are still undecided; false when one is refuted.
  bool filter(const std::vector<Instance>& in, std::vector<Instance>& out) {
    PartialModel m(tables_[0].data(), dimp_table(), n_, kTop);
    out.clear();
    for (const Instance& inst : in) {
      const Tri t = laws::evaluate(
          inst.law, m, std::span<const std::int32_t>(inst.args.data(), inst.arity));
      if (t == Tri::no) return false;
      if (t == Tri::unknown) out.push_back(inst);
    }
    return true;
  }

  void dfs(std::size_t depth) {
    if (stopped_) return;
    if (depth == free_.size()) {
      leaf();
      return;
    }
    const Cell c = free_[depth];
    auto& slot = tables_[c.table][c.x * n_ + c.y];
    for (Elem v = 0; v < n_ && !stopped_; ++v) {
      slot = static_cast<std::int32_t>(v);
      if (!filter(levels_[depth], levels_[depth + 1])) {
        ++result_.pruned;
        continue;
      }
      dfs(depth + 1);
    }
    slot = PartialModel::kUnknown;
  }

  void leaf() {
    auto to_table = [&](const std::vector<std::int32_t>& t) {
      return Table(n_, std::vector<Elem>(t.begin(), t.end()));
    };
    std::optional<Table> dimp;
    if (two_ops_) dimp = to_table(tables_[1]);
    FiniteAlgebra alg(kTop, to_table(tables_[0]), std::move(dimp));
    for (const auto& name : task_.require) {
      if (!run_system(alg, name).passed()) return;
    }
    if (!task_.forbid.empty()) {
      bool all = true;
      for (const auto& name : task_.forbid) all = all && run_system(alg, name).passed();
      if (all) return;
    }
    ++result_.count;
    if (!visit_(alg)) stopped_ = true;
    if (task_.limit && result_.count >= task_.limit) stopped_ = true;
    if (stopped_) result_.exhaustive = false;
  }

  const SearchTask& task_;
  const std::function<bool(const FiniteAlgebra&)>& visit_;
  std::size_t n_;
  bool two_ops_;
  std::array<std::vector<std::int32_t>, 2> tables_;
  std::vector<Instance> pending_;
  std::vector<Cell> free_;
  std::vector<std::vector<Instance>> levels_;
  SearchResult result_;
  bool stopped_ = false;
};

}  // namespace

bool task_uses_two_operations(const SearchTask& task) {
  auto uses = [](const std::vector<std::string>& names) {
    return std::any_of(names.begin(), names.end(),
                       [](const std::string& s) { return system_uses_double_arrow(s); });
  };
  return uses(task.require) || uses(task.forbid);
}

void validate(const SearchTask& task) {
  if (task.require.empty()) throw Error("search needs at least one required system");
  for (const auto* names : {&task.require, &task.forbid}) {
    for (const auto& s : *names) {
      if (!is_system(s)) throw Error("unknown system '" + s + "'");
    }
  }
  const std::size_t cap =
      task_uses_two_operations(task) ? kMaxSearchSizeTwoOps : kMaxSearchSizeOneOp;
  if (task.size < 1 || task.size > cap) {
    throw SizeCapExceeded("search size must be between 1 and " + std::to_string(cap) +
                          ", got " + std::to_string(task.size));
  }
}

SearchResult enumerate(const SearchTask& task,
                       const std::function<bool(const FiniteAlgebra&)>& visit) {
  validate(task);
  return Searcher(task, visit).run();
}

SearchResult enumerate(const SearchTask& task) {
  std::vector<FiniteAlgebra> models;
  SearchResult r = enumerate(task, [&](const FiniteAlgebra& a) {
    models.push_back(a);
    return true;
  });
  auto key = [](const FiniteAlgebra& a) {
    std::vector<Elem> k(a.arrow().cells().begin(), a.arrow().cells().end());
    if (a.has_double_arrow()) {
      k.insert(k.end(), a.double_arrow().cells().begin(), a.double_arrow().cells().end());
    }
    return k;
  };
  std::sort(models.begin(), models.end(),
            [&](const FiniteAlgebra& a, const FiniteAlgebra& b) { return key(a) < key(b); });
  r.models = std::move(models);
  return r;
}

std::uint64_t naive_count(const SearchTask& task) {
  validate(task);
  const std::size_t n = task.size;
  const bool two = task_uses_two_operations(task);
  const std::size_t cells = n * n * (two ? 2 : 1);
  double space = 1;
  for (std::size_t i = 0; i < cells; ++i) space *= static_cast<double>(n);
  if (space > 1 << 24) throw SizeCapExceeded("naive enumeration space is too large");

  std::vector<Elem> digits(cells, 0);
  std::uint64_t count = 0;
  while (true) {
    Table arrow(n, std::vector<Elem>(digits.begin(), digits.begin() + n * n));
    std::optional<Table> dimp;
    if (two) dimp = Table(n, std::vector<Elem>(digits.begin() + n * n, digits.end()));
    FiniteAlgebra alg(kTop, std::move(arrow), std::move(dimp));
    bool ok = true;
    for (const auto& s : task.require) ok = ok && run_system(alg, s).passed();
    if (ok && !task.forbid.empty()) {
      bool all = true;
      for (const auto& s : task.forbid) all = all && run_system(alg, s).passed();
      ok = !all;
    }
    count += ok;
    std::size_t i = cells;
    while (i > 0 && ++digits[i - 1] == n) digits[--i] = 0;
    if (i == 0) break;
  }
  return count;
}

AxiomReport verify_intersection(std::size_t size) {
  SearchTask task;
  task.size = size;
  task.require = {"sbci", "pbci"};
  AxiomReport r;
  r.system = "intersection";
  Verdict equal, bci;
  equal.axiom = "tables-equal";
  bci.axiom = "reduct-bci";
  std::uint64_t index = 0, violations = 0;
  SearchResult res = enumerate(task, [&](const FiniteAlgebra& a) {
    ++index;
    const bool same = a.arrow() == a.double_arrow();
    const bool reduct = check_bci(a.with_tables(a.arrow(), std::nullopt)).passed();
    if (!same && equal.passed()) {
      equal.status = Status::fail;
      equal.detail = "model " + std::to_string(index) + " has different tables";
    }
    if (!reduct && bci.passed()) {
      bci.status = Status::fail;
      bci.detail = "model " + std::to_string(index) + " has a non-BCI reduct";
    }
    violations += !same || !reduct;
    return true;
  });
  r.verdicts = {equal, bci};
  r.facts.emplace_back("size", std::to_string(size));
  r.facts.emplace_back("checked", std::to_string(res.count));
  r.facts.emplace_back("violations", std::to_string(violations));
  r.facts.emplace_back("pruned", std::to_string(res.pruned));
  return r;
}

std::string_view to_string(Region r) {
  switch (r) {
    case Region::bci: return "BCI";
    case Region::sbci_only: return "SBCI-only";
    case Region::pbci_only: return "PBCI-only";
    case Region::neither: return "neither";
    case Region::both_unequal: return "SBCI-and-PBCI-unequal";
  }
  return "?";
}

Region classify(const FiniteAlgebra& alg) {
  const bool sb = check_sbci(alg).passed();
  const bool pb = check_pbci(alg).passed();
  if (sb && pb) return alg.arrow() == alg.double_arrow() ? Region::bci : Region::both_unequal;
  if (sb) return Region::sbci_only;
  if (pb) return Region::pbci_only;
  return Region::neither;
}

}  // namespace sbci
