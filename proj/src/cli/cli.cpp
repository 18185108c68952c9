#include "sbci/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sbci/axioms.hpp"
#include "sbci/demos.hpp"
#include "sbci/error.hpp"
#include "sbci/fixtures.hpp"
#include "sbci/interval.hpp"
#include "sbci/render.hpp"
#include "sbci/search.hpp"
#include "sbci/text_format.hpp"

namespace sbci {

namespace {

/// Bad command-line input that CLI11 cannot see, e.g. an unknown system.
class UsageError : public Error {
 public:
  using Error::Error;
};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void require_systems(const std::vector<std::string>& names) {
  for (const auto& s : names) {
    if (!is_system(s)) {
      std::string known;
      for (auto k : system_names()) known += (known.empty() ? "" : ", ") + std::string(k);
      throw UsageError("unknown system '" + s + "' (known: " + known + ")");
    }
  }
}

int exit_for(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.passed(); })
             ? kExitPass
             : kExitFail;
}

RunReport cmd_check(const std::string& path, const std::string& systems) {
  const auto names = split_list(systems);
  if (names.empty()) throw UsageError("no systems given");
  require_systems(names);
  const FiniteAlgebra alg = load_algebra(path);
  RunReport run;
  run.command = "check";
  for (const auto& s : names) run.reports.push_back(run_system(alg, s));
  run.exit_code = exit_for(run.reports);
  return run;
}

bool has_comparable_pair(const RelationMatrix& order) {
  for (Elem a = 0; a < order.size(); ++a) {
    for (Elem b = 0; b < order.size(); ++b) {
      if (a != b && order(a, b)) return true;
    }
  }
  return false;
}

// "-refuted" verdict: passes when `op` is not a representation.
Verdict refuted(std::string id, const IntervalSpace& space, const Table& op, bool expected) {
  Verdict rep = check_representation(space, op);
  Verdict v = rep;
  v.axiom = std::move(id);
  if (!rep.passed()) {
    v.status = Status::pass;
  } else if (expected) {
    v.status = Status::fail;
    v.detail = "the base has a comparable pair but the operation is a representation";
  } else {
    v.status = Status::skipped;
    v.detail = "the base has no comparable pair";
  }
  return v;
}

AxiomReport representation_report(const IntervalAlgebra& ia) {
  AxiomReport r;
  r.system = "representation";
  const IntervalSpace& space = ia.space();
  Verdict rep = check_representation(space, ia.best_table());
  rep.axiom = "best-representation";
  const bool rep_ok = rep.passed();
  r.verdicts.push_back(std::move(rep));
  Verdict opt;
  if (rep_ok) {
    opt = check_optimality(space, ia.best_table());
  } else {
    opt.status = Status::skipped;
    opt.detail = "not a representation";
  }
  opt.axiom = "best-optimality";
  r.verdicts.push_back(std::move(opt));

  const bool comparable = has_comparable_pair(ia.space().base_order());
  r.verdicts.push_back(refuted("km-representation-refuted", space, ia.km_table(), comparable));
  try {
    const FiniteAlgebra m = mapsto_construct(ia.base());
    r.verdicts.push_back(refuted("mapsto-representation-refuted", space, m.arrow(), comparable));
  } catch (const PreconditionViolation& e) {
    Verdict v;
    v.axiom = "mapsto-representation-refuted";
    v.status = Status::skipped;
    v.detail = std::string("|=> not constructed: ") + e.what();
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

RunReport cmd_intervalize(const std::string& path, const std::string& out_path, bool verify) {
  const FiniteAlgebra base = load_algebra(path);
  RunReport run;
  run.command = "intervalize";
  std::optional<IntervalAlgebra> ia;
  try {
    ia.emplace(intervalize(base));
  } catch (const PreconditionViolation& e) {
    AxiomReport r;
    r.system = "intervalize";
    Verdict v;
    v.axiom = "gate";
    v.status = Status::fail;
    v.detail = e.what();
    r.verdicts.push_back(std::move(v));
    r.facts.emplace_back("failed-gate", e.gate());
    run.reports.push_back(std::move(r));
    run.exit_code = kExitFail;
    return run;
  }
  const std::string text = render_algebra(ibci_as_sbci(*ia));
  AxiomReport summary;
  summary.system = "intervalize";
  summary.facts.emplace_back("base-size", std::to_string(base.size()));
  summary.facts.emplace_back("size", std::to_string(ia->size()));
  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) throw Error("cannot write '" + out_path + "'");
    summary.facts.emplace_back("written", out_path);
  } else {
    run.algebras.push_back(text);
  }
  run.reports.push_back(std::move(summary));
  if (verify) {
    run.reports.push_back(verify_ibci(*ia));
    run.reports.push_back(verify_ibci_derived(*ia));
    run.reports.push_back(representation_report(*ia));
  }
  run.exit_code = exit_for(run.reports);
  return run;
}

RunReport cmd_search(std::size_t n, const std::string& require, const std::string& forbid,
                     std::size_t limit, std::ostream* stream) {
  SearchTask task;
  task.size = n;
  task.require = split_list(require);
  task.forbid = split_list(forbid);
  task.limit = limit;
  if (task.require.empty()) throw UsageError("--require needs at least one system");
  require_systems(task.require);
  require_systems(task.forbid);
  validate(task);
  RunReport run;
  run.command = "search";
  std::size_t index = 0;
  const SearchResult res = enumerate(task, [&](const FiniteAlgebra& a) {
    if (stream) {
      *stream << "# model " << ++index << "\n" << render_algebra(a) << "\n";
    } else {
      run.algebras.push_back(render_algebra(a));
    }
    return true;
  });
  AxiomReport r;
  r.system = "search";
  r.facts.emplace_back("size", std::to_string(n));
  r.facts.emplace_back("require", require);
  if (!forbid.empty()) r.facts.emplace_back("forbid", forbid);
  r.facts.emplace_back("count", std::to_string(res.count));
  r.facts.emplace_back("pruned", std::to_string(res.pruned));
  r.facts.emplace_back("exhaustive", res.exhaustive ? "yes" : "no");
  run.reports.push_back(std::move(r));
  return run;
}

RunReport cmd_intersection(std::size_t n) {
  SearchTask task;
  task.size = n;
  task.require = {"sbci", "pbci"};
  validate(task);
  RunReport run;
  run.command = "intersection";
  run.reports.push_back(verify_intersection(n));
  run.exit_code = exit_for(run.reports);
  return run;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite and sampled checkers for BCI, SBCI and PBCI algebras", "sbci"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool timings = false;
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_flag("--timings", timings, "Append wall-clock timings");

  std::string path, systems = "bci", out_path, require, forbid, name;
  bool verify = false, list = false;
  std::size_t size = 0, limit = 0;
  DemoOptions demo;

  auto* check = app.add_subcommand("check", "Run named checkers on an algebra file");
  check->add_option("file", path, "Algebra file")->required();
  check->add_option("systems", systems, "Comma-separated checker names");

  auto* ivz = app.add_subcommand("intervalize", "Build the interval algebra of a base");
  ivz->add_option("file", path, "Algebra file")->required();
  ivz->add_option("--out", out_path, "Write the interval algebra here");
  ivz->add_flag("--verify", verify, "Verify IBCI laws, representation and optimality");

  auto* search = app.add_subcommand("search", "Enumerate models with top 0");
  search->add_option("n", size, "Carrier size")->required();
  search->add_option("--require", require, "Systems every model passes")->required();
  search->add_option("--forbid", forbid, "Systems no model passes all of");
  search->add_option("--limit", limit, "Stop after this many models");

  auto* inter = app.add_subcommand("intersection", "Check SBCI and PBCI models are BCI");
  inter->add_option("n", size, "Carrier size")->required();

  auto* dm = app.add_subcommand("demo", "Run a continuous or interval example suite");
  dm->add_option("name", name, "Demo name")->required();
  dm->add_option("--grid", demo.grid.resolution, "Grid resolution");
  dm->add_option("--tol", demo.grid.tolerance, "Equality tolerance");

  auto* fx = app.add_subcommand("fixture", "Print a bundled fixture");
  fx->add_option("name", name, "Fixture name");
  fx->add_flag("--list", list, "List fixture names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  RunReport run;
  try {
    std::ostream* stream = format == "text" ? &out : nullptr;
    if (*check) {
      run = cmd_check(path, systems);
    } else if (*ivz) {
      run = cmd_intervalize(path, out_path, verify);
    } else if (*search) {
      run = cmd_search(size, require, forbid, limit, stream);
    } else if (*inter) {
      run = cmd_intersection(size);
    } else if (*dm) {
      if (!is_demo(name)) throw UsageError("unknown demo '" + name + "'");
      run = run_demo(name, demo);
    } else if (*fx) {
      if (list) {
        for (auto n : fixture_names()) out << n << "\n";
        return kExitPass;
      }
      if (name.empty()) throw UsageError("fixture needs a name or --list");
      out << render_algebra(fixture(name));
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeCapExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  if (timings) {
    const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
    run.timings.emplace_back("total", d.count());
  }
  out << (format == "machine" ? render_machine(run) : render_text(run));
  return run.exit_code;
}

}  // namespace sbci
