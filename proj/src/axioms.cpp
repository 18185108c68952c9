#include "sbci/axioms.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

#include "sbci/detail/quantify.hpp"
#include "sbci/error.hpp"
#include "sbci/models.hpp"

namespace sbci {

namespace {

using laws::Law;

void require_checkable(const FiniteAlgebra& alg) {
  if (alg.size() > kMaxCheckedSize) {
    throw SizeCapExceeded("exhaustive checks are limited to " + std::to_string(kMaxCheckedSize) +
                          " elements, carrier has " + std::to_string(alg.size()));
  }
}

std::optional<std::vector<Elem>> find_tuple(std::size_t n, int arity,
                                            const std::function<bool(std::span<const Elem>)>& f) {
  return detail::find_violation(n, arity, f);
}

std::vector<std::string> labels_of(const FiniteAlgebra& alg, std::span<const Elem> w) {
  std::vector<std::string> out;
  out.reserve(w.size());
  for (Elem x : w) out.push_back(alg.label(x));
  return out;
}

Verdict make_verdict(const FiniteAlgebra& alg, std::string id,
                     const std::optional<std::vector<Elem>>& witness) {
  Verdict v;
  v.axiom = std::move(id);
  if (witness) {
    v.status = Status::fail;
    v.witness = *witness;
    v.witness_labels = labels_of(alg, *witness);
  }
  return v;
}

std::optional<Law> law_by_id(std::string_view id) {
  for (const auto& li : laws::kLawInfo) {
    if (li.id == id) return li.law;
  }
  return std::nullopt;
}

// Meet-based predicates: true when the instance holds.
struct MeetLaw {
  std::string_view id;
  int arity;
  bool (*holds)(const TableModel& m, const Table& meet, std::span<const Elem> v);
};

constexpr MeetLaw kConditionStar{"condition-star", 3,
                                 [](const TableModel& m, const Table& meet, std::span<const Elem> v) {
                                   return m.le(v[0], m.imp(v[1], v[2])) ==
                                          m.le(meet(v[0], v[1]), v[2]);
                                 }};

constexpr MeetLaw kDistributivity{"distributivity", 3,
                                  [](const TableModel& m, const Table& meet, std::span<const Elem> v) {
                                    return m.imp(v[0], meet(v[1], v[2])) ==
                                           meet(m.imp(v[0], v[1]), m.imp(v[0], v[2]));
                                  }};

constexpr MeetLaw kLemmaOrdMeet{"lem-ord-1", 3,
                                [](const TableModel& m, const Table& meet, std::span<const Elem> v) {
                                  return m.le(v[0], meet(v[1], v[2])) ==
                                         (m.le(v[0], v[1]) && m.le(v[0], v[2]));
                                }};

constexpr MeetLaw kLemmaOrdBound{"lem-ord-1b", 3,
                                 [](const TableModel& m, const Table& meet, std::span<const Elem> v) {
                                   return !(m.le(v[0], v[2]) && m.le(v[1], v[2])) ||
                                          m.le(meet(v[0], v[1]), v[2]);
                                 }};

constexpr MeetLaw kLemmaOrd2{"lem-ord-2", 5,
                             [](const TableModel& m, const Table& meet, std::span<const Elem> v) {
                               auto [a, b, c, d, e] = std::array{v[0], v[1], v[2], v[3], v[4]};
                               return !m.le(a, meet(m.imp(b, c), m.imp(d, e))) ||
                                      m.le(a, m.imp(meet(b, d), meet(c, e)));
                             }};

constexpr std::array<const MeetLaw*, 5> kMeetLaws{&kConditionStar, &kDistributivity, &kLemmaOrdMeet,
                                                   &kLemmaOrdBound, &kLemmaOrd2};

Verdict check_meet_law(const FiniteAlgebra& alg, const Table& meet, const MeetLaw& law) {
  TableModel m(alg);
  auto w = find_tuple(alg.size(), law.arity,
                      [&](std::span<const Elem> v) { return law.holds(m, meet, v); });
  return make_verdict(alg, std::string(law.id), w);
}

void require_meet_table(const FiniteAlgebra& alg, const Table& meet) {
  if (meet.size() != alg.size()) throw InvalidAlgebra("meet table does not match the carrier");
}

std::string element_set(const FiniteAlgebra& alg, const std::vector<Elem>& xs) {
  std::string s = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += alg.label(xs[i]);
  }
  return s + "}";
}

constexpr std::array kBciLaws{Law::C1, Law::C2, Law::C3, Law::C4};
constexpr std::array kBckLaws{Law::BCK};
constexpr std::array kPropertiesA{Law::A1, Law::A2, Law::A3, Law::A4,  Law::A5, Law::A6,
                                  Law::A7, Law::A8, Law::A9, Law::A10, Law::A11};
constexpr std::array kSbciLaws{Law::SBCI1, Law::SBCI2, Law::SBCI3, Law::SBCI4,
                               Law::SBCI5, Law::SBCI6, Law::SBCI7};
constexpr std::array kSbciDerived{Law::SBCI8,  Law::SBCI9,  Law::SBCI10, Law::SBCI11,
                                  Law::SBCI12, Law::SBCI13, Law::SBCI14, Law::SBCI15,
                                  Law::SBCI16, Law::SBCI17, Law::SBCI18};
constexpr std::array kSbckLaws{Law::SBCK};
constexpr std::array kPbciLaws{Law::PB1, Law::PB2, Law::PB3, Law::PB4,
                               Law::PB5, Law::PB6, Law::PB7};

constexpr std::array<std::string_view, 13> kSystemNames{
    "bci",   "bck",          "bck-criterion",  "properties-a", "sbci",      "sbci-derived", "sbck",
    "pbci",  "condition-star", "distributivity", "lemma-ord",  "coincide", "way-below"};

}  // namespace

AxiomReport check_laws(const FiniteAlgebra& alg, std::string system,
                       std::span<const laws::Law> law_list) {
  require_checkable(alg);
  AxiomReport report;
  report.system = std::move(system);
  TableModel m(alg);
  for (Law law : law_list) {
    const auto& li = laws::info(law);
    auto w = find_tuple(alg.size(), li.arity, [&](std::span<const Elem> v) {
      return laws::evaluate(law, m, v);
    });
    report.verdicts.push_back(make_verdict(alg, std::string(li.id), w));
  }
  return report;
}

AxiomReport check_bci(const FiniteAlgebra& alg) {
  return check_laws(alg.with_tables(alg.arrow(), std::nullopt), "bci", kBciLaws);
}

AxiomReport check_bck(const FiniteAlgebra& alg) {
  AxiomReport r = check_laws(alg, "bck", kBckLaws);
  if (!check_bci(alg).passed()) r.facts.emplace_back("context", "algebra is not BCI");
  return r;
}

AxiomReport check_bck_criterion(const FiniteAlgebra& alg) {
  require_checkable(alg);
  AxiomReport r;
  r.system = "bck-criterion";
  TableModel m(alg);
  const std::size_t n = alg.size();
  auto w = find_tuple(n, 1, [&](std::span<const Elem> v) {
    for (Elem y = 0; y < n; ++y) {
      if (m.le(y, v[0]) && m.le(y, alg.top())) return true;
    }
    return false;
  });
  r.verdicts.push_back(make_verdict(alg, "bck-criterion", w));

  Verdict agree;
  agree.axiom = "agrees-with-bck";
  if (!check_bci(alg).passed()) {
    agree.status = Status::skipped;
    agree.detail = "algebra is not BCI";
    r.facts.emplace_back("context", "algebra is not BCI");
  } else {
    const bool bck = check_laws(alg, "bck", kBckLaws).passed();
    if (bck != !w.has_value()) {
      agree.status = Status::fail;
      agree.detail = bck ? "BCK but criterion fails" : "criterion holds but not BCK";
    }
  }
  r.verdicts.push_back(std::move(agree));
  return r;
}

AxiomReport check_properties_a(const FiniteAlgebra& alg) {
  return check_laws(alg.with_tables(alg.arrow(), std::nullopt), "properties-a", kPropertiesA);
}

AxiomReport check_sbci(const FiniteAlgebra& alg) { return check_laws(alg, "sbci", kSbciLaws); }

AxiomReport check_sbci_derived(const FiniteAlgebra& alg) {
  return check_laws(alg, "sbci-derived", kSbciDerived);
}

AxiomReport check_sbck(const FiniteAlgebra& alg) {
  AxiomReport r = check_laws(alg, "sbck", kSbckLaws);
  std::vector<Elem> total;
  TableModel m(alg);
  for (Elem x = 0; x < alg.size(); ++x) {
    if (m.wb(x, x)) total.push_back(x);
  }
  r.facts.emplace_back("total", element_set(alg, total));
  return r;
}

AxiomReport check_pbci(const FiniteAlgebra& alg) { return check_laws(alg, "pbci", kPbciLaws); }

AxiomReport check_condition_star(const FiniteAlgebra& alg, const Table& meet) {
  require_checkable(alg);
  require_meet_table(alg, meet);
  AxiomReport r;
  r.system = "condition-star";
  r.verdicts.push_back(check_meet_law(alg, meet, kConditionStar));
  return r;
}

AxiomReport check_meet_distributivity(const FiniteAlgebra& alg, const Table& meet) {
  require_checkable(alg);
  require_meet_table(alg, meet);
  AxiomReport r;
  r.system = "distributivity";
  r.verdicts.push_back(check_meet_law(alg, meet, kDistributivity));
  return r;
}

AxiomReport check_lemma_ord(const FiniteAlgebra& alg, const Table& meet) {
  require_checkable(alg);
  require_meet_table(alg, meet);
  AxiomReport r;
  r.system = "lemma-ord";
  r.verdicts.push_back(check_meet_law(alg, meet, kLemmaOrdMeet));
  r.verdicts.push_back(check_meet_law(alg, meet, kLemmaOrdBound));
  if (check_meet_law(alg, meet, kConditionStar).passed()) {
    r.verdicts.push_back(check_meet_law(alg, meet, kLemmaOrd2));
  } else {
    Verdict v;
    v.axiom = std::string(kLemmaOrd2.id);
    v.status = Status::skipped;
    v.detail = "condition (*) fails";
    r.verdicts.push_back(std::move(v));
  }
  return r;
}

AxiomReport relations_coincide(const RelationMatrix& way_below, const RelationMatrix& order,
                               const std::vector<std::string>& labels) {
  if (way_below.size() != order.size()) throw InvalidAlgebra("relations differ in size");
  const std::size_t n = order.size();
  auto label = [&](Elem x) { return labels.empty() ? std::to_string(x) : labels[x]; };
  AxiomReport r;
  r.system = "coincide";

  Verdict refl;
  refl.axiom = "wb-reflexive";
  if (auto w = way_below.reflexive_witness()) {
    refl.status = Status::fail;
    refl.witness = {*w};
    refl.witness_labels = {label(*w)};
  }

  Verdict equal;
  equal.axiom = "wb-equals-le";
  for (Elem x = 0; x < n && equal.passed(); ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (way_below(x, y) != order(x, y)) {
        equal.status = Status::fail;
        equal.witness = {x, y};
        equal.witness_labels = {label(x), label(y)};
        break;
      }
    }
  }

  Verdict agree;
  agree.axiom = "agreement";
  if (refl.passed() != equal.passed()) {
    agree.status = Status::fail;
    agree.detail = refl.passed() ? "<< reflexive but differs from <=" : "<< equals <= but is not reflexive";
  }
  r.verdicts = {std::move(refl), std::move(equal), std::move(agree)};
  return r;
}

AxiomReport relations_coincide(const FiniteAlgebra& alg) {
  require_checkable(alg);
  RelationMatrix wb = alg.has_double_arrow() ? derive_relation(alg, Which::double_arrow)
                                             : derive_relation(alg, Which::arrow);
  return relations_coincide(wb, derive_relation(alg, Which::arrow), alg.labels());
}

AxiomReport check_way_below(const FiniteAlgebra& alg) {
  constexpr std::array kWb{Law::WB1, Law::WB2};
  AxiomReport r = check_laws(alg, "way-below", kWb);
  TableModel m(alg);
  const std::size_t n = alg.size();
  std::optional<Elem> smallest;
  for (Elem z = 0; z < n && !smallest; ++z) {
    bool below_all = true;
    for (Elem x = 0; x < n && below_all; ++x) below_all = m.le(z, x);
    if (below_all) smallest = z;
  }
  Verdict v;
  v.axiom = "WB-3";
  if (!smallest) {
    v.detail = "no smallest element";
    r.facts.emplace_back("smallest", "none");
  } else {
    r.facts.emplace_back("smallest", alg.label(*smallest));
    auto w = find_tuple(n, 1, [&](std::span<const Elem> x) { return m.wb(*smallest, x[0]); });
    if (w) v = make_verdict(alg, "WB-3", w);
  }
  r.verdicts.push_back(std::move(v));
  return r;
}

bool witness_violates(const FiniteAlgebra& alg, const Verdict& verdict, const Table* meet) {
  if (verdict.status != Status::fail) return false;
  for (Elem x : verdict.witness) {
    if (x >= alg.size()) return false;
  }
  if (auto law = law_by_id(verdict.axiom)) {
    if (verdict.witness.size() != static_cast<std::size_t>(laws::info(*law).arity)) return false;
    const bool single = *law <= Law::A11;
    FiniteAlgebra view = single ? alg.with_tables(alg.arrow(), std::nullopt) : alg;
    TableModel m(view);
    return !laws::evaluate(*law, m, std::span<const Elem>(verdict.witness));
  }
  if (meet) {
    TableModel m(alg);
    for (const MeetLaw* ml : kMeetLaws) {
      if (ml->id == verdict.axiom && verdict.witness.size() == static_cast<std::size_t>(ml->arity)) {
        return !ml->holds(m, *meet, verdict.witness);
      }
    }
  }
  TableModel m(alg);
  const auto& w = verdict.witness;
  if (verdict.axiom == "bck-criterion" && w.size() == 1) {
    for (Elem y = 0; y < alg.size(); ++y) {
      if (m.le(y, w[0]) && m.le(y, alg.top())) return false;
    }
    return true;
  }
  if (verdict.axiom == "WB-3" && w.size() == 1) {
    for (Elem z = 0; z < alg.size(); ++z) {
      bool below_all = true;
      for (Elem x = 0; x < alg.size() && below_all; ++x) below_all = m.le(z, x);
      if (below_all) return !m.wb(z, w[0]);
    }
    return false;
  }
  if (verdict.axiom == "wb-reflexive" && w.size() == 1) return !m.wb(w[0], w[0]);
  if (verdict.axiom == "wb-equals-le" && w.size() == 2) return m.wb(w[0], w[1]) != m.le(w[0], w[1]);
  return false;
}

std::span<const std::string_view> system_names() { return kSystemNames; }

bool is_system(std::string_view name) {
  return std::find(kSystemNames.begin(), kSystemNames.end(), name) != kSystemNames.end();
}

bool system_uses_double_arrow(std::string_view name) {
  return name == "sbci" || name == "sbci-derived" || name == "sbck" || name == "pbci" ||
         name == "coincide" || name == "way-below";
}

std::span<const laws::Law> system_laws(std::string_view name) {
  if (name == "bci") return kBciLaws;
  if (name == "bck") return kBckLaws;
  if (name == "properties-a") return kPropertiesA;
  if (name == "sbci") return kSbciLaws;
  if (name == "sbci-derived") return kSbciDerived;
  if (name == "sbck") return kSbckLaws;
  if (name == "pbci") return kPbciLaws;
  return {};
}

AxiomReport run_system(const FiniteAlgebra& alg, std::string_view name) {
  if (name == "bci") return check_bci(alg);
  if (name == "bck") return check_bck(alg);
  if (name == "bck-criterion") return check_bck_criterion(alg);
  if (name == "properties-a") return check_properties_a(alg);
  if (name == "sbci") return check_sbci(alg);
  if (name == "sbci-derived") return check_sbci_derived(alg);
  if (name == "sbck") return check_sbck(alg);
  if (name == "pbci") return check_pbci(alg);
  if (name == "coincide") return relations_coincide(alg);
  if (name == "way-below") return check_way_below(alg);
  if (name == "condition-star" || name == "distributivity" || name == "lemma-ord") {
    require_checkable(alg);
    const RelationMatrix order = derive_relation(alg, Which::arrow);
    std::optional<Table> meet;
    Verdict missing;
    missing.axiom = "meet";
    missing.status = Status::fail;
    if (!order.is_partial_order()) {
      missing.detail = "the -> order is not a partial order";
    } else {
      MeetStructure ms = compute_meet(order);
      if (ms.present()) {
        meet = std::move(ms.meet);
      } else {
        missing.witness = {ms.missing->first, ms.missing->second};
        missing.witness_labels = labels_of(alg, missing.witness);
        missing.detail = "pair has no greatest lower bound";
      }
    }
    if (!meet) {
      AxiomReport r;
      r.system = std::string(name);
      r.verdicts.push_back(std::move(missing));
      return r;
    }
    if (name == "condition-star") return check_condition_star(alg, *meet);
    if (name == "distributivity") return check_meet_distributivity(alg, *meet);
    return check_lemma_ord(alg, *meet);
  }
  throw Error("unknown system '" + std::string(name) + "'");
}

}  // namespace sbci
