#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sbci/algebra.hpp"
#include "sbci/laws.hpp"
#include "sbci/relation.hpp"
#include "sbci/report.hpp"

namespace sbci {

/// Exhaustively checks each law over all tuples of the carrier in
/// lexicographic order; the first falsifying tuple becomes the witness.
/// Throws SizeCapExceeded above kMaxCheckedSize elements.
AxiomReport check_laws(const FiniteAlgebra& alg, std::string system,
                       std::span<const laws::Law> laws);

/// C-1..C-4 on the arrow table.
AxiomReport check_bci(const FiniteAlgebra& alg);
/// x <= top for all x. Notes in the facts when the algebra is not BCI.
AxiomReport check_bck(const FiniteAlgebra& alg);
/// For every x some y has y <= x and y <= top; also reports whether this
/// agrees with check_bck.
AxiomReport check_bck_criterion(const FiniteAlgebra& alg);
/// A-1..A-11.
AxiomReport check_properties_a(const FiniteAlgebra& alg);
/// SBCI1..SBCI7; ->> defaults to -> on single-operation algebras.
AxiomReport check_sbci(const FiniteAlgebra& alg);
/// SBCI8..SBCI18.
AxiomReport check_sbci_derived(const FiniteAlgebra& alg);
/// x << top for all x; the set of total elements (x << x) is a fact.
AxiomReport check_sbck(const FiniteAlgebra& alg);
/// PB-1..PB-7 with the order derived from ->.
AxiomReport check_pbci(const FiniteAlgebra& alg);

/// a <= b -> c  iff  a /\ b <= c.
AxiomReport check_condition_star(const FiniteAlgebra& alg, const Table& meet);
/// x -> (y /\ z) == (x -> y) /\ (x -> z).
AxiomReport check_meet_distributivity(const FiniteAlgebra& alg, const Table& meet);
/// Both meet lemmas; the five-variable one is skipped when condition (*)
/// fails, since it is only claimed under that hypothesis.
AxiomReport check_lemma_ord(const FiniteAlgebra& alg, const Table& meet);

/// Whether << is reflexive, whether << equals <=, and whether those two
/// answers agree.
AxiomReport relations_coincide(const FiniteAlgebra& alg);
AxiomReport relations_coincide(const RelationMatrix& way_below, const RelationMatrix& order,
                               const std::vector<std::string>& labels = {});

/// The three auxiliary-relation properties of the pair (<<, <=), reported
/// separately and never folded into any other verdict.
AxiomReport check_way_below(const FiniteAlgebra& alg);

/// True when substituting the verdict's witness into its axiom yields a
/// violation. `meet` is needed for the meet-based axioms.
bool witness_violates(const FiniteAlgebra& alg, const Verdict& verdict,
                      const Table* meet = nullptr);

/// Named checker systems, as accepted on the command line.
std::span<const std::string_view> system_names();
bool is_system(std::string_view name);
/// True when the system reads the ->> table.
bool system_uses_double_arrow(std::string_view name);
/// The universally quantified laws that define the system, or empty when
/// the system cannot be decided from laws alone.
std::span<const laws::Law> system_laws(std::string_view name);

/// Runs a named system. Meet-based systems derive the meet from the ->
/// order and fail with a "meet" verdict when there is none.
AxiomReport run_system(const FiniteAlgebra& alg, std::string_view name);

}  // namespace sbci
