#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redu/entail.hpp"
#include "redu/graph.hpp"
#include "redu/search.hpp"
#include "redu/types.hpp"

namespace redu {

// s is an I.E.S. of f: equivalent to f and irredundant.
bool is_ies(const Formula &f, const std::vector<int> &subset_ids);

// A clause is in every I.E.S. iff it is irredundant in f.
bool in_all_ies(const Formula &f, int clause_id);

// f has exactly one I.E.S. iff dropping all redundant clauses at once leaves
// an equivalent formula.
bool has_unique_ies(const Formula &f);

// Consistent, acyclic, no implied literal: the unique I.E.S. is
// { ~l v l1 | l1 in M(l) }.
std::vector<int> unique_ies_acyclic(const Formula &f);

enum class Membership { InAll, InSome, InNone, NeedsSearch };

struct IesConstruction {
	std::vector<int> ies_ids;       // one concrete I.E.S. (original clause ids)
	int min_half_units = 0;         // minimum over all I.E.S.'s
	std::vector<int> clause_ids;    // parallel arrays, whole formula
	std::vector<Membership> membership;
};

// Consistent acyclic formulas: unique core I.E.S. plus an independent minimum
// choice (single S clause or P pair) per implied literal.
IesConstruction ies_consistent_acyclic(const Formula &f);

struct MinInconsistent {
	int half_units = 0;
	std::vector<int> witness_ids; // inconsistent subset realizing the minimum
};

// Inconsistent acyclic formulas: pattern minimization over the weighted
// distance table (disjoint contradictions, shared prefix, shared loop
// segment), in half-units of the unit-eliminated form.
MinInconsistent min_inconsistent_size_acyclic(const Formula &f);

enum class CyclicSizeCase { FrontierContradiction, SplitPair, NeedsSearch };

struct CyclicImpliedSize {
	CyclicSizeCase kind = CyclicSizeCase::NeedsSearch;
	int cc_size = 0;         // literals in the cycle component of l
	int half_units = 0;      // contribution of clauses leaving the component
};

// Consistent f with f |= ~l and l on a clause-cycle: minimal number of clauses
// leaving CC(l); |CC| when one frontier literal alone reaches a contradiction,
// |CC|+1 when two frontier literals of one component node reach opposite
// literals, otherwise NeedsSearch (simple cycle through two given nodes).
CyclicImpliedSize size_cyclic_implied(const Formula &f, Lit l);

// Acyclic inconsistent f: clause presence in some I.E.S. (kept-consistent
// removal, else UP-bottom from both clause literals over f minus the clause).
bool in_some_ies_acyclic_inconsistent(const Formula &f, int clause_id);

// Consistent f, clause not inside a clause-cycle: presence in some I.E.S.
// (equivalence-interval test in the no-implied core, frontier test when the
// clause hangs off an implied literal). nullopt = clause lies on a cycle.
std::optional<bool> in_some_ies_noncycle_clause(const Formula &f, int clause_id);

struct IesReport {
	Regime regime = Regime::ConsistentNoImplied;
	CyclicityKind cyclic = CyclicityKind::Acyclic;
	bool unique = false;
	std::optional<int> min_half_units;    // absent if not determined
	std::vector<int> ies_ids;             // a concrete I.E.S.
	std::vector<int> clause_ids;
	std::vector<Membership> membership;
	bool exact_used = false;
	bool exhausted = false;               // some answer hit the budget
};

// Dispatch every question answerable in polynomial time; fall back to exact
// search within the budget when allowed.
IesReport ies_report(const Formula &f, const SearchBudget &budget, bool allow_exact);

// Serialize to the stable JSON schema (ordered keys, 1-based clause ids).
std::string ies_report_json(const IesReport &r);

} // namespace redu
