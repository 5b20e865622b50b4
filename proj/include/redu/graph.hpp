#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redu/types.hpp"

namespace redu {

// Implication graph of a binary-only formula: clause (a v b) contributes the
// skew-symmetric edge pair ~a -> b and ~b -> a, both tagged with the clause id.
struct Edge {
	int to;        // literal code
	int clause_id; // tagging clause
	int weight;    // half-units of the tagging clause
};

struct ImplicationGraph {
	int n = 0;                          // variables; literal codes are 0..2n-1
	std::vector<std::vector<Edge>> adj; // forward edges, sorted by target code
	std::vector<std::vector<Edge>> radj; // reverse edges, sorted by source code

	static ImplicationGraph build(const WeightedFormula &wf);
	static ImplicationGraph build(const Formula &binary_only);

	int nodes() const { return 2 * n; }
};

// Literals UP-derivable from `start` (reachability; includes `start`).
// Deterministic BFS order: neighbours are scanned in ascending literal code.
std::vector<Lit> up_closure(const ImplicationGraph &g, Lit start);

// Witness that UP from `start` derives a contradiction: a single walk
// start => l3 => x => ~l3, where l3 is the last literal the two UP branches
// share before they derive the two polarities of the clash variable.
struct ContradictionWitness {
	std::vector<Lit> path;       // walk nodes, path.front() == start
	std::vector<int> clause_ids; // walk edges, clause_ids[i] joins path[i],path[i+1]
	int clash_var = 0;           // variable at which the two UP branches collide
};

// BFS by depth; at the first depth where some variable has both polarities
// visited, the smallest such variable is picked and the two parent paths are
// merged into a single walk through their last common literal.
std::optional<ContradictionWitness> up_bottom(const ImplicationGraph &g, Lit start);

enum class CyclicityKind { Acyclic, Cyclic, Unknown };

// Clause-cycle detection (a directed literal cycle containing no complementary
// pair). For consistent formulas the SCC test is exact; an SCC that contains
// complementary pairs (inconsistent formulas only) is resolved by a bounded
// DFS over complement-avoiding simple paths.
struct Cyclicity {
	CyclicityKind kind = CyclicityKind::Acyclic;
	std::vector<Lit> witness_cycle;      // when Cyclic
	std::vector<int> witness_clause_ids; // edges of the witness cycle
	bool resolved_by_search = false;     // true if the bounded DFS was needed
};

Cyclicity cyclicity(const ImplicationGraph &g, long long search_budget = 2'000'000);

// Appendix-style per-literal sets used by the I.E.S. constructions.
struct LiteralSets {
	std::vector<Lit> C;               // direct UP targets of l
	std::vector<int> D;               // ids of clauses of the form ~l v l'
	std::vector<Lit> M;               // C-members not UP-reachable (in R) from another C-member
	std::vector<Lit> S;               // C-members whose closure in R is contradictory
	std::vector<std::pair<Lit, Lit>> P; // C x C pairs reaching each other's complement in R, S excluded
	std::vector<Lit> CC;              // cycle companions of l (mutual reachability; l included)
	std::vector<Lit> JC;              // one-step successors of CC outside CC
	std::vector<Lit> LC;              // union of UP closures of JC members
};

// R is the graph of the formula minus the clauses in D.
LiteralSets literal_sets(const ImplicationGraph &g, Lit l);

// DOT rendering of the implication graph (edges labelled with clause ids).
std::string graph_dot(const ImplicationGraph &g);

} // namespace redu
