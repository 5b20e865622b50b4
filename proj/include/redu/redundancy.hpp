#pragma once

#include <vector>

#include "redu/entail.hpp"
#include "redu/types.hpp"

namespace redu {

enum class ClauseVerdict { Redundant, Irredundant };

struct RedundancyReport {
	bool redundant = false;                  // some clause is redundant
	std::vector<int> clause_ids;             // parallel arrays
	std::vector<ClauseVerdict> verdicts;
	Regime regime = Regime::ConsistentNoImplied;

	ClauseVerdict verdict(int id) const;
	std::vector<int> redundant_ids() const;
};

// Single-clause test: f minus the clause still entails it.
bool is_clause_redundant(const Formula &f, int clause_id);

// Inconsistent formulas: a clause is redundant iff its removal keeps the
// formula inconsistent (an m > 4n formula is always redundant).
RedundancyReport check_inconsistent(const Formula &f);

// Clauses touching an implied literal, tested directly.
RedundancyReport check_implied_literal_clauses(const Formula &f, const Decomposition &dec);

// Unit-free core entailing no literal: per source literal l, a two-marker
// multi-seed BFS over the graph minus node l decides all clauses ~l v l' in
// one pass (O(n m) total).
RedundancyReport check_no_implied(const Formula &core);

// Full pipeline: classify, split off implied-literal clauses, run the core
// procedure, merge verdicts.
RedundancyReport check(const Formula &f);

// Equivalent irredundant subset obtained by greedily removing redundant
// clauses in ascending id order (deterministic; works in every regime).
std::vector<int> prune_greedy(const Formula &f);

} // namespace redu
