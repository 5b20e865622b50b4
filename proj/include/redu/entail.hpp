#pragma once

#include <optional>
#include <vector>

#include "redu/types.hpp"

namespace redu {

// Unit propagation over a 2CNF formula (units allowed): the closure of
// {start literals} u {unit clauses of f} under the binary-clause rule.
// `bottom` is set when the closure contains a complementary pair.
struct UpResult {
	std::vector<Lit> derived; // ascending literal code order
	bool bottom = false;
};

UpResult up_propagate(const Formula &f, const std::vector<Lit> &assumptions);

// 2SAT consistency (linear, SCC based).
bool is_consistent(const Formula &f);

// f |= l  (Lemma-2 style: inconsistent, or UP from ~l bottoms out).
bool entails_literal(const Formula &f, Lit l);

// f |= c for a unary or binary clause c (Lemma-3 style conditions).
bool entails_clause(const Formula &f, const Clause &c);

// All literals entailed by f (empty when inconsistent formulas are probed is
// not meaningful; callers should classify first).
std::vector<Lit> implied_literals(const Formula &f);

enum class Regime { Inconsistent, ConsistentImplying, ConsistentNoImplied };

struct Classification {
	Regime regime;
	std::vector<Lit> implied; // empty unless ConsistentImplying
};

Classification classify(const Formula &f);

// Decomposition of a consistent formula: clauses touching an implied literal
// versus the untouched core. The core is unit-free and entails no literal.
struct Decomposition {
	std::vector<int> touched_ids;
	std::vector<int> core_ids;
	Formula core;
	std::vector<Lit> implied;
};

Decomposition decompose(const Formula &f);

} // namespace redu
