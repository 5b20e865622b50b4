#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "redu/types.hpp"

namespace redu {

struct SearchBudget {
	int max_clauses = 24;          // refuse larger inputs outright
	long long max_nodes = 8'000'000; // search tree nodes
	long long time_cap_ms = 60'000;
};

enum class SearchStatus { Answered, Exhausted };

template <typename T> struct SearchOutcome {
	SearchStatus status = SearchStatus::Answered;
	T value{};
	std::string exhausted_reason;

	bool answered() const { return status == SearchStatus::Answered; }
	static SearchOutcome answered_with(T v)
	{
		SearchOutcome o;
		o.value = std::move(v);
		return o;
	}
	static SearchOutcome exhausted(std::string why)
	{
		SearchOutcome o;
		o.status = SearchStatus::Exhausted;
		o.exhausted_reason = std::move(why);
		return o;
	}
};

// All I.E.S.'s of f (as sorted id vectors, lexicographically ordered).
// Enumeration walks subsets that keep every irredundant clause (each of those
// belongs to every I.E.S.) and tests equivalence + irredundancy by UP.
SearchOutcome<std::vector<std::vector<int>>> enumerate_ies(const Formula &f,
                                                           const SearchBudget &b = {});

struct MinIesResult {
	int half_units = 0;
	std::vector<int> witness_ids;
};

// Minimum half-unit weight over equivalent subsets (branch and bound; every
// clause weighs 2 here since f is an original, untransformed formula).
SearchOutcome<MinIesResult> min_ies_size_exact(const Formula &f, const SearchBudget &b = {});

// Is there an I.E.S. containing the clause?  true iff some equivalent subset
// keeps the clause essential.
SearchOutcome<bool> in_some_ies_exact(const Formula &f, int clause_id, const SearchBudget &b = {});

} // namespace redu
