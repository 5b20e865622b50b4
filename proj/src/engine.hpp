#pragma once

// Internal branch-and-bound engine shared by the 2CNF and Horn exact
// searches. A SubsetOracle answers "does this masked subset entail that
// clause"; everything else is generic subset search with monotone pruning.

#include <chrono>
#include <functional>
#include <vector>

#include "redu/search.hpp"
#include "redu/types.hpp"

namespace redu::detail {

struct SubsetOracle {
	virtual ~SubsetOracle() = default;
	// mask is indexed by clause *position* in the formula
	virtual bool entails(const std::vector<char> &mask, const Clause &c) const = 0;
};

struct Ticker {
	long long nodes_left;
	std::chrono::steady_clock::time_point deadline;
	bool exhausted = false;
	std::string reason;

	explicit Ticker(const SearchBudget &b)
	    : nodes_left(b.max_nodes),
	      deadline(std::chrono::steady_clock::now() + std::chrono::milliseconds(b.time_cap_ms))
	{
	}
	bool tick()
	{
		if (exhausted)
			return false;
		if (--nodes_left < 0) {
			exhausted = true;
			reason = "node budget exhausted";
			return false;
		}
		if ((nodes_left & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
			exhausted = true;
			reason = "time budget exhausted";
			return false;
		}
		return true;
	}
};

SearchOutcome<std::vector<std::vector<int>>> engine_enumerate(const Formula &f,
                                                              const SubsetOracle &o,
                                                              const SearchBudget &b);
SearchOutcome<MinIesResult> engine_min_size(const Formula &f, const SubsetOracle &o,
                                            const SearchBudget &b);
SearchOutcome<bool> engine_in_some(const Formula &f, const SubsetOracle &o, int clause_id,
                                   const SearchBudget &b);

} // namespace redu::detail
