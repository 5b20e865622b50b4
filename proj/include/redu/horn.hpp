#pragma once

#include <vector>

#include "redu/redundancy.hpp"
#include "redu/search.hpp"
#include "redu/types.hpp"

namespace redu {

// Horn entailment by forward chaining: f |= c iff f plus the negations of
// c's literals propagates to the empty clause.
bool horn_entails(const Formula &f, const Clause &c);
bool horn_entails_subset(const Formula &f, const std::vector<char> &in_subset, const Clause &c);

bool horn_is_clause_redundant(const Formula &f, int clause_id);
RedundancyReport horn_redundancy(const Formula &f);

bool horn_is_ies(const Formula &f, const std::vector<int> &subset_ids);
bool horn_in_all_ies(const Formula &f, int clause_id);
bool horn_has_unique_ies(const Formula &f);
std::vector<int> horn_prune_greedy(const Formula &f);

// Exact minimum I.E.S. weight (half-units; every Horn clause weighs 2).
SearchOutcome<MinIesResult> horn_min_ies_size(const Formula &f, const SearchBudget &b = {});
SearchOutcome<std::vector<std::vector<int>>> horn_enumerate_ies(const Formula &f,
                                                                const SearchBudget &b = {});
SearchOutcome<bool> horn_in_some_ies_exact(const Formula &f, int clause_id,
                                           const SearchBudget &b = {});

} // namespace redu
