#include "redu/horn.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "engine.hpp"

namespace redu {

namespace {

// Forward chaining with per-clause counters of unsatisfied literals.
// f |= c  iff  f plus the complements of c's literals derives a conflict.
bool horn_refutes(const Formula &f, const std::vector<char> *mask, const std::vector<Lit> &facts)
{
	std::vector<int> remaining(f.clauses.size());
	std::vector<std::vector<int>> occ(2 * f.n);
	for (size_t i = 0; i < f.clauses.size(); ++i) {
		remaining[i] = (int)f.clauses[i].lits.size();
		for (Lit l : f.clauses[i].lits)
			occ[(~l).code()].push_back((int)i);
	}
	std::vector<char> have(2 * f.n, 0);
	std::deque<int> q;
	auto push = [&](Lit l) -> bool {
		if (have[(~l).code()])
			return true; // conflict
		if (!have[l.code()]) {
			have[l.code()] = 1;
			q.push_back(l.code());
		}
		return false;
	};
	for (Lit l : facts)
		if (push(l))
			return true;
	for (size_t i = 0; i < f.clauses.size(); ++i)
		if ((!mask || (*mask)[i]) && f.clauses[i].unary() && push(f.clauses[i].lits[0]))
			return true;
	while (!q.empty()) {
		Lit l = Lit::from_code(q.front());
		q.pop_front();
		for (int ci : occ[l.code()]) {
			if (mask && !(*mask)[ci])
				continue;
			if (--remaining[ci] > 1)
				continue;
			// at most one literal of the clause is left unfalsified
			Lit unit;
			int open = 0;
			for (Lit x : f.clauses[ci].lits)
				if (!have[(~x).code()]) {
					unit = x;
					++open;
				}
			if (open == 0)
				return true; // empty clause
			if (open == 1 && push(unit))
				return true;
		}
	}
	return false;
}

class HornOracle : public detail::SubsetOracle {
  public:
	explicit HornOracle(const Formula &f) : f_(f) {}
	bool entails(const std::vector<char> &mask, const Clause &c) const override
	{
		return horn_entails_subset(f_, mask, c);
	}

  private:
	const Formula &f_;
};

} // namespace

bool horn_entails_subset(const Formula &f, const std::vector<char> &mask, const Clause &c)
{
	std::vector<Lit> facts;
	for (Lit l : c.lits)
		facts.push_back(~l);
	return horn_refutes(f, &mask, facts);
}

bool horn_entails(const Formula &f, const Clause &c)
{
	std::vector<Lit> facts;
	for (Lit l : c.lits)
		facts.push_back(~l);
	return horn_refutes(f, nullptr, facts);
}

bool horn_is_clause_redundant(const Formula &f, int clause_id)
{
	const Clause *c = f.find(clause_id);
	if (!c)
		throw std::invalid_argument("unknown clause id");
	std::vector<char> mask(f.clauses.size(), 1);
	for (size_t i = 0; i < f.clauses.size(); ++i)
		if (f.clauses[i].id == clause_id)
			mask[i] = 0;
	return horn_entails_subset(f, mask, *c);
}

RedundancyReport horn_redundancy(const Formula &f)
{
	RedundancyReport r;
	for (const Clause &c : f.clauses) {
		r.clause_ids.push_back(c.id);
		r.verdicts.push_back(horn_is_clause_redundant(f, c.id) ? ClauseVerdict::Redundant
		                                                       : ClauseVerdict::Irredundant);
		if (r.verdicts.back() == ClauseVerdict::Redundant)
			r.redundant = true;
	}
	return r;
}

bool horn_is_ies(const Formula &f, const std::vector<int> &subset_ids)
{
	Formula s = f.subset(subset_ids);
	if (s.m() != (int)subset_ids.size())
		return false;
	for (const Clause &c : f.clauses)
		if (!s.find(c.id) && !horn_entails(s, c))
			return false;
	for (const Clause &c : s.clauses)
		if (horn_is_clause_redundant(s, c.id))
			return false;
	return true;
}

bool horn_in_all_ies(const Formula &f, int clause_id)
{
	return !horn_is_clause_redundant(f, clause_id);
}

bool horn_has_unique_ies(const Formula &f)
{
	std::vector<int> keep;
	for (const Clause &c : f.clauses)
		if (!horn_is_clause_redundant(f, c.id))
			keep.push_back(c.id);
	Formula s = f.subset(keep);
	for (const Clause &c : f.clauses)
		if (!s.find(c.id) && !horn_entails(s, c))
			return false;
	return true;
}

std::vector<int> horn_prune_greedy(const Formula &f)
{
	Formula work = f;
	for (int id : f.ids())
		if (horn_is_clause_redundant(work, id))
			work = work.without(id);
	return work.ids();
}

SearchOutcome<MinIesResult> horn_min_ies_size(const Formula &f, const SearchBudget &b)
{
	HornOracle o(f);
	return detail::engine_min_size(f, o, b);
}

SearchOutcome<std::vector<std::vector<int>>> horn_enumerate_ies(const Formula &f,
                                                                const SearchBudget &b)
{
	HornOracle o(f);
	return detail::engine_enumerate(f, o, b);
}

SearchOutcome<bool> horn_in_some_ies_exact(const Formula &f, int clause_id, const SearchBudget &b)
{
	HornOracle o(f);
	return detail::engine_in_some(f, o, clause_id, b);
}

} // namespace redu
