#include "redu/search.hpp"

#include <deque>

#include "engine.hpp"

namespace redu {

namespace {

// Masked unit propagation: only clauses with mask[pos] == 1 participate.
class TwoCnfOracle : public detail::SubsetOracle {
  public:
	explicit TwoCnfOracle(const Formula &f) : f_(f), occ_(2 * f.n)
	{
		for (size_t i = 0; i < f_.clauses.size(); ++i)
			for (Lit l : f_.clauses[i].lits)
				occ_[l.code()].push_back((int)i);
		consistent_ = true; // refined below by the caller-visible ctor body
		std::vector<char> all(f_.clauses.size(), 1);
		consistent_ = !inconsistent_masked(all);
	}

	bool entails(const std::vector<char> &mask, const Clause &c) const override
	{
		Lit l1 = c.lits[0];
		Lit l2 = c.lits.size() == 2 ? c.lits[1] : c.lits[0];
		bool bottom = false;
		std::vector<Lit> der = propagate(mask, ~l1, bottom);
		if (bottom)
			return true;
		if (c.lits.size() == 2) {
			for (Lit d : der)
				if (d == l2)
					return true;
			propagate(mask, ~l2, bottom);
			if (bottom)
				return true;
		}
		if (consistent_)
			return false; // subsets of a consistent formula stay consistent
		return inconsistent_masked(mask);
	}

	bool inconsistent_masked(const std::vector<char> &mask) const
	{
		for (int v = 1; v <= f_.n; ++v) {
			bool b1 = false, b2 = false;
			propagate(mask, Lit::make(v, false), b1);
			if (!b1)
				continue;
			propagate(mask, Lit::make(v, true), b2);
			if (b2)
				return true;
		}
		return false;
	}

  private:
	std::vector<Lit> propagate(const std::vector<char> &mask, Lit start, bool &bottom) const
	{
		bottom = false;
		std::vector<char> have(2 * f_.n, 0);
		std::deque<int> q;
		auto push = [&](Lit l) {
			if (!have[l.code()]) {
				have[l.code()] = 1;
				q.push_back(l.code());
			}
		};
		push(start);
		for (size_t i = 0; i < f_.clauses.size(); ++i)
			if (mask[i] && f_.clauses[i].unary())
				push(f_.clauses[i].lits[0]);
		std::vector<Lit> out;
		while (!q.empty()) {
			Lit l = Lit::from_code(q.front());
			q.pop_front();
			out.push_back(l);
			if (have[(~l).code()])
				bottom = true;
			for (int ci : occ_[(~l).code()]) {
				if (!mask[ci])
					continue;
				const Clause &c = f_.clauses[ci];
				if (!c.binary())
					continue;
				push(c.lits[0] == ~l ? c.lits[1] : c.lits[0]);
			}
		}
		return out;
	}

	const Formula &f_;
	std::vector<std::vector<int>> occ_;
	bool consistent_;
};

} // namespace

SearchOutcome<std::vector<std::vector<int>>> enumerate_ies(const Formula &f,
                                                           const SearchBudget &b)
{
	TwoCnfOracle o(f);
	return detail::engine_enumerate(f, o, b);
}

SearchOutcome<MinIesResult> min_ies_size_exact(const Formula &f, const SearchBudget &b)
{
	TwoCnfOracle o(f);
	return detail::engine_min_size(f, o, b);
}

SearchOutcome<bool> in_some_ies_exact(const Formula &f, int clause_id, const SearchBudget &b)
{
	TwoCnfOracle o(f);
	return detail::engine_in_some(f, o, clause_id, b);
}

} // namespace redu
