#include "engine.hpp"

#include <algorithm>

namespace redu::detail {

namespace {

// positions of clauses irredundant in f: they belong to every equivalent subset
std::vector<char> forced_positions(const Formula &f, const SubsetOracle &o)
{
	const size_t m = f.clauses.size();
	std::vector<char> forced(m, 0), mask(m, 1);
	for (size_t i = 0; i < m; ++i) {
		mask[i] = 0;
		forced[i] = o.entails(mask, f.clauses[i]) ? 0 : 1;
		mask[i] = 1;
	}
	return forced;
}

bool equivalent(const Formula &f, const SubsetOracle &o, const std::vector<char> &mask)
{
	for (size_t i = 0; i < f.clauses.size(); ++i)
		if (!mask[i] && !o.entails(mask, f.clauses[i]))
			return false;
	return true;
}

struct Ctx {
	const Formula &f;
	const SubsetOracle &o;
	std::vector<int> free_pos; // positions not forced, in ascending order
	std::vector<char> mask;    // current subset (forced always 1)
	Ticker ticker;

	Ctx(const Formula &f_, const SubsetOracle &o_, const SearchBudget &b)
	    : f(f_), o(o_), ticker(b)
	{
	}

	// monotone prune: even with every undecided clause included, some dropped
	// clause is no longer entailed
	bool can_extend(size_t depth)
	{
		std::vector<char> full = mask;
		for (size_t k = depth; k < free_pos.size(); ++k)
			full[free_pos[k]] = 1;
		return equivalent(f, o, full);
	}
};

} // namespace

SearchOutcome<std::vector<std::vector<int>>> engine_enumerate(const Formula &f,
                                                              const SubsetOracle &o,
                                                              const SearchBudget &b)
{
	using Out = SearchOutcome<std::vector<std::vector<int>>>;
	if (f.m() > b.max_clauses)
		return Out::exhausted("formula larger than max_clauses budget");
	Ctx ctx(f, o, b);
	std::vector<char> forced = forced_positions(f, o);
	for (size_t i = 0; i < forced.size(); ++i)
		if (!forced[i])
			ctx.free_pos.push_back((int)i);
	ctx.mask = forced;

	std::vector<std::vector<int>> found;
	std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
		if (!ctx.ticker.tick())
			return false;
		if (!ctx.can_extend(depth))
			return true; // nothing below can be equivalent
		if (depth == ctx.free_pos.size()) {
			if (!equivalent(f, o, ctx.mask))
				return true;
			// irredundancy of included free clauses
			for (int p : ctx.free_pos) {
				if (!ctx.mask[p])
					continue;
				ctx.mask[p] = 0;
				bool red = ctx.o.entails(ctx.mask, f.clauses[p]);
				ctx.mask[p] = 1;
				if (red)
					return true;
			}
			std::vector<int> ids;
			for (size_t i = 0; i < ctx.mask.size(); ++i)
				if (ctx.mask[i])
					ids.push_back(f.clauses[i].id);
			found.push_back(std::move(ids));
			return true;
		}
		int p = ctx.free_pos[depth];
		ctx.mask[p] = 0;
		if (!rec(depth + 1))
			return false;
		ctx.mask[p] = 1;
		if (!rec(depth + 1))
			return false;
		ctx.mask[p] = 0;
		return true;
	};
	if (!rec(0))
		return Out::exhausted(ctx.ticker.reason);
	std::sort(found.begin(), found.end());
	return Out::answered_with(std::move(found));
}

SearchOutcome<MinIesResult> engine_min_size(const Formula &f, const SubsetOracle &o,
                                            const SearchBudget &b)
{
	using Out = SearchOutcome<MinIesResult>;
	if (f.m() > b.max_clauses)
		return Out::exhausted("formula larger than max_clauses budget");
	Ctx ctx(f, o, b);
	std::vector<char> forced = forced_positions(f, o);
	int forced_count = 0;
	for (size_t i = 0; i < forced.size(); ++i) {
		if (forced[i])
			++forced_count;
		else
			ctx.free_pos.push_back((int)i);
	}
	ctx.mask = forced;
	int best = -1;
	std::vector<char> best_mask;
	std::function<bool(size_t, int)> rec = [&](size_t depth, int included) -> bool {
		if (!ctx.ticker.tick())
			return false;
		if (best >= 0 && forced_count + included >= best)
			return true;
		if (!ctx.can_extend(depth))
			return true;
		if (depth == ctx.free_pos.size()) {
			if (equivalent(f, o, ctx.mask)) {
				best = forced_count + included;
				best_mask = ctx.mask;
			}
			return true;
		}
		int p = ctx.free_pos[depth];
		ctx.mask[p] = 0;
		if (!rec(depth + 1, included))
			return false;
		ctx.mask[p] = 1;
		if (!rec(depth + 1, included + 1))
			return false;
		ctx.mask[p] = 0;
		return true;
	};
	if (!rec(0, 0))
		return Out::exhausted(ctx.ticker.reason);
	MinIesResult res;
	res.half_units = 2 * best;
	for (size_t i = 0; i < best_mask.size(); ++i)
		if (best_mask[i])
			res.witness_ids.push_back(f.clauses[i].id);
	return Out::answered_with(std::move(res));
}

SearchOutcome<bool> engine_in_some(const Formula &f, const SubsetOracle &o, int clause_id,
                                   const SearchBudget &b)
{
	using Out = SearchOutcome<bool>;
	if (f.m() > b.max_clauses)
		return Out::exhausted("formula larger than max_clauses budget");
	int gpos = -1;
	for (size_t i = 0; i < f.clauses.size(); ++i)
		if (f.clauses[i].id == clause_id)
			gpos = (int)i;
	if (gpos < 0)
		return Out::exhausted("unknown clause id");
	Ctx ctx(f, o, b);
	std::vector<char> forced = forced_positions(f, o);
	if (forced[gpos])
		return Out::answered_with(true); // irredundant: in every I.E.S.
	forced[gpos] = 1; // pin the clause into every candidate
	for (size_t i = 0; i < forced.size(); ++i)
		if (!forced[i])
			ctx.free_pos.push_back((int)i);
	ctx.mask = forced;

	auto essential = [&]() {
		ctx.mask[gpos] = 0;
		bool entailed = o.entails(ctx.mask, f.clauses[gpos]);
		ctx.mask[gpos] = 1;
		return !entailed;
	};
	bool hit = false;
	std::function<bool(size_t)> rec = [&](size_t depth) -> bool {
		if (hit)
			return true;
		if (!ctx.ticker.tick())
			return false;
		// anti-monotone prune: once the rest of the subset entails the
		// clause, no superset keeps it essential
		if (!essential())
			return true;
		if (!ctx.can_extend(depth))
			return true;
		if (depth == ctx.free_pos.size()) {
			if (equivalent(f, o, ctx.mask))
				hit = true;
			return true;
		}
		int p = ctx.free_pos[depth];
		ctx.mask[p] = 0;
		if (!rec(depth + 1))
			return false;
		if (hit)
			return true;
		ctx.mask[p] = 1;
		if (!rec(depth + 1))
			return false;
		ctx.mask[p] = 0;
		return true;
	};
	if (!rec(0) && !hit)
		return Out::exhausted(ctx.ticker.reason);
	return Out::answered_with(hit);
}

} // namespace redu::detail
