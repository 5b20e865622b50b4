#include "redu/types.hpp"

#include <algorithm>
#include <stdexcept>

namespace redu {

bool canonicalize_clause(std::vector<Lit> &lits)
{
	std::sort(lits.begin(), lits.end());
	lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
	for (size_t i = 0; i + 1 < lits.size(); ++i)
		if (lits[i + 1] == ~lits[i])
			return false; // tautology
	return true;
}

static bool clause_less(const Clause &a, const Clause &b)
{
	return a.lits < b.lits;
}

FormulaKind Formula::kind() const
{
	bool two = is_two_cnf(), horn = is_horn();
	if (two && horn)
		return FormulaKind::Both;
	if (two)
		return FormulaKind::TwoCnf;
	if (horn)
		return FormulaKind::Horn;
	return FormulaKind::None;
}

bool Formula::is_two_cnf() const
{
	for (const Clause &c : clauses)
		if (c.lits.size() > 2)
			return false;
	return true;
}

bool Formula::is_horn() const
{
	for (const Clause &c : clauses) {
		int pos = 0;
		for (Lit l : c.lits)
			if (!l.negated())
				++pos;
		if (pos > 1)
			return false;
	}
	return true;
}

Formula Formula::without(int id) const
{
	Formula out;
	out.n = n;
	for (const Clause &c : clauses)
		if (c.id != id)
			out.clauses.push_back(c);
	return out;
}

Formula Formula::subset(const std::vector<int> &wanted) const
{
	std::vector<char> keep;
	for (int id : wanted) {
		if (id < 0 || !find(id))
			throw std::invalid_argument("unknown clause id in subset");
		if ((size_t)id >= keep.size())
			keep.resize(id + 1, 0);
		keep[id] = 1;
	}
	Formula out;
	out.n = n;
	for (const Clause &c : clauses)
		if ((size_t)c.id < keep.size() && keep[c.id])
			out.clauses.push_back(c);
	return out;
}

std::vector<int> Formula::ids() const
{
	std::vector<int> out;
	out.reserve(clauses.size());
	for (const Clause &c : clauses)
		out.push_back(c.id);
	return out;
}

bool Formula::operator==(const Formula &o) const
{
	if (n != o.n || clauses.size() != o.clauses.size())
		return false;
	for (size_t i = 0; i < clauses.size(); ++i)
		if (!clauses[i].same_lits(o.clauses[i]))
			return false;
	return true;
}

Formula make_formula(const std::vector<std::vector<Lit>> &raw, int n_hint,
                     std::vector<int> *dup_positions, std::vector<int> *position_to_id)
{
	std::vector<Clause> canon;
	canon.reserve(raw.size());
	int n = n_hint;
	for (size_t pos = 0; pos < raw.size(); ++pos) {
		std::vector<Lit> lits = raw[pos];
		if (lits.empty())
			throw std::invalid_argument("empty clause");
		if (!canonicalize_clause(lits))
			throw std::invalid_argument("tautological clause");
		for (Lit l : lits)
			n = std::max(n, l.var());
		Clause c;
		c.lits = std::move(lits);
		c.id = (int)pos; // original position, remapped below
		canon.push_back(std::move(c));
	}
	std::vector<int> order(canon.size());
	for (size_t i = 0; i < order.size(); ++i)
		order[i] = (int)i;
	std::stable_sort(order.begin(), order.end(),
	                 [&](int a, int b) { return clause_less(canon[a], canon[b]); });

	Formula f;
	f.n = n;
	std::vector<int> pos_to_id(canon.size(), -1);
	for (int idx : order) {
		if (!f.clauses.empty() && f.clauses.back().same_lits(canon[idx])) {
			if (dup_positions)
				dup_positions->push_back(idx);
			pos_to_id[idx] = f.clauses.back().id;
			continue;
		}
		Clause c = canon[idx];
		c.id = (int)f.clauses.size();
		pos_to_id[idx] = c.id;
		f.clauses.push_back(std::move(c));
	}
	if (position_to_id)
		*position_to_id = pos_to_id;
	return f;
}

int WeightedFormula::weight_of(int clause_id) const
{
	for (size_t i = 0; i < base.clauses.size(); ++i)
		if (base.clauses[i].id == clause_id)
			return weight[i];
	throw std::invalid_argument("unknown clause id");
}

WeightedFormula eliminate_units(const Formula &f)
{
	WeightedFormula wf;
	wf.base.n = f.n;
	int next_id = 0;
	for (const Clause &c : f.clauses)
		next_id = std::max(next_id, c.id + 1);
	int fresh = f.n;
	for (const Clause &c : f.clauses) {
		if (c.binary()) {
			wf.base.clauses.push_back(c);
			wf.weight.push_back(2);
			continue;
		}
		// unit l -> { l v w, l v ~w } over a fresh variable, half weight each
		++fresh;
		Lit l = c.lits[0];
		for (int sign = 0; sign < 2; ++sign) {
			Clause half;
			half.lits = {l, Lit::make(fresh, sign == 1)};
			canonicalize_clause(half.lits);
			half.id = next_id++;
			wf.origin.emplace(half.id, l);
			wf.base.clauses.push_back(std::move(half));
			wf.weight.push_back(1);
		}
	}
	wf.base.n = fresh;
	return wf;
}

int subset_size_half_units(const WeightedFormula &wf, const std::vector<int> &ids)
{
	int total = 0;
	for (int id : ids)
		total += wf.weight_of(id);
	return total;
}

} // namespace redu
