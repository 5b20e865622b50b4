#include "redu/entail.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "redu/graph.hpp"

namespace redu {

UpResult up_propagate(const Formula &f, const std::vector<Lit> &assumptions)
{
	// occurrence lists: clause positions per literal
	std::vector<std::vector<int>> occ(2 * f.n);
	for (size_t i = 0; i < f.clauses.size(); ++i)
		for (Lit l : f.clauses[i].lits)
			occ[l.code()].push_back((int)i);

	std::vector<char> have(2 * f.n, 0);
	std::deque<int> q;
	auto assert_lit = [&](Lit l) {
		if (!have[l.code()]) {
			have[l.code()] = 1;
			q.push_back(l.code());
		}
	};
	for (Lit a : assumptions)
		assert_lit(a);
	for (const Clause &c : f.clauses)
		if (c.unary())
			assert_lit(c.lits[0]);

	UpResult res;
	while (!q.empty()) {
		Lit l = Lit::from_code(q.front());
		q.pop_front();
		if (have[(~l).code()])
			res.bottom = true;
		for (int ci : occ[(~l).code()]) {
			const Clause &c = f.clauses[ci];
			if (!c.binary())
				continue;
			Lit other = c.lits[0] == ~l ? c.lits[1] : c.lits[0];
			assert_lit(other);
		}
	}
	for (int code = 0; code < 2 * f.n; ++code)
		if (have[code])
			res.derived.push_back(Lit::from_code(code));
	return res;
}

bool is_consistent(const Formula &f)
{
	// linear 2SAT: unsatisfiable iff some variable shares an SCC with its
	// complement in the graph of the unit-eliminated form
	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);
	// reuse cyclicity's SCC machinery indirectly would hide the pair test;
	// do a direct Tarjan via up_propagate-free approach: iterative Kosaraju
	const int N = g.nodes();
	std::vector<int> order;
	order.reserve(N);
	{
		std::vector<char> seen(N, 0);
		struct Frame {
			int v;
			size_t ei;
		};
		for (int s = 0; s < N; ++s) {
			if (seen[s])
				continue;
			std::vector<Frame> st{{s, 0}};
			seen[s] = 1;
			while (!st.empty()) {
				Frame &fr = st.back();
				if (fr.ei < g.adj[fr.v].size()) {
					int w = g.adj[fr.v][fr.ei++].to;
					if (!seen[w]) {
						seen[w] = 1;
						st.push_back({w, 0});
					}
				} else {
					order.push_back(fr.v);
					st.pop_back();
				}
			}
		}
	}
	std::vector<int> comp(N, -1);
	int cid = 0;
	for (int i = N; i-- > 0;) {
		int s = order[i];
		if (comp[s] >= 0)
			continue;
		std::deque<int> q{s};
		comp[s] = cid;
		while (!q.empty()) {
			int u = q.front();
			q.pop_front();
			for (const Edge &e : g.radj[u])
				if (comp[e.to] < 0) {
					comp[e.to] = cid;
					q.push_back(e.to);
				}
		}
		++cid;
	}
	for (int v = 0; v < N; v += 2)
		if (comp[v] == comp[v + 1])
			return false;
	return true;
}

bool entails_literal(const Formula &f, Lit l)
{
	UpResult r = up_propagate(f, {~l});
	if (r.bottom)
		return true;
	return !is_consistent(f);
}

bool entails_clause(const Formula &f, const Clause &c)
{
	if (c.lits.empty() || c.lits.size() > 2)
		throw std::invalid_argument("entails_clause needs a unary or binary clause");
	Lit l1 = c.lits[0];
	Lit l2 = c.lits.size() == 2 ? c.lits[1] : c.lits[0];
	UpResult a = up_propagate(f, {~l1});
	if (a.bottom)
		return true;
	if (c.lits.size() == 2) {
		// UP from ~l1 may derive l2 directly
		for (Lit d : a.derived)
			if (d == l2)
				return true;
		UpResult b = up_propagate(f, {~l2});
		if (b.bottom)
			return true;
	}
	return !is_consistent(f);
}

std::vector<Lit> implied_literals(const Formula &f)
{
	std::vector<Lit> out;
	for (int v = 1; v <= f.n; ++v)
		for (int s = 0; s < 2; ++s) {
			Lit l = Lit::make(v, s == 1);
			if (up_propagate(f, {~l}).bottom)
				out.push_back(l);
		}
	return out;
}

Classification classify(const Formula &f)
{
	Classification c;
	if (!is_consistent(f)) {
		c.regime = Regime::Inconsistent;
		return c;
	}
	c.implied = implied_literals(f);
	c.regime = c.implied.empty() ? Regime::ConsistentNoImplied : Regime::ConsistentImplying;
	return c;
}

Decomposition decompose(const Formula &f)
{
	Classification cl = classify(f);
	if (cl.regime == Regime::Inconsistent)
		throw std::invalid_argument("decompose needs a consistent formula");
	Decomposition d;
	d.implied = cl.implied;
	std::vector<char> implied_lit(2 * f.n, 0);
	for (Lit l : cl.implied)
		implied_lit[l.code()] = 1;
	for (const Clause &c : f.clauses) {
		bool touched = false;
		for (Lit l : c.lits)
			if (implied_lit[l.code()] || implied_lit[(~l).code()])
				touched = true;
		(touched ? d.touched_ids : d.core_ids).push_back(c.id);
	}
	d.core = f.subset(d.core_ids);
	return d;
}

} // namespace redu
