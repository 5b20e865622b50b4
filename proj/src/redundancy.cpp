#include "redu/redundancy.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "redu/graph.hpp"

namespace redu {

ClauseVerdict RedundancyReport::verdict(int id) const
{
	for (size_t i = 0; i < clause_ids.size(); ++i)
		if (clause_ids[i] == id)
			return verdicts[i];
	throw std::invalid_argument("unknown clause id");
}

std::vector<int> RedundancyReport::redundant_ids() const
{
	std::vector<int> out;
	for (size_t i = 0; i < clause_ids.size(); ++i)
		if (verdicts[i] == ClauseVerdict::Redundant)
			out.push_back(clause_ids[i]);
	return out;
}

bool is_clause_redundant(const Formula &f, int clause_id)
{
	const Clause *c = f.find(clause_id);
	if (!c)
		throw std::invalid_argument("unknown clause id");
	return entails_clause(f.without(clause_id), *c);
}

static void sort_report(RedundancyReport &r)
{
	std::vector<size_t> order(r.clause_ids.size());
	for (size_t i = 0; i < order.size(); ++i)
		order[i] = i;
	std::sort(order.begin(), order.end(),
	          [&](size_t a, size_t b) { return r.clause_ids[a] < r.clause_ids[b]; });
	std::vector<int> ids;
	std::vector<ClauseVerdict> vs;
	for (size_t i : order) {
		ids.push_back(r.clause_ids[i]);
		vs.push_back(r.verdicts[i]);
	}
	r.clause_ids = std::move(ids);
	r.verdicts = std::move(vs);
	r.redundant = false;
	for (ClauseVerdict v : r.verdicts)
		if (v == ClauseVerdict::Redundant)
			r.redundant = true;
}

RedundancyReport check_inconsistent(const Formula &f)
{
	RedundancyReport r;
	r.regime = Regime::Inconsistent;
	// in an inconsistent formula a clause is redundant exactly when its
	// removal keeps the formula inconsistent
	for (const Clause &c : f.clauses) {
		r.clause_ids.push_back(c.id);
		r.verdicts.push_back(is_consistent(f.without(c.id)) ? ClauseVerdict::Irredundant
		                                                    : ClauseVerdict::Redundant);
	}
	sort_report(r);
	return r;
}

RedundancyReport check_implied_literal_clauses(const Formula &f, const Decomposition &dec)
{
	RedundancyReport r;
	r.regime = Regime::ConsistentImplying;
	for (int id : dec.touched_ids) {
		r.clause_ids.push_back(id);
		r.verdicts.push_back(is_clause_redundant(f, id) ? ClauseVerdict::Redundant
		                                                : ClauseVerdict::Irredundant);
	}
	sort_report(r);
	return r;
}

RedundancyReport check_no_implied(const Formula &core)
{
	ImplicationGraph g = ImplicationGraph::build(core);
	const int N = g.nodes();
	RedundancyReport r;
	r.regime = Regime::ConsistentNoImplied;
	int max_id = -1;
	for (const Clause &c : core.clauses)
		max_id = std::max(max_id, c.id);
	std::vector<char> redundant(max_id + 1, 0);

	// epoch-stamped labels so the per-literal BFS reuses its arrays
	const int TWO = -2;
	std::vector<int> label(N, 0), stamp(N, -1);
	std::vector<int> queue;
	for (int l = 0; l < N; ++l) {
		const auto &out_edges = g.adj[l];
		if (out_edges.size() < 2)
			continue; // a lone successor can never be re-reached from another seed
		// multi-seed BFS over the graph minus node l; label = seed or TWO,
		// TWO spreads and marks every clause ~l v t with label[t] == TWO
		queue.clear();
		for (const Edge &e : out_edges) {
			if (stamp[e.to] == l) {
				// same target via two distinct clauses cannot happen in a
				// canonical formula; seeds are distinct
				continue;
			}
			stamp[e.to] = l;
			label[e.to] = e.to;
			queue.push_back(e.to);
		}
		size_t head = 0;
		while (head < queue.size()) {
			int u = queue[head++];
			int lu = label[u];
			for (const Edge &e : g.adj[u]) {
				int t = e.to;
				if (t == l)
					continue;
				if (stamp[t] != l) {
					stamp[t] = l;
					label[t] = lu;
					queue.push_back(t);
				} else if (label[t] != TWO && label[t] != lu) {
					label[t] = TWO;
					queue.push_back(t);
				} else if (lu == TWO && label[t] != TWO) {
					label[t] = TWO;
					queue.push_back(t);
				}
			}
		}
		for (const Edge &e : out_edges)
			if (stamp[e.to] == l && label[e.to] == TWO)
				redundant[e.clause_id] = 1;
	}
	for (const Clause &c : core.clauses) {
		r.clause_ids.push_back(c.id);
		r.verdicts.push_back(redundant[c.id] ? ClauseVerdict::Redundant
		                                     : ClauseVerdict::Irredundant);
	}
	sort_report(r);
	return r;
}

RedundancyReport check(const Formula &f)
{
	Classification cl = classify(f);
	if (cl.regime == Regime::Inconsistent)
		return check_inconsistent(f);
	Decomposition dec = decompose(f);
	RedundancyReport touched = check_implied_literal_clauses(f, dec);
	RedundancyReport core = check_no_implied(dec.core);
	RedundancyReport r;
	r.regime = cl.regime;
	r.clause_ids = touched.clause_ids;
	r.verdicts = touched.verdicts;
	r.clause_ids.insert(r.clause_ids.end(), core.clause_ids.begin(), core.clause_ids.end());
	r.verdicts.insert(r.verdicts.end(), core.verdicts.begin(), core.verdicts.end());
	sort_report(r);
	return r;
}

std::vector<int> prune_greedy(const Formula &f)
{
	Formula work = f;
	for (int id : f.ids())
		if (is_clause_redundant(work, id))
			work = work.without(id);
	return work.ids();
}

} // namespace redu
