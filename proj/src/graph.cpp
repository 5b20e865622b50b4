#include "redu/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace redu {

namespace {

void add_clause_edges(ImplicationGraph &g, const Clause &c, int weight)
{
	Lit a = c.lits[0], b = c.lits[1];
	g.adj[(~a).code()].push_back({b.code(), c.id, weight});
	g.adj[(~b).code()].push_back({a.code(), c.id, weight});
	g.radj[b.code()].push_back({(~a).code(), c.id, weight});
	g.radj[a.code()].push_back({(~b).code(), c.id, weight});
}

void sort_edges(ImplicationGraph &g)
{
	auto less = [](const Edge &x, const Edge &y) {
		return x.to != y.to ? x.to < y.to : x.clause_id < y.clause_id;
	};
	for (auto &v : g.adj)
		std::sort(v.begin(), v.end(), less);
	for (auto &v : g.radj)
		std::sort(v.begin(), v.end(), less);
}

} // namespace

ImplicationGraph ImplicationGraph::build(const WeightedFormula &wf)
{
	ImplicationGraph g;
	g.n = wf.base.n;
	g.adj.resize(2 * g.n);
	g.radj.resize(2 * g.n);
	for (size_t i = 0; i < wf.base.clauses.size(); ++i)
		add_clause_edges(g, wf.base.clauses[i], wf.weight[i]);
	sort_edges(g);
	return g;
}

ImplicationGraph ImplicationGraph::build(const Formula &f)
{
	ImplicationGraph g;
	g.n = f.n;
	g.adj.resize(2 * g.n);
	g.radj.resize(2 * g.n);
	for (const Clause &c : f.clauses) {
		if (!c.binary())
			throw std::invalid_argument("implication graph needs a binary-only formula");
		add_clause_edges(g, c, 2);
	}
	sort_edges(g);
	return g;
}

std::vector<Lit> up_closure(const ImplicationGraph &g, Lit start)
{
	std::vector<char> seen(g.nodes(), 0);
	std::deque<int> q{start.code()};
	seen[start.code()] = 1;
	while (!q.empty()) {
		int u = q.front();
		q.pop_front();
		for (const Edge &e : g.adj[u])
			if (!seen[e.to]) {
				seen[e.to] = 1;
				q.push_back(e.to);
			}
	}
	std::vector<Lit> out;
	for (int c = 0; c < g.nodes(); ++c)
		if (seen[c])
			out.push_back(Lit::from_code(c));
	return out;
}

std::optional<ContradictionWitness> up_bottom(const ImplicationGraph &g, Lit start)
{
	const int N = g.nodes();
	std::vector<int> parent(N, -1), via(N, -1), depth(N, -1);
	std::vector<int> frontier{start.code()};
	depth[start.code()] = 0;
	int clash = -1; // literal code of the later-discovered polarity
	int d = 0;
	// check the degenerate case: nothing to do, start alone is no pair
	while (!frontier.empty() && clash < 0) {
		std::vector<int> next;
		for (int u : frontier)
			for (const Edge &e : g.adj[u]) {
				if (depth[e.to] >= 0)
					continue;
				depth[e.to] = d + 1;
				parent[e.to] = u;
				via[e.to] = e.clause_id;
				next.push_back(e.to);
			}
		// smallest variable clashing at this depth
		for (int t : next)
			if (depth[t ^ 1] >= 0 && (clash < 0 || t / 2 < clash / 2))
				clash = t;
		frontier = std::move(next);
		++d;
	}
	if (clash < 0)
		return std::nullopt;

	auto path_to = [&](int t) {
		std::vector<int> nodes, edges;
		for (int u = t; u != -1; u = parent[u]) {
			nodes.push_back(u);
			if (parent[u] != -1)
				edges.push_back(via[u]);
		}
		std::reverse(nodes.begin(), nodes.end());
		std::reverse(edges.begin(), edges.end());
		return std::make_pair(nodes, edges);
	};
	auto [na, ea] = path_to(clash ^ 1); // earlier (or equal) polarity
	auto [nb, eb] = path_to(clash);     // later polarity
	// last common literal of the two parent paths
	size_t k = 0;
	while (k + 1 < na.size() && k + 1 < nb.size() && na[k + 1] == nb[k + 1])
		++k;
	// walk: start => l3 (shared), l3 => clash (b suffix), clash => ~l3 (skew of a suffix)
	ContradictionWitness w;
	for (size_t i = 0; i <= k; ++i) {
		w.path.push_back(Lit::from_code(nb[i]));
		if (i < k)
			w.clause_ids.push_back(eb[i]);
	}
	for (size_t i = k; i + 1 < nb.size(); ++i) {
		w.path.push_back(Lit::from_code(nb[i + 1]));
		w.clause_ids.push_back(eb[i]);
	}
	for (size_t i = na.size(); i-- > k + 1;) {
		w.path.push_back(Lit::from_code(na[i - 1] ^ 1));
		w.clause_ids.push_back(ea[i - 1]);
	}
	w.clash_var = clash / 2 + 1;
	return w;
}

namespace {

// Iterative Tarjan SCC over literal nodes.
std::vector<int> tarjan_scc(const ImplicationGraph &g, int &scc_count)
{
	const int N = g.nodes();
	std::vector<int> comp(N, -1), low(N), num(N, -1), stk;
	std::vector<char> on(N, 0);
	int counter = 0;
	scc_count = 0;
	struct Frame {
		int v;
		size_t ei;
	};
	for (int s = 0; s < N; ++s) {
		if (num[s] >= 0)
			continue;
		std::vector<Frame> call{{s, 0}};
		num[s] = low[s] = counter++;
		stk.push_back(s);
		on[s] = 1;
		while (!call.empty()) {
			Frame &f = call.back();
			if (f.ei < g.adj[f.v].size()) {
				int w = g.adj[f.v][f.ei++].to;
				if (num[w] < 0) {
					num[w] = low[w] = counter++;
					stk.push_back(w);
					on[w] = 1;
					call.push_back({w, 0});
				} else if (on[w]) {
					low[f.v] = std::min(low[f.v], num[w]);
				}
			} else {
				if (low[f.v] == num[f.v]) {
					while (true) {
						int w = stk.back();
						stk.pop_back();
						on[w] = 0;
						comp[w] = scc_count;
						if (w == f.v)
							break;
					}
					++scc_count;
				}
				int v = f.v;
				call.pop_back();
				if (!call.empty())
					low[call.back().v] = std::min(low[call.back().v], low[v]);
			}
		}
	}
	return comp;
}

// A directed cycle inside an SCC known to contain no complementary pair:
// shortest path from u back to u via any predecessor.
bool cycle_in_component(const ImplicationGraph &g, const std::vector<int> &comp, int cid,
                        int u, std::vector<Lit> &nodes, std::vector<int> &edges)
{
	std::vector<int> parent(g.nodes(), -2), via(g.nodes(), -1);
	std::deque<int> q{u};
	parent[u] = -1;
	while (!q.empty()) {
		int v = q.front();
		q.pop_front();
		for (const Edge &e : g.adj[v]) {
			if (comp[e.to] != cid)
				continue;
			if (e.to == u) {
				// close the cycle
				std::vector<int> ns, es;
				es.push_back(e.clause_id);
				for (int w = v; w != -1; w = parent[w]) {
					ns.push_back(w);
					if (parent[w] != -1)
						es.push_back(via[w]);
				}
				std::reverse(ns.begin(), ns.end());
				std::reverse(es.begin(), es.end());
				for (int c : ns)
					nodes.push_back(Lit::from_code(c));
				edges = es;
				return true;
			}
			if (parent[e.to] == -2) {
				parent[e.to] = v;
				via[e.to] = e.clause_id;
				q.push_back(e.to);
			}
		}
	}
	return false;
}

// Bounded DFS for a complement-avoiding simple cycle inside one SCC.
// Returns 1 found, 0 none, -1 budget exhausted.
int bounded_cycle_search(const ImplicationGraph &g, const std::vector<int> &comp, int cid,
                         const std::vector<int> &members, long long &budget,
                         std::vector<Lit> &nodes, std::vector<int> &edges)
{
	std::vector<char> blocked(g.nodes(), 0);
	std::vector<int> path, path_edges;
	for (int start : members) {
		// only consider cycles whose smallest literal is `start`
		struct Frame {
			int v;
			size_t ei;
		};
		std::vector<Frame> stack{{start, 0}};
		blocked[start] = 1;
		blocked[start ^ 1] = 1;
		path = {start};
		path_edges.clear();
		while (!stack.empty()) {
			if (--budget < 0)
				return -1;
			Frame &f = stack.back();
			if (f.ei < g.adj[f.v].size()) {
				const Edge &e = g.adj[f.v][f.ei++];
				int w = e.to;
				if (comp[w] != cid || w < start)
					continue;
				if (w == start) {
					path_edges.push_back(e.clause_id);
					for (int c : path)
						nodes.push_back(Lit::from_code(c));
					edges = path_edges;
					return 1;
				}
				if (blocked[w])
					continue;
				blocked[w] = 1;
				blocked[w ^ 1] = 1;
				path.push_back(w);
				path_edges.push_back(e.clause_id);
				stack.push_back({w, 0});
			} else {
				blocked[f.v] = 0;
				blocked[f.v ^ 1] = 0;
				stack.pop_back();
				path.pop_back();
				if (!path_edges.empty())
					path_edges.pop_back();
			}
		}
		blocked[start] = 0;
		blocked[start ^ 1] = 0;
	}
	return 0;
}

} // namespace

Cyclicity cyclicity(const ImplicationGraph &g, long long search_budget)
{
	Cyclicity out;
	int nscc = 0;
	std::vector<int> comp = tarjan_scc(g, nscc);
	std::vector<int> size(nscc, 0);
	for (int v = 0; v < g.nodes(); ++v)
		++size[comp[v]];
	std::vector<std::vector<int>> members(nscc);
	for (int v = 0; v < g.nodes(); ++v)
		if (size[comp[v]] >= 2)
			members[comp[v]].push_back(v);
	bool unknown = false;
	for (int c = 0; c < nscc; ++c) {
		if (size[c] < 2)
			continue;
		bool has_pair = false;
		for (int v : members[c])
			if (!(v & 1) && comp[v ^ 1] == c) {
				has_pair = true;
				break;
			}
		if (!has_pair) {
			// any cycle in a complement-free SCC is a clause-cycle
			out.kind = CyclicityKind::Cyclic;
			cycle_in_component(g, comp, c, members[c][0], out.witness_cycle,
			                   out.witness_clause_ids);
			return out;
		}
		int r = bounded_cycle_search(g, comp, c, members[c], search_budget,
		                             out.witness_cycle, out.witness_clause_ids);
		if (r == 1) {
			out.kind = CyclicityKind::Cyclic;
			out.resolved_by_search = true;
			return out;
		}
		if (r == -1)
			unknown = true;
		else
			out.resolved_by_search = true;
	}
	out.kind = unknown ? CyclicityKind::Unknown : CyclicityKind::Acyclic;
	if (unknown) {
		out.witness_cycle.clear();
		out.witness_clause_ids.clear();
	}
	return out;
}

namespace {

// Reachability from one source, skipping edges whose clause id is excluded.
void reach_from(const ImplicationGraph &g, int src, const std::vector<char> &excluded_clause,
                std::vector<char> &seen)
{
	std::deque<int> q{src};
	seen[src] = 1;
	while (!q.empty()) {
		int u = q.front();
		q.pop_front();
		for (const Edge &e : g.adj[u]) {
			if ((size_t)e.clause_id < excluded_clause.size() && excluded_clause[e.clause_id])
				continue;
			if (!seen[e.to]) {
				seen[e.to] = 1;
				q.push_back(e.to);
			}
		}
	}
}

} // namespace

LiteralSets literal_sets(const ImplicationGraph &g, Lit l)
{
	LiteralSets out;
	int max_id = 0;
	for (const auto &v : g.adj)
		for (const Edge &e : v)
			max_id = std::max(max_id, e.clause_id);
	std::vector<char> in_d(max_id + 1, 0);
	for (const Edge &e : g.adj[l.code()]) {
		out.C.push_back(Lit::from_code(e.to));
		out.D.push_back(e.clause_id);
		in_d[e.clause_id] = 1;
	}
	std::sort(out.C.begin(), out.C.end());
	out.C.erase(std::unique(out.C.begin(), out.C.end()), out.C.end());
	std::sort(out.D.begin(), out.D.end());
	out.D.erase(std::unique(out.D.begin(), out.D.end()), out.D.end());

	// per-seed reachability in R = graph minus D clauses
	std::vector<std::vector<char>> reach(out.C.size());
	for (size_t i = 0; i < out.C.size(); ++i) {
		reach[i].assign(g.nodes(), 0);
		reach_from(g, out.C[i].code(), in_d, reach[i]);
	}
	std::vector<char> in_s(out.C.size(), 0);
	for (size_t i = 0; i < out.C.size(); ++i) {
		// S: the closure of the seed in R contains a complementary pair
		for (int v = 0; v < g.nodes(); v += 2)
			if (reach[i][v] && reach[i][v + 1]) {
				in_s[i] = 1;
				out.S.push_back(out.C[i]);
				break;
			}
	}
	for (size_t i = 0; i < out.C.size(); ++i) {
		bool dominated = false;
		for (size_t j = 0; j < out.C.size() && !dominated; ++j)
			if (j != i && reach[j][out.C[i].code()])
				dominated = true;
		if (!dominated)
			out.M.push_back(out.C[i]);
	}
	for (size_t i = 0; i < out.C.size(); ++i) {
		if (in_s[i])
			continue;
		for (size_t j = 0; j < out.C.size(); ++j) {
			if (in_s[j])
				continue;
			if (reach[i][(~out.C[j]).code()])
				out.P.emplace_back(out.C[i], out.C[j]);
		}
	}

	// CC: mutual reachability with l over the full graph
	std::vector<char> fwd(g.nodes(), 0), excl; // no exclusions
	excl.assign(1, 0);
	reach_from(g, l.code(), excl, fwd);
	std::vector<char> bwd(g.nodes(), 0);
	{
		std::deque<int> q{l.code()};
		bwd[l.code()] = 1;
		while (!q.empty()) {
			int u = q.front();
			q.pop_front();
			for (const Edge &e : g.radj[u])
				if (!bwd[e.to]) {
					bwd[e.to] = 1;
					q.push_back(e.to);
				}
		}
	}
	std::vector<char> in_cc(g.nodes(), 0);
	for (int v = 0; v < g.nodes(); ++v)
		if (fwd[v] && bwd[v]) {
			in_cc[v] = 1;
			out.CC.push_back(Lit::from_code(v));
		}
	std::vector<char> in_jc(g.nodes(), 0);
	for (Lit c : out.CC)
		for (const Edge &e : g.adj[c.code()])
			if (!in_cc[e.to] && !in_jc[e.to]) {
				in_jc[e.to] = 1;
				out.JC.push_back(Lit::from_code(e.to));
			}
	std::sort(out.JC.begin(), out.JC.end());
	std::vector<char> in_lc(g.nodes(), 0);
	for (Lit j : out.JC) {
		std::vector<char> seen(g.nodes(), 0);
		reach_from(g, j.code(), excl, seen);
		for (int v = 0; v < g.nodes(); ++v)
			if (seen[v])
				in_lc[v] = 1;
	}
	for (int v = 0; v < g.nodes(); ++v)
		if (in_lc[v])
			out.LC.push_back(Lit::from_code(v));
	return out;
}

std::string graph_dot(const ImplicationGraph &g)
{
	std::ostringstream out;
	auto name = [](int code) {
		Lit l = Lit::from_code(code);
		return std::string(l.negated() ? "n" : "p") + std::to_string(l.var());
	};
	auto label = [](int code) {
		Lit l = Lit::from_code(code);
		return std::string(l.negated() ? "-" : "") + std::to_string(l.var());
	};
	out << "digraph implication {\n";
	std::vector<char> used(g.nodes(), 0);
	for (int v = 0; v < g.nodes(); ++v)
		if (!g.adj[v].empty() || !g.radj[v].empty())
			used[v] = 1;
	for (int v = 0; v < g.nodes(); ++v)
		if (used[v])
			out << "  " << name(v) << " [label=\"" << label(v) << "\"];\n";
	for (int v = 0; v < g.nodes(); ++v)
		for (const Edge &e : g.adj[v])
			out << "  " << name(v) << " -> " << name(e.to) << " [label=\"c"
			    << e.clause_id + 1 << "\"];\n";
	out << "}\n";
	return out.str();
}

} // namespace redu
