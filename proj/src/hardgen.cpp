#include "redu/hardgen.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace redu {

// ---------------------------------------------------------------------------
// brute-force source answers

namespace {

std::vector<std::vector<int>> adjacency(const Digraph &g)
{
	std::vector<std::vector<int>> adj(g.n);
	for (auto [u, v] : g.edges)
		adj[u].push_back(v);
	return adj;
}

bool reach_avoiding(const std::vector<std::vector<int>> &adj, int from, int to,
                    const std::vector<char> &blocked)
{
	if (from == to)
		return true;
	std::vector<char> seen(adj.size(), 0);
	std::deque<int> q{from};
	seen[from] = 1;
	while (!q.empty()) {
		int u = q.front();
		q.pop_front();
		for (int v : adj[u]) {
			if (blocked[v] || seen[v])
				continue;
			if (v == to)
				return true;
			seen[v] = 1;
			q.push_back(v);
		}
	}
	return false;
}

// enumerate simple paths from `cur` to `to`; call out(path) for each
void simple_paths(const std::vector<std::vector<int>> &adj, int cur, int to,
                  std::vector<char> &used, std::vector<int> &path,
                  const std::function<bool(const std::vector<int> &)> &out, bool &stop)
{
	if (stop)
		return;
	if (cur == to) {
		stop = out(path);
		return;
	}
	for (int v : adj[cur]) {
		if (used[v])
			continue;
		used[v] = 1;
		path.push_back(v);
		simple_paths(adj, v, to, used, path, out, stop);
		path.pop_back();
		used[v] = 0;
		if (stop)
			return;
	}
}

} // namespace

bool reachable(const Digraph &g, int from, int to)
{
	std::vector<char> blocked(g.n, 0);
	return reach_avoiding(adjacency(g), from, to, blocked);
}

bool strongly_connected(const Digraph &g)
{
	for (int v = 1; v < g.n; ++v)
		if (!reachable(g, 0, v) || !reachable(g, v, 0))
			return false;
	return true;
}

bool bf_simple_cycle_through(const Digraph &g, int x, int y)
{
	auto adj = adjacency(g);
	std::vector<char> used(g.n, 0);
	std::vector<int> path{x};
	used[x] = 1;
	bool stop = false;
	// simple path x => y, then a return path y => x avoiding its interior
	simple_paths(adj, x, y, used, path, [&](const std::vector<int> &p) {
		std::vector<char> blocked(g.n, 0);
		for (int v : p)
			blocked[v] = 1;
		blocked[x] = 0; // may close the cycle at x
		return reach_avoiding(adj, y, x, blocked);
	}, stop);
	return stop;
}

bool bf_simple_path_through_edge(const Digraph &g, int x, int y, int edge_index)
{
	auto [a, b] = g.edges[edge_index];
	auto adj = adjacency(g);
	std::vector<char> used(g.n, 0);
	std::vector<int> path{x};
	used[x] = 1;
	bool stop = false;
	// simple path x => a, then b => y avoiding everything used so far
	simple_paths(adj, x, a, used, path, [&](const std::vector<int> &p) {
		std::vector<char> blocked(g.n, 0);
		for (int v : p)
			blocked[v] = 1;
		if (blocked[b])
			return false;
		return b == y || reach_avoiding(adj, b, y, blocked);
	}, stop);
	return stop;
}

bool bf_disjoint_paths(const Digraph &g, int s1, int t1, int s2, int t2)
{
	auto adj = adjacency(g);
	std::vector<char> used(g.n, 0);
	std::vector<int> path{s1};
	used[s1] = 1;
	bool stop = false;
	simple_paths(adj, s1, t1, used, path, [&](const std::vector<int> &p) {
		std::vector<char> blocked(g.n, 0);
		for (int v : p)
			blocked[v] = 1;
		if (blocked[s2] || blocked[t2])
			return false;
		std::vector<char> used2(g.n, 0);
		for (int v : p)
			used2[v] = 1;
		used2[s2] = 1;
		std::vector<int> path2{s2};
		bool ok = false;
		bool stop2 = false;
		simple_paths(adj, s2, t2, used2, path2, [&](const std::vector<int> &) {
			ok = true;
			return true;
		}, stop2);
		return ok;
	}, stop);
	return stop;
}

int bf_min_equivalent_subgraph(const Digraph &g)
{
	if (!strongly_connected(g))
		throw std::invalid_argument("needs a strongly connected digraph");
	const int m = (int)g.edges.size();
	int best = m;
	std::vector<char> keep(m, 1);
	auto strong_with = [&](const std::vector<char> &mask) {
		Digraph h;
		h.n = g.n;
		for (int i = 0; i < m; ++i)
			if (mask[i])
				h.edges.push_back(g.edges[i]);
		return strongly_connected(h);
	};
	std::function<void(int, int)> rec = [&](int i, int kept) {
		if (kept >= best)
			return;
		if (i == m) {
			if (strong_with(keep))
				best = kept;
			return;
		}
		keep[i] = 0;
		if (strong_with(keep)) // undecided edges still count: monotone prune
			rec(i + 1, kept);
		keep[i] = 1;
		rec(i + 1, kept + 1);
	};
	rec(0, 0);
	return best;
}

int bf_min_vertex_cover(const UGraph &g)
{
	int best = g.n;
	for (int mask = 0; mask < (1 << g.n); ++mask) {
		int size = __builtin_popcount((unsigned)mask);
		if (size >= best)
			continue;
		bool covers = true;
		for (auto [u, v] : g.edges)
			if (!((mask >> u) & 1) && !((mask >> v) & 1)) {
				covers = false;
				break;
			}
		if (covers)
			best = size;
	}
	return best;
}

bool bf_sat3(const Sat3Instance &inst)
{
	for (int mask = 0; mask < (1 << inst.nvars); ++mask) {
		bool ok = true;
		for (const Sat3Clause &c : inst.clauses) {
			bool sat = false;
			for (int l : c.lits) {
				int v = std::abs(l) - 1;
				bool val = (mask >> v) & 1;
				if ((l > 0) == val)
					sat = true;
			}
			if (!sat) {
				ok = false;
				break;
			}
		}
		if (ok)
			return true;
	}
	return inst.clauses.empty();
}

// ---------------------------------------------------------------------------
// formula builders

namespace {

struct Builder {
	std::vector<std::vector<Lit>> raw;
	int nvars = 0;
	int focus_pos = -1;

	int fresh() { return ++nvars; }
	Lit pos(int v) { return Lit::make(v, false); }
	Lit neg(int v) { return Lit::make(v, true); }

	// clause representing the edge u -> v (literals, not node indices)
	int edge(Lit u, Lit v)
	{
		raw.push_back({~u, v});
		return (int)raw.size() - 1;
	}
	void pinned_edge(Lit u, Lit v)
	{
		int w = fresh();
		edge(u, pos(w));
		edge(pos(w), v);
	}
	void unit(Lit l) { raw.push_back({l}); }

	Formula finish(int &focus_id)
	{
		std::vector<int> pos_to_id;
		Formula f = make_formula(raw, nvars, nullptr, &pos_to_id);
		focus_id = focus_pos >= 0 ? pos_to_id[focus_pos] : -1;
		return f;
	}
};

} // namespace

std::string HardInstance::sidecar_json()
{
	nlohmann::ordered_json j;
	j["reduction"] = reduction;
	if (focus_id >= 0)
		j["focus"] = focus_id + 1;
	else
		j["focus"] = nullptr;
	if (k_half_units >= 0)
		j["k"] = std::to_string(k_half_units) + "/2";
	else
		j["k"] = nullptr;
	if (truth_value >= 0)
		j["truth"] = truth_value;
	else
		j["truth"] = truth;
	return j.dump(2) + "\n";
}

HardInstance gen_size_cyclic_implied(const Digraph &g, int x, int y)
{
	// keep only nodes co-reachable with x; x and y must survive together
	std::vector<int> keep_map(g.n, -1);
	Digraph h;
	for (int v = 0; v < g.n; ++v)
		if (reachable(g, x, v) && reachable(g, v, x))
			keep_map[v] = h.n++;
	if (keep_map[x] < 0 || keep_map[y] < 0 || x == y)
		throw std::invalid_argument("x and y must be distinct and mutually reachable");
	for (auto [u, v] : g.edges)
		if (keep_map[u] >= 0 && keep_map[v] >= 0)
			h.edges.emplace_back(keep_map[u], keep_map[v]);
	std::sort(h.edges.begin(), h.edges.end());
	h.edges.erase(std::unique(h.edges.begin(), h.edges.end()), h.edges.end());
	int hx = keep_map[x], hy = keep_map[y];

	Builder b;
	b.nvars = h.n;
	int z = b.fresh();
	for (auto [u, v] : h.edges)
		b.edge(b.pos(u + 1), b.pos(v + 1));
	b.edge(b.pos(hx + 1), b.pos(z));
	b.edge(b.pos(hy + 1), b.neg(z));

	HardInstance out;
	out.reduction = "size_cyclic_implied";
	out.formula = b.finish(out.focus_id);
	out.k_half_units = 2 * (h.n + 2);
	out.truth = bf_simple_cycle_through(h, hx, hy);
	return out;
}

HardInstance gen_size_strongly_connected(const Digraph &g)
{
	Builder b;
	b.nvars = g.n;
	for (auto [u, v] : g.edges)
		b.edge(b.pos(u + 1), b.pos(v + 1));
	HardInstance out;
	out.reduction = "size_strongly_connected";
	int dummy;
	out.formula = b.finish(dummy);
	out.truth_value = bf_min_equivalent_subgraph(g);
	out.k_half_units = 2 * out.truth_value;
	out.truth = true;
	return out;
}

HardInstance gen_presence_inconsistent(const Digraph &g, int x, int y, int edge_index)
{
	if (!reachable(g, x, y) || x == y)
		throw std::invalid_argument("needs distinct x, y with y reachable from x");
	// node split m -> (m_in, m_out) so the formula-side question tracks
	// node-simple paths
	Builder b;
	auto in = [&](int v) { return b.pos(2 * v + 1); };
	auto outl = [&](int v) { return b.pos(2 * v + 2); };
	b.nvars = 2 * g.n;
	int z = b.fresh(), w = b.fresh();
	for (int v = 0; v < g.n; ++v)
		b.edge(in(v), outl(v));
	int fpos = -1;
	for (size_t i = 0; i < g.edges.size(); ++i) {
		int pos = b.edge(outl(g.edges[i].first), in(g.edges[i].second));
		if ((int)i == edge_index)
			fpos = pos;
	}
	b.edge(outl(y), b.pos(z));
	b.edge(outl(y), b.neg(z));
	b.edge(~in(x), b.pos(w));
	b.edge(~in(x), b.neg(w));
	b.focus_pos = fpos;

	HardInstance out;
	out.reduction = "presence_inconsistent";
	out.formula = b.finish(out.focus_id);
	out.truth = bf_simple_path_through_edge(g, x, y, edge_index);
	return out;
}

HardInstance gen_presence_implied_cyclic(const Digraph &g, int s1, int t1, int s2, int t2)
{
	std::set<int> distinct{s1, t1, s2, t2};
	if (distinct.size() != 4)
		throw std::invalid_argument("endpoints must be distinct");
	if (!reachable(g, s1, t1) || !reachable(g, s2, t2))
		throw std::invalid_argument("needs t1 reachable from s1 and t2 from s2");
	// Vertex-disjoint paths s1 ~~> t1 and s2 ~~> t2 exist exactly when the
	// graph plus a bridge edge t1 -> s2 has a simple path s1 ~~> t2 through
	// the bridge (the path is s1 ~~> t1 -> s2 ~~> t2, and node-simplicity is
	// the disjointness).  That is the focused-edge question, so reuse its
	// node-split construction with the bridge as the focus edge.
	Digraph h = g;
	int bridge = -1;
	for (size_t i = 0; i < h.edges.size(); ++i)
		if (h.edges[i] == std::make_pair(t1, s2))
			bridge = (int)i;
	if (bridge < 0) {
		h.edges.emplace_back(t1, s2);
		bridge = (int)h.edges.size() - 1;
	}
	HardInstance out = gen_presence_inconsistent(h, s1, t2, bridge);
	out.reduction = "presence_implied_cyclic";
	out.truth = bf_disjoint_paths(g, s1, t1, s2, t2);
	return out;
}

HardInstance gen_presence_3sat(const Sat3Instance &inst)
{
	Builder b;
	// layout: x_i, x_i+, x_i- per variable, one node per clause, then l1, l2
	auto X = [&](int i) { return b.pos(3 * i + 1); };
	auto XP = [&](int i) { return b.pos(3 * i + 2); };
	auto XM = [&](int i) { return b.pos(3 * i + 3); };
	b.nvars = 3 * inst.nvars + (int)inst.clauses.size();
	auto C = [&](int j) { return b.pos(3 * inst.nvars + j + 1); };
	int l1 = b.fresh(), l2 = b.fresh();

	b.focus_pos = b.edge(b.pos(l1), b.pos(l2));
	for (int i = 0; i < inst.nvars; ++i) {
		b.pinned_edge(b.pos(l1), X(i));
		b.edge(X(i), XP(i));
		b.edge(X(i), XM(i));
		b.pinned_edge(XP(i), b.pos(l1));
		b.pinned_edge(XM(i), b.pos(l1));
		b.pinned_edge(b.pos(l2), XP(i));
		b.pinned_edge(b.pos(l2), XM(i));
	}
	for (size_t j = 0; j < inst.clauses.size(); ++j) {
		for (int l : inst.clauses[j].lits) {
			int i = std::abs(l) - 1;
			b.edge(l > 0 ? XP(i) : XM(i), C((int)j));
		}
		b.pinned_edge(C((int)j), b.pos(l2));
	}

	HardInstance out;
	out.reduction = "presence_3sat";
	out.formula = b.finish(out.focus_id);
	out.truth = bf_sat3(inst);
	return out;
}

HardInstance gen_horn_vertex_cover(const UGraph &g)
{
	if (g.edges.empty())
		throw std::invalid_argument("needs at least one edge");
	Builder b;
	b.nvars = g.n + (int)g.edges.size();
	auto node = [&](int v) { return b.pos(v + 1); };
	auto cov = [&](int z) { return b.pos(g.n + z + 1); };
	for (int v = 0; v < g.n; ++v)
		b.unit(node(v));
	std::vector<Lit> wide;
	for (size_t z = 0; z < g.edges.size(); ++z) {
		b.raw.push_back({~node(g.edges[z].first), cov((int)z)});
		b.raw.push_back({~node(g.edges[z].second), cov((int)z)});
		wide.push_back(~cov((int)z));
	}
	b.raw.push_back(wide);

	HardInstance out;
	out.reduction = "horn_vertex_cover";
	int dummy;
	out.formula = b.finish(dummy);
	out.truth_value = bf_min_vertex_cover(g);
	out.k_half_units = 2 * ((int)g.edges.size() + 1 + out.truth_value);
	out.truth = true;
	return out;
}

// ---------------------------------------------------------------------------
// samplers

Digraph sample_digraph(std::mt19937 &rng, int max_nodes, double edge_prob)
{
	Digraph g;
	g.n = 3 + (int)(rng() % std::max(1, max_nodes - 2));
	std::bernoulli_distribution coin(edge_prob);
	for (int u = 0; u < g.n; ++u)
		for (int v = 0; v < g.n; ++v)
			if (u != v && coin(rng))
				g.edges.emplace_back(u, v);
	return g;
}

UGraph sample_ugraph(std::mt19937 &rng, int max_nodes, double edge_prob)
{
	UGraph g;
	g.n = 2 + (int)(rng() % std::max(1, max_nodes - 1));
	std::bernoulli_distribution coin(edge_prob);
	for (int u = 0; u < g.n; ++u)
		for (int v = u + 1; v < g.n; ++v)
			if (coin(rng))
				g.edges.emplace_back(u, v);
	return g;
}

Sat3Instance sample_sat3(std::mt19937 &rng, int max_vars, int max_clauses)
{
	Sat3Instance inst;
	inst.nvars = 1 + (int)(rng() % max_vars);
	int nc = 1 + (int)(rng() % max_clauses);
	for (int j = 0; j < nc; ++j) {
		Sat3Clause c;
		int width = 1 + (int)(rng() % std::min(3, inst.nvars));
		std::vector<int> vars(inst.nvars);
		for (int i = 0; i < inst.nvars; ++i)
			vars[i] = i;
		std::shuffle(vars.begin(), vars.end(), rng);
		for (int k = 0; k < width; ++k)
			c.lits.push_back((rng() & 1) ? (vars[k] + 1) : -(vars[k] + 1));
		inst.clauses.push_back(c);
	}
	return inst;
}

} // namespace redu
