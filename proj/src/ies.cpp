#include "redu/ies.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "redu/redundancy.hpp"

namespace redu {

namespace {
constexpr int INF = std::numeric_limits<int>::max() / 4;
}

bool is_ies(const Formula &f, const std::vector<int> &subset_ids)
{
	Formula s = f.subset(subset_ids);
	if (s.m() != (int)subset_ids.size())
		return false; // unknown or repeated ids
	for (const Clause &c : f.clauses)
		if (!s.find(c.id) && !entails_clause(s, c))
			return false;
	for (const Clause &c : s.clauses)
		if (is_clause_redundant(s, c.id))
			return false;
	return true;
}

bool in_all_ies(const Formula &f, int clause_id)
{
	return !is_clause_redundant(f, clause_id);
}

bool has_unique_ies(const Formula &f)
{
	std::vector<int> keep;
	for (const Clause &c : f.clauses)
		if (!is_clause_redundant(f, c.id))
			keep.push_back(c.id);
	Formula s = f.subset(keep);
	for (const Clause &c : f.clauses)
		if (!s.find(c.id) && !entails_clause(s, c))
			return false;
	return true;
}

std::vector<int> unique_ies_acyclic(const Formula &f)
{
	// { ~l v l1 | l1 in M(l) }; both orientations of a clause agree, so one
	// membership test per clause suffices
	ImplicationGraph g = ImplicationGraph::build(f);
	std::vector<int> keep;
	std::map<int, LiteralSets> cache;
	for (const Clause &c : f.clauses) {
		Lit l = ~c.lits[0];
		Lit l1 = c.lits[1];
		auto it = cache.find(l.code());
		if (it == cache.end())
			it = cache.emplace(l.code(), literal_sets(g, l)).first;
		const LiteralSets &ls = it->second;
		if (std::find(ls.M.begin(), ls.M.end(), l1) != ls.M.end())
			keep.push_back(c.id);
	}
	std::sort(keep.begin(), keep.end());
	return keep;
}

// ---------------------------------------------------------------------------
// consistent formulas: per-implied-literal selections

namespace {

// one way to cover an implied literal: a set of original clause ids + weight
struct Option {
	std::vector<int> ids;
	int half_units = 0;
	bool operator<(const Option &o) const
	{
		if (half_units != o.half_units)
			return half_units < o.half_units;
		return ids < o.ids;
	}
};

struct ImpliedPlan {
	Lit implied;                 // the entailed literal
	std::vector<Option> options; // every valid selection (Lemma-15 style)
};

// map a wf clause id back to the original formula's clause id
int original_id(const WeightedFormula &wf, const Formula &f, int wf_id)
{
	auto it = wf.origin.find(wf_id);
	if (it == wf.origin.end())
		return wf_id;
	for (const Clause &c : f.clauses)
		if (c.unary() && c.lits[0] == it->second)
			return c.id;
	throw std::logic_error("introduced clause without a source unit");
}

// selections for one implied literal lam (l = ~lam, not on a clause cycle):
// a single D-clause whose target is in S, or a D-pair from P
std::vector<Option> singleton_options(const WeightedFormula &wf, const Formula &f,
                                      const ImplicationGraph &g, Lit lam)
{
	Lit l = ~lam;
	LiteralSets ls = literal_sets(g, l);
	std::map<int, int> target_clause; // literal code -> wf clause id
	std::map<int, int> target_weight;
	for (const Edge &e : g.adj[l.code()]) {
		target_clause[e.to] = e.clause_id;
		target_weight[e.to] = e.weight;
	}
	std::set<Option> opts;
	for (Lit s : ls.S) {
		Option o;
		o.ids = {original_id(wf, f, target_clause[s.code()])};
		o.half_units = target_weight[s.code()];
		opts.insert(o);
	}
	for (auto [a, b] : ls.P) {
		Option o;
		int ia = original_id(wf, f, target_clause[a.code()]);
		int ib = original_id(wf, f, target_clause[b.code()]);
		o.ids = {ia, ib};
		std::sort(o.ids.begin(), o.ids.end());
		o.ids.erase(std::unique(o.ids.begin(), o.ids.end()), o.ids.end());
		o.half_units = target_weight[a.code()] + target_weight[b.code()];
		opts.insert(o);
	}
	return {opts.begin(), opts.end()};
}

} // namespace

IesConstruction ies_consistent_acyclic(const Formula &f)
{
	Decomposition dec = decompose(f);
	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);

	IesConstruction out;
	std::map<int, Membership> member;
	for (const Clause &c : f.clauses)
		member[c.id] = Membership::InNone;

	// unique core
	std::vector<int> core_keep = unique_ies_acyclic(dec.core);
	int total = 0;
	for (int id : core_keep) {
		member[id] = Membership::InAll;
		total += 2;
	}
	std::vector<int> concrete = core_keep;

	for (Lit lam : dec.implied) {
		std::vector<Option> opts = singleton_options(wf, f, g, lam);
		if (opts.empty())
			throw std::logic_error("implied literal with no selection");
		Option best = *std::min_element(opts.begin(), opts.end());
		total += best.half_units;
		for (int id : best.ids)
			concrete.push_back(id);
		// a clause shared by every selection is in every I.E.S.
		std::set<int> common(opts[0].ids.begin(), opts[0].ids.end());
		for (const Option &o : opts) {
			std::set<int> keep;
			for (int id : o.ids)
				if (common.count(id))
					keep.insert(id);
			common = keep;
		}
		for (const Option &o : opts)
			for (int id : o.ids)
				if (member[id] != Membership::InAll)
					member[id] = common.count(id) ? Membership::InAll
					                              : Membership::InSome;
	}
	std::sort(concrete.begin(), concrete.end());
	concrete.erase(std::unique(concrete.begin(), concrete.end()), concrete.end());

	out.ies_ids = concrete;
	out.min_half_units = total;
	for (auto &[id, m] : member) {
		out.clause_ids.push_back(id);
		out.membership.push_back(m);
	}
	return out;
}

// ---------------------------------------------------------------------------
// acyclic inconsistent minimum

namespace {

struct DistTable {
	int N = 0;
	std::vector<std::vector<int>> d;         // weighted distances
	std::vector<std::vector<int>> par_node;  // predecessor on a shortest path
	std::vector<std::vector<int>> par_edge;  // clause id of that step

	void collect_path(int s, int t, std::set<int> &ids) const
	{
		for (int u = t; u != s; u = par_node[s][u])
			ids.insert(par_edge[s][u]);
	}
};

DistTable all_pairs(const ImplicationGraph &g)
{
	DistTable dt;
	dt.N = g.nodes();
	dt.d.assign(dt.N, std::vector<int>(dt.N, INF));
	dt.par_node.assign(dt.N, std::vector<int>(dt.N, -1));
	dt.par_edge.assign(dt.N, std::vector<int>(dt.N, -1));
	for (int s = 0; s < dt.N; ++s) {
		auto &dist = dt.d[s];
		dist[s] = 0;
		using Item = std::pair<int, int>;
		std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
		pq.push({0, s});
		while (!pq.empty()) {
			auto [du, u] = pq.top();
			pq.pop();
			if (du > dist[u])
				continue;
			for (const Edge &e : g.adj[u]) {
				int nd = du + e.weight;
				if (nd < dist[e.to]) {
					dist[e.to] = nd;
					dt.par_node[s][e.to] = u;
					dt.par_edge[s][e.to] = e.clause_id;
					pq.push({nd, e.to});
				}
			}
		}
	}
	return dt;
}

} // namespace

MinInconsistent min_inconsistent_size_acyclic(const Formula &f)
{
	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);
	DistTable dt = all_pairs(g);
	const int N = g.nodes();

	// lasso(s) = min_l d(s,l) + d(l,~l): cheapest contradiction from s
	std::vector<int> lasso(N, INF), lasso_mid(N, -1);
	for (int s = 0; s < N; ++s)
		for (int l = 0; l < N; ++l) {
			if (dt.d[s][l] >= INF || dt.d[l][l ^ 1] >= INF)
				continue;
			int w = dt.d[s][l] + dt.d[l][l ^ 1];
			if (w < lasso[s]) {
				lasso[s] = w;
				lasso_mid[s] = l;
			}
		}

	int best = INF;
	enum { NONE, DISJOINT, PREFIX, SEGMENT } kind = NONE;
	int bx = -1, bm = -1, ba = -1, bb = -1, bl1 = -1, bl2 = -1;
	for (int x = 0; x < N; x += 2) {
		int nx = x ^ 1;
		// case 1: clause-disjoint contradictions from x and ~x
		if (lasso[x] < INF && lasso[nx] < INF && lasso[x] + lasso[nx] < best) {
			best = lasso[x] + lasso[nx];
			kind = DISJOINT;
			bx = x;
		}
		// case 2: both sides join at m, one shared contradiction from m
		for (int m = 0; m < N; ++m) {
			if (dt.d[x][m] >= INF || dt.d[nx][m] >= INF || lasso[m] >= INF)
				continue;
			int w = dt.d[x][m] + dt.d[nx][m] + lasso[m];
			if (w < best) {
				best = w;
				kind = PREFIX;
				bx = x;
				bm = m;
			}
		}
		// case 3: the two contradiction loops share a segment a => b, used
		// forward by one side and by its skew image on the other
		for (int a = 0; a < N; ++a) {
			if (dt.d[x][a] >= INF && dt.d[nx][(a ^ 1)] >= INF)
				continue;
			for (int b = 0; b < N; ++b) {
				if (dt.d[a][b] >= INF)
					continue;
				int best1 = INF, best2 = INF, l1 = -1, l2 = -1;
				for (int l = 0; l < N; ++l) {
					if (dt.d[x][l] < INF && dt.d[l][a] < INF && dt.d[b][l ^ 1] < INF) {
						int w = dt.d[x][l] + dt.d[l][a] + dt.d[b][l ^ 1];
						if (w < best1) {
							best1 = w;
							l1 = l;
						}
					}
					if (dt.d[nx][l] < INF && dt.d[l][b ^ 1] < INF &&
					    dt.d[a ^ 1][l ^ 1] < INF) {
						int w = dt.d[nx][l] + dt.d[l][b ^ 1] + dt.d[a ^ 1][l ^ 1];
						if (w < best2) {
							best2 = w;
							l2 = l;
						}
					}
				}
				if (best1 >= INF || best2 >= INF)
					continue;
				int w = best1 + best2 + dt.d[a][b];
				if (w < best) {
					best = w;
					kind = SEGMENT;
					bx = x;
					ba = a;
					bb = b;
					bl1 = l1;
					bl2 = l2;
				}
			}
		}
	}
	if (kind == NONE)
		throw std::invalid_argument("formula is consistent");

	std::set<int> wf_ids;
	auto add_lasso = [&](int s) {
		int l = lasso_mid[s];
		dt.collect_path(s, l, wf_ids);
		dt.collect_path(l, l ^ 1, wf_ids);
	};
	switch (kind) {
	case DISJOINT:
		add_lasso(bx);
		add_lasso(bx ^ 1);
		break;
	case PREFIX:
		dt.collect_path(bx, bm, wf_ids);
		dt.collect_path(bx ^ 1, bm, wf_ids);
		add_lasso(bm);
		break;
	case SEGMENT:
		dt.collect_path(bx, bl1, wf_ids);
		dt.collect_path(bl1, ba, wf_ids);
		dt.collect_path(ba, bb, wf_ids);
		dt.collect_path(bb, bl1 ^ 1, wf_ids);
		dt.collect_path(bx ^ 1, bl2, wf_ids);
		dt.collect_path(bl2, bb ^ 1, wf_ids);
		dt.collect_path(ba ^ 1, bl2 ^ 1, wf_ids);
		break;
	default:
		break;
	}
	MinInconsistent out;
	out.half_units = best;
	std::set<int> orig;
	for (int id : wf_ids)
		orig.insert(original_id(wf, f, id));
	out.witness_ids.assign(orig.begin(), orig.end());
	return out;
}

// ---------------------------------------------------------------------------
// cyclic implied component

CyclicImpliedSize size_cyclic_implied(const Formula &f, Lit l)
{
	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);
	LiteralSets ls = literal_sets(g, l);
	CyclicImpliedSize out;
	out.cc_size = (int)ls.CC.size();

	// frontier derivations may only use clauses free of component variables:
	// anything touching CC is part of the component choice itself
	std::set<int> cc_vars;
	for (Lit c : ls.CC)
		cc_vars.insert(c.var());
	std::set<int> blocked;
	for (const Clause &c : wf.base.clauses)
		for (Lit x : c.lits)
			if (cc_vars.count(x.var()))
				blocked.insert(c.id);
	auto outside_closure = [&](Lit from) {
		std::vector<Lit> cl;
		std::vector<char> seen(g.nodes(), 0);
		std::vector<int> q{from.code()};
		seen[from.code()] = 1;
		while (!q.empty()) {
			int u = q.back();
			q.pop_back();
			cl.push_back(Lit::from_code(u));
			for (const Edge &e : g.adj[u])
				if (!blocked.count(e.clause_id) && !seen[e.to]) {
					seen[e.to] = 1;
					q.push_back(e.to);
				}
		}
		return cl;
	};

	// case 1: a frontier literal alone yields a contradiction outside
	for (Lit j : ls.JC) {
		std::vector<char> has(g.nodes(), 0);
		for (Lit d : outside_closure(j))
			has[d.code()] = 1;
		bool bottom = false;
		for (int v = 0; v < g.nodes(); v += 2)
			if (has[v] && has[v + 1])
				bottom = true;
		if (bottom) {
			out.kind = CyclicSizeCase::FrontierContradiction;
			out.half_units = 2 * out.cc_size;
			return out;
		}
	}
	// case 2: one component node feeding two frontier literals whose outside
	// closures contain opposite literals
	std::vector<std::vector<Lit>> closures;
	std::vector<Lit> jlist = ls.JC;
	for (Lit j : jlist)
		closures.push_back(outside_closure(j));
	for (Lit c : ls.CC) {
		std::vector<int> js;
		for (const Edge &e : g.adj[c.code()])
			for (size_t k = 0; k < jlist.size(); ++k)
				if (jlist[k].code() == e.to)
					js.push_back((int)k);
		for (size_t a = 0; a < js.size(); ++a)
			for (size_t b = a + 1; b < js.size(); ++b) {
				std::vector<char> has(g.nodes(), 0);
				for (Lit d : closures[js[a]])
					has[d.code()] = 1;
				for (Lit d : closures[js[b]])
					if (has[(~d).code()]) {
						out.kind = CyclicSizeCase::SplitPair;
						out.half_units = 2 * (out.cc_size + 1);
						return out;
					}
			}
	}
	out.kind = CyclicSizeCase::NeedsSearch;
	out.half_units = 0;
	return out;
}

// ---------------------------------------------------------------------------
// presence tests

bool in_some_ies_acyclic_inconsistent(const Formula &f, int clause_id)
{
	const Clause *c = f.find(clause_id);
	if (!c)
		throw std::invalid_argument("unknown clause id");
	Formula rest = f.without(clause_id);
	if (is_consistent(rest))
		return true;
	// a walk from each clause literal to a complementary pair; plain UP would
	// bottom out on the remainder's own contradictory units
	ImplicationGraph g = ImplicationGraph::build(eliminate_units(rest));
	for (Lit l : c->lits) {
		std::vector<char> has(g.nodes(), 0);
		for (Lit d : up_closure(g, l))
			has[d.code()] = 1;
		bool bottom = false;
		for (int v = 0; v + 1 < g.nodes(); v += 2)
			if (has[v] && has[v + 1])
				bottom = true;
		if (!bottom)
			return false;
	}
	return true;
}

std::optional<bool> in_some_ies_noncycle_clause(const Formula &f, int clause_id)
{
	const Clause *c = f.find(clause_id);
	if (!c)
		throw std::invalid_argument("unknown clause id");
	if (c->unary())
		return true; // a unit is always the essential part of its own selection

	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);
	// orientations (l1 -> l2) of the clause
	Lit a = c->lits[0], b = c->lits[1];
	std::vector<std::pair<Lit, Lit>> orient = {{~a, b}, {~b, a}};
	std::vector<char> implied(2 * f.n, 0);
	for (Lit l : implied_literals(f))
		implied[l.code()] = 1;

	bool any_applicable = false, any_open = false;
	for (auto [l1, l2] : orient) {
		if (!implied[(~l1).code()])
			continue;
		any_applicable = true;
		std::vector<Lit> cl2 = up_closure(g, l2);
		std::vector<char> has(g.nodes(), 0);
		bool reaches_l1 = false;
		for (Lit d : cl2) {
			has[d.code()] = 1;
			if (d == l1)
				reaches_l1 = true;
		}
		if (reaches_l1) {
			any_open = true; // the clause closes a cycle: NP territory
			continue;
		}
		LiteralSets ls = literal_sets(g, l1);
		if (ls.CC.size() <= 1) {
			// l1 off every cycle: the selection sets decide exactly
			bool hit = false;
			for (Lit s : ls.S)
				hit = hit || s == l2;
			for (auto [p, q] : ls.P)
				hit = hit || p == l2 || q == l2;
			if (hit)
				return true;
			continue;
		}
		// clause leaves a cycle component: with no walk from l2 to a
		// contradiction or back into ~CC the clause is in no I.E.S.; a walk
		// may still rely on clauses no I.E.S. keeps, so it only leaves the
		// question open
		bool candidate = false;
		for (int v = 0; v + 1 < g.nodes(); v += 2)
			if (has[v] && has[v + 1])
				candidate = true;
		for (Lit cc : ls.CC)
			if (has[(~cc).code()])
				candidate = true;
		if (candidate)
			any_open = true;
	}
	if (any_applicable) {
		if (any_open)
			return std::nullopt;
		return false;
	}

	// both endpoints untouched by implied literals: equivalence-interval test
	// within the no-implied core (the clause itself lives there)
	Decomposition dec = decompose(f);
	ImplicationGraph cg = ImplicationGraph::build(dec.core);
	g = std::move(cg);
	Lit l1 = ~a, l2 = b;
	std::vector<Lit> fwd = up_closure(g, l1);
	std::vector<Lit> cl2 = up_closure(g, l2);
	std::vector<char> in_fwd(g.nodes(), 0);
	for (Lit d : fwd)
		in_fwd[d.code()] = 1;
	for (Lit d : cl2)
		if (d == l1)
			return std::nullopt; // on a cycle
	// backward reach of l2 = skew of forward reach of ~l2
	std::vector<Lit> bwd_src = up_closure(g, ~l2);
	std::vector<char> in_bwd(g.nodes(), 0);
	for (Lit d : bwd_src)
		in_bwd[(~d).code()] = 1;
	auto equivalent_lits = [&](Lit p, Lit q) {
		std::vector<Lit> cp = up_closure(g, p);
		bool pq = false;
		for (Lit d : cp)
			if (d == q)
				pq = true;
		if (!pq)
			return false;
		std::vector<Lit> cq = up_closure(g, q);
		for (Lit d : cq)
			if (d == p)
				return true;
		return false;
	};
	for (int v = 0; v < g.nodes(); ++v) {
		if (!in_fwd[v] || !in_bwd[v])
			continue;
		Lit t = Lit::from_code(v);
		if (t == l1 || t == l2)
			continue;
		if (!equivalent_lits(t, l1) && !equivalent_lits(t, l2))
			return false;
	}
	return true;
}

// ---------------------------------------------------------------------------
// report

namespace {

const char *regime_name(Regime r)
{
	switch (r) {
	case Regime::Inconsistent:
		return "inconsistent";
	case Regime::ConsistentImplying:
		return "consistent_implying";
	default:
		return "consistent_no_implied";
	}
}

const char *cyclic_name(CyclicityKind k)
{
	switch (k) {
	case CyclicityKind::Acyclic:
		return "acyclic";
	case CyclicityKind::Cyclic:
		return "cyclic";
	default:
		return "unknown";
	}
}

const char *membership_name(Membership m)
{
	switch (m) {
	case Membership::InAll:
		return "in_all";
	case Membership::InSome:
		return "in_some";
	case Membership::InNone:
		return "in_none";
	default:
		return "needs_search";
	}
}

} // namespace

IesReport ies_report(const Formula &f, const SearchBudget &budget, bool allow_exact)
{
	IesReport rep;
	Classification cl = classify(f);
	rep.regime = cl.regime;
	WeightedFormula wf = eliminate_units(f);
	ImplicationGraph g = ImplicationGraph::build(wf);
	Cyclicity cy = cyclicity(g);
	rep.cyclic = cy.kind;
	rep.unique = has_unique_ies(f);
	rep.ies_ids = prune_greedy(f);
	rep.clause_ids = f.ids();
	std::sort(rep.clause_ids.begin(), rep.clause_ids.end());

	bool acyclic = cy.kind == CyclicityKind::Acyclic;
	// membership
	for (int id : rep.clause_ids) {
		Membership m = Membership::NeedsSearch;
		if (!is_clause_redundant(f, id)) {
			m = Membership::InAll;
		} else if (rep.regime == Regime::Inconsistent) {
			if (acyclic)
				m = in_some_ies_acyclic_inconsistent(f, id) ? Membership::InSome
				                                            : Membership::InNone;
		} else {
			std::optional<bool> r = in_some_ies_noncycle_clause(f, id);
			if (r)
				m = *r ? Membership::InSome : Membership::InNone;
		}
		if (m == Membership::NeedsSearch && allow_exact) {
			SearchOutcome<bool> e = in_some_ies_exact(f, id, budget);
			rep.exact_used = true;
			if (e.answered())
				m = e.value ? Membership::InSome : Membership::InNone;
			else
				rep.exhausted = true;
		}
		rep.membership.push_back(m);
	}

	// minimum size
	if (rep.regime == Regime::Inconsistent && acyclic) {
		rep.min_half_units = min_inconsistent_size_acyclic(f).half_units;
	} else if (rep.regime != Regime::Inconsistent && acyclic) {
		rep.min_half_units = ies_consistent_acyclic(f).min_half_units;
	} else if (allow_exact) {
		SearchOutcome<MinIesResult> e = min_ies_size_exact(f, budget);
		rep.exact_used = true;
		if (e.answered())
			rep.min_half_units = e.value.half_units;
		else
			rep.exhausted = true;
	}
	return rep;
}

std::string ies_report_json(const IesReport &r)
{
	nlohmann::ordered_json j;
	j["regime"] = regime_name(r.regime);
	j["cyclic"] = cyclic_name(r.cyclic);
	j["unique"] = r.unique;
	if (r.min_half_units)
		j["min_size"] = std::to_string(*r.min_half_units) + "/2";
	else
		j["min_size"] = nullptr;
	std::vector<int> ies1;
	for (int id : r.ies_ids)
		ies1.push_back(id + 1);
	j["ies"] = ies1;
	nlohmann::ordered_json mem = nlohmann::ordered_json::object();
	for (size_t i = 0; i < r.clause_ids.size(); ++i)
		mem[std::to_string(r.clause_ids[i] + 1)] = membership_name(r.membership[i]);
	j["membership"] = mem;
	j["exact_used"] = r.exact_used;
	j["exhausted"] = r.exhausted;
	return j.dump(2) + "\n";
}

} // namespace redu
