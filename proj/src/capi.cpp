#include "redu.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <random>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "redu/dimacs.hpp"
#include "redu/entail.hpp"
#include "redu/graph.hpp"
#include "redu/hardgen.hpp"
#include "redu/horn.hpp"
#include "redu/ies.hpp"
#include "redu/redundancy.hpp"
#include "redu/search.hpp"
#include "redu/types.hpp"

using json = nlohmann::ordered_json;

namespace {

enum class Mode { Auto, TwoCnf, Horn };

struct Handle {
	redu::Formula f;
	std::vector<std::string> warnings;
	std::vector<int> position_to_id;
	Mode mode = Mode::Auto;

	// effective fragment; REDU_EINVAL when the formula fits neither
	bool use_horn(bool &ok) const
	{
		redu::FormulaKind k = f.kind();
		ok = true;
		switch (mode) {
		case Mode::TwoCnf:
			ok = k == redu::FormulaKind::TwoCnf || k == redu::FormulaKind::Both;
			return false;
		case Mode::Horn:
			ok = k == redu::FormulaKind::Horn || k == redu::FormulaKind::Both;
			return true;
		default:
			if (k == redu::FormulaKind::TwoCnf || k == redu::FormulaKind::Both)
				return false;
			ok = k == redu::FormulaKind::Horn;
			return true;
		}
	}
};

char *dup_string(const std::string &s)
{
	char *p = (char *)std::malloc(s.size() + 1);
	if (p)
		std::memcpy(p, s.c_str(), s.size() + 1);
	return p;
}

redu_status give(const std::string &s, char **out)
{
	if (!out)
		return REDU_EINVAL;
	*out = dup_string(s);
	return *out ? REDU_OK : REDU_ENOMEM;
}

redu::SearchBudget to_budget(const redu_budget *b)
{
	redu::SearchBudget sb;
	if (b) {
		sb.max_clauses = b->max_clauses;
		sb.max_nodes = b->max_nodes;
		sb.time_cap_ms = b->time_cap_ms;
	}
	return sb;
}

const Handle *as_handle(const redu_formula *f) { return (const Handle *)f; }

const char *regime_name(redu::Regime r)
{
	switch (r) {
	case redu::Regime::Inconsistent:
		return "inconsistent";
	case redu::Regime::ConsistentImplying:
		return "consistent_implying";
	default:
		return "consistent_no_implied";
	}
}

bool horn_consistent(const redu::Formula &f)
{
	redu::Clause pos, neg;
	pos.lits = {redu::Lit::make(1, false)};
	neg.lits = {redu::Lit::make(1, true)};
	return !(redu::horn_entails(f, pos) && redu::horn_entails(f, neg));
}

// wraps the body so every entry point maps C++ failures onto status codes
template <typename Fn> redu_status guarded(Fn &&fn)
{
	try {
		return fn();
	} catch (const std::invalid_argument &) {
		return REDU_EINVAL;
	} catch (const std::bad_alloc &) {
		return REDU_ENOMEM;
	} catch (...) {
		return REDU_EINTERNAL;
	}
}

} // namespace

extern "C" {

void redu_budget_default(redu_budget *b)
{
	if (!b)
		return;
	redu::SearchBudget d;
	b->max_clauses = d.max_clauses;
	b->max_nodes = d.max_nodes;
	b->time_cap_ms = d.time_cap_ms;
}

redu_status redu_parse(const char *dimacs, redu_formula **out, char **error_msg)
{
	if (!dimacs || !out)
		return REDU_EINVAL;
	*out = nullptr;
	if (error_msg)
		*error_msg = nullptr;
	try {
		redu::ParseResult pr = redu::parse_dimacs(dimacs);
		Handle *h = new Handle;
		h->f = std::move(pr.formula);
		h->warnings = std::move(pr.warnings);
		h->position_to_id = std::move(pr.position_to_id);
		*out = (redu_formula *)h;
		return REDU_OK;
	} catch (const redu::ParseError &e) {
		if (error_msg)
			*error_msg = dup_string("line " + std::to_string(e.line) + ": " + e.message);
		return REDU_EPARSE;
	} catch (const std::bad_alloc &) {
		return REDU_ENOMEM;
	} catch (...) {
		return REDU_EINTERNAL;
	}
}

void redu_formula_free(redu_formula *f) { delete (Handle *)f; }

void redu_string_free(char *s) { std::free(s); }

redu_status redu_set_mode(redu_formula *f, int mode)
{
	if (!f || mode < 0 || mode > 2)
		return REDU_EINVAL;
	Handle *h = (Handle *)f;
	Mode m = mode == 0 ? Mode::Auto : mode == 1 ? Mode::TwoCnf : Mode::Horn;
	Mode saved = h->mode;
	h->mode = m;
	bool ok;
	h->use_horn(ok);
	if (!ok) {
		h->mode = saved;
		return REDU_EINVAL;
	}
	return REDU_OK;
}

int redu_clause_count(const redu_formula *f) { return f ? as_handle(f)->f.m() : -1; }
int redu_variable_count(const redu_formula *f) { return f ? as_handle(f)->f.n : -1; }

redu_status redu_warnings_json(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&] {
		json j = json::array();
		for (const std::string &w : as_handle(f)->warnings)
			j.push_back(w);
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_position_map_json(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&] {
		json j = json::array();
		for (int id : as_handle(f)->position_to_id)
			j.push_back(id + 1);
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_classify_json(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		json j;
		j["fragment"] = horn ? "horn" : "2cnf";
		j["variables"] = h->f.n;
		j["clauses"] = h->f.m();
		if (horn) {
			j["regime"] = horn_consistent(h->f) ? "consistent" : "inconsistent";
		} else {
			redu::Classification c = redu::classify(h->f);
			j["regime"] = regime_name(c.regime);
			redu::WeightedFormula wf = redu::eliminate_units(h->f);
			redu::Cyclicity cy = redu::cyclicity(redu::ImplicationGraph::build(wf));
			j["cyclic"] = cy.kind == redu::CyclicityKind::Acyclic ? "acyclic"
			            : cy.kind == redu::CyclicityKind::Cyclic ? "cyclic" : "unknown";
			json lits = json::array();
			for (redu::Lit l : c.implied)
				lits.push_back(l.to_dimacs());
			j["implied"] = lits;
		}
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_redundancy_json(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		redu::RedundancyReport r = horn ? redu::horn_redundancy(h->f) : redu::check(h->f);
		json j;
		j["fragment"] = horn ? "horn" : "2cnf";
		j["redundant"] = r.redundant;
		json v;
		for (size_t i = 0; i < r.clause_ids.size(); ++i)
			v[std::to_string(r.clause_ids[i] + 1)] =
			    r.verdicts[i] == redu::ClauseVerdict::Redundant ? "redundant" : "irredundant";
		j["verdicts"] = v;
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_ies_report_json(const redu_formula *f, const redu_budget *b,
                                 int allow_exact, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		redu::SearchBudget sb = to_budget(b);
		if (!horn)
			return give(redu::ies_report_json(redu::ies_report(h->f, sb, allow_exact != 0)),
			            out);

		// Horn report: greedy subset, uniqueness, exact minimum/membership
		json j;
		j["regime"] = horn_consistent(h->f) ? "consistent" : "inconsistent";
		j["unique"] = redu::horn_has_unique_ies(h->f);
		bool exhausted = false;
		bool exact_used = false;
		if (allow_exact) {
			auto mn = redu::horn_min_ies_size(h->f, sb);
			exact_used = true;
			if (mn.answered()) // Horn sizes are whole clause counts
				j["min_size"] = std::to_string(mn.value.half_units / 2);
			else {
				j["min_size"] = nullptr;
				exhausted = true;
			}
		} else {
			j["min_size"] = nullptr;
		}
		json ies1 = json::array();
		for (int id : redu::horn_prune_greedy(h->f))
			ies1.push_back(id + 1);
		j["ies"] = ies1;
		json mem;
		for (const redu::Clause &c : h->f.clauses) {
			const char *name;
			if (redu::horn_in_all_ies(h->f, c.id))
				name = "in_all";
			else if (!allow_exact)
				name = "needs_search";
			else {
				auto r = redu::horn_in_some_ies_exact(h->f, c.id, sb);
				exact_used = true;
				if (!r.answered()) {
					name = "needs_search";
					exhausted = true;
				} else
					name = r.value ? "in_some" : "in_none";
			}
			mem[std::to_string(c.id + 1)] = name;
		}
		j["membership"] = mem;
		j["exact_used"] = exact_used;
		j["exhausted"] = exhausted;
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_in_ies(const redu_formula *f, int clause, int want_all,
                        const redu_budget *b, int allow_exact, int *answer)
{
	if (!f || !answer)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		int id = clause - 1;
		if (!h->f.find(id))
			return REDU_EINVAL;
		redu::SearchBudget sb = to_budget(b);
		if (want_all) {
			*answer = horn ? redu::horn_in_all_ies(h->f, id) : redu::in_all_ies(h->f, id);
			return REDU_OK;
		}
		if (horn) {
			if (redu::horn_in_all_ies(h->f, id)) {
				*answer = 1;
				return REDU_OK;
			}
			if (!allow_exact)
				return REDU_EEXHAUSTED;
			auto r = redu::horn_in_some_ies_exact(h->f, id, sb);
			if (!r.answered())
				return REDU_EEXHAUSTED;
			*answer = r.value ? 1 : 0;
			return REDU_OK;
		}
		redu::IesReport rep = redu::ies_report(h->f, sb, allow_exact != 0);
		for (size_t i = 0; i < rep.clause_ids.size(); ++i) {
			if (rep.clause_ids[i] != id)
				continue;
			switch (rep.membership[i]) {
			case redu::Membership::InAll:
			case redu::Membership::InSome:
				*answer = 1;
				return REDU_OK;
			case redu::Membership::InNone:
				*answer = 0;
				return REDU_OK;
			default:
				return REDU_EEXHAUSTED;
			}
		}
		return REDU_EINTERNAL;
	});
}

redu_status redu_prune_dimacs(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		std::vector<int> keep = horn ? redu::horn_prune_greedy(h->f) : redu::prune_greedy(h->f);
		return give(redu::emit_dimacs(h->f.subset(keep)), out);
	});
}

redu_status redu_graph_dot(const redu_formula *f, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		if (h->use_horn(ok) || !ok)
			return REDU_EINVAL;
		redu::WeightedFormula wf = redu::eliminate_units(h->f);
		return give(redu::graph_dot(redu::ImplicationGraph::build(wf)), out);
	});
}

redu_status redu_oracle_json(const redu_formula *f, const redu_budget *b, char **out)
{
	if (!f)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		const Handle *h = as_handle(f);
		bool ok;
		bool horn = h->use_horn(ok);
		if (!ok)
			return REDU_EINVAL;
		redu::SearchBudget sb = to_budget(b);
		auto res = horn ? redu::horn_enumerate_ies(h->f, sb) : redu::enumerate_ies(h->f, sb);
		if (!res.answered())
			return REDU_EEXHAUSTED;
		const auto &all = res.value;
		json j;
		j["count"] = all.size();
		int min_half = -1;
		for (const auto &s : all) {
			int w = 2 * (int)s.size();
			if (min_half < 0 || w < min_half)
				min_half = w;
		}
		j["min_size"] = min_half < 0 ? json(nullptr)
		                             : json(std::to_string(min_half) + "/2");
		json mem;
		for (const redu::Clause &c : h->f.clauses) {
			int hits = 0;
			for (const auto &s : all)
				for (int id : s)
					if (id == c.id) {
						++hits;
						break;
					}
			const char *name = hits == 0 ? "in_none"
			                 : hits == (int)all.size() ? "in_all" : "in_some";
			mem[std::to_string(c.id + 1)] = name;
		}
		j["membership"] = mem;
		json subs = json::array();
		for (size_t i = 0; i < all.size() && i < 64; ++i) {
			json s = json::array();
			for (int id : all[i])
				s.push_back(id + 1);
			subs.push_back(s);
		}
		j["subsets"] = subs;
		return give(j.dump(2) + "\n", out);
	});
}

redu_status redu_gen(const char *reduction, unsigned seed, int size,
                     char **dimacs, char **sidecar)
{
	if (!reduction || !dimacs)
		return REDU_EINVAL;
	return guarded([&]() -> redu_status {
		std::mt19937 rng(seed);
		std::string name = reduction;
		int cap = size > 0 ? size : 6;
		redu::HardInstance inst;
		bool built = false;
		for (int attempt = 0; attempt < 10'000 && !built; ++attempt) {
			if (name == "size_cyclic_implied") {
				redu::Digraph g = redu::sample_digraph(rng, cap, 0.35);
				int x = (int)(rng() % g.n), y = (int)(rng() % g.n);
				if (x == y || !redu::reachable(g, x, y) || !redu::reachable(g, y, x))
					continue;
				inst = redu::gen_size_cyclic_implied(g, x, y);
				built = true;
			} else if (name == "size_strongly_connected") {
				redu::Digraph g = redu::sample_digraph(rng, cap, 0.35);
				if (!redu::strongly_connected(g))
					continue;
				inst = redu::gen_size_strongly_connected(g);
				built = true;
			} else if (name == "presence_inconsistent") {
				redu::Digraph g = redu::sample_digraph(rng, cap, 0.35);
				if (g.edges.empty())
					continue;
				int x = (int)(rng() % g.n), y = (int)(rng() % g.n);
				if (x == y || !redu::reachable(g, x, y))
					continue;
				inst = redu::gen_presence_inconsistent(g, x, y, (int)(rng() % g.edges.size()));
				built = true;
			} else if (name == "presence_implied_cyclic") {
				redu::Digraph g = redu::sample_digraph(rng, std::max(cap, 4), 0.35);
				if (g.n < 4)
					continue;
				int v[4];
				v[0] = (int)(rng() % g.n);
				int filled = 1;
				while (filled < 4) {
					int c = (int)(rng() % g.n);
					bool dup = false;
					for (int i = 0; i < filled; ++i)
						dup = dup || v[i] == c;
					if (!dup)
						v[filled++] = c;
				}
				if (!redu::reachable(g, v[0], v[1]) || !redu::reachable(g, v[2], v[3]))
					continue;
				inst = redu::gen_presence_implied_cyclic(g, v[0], v[1], v[2], v[3]);
				built = true;
			} else if (name == "presence_3sat") {
				inst = redu::gen_presence_3sat(redu::sample_sat3(rng, std::min(cap, 4), 4));
				built = true;
			} else if (name == "horn_vertex_cover") {
				redu::UGraph g = redu::sample_ugraph(rng, cap, 0.5);
				if (g.edges.empty())
					continue;
				inst = redu::gen_horn_vertex_cover(g);
				built = true;
			} else {
				return REDU_EINVAL;
			}
		}
		if (!built)
			return REDU_EEXHAUSTED;
		redu_status st = give(redu::emit_dimacs(inst.formula), dimacs);
		if (st != REDU_OK)
			return st;
		if (sidecar) {
			st = give(inst.sidecar_json(), sidecar);
			if (st != REDU_OK) {
				redu_string_free(*dimacs);
				*dimacs = nullptr;
				return st;
			}
		}
		return REDU_OK;
	});
}

} // extern "C"
