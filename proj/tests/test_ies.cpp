#include <doctest.h>

#include <algorithm>
#include <set>

#include "oracle.hpp"
#include "redu/graph.hpp"
#include "redu/dimacs.hpp"
#include "redu/ies.hpp"

using namespace redu;

namespace {

bool acyclic(const Formula &f)
{
	return cyclicity(ImplicationGraph::build(eliminate_units(f))).kind ==
	       CyclicityKind::Acyclic;
}

uint64_t mask_of(const Formula &f, const std::vector<int> &ids)
{
	uint64_t mask = 0;
	for (int id : ids)
		for (size_t i = 0; i < f.clauses.size(); ++i)
			if (f.clauses[i].id == id)
				mask |= 1ull << i;
	return mask;
}

// the seven-clause example: l=1, l'=2, l''=3, x=4, y=5
Formula seven()
{
	return oracle::mk({{-2, 1}, {-1, 2}, {-1, 3}, {-2, 4}, {-2, -4}, {-3, 5}, {-3, -5}});
}

} // namespace

TEST_CASE("is_ies on the seven-clause example")
{
	Formula f = seven();
	// {(~l' l),(~l l''),(~l'' y),(~l'' ~y)}
	std::vector<int> good;
	for (const Clause &c : f.clauses) {
		bool is_good = (c.contains(Lit::make(2, true)) && c.contains(Lit::make(1, false))) ||
		               (c.contains(Lit::make(1, true)) && c.contains(Lit::make(3, false))) ||
		               c.contains(Lit::make(3, true));
		if (is_good)
			good.push_back(c.id);
	}
	REQUIRE(good.size() == 4);
	CHECK(is_ies(f, good));
	CHECK(!is_ies(f, f.ids())); // the whole formula is redundant here
	CHECK_THROWS(is_ies(f, {42}));

	// dropping the contradiction clauses breaks equivalence
	std::vector<int> partial;
	for (int id : good)
		if (!f.find(id)->contains(Lit::make(3, true)))
			partial.push_back(id);
	CHECK(!is_ies(f, partial));
}

TEST_CASE("in_all_ies and has_unique_ies frozen cases")
{
	Formula chain = oracle::mk({{-1, 2}, {-2, 3}, {-1, 3}});
	CHECK(in_all_ies(chain, 0));
	CHECK(!in_all_ies(chain, 1));
	CHECK(has_unique_ies(chain));

	Formula two = oracle::mk({{-1, 2}, {-2, 1}, {-1, 3}, {-2, 3}});
	CHECK(!has_unique_ies(two));

	Formula single = oracle::mk({{1, 2}});
	CHECK(in_all_ies(single, 0));
	CHECK(has_unique_ies(single));
}

TEST_CASE("has_unique_ies matches enumeration counts")
{
	std::mt19937 rng(41);
	for (int it = 0; it < 600; ++it) {
		Formula f = oracle::random_2cnf(rng, 5, 9);
		auto all = oracle::enumerate_ies(f);
		REQUIRE(has_unique_ies(f) == (all.size() == 1));
	}
}

TEST_CASE("unique_ies_acyclic equals the single enumerated subset")
{
	Formula chain = oracle::mk({{-1, 2}, {-2, 3}, {-1, 3}});
	CHECK(unique_ies_acyclic(chain) == std::vector<int>{0, 2});

	std::mt19937 rng(42);
	int seen = 0;
	while (seen < 400) {
		Formula f = oracle::random_2cnf(rng, 5, 9, 0.0);
		if (classify(f).regime != Regime::ConsistentNoImplied || !acyclic(f))
			continue;
		++seen;
		auto all = oracle::enumerate_ies(f);
		REQUIRE(all.size() == 1);
		REQUIRE(unique_ies_acyclic(f) == all[0]);
	}
}

TEST_CASE("ies_consistent_acyclic: forced and optional selections")
{
	// implied ~u with a forced contradiction pair
	Formula f = oracle::mk({{-1, 2}, {-1, -2}});
	IesConstruction c = ies_consistent_acyclic(f);
	CHECK(c.min_half_units == 4);
	CHECK(c.ies_ids == f.ids());
	for (Membership m : c.membership)
		CHECK(m == Membership::InAll);

	// two single-clause options for ~a, both InSome
	Formula s2 = oracle::mk({{-1, 2}, {-2, 3}, {-2, -3}, {-1, 4}, {-4, 5}, {-4, -5}});
	IesConstruction c2 = ies_consistent_acyclic(s2);
	auto all = oracle::enumerate_ies(s2);
	size_t min_count = 99;
	for (const auto &sub : all)
		min_count = std::min(min_count, sub.size());
	CHECK(c2.min_half_units == 2 * (int)min_count);
	CHECK(is_ies(s2, c2.ies_ids));
	// canonical order puts (~a c) right after (~a b)
	CHECK(c2.membership[0] == Membership::InSome);
	CHECK(c2.membership[1] == Membership::InSome);
	CHECK(c2.membership[2] == Membership::InAll);
}

TEST_CASE("ies_consistent_acyclic agrees with enumeration")
{
	std::mt19937 rng(43);
	int seen = 0;
	while (seen < 500) {
		Formula f = oracle::random_2cnf(rng, 5, 9);
		if (classify(f).regime == Regime::Inconsistent || !acyclic(f))
			continue;
		++seen;
		INFO(emit_dimacs(f));
		IesConstruction c = ies_consistent_acyclic(f);
		auto all = oracle::enumerate_ies(f);
		REQUIRE(!all.empty());
		size_t min_count = 99;
		std::vector<int> all_ids = f.ids();
		std::set<int> in_any, in_every(all_ids.begin(), all_ids.end());
		for (const auto &sub : all) {
			min_count = std::min(min_count, sub.size());
			std::set<int> s(sub.begin(), sub.end());
			for (int id : sub)
				in_any.insert(id);
			std::set<int> keep;
			for (int id : in_every)
				if (s.count(id))
					keep.insert(id);
			in_every = keep;
		}
		REQUIRE(c.min_half_units == 2 * (int)min_count);
		REQUIRE(is_ies(f, c.ies_ids));
		for (size_t i = 0; i < c.clause_ids.size(); ++i) {
			int id = c.clause_ids[i];
			Membership m = c.membership[i];
			REQUIRE(m != Membership::NeedsSearch);
			REQUIRE((m == Membership::InAll) == (in_every.count(id) == 1));
			REQUIRE((m == Membership::InNone) == (in_any.count(id) == 0));
		}
	}
}

TEST_CASE("min_inconsistent_size_acyclic: frozen cases")
{
	MinInconsistent m8 = min_inconsistent_size_acyclic(oracle::f8());
	CHECK(m8.half_units == 12);
	CHECK(m8.witness_ids.size() == 6);

	Formula f8b = oracle::mk({{-1, 2}, {-2, 3}, {-2, -3}, {1, 4}, {-4, 5}, {-4, -5}, {-1, 3}});
	CHECK(min_inconsistent_size_acyclic(f8b).half_units == 12);

	// two conflicting units = 2 original clauses = 4 half-units
	Formula units = oracle::mk({{1}, {-1}});
	CHECK(min_inconsistent_size_acyclic(units).half_units == 4);

	CHECK_THROWS_AS(min_inconsistent_size_acyclic(oracle::mk({{-1, 2}})),
	                std::invalid_argument);
}

TEST_CASE("min_inconsistent_size_acyclic agrees with exact search")
{
	std::mt19937 rng(44);
	int seen = 0;
	while (seen < 600) {
		Formula f = oracle::random_2cnf(rng, 5, 10);
		if (classify(f).regime != Regime::Inconsistent || !acyclic(f))
			continue;
		++seen;
		MinInconsistent m = min_inconsistent_size_acyclic(f);
		REQUIRE(m.half_units == 2 * oracle::min_equivalent_count(f));
		// the witness itself is inconsistent and matches the claimed size
		REQUIRE(!oracle::consistent(f.subset(m.witness_ids)));
		int w = 0;
		for (int id : m.witness_ids)
			w += 2;
		REQUIRE(w == m.half_units);
	}
}

TEST_CASE("size_cyclic_implied: seven-clause example is case 1")
{
	Formula f = seven();
	CyclicImpliedSize s = size_cyclic_implied(f, Lit::make(1, false));
	CHECK(s.kind == CyclicSizeCase::FrontierContradiction);
	CHECK(s.cc_size == 2);
	CHECK(s.half_units == 4);
}

TEST_CASE("size_cyclic_implied: case 2 and the composition laws")
{
	std::mt19937 rng(45);
	for (int it = 0; it < 60; ++it) {
		int k = 2 + (int)(rng() % 3);
		// cycle v1..vk, plus either a case-1 frontier (u => contradiction) or
		// a case-2 split pair on v1
		std::vector<std::vector<int>> cl;
		for (int i = 1; i <= k; ++i)
			cl.push_back({-i, i % k + 1});
		bool case1 = rng() & 1;
		int u = k + 1, p = k + 2, q = k + 3, w = k + 4;
		if (case1) {
			cl.push_back({-1, u});
			cl.push_back({-u, w});
			cl.push_back({-u, -w});
		} else {
			cl.push_back({-1, p});
			cl.push_back({-1, q});
			cl.push_back({-p, w});
			cl.push_back({-q, -w});
		}
		// a random chord inside the cycle keeps the component intact
		if (k > 2 && (rng() & 1))
			cl.push_back({-(1 + (int)(rng() % k)), 1 + (int)(rng() % k)});
		Formula f;
		try {
			f = oracle::mk(cl);
		} catch (...) {
			continue; // chord degenerated into a tautology
		}
		CyclicImpliedSize s = size_cyclic_implied(f, Lit::make(1, false));
		if (case1) {
			REQUIRE(s.kind == CyclicSizeCase::FrontierContradiction);
			REQUIRE(s.half_units == 2 * k);
			// whole-formula minimum: component + the frontier pair selection
			REQUIRE(2 * oracle::min_equivalent_count(f) == s.half_units + 4);
		} else {
			REQUIRE(s.kind == CyclicSizeCase::SplitPair);
			REQUIRE(s.half_units == 2 * (k + 1));
			// component + the two contradiction clauses
			REQUIRE(2 * oracle::min_equivalent_count(f) == s.half_units + 4);
		}
	}
}

TEST_CASE("in_some_ies_acyclic_inconsistent: frozen and randomized")
{
	// F8 with (~x a): removal leaves a consistent formula
	Formula f8 = oracle::f8();
	for (const Clause &c : f8.clauses)
		CHECK(in_some_ies_acyclic_inconsistent(f8, c.id));

	std::mt19937 rng(46);
	int seen = 0;
	while (seen < 500) {
		Formula f = oracle::random_2cnf(rng, 5, 10);
		if (classify(f).regime != Regime::Inconsistent || !acyclic(f))
			continue;
		++seen;
		INFO(emit_dimacs(f));
		auto all = oracle::enumerate_ies(f);
		for (const Clause &c : f.clauses) {
			bool naive = false;
			for (const auto &s : all)
				naive = naive || std::count(s.begin(), s.end(), c.id);
			REQUIRE(in_some_ies_acyclic_inconsistent(f, c.id) == naive);
		}
	}
}

TEST_CASE("in_some_ies_noncycle_clause agrees with enumeration when it answers")
{
	std::mt19937 rng(47);
	int answered = 0, deferred = 0;
	for (int it = 0; it < 2500; ++it) {
		Formula f = oracle::random_2cnf(rng, 5, 9);
		if (classify(f).regime == Regime::Inconsistent)
			continue;
		auto all = oracle::enumerate_ies(f);
		INFO(emit_dimacs(f));
		for (const Clause &c : f.clauses) {
			std::optional<bool> got = in_some_ies_noncycle_clause(f, c.id);
			if (!got) {
				++deferred;
				continue;
			}
			++answered;
			bool naive = false;
			for (const auto &s : all)
				naive = naive || std::count(s.begin(), s.end(), c.id);
			REQUIRE(*got == naive);
		}
	}
	CHECK(answered > 1000);
}

TEST_CASE("ies_report: dispatch, membership, minimum")
{
	// empty formula
	IesReport re = ies_report(make_formula({}, 0), {}, false);
	CHECK(re.unique);
	CHECK(re.ies_ids.empty());
	REQUIRE(re.min_half_units.has_value());
	CHECK(*re.min_half_units == 0);

	std::mt19937 rng(48);
	SearchBudget b;
	for (int it = 0; it < 400; ++it) {
		Formula f = oracle::random_2cnf(rng, 5, 9);
		INFO(emit_dimacs(f));
		IesReport r = ies_report(f, b, true);
		CHECK(!r.exhausted);
		auto all = oracle::enumerate_ies(f);
		size_t min_count = 99;
		for (const auto &s : all)
			min_count = std::min(min_count, s.size());
		REQUIRE(r.min_half_units.has_value());
		REQUIRE(*r.min_half_units == 2 * (int)min_count);
		REQUIRE(r.unique == (all.size() == 1));
		REQUIRE(oracle::equivalent_subset(f, mask_of(f, r.ies_ids)));
		REQUIRE(oracle::subset_irredundant(f, mask_of(f, r.ies_ids)));
		for (size_t i = 0; i < r.clause_ids.size(); ++i) {
			int id = r.clause_ids[i];
			int hits = 0;
			for (const auto &s : all)
				if (std::count(s.begin(), s.end(), id))
					++hits;
			Membership expect = hits == 0 ? Membership::InNone
			                  : hits == (int)all.size() ? Membership::InAll
			                                            : Membership::InSome;
			REQUIRE(r.membership[i] == expect);
		}
		if (r.unique)
			for (Membership m : r.membership)
				CHECK(m != Membership::InSome);
	}
}

TEST_CASE("ies_report_json schema")
{
	Formula f = oracle::mk({{-1, 2}, {-2, 3}, {-1, 3}});
	std::string s = ies_report_json(ies_report(f, {}, false));
	CHECK(s.find("\"regime\": \"consistent_no_implied\"") != std::string::npos);
	CHECK(s.find("\"min_size\": \"4/2\"") != std::string::npos);
	CHECK(s.find("\"unique\": true") != std::string::npos);
	CHECK(s.find("\"exact_used\": false") != std::string::npos);
}
