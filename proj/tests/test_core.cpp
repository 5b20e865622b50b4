#include <doctest.h>

#include <stdexcept>

#include "oracle.hpp"
#include "redu/dimacs.hpp"
#include "redu/types.hpp"

using namespace redu;

TEST_CASE("literal encoding")
{
	Lit a = Lit::make(3, false);
	CHECK(a.code() == 4);
	CHECK(a.var() == 3);
	CHECK(!a.negated());
	CHECK((~a).code() == 5);
	CHECK((~a).negated());
	CHECK(Lit::from_dimacs(-3) == ~a);
	CHECK((~a).to_dimacs() == -3);
	CHECK(Lit() < a);
	CHECK(!Lit().valid());
}

TEST_CASE("clause canonicalization")
{
	std::vector<Lit> lits{Lit::make(2, true), Lit::make(1, false), Lit::make(2, true)};
	CHECK(canonicalize_clause(lits));
	CHECK(lits.size() == 2);
	CHECK(lits[0] == Lit::make(1, false));
	CHECK(lits[1] == Lit::make(2, true));

	std::vector<Lit> taut{Lit::make(1, false), Lit::make(1, true)};
	CHECK(!canonicalize_clause(taut));
}

TEST_CASE("make_formula: ordering, ids, duplicates")
{
	std::vector<std::vector<Lit>> raw = {
	    {Lit::make(2, true), Lit::make(3, false)},
	    {Lit::make(1, true), Lit::make(2, false)},
	    {Lit::make(2, false), Lit::make(1, true)}, // duplicate of previous
	};
	std::vector<int> dups, pos2id;
	Formula f = make_formula(raw, 0, &dups, &pos2id);
	CHECK(f.m() == 2);
	CHECK(f.n == 3);
	// canonical order: (~1 2) before (~2 3)
	CHECK(f.clauses[0].lits[0] == Lit::make(1, true));
	CHECK(f.clauses[0].id == 0);
	CHECK(f.clauses[1].id == 1);
	REQUIRE(dups.size() == 1);
	CHECK(dups[0] == 2);
	REQUIRE(pos2id.size() == 3);
	CHECK(pos2id[0] == 1);
	CHECK(pos2id[1] == 0);
	CHECK(pos2id[2] == 0);

	CHECK_THROWS_AS(make_formula({{Lit::make(1, false), Lit::make(1, true)}}),
	                std::invalid_argument);
	CHECK_THROWS_AS(make_formula({{}}), std::invalid_argument);
}

TEST_CASE("subset and without preserve ids")
{
	Formula f = oracle::mk({{-1, 2}, {-2, 3}, {-1, 3}});
	Formula g = f.without(1);
	CHECK(g.m() == 2);
	CHECK(g.find(1) == nullptr);
	CHECK(g.find(0) != nullptr);
	CHECK(g.n == f.n);
	Formula h = f.subset({2, 0});
	CHECK(h.m() == 2);
	CHECK(h.clauses[0].id == 0);
	CHECK(h.clauses[1].id == 2);
	CHECK_THROWS_AS(f.subset({7}), std::invalid_argument);
}

TEST_CASE("formula kind detection")
{
	CHECK(oracle::mk({{-1, 2}, {1, 2}}).kind() == FormulaKind::TwoCnf);
	CHECK(oracle::mk({{-1, -2, 3}}).kind() == FormulaKind::Horn);
	CHECK(oracle::mk({{-1, 2}, {-2, 3}}).kind() == FormulaKind::Both);
	CHECK(oracle::mk({{1, 2, 3}}).kind() == FormulaKind::None);
	CHECK(oracle::mk({{1, 2}, {-1, -2, -3}}).kind() == FormulaKind::None);
}

TEST_CASE("unit elimination: weights, origins, fresh variables")
{
	Formula f = oracle::mk({{1}, {-1, 2}});
	WeightedFormula wf = eliminate_units(f);
	CHECK(wf.base.m() == 3);
	CHECK(wf.base.n == f.n + 1);
	int native = 0, halves = 0;
	for (const Clause &c : wf.base.clauses) {
		if (wf.introduced(c.id)) {
			++halves;
			CHECK(wf.weight_of(c.id) == 1);
			CHECK(wf.origin.at(c.id) == Lit::make(1, false));
			CHECK(c.binary());
		} else {
			++native;
			CHECK(wf.weight_of(c.id) == 2);
		}
	}
	CHECK(native == 1);
	CHECK(halves == 2);

	// both halves together weigh one original clause
	std::vector<int> all = wf.base.ids();
	CHECK(subset_size_half_units(wf, all) == 4);
	CHECK_THROWS_AS(subset_size_half_units(wf, {99}), std::invalid_argument);
}

TEST_CASE("dimacs parse: happy path and warnings")
{
	ParseResult pr = parse_dimacs("c comment\np cnf 3 3\n1 -2 0\n3 0\n1 -2 0\n");
	CHECK(pr.formula.m() == 2);
	CHECK(pr.formula.n == 3);
	CHECK(pr.warnings.size() == 1); // duplicate clause
	CHECK(pr.position_to_id.size() == 3);
	CHECK(pr.position_to_id[0] == pr.position_to_id[2]);

	// header count mismatch is a warning, not an error
	ParseResult pr2 = parse_dimacs("p cnf 2 5\n1 0\n");
	CHECK(pr2.formula.m() == 1);
	CHECK(!pr2.warnings.empty());
}

TEST_CASE("dimacs parse errors carry line numbers")
{
	auto line_of = [](const std::string &text) {
		try {
			parse_dimacs(text);
		} catch (const ParseError &e) {
			return e.line;
		}
		return -1;
	};
	CHECK(line_of("1 0\n") == 1);                      // missing header
	CHECK(line_of("p cnf 2 1\np cnf 2 1\n1 0\n") == 2); // duplicate header
	CHECK(line_of("p cnf 2 1\n5 0\n") == 2);            // out of range
	CHECK(line_of("p cnf 2 1\n1 2\n") == 2);            // unterminated
	CHECK(line_of("p cnf 2 1\n0\n") == 2);              // empty clause
	CHECK(line_of("p cnf 2 1\n1 -1 0\n") == 2);         // tautology
	CHECK(line_of("p cnf 2 1\n1 x 0\n") == 2);          // garbage token
	CHECK(line_of("p cnf 2 1\n1 0\n") == -1);
}

TEST_CASE("dimacs emit is canonical and round-trips")
{
	Formula f = oracle::mk({{-2, 3}, {-1, 2}});
	std::string text = emit_dimacs(f);
	ParseResult pr = parse_dimacs(text);
	CHECK(pr.formula == f);
	CHECK(emit_dimacs(pr.formula) == text);
}
