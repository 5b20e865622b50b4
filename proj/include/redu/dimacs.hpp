#pragma once

#include <string>
#include <vector>

#include "redu/types.hpp"

namespace redu {

struct ParseResult {
	Formula formula;
	// warnings[i] describes a non-fatal oddity (duplicate clause, header
	// mismatch, ...). Parsing still succeeds.
	std::vector<std::string> warnings;
	// position_to_id[k] = canonical clause id of the k-th clause in the input.
	std::vector<int> position_to_id;
};

struct ParseError {
	int line = 0;
	std::string message;
};

// Parse DIMACS CNF. Grammar: optional 'c' comment lines, one 'p cnf <n> <m>'
// header, then whitespace-separated literals with 0 terminating each clause.
// Errors (messages carry line numbers): missing/duplicate header, literal out
// of range, clause not terminated, empty clause, tautological clause,
// trailing garbage.
// Throws ParseError on failure.
ParseResult parse_dimacs(const std::string &text);

// Emit canonical DIMACS: header, then clauses in canonical order, one per line.
std::string emit_dimacs(const Formula &f);

} // namespace redu
