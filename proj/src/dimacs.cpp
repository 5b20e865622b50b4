#include "redu/dimacs.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace redu {

namespace {

struct Tok {
	std::string text;
	int line;
};

std::vector<Tok> tokenize(const std::string &text, std::vector<std::pair<int, std::string>> &comments)
{
	std::vector<Tok> toks;
	std::istringstream in(text);
	std::string line;
	int lineno = 0;
	while (std::getline(in, line)) {
		++lineno;
		size_t i = line.find_first_not_of(" \t\r");
		if (i == std::string::npos)
			continue;
		if (line[i] == 'c') {
			comments.emplace_back(lineno, line);
			continue;
		}
		std::istringstream ls(line);
		std::string w;
		while (ls >> w)
			toks.push_back({w, lineno});
	}
	return toks;
}

[[noreturn]] void fail(int line, const std::string &msg)
{
	throw ParseError{line, msg};
}

long as_int(const Tok &t)
{
	const char *s = t.text.c_str();
	char *end = nullptr;
	long v = std::strtol(s, &end, 10);
	if (end == s || *end != '\0')
		fail(t.line, "expected integer, got '" + t.text + "'");
	return v;
}

} // namespace

ParseResult parse_dimacs(const std::string &text)
{
	std::vector<std::pair<int, std::string>> comments;
	std::vector<Tok> toks = tokenize(text, comments);
	size_t i = 0;
	if (i >= toks.size() || toks[i].text != "p")
		fail(toks.empty() ? 1 : toks[0].line, "missing 'p cnf' header");
	int header_line = toks[i].line;
	if (i + 3 >= toks.size() || toks[i + 1].text != "cnf")
		fail(header_line, "malformed header, expected 'p cnf <vars> <clauses>'");
	long n = as_int(toks[i + 2]);
	long declared_m = as_int(toks[i + 3]);
	if (n < 0 || declared_m < 0)
		fail(header_line, "negative counts in header");
	i += 4;

	ParseResult res;
	std::vector<std::vector<Lit>> raw;
	std::vector<int> clause_lines;
	std::vector<Lit> cur;
	int cur_line = -1;
	for (; i < toks.size(); ++i) {
		if (toks[i].text == "p")
			fail(toks[i].line, "duplicate header");
		long v = as_int(toks[i]);
		if (v == 0) {
			if (cur.empty())
				fail(toks[i].line, "empty clause");
			raw.push_back(cur);
			clause_lines.push_back(cur_line);
			cur.clear();
			cur_line = -1;
			continue;
		}
		long var = v < 0 ? -v : v;
		if (var > n)
			fail(toks[i].line, "literal " + toks[i].text + " out of range (header says " +
			                       std::to_string(n) + " variables)");
		if (cur.empty())
			cur_line = toks[i].line;
		cur.push_back(Lit::from_dimacs((int)v));
	}
	if (!cur.empty())
		fail(cur_line, "clause not terminated by 0");
	if ((long)raw.size() != declared_m)
		res.warnings.push_back("header declares " + std::to_string(declared_m) +
		                       " clauses, found " + std::to_string(raw.size()));
	// reject tautologies with a line number before canonicalizing
	for (size_t k = 0; k < raw.size(); ++k) {
		std::vector<Lit> copy = raw[k];
		if (!canonicalize_clause(copy))
			fail(clause_lines[k], "tautological clause");
	}
	std::vector<int> dups;
	res.formula = make_formula(raw, (int)n, &dups, &res.position_to_id);
	for (int pos : dups)
		res.warnings.push_back("duplicate clause at line " + std::to_string(clause_lines[pos]) +
		                       " merged with clause id " + std::to_string(res.position_to_id[pos] + 1));
	return res;
}

std::string emit_dimacs(const Formula &f)
{
	std::ostringstream out;
	out << "p cnf " << f.n << ' ' << f.m() << '\n';
	for (const Clause &c : f.clauses) {
		for (Lit l : c.lits)
			out << l.to_dimacs() << ' ';
		out << "0\n";
	}
	return out.str();
}

} // namespace redu
