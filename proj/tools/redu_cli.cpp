// command line front end; talks to the core only through the C API
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "redu.h"

namespace {

constexpr int EXIT_ANSWER_NO = 1;
constexpr int EXIT_EXHAUSTED = 2;
constexpr int EXIT_USAGE = 64;
constexpr int EXIT_DATA = 65;

std::string read_input(const std::string &path)
{
	if (path == "-") {
		std::ostringstream ss;
		ss << std::cin.rdbuf();
		return ss.str();
	}
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cerr << "cannot open " << path << "\n";
		std::exit(EXIT_DATA);
	}
	std::ostringstream ss;
	ss << in.rdbuf();
	return ss.str();
}

void write_output(const std::string &path, const std::string &text)
{
	if (path.empty() || path == "-") {
		std::cout << text;
		return;
	}
	std::ofstream out(path, std::ios::binary);
	if (!out) {
		std::cerr << "cannot write " << path << "\n";
		std::exit(EXIT_DATA);
	}
	out << text;
}

struct Owned {
	char *p = nullptr;
	~Owned() { redu_string_free(p); }
	std::string str() const { return p ? std::string(p) : std::string(); }
};

struct FormulaGuard {
	redu_formula *f = nullptr;
	~FormulaGuard() { redu_formula_free(f); }
};

redu_formula *load(const std::string &path, int mode, bool warn)
{
	std::string text = read_input(path);
	redu_formula *f = nullptr;
	Owned err;
	redu_status st = redu_parse(text.c_str(), &f, &err.p);
	if (st != REDU_OK) {
		std::cerr << "parse error: " << err.str() << "\n";
		std::exit(EXIT_DATA);
	}
	if (mode != 0 && redu_set_mode(f, mode) != REDU_OK) {
		std::cerr << "formula does not fit the requested fragment\n";
		redu_formula_free(f);
		std::exit(EXIT_DATA);
	}
	if (warn) {
		Owned w;
		if (redu_warnings_json(f, &w.p) == REDU_OK) {
			auto j = nlohmann::json::parse(w.str());
			for (const auto &msg : j)
				std::cerr << "warning: " << msg.get<std::string>() << "\n";
		}
	}
	return f;
}

int fail(redu_status st)
{
	switch (st) {
	case REDU_EEXHAUSTED:
		std::cerr << "search budget exhausted\n";
		return EXIT_EXHAUSTED;
	case REDU_EINVAL:
		std::cerr << "invalid request for this formula\n";
		return EXIT_USAGE;
	default:
		std::cerr << "internal error (status " << (int)st << ")\n";
		return EXIT_DATA;
	}
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"redundancy analysis for 2CNF and Horn formulae"};
	app.require_subcommand(1);

	std::string input = "-", output, dot_path, sidecar_path;
	int mode = 0;
	bool exact = false;
	redu_budget budget;
	redu_budget_default(&budget);

	auto add_common = [&](CLI::App *sub, bool with_budget) {
		sub->add_option("input", input, "DIMACS file ('-' for stdin)");
		sub->add_option("-o,--output", output, "output file (default stdout)");
		sub->add_flag_callback("--force-horn", [&] { mode = 2; },
		                       "analyze as a Horn formula");
		sub->add_flag_callback("--force-2cnf", [&] { mode = 1; },
		                       "analyze as a 2CNF formula");
		if (with_budget) {
			sub->add_flag("--exact", exact, "allow exact search fallback");
			sub->add_flag_callback("--exact-force", [&] {
				exact = true;
				budget.max_clauses = 1 << 20;
			}, "exact search with no clause-count cap");
			sub->add_option("--budget-nodes", budget.max_nodes, "search node cap");
			sub->add_option("--budget-ms", budget.time_cap_ms, "search time cap (ms)");
			sub->add_option("--budget-clauses", budget.max_clauses,
			                "max clauses for exact search");
		}
	};

	bool show_map = false;
	auto *classify = app.add_subcommand("classify", "fragment, regime, implied literals");
	add_common(classify, false);
	classify->add_flag("--map", show_map, "also print the input-position to id map");

	auto *redundant = app.add_subcommand("redundant", "per-clause redundancy verdicts");
	add_common(redundant, false);

	bool unique_only = false;
	auto *ies = app.add_subcommand("ies", "irredundant equivalent subset report");
	add_common(ies, true);
	ies->add_option("--dot", dot_path, "also write the implication graph as DOT");
	ies->add_flag("--unique-only", unique_only, "fail when the subset is not unique");

	auto *ies_size = app.add_subcommand("ies-size", "minimum equivalent subset size");
	add_common(ies_size, true);

	int clause = 0;
	bool want_all = false, want_some = false;
	auto *in_ies = app.add_subcommand("in-ies", "is a clause in all/some such subsets");
	add_common(in_ies, true);
	in_ies->add_option("--clause", clause, "1-based clause id")->required();
	in_ies->add_flag("--all", want_all, "membership in every subset");
	in_ies->add_flag("--some", want_some, "membership in some subset");

	auto *prune = app.add_subcommand("prune", "emit a pruned equivalent subset");
	add_common(prune, false);

	auto *oracle = app.add_subcommand("oracle", "exact enumeration answers (small inputs)");
	add_common(oracle, true);

	std::string reduction;
	unsigned seed = 1;
	int size = 6;
	auto *gen = app.add_subcommand("gen", "generate a hard instance");
	gen->add_option("--reduction", reduction, "reduction name")->required();
	gen->add_option("--seed", seed, "random seed");
	gen->add_option("--size", size, "source object size cap");
	gen->add_option("-o,--output", output, "output file (default stdout)");
	gen->add_option("--sidecar", sidecar_path, "write truth sidecar JSON here");

	CLI11_PARSE(app, argc, argv);

	if (gen->parsed()) {
		Owned dimacs, sidecar;
		redu_status st = redu_gen(reduction.c_str(), seed, size, &dimacs.p, &sidecar.p);
		if (st != REDU_OK)
			return fail(st);
		write_output(output, dimacs.str());
		if (!sidecar_path.empty())
			write_output(sidecar_path, sidecar.str());
		return 0;
	}

	FormulaGuard fg;
	fg.f = load(input, mode, true);
	Owned out;
	redu_status st = REDU_OK;

	if (classify->parsed()) {
		st = redu_classify_json(fg.f, &out.p);
		if (st == REDU_OK && show_map) {
			Owned m;
			redu_status ms = redu_position_map_json(fg.f, &m.p);
			if (ms != REDU_OK)
				return fail(ms);
			auto j = nlohmann::ordered_json::parse(out.str());
			j["map"] = nlohmann::json::parse(m.str());
			write_output(output, j.dump(2) + "\n");
			return 0;
		}
	} else if (redundant->parsed()) {
		st = redu_redundancy_json(fg.f, &out.p);
	} else if (ies->parsed()) {
		st = redu_ies_report_json(fg.f, &budget, exact, &out.p);
		if (st == REDU_OK && unique_only &&
		    !nlohmann::json::parse(out.str())["unique"].get<bool>()) {
			std::cerr << "formula has more than one irredundant equivalent subset\n";
			return EXIT_ANSWER_NO;
		}
		if (st == REDU_OK && !dot_path.empty()) {
			Owned dot;
			redu_status ds = redu_graph_dot(fg.f, &dot.p);
			if (ds != REDU_OK)
				return fail(ds);
			write_output(dot_path, dot.str());
		}
	} else if (ies_size->parsed()) {
		st = redu_ies_report_json(fg.f, &budget, exact, &out.p);
		if (st == REDU_OK) {
			auto j = nlohmann::json::parse(out.str());
			if (j["min_size"].is_null()) {
				std::cerr << "minimum size not determined";
				if (!exact)
					std::cerr << " (rerun with --exact)";
				std::cerr << "\n";
				return EXIT_EXHAUSTED;
			}
			write_output(output, j["min_size"].get<std::string>() + "\n");
			return 0;
		}
	} else if (in_ies->parsed()) {
		if (want_all == want_some) {
			std::cerr << "pass exactly one of --all / --some\n";
			return EXIT_USAGE;
		}
		int answer = 0;
		st = redu_in_ies(fg.f, clause, want_all ? 1 : 0, &budget, exact, &answer);
		if (st == REDU_OK) {
			write_output(output, answer ? "yes\n" : "no\n");
			return answer ? 0 : EXIT_ANSWER_NO;
		}
	} else if (prune->parsed()) {
		st = redu_prune_dimacs(fg.f, &out.p);
	} else if (oracle->parsed()) {
		st = redu_oracle_json(fg.f, &budget, &out.p);
	}

	if (st != REDU_OK)
		return fail(st);
	write_output(output, out.str());
	return 0;
}
