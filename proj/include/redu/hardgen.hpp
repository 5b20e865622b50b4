#pragma once

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "redu/types.hpp"

namespace redu {

// Source-side objects for the hardness reductions. Node indices are 0-based.
struct Digraph {
	int n = 0;
	std::vector<std::pair<int, int>> edges;
};

struct UGraph {
	int n = 0;
	std::vector<std::pair<int, int>> edges;
};

struct Sat3Clause {
	// literal = +-(var+1), up to 3 per clause
	std::vector<int> lits;
};

struct Sat3Instance {
	int nvars = 0;
	std::vector<Sat3Clause> clauses;
};

// Independent brute-force answers for the source problems.
bool bf_simple_cycle_through(const Digraph &g, int x, int y);
bool bf_simple_path_through_edge(const Digraph &g, int x, int y, int edge_index);
bool bf_disjoint_paths(const Digraph &g, int s1, int t1, int s2, int t2);
int bf_min_equivalent_subgraph(const Digraph &g); // g must be strongly connected
int bf_min_vertex_cover(const UGraph &g);
bool bf_sat3(const Sat3Instance &inst);
bool reachable(const Digraph &g, int from, int to);
bool strongly_connected(const Digraph &g);

struct HardInstance {
	Formula formula;
	int focus_id = -1;      // clause the question is about (-1 when none)
	int k_half_units = -1;  // size bound in half-units (-1 when none)
	bool truth = false;     // brute-force source answer
	int truth_value = -1;   // numeric source answer where one exists
	std::string reduction;  // generator name
	std::string sidecar_json();
};

// "Is there an I.E.S. of size <= k?" from "is there a simple cycle through
// x and y" (x, y mutually reachable; nodes not co-reachable with x dropped).
HardInstance gen_size_cyclic_implied(const Digraph &g, int x, int y);

// "Minimum I.E.S. size" from "minimum equivalent subgraph of a strongly
// connected digraph" (one clause per edge).
HardInstance gen_size_strongly_connected(const Digraph &g);

// "Is the focus clause in some I.E.S. of an inconsistent formula?" from
// "is there a simple path from x to y through the given edge".
HardInstance gen_presence_inconsistent(const Digraph &g, int x, int y, int edge_index);

// Same question, from vertex-disjoint paths (s1 ~> t1 and s2 ~> t2 sharing
// no vertex), encoded as a simple path through a bridge edge t1 -> s2.
HardInstance gen_presence_implied_cyclic(const Digraph &g, int s1, int t1, int s2, int t2);

// Same question, no-implied strongly-connected regime, from 3SAT.
HardInstance gen_presence_3sat(const Sat3Instance &inst);

// "Minimum inconsistent Horn subset size" from minimum vertex cover:
// the answer is edges + 1 + cover in clauses.
HardInstance gen_horn_vertex_cover(const UGraph &g);

// Seeded samplers used by the CLI and by cross-validation tests.
Digraph sample_digraph(std::mt19937 &rng, int max_nodes, double edge_prob);
UGraph sample_ugraph(std::mt19937 &rng, int max_nodes, double edge_prob);
Sat3Instance sample_sat3(std::mt19937 &rng, int max_vars, int max_clauses);

} // namespace redu
