#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace redu {

// A literal over variables 1..n. Encoded as 2*(var-1) + (negated ? 1 : 0),
// so the two polarities of a variable are adjacent and a graph over literals
// can use plain vectors.
class Lit {
  public:
	Lit() : code_(-1) {}
	static Lit make(int var, bool negated) { return Lit((var - 1) * 2 + (negated ? 1 : 0)); }
	static Lit from_code(int code) { return Lit(code); }
	static Lit from_dimacs(int x) { return make(x < 0 ? -x : x, x < 0); }

	int var() const { return code_ / 2 + 1; }
	bool negated() const { return code_ & 1; }
	int code() const { return code_; }
	bool valid() const { return code_ >= 0; }
	Lit operator~() const { return Lit(code_ ^ 1); }
	int to_dimacs() const { return negated() ? -var() : var(); }

	bool operator==(const Lit &o) const { return code_ == o.code_; }
	bool operator!=(const Lit &o) const { return code_ != o.code_; }
	bool operator<(const Lit &o) const { return code_ < o.code_; }

  private:
	explicit Lit(int code) : code_(code) {}
	int code_;
};

// A clause: sorted, duplicate-free literals, never empty, never tautological.
// `id` is the stable identifier of the clause within its Formula.
struct Clause {
	std::vector<Lit> lits;
	int id = -1;

	bool unary() const { return lits.size() == 1; }
	bool binary() const { return lits.size() == 2; }
	bool contains(Lit l) const
	{
		for (Lit x : lits)
			if (x == l)
				return true;
		return false;
	}
	bool same_lits(const Clause &o) const { return lits == o.lits; }
};

enum class FormulaKind { TwoCnf, Horn, Both, None };

// A set of clauses. Clauses are kept in canonical (sorted) order and carry
// stable ids; subsetting preserves ids so reports can refer back to the
// original formula.
struct Formula {
	std::vector<Clause> clauses;
	int n = 0; // variable count

	int m() const { return (int)clauses.size(); }
	bool empty() const { return clauses.empty(); }

	FormulaKind kind() const;
	bool is_two_cnf() const;
	bool is_horn() const;

	const Clause *find(int id) const
	{
		for (const Clause &c : clauses)
			if (c.id == id)
				return &c;
		return nullptr;
	}

	Formula without(int id) const;
	Formula subset(const std::vector<int> &ids) const;
	std::vector<int> ids() const;

	bool operator==(const Formula &o) const;
};

// Canonicalize literal list of a clause. Returns false for tautologies.
bool canonicalize_clause(std::vector<Lit> &lits);

// Build a canonical formula from raw clause literal lists. Duplicate clauses
// are merged; their original positions are reported through `dup_positions`.
// Tautological or empty clauses throw std::invalid_argument.
Formula make_formula(const std::vector<std::vector<Lit>> &raw, int n_hint = 0,
                     std::vector<int> *dup_positions = nullptr,
                     std::vector<int> *position_to_id = nullptr);

// A binary-only formula with per-clause weights in half-units: 2 for a native
// binary clause, 1 for each half of a pair introduced by unit elimination.
struct WeightedFormula {
	Formula base;
	std::vector<int> weight;              // indexed by position in base.clauses
	std::unordered_map<int, Lit> origin;  // introduced clause id -> source unit literal

	int weight_of(int clause_id) const;
	bool introduced(int clause_id) const { return origin.count(clause_id) != 0; }
};

// Replace every unit clause l with the equivalent pair {l v w, l v ~w} over a
// fresh variable w. Native clauses keep their ids; introduced clauses get ids
// past the original range.
WeightedFormula eliminate_units(const Formula &f);

// Sum of weights of the given clause ids; divide by 2 for original-clause units.
// Unknown ids throw std::invalid_argument.
int subset_size_half_units(const WeightedFormula &wf, const std::vector<int> &ids);

} // namespace redu
