#ifndef REDU_H
#define REDU_H

/* C interface to the redundancy analyzer. All analysis entry points take an
 * opaque formula handle and return a status code; string results are
 * heap-allocated and must be released with redu_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
	REDU_OK = 0,
	REDU_EPARSE = 1,     /* malformed DIMACS input */
	REDU_EINVAL = 2,     /* bad argument or unsupported fragment */
	REDU_EEXHAUSTED = 3, /* search budget hit before an answer */
	REDU_ENOMEM = 4,
	REDU_EINTERNAL = 5
} redu_status;

typedef struct redu_formula redu_formula;

typedef struct {
	int max_clauses;       /* refuse exact search on larger inputs */
	long long max_nodes;   /* search tree nodes */
	long long time_cap_ms;
} redu_budget;

/* Sensible defaults (24 clauses, 8e6 nodes, 60 s). */
void redu_budget_default(redu_budget *b);

/* Parse DIMACS CNF text. On failure returns REDU_EPARSE and, when error_msg
 * is non-null, stores a message there (free with redu_string_free). */
redu_status redu_parse(const char *dimacs, redu_formula **out, char **error_msg);
void redu_formula_free(redu_formula *f);
void redu_string_free(char *s);

/* Force the analysis fragment: 0 = auto (2CNF preferred), 1 = 2CNF, 2 = Horn.
 * REDU_EINVAL if the formula does not fit the requested fragment. */
redu_status redu_set_mode(redu_formula *f, int mode);

int redu_clause_count(const redu_formula *f);
int redu_variable_count(const redu_formula *f);

/* JSON array of parse warnings (possibly empty). */
redu_status redu_warnings_json(const redu_formula *f, char **out);

/* JSON array: entry k is the canonical 1-based clause id of the k-th input
 * clause (ids repeat when the input held duplicates). */
redu_status redu_position_map_json(const redu_formula *f, char **out);

/* JSON: fragment, regime, implied literals. */
redu_status redu_classify_json(const redu_formula *f, char **out);

/* JSON: per-clause redundant/irredundant verdicts. */
redu_status redu_redundancy_json(const redu_formula *f, char **out);

/* JSON: regime, cyclicity, uniqueness, minimum size, one concrete
 * irredundant equivalent subset, per-clause membership. */
redu_status redu_ies_report_json(const redu_formula *f, const redu_budget *b,
                                 int allow_exact, char **out);

/* Membership of one clause (1-based id). want_all != 0 asks "in every
 * irredundant equivalent subset", otherwise "in some". *answer is 0 or 1. */
redu_status redu_in_ies(const redu_formula *f, int clause, int want_all,
                        const redu_budget *b, int allow_exact, int *answer);

/* DIMACS text of a greedily pruned equivalent irredundant subset. */
redu_status redu_prune_dimacs(const redu_formula *f, char **out);

/* DOT rendering of the implication graph (2CNF only). */
redu_status redu_graph_dot(const redu_formula *f, char **out);

/* Exact (search-based) answers: minimum size, subset count, membership.
 * Intended for cross-checking the polynomial routines at small scale. */
redu_status redu_oracle_json(const redu_formula *f, const redu_budget *b, char **out);

/* Generate a hard instance from a randomly sampled source problem.
 * reduction is one of: size_cyclic_implied, size_strongly_connected,
 * presence_inconsistent, presence_implied_cyclic, presence_3sat,
 * horn_vertex_cover. size caps the sampled source object (nodes/variables).
 * sidecar receives JSON with the focus clause, bound and source answer. */
redu_status redu_gen(const char *reduction, unsigned seed, int size,
                     char **dimacs, char **sidecar);

#ifdef __cplusplus
}
#endif

#endif /* REDU_H */
