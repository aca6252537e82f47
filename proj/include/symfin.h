/* symfin - symbol and fingerprint invariants of rigid operator labels.
 *
 * All strings returned through char** out-parameters are heap-allocated and
 * must be released with symfin_string_free. Functions return SYMFIN_OK on
 * success; on SYMFIN_EINVAL an error message is placed in *err when err is
 * non-NULL. SYMFIN_EVIOLATION signals a failed verification run whose report
 * was still produced.
 */
#ifndef SYMFIN_H
#define SYMFIN_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SYMFIN_OK = 0,
  SYMFIN_EINVAL = 1,
  SYMFIN_EVIOLATION = 2,
  SYMFIN_EINTERNAL = 3
} symfin_status;

typedef struct symfin_pair symfin_pair;

const char* symfin_version(void);
void symfin_string_free(char* s);

/* Pair records: {"theory":"B","n":2,"lambda1":[2,2,1],"lambda2":[]} */
symfin_status symfin_pair_parse(const char* json, symfin_pair** out, char** err);
void symfin_pair_free(symfin_pair* p);

/* Options objects are JSON and accepted everywhere they appear below:
 * {"sign_rule":"a"|"b"|"c", "orientation":"rows"|"columns",
 *  "enable_teto":bool, "max_rank":N, "include_d_self":bool}
 * Every field is optional; NULL means all defaults. */

/* Full invariant record of one pair (symbol, fingerprint, trace digest). */
symfin_status symfin_pair_record(const symfin_pair* p, const char* options,
                                 char** out, char** err);
/* Worked-table rendering of the trace: CSV columns i,lambda_i,mu_i,(i),(ii),(iii),tau */
symfin_status symfin_pair_trace_csv(const symfin_pair* p, const char* options,
                                    char** out, char** err);
/* Human rendering: interleaved symbol, trace table, fingerprint. */
symfin_status symfin_pair_pretty(const symfin_pair* p, const char* options,
                                 char** out, char** err);

/* One JSONL line per pair / record, ranks 1..max_rank. family is 'B','C','D'. */
symfin_status symfin_enumerate(char family, int max_rank, char** out, char** err);
symfin_status symfin_catalog(char family, int max_rank, const char* options,
                             char** out, char** err);

/* Groups pairs by symbol and checks fingerprint uniformity. Returns
 * SYMFIN_EVIOLATION when a class mixes fingerprints. */
symfin_status symfin_verify_forward(char family, int max_rank, const char* options,
                                    char** report, char** err);
/* Report-only converse probe; never returns SYMFIN_EVIOLATION. */
symfin_status symfin_verify_converse(char family, int max_rank, const char* options,
                                     char** report, char** err);

/* Joins the B and C catalogs of one rank on equal symbols. */
symfin_status symfin_duality_match(int rank, const char* options, char** report,
                                   char** err);

/* Move sweep over all pairs up to max_rank; JSONL, one applied move per line. */
symfin_status symfin_move_sweep(char family, int max_rank, const char* options,
                                char** out, char** err);

/* Oracle and property suites; SYMFIN_EVIOLATION on any failed check. */
symfin_status symfin_selftest(const char* options, char** report, char** err);

#ifdef __cplusplus
}
#endif

#endif /* SYMFIN_H */
