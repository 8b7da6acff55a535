#ifndef VLINK_C_H
#define VLINK_C_H

/* C interface to the Gauss-diagram library. All functions return VL_OK on
 * success; on VL_ERR the message is available from vl_last_error() until the
 * next call on the same thread. Strings returned through char** out
 * parameters are heap-allocated and must be released with vl_string_free. */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct vl_diagram vl_diagram;

typedef enum vl_status { VL_OK = 0, VL_ERR = 1 } vl_status;

const char* vl_last_error(void);
void vl_string_free(char* s);
void vl_diagram_free(vl_diagram* d);

/* Gauss code I/O. One line per circle; token = (O|U) id (+|-); "()" marks a
 * chord-free circle; '#' starts a comment line. */
vl_status vl_parse(const char* text, vl_diagram** out);
vl_status vl_serialize(const vl_diagram* d, char** out);
vl_status vl_canonical_key(const vl_diagram* d, char** out);
vl_status vl_circle_count(const vl_diagram* d, int* out);
vl_status vl_chord_count(const vl_diagram* d, int* out);
vl_status vl_isomorphic(const vl_diagram* a, const vl_diagram* b, int* out);

/* Classifying invariants as JSON. */
vl_status vl_invariants_json(const vl_diagram* d, char** out);

/* Equivalence decisions. result is 1/0; reason (optional) receives the first
 * differing invariant when the answer is negative. */
vl_status vl_xi_equivalent(const vl_diagram* a, const vl_diagram* b, int* result, char** reason);
vl_status vl_forbidden_equivalent(const vl_diagram* a, const vl_diagram* b, int* result,
                                  char** reason);

/* Canonical normal form of the diagram's equivalence class. */
vl_status vl_normalize(const vl_diagram* d, vl_diagram** out);

/* Normal form from an invariant profile, in the JSON shape produced by
 * vl_invariants_json. */
vl_status vl_make_normal(const char* profile_json, vl_diagram** out);

/* Move application. spec follows the move grammar, e.g. "xi:c=1,i=0",
 * "r1+:c=1,g=0,s=+,o=st", "r2-:x=1,y=2", "r3:p1=1:0,p2=1:2,p3=2:1", or a
 * macro such as "macro:shell-slide:c=1,i=0,d=f". */
vl_status vl_apply(const vl_diagram* d, const char* spec, vl_diagram** out);

/* Expansion of a macro spec into a JSON array of primitive move specs. */
vl_status vl_expand_macro(const vl_diagram* d, const char* spec, char** moves_json);

/* JSON array of every applicable move spec of the given kinds
 * (comma-separated subset of xi,r1+,r1-,r2+,r2-,r3). Additions are pruned
 * above max_chords. */
vl_status vl_enumerate_moves(const vl_diagram* d, const char* kinds, int max_chords, char** out);

/* Seeded random walk; out receives the result, moves_json the applied specs. */
vl_status vl_scramble(const vl_diagram* d, int steps, unsigned long long seed, const char* kinds,
                      int max_chords, vl_diagram** out, char** moves_json);

/* Bounded breadth-first connectivity search. found is 1/0; out receives
 * {"found":..,"visited":..,"exhausted":..,"path":[...]}. */
vl_status vl_bfs(const vl_diagram* a, const vl_diagram* b, const char* kinds, int max_chords,
                 int max_states, int* found, char** out);

/* Connectivity survey over all two-circle diagrams with at most max_chords
 * chords, grouped by invariant profile. */
vl_status vl_census(int max_chords, int add_budget, int max_states, char** out);

/* Word interface: words are space-separated letters A,B,C,D,Ah,Bh,Ch,Dh with
 * an optional sign suffix (+|-) and optional exponent ^-1. */
vl_status vl_word_normalize(const char* word, char** out);
vl_status vl_realize_word(const char* word, int k, int l, vl_diagram** out);

#ifdef __cplusplus
}
#endif

#endif /* VLINK_C_H */
