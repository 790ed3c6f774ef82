#ifndef ELLBENCH_H
#define ELLBENCH_H

/* C interface to the elliptic optimal-control benchmark library.
 *
 * All functions return ELLBENCH_OK (0) on success or a nonzero error code;
 * ellbench_last_error() gives a thread-local description of the last failure.
 * Objects returned through out-parameters are owned by the caller and freed
 * with the matching *_free function. Strings returned by the document
 * generators are heap-allocated and released with ellbench_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

#define ELLBENCH_OK 0
#define ELLBENCH_EINVAL 1      /* invalid argument / malformed config */
#define ELLBENCH_ECONSTRAINT 2 /* violated data or geometry invariant */
#define ELLBENCH_EINTERNAL 3   /* internal consistency check failed */

/* domains */
#define ELLBENCH_DOMAIN_RECTANGLE 0
#define ELLBENCH_DOMAIN_ANNULUS 1
#define ELLBENCH_DOMAIN_SHELL 2

/* fields and boundary-condition variants */
#define ELLBENCH_FIELD_STATE 0
#define ELLBENCH_FIELD_ADJOINT 1
#define ELLBENCH_BC_DIRICHLET 0
#define ELLBENCH_BC_ROBIN 1

/* control problems */
#define ELLBENCH_PROBLEM_G 0
#define ELLBENCH_PROBLEM_Q 1
#define ELLBENCH_PROBLEM_B 2
#define ELLBENCH_PROBLEM_GQ 3

typedef struct ellbench_problem_s ellbench_problem;
typedef struct ellbench_profile_s ellbench_profile;

const char* ellbench_last_error(void);

/* dims: {x0, y0} for the rectangle, {r1, r2} otherwise.
 * data: {g, q, b, z_d}. reg: {M1, M2, M3, M4, M5}. */
int ellbench_problem_create(int domain, const double dims[2], const double data[4],
                            const double reg[5], ellbench_problem** out);
/* JSON descriptor: {"domain": {...}, "data": {...}, "regularization": {...}};
 * unknown keys are rejected. */
int ellbench_problem_parse(const char* json_text, ellbench_problem** out);
void ellbench_problem_free(ellbench_problem* p);

int ellbench_measures(const ellbench_problem* p, double* volume, double* gamma1,
                      double* gamma2);

/* Closed-form fields. alpha is ignored for the Dirichlet variant. */
int ellbench_field(const ellbench_problem* p, int field, int bc, double alpha,
                   ellbench_profile** out);
int ellbench_profile_interval(const ellbench_profile* f, double* lo, double* hi);
int ellbench_profile_eval(const ellbench_profile* f, double coord, double* value,
                          double* derivative);
int ellbench_profile_constant_count(const ellbench_profile* f);
int ellbench_profile_constant(const ellbench_profile* f, int index, char name[16],
                              double* value);
void ellbench_profile_free(ellbench_profile* f);

/* Misfit-expansion coefficients k1..k6 and the half squared misfit. */
int ellbench_coefficients(const ellbench_problem* p, int bc, double alpha, double k[6]);
int ellbench_half_squared_misfit(const ellbench_problem* p, int bc, double alpha,
                                 double* out);

/* Analytic optimizer and optimal value; control[1] is used by PROBLEM_GQ. */
int ellbench_optimal(const ellbench_problem* p, int problem, int bc, double alpha,
                     double control[2], double* cost);
int ellbench_cost(const ellbench_problem* p, int problem, int bc, double alpha,
                  const double control[2], double* out);

/* Tabulated alpha->infinity limit constant for a sweep quantity name
 * (state_l2, adjoint_l2, ctrl_g, ctrl_q, ctrl_b, ctrl_gq_g, ctrl_gq_q,
 * cost_J1..cost_J4). */
int ellbench_limit_constant(const ellbench_problem* p, const char* quantity, double* out);

/* Document generators used by the CLI; free results with
 * ellbench_string_free. alpha_grid = {start, stop, points}. */
char* ellbench_solve_csv(const ellbench_problem* p, double alpha, int n, int* err);
char* ellbench_coeffs_json(const ellbench_problem* p, double alpha, int* err);
char* ellbench_optimal_json(const ellbench_problem* p, int problem, int bc, double alpha,
                            int* err);
char* ellbench_sweep_csv(const ellbench_problem* p, const char* quantity,
                         const double alpha_grid[3], int* err);
char* ellbench_limits_json(const ellbench_problem* p, const double alpha_grid[3],
                           double limit_tol, int* err);
/* Full oracle suite; *status is 0 when every row passes, 1 otherwise.
 * Returns the row CSV; the human-readable table goes to *table (optional). */
char* ellbench_verify_rows(const ellbench_problem* p, const double alpha_grid[3], int n,
                           char** table, int* status, int* err);
char* ellbench_report_aggregate(const char* directory, char** summary_json, int* err);

void ellbench_string_free(char* s);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* ELLBENCH_H */
