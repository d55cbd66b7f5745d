/* Copyright 2026 The discord_lab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to discord_lab: quantum discord, global quantum discord and
 * monogamy audits for small multi-qubit states.
 *
 * Every call returns a dl_status. On failure, dl_last_error() describes the
 * problem; the message is per thread and stays valid until the next call on
 * that thread. Strings returned through char** are owned by the caller and
 * released with dl_string_free. Handles are immutable once created and may be
 * shared between threads. */

#ifndef DISCORD_LAB_H_
#define DISCORD_LAB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(DISCORD_LAB_BUILDING)
#define DL_API __declspec(dllexport)
#else
#define DL_API __declspec(dllimport)
#endif
#else
#define DL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum dl_status {
    DL_OK = 0,
    DL_ERROR_ARGUMENT = 1,   /* malformed input or request */
    DL_ERROR_VALIDATION = 2, /* not a density matrix */
    DL_ERROR_LAYOUT = 3,     /* dimensions do not fit together */
    DL_ERROR_SYMMETRY = 4,   /* matrix is not Hermitian */
    DL_ERROR_CAPACITY = 5,   /* beyond six qubits / dimension 64 */
    DL_ERROR_EVALUATION = 6, /* objective produced a non-finite value */
    DL_ERROR_IO = 7,         /* file could not be read or written */
    DL_ERROR_INTERNAL = 8
} dl_status;

typedef struct dl_state dl_state;
typedef struct dl_sweep dl_sweep;

typedef struct dl_optimizer_config {
    uint32_t grid_theta;
    uint32_t grid_phi;
    uint32_t simplex_iterations;
    uint32_t starts;
    double tolerance;
    uint64_t seed;
} dl_optimizer_config;

/* What dl_compute evaluates.
 *
 * quantity: entropy, mutual_info, conditional_entropy, d_phi,
 *   one_sided_discord, symmetric_discord, block_discord, global_discord.
 * cut: subsystem labels, "AB:C" for a bipartition or "AB" for a set; NULL
 *   means the whole state (two-subsystem states default to "A:B" where a
 *   bipartition is required).
 *   - entropy: S of the named set.
 *   - mutual_info: multipartite without a colon, bipartite across a cut.
 *   - conditional_entropy: S(left | right).
 *   - one_sided_discord: D(left | right), measuring `measured` (default right).
 * measured: labels of the measured side for one_sided_discord.
 * joint: nonzero to measure each block with one joint basis.
 * theta, phi: per-subsystem angles for d_phi (num_angles entries each; phi may
 *   be NULL for all zeros). */
typedef struct dl_request {
    const char* quantity;
    const char* cut;
    const char* measured;
    int joint;
    const double* theta;
    const double* phi;
    size_t num_angles;
} dl_request;

typedef struct dl_sweep_row {
    double lambda;
    double gqd;
    double d_ab;
    double d_ac;
    double d_bc;
    double pairwise_sum;
    double residual;
    int holds;
    double argmin_theta_gqd;
    double argmin_phi_gqd;
} dl_sweep_row;

DL_API const char* dl_version(void);
DL_API const char* dl_last_error(void);
DL_API const char* dl_status_name(dl_status status);
DL_API void dl_string_free(char* s);

DL_API void dl_optimizer_config_default(dl_optimizer_config* config);

/* States from the JSON state-spec format; see README. */
DL_API dl_status dl_state_from_json(const char* spec_json, dl_state** out);
DL_API dl_status dl_state_from_file(const char* path, dl_state** out);
DL_API void dl_state_free(dl_state* state);
DL_API dl_status dl_state_num_subsystems(const dl_state* state, size_t* out);
DL_API dl_status dl_state_dimension(const dl_state* state, size_t* out);
/* Row-major entries, 2 * dimension^2 doubles (re, im interleaved). */
DL_API dl_status dl_state_entries(const dl_state* state, double* out, size_t capacity);

/* config may be NULL for defaults. Results are JSON documents. */
DL_API dl_status dl_compute(const dl_state* state, const dl_request* request, const dl_optimizer_config* config,
                            char** json_out);
DL_API dl_status dl_audit(const dl_state* state, int joint, const dl_optimizer_config* config, char** json_out);
DL_API dl_status dl_residual(const dl_state* state, int permutation_min, const dl_optimizer_config* config,
                             double* out);
/* Full loss of correlation and its telescoping cut terms for the product
 * scheme with the given angles (one pair per subsystem; phi may be NULL). */
DL_API dl_status dl_decompose(const dl_state* state, const double* theta, const double* phi, size_t num_angles,
                              char** json_out);

/* W-GHZ lambda sweep with step in (0, 0.5]. threads = 0 uses all cores. */
DL_API dl_status dl_sweep_run(double step, const dl_optimizer_config* config, unsigned threads, dl_sweep** out);
DL_API void dl_sweep_free(dl_sweep* sweep);
DL_API size_t dl_sweep_size(const dl_sweep* sweep);
DL_API dl_status dl_sweep_row_at(const dl_sweep* sweep, size_t index, dl_sweep_row* out);
DL_API dl_status dl_sweep_csv(const dl_sweep* sweep, char** csv_out);
DL_API dl_status dl_sweep_write_csv(const dl_sweep* sweep, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* DISCORD_LAB_H_ */
