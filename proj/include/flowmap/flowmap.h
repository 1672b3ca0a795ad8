#ifndef FLOWMAP_H
#define FLOWMAP_H

/* C interface to the flow-map self-distillation library. All entry points
 * return fm_status; on failure fm_last_error() describes the most recent
 * error on the calling thread. Strings returned through char** out params
 * are heap-allocated and must be released with fm_string_free. */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fm_status {
    FM_OK = 0,
    FM_ERR_CONFIG = 2,  /* invalid config, arguments, or shapes */
    FM_ERR_NUMERIC = 3, /* non-finite values or failed numeric contract */
    FM_ERR_IO = 4,      /* missing, unreadable, or malformed files */
} fm_status;

typedef struct fm_config fm_config;
typedef struct fm_model fm_model;

/* Message for the last failure on this thread; empty string if none. The
 * pointer stays valid until the next failing call on the same thread. */
const char* fm_last_error(void);
void fm_string_free(char* s);

/* ---- configs ------------------------------------------------------- */

/* Built-in presets; list with fm_preset_names (comma-separated). */
fm_status fm_config_from_preset(const char* name, fm_config** out);
/* Flat JSON object; unknown keys are rejected naming the key. */
fm_status fm_config_from_json(const char* json, fm_config** out);
fm_status fm_config_from_file(const char* path, fm_config** out);
/* Sets one field from its JSON value or a bare string. Validation happens
 * on use (fm_train) or explicitly via fm_config_validate. */
fm_status fm_config_set(fm_config* cfg, const char* key, const char* value);
fm_status fm_config_validate(const fm_config* cfg);
/* Canonical JSON form (fixed key order, %.17g numbers). */
fm_status fm_config_to_json(const fm_config* cfg, char** out_json);
fm_status fm_preset_names(char** out_csv);
void fm_config_free(fm_config* cfg);

/* ---- training ------------------------------------------------------ */

/* Trains to completion, writing config.json, metrics.csv, and checkpoints
 * under the config's out_dir. resume_path may be NULL. On success
 * *out_checkpoint_path (optional) receives the final checkpoint path. */
fm_status fm_train(const fm_config* cfg, const char* resume_path, char** out_checkpoint_path);

/* ---- models -------------------------------------------------------- */

/* Loads the EMA weights of a checkpoint plus its sidecar config
 * ("<path>.json"); evaluation always runs on the EMA parameters. */
fm_status fm_model_load(const char* checkpoint_path, fm_model** out);
/* The closed-form linear-Gaussian flow map N(0,I) -> N(mean, sigma^2 I);
 * mean has d coordinates. */
fm_status fm_model_oracle(const double* mean, size_t d, double sigma, fm_model** out);
void fm_model_free(fm_model* m);
size_t fm_model_dim(const fm_model* m);

/* Few-step generation: n_samples rows of dim doubles written row-major to
 * out (caller-allocated, n_samples*dim entries). n_steps >= 1 composes the
 * map over the uniform grid. out_nonfinite (optional) counts rows that
 * ended non-finite. */
fm_status fm_model_sample(const fm_model* m, size_t n_samples, int n_steps, uint64_t seed,
                          double* out, size_t* out_nonfinite);

/* KL(target || model) by histogram quadrature against the run's dataset
 * (2D datasets only). */
fm_status fm_model_eval_kl(const fm_model* m, size_t n_samples, int n_steps, uint64_t seed,
                           double* out_kl);

/* RMS Lagrangian / Eulerian / semigroup residuals over the standard probe
 * grid plus the tangent-condition error at gap 1e-4. Any out pointer may be
 * NULL. */
fm_status fm_model_probe(const fm_model* m, double* lagrangian_rms, double* eulerian_rms,
                         double* semigroup_rms, double* tangent_err);

/* ---- diagnostics --------------------------------------------------- */

/* Central-finite-difference audit of the gradients of all four objectives
 * over n_nets random small nets; writes the worst relative error. */
fm_status fm_gradcheck(int n_nets, uint64_t seed, double* out_max_rel_err);

/* Greyscale 2D histogram heatmap of row-major [n,2] samples. */
fm_status fm_heatmap_png(const double* samples, size_t n, const char* path);

#ifdef __cplusplus
}
#endif

#endif /* FLOWMAP_H */
