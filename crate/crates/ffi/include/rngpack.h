/* C declarations for the rngpack_ffi shared library. */
#ifndef RNGPACK_H
#define RNGPACK_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RNGPACK_OK 0
#define RNGPACK_ERROR 1
#define RNGPACK_NULL 2
#define RNGPACK_SHORT_BUFFER 3

typedef struct RngHandle RngHandle;

int rngpack_create(const char *engine, RngHandle **out);
void rngpack_free(RngHandle *h);
int rngpack_duplicate(const RngHandle *h, RngHandle **out);
const char *rngpack_last_error(const RngHandle *h);

int rngpack_seed(RngHandle *h, uint64_t seed, const uint64_t *spawn_key, size_t key_len);
int rngpack_randomize(RngHandle *h);
int rngpack_jump(RngHandle *h, uint32_t k);
int rngpack_set_stream(RngHandle *h, const uint64_t *selector, size_t len);
int rngpack_pcg64_advance(RngHandle *h, uint64_t lo, uint64_t hi);
int rngpack_set_bitexact(RngHandle *h, int on);
int rngpack_set_full_mantissa(RngHandle *h, int on);

int rngpack_serialize(RngHandle *h, uint8_t *buf, size_t cap, size_t *len);
int rngpack_deserialize(const uint8_t *data, size_t len, RngHandle **out);

int rngpack_u01(RngHandle *h, double *out, size_t n);
int rngpack_u01_f32(RngHandle *h, float *out, size_t n);
int rngpack_unif(RngHandle *h, double *out, size_t n, double a, double b);
int rngpack_unif_f32(RngHandle *h, float *out, size_t n, float a, float b);
int rngpack_norm(RngHandle *h, double *out, size_t n);
int rngpack_norm_f32(RngHandle *h, float *out, size_t n);
int rngpack_exp(RngHandle *h, double *out, size_t n, double scale);
int rngpack_exp_f32(RngHandle *h, float *out, size_t n, float scale);
int rngpack_normal(RngHandle *h, double *out, size_t n, double mu, double sigma);
int rngpack_lognormal(RngHandle *h, double *out, size_t n, double mu, double sigma);
int rngpack_gamma(RngHandle *h, double *out, size_t n, double shape, double scale);
int rngpack_beta(RngHandle *h, double *out, size_t n, double a, double b);
int rngpack_chi2(RngHandle *h, double *out, size_t n, double nu);
int rngpack_t(RngHandle *h, double *out, size_t n, double nu);
int rngpack_f(RngHandle *h, double *out, size_t n, double nu1, double nu2);
int rngpack_gumbel(RngHandle *h, double *out, size_t n, double mu, double beta);
int rngpack_pareto(RngHandle *h, double *out, size_t n, double xm, double alpha);
int rngpack_weibull(RngHandle *h, double *out, size_t n, double k, double lambda);
int rngpack_skew_normal(RngHandle *h, double *out, size_t n, double mu, double sigma, double alpha);
int rngpack_gpd(RngHandle *h, double *out, size_t n, double mu, double sigma, double xi);
int rngpack_continuous(RngHandle *h, const char *name, const double *params, size_t n_params,
                       double *out, size_t n);
int rngpack_mvn(RngHandle *h, double *out, size_t n, size_t d, const double *mu,
                const double *sigma, int coordinate_major);

int rngpack_int(RngHandle *h, int32_t *out, size_t n, int32_t m, int32_t k);
int rngpack_long_long(RngHandle *h, int64_t *out, size_t n, int64_t m, int64_t k);
int rngpack_uint32(RngHandle *h, uint32_t *out, size_t n, uint32_t b);
int rngpack_uint64(RngHandle *h, uint64_t *out, size_t n, uint64_t b);
int rngpack_perm(RngHandle *h, size_t *out, size_t n);
int rngpack_sample(RngHandle *h, size_t n, size_t *out, size_t k);
int rngpack_raw(RngHandle *h, uint8_t *out, size_t n);

#ifdef __cplusplus
}
#endif

#endif
