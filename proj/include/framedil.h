/* framedil — frame dilation toolkit, C API.
 *
 * All payloads are JSON text (the same schemas the CLI reads and writes);
 * the library owns every returned string, release it with fd_string_free.
 * Calls are thread-safe as long as each fd_session is used from one thread
 * at a time.
 */
#ifndef FRAMEDIL_H
#define FRAMEDIL_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fd_status {
  FD_OK = 0,
  FD_ERR_PARSE = 1,        /* malformed input or failed validation */
  FD_ERR_NOT_A_FRAME = 2,  /* singular frame operator */
  FD_REFUSED = 3,          /* dilation mathematically impossible; a refusal
                              record is still produced */
  FD_ERR_VERIFY = 4,       /* certificate failed verification */
  FD_ERR_ARGUMENT = 5,     /* null pointer / unknown kind */
  FD_ERR_INTERNAL = 6
} fd_status;

typedef struct fd_session fd_session;

fd_session *fd_session_new(void);
void fd_session_free(fd_session *s);

/* Residual tolerance for certificates and verifiers (default 1e-9). */
void fd_session_set_tolerance(fd_session *s, double tol);
/* Relative threshold for rank decisions (default 1e-8). */
void fd_session_set_rank_tolerance(fd_session *s, double rank_tol);
/* Seed for fd_generate; each call derives its stream from this value. */
void fd_session_set_seed(fd_session *s, uint64_t seed);

double fd_session_tolerance(const fd_session *s);
double fd_session_rank_tolerance(const fd_session *s);
uint64_t fd_session_seed(const fd_session *s);

/* Message for the most recent failure on this session ("" if none). */
const char *fd_session_last_error(const fd_session *s);

/* kind: "frame-random" | "group" | "gabor" | "bs" | "multiplier".
 * params_json is kind-specific; see the README. Deterministic given the
 * session seed. */
fd_status fd_generate(fd_session *s, const char *kind,
                      const char *params_json, char **out_json);

/* Frame bounds, tightness and Parseval flags for a frame file. */
fd_status fd_analyze(fd_session *s, const char *frame_json,
                     char **out_report_json);

/* kind: "plain" | "group" | "projective" | "gabor" | "wavelet".
 * Writes a certificate (or, for wavelet inputs failing the local-commutant
 * condition, a refusal record and FD_REFUSED). */
fd_status fd_dilate(fd_session *s, const char *kind, const char *input_json,
                    char **out_certificate_json);

/* Re-checks a certificate against its input; the certificate carries its
 * kind. FD_OK when every invariant passes, FD_ERR_VERIFY otherwise; the
 * report lists each named check with residual and threshold. */
fd_status fd_verify(fd_session *s, const char *input_json,
                    const char *certificate_json, char **out_report_json);

void fd_string_free(char *str);

const char *fd_version(void);

#ifdef __cplusplus
}
#endif

#endif /* FRAMEDIL_H */
