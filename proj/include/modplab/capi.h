#ifndef MODPLAB_CAPI_H
#define MODPLAB_CAPI_H

/* C interface of the modp-lab core. Clients pass a JSON configuration and
 * receive a JSON report through an opaque handle. All functions are
 * thread-safe; results are owned by the caller until freed. */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct mpl_result mpl_result;

enum mpl_status {
    MPL_OK = 0,
    MPL_ERR_CONFIG = 2,   /* invalid configuration */
    MPL_ERR_RUNTIME = 3,  /* internal error while running a suite */
    MPL_ERR_ARGUMENT = 4  /* null pointer or malformed JSON */
};

/* Run the suites described by config_json; on success *out receives a result
 * handle. Returns an mpl_status code. */
int mpl_run(const char* config_json, mpl_result** out);

/* The report as a JSON string; owned by the result handle. */
const char* mpl_result_json(const mpl_result* res);

/* The report as CSV; owned by the result handle. */
const char* mpl_result_csv(const mpl_result* res);

/* 1 when every record passed, 0 otherwise. */
int mpl_result_all_pass(const mpl_result* res);

/* Number of verification records in the report. */
size_t mpl_result_record_count(const mpl_result* res);

void mpl_result_free(mpl_result* res);

/* Message of the last error raised on this thread, or an empty string. */
const char* mpl_last_error(void);

/* Library version string. */
const char* mpl_version(void);

#ifdef __cplusplus
}
#endif

#endif /* MODPLAB_CAPI_H */
