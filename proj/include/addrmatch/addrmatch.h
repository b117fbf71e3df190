// Copyright 2026 The addrmatch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the address matching library.
 *
 * Objects are opaque handles created by am_*_create / am_*_load functions and
 * released with the matching am_*_free function; free functions accept NULL.
 * Every fallible call returns an am_status. On failure a description of the
 * most recent error on the calling thread is available from am_last_error().
 * Strings passed in are UTF-8 and are copied; strings handed out stay valid
 * until the owning handle is freed.
 */
#ifndef ADDRMATCH_ADDRMATCH_H_
#define ADDRMATCH_ADDRMATCH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ADDRMATCH_BUILDING_LIBRARY)
#define ADDRMATCH_API __attribute__((visibility("default")))
#else
#define ADDRMATCH_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum am_status {
  AM_OK = 0,
  AM_ERR_INVALID_ARGUMENT = 1, /* NULL handle, bad index, unknown split */
  AM_ERR_INVALID_INPUT = 2,    /* input violates a precondition */
  AM_ERR_INGESTION = 3,        /* unreadable or malformed file */
  AM_ERR_CONFIG_REJECTED = 4,  /* unknown or invalid algorithm */
  AM_ERR_INTERNAL = 5
} am_status;

ADDRMATCH_API const char* am_status_string(am_status status);
/* Message of the last failed call on this thread; "" if none. */
ADDRMATCH_API const char* am_last_error(void);

/* Lexicon and city table. NULL paths select the bundled data. */
typedef struct am_resources am_resources;
ADDRMATCH_API am_status am_resources_load(const char* lexicon_path,
                                          const char* cities_path,
                                          am_resources** out);
ADDRMATCH_API void am_resources_free(am_resources* resources);

/* Labeled address pairs. */
typedef struct am_dataset am_dataset;
/* cities_path may be NULL for the bundled table. */
ADDRMATCH_API am_status am_generate(uint64_t n_base, uint64_t seed,
                                    const char* cities_path, am_dataset** out);
ADDRMATCH_API am_status am_dataset_load(const char* path, am_dataset** out);
ADDRMATCH_API am_status am_dataset_save(const am_dataset* dataset,
                                        const char* path);
ADDRMATCH_API size_t am_dataset_size(const am_dataset* dataset);
/* split receives "train", "valid" or "test". Any out pointer may be NULL. */
ADDRMATCH_API am_status am_dataset_pair(const am_dataset* dataset,
                                        size_t index, const char** a1,
                                        const char** a2, int* label,
                                        const char** split);
ADDRMATCH_API void am_dataset_free(am_dataset* dataset);

/* The built-in algorithms, plain first. Returns NULL past the end. */
ADDRMATCH_API size_t am_algorithm_count(void);
ADDRMATCH_API const char* am_algorithm_name(size_t index);

/* A compiled matcher. resources may be NULL for the bundled data. tf-idf
 * algorithms are fitted on the given raw addresses; others ignore them. */
typedef struct am_matcher am_matcher;
ADDRMATCH_API am_status am_matcher_create(const am_resources* resources,
                                          const char* algorithm,
                                          const char* const* fit_corpus,
                                          size_t fit_corpus_size,
                                          am_matcher** out);
/* As above, fitting on both sides of every pair in one dataset split. */
ADDRMATCH_API am_status am_matcher_create_for_split(
    const am_resources* resources, const char* algorithm,
    const am_dataset* dataset, const char* split, am_matcher** out);
/* Safe to call concurrently on one matcher. */
ADDRMATCH_API am_status am_matcher_match(const am_matcher* matcher,
                                         const char* a1, const char* a2,
                                         int* is_match);
ADDRMATCH_API void am_matcher_free(am_matcher* matcher);

/* Evaluation of one algorithm on one split. */
typedef struct am_report am_report;
ADDRMATCH_API am_status am_evaluate(const am_resources* resources,
                                    const am_dataset* dataset,
                                    const char* algorithm, const char* split,
                                    unsigned parallelism, am_report** out);
/* Compact JSON object, owned by the report. */
ADDRMATCH_API const char* am_report_json(const am_report* report);
ADDRMATCH_API am_status am_report_counts(const am_report* report,
                                         uint64_t* tp, uint64_t* fp,
                                         uint64_t* tn, uint64_t* fn);
ADDRMATCH_API am_status am_report_metrics(const am_report* report,
                                          double* precision, double* recall,
                                          double* accuracy,
                                          double* elapsed_seconds);
ADDRMATCH_API void am_report_free(am_report* report);

#ifdef __cplusplus
}
#endif

#endif /* ADDRMATCH_ADDRMATCH_H_ */
