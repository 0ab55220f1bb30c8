/*
 * mfprod.h
 *
 * This source file is part of the mfprod open source project
 *
 * Copyright 2026 The mfprod project authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the mfprod library. Every function returns a status code;
 * on failure mfp_last_error() describes the problem. Strings handed out
 * through char** parameters are owned by the caller and released with
 * mfp_string_free(). Structured results are JSON documents. */

#ifndef MFPROD_H
#define MFPROD_H

#include <stdint.h>

#if defined(_WIN32)
#define MFP_API __declspec(dllexport)
#else
#define MFP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum mfp_status {
	MFP_OK = 0,
	MFP_ERR_INPUT = 1,        /* malformed or out-of-range input */
	MFP_ERR_VERIFICATION = 2, /* a check ran and failed; the report is still returned */
	MFP_ERR_BUDGET = 3,       /* size cap exceeded */
	MFP_ERR_INTERNAL = 4
} mfp_status;

typedef struct mfp_partition mfp_partition;
typedef struct mfp_family mfp_family;
typedef struct mfp_table mfp_table;

enum { MFP_PRODUCT_EXPLAIN = 1, MFP_PRODUCT_COMBINATORIAL = 2 };

MFP_API const char* mfp_version(void);
/* Message of the last failed call on this thread; empty after success. */
MFP_API const char* mfp_last_error(void);
MFP_API void mfp_string_free(char* s);

/* Partitions, written as diagrams such as "wbwb/13|24". */
MFP_API mfp_status mfp_partition_parse(const char* diagram, mfp_partition** out);
MFP_API void mfp_partition_free(mfp_partition* p);
MFP_API int mfp_partition_size(const mfp_partition* p);
MFP_API int mfp_partition_block_count(const mfp_partition* p);
MFP_API mfp_status mfp_partition_format(const mfp_partition* p, char** out);
MFP_API mfp_status mfp_partition_reduce(const mfp_partition* p, mfp_partition** out);
MFP_API mfp_status mfp_partition_mirror(const mfp_partition* p, mfp_partition** out);
MFP_API mfp_status mfp_partition_member(const mfp_partition* p, const char* class_name, int* out);

/* Weight families from a JSON descriptor, e.g. {"class":"NC"} or
 * {"deformed":"tensor","zeta":{"re":0,"im":1}}. */
MFP_API mfp_status mfp_family_from_json(const char* json, mfp_family** out);
MFP_API void mfp_family_free(mfp_family* f);
MFP_API mfp_status mfp_family_evaluate(const mfp_family* f, const mfp_partition* p, double* re, double* im);

/* Moment tables. */
MFP_API mfp_status mfp_table_from_json(const char* json, mfp_table** out);
MFP_API void mfp_table_free(mfp_table* t);
MFP_API mfp_status mfp_table_to_json(const mfp_table* t, char** out);
MFP_API mfp_status mfp_table_exp(const mfp_family* f, const mfp_table* t, mfp_table** out);
MFP_API mfp_status mfp_table_log(const mfp_family* f, const mfp_table* t, mfp_table** out);

/* Commands with JSON results. class_name may be NULL in mfp_enumerate. */
MFP_API mfp_status mfp_enumerate(const char* word, const char* class_name, char** out);
MFP_API mfp_status mfp_member(const char* class_name, const char* diagram, char** out);
MFP_API mfp_status mfp_check_admissible(const char* family_json, int max_legs, char** out);
MFP_API mfp_status mfp_closure(const char* generators_json, int max_legs, char** out);
MFP_API mfp_status mfp_classify(const char* basic_json, char** out);
/* dot may be NULL. */
MFP_API mfp_status mfp_hasse(int max_legs, char** report, char** dot);
MFP_API mfp_status mfp_product(const char* query_json, unsigned flags, char** out);
/* suite: "all" or one of the names listed by mfp_verify_suites. */
MFP_API mfp_status mfp_verify(const char* suite, uint64_t seed, char** out);
MFP_API mfp_status mfp_verify_suites(char** out);

#ifdef __cplusplus
}
#endif

#endif /* MFPROD_H */
