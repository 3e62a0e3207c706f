/*
 Copyright 2026 The dahamod Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#ifndef DAHAMOD_DAHAMOD_H
#define DAHAMOD_DAHAMOD_H

#include <stddef.h>
#include <stdint.h>

#if defined(__GNUC__)
#define DAHAMOD_API __attribute__((visibility("default")))
#else
#define DAHAMOD_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes; also the CLI exit codes. */
typedef enum {
  DAHAMOD_OK = 0,
  DAHAMOD_E_USAGE = 1,
  DAHAMOD_E_CONSTRAINT = 2,
  DAHAMOD_E_IO = 3,
  DAHAMOD_E_VERIFY = 4,
  DAHAMOD_E_CLASSIFY = 5,
  DAHAMOD_E_REDUCIBLE = 6,
  DAHAMOD_E_INTERNAL = 7,
  DAHAMOD_E_SELFTEST = 8
} dahamod_status;

typedef enum { DAHAMOD_BACKEND_RATIONAL = 0, DAHAMOD_BACKEND_RATFUN = 1 } dahamod_backend;

typedef enum { DAHAMOD_PARITY_EVEN = 0, DAHAMOD_PARITY_ODD = 1 } dahamod_parity;

typedef enum {
  DAHAMOD_ROUTE_OPERATOR = 0,
  DAHAMOD_ROUTE_RECURRENCE = 1,
  DAHAMOD_ROUTE_CLOSED = 2,
  DAHAMOD_ROUTE_ALL = 3
} dahamod_route;

/* Parameter quadruple as exact strings. */
typedef struct {
  dahamod_backend backend;
  const char* q;
  const char* k[4];
  int d;
  dahamod_parity parity;
} dahamod_params;

typedef struct dahamod_module dahamod_module;

/* Message of the last failing call on this thread; never NULL. */
DAHAMOD_API const char* dahamod_last_error(void);

/* Releases strings returned through char** out-parameters. */
DAHAMOD_API void dahamod_string_free(char* s);

DAHAMOD_API dahamod_status dahamod_construct(const dahamod_params* params, dahamod_module** out);
DAHAMOD_API dahamod_status dahamod_module_from_json(const char* json, dahamod_module** out);
DAHAMOD_API dahamod_status dahamod_module_to_json(const dahamod_module* m, char** out);
DAHAMOD_API void dahamod_module_free(dahamod_module* m);

DAHAMOD_API size_t dahamod_module_dim(const dahamod_module* m);
DAHAMOD_API int dahamod_module_twist(const dahamod_module* m);
DAHAMOD_API dahamod_backend dahamod_module_backend(const dahamod_module* m);

DAHAMOD_API dahamod_status dahamod_twist(const dahamod_module* m, int e, dahamod_module** out);

/* JSON report of relations, central character and identity checks.
   Returns DAHAMOD_E_VERIFY when any check fails; the report is still set. */
DAHAMOD_API dahamod_status dahamod_verify(const dahamod_module* m, char** report);

/* Closure dimension and verdict; *irreducible is 1 or 0. */
DAHAMOD_API dahamod_status dahamod_irreducible(const dahamod_module* m, int* irreducible, char** report);

/* Classification result JSON. A reducible module yields DAHAMOD_E_REDUCIBLE
   with a verdict report. */
DAHAMOD_API dahamod_status dahamod_classify(const dahamod_module* m, char** result);

/* JSON {"status": "found"|"none"|"indeterminate", ...}. */
DAHAMOD_API dahamod_status dahamod_intertwiner(const dahamod_module* a, const dahamod_module* b, char** result);

DAHAMOD_API dahamod_status dahamod_lmatrix(const dahamod_params* params, dahamod_route route, char** result);

/* Sign orbit and canonical representative of an even quadruple. */
DAHAMOD_API dahamod_status dahamod_orbit(const dahamod_params* params, char** result);

/* Criterion against closure over a seeded grid with q = 2. */
DAHAMOD_API dahamod_status dahamod_sweep(uint64_t seed, int grid, char** result);

/* Acceptance suite. backends: bit 0 rational, bit 1 symbolic q.
   Returns DAHAMOD_E_SELFTEST when a criterion fails. */
DAHAMOD_API dahamod_status dahamod_selftest(uint64_t seed, int grid, int backends, char** summary);

#ifdef __cplusplus
}
#endif

#endif
