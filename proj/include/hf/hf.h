/* Copyright 2026 The hf Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

/* C interface to the checker, the bundled library and the connectivity
 * analyzer. Every handle is opaque. Functions that produce text hand back a
 * heap string through an out parameter; release it with hf_string_free.
 * Reports are JSON objects, documented next to each call. */

#ifndef HF_H
#define HF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct hf_session hf_session;

typedef enum hf_status {
  HF_OK = 0,
  HF_ERR_TYPE = 1,          /* a declaration or term failed to check */
  HF_ERR_MANIFEST = 2,      /* library loaded but the manifest audit failed */
  HF_ERR_PARSE = 3,
  HF_ERR_IO = 4,
  HF_ERR_ARGUMENT = 5,      /* bad handle, null pointer or invalid query */
  HF_ERR_FUEL = 6,
  HF_ERR_INTERNAL = 7       /* an unexpected exception, converted */
} hf_status;

const char* hf_version(void);
const char* hf_status_name(hf_status s);
/* Library directory configured at build time. */
const char* hf_default_lib_dir(void);

hf_session* hf_session_new(void);
void hf_session_free(hf_session* s);
void hf_string_free(char* str);

/* Diagnostic for the last failing call on this session, or "". */
const char* hf_last_error(const hf_session* s);

/* Reduction budget for every later call (default 1000000). */
hf_status hf_set_fuel(hf_session* s, uint64_t fuel);
/* Manifest path defaults to <lib_dir>/MANIFEST; either may be NULL for the default. */
hf_status hf_set_library(hf_session* s, const char* lib_dir, const char* manifest_path);

/* Loads the library into the session and audits it against the manifest.
 * report: {"declarations": [decl...], "manifest": [entry...], "fatal": err|null,
 *          "summary": {...}}
 * decl:  {"name","file","kind","status","type","millis","error": err|null}
 * entry: {"name","kind","anchor","category","status","problem","message"}
 * err:   {"kind","message","file","line","column","declaration"} */
hf_status hf_load_library(hf_session* s, char** report);

/* Checks files in order on top of the library. Library modules are loaded in
 * manifest order up to, not including, the first module declaring a name
 * that one of the files also declares. Each file sees the declarations of the
 * files before it. report: {"declarations": [...], "fatal": err|null, "summary": {...}} */
hf_status hf_check_files(hf_session* s, const char* const* paths, size_t count, char** report);
hf_status hf_check_source(hf_session* s, const char* source, const char* file_name, char** report);

/* Term queries against the declarations loaded so far. Output pointers may
 * be NULL when only the status is wanted. */
hf_status hf_infer(hf_session* s, const char* term, char** type);
hf_status hf_normalize(hf_session* s, const char* term, char** normal_form);
/* Both terms must be well typed; *equal is set to 0 or 1. */
hf_status hf_conv(hf_session* s, const char* a, const char* b, int* equal);
/* Whether the two normal forms are syntactically identical. */
hf_status hf_same_normal_form(hf_session* s, const char* a, const char* b, int* equal);
/* Whether a constant of that name is declared in the session. */
int hf_has_declaration(const hf_session* s, const char* name);

/* Analyzer. query is JSON: {"query": "connectivity" | "merloop" | "pi-iso" |
 * "stab" | "map-conn" | "exact", plus the integer fields it needs:
 * "conn", "susp", "degree", "map_conn", "dom", "cod"}.
 * result: {"query", "value": int|null, "holds": bool|null,
 *          "no_information": bool, "trace": [{"rule","anchor","instantiation"}]} */
/* Malformed JSON gives HF_ERR_PARSE; a missing field or an out of range
 * value gives HF_ERR_ARGUMENT. */
hf_status hf_analyze(const char* query, char** result, char** error);

#ifdef __cplusplus
}
#endif

#endif /* HF_H */
