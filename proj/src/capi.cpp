// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "nabco/nabco.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "document.hpp"
#include "error.hpp"
#include "report.hpp"

struct nabco_document {
  nabco::InputDocument doc;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void store(char** slot, const std::string& value) {
  if (slot) *slot = dup_string(value);
}

/// Runs `body`, mapping exceptions onto status codes and out_error.
template <typename Fn>
nabco_status guarded(char** out_error, Fn&& body) {
  if (out_error) *out_error = nullptr;
  try {
    return body();
  } catch (const nabco::InputError& e) {
    store(out_error, e.what());
    return NABCO_INVALID_INPUT;
  } catch (const nabco::ComputeError& e) {
    store(out_error, e.what());
    return NABCO_COMPUTE_ERROR;
  } catch (const std::exception& e) {
    store(out_error, std::string("internal error: ") + e.what());
    return NABCO_COMPUTE_ERROR;
  } catch (...) {
    store(out_error, "internal error");
    return NABCO_COMPUTE_ERROR;
  }
}

}  // namespace

extern "C" {

nabco_status nabco_parse(const char* text, nabco_document** out_doc,
                         char** out_error) {
  if (out_doc) *out_doc = nullptr;
  if (!text || !out_doc) {
    store(out_error, "nabco_parse: text and out_doc must not be NULL");
    return NABCO_INVALID_INPUT;
  }
  return guarded(out_error, [&] {
    auto* handle = new nabco_document{nabco::parse_document(text)};
    *out_doc = handle;
    return NABCO_OK;
  });
}

void nabco_document_free(nabco_document* doc) { delete doc; }

nabco_status nabco_run(const nabco_document* doc, const char* command,
                       const char* options_json, char** out_report,
                       char** out_error) {
  if (out_report) *out_report = nullptr;
  if (!doc || !command || !out_report) {
    store(out_error, "nabco_run: doc, command, and out_report must not be NULL");
    return NABCO_INVALID_INPUT;
  }
  return guarded(out_error, [&] {
    nabco::RunOptions opts = nabco::parse_run_options(
        options_json ? std::string(options_json) : std::string());
    nabco::RunOutcome outcome =
        nabco::run_command_on(doc->doc, command, opts);
    *out_report = dup_string(outcome.report);
    return outcome.validation_failed ? NABCO_INVALID_INPUT : NABCO_OK;
  });
}

nabco_status nabco_gm_check(long d, long max_degree, const char* algebra,
                            char** out_report, char** out_error) {
  if (out_report) *out_report = nullptr;
  if (!out_report) {
    store(out_error, "nabco_gm_check: out_report must not be NULL");
    return NABCO_INVALID_INPUT;
  }
  return guarded(out_error, [&] {
    nabco::RunOptions opts;
    opts.gm_twist = d;
    opts.gm_degree_bound = max_degree;
    if (algebra) opts.gm_algebra = algebra;
    nabco::RunOutcome outcome =
        nabco::run_command_on(nabco::InputDocument{}, "gm-check", opts);
    *out_report = dup_string(outcome.report);
    return NABCO_OK;
  });
}

void nabco_free(char* text) { std::free(text); }

const char* nabco_version(void) { return "nabco 1.0.0"; }

}  // extern "C"
