// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// Command dispatch and deterministic plain-text reports.  Every command
// produces a report whose bytes depend only on the inputs, so golden files
// can pin behavior exactly.

#pragma once

#include <optional>
#include <string>

#include "document.hpp"

namespace nabco {

struct RunOptions {
  /// tower: deepest stage to process; defaults to the kernel depth.
  std::optional<int> max_stage;
  /// tower: coefficient algebra name ("rationals", "dual", "split", "t3").
  std::string algebra = "rationals";
  /// cohomology: standalone module name; without it the kernel slices are
  /// reported stage by stage.
  std::optional<std::string> module;
  /// normalize: JSON text of the section override file.
  std::optional<std::string> section_text;
  /// gm-check parameters.
  long gm_twist = 0;
  long gm_degree_bound = 10;
  std::string gm_algebra = "rationals";
};

/// Options from a JSON object string; empty or "{}" gives the defaults.
/// Keys: max_stage, algebra, module, section, d, max_degree, gm_algebra.
RunOptions parse_run_options(const std::string& options_json);

struct RunOutcome {
  std::string report;
  /// Set by `validate` when the document fails validation; the report then
  /// lists every problem instead of throwing.
  bool validation_failed = false;
};

/// Runs one command against a parsed document.  Commands: validate,
/// cohomology, sections, tower, normalize, gm-check (the last ignores the
/// document).  Throws InputError for bad input and ComputeError for
/// computation-level failures.
RunOutcome run_command_on(const InputDocument& doc, const std::string& command,
                          const RunOptions& options);

/// Convenience wrapper parsing `document_text` first; the text may be empty
/// for gm-check, which needs no document.
RunOutcome run_command(const std::string& document_text,
                       const std::string& command, const RunOptions& options);

}  // namespace nabco
