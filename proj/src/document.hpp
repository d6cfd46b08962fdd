// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// JSON input documents.  A document describes one graded Lie algebra
// extension: a weighted basis split into quotient and kernel parts, a
// bracket table, an optional grading element, an optional finite group
// action, and optional standalone modules for cohomology queries.
//
// Schema (all coefficients are exact rational strings like "-3/2"; plain
// JSON integers are also accepted):
//
//   {
//     "format": 1,
//     "name": "h2",
//     "basis": [{"name": "x", "weight": -1, "part": "quotient"}, ...],
//     "grading": "h",                              // optional
//     "brackets": [{"a": "h", "b": "x", "value": [["x", "-1"]]}, ...],
//     "action": {"generators": [                   // optional
//         {"order": 2, "map": {"x": [["x", "-1"]]}}]},
//     "modules": [{                                // optional
//         "name": "m",
//         "basis": [{"name": "v", "weight": -1}],
//         "action": [{"by": "x", "on": "v", "value": [["v", "1"]]}],
//         "generators": [{"map": {"v": [["v", "-1"]]}}]}]
//   }
//
// Generator maps list only the columns that differ from the identity.
// Unknown keys, duplicate names, unresolved references, and inexact
// coefficients are all reported together in one InputError, one line per
// problem, each prefixed with the offending field path.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "extension.hpp"
#include "lie_algebra.hpp"

namespace nabco {

/// One (element, coefficient) term; the coefficient is kept as a canonical
/// rational string.
struct DocTerm {
  std::string element;
  std::string coefficient;
  friend bool operator==(const DocTerm&, const DocTerm&) = default;
};

using DocTermList = std::vector<DocTerm>;
/// Sparse column map: basis name -> image terms; omitted names map to
/// themselves.
using DocColumnMap = std::map<std::string, DocTermList>;

struct DocBasisElement {
  std::string name;
  long weight = 0;
  bool kernel = false;
  friend bool operator==(const DocBasisElement&, const DocBasisElement&) =
      default;
};

struct DocBracket {
  std::string a;
  std::string b;
  DocTermList value;
  friend bool operator==(const DocBracket&, const DocBracket&) = default;
};

struct DocGenerator {
  unsigned order = 1;
  DocColumnMap map;
  friend bool operator==(const DocGenerator&, const DocGenerator&) = default;
};

struct DocModuleBasisElement {
  std::string name;
  long weight = 0;
  friend bool operator==(const DocModuleBasisElement&,
                         const DocModuleBasisElement&) = default;
};

struct DocModuleAction {
  std::string by;  // quotient-part basis name
  std::string on;  // module basis name
  DocTermList value;
  friend bool operator==(const DocModuleAction&, const DocModuleAction&) =
      default;
};

struct DocModuleGenerator {
  DocColumnMap map;
  friend bool operator==(const DocModuleGenerator&, const DocModuleGenerator&) =
      default;
};

struct DocModule {
  std::string name;
  std::vector<DocModuleBasisElement> basis;
  std::vector<DocModuleAction> action;
  std::vector<DocModuleGenerator> generators;
  friend bool operator==(const DocModule&, const DocModule&) = default;
};

struct InputDocument {
  int format = 1;
  std::string name;
  std::vector<DocBasisElement> basis;
  std::optional<std::string> grading;
  std::vector<DocBracket> brackets;
  std::optional<std::vector<DocGenerator>> action;
  std::vector<DocModule> modules;
  friend bool operator==(const InputDocument&, const InputDocument&) = default;
};

/// Parses and schema-checks a document.  All problems are collected and
/// raised as one InputError, one line per problem.
InputDocument parse_document(const std::string& text);

/// Canonical JSON with fixed key order and two-space indentation.
/// parse_document(serialize_document(d)) == d.
std::string serialize_document(const InputDocument& doc);

/// Assembles the extension the document describes.  The result still needs
/// validate()/ensure_valid(); this only resolves names and coefficients.
GradedExtension build_extension(const InputDocument& doc);

/// Module pieces resolved against the quotient algebra of `ext`.  The
/// LieModule is assembled by the caller so the algebra pointer stays valid:
///   LieModule(&ext.quotient(), pieces.space, pieces.action).
struct ModulePieces {
  GradedVectorSpace space;
  std::vector<Matrix> action;           // one per quotient basis element
  std::vector<Matrix> generator_maps;   // empty unless the module lists them
};

ModulePieces build_module(const InputDocument& doc, const GradedExtension& ext,
                          const std::string& module_name);

const DocModule* find_module(const InputDocument& doc, const std::string& name);

/// Section override file:
///   {"format": 1, "section": {"<quotient name>": [["<total name>", "1"]]}}
/// Columns not listed stay at the canonical splitting.
DocColumnMap parse_section_document(const std::string& text);

/// Section matrix (total dim x quotient dim) from a parsed override map.
/// Names are resolved against `ext`; unknown names raise InputError.
Matrix build_section(const GradedExtension& ext, const DocColumnMap& map);

}  // namespace nabco
