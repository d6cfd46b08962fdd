// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "report.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

#include "cochain.hpp"
#include "error.hpp"
#include "gm_cocycle.hpp"
#include "section.hpp"
#include "tower.hpp"
#include "variety.hpp"

namespace nabco {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string header(const std::string& command, const std::string& document) {
  std::string out = "nabco report\ncommand: " + command + "\n";
  if (!document.empty()) out += "document: " + document + "\n";
  return out;
}

std::string plural(std::size_t n, const char* word) {
  return std::to_string(n) + " " + word + (n == 1 ? "" : "s");
}

/// Variable names for polynomials over the variety coordinates.
std::vector<std::string> coordinate_names(const SectionVariety& v) {
  std::vector<std::string> names;
  names.reserve(v.coordinates.size());
  for (const auto& c : v.coordinates) names.push_back(c.name);
  return names;
}

/// Variable names for polynomials over the tower parameters: slots below
/// param_var_base belong to eliminated stage unknowns and never print.
std::vector<std::string> parameter_names(const TowerResult& t) {
  std::vector<std::string> names(t.param_var_base);
  for (std::size_t i = 0; i < names.size(); ++i)
    names[i] = "x" + std::to_string(i);
  for (const auto& p : t.parameter_names) names.push_back(p);
  return names;
}

/// "t1 + (1 - t2)*eps" from per-component polynomials.
std::string format_components(const std::vector<Poly>& comps,
                              const CoefficientAlgebra& algebra,
                              const std::vector<std::string>& var_names) {
  std::string out;
  for (std::size_t a = 0; a < comps.size(); ++a) {
    if (comps[a].is_zero()) continue;
    std::string body = comps[a].to_string(var_names);
    std::string piece;
    if (algebra.basis_name(a) == "1") {
      piece = body;
    } else if (body == "1") {
      piece = algebra.basis_name(a);
    } else {
      bool atomic = comps[a].terms().size() == 1 &&
                    comps[a].terms().begin()->second == 1 &&
                    !comps[a].terms().begin()->first.empty();
      piece = (atomic ? body : "(" + body + ")") + "*" + algebra.basis_name(a);
    }
    if (!out.empty()) out += " + ";
    out += piece;
  }
  return out.empty() ? "0" : out;
}

std::string render_validate(const InputDocument& doc,
                            const GradedExtension& ext,
                            const ValidationReport& report) {
  std::ostringstream out;
  out << header("validate", doc.name);
  out << "basis: " << ext.total().dim() << " (quotient "
      << ext.quotient_indices().size() << ", kernel "
      << ext.kernel_indices().size() << ")\n";
  if (doc.grading) out << "grading: " << *doc.grading << "\n";
  if (ext.action())
    out << "action: " << plural(ext.action()->generators.size(), "generator")
        << "\n";
  out << "depth: " << ext.depth() << "\n";
  if (report.ok()) {
    out << "validation: ok\n";
  } else {
    out << "validation: " << plural(report.issues.size(), "problem") << "\n";
    for (const auto& issue : report.issues)
      out << "- " << issue.check << ": " << issue.detail << "\n";
  }
  return out.str();
}

std::string render_stage_cohomology(const InputDocument& doc,
                                    const GradedExtension& ext) {
  std::ostringstream out;
  out << header("cohomology", doc.name);
  const bool invariant = ext.action().has_value();
  if (invariant)
    out << "action: " << plural(ext.action()->generators.size(), "generator")
        << "; computing invariants\n";
  const int depth = ext.depth();
  if (depth == 0) {
    out << "kernel is zero; nothing to report\n";
    return out.str();
  }
  for (int stage = 1; stage <= depth; ++stage) {
    LieModule slice = ext.slice_module(stage);
    out << "stage " << stage << ": slice dimension " << slice.dim() << "\n";
    if (slice.dim() == 0) continue;
    CochainComplex complex(slice, ext.slice_action(stage));
    for (unsigned degree = 0; degree <= 2; ++degree) {
      CohomologyData data = complex.cohomology(degree, 0, invariant);
      out << "  degree " << degree << ": dim " << data.dim << "\n";
    }
  }
  return out.str();
}

std::string render_module_cohomology(const InputDocument& doc,
                                     const GradedExtension& ext,
                                     const std::string& module_name) {
  ModulePieces pieces = build_module(doc, ext, module_name);
  LieModule module(&ext.quotient(), pieces.space, pieces.action);
  module.ensure_valid();

  std::optional<ActionPair> action;
  bool invariant = false;
  std::string action_note;
  if (ext.action()) {
    if (!pieces.generator_maps.empty()) {
      action = ActionPair{ext.action_on_quotient(), pieces.generator_maps};
      invariant = true;
      action_note = "action: " +
                    plural(ext.action()->generators.size(), "generator") +
                    "; computing invariants\n";
    } else {
      action_note =
          "action: module declares no generator maps; plain cohomology\n";
    }
  }
  CochainComplex complex(module, action);

  std::ostringstream out;
  out << header("cohomology", doc.name);
  out << "module: " << module_name << " (dimension " << module.dim() << ")\n";
  out << action_note;

  const GradedVectorSpace& qspace = ext.quotient().space();
  std::set<int> module_weights;
  for (std::size_t i = 0; i < module.dim(); ++i)
    module_weights.insert(module.space().weight(i));
  for (unsigned degree = 0; degree <= 3; ++degree) {
    std::set<int, std::greater<int>> weights;
    for (const WedgeTuple& t : exterior_basis(qspace, degree))
      for (int wv : module_weights) weights.insert(wv - t.weight);
    bool any = false;
    std::ostringstream lines;
    for (int m : weights) {
      if (complex.slice(degree, m).dim() == 0) continue;
      CohomologyData data = complex.cohomology(degree, m, invariant);
      lines << "  weight " << m << ": dim " << data.dim << "\n";
      any = true;
    }
    if (any)
      out << "degree " << degree << ":\n" << lines.str();
    else
      out << "degree " << degree << ": no cochains\n";
  }
  return out.str();
}

std::string render_sections(const InputDocument& doc,
                            const GradedExtension& ext,
                            const SectionVariety& variety) {
  std::ostringstream out;
  out << header("sections", doc.name);
  if (ext.action())
    out << "action: " << plural(ext.action()->generators.size(), "generator")
        << "; coordinates are invariant\n";
  std::vector<std::string> names = coordinate_names(variety);
  out << "coordinates: " << variety.coordinates.size() << "\n";
  for (const auto& c : variety.coordinates)
    out << "  " << c.name << ": weight " << c.weight << "\n";
  out << "constraints: " << variety.constraints.size() << "\n";
  const GradedVectorSpace& qspace = ext.quotient().space();
  const GradedVectorSpace& total = ext.total().space();
  bool impossible = false;
  for (const auto& c : variety.constraints) {
    if (c.poly.is_constant()) impossible = true;
    out << "  [" << qspace.name(c.a) << ", " << qspace.name(c.b) << "] -> "
        << total.name(ext.kernel_indices()[c.target]) << " (weight "
        << c.weight << "): " << c.poly.monic().to_string(names) << "\n";
  }
  if (impossible)
    out << "result: empty\n";
  else if (variety.constraints.empty())
    out << "result: affine space of dimension " << variety.coordinates.size()
        << "\n";
  else
    out << "result: " << plural(variety.coordinates.size(), "coordinate")
        << ", " << plural(variety.constraints.size(), "constraint") << "\n";
  return out.str();
}

std::string render_tower(const InputDocument& doc, const GradedExtension& ext,
                         const TowerResult& tower,
                         const CoefficientAlgebra& algebra) {
  std::ostringstream out;
  out << header("tower", doc.name);
  out << "coefficients: " << algebra.name() << "\n";
  out << "max stage: " << tower.max_stage << "\n";
  for (const auto& st : tower.stages) {
    out << "stage " << st.index << ": slice dimension " << st.slice_dim
        << ", coordinates " << st.num_coordinates << ", torsor dimension "
        << st.torsor_dim << ", h2 dimension " << st.h2_dim << ", status "
        << stage_status_name(st.status);
    if (st.eliminated_parameters > 0)
      out << ", eliminated " << plural(st.eliminated_parameters, "parameter");
    out << "\n";
    if (st.obstruction_class && st.h2_dim > 0) {
      out << "  obstruction class: [";
      for (std::size_t i = 0; i < st.obstruction_class->size(); ++i) {
        if (i) out << ", ";
        out << format_rational((*st.obstruction_class)[i]);
      }
      out << "]\n";
    }
  }
  if (tower.empty) {
    out << "result: empty from stage " << tower.empty_from << "\n";
    return out.str();
  }
  out << "result: nonempty, " << plural(tower.num_parameters, "free parameter")
      << "\n";
  std::vector<std::string> var_names = parameter_names(tower);
  bool any_assignment = false;
  std::ostringstream lines;
  for (std::size_t i = 0; i < tower.variety.coordinates.size(); ++i) {
    const auto& coord = tower.variety.coordinates[i];
    if (coord.stage > tower.max_stage) continue;
    lines << "  " << coord.name << " = "
          << format_components(tower.assignments[i], algebra, var_names)
          << "\n";
    any_assignment = true;
  }
  if (any_assignment) out << "assignments:\n" << lines.str();
  if (!tower.residuals.empty()) {
    out << "residual constraints:\n";
    for (const auto& r : tower.residuals)
      out << "  " << r.monic().to_string(var_names) << " = 0\n";
  }
  return out.str();
}

std::string render_normalize(const InputDocument& doc,
                             const GradedExtension& ext, const Matrix& input,
                             const NormalizedSection& normalized) {
  std::ostringstream out;
  out << header("normalize", doc.name);
  const GradedVectorSpace& total = ext.total().space();
  const GradedVectorSpace& qspace = ext.quotient().space();
  out << "input section:\n";
  for (std::size_t q = 0; q < qspace.dim(); ++q)
    out << "  " << qspace.name(q) << " -> " << total.describe(input.column(q))
        << "\n";
  out << "conjugator (kernel coordinates):\n";
  bool any = false;
  for (std::size_t k = 0; k < normalized.conjugator.size(); ++k) {
    if (normalized.conjugator[k] == 0) continue;
    out << "  " << total.name(ext.kernel_indices()[k]) << " = "
        << format_rational(normalized.conjugator[k]) << "\n";
    any = true;
  }
  if (!any) out << "  0\n";
  out << "normalized section:\n";
  for (std::size_t q = 0; q < qspace.dim(); ++q)
    out << "  " << qspace.name(q) << " -> "
        << total.describe(normalized.graded.column(q)) << "\n";
  return out.str();
}

std::string render_gm_check(long d, long degree_bound,
                            const CoefficientAlgebra& algebra,
                            const H1Check& check) {
  std::ostringstream out;
  out << header("gm-check", "");
  out << "twist: " << d << "\n";
  out << "degree bound: " << degree_bound << "\n";
  out << "algebra: " << algebra.name() << " (dimension " << algebra.dim()
      << ")\n";
  out << "cocycle space dimension " << check.cocycle_dim << "\n";
  out << "coboundary space dimension " << check.coboundary_dim << "\n";
  out << "verified: " << (check.verified ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace

RunOptions parse_run_options(const std::string& options_json) {
  RunOptions opts;
  if (options_json.empty()) return opts;
  ordered_json root;
  try {
    root = ordered_json::parse(options_json);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("options: ") + e.what());
  }
  if (!root.is_object()) throw InputError("options: expected a JSON object");
  for (const auto& item : root.items()) {
    const std::string& key = item.key();
    const ordered_json& v = item.value();
    if (key == "max_stage") {
      if (!v.is_number_integer())
        throw InputError("options.max_stage: expected an integer");
      opts.max_stage = v.get<int>();
    } else if (key == "algebra") {
      if (!v.is_string())
        throw InputError("options.algebra: expected a string");
      opts.algebra = v.get<std::string>();
    } else if (key == "module") {
      if (!v.is_string()) throw InputError("options.module: expected a string");
      opts.module = v.get<std::string>();
    } else if (key == "section") {
      if (!v.is_string())
        throw InputError("options.section: expected a string");
      opts.section_text = v.get<std::string>();
    } else if (key == "d") {
      if (!v.is_number_integer())
        throw InputError("options.d: expected an integer");
      opts.gm_twist = v.get<long>();
    } else if (key == "max_degree") {
      if (!v.is_number_integer())
        throw InputError("options.max_degree: expected an integer");
      opts.gm_degree_bound = v.get<long>();
    } else if (key == "gm_algebra") {
      if (!v.is_string())
        throw InputError("options.gm_algebra: expected a string");
      opts.gm_algebra = v.get<std::string>();
    } else {
      throw InputError("options: unknown key \"" + key + "\"");
    }
  }
  return opts;
}

RunOutcome run_command_on(const InputDocument& doc, const std::string& command,
                          const RunOptions& options) {
  RunOutcome outcome;
  if (command == "gm-check") {
    CoefficientAlgebra algebra =
        CoefficientAlgebra::by_name(options.gm_algebra);
    H1Check check =
        h1_vanishing_check(options.gm_twist, options.gm_degree_bound, algebra);
    outcome.report = render_gm_check(options.gm_twist,
                                     options.gm_degree_bound, algebra, check);
    return outcome;
  }

  GradedExtension ext = build_extension(doc);

  if (command == "validate") {
    ValidationReport report = ext.validate();
    outcome.report = render_validate(doc, ext, report);
    outcome.validation_failed = !report.ok();
    return outcome;
  }
  if (command == "cohomology") {
    ext.ensure_valid();
    outcome.report = options.module
                         ? render_module_cohomology(doc, ext, *options.module)
                         : render_stage_cohomology(doc, ext);
    return outcome;
  }
  if (command == "sections") {
    ext.ensure_valid();
    outcome.report = render_sections(doc, ext, section_variety(ext));
    return outcome;
  }
  if (command == "tower") {
    ext.ensure_valid();
    CoefficientAlgebra algebra = CoefficientAlgebra::by_name(options.algebra);
    int max_stage = options.max_stage.value_or(ext.depth());
    if (max_stage < 0) throw InputError("max stage must be nonnegative");
    if (max_stage > ext.depth())
      throw InputError("max stage " + std::to_string(max_stage) +
                       " exceeds the kernel depth " +
                       std::to_string(ext.depth()));
    TowerResult tower = run_tower(ext, max_stage, algebra);
    outcome.report = render_tower(doc, ext, tower, algebra);
    return outcome;
  }
  if (command == "normalize") {
    ext.ensure_valid();
    if (!options.section_text)
      throw InputError("normalize needs a section file (--section)");
    DocColumnMap overrides = parse_section_document(*options.section_text);
    Matrix input = build_section(ext, overrides);
    NormalizedSection normalized = normalize_section(ext, input);
    outcome.report = render_normalize(doc, ext, input, normalized);
    return outcome;
  }
  throw InputError("unknown command \"" + command +
                   "\"; expected validate, cohomology, sections, tower, "
                   "normalize, or gm-check");
}

RunOutcome run_command(const std::string& document_text,
                       const std::string& command, const RunOptions& options) {
  if (command == "gm-check")
    return run_command_on(InputDocument{}, command, options);
  return run_command_on(parse_document(document_text), command, options);
}

}  // namespace nabco
