// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0
//
// Command-line front end.  All computation happens behind the C interface;
// this file only reads files, assembles option JSON, and routes the report.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "nabco/nabco.h"

namespace {

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

// 0 on success, 1 when the destination cannot be written.
int emit_report(const char* report, const std::string& out_path) {
  if (!report) return 0;
  if (out_path.empty()) {
    std::cout << report;
    return 0;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 1;
  }
  out << report;
  return 0;
}

int run_document_command(const std::string& command, const std::string& path,
                         const std::string& options_json,
                         const std::string& out_path) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 1;
  }
  nabco_document* doc = nullptr;
  char* error = nullptr;
  nabco_status status = nabco_parse(text.c_str(), &doc, &error);
  if (status != NABCO_OK) {
    if (error) std::cerr << "error: " << error << "\n";
    nabco_free(error);
    return static_cast<int>(status);
  }
  char* report = nullptr;
  status = nabco_run(doc, command.c_str(), options_json.c_str(), &report,
                     &error);
  nabco_document_free(doc);
  int exit_code = static_cast<int>(status);
  if (report) {
    int emit = emit_report(report, out_path);
    if (exit_code == 0) exit_code = emit;
  }
  if (status != NABCO_OK && error) std::cerr << "error: " << error << "\n";
  nabco_free(report);
  nabco_free(error);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nabco: exact computations with graded Lie algebra extensions"};
  app.require_subcommand(1);

  std::string file;
  std::string out_path;
  std::string module_name;
  std::string algebra = "rationals";
  std::string section_file;
  int max_stage = 0;
  long gm_d = 0;
  long gm_max_degree = 10;

  CLI::App* validate = app.add_subcommand(
      "validate", "check a document and report every problem");
  validate->add_option("file", file, "input document")->required();
  validate->add_option("--out", out_path, "write the report here");

  CLI::App* cohomology = app.add_subcommand(
      "cohomology", "cohomology tables for the kernel slices or a module");
  cohomology->add_option("file", file, "input document")->required();
  cohomology->add_option("--module", module_name,
                         "standalone module to report on");
  cohomology->add_option("--out", out_path, "write the report here");

  CLI::App* sections = app.add_subcommand(
      "sections", "coordinates and constraints of the graded sections");
  sections->add_option("file", file, "input document")->required();
  sections->add_option("--out", out_path, "write the report here");

  CLI::App* tower = app.add_subcommand(
      "tower", "solve the section constraints stage by stage");
  tower->add_option("file", file, "input document")->required();
  CLI::Option* max_stage_opt =
      tower->add_option("--max-stage", max_stage, "deepest stage to process");
  tower->add_option("--algebra", algebra,
                    "coefficient algebra: rationals, dual, split, t3");
  tower->add_option("--out", out_path, "write the report here");

  CLI::App* normalize = app.add_subcommand(
      "normalize", "conjugate a filtration-preserving section to a graded one");
  normalize->add_option("file", file, "input document")->required();
  normalize->add_option("--section", section_file, "section override file")
      ->required();
  normalize->add_option("--out", out_path, "write the report here");

  CLI::App* gm_check = app.add_subcommand(
      "gm-check", "verify that twisted Laurent cocycles are coboundaries");
  gm_check->add_option("--d", gm_d, "integer twist")->required();
  gm_check->add_option("--max-degree", gm_max_degree,
                       "exponent window half-width");
  gm_check->add_option("--algebra", algebra,
                       "coefficient algebra: rationals, dual, split, t3");
  gm_check->add_option("--out", out_path, "write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  nlohmann::ordered_json options = nlohmann::ordered_json::object();

  if (app.got_subcommand(validate))
    return run_document_command("validate", file, options.dump(), out_path);

  if (app.got_subcommand(cohomology)) {
    if (!module_name.empty()) options["module"] = module_name;
    return run_document_command("cohomology", file, options.dump(), out_path);
  }

  if (app.got_subcommand(sections))
    return run_document_command("sections", file, options.dump(), out_path);

  if (app.got_subcommand(tower)) {
    if (max_stage_opt->count() > 0) options["max_stage"] = max_stage;
    options["algebra"] = algebra;
    return run_document_command("tower", file, options.dump(), out_path);
  }

  if (app.got_subcommand(normalize)) {
    std::string section_text;
    if (!read_file(section_file, section_text)) {
      std::cerr << "error: cannot read " << section_file << "\n";
      return 1;
    }
    options["section"] = section_text;
    return run_document_command("normalize", file, options.dump(), out_path);
  }

  if (app.got_subcommand(gm_check)) {
    char* report = nullptr;
    char* error = nullptr;
    nabco_status status =
        nabco_gm_check(gm_d, gm_max_degree, algebra.c_str(), &report, &error);
    int exit_code = static_cast<int>(status);
    if (report) {
      int emit = emit_report(report, out_path);
      if (exit_code == 0) exit_code = emit;
    }
    if (status != NABCO_OK && error) std::cerr << "error: " << error << "\n";
    nabco_free(report);
    nabco_free(error);
    return exit_code;
  }

  std::cerr << "error: no subcommand selected\n";
  return 1;
}
