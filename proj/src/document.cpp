// Copyright 2026 The nabco authors
// SPDX-License-Identifier: Apache-2.0

#include "document.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <utility>

#include "error.hpp"
#include "rational.hpp"
#include "section.hpp"

namespace nabco {
namespace {

using ordered_json = nlohmann::ordered_json;

struct ErrorList {
  std::vector<std::string> items;

  void add(const std::string& path, const std::string& message) {
    items.push_back(path + ": " + message);
  }

  void raise_if_any() const {
    if (items.empty()) return;
    std::string all;
    for (const auto& s : items) {
      if (!all.empty()) all += "\n";
      all += s;
    }
    throw InputError(all);
  }
};

void check_keys(const ordered_json& obj, const std::set<std::string>& allowed,
                const std::string& path, ErrorList& errs) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      errs.add(path, "unknown key \"" + item.key() + "\"");
}

const ordered_json* require_field(const ordered_json& obj,
                                  const std::string& key,
                                  const std::string& path, ErrorList& errs) {
  auto it = obj.find(key);
  if (it == obj.end()) {
    errs.add(path, "missing required field \"" + key + "\"");
    return nullptr;
  }
  return &*it;
}

std::optional<std::string> parse_name(const ordered_json& j,
                                      const std::string& path,
                                      ErrorList& errs) {
  if (!j.is_string()) {
    errs.add(path, "expected a string");
    return std::nullopt;
  }
  std::string s = j.get<std::string>();
  if (s.empty()) {
    errs.add(path, "name must not be empty");
    return std::nullopt;
  }
  return s;
}

std::optional<long> parse_integer(const ordered_json& j,
                                  const std::string& path, ErrorList& errs) {
  if (!j.is_number_integer()) {
    errs.add(path, "expected an integer");
    return std::nullopt;
  }
  return j.get<long>();
}

// Canonical rational string from a JSON string or integer.  Decimals are
// rejected so nothing inexact slips in.
std::optional<std::string> parse_coefficient(const ordered_json& j,
                                             const std::string& path,
                                             ErrorList& errs) {
  if (j.is_string()) {
    try {
      return format_rational(parse_rational(j.get<std::string>()));
    } catch (const InputError& e) {
      errs.add(path, std::string(e.what()) +
                         "; write an exact rational string like \"1/2\"");
      return std::nullopt;
    }
  }
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  if (j.is_number())
    errs.add(path,
             "decimal coefficients are not accepted; write an exact rational "
             "string like \"1/2\"");
  else
    errs.add(path, "expected a rational string");
  return std::nullopt;
}

DocTermList parse_term_list(const ordered_json& j, const std::string& path,
                            ErrorList& errs) {
  DocTermList out;
  if (!j.is_array()) {
    errs.add(path, "expected an array of [element, coefficient] pairs");
    return out;
  }
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string tpath = path + "[" + std::to_string(i) + "]";
    const ordered_json& term = j[i];
    if (!term.is_array() || term.size() != 2) {
      errs.add(tpath, "expected an [element, coefficient] pair");
      continue;
    }
    auto name = parse_name(term[0], tpath + "[0]", errs);
    auto coeff = parse_coefficient(term[1], tpath + "[1]", errs);
    if (name && coeff) out.push_back({*name, *coeff});
  }
  return out;
}

DocColumnMap parse_column_map(const ordered_json& j, const std::string& path,
                              ErrorList& errs) {
  DocColumnMap out;
  if (!j.is_object()) {
    errs.add(path, "expected an object mapping basis names to term lists");
    return out;
  }
  for (const auto& item : j.items())
    out[item.key()] = parse_term_list(item.value(), path + "." + item.key(),
                                      errs);
  return out;
}

void resolve_terms(const DocTermList& terms, const std::set<std::string>& names,
                   const std::string& path, const std::string& universe,
                   ErrorList& errs) {
  for (std::size_t i = 0; i < terms.size(); ++i)
    if (!names.count(terms[i].element))
      errs.add(path + "[" + std::to_string(i) + "]",
               "unknown " + universe + " \"" + terms[i].element + "\"");
}

void resolve_column_map(const DocColumnMap& map,
                        const std::set<std::string>& names,
                        const std::string& path, const std::string& universe,
                        ErrorList& errs) {
  for (const auto& [key, terms] : map) {
    if (!names.count(key))
      errs.add(path, "unknown " + universe + " \"" + key + "\"");
    resolve_terms(terms, names, path + "." + key, universe, errs);
  }
}

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return line;
}

}  // namespace

InputDocument parse_document(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("line " + std::to_string(line_of_byte(text, e.byte)) +
                     ": " + e.what());
  }

  ErrorList errs;
  InputDocument doc;
  if (!root.is_object()) {
    errs.add("document", "expected a JSON object");
    errs.raise_if_any();
  }
  check_keys(root,
             {"format", "name", "basis", "grading", "brackets", "action",
              "modules"},
             "document", errs);

  if (const ordered_json* f = require_field(root, "format", "document", errs)) {
    auto v = parse_integer(*f, "format", errs);
    if (v && *v != 1)
      errs.add("format", "unsupported format " + std::to_string(*v) +
                             "; this reader understands format 1");
    if (v) doc.format = static_cast<int>(*v);
  }

  if (const ordered_json* f = require_field(root, "name", "document", errs))
    if (auto v = parse_name(*f, "name", errs)) doc.name = *v;

  std::set<std::string> names;
  std::set<std::string> quotient_names;
  if (const ordered_json* f = require_field(root, "basis", "document", errs)) {
    if (!f->is_array()) {
      errs.add("basis", "expected an array");
    } else {
      for (std::size_t i = 0; i < f->size(); ++i) {
        const std::string path = "basis[" + std::to_string(i) + "]";
        const ordered_json& e = (*f)[i];
        if (!e.is_object()) {
          errs.add(path, "expected an object");
          continue;
        }
        check_keys(e, {"name", "weight", "part"}, path, errs);
        DocBasisElement decl;
        bool ok = true;
        if (const ordered_json* g = require_field(e, "name", path, errs)) {
          auto v = parse_name(*g, path + ".name", errs);
          if (v)
            decl.name = *v;
          else
            ok = false;
        } else {
          ok = false;
        }
        if (const ordered_json* g = require_field(e, "weight", path, errs)) {
          auto v = parse_integer(*g, path + ".weight", errs);
          if (v)
            decl.weight = *v;
          else
            ok = false;
        } else {
          ok = false;
        }
        if (const ordered_json* g = require_field(e, "part", path, errs)) {
          if (g->is_string() && g->get<std::string>() == "quotient")
            decl.kernel = false;
          else if (g->is_string() && g->get<std::string>() == "kernel")
            decl.kernel = true;
          else {
            errs.add(path + ".part", "expected \"quotient\" or \"kernel\"");
            ok = false;
          }
        } else {
          ok = false;
        }
        if (!ok) continue;
        if (names.count(decl.name)) {
          errs.add(path + ".name",
                   "duplicate basis name \"" + decl.name + "\"");
          continue;
        }
        names.insert(decl.name);
        if (!decl.kernel) quotient_names.insert(decl.name);
        doc.basis.push_back(std::move(decl));
      }
    }
  }

  if (auto it = root.find("grading"); it != root.end()) {
    if (auto v = parse_name(*it, "grading", errs)) {
      if (!names.count(*v))
        errs.add("grading", "unknown basis element \"" + *v + "\"");
      doc.grading = *v;
    }
  }

  if (auto it = root.find("brackets"); it != root.end()) {
    if (!it->is_array()) {
      errs.add("brackets", "expected an array");
    } else {
      std::set<std::pair<std::string, std::string>> seen;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = "brackets[" + std::to_string(i) + "]";
        const ordered_json& e = (*it)[i];
        if (!e.is_object()) {
          errs.add(path, "expected an object");
          continue;
        }
        check_keys(e, {"a", "b", "value"}, path, errs);
        DocBracket decl;
        bool ok = true;
        for (const char* side : {"a", "b"}) {
          if (const ordered_json* g = require_field(e, side, path, errs)) {
            auto v = parse_name(*g, path + "." + side, errs);
            if (v) {
              if (!names.count(*v)) {
                errs.add(path + "." + side,
                         "unknown basis element \"" + *v + "\"");
                ok = false;
              }
              (side[0] == 'a' ? decl.a : decl.b) = *v;
            } else {
              ok = false;
            }
          } else {
            ok = false;
          }
        }
        if (const ordered_json* g = require_field(e, "value", path, errs))
          decl.value = parse_term_list(*g, path + ".value", errs);
        else
          ok = false;
        resolve_terms(decl.value, names, path + ".value", "basis element",
                      errs);
        if (!ok) continue;
        if (!seen.insert({decl.a, decl.b}).second) {
          errs.add(path, "duplicate bracket entry (" + decl.a + ", " + decl.b +
                             ")");
          continue;
        }
        doc.brackets.push_back(std::move(decl));
      }
    }
  }

  if (auto it = root.find("action"); it != root.end()) {
    if (!it->is_object()) {
      errs.add("action", "expected an object");
    } else {
      check_keys(*it, {"generators"}, "action", errs);
      doc.action.emplace();
      if (const ordered_json* gens =
              require_field(*it, "generators", "action", errs)) {
        if (!gens->is_array()) {
          errs.add("action.generators", "expected an array");
        } else {
          for (std::size_t i = 0; i < gens->size(); ++i) {
            const std::string path =
                "action.generators[" + std::to_string(i) + "]";
            const ordered_json& e = (*gens)[i];
            if (!e.is_object()) {
              errs.add(path, "expected an object");
              continue;
            }
            check_keys(e, {"order", "map"}, path, errs);
            DocGenerator gen;
            if (const ordered_json* g = require_field(e, "order", path, errs)) {
              auto v = parse_integer(*g, path + ".order", errs);
              if (v && *v < 1)
                errs.add(path + ".order", "order must be positive");
              else if (v)
                gen.order = static_cast<unsigned>(*v);
            }
            if (const ordered_json* g = require_field(e, "map", path, errs)) {
              gen.map = parse_column_map(*g, path + ".map", errs);
              resolve_column_map(gen.map, names, path + ".map",
                                 "basis element", errs);
            }
            doc.action->push_back(std::move(gen));
          }
        }
      }
    }
  }

  if (auto it = root.find("modules"); it != root.end()) {
    if (!it->is_array()) {
      errs.add("modules", "expected an array");
    } else {
      std::set<std::string> module_names;
      for (std::size_t i = 0; i < it->size(); ++i) {
        const std::string path = "modules[" + std::to_string(i) + "]";
        const ordered_json& e = (*it)[i];
        if (!e.is_object()) {
          errs.add(path, "expected an object");
          continue;
        }
        check_keys(e, {"name", "basis", "action", "generators"}, path, errs);
        DocModule mod;
        if (const ordered_json* g = require_field(e, "name", path, errs)) {
          if (auto v = parse_name(*g, path + ".name", errs)) {
            if (!module_names.insert(*v).second)
              errs.add(path + ".name", "duplicate module name \"" + *v + "\"");
            mod.name = *v;
          }
        }
        std::set<std::string> mod_basis;
        if (const ordered_json* g = require_field(e, "basis", path, errs)) {
          if (!g->is_array()) {
            errs.add(path + ".basis", "expected an array");
          } else {
            for (std::size_t k = 0; k < g->size(); ++k) {
              const std::string bpath =
                  path + ".basis[" + std::to_string(k) + "]";
              const ordered_json& be = (*g)[k];
              if (!be.is_object()) {
                errs.add(bpath, "expected an object");
                continue;
              }
              check_keys(be, {"name", "weight"}, bpath, errs);
              DocModuleBasisElement decl;
              bool ok = true;
              if (const ordered_json* h =
                      require_field(be, "name", bpath, errs)) {
                auto v = parse_name(*h, bpath + ".name", errs);
                if (v)
                  decl.name = *v;
                else
                  ok = false;
              } else {
                ok = false;
              }
              if (const ordered_json* h =
                      require_field(be, "weight", bpath, errs)) {
                auto v = parse_integer(*h, bpath + ".weight", errs);
                if (v)
                  decl.weight = *v;
                else
                  ok = false;
              } else {
                ok = false;
              }
              if (!ok) continue;
              if (!mod_basis.insert(decl.name).second) {
                errs.add(bpath + ".name",
                         "duplicate module basis name \"" + decl.name + "\"");
                continue;
              }
              mod.basis.push_back(std::move(decl));
            }
          }
        }
        if (auto g = e.find("action"); g != e.end()) {
          if (!g->is_array()) {
            errs.add(path + ".action", "expected an array");
          } else {
            std::set<std::pair<std::string, std::string>> seen;
            for (std::size_t k = 0; k < g->size(); ++k) {
              const std::string apath =
                  path + ".action[" + std::to_string(k) + "]";
              const ordered_json& ae = (*g)[k];
              if (!ae.is_object()) {
                errs.add(apath, "expected an object");
                continue;
              }
              check_keys(ae, {"by", "on", "value"}, apath, errs);
              DocModuleAction decl;
              bool ok = true;
              if (const ordered_json* h = require_field(ae, "by", apath, errs)) {
                auto v = parse_name(*h, apath + ".by", errs);
                if (v) {
                  if (!quotient_names.count(*v)) {
                    errs.add(apath + ".by",
                             "unknown quotient basis element \"" + *v + "\"");
                    ok = false;
                  }
                  decl.by = *v;
                } else {
                  ok = false;
                }
              } else {
                ok = false;
              }
              if (const ordered_json* h = require_field(ae, "on", apath, errs)) {
                auto v = parse_name(*h, apath + ".on", errs);
                if (v) {
                  if (!mod_basis.count(*v)) {
                    errs.add(apath + ".on",
                             "unknown module basis element \"" + *v + "\"");
                    ok = false;
                  }
                  decl.on = *v;
                } else {
                  ok = false;
                }
              } else {
                ok = false;
              }
              if (const ordered_json* h =
                      require_field(ae, "value", apath, errs)) {
                decl.value = parse_term_list(*h, apath + ".value", errs);
                resolve_terms(decl.value, mod_basis, apath + ".value",
                              "module basis element", errs);
              } else {
                ok = false;
              }
              if (!ok) continue;
              if (!seen.insert({decl.by, decl.on}).second) {
                errs.add(apath, "duplicate module action entry (" + decl.by +
                                    ", " + decl.on + ")");
                continue;
              }
              mod.action.push_back(std::move(decl));
            }
          }
        }
        if (auto g = e.find("generators"); g != e.end()) {
          if (!g->is_array()) {
            errs.add(path + ".generators", "expected an array");
          } else {
            if (!doc.action)
              errs.add(path + ".generators",
                       "module generators require a document action");
            for (std::size_t k = 0; k < g->size(); ++k) {
              const std::string gpath =
                  path + ".generators[" + std::to_string(k) + "]";
              const ordered_json& ge = (*g)[k];
              if (!ge.is_object()) {
                errs.add(gpath, "expected an object");
                continue;
              }
              check_keys(ge, {"map"}, gpath, errs);
              DocModuleGenerator gen;
              if (const ordered_json* h =
                      require_field(ge, "map", gpath, errs)) {
                gen.map = parse_column_map(*h, gpath + ".map", errs);
                resolve_column_map(gen.map, mod_basis, gpath + ".map",
                                   "module basis element", errs);
              }
              mod.generators.push_back(std::move(gen));
            }
            if (doc.action && !mod.generators.empty() &&
                mod.generators.size() != doc.action->size())
              errs.add(path + ".generators",
                       "expected one map per action generator (" +
                           std::to_string(doc.action->size()) + "), got " +
                           std::to_string(mod.generators.size()));
          }
        }
        doc.modules.push_back(std::move(mod));
      }
    }
  }

  errs.raise_if_any();
  return doc;
}

namespace {

ordered_json term_list_json(const DocTermList& terms) {
  ordered_json out = ordered_json::array();
  for (const auto& t : terms)
    out.push_back(ordered_json::array({t.element, t.coefficient}));
  return out;
}

ordered_json column_map_json(const DocColumnMap& map) {
  ordered_json out = ordered_json::object();
  for (const auto& [key, terms] : map) out[key] = term_list_json(terms);
  return out;
}

}  // namespace

std::string serialize_document(const InputDocument& doc) {
  ordered_json root = ordered_json::object();
  root["format"] = doc.format;
  root["name"] = doc.name;
  ordered_json basis = ordered_json::array();
  for (const auto& b : doc.basis) {
    ordered_json e = ordered_json::object();
    e["name"] = b.name;
    e["weight"] = b.weight;
    e["part"] = b.kernel ? "kernel" : "quotient";
    basis.push_back(std::move(e));
  }
  root["basis"] = std::move(basis);
  if (doc.grading) root["grading"] = *doc.grading;
  ordered_json brackets = ordered_json::array();
  for (const auto& br : doc.brackets) {
    ordered_json e = ordered_json::object();
    e["a"] = br.a;
    e["b"] = br.b;
    e["value"] = term_list_json(br.value);
    brackets.push_back(std::move(e));
  }
  root["brackets"] = std::move(brackets);
  if (doc.action) {
    ordered_json gens = ordered_json::array();
    for (const auto& g : *doc.action) {
      ordered_json e = ordered_json::object();
      e["order"] = g.order;
      e["map"] = column_map_json(g.map);
      gens.push_back(std::move(e));
    }
    root["action"] = ordered_json::object();
    root["action"]["generators"] = std::move(gens);
  }
  if (!doc.modules.empty()) {
    ordered_json mods = ordered_json::array();
    for (const auto& m : doc.modules) {
      ordered_json e = ordered_json::object();
      e["name"] = m.name;
      ordered_json mbasis = ordered_json::array();
      for (const auto& b : m.basis) {
        ordered_json be = ordered_json::object();
        be["name"] = b.name;
        be["weight"] = b.weight;
        mbasis.push_back(std::move(be));
      }
      e["basis"] = std::move(mbasis);
      if (!m.action.empty()) {
        ordered_json acts = ordered_json::array();
        for (const auto& a : m.action) {
          ordered_json ae = ordered_json::object();
          ae["by"] = a.by;
          ae["on"] = a.on;
          ae["value"] = term_list_json(a.value);
          acts.push_back(std::move(ae));
        }
        e["action"] = std::move(acts);
      }
      if (!m.generators.empty()) {
        ordered_json gens = ordered_json::array();
        for (const auto& g : m.generators) {
          ordered_json ge = ordered_json::object();
          ge["map"] = column_map_json(g.map);
          gens.push_back(std::move(ge));
        }
        e["generators"] = std::move(gens);
      }
      mods.push_back(std::move(e));
    }
    root["modules"] = std::move(mods);
  }
  return root.dump(2) + "\n";
}

namespace {

Vec terms_to_vec(const GradedVectorSpace& space, const DocTermList& terms) {
  Vec v = vec_zero(space.dim());
  for (const auto& t : terms)
    v[space.index_of(t.element)] += parse_rational(t.coefficient);
  return v;
}

Matrix column_map_to_matrix(const GradedVectorSpace& space,
                            const DocColumnMap& map) {
  Matrix m = Matrix::identity(space.dim());
  for (const auto& [key, terms] : map)
    m.set_column(space.index_of(key), terms_to_vec(space, terms));
  return m;
}

}  // namespace

GradedExtension build_extension(const InputDocument& doc) {
  std::vector<BasisElement> elems;
  elems.reserve(doc.basis.size());
  for (const auto& b : doc.basis)
    elems.push_back({b.name, static_cast<int>(b.weight)});
  GradedVectorSpace space(elems);

  std::vector<BracketEntry> entries;
  entries.reserve(doc.brackets.size());
  for (const auto& br : doc.brackets)
    entries.push_back({space.index_of(br.a), space.index_of(br.b),
                       terms_to_vec(space, br.value)});

  GradedLieAlgebra total(space, std::move(entries), doc.grading);

  std::vector<std::string> kernel_names;
  for (const auto& b : doc.basis)
    if (b.kernel) kernel_names.push_back(b.name);

  std::optional<ActionSpec> action;
  if (doc.action) {
    ActionSpec spec;
    for (const auto& g : *doc.action) {
      spec.generators.push_back(column_map_to_matrix(total.space(), g.map));
      spec.orders.push_back(g.order);
    }
    action = std::move(spec);
  }
  return GradedExtension(std::move(total), std::move(kernel_names),
                         std::move(action));
}

const DocModule* find_module(const InputDocument& doc,
                             const std::string& name) {
  for (const auto& m : doc.modules)
    if (m.name == name) return &m;
  return nullptr;
}

ModulePieces build_module(const InputDocument& doc, const GradedExtension& ext,
                          const std::string& module_name) {
  const DocModule* mod = find_module(doc, module_name);
  if (!mod) {
    std::string known;
    for (const auto& m : doc.modules) {
      if (!known.empty()) known += ", ";
      known += m.name;
    }
    throw InputError("unknown module \"" + module_name + "\"" +
                     (known.empty() ? "; the document declares no modules"
                                    : "; known modules: " + known));
  }
  ModulePieces out;
  std::vector<BasisElement> elems;
  for (const auto& b : mod->basis)
    elems.push_back({b.name, static_cast<int>(b.weight)});
  out.space = GradedVectorSpace(elems);

  const GradedVectorSpace& qspace = ext.quotient().space();
  out.action.assign(qspace.dim(), Matrix(out.space.dim(), out.space.dim()));
  for (const auto& a : mod->action) {
    std::size_t q = qspace.index_of(a.by);
    out.action[q].set_column(out.space.index_of(a.on),
                             terms_to_vec(out.space, a.value));
  }
  for (const auto& g : mod->generators)
    out.generator_maps.push_back(column_map_to_matrix(out.space, g.map));
  return out;
}

DocColumnMap parse_section_document(const std::string& text) {
  ordered_json root;
  try {
    root = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("section file, line " +
                     std::to_string(line_of_byte(text, e.byte)) + ": " +
                     e.what());
  }
  ErrorList errs;
  if (!root.is_object()) {
    errs.add("section file", "expected a JSON object");
    errs.raise_if_any();
  }
  check_keys(root, {"format", "section"}, "section file", errs);
  if (const ordered_json* f =
          require_field(root, "format", "section file", errs)) {
    auto v = parse_integer(*f, "format", errs);
    if (v && *v != 1)
      errs.add("format", "unsupported format " + std::to_string(*v) +
                             "; this reader understands format 1");
  }
  DocColumnMap map;
  if (const ordered_json* f =
          require_field(root, "section", "section file", errs))
    map = parse_column_map(*f, "section", errs);
  errs.raise_if_any();
  return map;
}

Matrix build_section(const GradedExtension& ext, const DocColumnMap& map) {
  const GradedVectorSpace& total = ext.total().space();
  const GradedVectorSpace& quotient = ext.quotient().space();
  Matrix s = canonical_section(ext);
  for (const auto& [key, terms] : map) {
    std::size_t q = quotient.index_of(key);
    s.set_column(q, terms_to_vec(total, terms));
  }
  return s;
}

}  // namespace nabco
