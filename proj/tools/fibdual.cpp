#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fibdual/category.hpp"
#include "fibdual/dual.hpp"
#include "fibdual/fibration.hpp"
#include "fibdual/indexed.hpp"
#include "fibdual/io.hpp"
#include "fibdual/iso.hpp"

namespace {

using namespace fibdual;
using nlohmann::json;

// Exit codes: 0 the check passed, 1 the check ran and failed, 2 the input
// could not be turned into something checkable.
constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

json issues_json(const ValidationReport& report) {
  json out = json::array();
  for (const ValidationIssue& issue : report.issues) {
    out.push_back({{"rule", issue.rule},
                   {"ids", issue.ids},
                   {"message", issue.message}});
  }
  return out;
}

int emit_document(const std::string& text, const std::string& out_path,
                  bool as_json) {
  if (!out_path.empty()) {
    write_text_file(out_path, text);
    if (as_json) {
      std::cout << json{{"ok", true}, {"path", out_path}}.dump(2) << "\n";
    }
    return kPass;
  }
  if (as_json) {
    std::cout << json{{"ok", true}, {"document", text}}.dump(2) << "\n";
  } else {
    std::cout << text;
  }
  return kPass;
}

CatDocument load_document(const std::string& path) {
  return parse_document(read_text_file(path));
}

// The fibration block is resolved against the document's own category
// blocks; a missing block is an input error, not a failed check.
FibSetup setup_of(const CatDocument& doc) {
  return doc.to_setup();
}

ObjId base_object_by_name(const CatDocument& doc, const std::string& name) {
  const DocCategory& base = *doc.find_category(doc.fibration->cod);
  for (std::size_t i = 0; i < base.obj_names.size(); ++i) {
    if (base.obj_names[i] == name) return static_cast<ObjId>(i);
  }
  throw std::invalid_argument("unknown object in category " + base.name +
                              ": " + name);
}

int run_validate(const CatDocument& doc, bool as_json) {
  struct Section {
    std::string kind;
    std::string name;
    ValidationReport report;
  };
  std::vector<Section> sections;
  for (const DocCategory& c : doc.categories) {
    sections.push_back({"category", c.name, validate_category(*c.cat)});
  }
  if (doc.functor) {
    sections.push_back({"functor", doc.functor->name,
                        validate_functor(doc.mapping_data(*doc.functor))});
  }
  if (doc.fibration) {
    sections.push_back({"fibration", doc.fibration->name,
                        validate_functor(doc.mapping_data(*doc.fibration))});
  }
  if (doc.indexed) {
    sections.push_back(
        {"indexed", doc.indexed->name, validate_indexed(doc.to_indexed())});
  }
  bool ok = true;
  for (const Section& s : sections) ok = ok && s.report.ok();
  if (as_json) {
    json out{{"ok", ok}, {"sections", json::array()}};
    for (const Section& s : sections) {
      out["sections"].push_back({{"kind", s.kind},
                                 {"name", s.name},
                                 {"ok", s.report.ok()},
                                 {"issues", issues_json(s.report)}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    for (const Section& s : sections) {
      if (s.report.ok()) {
        std::cout << s.kind << " " << s.name << ": ok\n";
      } else {
        std::cout << s.kind << " " << s.name << ":\n" << s.report.to_string();
      }
    }
  }
  return ok ? kPass : kFail;
}

int run_check_fibration(const CatDocument& doc, bool as_json) {
  const FibSetup setup = setup_of(doc);
  const FibrationCheck check = is_fibration(setup);
  const DocCategory& base = *doc.find_category(doc.fibration->cod);
  if (as_json) {
    json out{{"ok", check.is_fibration()},
             {"fibration", check.is_fibration()}};
    if (check.counterexample) {
      out["counterexample"] = {
          {"base_arrow", base.arr_names[check.counterexample->first]},
          {"target", base.obj_names[check.counterexample->second]}};
    }
    std::cout << out.dump(2) << "\n";
  } else if (check.is_fibration()) {
    std::cout << "fibration: yes\n";
  } else {
    std::cout << "fibration: no\n";
    std::cout << "no cartesian lift of " << base.arr_names[check.counterexample->first]
              << " ending at " << base.obj_names[check.counterexample->second]
              << "\n";
  }
  return check.is_fibration() ? kPass : kFail;
}

int run_fibre(const CatDocument& doc, const std::string& object,
              const std::string& out_path, bool as_json) {
  const FibSetup setup = setup_of(doc);
  const ObjId a = base_object_by_name(doc, object);
  const Fibre fib = fibre(setup, a);
  const std::string name = doc.fibration->name + ".fibre." + object;
  return emit_document(print_document(fibre_document(doc, fib, name)),
                       out_path, as_json);
}

int run_dualize(const CatDocument& doc, const std::string& out_path,
                bool as_json) {
  const FibSetup setup = setup_of(doc);
  const DualFib d = build_dual(setup);
  const std::string name = doc.fibration->name + ".dual";
  return emit_document(print_document(dual_document(doc, d, name)), out_path,
                       as_json);
}

int run_double_dual(const CatDocument& doc, bool as_json) {
  const FibSetup setup = setup_of(doc);
  const DoubleDual dd = double_dual_iso(setup);
  const ValidationReport iso_report = validate_iso(dd.iso);
  bool projections = true;
  for (ArrId f = 0; f < setup.total().arrow_count(); ++f) {
    projections = projections &&
                  setup.over_arrow(f) ==
                      dd.second.dual.over_arrow(dd.iso.fwd.arr_map[f]);
  }
  const bool ok = iso_report.ok() && projections;
  if (as_json) {
    json out{{"ok", ok},
             {"total_arrows", setup.total().arrow_count()},
             {"dual_arrows", dd.first.dual.total().arrow_count()},
             {"double_dual_arrows", dd.second.dual.total().arrow_count()},
             {"comparison_iso", iso_report.ok()},
             {"projection_preserving", projections}};
    if (!iso_report.ok()) out["issues"] = issues_json(iso_report);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "double dual comparison: " << (ok ? "ok" : "FAILED") << "\n";
    std::cout << "arrows: " << setup.total().arrow_count() << " total, "
              << dd.first.dual.total().arrow_count() << " dual, "
              << dd.second.dual.total().arrow_count() << " double dual\n";
    if (!iso_report.ok()) std::cout << iso_report.to_string();
    if (!projections) std::cout << "comparison does not preserve projections\n";
  }
  return ok ? kPass : kFail;
}

int run_grothendieck(const CatDocument& doc, const std::string& out_path,
                     bool as_json) {
  if (!doc.indexed) {
    throw std::invalid_argument("document has no indexed block");
  }
  const Grothendieck g = grothendieck(doc.to_indexed());
  const std::string name = doc.indexed->name + ".glued";
  return emit_document(print_document(grothendieck_document(doc, g, name)),
                       out_path, as_json);
}

int run_dual_agreement(const CatDocument& doc, bool as_json) {
  if (!doc.indexed) {
    throw std::invalid_argument("document has no indexed block");
  }
  const DualAgreement da = check_dual_agreement(doc.to_indexed());
  const ValidationReport iso_report = validate_iso(da.iso);
  const bool ok = iso_report.ok();
  if (as_json) {
    json out{{"ok", ok},
             {"glued_arrows", da.glued.setup.total().arrow_count()},
             {"glued_op_arrows", da.glued_op.setup.total().arrow_count()},
             {"comorphism_classes",
              static_cast<int>(da.dual.classes.size())}};
    if (!ok) out["issues"] = issues_json(iso_report);
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "dual agreement: " << (ok ? "ok" : "FAILED") << "\n";
    std::cout << "glued opposite arrows: "
              << da.glued_op.setup.total().arrow_count()
              << ", comorphism classes: " << da.dual.classes.size() << "\n";
    if (!ok) std::cout << iso_report.to_string();
  }
  return ok ? kPass : kFail;
}

int run_export_dot(const CatDocument& doc, bool identities,
                   const std::string& out_path, bool as_json) {
  DotOptions options;
  options.include_identities = identities;
  return emit_document(export_dot(doc, options), out_path, as_json);
}

int run_iso_check(const CatDocument& a, const CatDocument& b, bool as_json) {
  const FibSetup sa = setup_of(a);
  const FibSetup sb = setup_of(b);
  if (sa.base() != sb.base()) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"isomorphic", false},
                        {"reason", "bases differ"}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "isomorphic over base: no (bases differ)\n";
    }
    return kFail;
  }
  const std::optional<CategoryIso> iso = find_iso_over_base(sa, sb);
  if (as_json) {
    std::cout << json{{"ok", iso.has_value()},
                      {"isomorphic", iso.has_value()}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "isomorphic over base: " << (iso ? "yes" : "no") << "\n";
  }
  return iso ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite fibred categories: validation, duals, glueing"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string file;
  std::string file_b;
  std::string out_path;
  std::string object_name;
  bool no_identities = false;

  CLI::App* validate = app.add_subcommand(
      "validate", "check category, functor, and indexed laws");
  validate->add_option("file", file, "document to check")->required();

  CLI::App* check_fib = app.add_subcommand(
      "check-fibration", "decide whether every base arrow has cartesian lifts");
  check_fib->add_option("file", file, "fibration document")->required();

  CLI::App* fib = app.add_subcommand(
      "fibre", "extract the fibre over a base object as a category document");
  fib->add_option("file", file, "fibration document")->required();
  fib->add_option("--object", object_name, "base object name")->required();
  fib->add_option("-o,--output", out_path, "write the document here");

  CLI::App* dualize = app.add_subcommand(
      "dualize", "build the dual fibration from comorphism classes");
  dualize->add_option("file", file, "fibration document")->required();
  dualize->add_option("-o,--output", out_path, "write the document here");

  CLI::App* double_dual = app.add_subcommand(
      "double-dual", "dualize twice and verify the comparison isomorphism");
  double_dual->add_option("file", file, "fibration document")->required();

  CLI::App* groth = app.add_subcommand(
      "grothendieck", "glue an indexed category into a fibration document");
  groth->add_option("file", file, "indexed document")->required();
  groth->add_option("-o,--output", out_path, "write the document here");

  CLI::App* agreement = app.add_subcommand(
      "dual-agreement",
      "compare the dual of a glued fibration with glueing the opposites");
  agreement->add_option("file", file, "indexed document")->required();

  CLI::App* dot = app.add_subcommand(
      "export-dot", "render a document as a graphviz digraph");
  dot->add_option("file", file, "document to render")->required();
  dot->add_flag("--no-identities", no_identities, "drop identity loops");
  dot->add_option("-o,--output", out_path, "write the digraph here");

  CLI::App* iso_check = app.add_subcommand(
      "iso-check", "search for an isomorphism over a shared base");
  iso_check->add_option("file", file, "first fibration document")->required();
  iso_check->add_option("other", file_b, "second fibration document")
      ->required();

  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  const bool as_json = format == "json";
  try {
    if (app.got_subcommand(validate)) {
      return run_validate(load_document(file), as_json);
    }
    if (app.got_subcommand(check_fib)) {
      return run_check_fibration(load_document(file), as_json);
    }
    if (app.got_subcommand(fib)) {
      return run_fibre(load_document(file), object_name, out_path, as_json);
    }
    if (app.got_subcommand(dualize)) {
      return run_dualize(load_document(file), out_path, as_json);
    }
    if (app.got_subcommand(double_dual)) {
      return run_double_dual(load_document(file), as_json);
    }
    if (app.got_subcommand(groth)) {
      return run_grothendieck(load_document(file), out_path, as_json);
    }
    if (app.got_subcommand(agreement)) {
      return run_dual_agreement(load_document(file), as_json);
    }
    if (app.got_subcommand(dot)) {
      return run_export_dot(load_document(file), !no_identities, out_path,
                            as_json);
    }
    if (app.got_subcommand(iso_check)) {
      return run_iso_check(load_document(file), load_document(file_b),
                           as_json);
    }
  } catch (const ParseError& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NotAFibrationError& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::invalid_argument& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::logic_error& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  } catch (const std::exception& e) {
    if (as_json) {
      std::cout << json{{"ok", false}, {"error", e.what()}}.dump(2) << "\n";
    }
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
