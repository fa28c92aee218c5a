#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibdual/indexed.hpp"

namespace fibdual {

// Parse failure with a 1-based line number; what() includes both.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message);

  int line() const { return line_; }

 private:
  int line_;
};

// A category with display names for its objects and arrows, as read from
// or written to a document. Ids follow declaration order.
struct DocCategory {
  std::string name;
  CatPtr cat;
  std::vector<std::string> obj_names;
  std::vector<std::string> arr_names;
};

// A functor or fibration block: maps between two named categories of the
// same document, stored by resolved ids.
struct DocMapping {
  std::string name;
  std::string dom;
  std::string cod;
  std::vector<ObjId> obj_map;
  std::vector<ArrId> arr_map;
};

// An indexed block: fibre category names per base object and full reindex
// maps per base arrow. Omitted reindex lines mean the identity, which is
// only possible when the two fibres are equal.
struct DocIndexed {
  std::string name;
  std::string base;
  std::vector<std::string> fibres;
  std::vector<std::vector<ObjId>> reindex_obj;
  std::vector<std::vector<ArrId>> reindex_arr;
};

// One parsed document: named category blocks plus at most one of a
// functor, fibration, or indexed block referring to them.
struct CatDocument {
  std::vector<DocCategory> categories;
  std::optional<DocMapping> functor;
  std::optional<DocMapping> fibration;
  std::optional<DocIndexed> indexed;

  const DocCategory* find_category(const std::string& name) const;

  // The mapping as library data; no laws are checked here, so documents
  // that fail validation can still be inspected.
  FunctorData mapping_data(const DocMapping& m) const;

  // Requires a fibration block. The FibSetup constructor validates, so
  // this throws std::invalid_argument on documents that break the laws.
  FibSetup to_setup() const;

  // Requires an indexed block; performs no validation.
  IndexedCat to_indexed() const;
};

// Line-oriented reader for the "format fibdual 1" layout. Rejects unknown
// directives, unresolved names, duplicate declarations, and composition
// entries whose endpoints do not meet. Category laws are not enforced;
// run validate_category and friends on the result.
CatDocument parse_document(const std::string& text);

// Canonical form: fixed directive order, ids ascending, identity reindex
// maps omitted. print then parse then print is byte-identical.
std::string print_document(const CatDocument& doc);

// Wraps a category with display names; empty vectors auto-name objects
// A, B, ... and arrows id<obj> for identities, f0, f1, ... otherwise.
DocCategory doc_category(std::string name, CatPtr cat,
                         std::vector<std::string> obj_names = {},
                         std::vector<std::string> arr_names = {});

CatDocument category_document(DocCategory cat);

// Document with total and base blocks and the projection of `setup`
// between them; total and base must wrap the setup's own categories.
CatDocument fibration_document(std::string name, const FibSetup& setup,
                               DocCategory total, DocCategory base);

// Document for the dual of the fibration described by `source`: the base
// block is reused verbatim, total objects keep their names, and class
// arrows are named sp.<v>.<h> after their canonical representatives.
CatDocument dual_document(const CatDocument& source, const DualFib& d,
                          const std::string& name);

// Document for the glued fibration of the indexed block in `source`:
// objects are named <base obj>.<fibre obj> and arrows
// <base arrow>.<fibre arrow>.<target obj>.
CatDocument grothendieck_document(const CatDocument& source,
                                  const Grothendieck& g,
                                  const std::string& name);

// Document for one fibre of the fibration described by `source`, keeping
// the total category's names.
CatDocument fibre_document(const CatDocument& source, const Fibre& fib,
                           const std::string& name);

struct DotOptions {
  bool include_identities = true;
};

// Deterministic DOT text. Fibration documents group total objects into
// one cluster per base object and style arrows by class: dashed vertical,
// bold cartesian, bold and dashed for both, solid otherwise. Category
// documents render as a plain digraph.
std::string export_dot(const CatDocument& doc, const DotOptions& options = {});

// File helpers shared by the tools.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace fibdual
