#include "fibdual/gallery.hpp"

#include "fibdual/gen.hpp"
#include "fibdual/io.hpp"

namespace fibdual {

std::vector<std::pair<std::string, std::string>> gallery_documents() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const CorpusEntry& entry : standard_corpus()) {
    CatDocument doc = fibration_document(
        entry.name, entry.setup,
        doc_category(entry.name + ".total", entry.setup.total_ptr()),
        doc_category(entry.name + ".base", entry.setup.base_ptr()));
    out.emplace_back(entry.name, print_document(doc));
  }
  return out;
}

}  // namespace fibdual
