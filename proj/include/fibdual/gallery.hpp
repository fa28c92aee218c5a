#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fibdual {

// Every standard corpus family rendered as a fibration document, in corpus
// order. The first component doubles as the file stem when the gallery is
// written to disk.
std::vector<std::pair<std::string, std::string>> gallery_documents();

}  // namespace fibdual
