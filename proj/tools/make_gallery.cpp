#include <iostream>
#include <string>

#include "fibdual/gallery.hpp"
#include "fibdual/io.hpp"

// Writes every gallery document into the given directory, one .fib file per
// corpus family. Regenerating over an existing gallery must be a no-op.
int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make-gallery <directory>\n";
    return 2;
  }
  const std::string dir = argv[1];
  try {
    for (const auto& [name, text] : fibdual::gallery_documents()) {
      fibdual::write_text_file(dir + "/" + name + ".fib", text);
      std::cout << name << ".fib\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
