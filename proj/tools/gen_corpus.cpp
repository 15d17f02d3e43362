// Writes the corpus files emitted by the builders into a directory.

#include <fstream>
#include <iostream>

#include "wtt/encodings.hpp"

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : WTT_CORPUS_DIR;
  std::filesystem::create_directories(dir);
  for (const auto& f : wtt::encodings::corpus_files()) {
    std::ofstream out(dir / f.name);
    out << f.text;
    if (!out) {
      std::cerr << "cannot write " << (dir / f.name).string() << "\n";
      return 1;
    }
  }
  return 0;
}
