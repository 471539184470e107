// Rewrites the CHECKSUMS file of a fixture directory from its current content.

#include "d4/golden.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: d4sat_fixture_tool DIR\n";
    return 1;
  }
  namespace fs = std::filesystem;
  const fs::path dir = argv[1];
  std::ostringstream sums;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().filename() != "CHECKSUMS") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    sums << d4::golden::hex64(d4::golden::fnv1a64(buf.str())) << "  " << p.filename().string() << "\n";
  }
  std::ofstream(dir / "CHECKSUMS", std::ios::binary) << sums.str();
  return 0;
}
