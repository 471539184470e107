#include "d4/golden.hpp"

#include "d4/arith.hpp"

#include <fstream>
#include <sstream>

namespace d4::golden {

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

const Fixtures& Fixtures::embedded() {
  static const Fixtures f = [] {
    Fixtures out;
    for (const auto& [name, content] : detail::embedded_files()) out.files_[name] = content;
    out.parse_checksums();
    return out;
  }();
  return f;
}

Fixtures Fixtures::from_directory(const std::filesystem::path& dir) {
  Fixtures out;
  for (const auto& [name, unused] : detail::embedded_files()) {
    std::ifstream in(dir / name, std::ios::binary);
    if (!in) fail(ErrorCode::kParse, "missing golden file " + (dir / name).string());
    std::ostringstream ss;
    ss << in.rdbuf();
    out.files_[name] = ss.str();
  }
  out.parse_checksums();
  return out;
}

void Fixtures::parse_checksums() {
  std::istringstream in(content("CHECKSUMS"));
  std::string sum, name;
  while (in >> sum >> name) sums_[name] = sum;
}

const std::string& Fixtures::content(const std::string& name) const {
  auto it = files_.find(name);
  if (it == files_.end()) fail(ErrorCode::kParse, "unknown golden file " + name);
  return it->second;
}

std::vector<std::string> Fixtures::names() const {
  std::vector<std::string> n;
  for (const auto& [k, v] : files_) n.push_back(k);
  return n;
}

std::vector<std::string> Fixtures::checksum_problems() const {
  std::vector<std::string> problems;
  for (const auto& [name, text] : files_) {
    if (name == "CHECKSUMS") continue;
    auto it = sums_.find(name);
    const std::string actual = hex64(fnv1a64(text));
    if (it == sums_.end())
      problems.push_back(name + ": no checksum recorded");
    else if (it->second != actual)
      problems.push_back(name + ": checksum " + actual + " does not match recorded " + it->second);
  }
  return problems;
}

}  // namespace d4::golden
