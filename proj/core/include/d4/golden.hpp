#pragma once

// Reference fixtures (charts, product tables, printed inequalities and the
// Hilbert basis representatives) with FNV-1a checksums.

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace d4::golden {

std::uint64_t fnv1a64(std::string_view data);
std::string hex64(std::uint64_t v);

class Fixtures {
 public:
  /// Copy compiled into the library.
  static const Fixtures& embedded();
  /// Reads the same file set from a directory (used by tests and --golden-dir).
  static Fixtures from_directory(const std::filesystem::path& dir);

  const std::string& content(const std::string& name) const;
  bool has(const std::string& name) const { return files_.count(name) != 0; }
  std::vector<std::string> names() const;

  /// One message per file whose content does not hash to its CHECKSUMS line.
  std::vector<std::string> checksum_problems() const;
  bool intact() const { return checksum_problems().empty(); }

 private:
  std::map<std::string, std::string> files_;
  std::map<std::string, std::string> sums_;
  void parse_checksums();
};

namespace detail {
const std::vector<std::pair<std::string, std::string>>& embedded_files();
}

}  // namespace d4::golden
