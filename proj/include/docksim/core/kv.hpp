#pragma once

#include <map>
#include <string>

namespace docksim {

// Hierarchical key-value text format used for experiment configs:
//
//   # comment
//   seed = 1            # keys before any section header belong to [sim]
//   [control]
//   alpha = 1.0
//
// Sections and keys are kept sorted so serialization is canonical.
class KvFile {
 public:
  static KvFile parse_file(const std::string& path);
  static KvFile parse_string(const std::string& text,
                             const std::string& origin = "<string>");

  bool has(const std::string& section, const std::string& key) const;
  const std::string& get(const std::string& section,
                         const std::string& key) const;
  void set(const std::string& section, const std::string& key,
           std::string value);

  // Canonical text: sorted sections, sorted keys, "key = value" lines.
  std::string to_string() const;

  const std::map<std::string, std::map<std::string, std::string>>& sections()
      const {
    return sections_;
  }

 private:
  std::map<std::string, std::map<std::string, std::string>> sections_;
};

}  // namespace docksim
