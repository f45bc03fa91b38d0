#pragma once

#include <string>
#include <vector>

namespace kg {

// Named list of checks; ok is false once any check fails.
struct Report {
  std::string name;
  bool ok = true;
  std::vector<std::string> lines;
  void add(const std::string& s) { lines.push_back(s); }
  void check(bool cond, const std::string& what);
  std::string to_string() const;
};

}  // namespace kg
