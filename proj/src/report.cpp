#include "kg/report.hpp"

namespace kg {

void Report::check(bool cond, const std::string& what) {
  lines.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
  if (!cond) ok = false;
}

std::string Report::to_string() const {
  std::string s = name + (ok ? ": ok\n" : ": FAILED\n");
  for (const auto& l : lines) s += "  " + l + "\n";
  return s;
}

}  // namespace kg
