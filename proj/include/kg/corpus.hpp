#pragma once

#include <string>
#include <vector>

namespace kg {

struct CorpusEntry {
  std::string name, file, op, args, expected, tag, anchor;
};

// `name | file | op | args | expected | tag | anchor`, '#' comments.
std::vector<CorpusEntry> parse_manifest(const std::string& text);

// Evaluates one operation; file is resolved against dir ("-" for none).
std::string run_op(const std::string& dir, const std::string& file, const std::string& op, const std::string& args);
std::vector<std::string> corpus_ops();

struct CorpusResult {
  CorpusEntry entry;
  std::string got;
  bool pass = false;
};

struct CorpusReport {
  std::vector<CorpusResult> results;
  int passed() const;
  bool ok() const { return passed() == static_cast<int>(results.size()); }
  std::string to_string() const;
};

// Runs dir/manifest.txt; entries run in parallel, results keep manifest order.
CorpusReport run_corpus(const std::string& dir);

}  // namespace kg
