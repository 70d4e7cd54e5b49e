#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qfano/check.hpp"

namespace qfano::verify {

// Checks of the algebra substrate itself (core.*).
std::vector<Check> core_checks();

// `*` matches any run of characters and `?` one character. A pattern without
// wildcards selects the id itself and everything below it ("typeR.mq").
bool pattern_matches(std::string_view pattern, std::string_view id);

class Registry {
 public:
  // Every suite of the kit.
  static Registry standard();

  // Throws std::invalid_argument on a duplicate id.
  void add(Check c);
  // Sorted by id.
  const std::vector<Check>& all() const { return checks_; }
  // Checks matching any pattern; all checks for an empty list.
  std::vector<const Check*> select(const std::vector<std::string>& patterns) const;

 private:
  std::vector<Check> checks_;
};

// Discrepancies that are known misprints in printed values; they do not affect the exit code.
bool expected_discrepancy(const std::string& id);

enum class Format { text, machine };

struct RunConfig {
  std::vector<std::string> patterns;
  CheckContext context;
  Format format = Format::text;
  bool fail_fast = false;
  bool timing = false;        // report wall-clock times instead of 0
  bool certificates = false;  // machine format: include certificate bodies
  unsigned threads = 0;       // 0 picks the hardware concurrency
};

struct RunOutcome {
  std::vector<CheckResult> results;  // sorted by id
  int exit_code = 0;
};

RunOutcome run(const Registry& registry, const RunConfig& config);

// 0 when nothing failed and every discrepancy is expected, 1 otherwise.
int exit_code_for(const std::vector<CheckResult>& results);

std::string render_text(const std::vector<CheckResult>& results);
// One JSON object per line.
std::string render_machine(const std::vector<CheckResult>& results, bool certificates);

}  // namespace qfano::verify
