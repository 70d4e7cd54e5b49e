#include <algorithm>
#include <stdexcept>

#include "qfano/intersection.hpp"
#include "qfano/type_ir.hpp"
#include "qfano/type_r.hpp"
#include "qfano/verify.hpp"

namespace qfano::verify {

namespace {

bool glob(std::string_view p, std::string_view s) {
  // Iterative matcher with single-star backtracking.
  std::size_t pi = 0, si = 0, star = std::string_view::npos, mark = 0;
  while (si < s.size()) {
    if (pi < p.size() && (p[pi] == '?' || p[pi] == s[si])) {
      ++pi;
      ++si;
    } else if (pi < p.size() && p[pi] == '*') {
      star = pi++;
      mark = si;
    } else if (star != std::string_view::npos) {
      pi = star + 1;
      si = ++mark;
    } else {
      return false;
    }
  }
  while (pi < p.size() && p[pi] == '*') ++pi;
  return pi == p.size();
}

}  // namespace

bool pattern_matches(std::string_view pattern, std::string_view id) {
  if (pattern.find_first_of("*?") != std::string_view::npos) return glob(pattern, id);
  if (id == pattern) return true;
  return id.size() > pattern.size() && id.substr(0, pattern.size()) == pattern && id[pattern.size()] == '.';
}

Registry Registry::standard() {
  Registry r;
  for (auto* suite : {&core_checks, &type_r::checks, &type_ir::checks, &intersection::checks})
    for (auto& c : suite()) r.add(std::move(c));
  return r;
}

void Registry::add(Check c) {
  auto it = std::lower_bound(checks_.begin(), checks_.end(), c.id,
                             [](const Check& a, const std::string& id) { return a.id < id; });
  if (it != checks_.end() && it->id == c.id) throw std::invalid_argument("duplicate check id " + c.id);
  checks_.insert(it, std::move(c));
}

std::vector<const Check*> Registry::select(const std::vector<std::string>& patterns) const {
  std::vector<const Check*> out;
  for (const auto& c : checks_) {
    bool hit = patterns.empty();
    for (const auto& p : patterns) hit = hit || pattern_matches(p, c.id);
    if (hit) out.push_back(&c);
  }
  return out;
}

bool expected_discrepancy(const std::string& id) { return intersection::whitelisted(id); }

}  // namespace qfano::verify
