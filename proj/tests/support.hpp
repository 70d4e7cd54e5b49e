#pragma once

#include <stdexcept>
#include <string>

#include "qfano/verify.hpp"

namespace qfano::testing_support {

inline const verify::Registry& registry() {
  static const verify::Registry r = verify::Registry::standard();
  return r;
}

inline CheckResult run_check(const std::string& id, const CheckContext& ctx = {}) {
  for (const auto& c : registry().all())
    if (c.id == id) return c.run(ctx);
  throw std::invalid_argument("no check " + id);
}

inline std::string describe(const CheckResult& r) {
  return r.id + " " + to_string(r.status) + " witness: " + r.witness + " notes: " + r.notes;
}

}  // namespace qfano::testing_support
