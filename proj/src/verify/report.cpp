#include <algorithm>
#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qfano/verify.hpp"

namespace qfano::verify {

namespace {

CheckResult run_one(const Check& c, const CheckContext& ctx, bool timing) {
  auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = c.run(ctx);
  } catch (const std::exception& e) {
    r = CheckResult{};
    r.status = Status::fail;
    r.witness = std::string("exception: ") + e.what();
  }
  r.id = c.id;
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
  r.elapsed_ms = timing ? ms : 0;
  return r;
}

bool counts_as_failure(const CheckResult& r) {
  return r.status == Status::fail || (r.status == Status::discrepancy && !expected_discrepancy(r.id));
}

}  // namespace

int exit_code_for(const std::vector<CheckResult>& results) {
  return std::any_of(results.begin(), results.end(), counts_as_failure) ? 1 : 0;
}

RunOutcome run(const Registry& registry, const RunConfig& config) {
  auto selected = registry.select(config.patterns);
  RunOutcome out;
  if (config.fail_fast) {
    // In id order, one at a time, so the stopping point is reproducible.
    for (const Check* c : selected) {
      out.results.push_back(run_one(*c, config.context, config.timing));
      if (counts_as_failure(out.results.back())) break;
    }
  } else {
    out.results.resize(selected.size());
    unsigned n = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    n = std::min<unsigned>(n, static_cast<unsigned>(std::max<std::size_t>(selected.size(), 1)));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < selected.size();)
        out.results[i] = run_one(*selected[i], config.context, config.timing);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  std::sort(out.results.begin(), out.results.end(),
            [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  out.exit_code = exit_code_for(out.results);
  return out;
}

std::string render_text(const std::vector<CheckResult>& results) {
  std::ostringstream os;
  std::size_t counts[4] = {0, 0, 0, 0}, expected = 0;
  for (const auto& r : results) {
    ++counts[static_cast<int>(r.status)];
    if (r.status == Status::discrepancy && expected_discrepancy(r.id)) ++expected;
    std::string tag = to_string(r.status);
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << tag << std::string(tag.size() < 13 ? 13 - tag.size() : 1, ' ') << r.id;
    if (r.elapsed_ms) os << "  (" << r.elapsed_ms << " ms)";
    if (!r.certificates.empty()) os << "  [" << r.certificates.size() << " certificates]";
    os << '\n';
    if (!r.witness.empty()) os << "    witness: " << r.witness << '\n';
    if (!r.notes.empty()) os << "    notes: " << r.notes << '\n';
  }
  os << results.size() << " checks: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
     << " inconclusive, " << counts[3] << " discrepancy (" << expected << " expected)\n";
  return os.str();
}

std::string render_machine(const std::vector<CheckResult>& results, bool certificates) {
  std::ostringstream os;
  for (const auto& r : results) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(r.witness);
    j["elapsed"] = r.elapsed_ms;
    j["notes"] = r.notes;
    j["certificate_count"] = r.certificates.size();
    if (certificates) {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& c : r.certificates)
        arr.push_back({{"label", c.label}, {"target", c.target}, {"coefficients", c.coefficients}});
      j["certificates"] = std::move(arr);
    }
    if (r.status == Status::discrepancy) j["expected"] = expected_discrepancy(r.id);
    os << j.dump() << '\n';
  }
  return os.str();
}

}  // namespace qfano::verify
