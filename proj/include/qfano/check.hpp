#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qfano/membership.hpp"
#include "qfano/sampling.hpp"

namespace qfano {

enum class Status { pass, fail, inconclusive, discrepancy };
std::string to_string(Status s);

struct CertificateRecord {
  std::string label;
  std::string target;
  std::vector<std::string> coefficients;  // "g<i>: poly"
};

struct CheckResult {
  std::string id;
  Status status = Status::pass;
  std::string witness;
  std::int64_t elapsed_ms = 0;
  std::string notes;
  std::vector<CertificateRecord> certificates;
};

inline constexpr std::uint64_t kDefaultSeed = 20240607;
inline constexpr int kDefaultTrials = 25;

struct CheckContext {
  std::uint64_t seed = kDefaultSeed;
  int trials = kDefaultTrials;
  std::optional<int> degree_bound;
  std::optional<std::string> lforms_path;

  Sampler sampler(const std::string& id) const { return Sampler(derive_seed(seed, id)); }
};

struct Check {
  std::string id;
  std::string description;
  std::function<CheckResult(const CheckContext&)> run;
};

// Accumulates sub-check outcomes of one check. A failure dominates
// inconclusive, which dominates discrepancy.
class Recorder {
 public:
  explicit Recorder(std::string id) { r_.id = std::move(id); }

  const std::string& id() const { return r_.id; }
  bool ok() const { return r_.status == Status::pass || r_.status == Status::discrepancy; }

  bool expect(bool cond, const std::string& what, const std::string& witness = {});
  void note(const std::string& text);
  void inconclusive(const std::string& what);
  void discrepancy(const std::string& what);
  void add_certificate(const std::string& label, const MembershipCertificate& c);

  CheckResult result() const { return r_; }

 private:
  void append(const std::string& text);
  void raise(Status s);

  CheckResult r_;
};

// Searches a certificate for target over gens, recording the outcome. A
// missing certificate fails, or is inconclusive when the user capped the degree.
bool certify(Recorder& rec, const std::string& label, const Poly& target, const GeneratorSet& gens,
             const CheckContext& ctx, Ansatz ansatz = Ansatz::graded);

// Pretty form of a rational point for witnesses.
std::string format_point(const std::vector<Rational>& p);

}  // namespace qfano
