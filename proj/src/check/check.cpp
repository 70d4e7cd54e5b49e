#include "qfano/check.hpp"

namespace qfano {

std::string to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::inconclusive: return "inconclusive";
    case Status::discrepancy: return "discrepancy";
  }
  return "?";
}

namespace {

int rank_of(Status s) {
  switch (s) {
    case Status::pass: return 0;
    case Status::discrepancy: return 1;
    case Status::inconclusive: return 2;
    case Status::fail: return 3;
  }
  return 3;
}

}  // namespace

void Recorder::raise(Status s) {
  if (rank_of(s) > rank_of(r_.status)) r_.status = s;
}

void Recorder::append(const std::string& text) {
  if (!r_.notes.empty()) r_.notes += "; ";
  r_.notes += text;
}

bool Recorder::expect(bool cond, const std::string& what, const std::string& witness) {
  if (cond) return true;
  raise(Status::fail);
  append("FAILED " + what);
  if (r_.witness.empty() && !witness.empty()) r_.witness = witness;
  return false;
}

void Recorder::note(const std::string& text) { append(text); }

void Recorder::inconclusive(const std::string& what) {
  raise(Status::inconclusive);
  append("INCONCLUSIVE " + what);
}

void Recorder::discrepancy(const std::string& what) {
  raise(Status::discrepancy);
  append("DISCREPANCY " + what);
  if (r_.witness.empty()) r_.witness = what;
}

void Recorder::add_certificate(const std::string& label, const MembershipCertificate& c) {
  r_.certificates.push_back({label, c.target().to_string(), c.serialize()});
}

bool certify(Recorder& rec, const std::string& label, const Poly& target, const GeneratorSet& gens,
             const CheckContext& ctx, Ansatz ansatz) {
  auto cert = find_certificate(target, gens, ctx.degree_bound, ansatz);
  if (cert) {
    rec.add_certificate(label, *cert);
    return true;
  }
  if (ctx.degree_bound) {
    rec.inconclusive(label + ": no certificate with coefficient degree <= " + std::to_string(*ctx.degree_bound));
    return false;
  }
  return rec.expect(false, label + ": no certificate found", target.to_string());
}

std::string format_point(const std::vector<Rational>& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ",";
    s += p[i].get_str();
  }
  return s + ")";
}

}  // namespace qfano
