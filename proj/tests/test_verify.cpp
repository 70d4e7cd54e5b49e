#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "support.hpp"

using namespace qfano;
using namespace qfano::verify;
using json = nlohmann::json;

namespace {

Check fixed(const std::string& id, Status s, int* calls = nullptr) {
  return {id, "synthetic", [id, s, calls](const CheckContext&) {
            if (calls) ++*calls;
            CheckResult r;
            r.id = id;
            r.status = s;
            if (s == Status::fail) r.witness = "injected";
            return r;
          }};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

// Minimal validator for the subset of JSON Schema the report schema uses.
void validate(const json& v, const json& schema, const std::string& where) {
  if (schema.contains("enum")) {
    bool hit = false;
    for (const auto& e : schema["enum"]) hit = hit || e == v;
    EXPECT_TRUE(hit) << where << ": " << v;
  }
  if (schema.contains("type")) {
    auto types = schema["type"].is_array() ? schema["type"] : json::array({schema["type"]});
    bool ok = false;
    for (const auto& t : types) {
      std::string s = t;
      ok = ok || (s == "string" && v.is_string()) || (s == "null" && v.is_null()) ||
           (s == "integer" && v.is_number_integer()) || (s == "boolean" && v.is_boolean()) ||
           (s == "object" && v.is_object()) || (s == "array" && v.is_array());
    }
    EXPECT_TRUE(ok) << where << " has wrong type: " << v;
  }
  if (schema.contains("minimum") && v.is_number()) EXPECT_GE(v.get<double>(), schema["minimum"].get<double>()) << where;
  if (v.is_object()) {
    for (const auto& k : schema.value("required", json::array())) EXPECT_TRUE(v.contains(k)) << where << " lacks " << k;
    const auto& props = schema.value("properties", json::object());
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (!props.contains(it.key())) {
        EXPECT_TRUE(schema.value("additionalProperties", true)) << where << " has extra key " << it.key();
        continue;
      }
      validate(it.value(), props[it.key()], where + "." + it.key());
    }
  }
  if (v.is_array() && schema.contains("items"))
    for (const auto& item : v) validate(item, schema["items"], where + "[]");
}

}  // namespace

TEST(Patterns, PrefixAndGlob) {
  EXPECT_TRUE(pattern_matches("typeR.mq", "typeR.mq.rank1"));
  EXPECT_TRUE(pattern_matches("typeR.mq.rank1", "typeR.mq.rank1"));
  EXPECT_FALSE(pattern_matches("typeR.m", "typeR.mq.rank1"));
  EXPECT_TRUE(pattern_matches("typeR.mq*", "typeR.mq.rank1"));
  EXPECT_TRUE(pattern_matches("*.lforms", "typeIR.special.lforms"));
  EXPECT_TRUE(pattern_matches("typeIR.?eneral.*", "typeIR.general.psi"));
  EXPECT_FALSE(pattern_matches("typeIR.?eneral.*", "typeIR.special.psi"));
}

TEST(Registry, StandardHasStableSortedIds) {
  const auto& all = testing_support::registry().all();
  EXPECT_GE(all.size(), 30u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < all.size(); ++i) {
    ids.insert(all[i].id);
    if (i) EXPECT_LT(all[i - 1].id, all[i].id);
  }
  EXPECT_EQ(ids.size(), all.size());
  for (const char* id : {"typeR.complexes", "typeR.mq.minors4", "intersection.typeR", "typeIR.general.fibers"})
    EXPECT_TRUE(ids.count(id)) << id;
}

TEST(Registry, SelectAndDuplicates) {
  const auto& reg = testing_support::registry();
  EXPECT_EQ(reg.select({"typeR.mq*"}).size(), 5u);
  EXPECT_TRUE(reg.select({"no.such.check"}).empty());
  EXPECT_EQ(reg.select({}).size(), reg.all().size());
  Registry r;
  r.add(fixed("a", Status::pass));
  EXPECT_THROW(r.add(fixed("a", Status::pass)), std::invalid_argument);
}

TEST(Run, FailFastStopsAtTheFirstFailure) {
  int calls_c = 0;
  Registry r;
  r.add(fixed("c.after", Status::pass, &calls_c));
  r.add(fixed("a.first", Status::pass));
  r.add(fixed("b.broken", Status::fail));
  RunConfig cfg;
  cfg.fail_fast = true;
  auto out = run(r, cfg);
  ASSERT_EQ(out.results.size(), 2u);
  EXPECT_EQ(out.results.back().id, "b.broken");
  EXPECT_EQ(out.exit_code, 1);
  EXPECT_EQ(calls_c, 0);
  cfg.fail_fast = false;
  out = run(r, cfg);
  EXPECT_EQ(out.results.size(), 3u);
  EXPECT_EQ(calls_c, 1);
}

TEST(Run, ExceptionsBecomeFailures) {
  Registry r;
  r.add({"x.throws", "", [](const CheckContext&) -> CheckResult { throw std::runtime_error("boom"); }});
  auto out = run(r, {});
  ASSERT_EQ(out.results.size(), 1u);
  EXPECT_EQ(out.results[0].status, Status::fail);
  EXPECT_NE(out.results[0].witness.find("boom"), std::string::npos);
  EXPECT_EQ(out.exit_code, 1);
}

TEST(Run, ExitCodes) {
  auto code = [](Status s, const std::string& id) {
    CheckResult r;
    r.id = id;
    r.status = s;
    return exit_code_for({r});
  };
  EXPECT_EQ(code(Status::pass, "a"), 0);
  EXPECT_EQ(code(Status::inconclusive, "a"), 0);
  EXPECT_EQ(code(Status::fail, "a"), 1);
  EXPECT_EQ(code(Status::discrepancy, "intersection.system.typeR"), 1);
  EXPECT_EQ(code(Status::discrepancy, "intersection.system.typeIR"), 0);
}

TEST(Run, FullRunIsCleanAndDeterministic) {
  RunConfig cfg;
  cfg.context.seed = 1;
  auto a = run(testing_support::registry(), cfg);
  cfg.threads = 1;
  auto b = run(testing_support::registry(), cfg);
  EXPECT_EQ(a.exit_code, 0);
  for (const auto& r : a.results)
    EXPECT_TRUE(r.status == Status::pass || r.id == "intersection.system.typeIR") << testing_support::describe(r);
  EXPECT_EQ(render_machine(a.results, true), render_machine(b.results, true));
  EXPECT_EQ(render_text(a.results), render_text(b.results));
}

TEST(Report, MachineLinesValidateAgainstTheSchema) {
  std::ifstream in(std::string(QFANO_SOURCE_DIR) + "/docs/report.schema.json");
  ASSERT_TRUE(in);
  json schema = json::parse(in);
  RunConfig cfg;
  cfg.patterns = {"intersection", "core", "typeR.two_relations"};
  auto out = run(testing_support::registry(), cfg);
  for (bool certs : {false, true}) {
    auto ls = lines(render_machine(out.results, certs));
    ASSERT_EQ(ls.size(), out.results.size());
    for (std::size_t i = 0; i < ls.size(); ++i) {
      json v = json::parse(ls[i]);
      validate(v, schema, out.results[i].id);
      EXPECT_EQ(v["id"], out.results[i].id);
      EXPECT_EQ(v["elapsed"], 0);
    }
  }
}

TEST(Report, TextSummary) {
  CheckResult a, b;
  a.id = "a";
  b.id = "b";
  b.status = Status::fail;
  b.witness = "w";
  auto text = render_text({a, b});
  EXPECT_NE(text.find("FAIL"), std::string::npos);
  EXPECT_NE(text.find("witness: w"), std::string::npos);
  EXPECT_NE(text.find("2 checks: 1 pass, 1 fail"), std::string::npos);
}

TEST(Run, LFormsExampleThroughTheRunner) {
  RunConfig cfg;
  cfg.patterns = {"*.lforms"};
  cfg.context.lforms_path = std::string(QFANO_SOURCE_DIR) + "/docs/lforms.example.json";
  auto out = run(testing_support::registry(), cfg);
  ASSERT_EQ(out.results.size(), 2u);
  for (const auto& r : out.results) {
    EXPECT_EQ(r.status, Status::pass) << testing_support::describe(r);
    EXPECT_EQ(r.notes.find("no instance supplied"), std::string::npos);
  }
}
