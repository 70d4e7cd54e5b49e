#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "qfano/type_ir.hpp"
#include "qfano/verify.hpp"

using namespace qfano;

namespace {

constexpr const char* kSeedEnv = "QFANO_SEED";

int config_error(const std::string& msg) {
  std::cerr << "qfano-verify: " << msg << '\n';
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification kit for the Q-Fano key variety computations"};
  app.require_subcommand(1);

  std::vector<std::string> list_patterns;
  auto* list = app.add_subcommand("list", "print the ids of matching checks");
  list->add_option("patterns", list_patterns, "id prefixes or globs (* and ?)");

  std::vector<std::string> patterns;
  bool all = false, fail_fast = false, timing = false, certificates = false;
  std::optional<std::uint64_t> seed;
  int trials = kDefaultTrials;
  std::optional<int> degree_bound;
  std::string format = "text";
  std::optional<std::string> lforms;
  unsigned threads = 0;
  auto* run = app.add_subcommand("run", "run matching checks and print a report");
  run->add_option("patterns", patterns, "id prefixes or globs (* and ?)");
  run->add_flag("--all", all, "run every check (same as giving no pattern)");
  run->add_option("--seed", seed, std::string("sampling seed (default $") + kSeedEnv + " or " +
                                      std::to_string(kDefaultSeed) + ")");
  run->add_option("--trials", trials, "samples per randomized check")->check(CLI::Range(1, 1000000));
  run->add_option("--degree-bound", degree_bound, "cap on certificate coefficient degrees")
      ->check(CLI::NonNegativeNumber);
  run->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "machine"}));
  run->add_flag("--fail-fast", fail_fast, "stop at the first failing check");
  run->add_option("--lforms", lforms, "JSON file with six linear forms for the Type IR instance check");
  run->add_flag("--timing", timing, "report wall-clock times (breaks byte-identical reports)");
  run->add_flag("--certificates", certificates, "include certificate bodies in the machine report");
  run->add_option("--threads", threads, "worker threads (0 = hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  auto registry = verify::Registry::standard();

  if (*list) {
    for (const auto* c : registry.select(list_patterns)) std::cout << c->id << "  " << c->description << '\n';
    return 0;
  }

  verify::RunConfig config;
  if (!all) config.patterns = patterns;
  config.fail_fast = fail_fast;
  config.timing = timing;
  config.certificates = certificates;
  config.threads = threads;
  config.format = format == "machine" ? verify::Format::machine : verify::Format::text;
  config.context.trials = trials;
  config.context.degree_bound = degree_bound;
  if (seed) {
    config.context.seed = *seed;
  } else if (const char* env = std::getenv(kSeedEnv); env && *env) {
    try {
      std::size_t used = 0;
      config.context.seed = std::stoull(env, &used);
      if (env[used] != '\0') throw std::invalid_argument(env);
    } catch (const std::exception&) {
      return config_error(std::string(kSeedEnv) + " is not an unsigned integer: " + env);
    }
  }
  if (lforms) {
    try {
      type_ir::read_lforms(*lforms);
    } catch (const std::exception& e) {
      return config_error("cannot use --lforms " + *lforms + ": " + e.what());
    }
    config.context.lforms_path = lforms;
  }

  auto outcome = verify::run(registry, config);
  std::cout << (config.format == verify::Format::machine ? verify::render_machine(outcome.results, certificates)
                                                          : verify::render_text(outcome.results));
  return outcome.exit_code;
}
