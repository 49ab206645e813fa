#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biamalg/harness.hpp"
#include "biamalg/script.hpp"
#include "biamalg/serialize.hpp"
#include "biamalg/version.hpp"

namespace {

using nlohmann::json;
namespace bs = biamalg::script;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

bool write_json(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) {
    std::cerr << "biamalg: cannot write " << path << "\n";
    return false;
  }
  out << j.dump(2) << "\n";
  return static_cast<bool>(out);
}

int run_text(const std::string& text, const bs::RunOptions& options, const std::string& json_out) {
  bs::Script script;
  try {
    script = bs::parse_script(text);
  } catch (const bs::ParseError& e) {
    std::cerr << "biamalg: " << e.what() << "\n";
    return kExitUsage;
  }
  auto report = bs::run_script(script, options);
  std::cout << bs::render_text(report);
  if (!json_out.empty() && !write_json(json_out, bs::to_json(report))) return kExitFailure;
  return report.exit_code();
}

struct FuzzOptions {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::string filter = "none";
  std::size_t max_ring = 32;
  std::size_t max_result = 256;
  std::string json_out;
};

int fuzz(const FuzzOptions& opt) {
  using namespace biamalg;
  ConfigFilter filter;
  try {
    filter = parse_config_filter(opt.filter);
  } catch (const Error& e) {
    std::cerr << "biamalg: " << e.what() << "\n";
    return kExitUsage;
  }
  RandomBounds bounds;
  bounds.max_ring = opt.max_ring;
  bounds.max_result = opt.max_result;

  std::map<std::string, std::size_t> counts;
  json configs = json::array();
  for (std::size_t k = 0; k < opt.count; ++k) {
    const std::uint64_t seed = opt.seed + k;
    json entry{{"seed", seed}};
    std::string line = "seed " + std::to_string(seed) + ":";
    try {
      auto rc = random_config(seed, bounds, filter);
      entry["description"] = rc.description;
      entry["attempts"] = rc.attempts;
      json reports = json::array();
      for (const auto& r : verify_config(rc.config, filter)) {
        ++counts[std::string(to_string(r.status))];
        line += " " + r.theorem_id + "=" + std::string(to_string(r.status));
        reports.push_back(to_json(r));
      }
      entry["reports"] = std::move(reports);
      entry["error"] = nullptr;
      line += "  [" + rc.description + "]";
    } catch (const Error& e) {
      ++counts["error"];
      entry["error"] = json{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
      line += " error: " + std::string(e.what());
    }
    std::cout << line << "\n";
    configs.push_back(std::move(entry));
  }
  std::cout << "summary:";
  for (const auto& [status, n] : counts) std::cout << " " << status << "=" << n;
  std::cout << "\n";

  const bool ok = !counts.count("VIOLATION") && !counts.count("error");
  if (!opt.json_out.empty()) {
    json j{{"version", std::string(kVersion)},
           {"seed", opt.seed},
           {"count", opt.count},
           {"filter", std::string(to_string(filter))},
           {"status", ok ? "ok" : "failed"},
           {"summary", counts},
           {"configs", std::move(configs)}};
    if (!write_json(opt.json_out, j)) return kExitFailure;
  }
  return ok ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite commutative rings, bi-amalgamations and their ideal-theoretic properties"};
  app.set_version_flag("--version", std::string(biamalg::kVersion));
  app.require_subcommand(1);

  bs::RunOptions run_opts;
  std::string script_path, json_out;
  auto* run = app.add_subcommand("run", "Execute a script");
  run->add_option("script", script_path, "Script file")->required()->check(CLI::ExistingFile);
  run->add_option("--json-out", json_out, "Write the JSON report to this path");
  run->add_option("--seed", run_opts.seed, "Seed for sampled cross-checks");
  run->add_option("--max-elements", run_opts.max_elements, "Element cap for every constructed ring")
      ->check(CLI::PositiveNumber);
  run->add_flag("--fail-fast", run_opts.fail_fast, "Stop at the first failing statement");
  run->add_flag("--verbose", run_opts.verbose, "Include per-statement timings");

  std::string example_id;
  bs::RunOptions ex_opts;
  std::string ex_json_out;
  auto* example = app.add_subcommand("example", "Run a shipped example script");
  example->add_option("id", example_id, "2.5 or 2.7")->required()->check(CLI::IsMember({"2.5", "2.7"}));
  example->add_option("--json-out", ex_json_out, "Write the JSON report to this path");
  example->add_option("--seed", ex_opts.seed, "Seed for sampled cross-checks");
  example->add_flag("--verbose", ex_opts.verbose, "Include per-statement timings");
  example->add_flag("--print-script", "Print the script instead of running it");

  FuzzOptions fz;
  auto* fuzz_cmd = app.add_subcommand("fuzz", "Verify results on seeded random configurations");
  fuzz_cmd->add_option("--seed", fz.seed, "First seed");
  fuzz_cmd->add_option("--count", fz.count, "Number of configurations");
  fuzz_cmd->add_option("--filter", fz.filter, "none, prop2.4.2, thm2.1 or prop2.6");
  fuzz_cmd->add_option("--max-ring", fz.max_ring, "Bound on |B| and |C|")->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--max-result", fz.max_result, "Bound on the bi-amalgamation size")
      ->check(CLI::PositiveNumber);
  fuzz_cmd->add_option("--json-out", fz.json_out, "Write the JSON report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  if (*run) {
    std::ifstream in(script_path);
    std::stringstream buf;
    buf << in.rdbuf();
    return run_text(buf.str(), run_opts, json_out);
  }
  if (*example) {
    auto text = bs::example_script(example_id);
    if (example->count("--print-script")) {
      std::cout << *text;
      return 0;
    }
    return run_text(std::string(*text), ex_opts, ex_json_out);
  }
  return fuzz(fz);
}
