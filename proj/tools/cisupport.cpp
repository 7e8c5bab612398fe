#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cisupport/cli/cache.hpp"
#include "cisupport/cli/run.hpp"

using namespace cisupport;

int main(int argc, char** argv) {
  CLI::App app{"Support varieties over graded complete intersections"};
  std::string command, input, cache_dir, json_out;
  bool timing = false;
  app.add_option("command", command, "resolve | betti | operators | variety | member | restrict | realize | check")
      ->required()
      ->check(CLI::IsMember(kCommandNames));
  app.add_option("--input", input, "job file");
  app.add_option("--cache-dir", cache_dir, "resolution cache directory (default: $CISUPPORT_CACHE)");
  app.add_option("--json-out", json_out, "write the report here instead of stdout");
  app.add_flag("--timing", timing, "report wall time and progress on stderr");
  app.allow_extras();
  app.footer(
      "Command options: --length N --window N --degree-bound D --point a1,..,ac\n"
      "  --subspace RxC:e11,e12,.. --cone \"p1;p2;..\" --seed S --module NAME --with NAME --allow-unstable");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return e.get_exit_code() == 0 ? app.exit(e) : (app.exit(e), kExitParse);
  }

  JobSpec job;
  try {
    std::vector<std::string> tokens{command};
    for (const auto& t : app.remaining()) tokens.push_back(t);
    CommandSpec cli = parse_command(tokens);
    if (!input.empty()) {
      std::ifstream in(input, std::ios::binary);
      if (!in) {
        std::cerr << input << ": cannot open\n";
        return kExitParse;
      }
      std::stringstream buf;
      buf << in.rdbuf();
      try {
        job = parse_input(buf.str());
      } catch (const JobParseError& e) {
        std::cerr << input << ":" << e.line() << ":" << e.column() << ": error: " << e.message() << "\n";
        return kExitParse;
      }
    } else if (command != "check") {
      std::cerr << "error: --input is required for " << command << "\n";
      return kExitParse;
    }
    CommandSpec merged = job.command.value_or(CommandSpec{});
    merged.merge(cli);
    job.command = merged;
    // Re-validate the merged command against the declared ring and modules.
    if (!input.empty()) {
      try {
        job = parse_input(render(job));
      } catch (const JobParseError& e) {
        std::cerr << "error: command line: " << e.message() << "\n";
        return kExitParse;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  }

  std::shared_ptr<FileCache> cache;
  if (cache_dir.empty())
    if (const char* env = std::getenv("CISUPPORT_CACHE")) cache_dir = env;
  if (!cache_dir.empty()) {
    cache = std::make_shared<FileCache>(cache_dir);
    set_resolution_store(cache);
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto seconds = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
  std::function<void(const std::string&)> progress;
  if (timing) progress = [&](const std::string& s) { std::cerr << "[" << seconds() << " s] " << s << "\n"; };

  RunReport rep;
  try {
    rep = command == "check" && input.empty() ? run_check(job.command->seed.value_or(1), progress) : run(job, progress);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
  if (timing) rep.json["wall_time_seconds"] = seconds();
  if (cache)
    std::cerr << "cache: " << cache->hits() << " hits, " << cache->misses() << " misses, " << cache->corrupt() << " corrupt\n";

  const std::string text = rep.json.dump(2) + "\n";
  if (json_out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(json_out, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out) {
      std::cerr << json_out << ": cannot write\n";
      return kExitError;
    }
  }
  return rep.exit_code;
}
