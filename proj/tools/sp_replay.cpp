// Replay CLI: loads a recipe library, an identification-constraint
// table, and a dialogue script, then replays the script through the
// discourse processor and prints the classification log and the final
// intentional structure.
//
// Exit codes: 0 clean replay, 1 load or configuration error, 2 the
// replay had unexplained events or left segments open.

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sharedplan/sharedplan.hpp"

int main(int argc, char** argv) {
  CLI::App app{"SharedPlan dialogue replay"};

  std::string script_path;
  std::string recipes_path;
  std::string oracle_path;
  std::string out_path;
  std::string trace = "events";
  bool dump_store = false;

  app.add_option("script", script_path, "dialogue script file")->required();
  app.add_option("--recipes", recipes_path, "recipe library file")->required();
  app.add_option("--oracle", oracle_path, "identification-constraint table file")->required();
  app.add_option("--out", out_path, "write output here instead of stdout");
  app.add_option("--trace-level", trace, "events, ledgers, or full")
      ->check(CLI::IsMember({"events", "ledgers", "full"}));
  app.add_flag("--dump-store", dump_store, "append the final mental-state store dump");

  CLI11_PARSE(app, argc, argv);

  using namespace sharedplan;

  ReplayOptions opts;
  if (trace == "ledgers") opts.trace = TraceLevel::Ledgers;
  if (trace == "full") opts.trace = TraceLevel::Full;
  opts.dump_store = dump_store;

  try {
    LoadedBundle bundle =
        load_bundle(read_file(recipes_path), read_file(oracle_path), read_file(script_path));
    ReplayResult result = run_replay(bundle, opts);
    if (out_path.empty()) {
      std::cout << result.output;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 1;
      }
      out << result.output;
    }
    return result.exit_code;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
