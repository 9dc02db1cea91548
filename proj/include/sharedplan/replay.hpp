#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "script.hpp"

namespace sharedplan {

enum class TraceLevel { Events, Ledgers, Full };

struct ReplayOptions {
  TraceLevel trace = TraceLevel::Events;
  bool dump_store = false;
};

struct ReplayResult {
  int exit_code;  // 0 clean, 2 unexplained events or open segments
  std::string output;
};

/// Everything one replay needs, loaded against a single arity table so
/// act-type arities stay consistent across the three files.
struct LoadedBundle {
  ArityTable arity;
  RecipeRegistry registry;
  OracleTable oracle;
  ScriptFile script;
};

inline LoadedBundle load_bundle(std::string_view recipes_text, std::string_view oracle_text,
                                std::string_view script_text) {
  ArityTable arity;
  RecipeRegistry registry = load_recipes(recipes_text, arity);
  OracleTable oracle = load_oracle(oracle_text);
  oracle.validate_total(registry);
  ScriptFile script = parse_script(script_text, arity);
  return LoadedBundle{std::move(arity), std::move(registry), std::move(oracle),
                      std::move(script)};
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Replays the script and renders the per-event classification log
/// followed by the final intentional structure. Exit code 0 iff every
/// event was explained and every segment closed; 2 otherwise.
inline ReplayResult run_replay(const LoadedBundle& bundle, const ReplayOptions& opts = {}) {
  const ScriptFile& script = bundle.script;
  DiscourseProcessor proc(script.agents, bundle.registry, bundle.oracle);

  std::string out;
  out += "agents: " + render(script.agents) + "\n";
  auto initial = proc.initialize(script.root_holder, script.root_objective, script.init_items);
  const Segment& root = proc.segments().front();
  out += "[t0] init: root segment " + root.id.str() + " (plan " + root.plan.str() +
         ") dsp (int-th " + root.icp.str() + " " + render(root.dsp) + ")\n";
  if (!initial.empty()) {
    out += "[t0] init: established ";
    for (std::size_t i = 0; i < initial.size(); ++i) {
      if (i) out += ", ";
      out += render(initial[i]);
    }
    out += "\n";
  }

  int unexplained = 0;
  for (const auto& ev : script.events) {
    out += "[t" + std::to_string(ev.turn.index) + "] " + ev.speaker.str() + ": " +
           render(ev.move) + "\n";
    Classification c = proc.process_event(ev);
    if (c.kind == Classification::Kind::Unexplained) ++unexplained;
    for (const auto& line : describe(c)) out += "     -> " + line + "\n";
    if (opts.trace >= TraceLevel::Ledgers) {
      const Segment* inner = proc.innermost_open();
      if (inner) {
        out += dump_plan(proc.plans(), inner->plan, 5);
      } else {
        out += "     (no open segment)\n";
      }
    }
    if (opts.trace >= TraceLevel::Full) {
      out += "     store:\n";
      std::istringstream dump(proc.store().dump());
      std::string line;
      while (std::getline(dump, line)) out += "       " + line + "\n";
    }
  }

  std::size_t closed = 0;
  for (const auto& s : proc.segments()) {
    if (s.closed) ++closed;
  }
  out += "result: segments " + std::to_string(proc.segments().size()) + ", closed " +
         std::to_string(closed) + ", unexplained " + std::to_string(unexplained) + "\n";
  out += proc.render_structure();
  if (opts.dump_store) {
    out += "store:\n";
    out += proc.store().dump();
  }

  int code = 0;
  if (unexplained > 0 || !proc.all_closed()) code = 2;
  return ReplayResult{code, std::move(out)};
}

}  // namespace sharedplan
