#include <catch2/catch.hpp>

#include "support/builders.hpp"

using namespace builders;

namespace {
std::string fixture(const std::string& name) { return read_file(std::string(FIXTURE_DIR) + "/" + name); }
}  // namespace

TEST_CASE("the bundled script parses into its header and events") {
  ArityTable arity;
  auto script = parse_script(fixture("flywheel.script"), arity);
  CHECK(script.agents == ag({"a", "e"}));
  CHECK(script.root_holder == sym("e"));
  CHECK(script.events.size() == 8);
  CHECK(script.init_items.size() == 7);
  CHECK(std::holds_alternative<OpenDsp>(script.events[0].move));
  CHECK(std::holds_alternative<Convey>(script.events[1].move));
  CHECK(std::holds_alternative<Commit>(script.events[2].move));
}

TEST_CASE("an empty script is a missing header") {
  ArityTable arity;
  CHECK_THROWS_AS(parse_script("", arity), ParseError);
  CHECK_THROWS_AS(parse_script("(script (agents a e))", arity), ParseError);
}

TEST_CASE("event turns must be strictly increasing") {
  ArityTable arity;
  std::string base = R"((script
    (agents a e)
    (root-dsp e (go :agents (a) :t 0))
    (events
      (event 3 a (close))
      (event 2 e (close)))))";
  CHECK_THROWS_AS(parse_script(base, arity), DuplicateTurn);

  std::string dup = R"((script
    (agents a e)
    (root-dsp e (go :agents (a) :t 0))
    (events
      (event 2 a (close))
      (event 2 e (close)))))";
  CHECK_THROWS_AS(parse_script(dup, arity), DuplicateTurn);
}

TEST_CASE("speakers, holders, and fact agents must be declared") {
  ArityTable arity;
  CHECK_THROWS_AS(parse_script(R"((script
    (agents a e)
    (root-dsp zed (go :agents (a) :t 0))
    (events)))",
                               arity),
                  UndeclaredSymbol);
  CHECK_THROWS_AS(parse_script(R"((script
    (agents a e)
    (root-dsp e (go :agents (a) :t 0))
    (events (event 1 zed (close)))))",
                               arity),
                  UndeclaredSymbol);
  CHECK_THROWS_AS(parse_script(R"((script
    (agents a e)
    (root-dsp e (go :agents (a) :t 0))
    (init (bel zed (in-recipes r1 go)))
    (events)))",
                               arity),
                  UndeclaredSymbol);
}

TEST_CASE("commit moves accept only intention facts") {
  ArityTable arity;
  CHECK_THROWS_AS(parse_script(R"((script
    (agents a e)
    (root-dsp e (go :agents (a) :t 0))
    (events (event 1 a (commit (bel a (in-recipes r1 go)))))))",
                               arity),
                  ParseError);
}

TEST_CASE("parse-render-parse is the identity on structural content") {
  ArityTable arity;
  auto script = parse_script(fixture("flywheel.script"), arity);
  ArityTable arity2;
  auto script2 = parse_script(render_script(script), arity2);
  CHECK(script == script2);
  CHECK(render_script(script) == render_script(script2));
}

TEST_CASE("arities stay consistent across recipe library and script") {
  ArityTable arity;
  load_recipes(fixture("flywheel.recipes"), arity);
  CHECK(arity.arity_of(sym("remove-flywheel")) == 1);
  CHECK_THROWS_AS(parse_script(R"((script
    (agents a e)
    (root-dsp e (remove-flywheel ac1 extra :agents (a) :t 0))
    (events)))",
                               arity),
                  ArityMismatch);
}

TEST_CASE("the bundle loader enforces oracle totality") {
  CHECK_THROWS_AS(load_bundle(fixture("flywheel.recipes"),
                              "(oracle (id-constraint remove-pump 1 m (sorts compressor-at)))",
                              fixture("flywheel.script")),
                  OracleGap);
}

TEST_CASE("the replay exits clean on the bundled dialogue") {
  auto bundle = load_bundle(fixture("flywheel.recipes"), fixture("flywheel.oracle"),
                            fixture("flywheel.script"));
  auto result = run_replay(bundle);
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("unexplained 0") != std::string::npos);
}

TEST_CASE("an unexplainable purpose turns into exit code two") {
  std::string script = R"((script
    (agents a e)
    (root-dsp e (remove-pump ac1 :agents (a) :t 0))
    (init (mb (a e) (in-recipes r-pump remove-pump)))
    (events
      (event 1 a (open-dsp a (achieve (has-recipe (a) (paint-fence f1 :agents (a) :t 0))))))))";
  auto bundle =
      load_bundle(fixture("flywheel.recipes"), fixture("flywheel.oracle"), script);
  auto result = run_replay(bundle);
  CHECK(result.exit_code == 2);
  CHECK(result.output.find("unexplained") != std::string::npos);
}

TEST_CASE("an unfinished dialogue leaves segments open and exits two") {
  std::string script = R"((script
    (agents a e)
    (root-dsp e (remove-pump ac1 :agents (a) :t 0))
    (init (mb (a e) (in-recipes r-pump remove-pump)))
    (events
      (event 1 a (commit (int-to a (remove-flywheel ac1 :agents (a) :t 0)))))))";
  auto bundle =
      load_bundle(fixture("flywheel.recipes"), fixture("flywheel.oracle"), script);
  auto result = run_replay(bundle);
  CHECK(result.exit_code == 2);
}

TEST_CASE("trace levels add ledgers and store dumps deterministically") {
  auto bundle = load_bundle(fixture("flywheel.recipes"), fixture("flywheel.oracle"),
                            fixture("flywheel.script"));
  ReplayOptions ledgers{TraceLevel::Ledgers, false};
  ReplayOptions full{TraceLevel::Full, true};
  auto a1 = run_replay(bundle, ledgers);
  auto a2 = run_replay(bundle, ledgers);
  CHECK(a1.output == a2.output);
  auto b = run_replay(bundle, full);
  CHECK(b.output.find("store:") != std::string::npos);
  CHECK(b.output.size() > a1.output.size());
}
