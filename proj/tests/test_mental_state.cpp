#include <catch2/catch.hpp>

#include "support/builders.hpp"

using namespace builders;

namespace {
Proposition recipe_prop() { return InRecipes{sym("r1"), sym("remove-pump")}; }
}  // namespace

TEST_CASE("mutual belief persists and projects to member belief") {
  MentalStateStore ms;
  ms.assert_fact(mb({"a", "e"}, recipe_prop(), 3));
  CHECK(ms.holds_mb(ag({"a", "e"}), recipe_prop(), turn(5)));
  CHECK(ms.holds_bel(sym("a"), recipe_prop(), turn(5)));
  CHECK(ms.holds_bel(sym("e"), recipe_prop(), turn(3)));
  CHECK_FALSE(ms.holds_mb(ag({"a", "e"}), recipe_prop(), turn(2)));
}

TEST_CASE("a singleton mutual belief is malformed") {
  MentalStateStore ms;
  CHECK_THROWS_AS(ms.assert_fact(MentalFact{FactKind::Mb, ag({"a"}), recipe_prop(), turn(0)}),
                  MalformedFact);
}

TEST_CASE("a group plain belief is malformed") {
  MentalStateStore ms;
  CHECK_THROWS_AS(
      ms.assert_fact(MentalFact{FactKind::Bel, ag({"a", "e"}), recipe_prop(), turn(0)}),
      MalformedFact);
}

TEST_CASE("belief queries respect the empty store and fact start times") {
  MentalStateStore ms;
  CHECK_FALSE(ms.holds_bel(sym("a"), recipe_prop(), turn(0)));
  ms.assert_fact(bel("a", recipe_prop(), 2));
  CHECK_FALSE(ms.holds_bel(sym("a"), recipe_prop(), turn(1)));
  CHECK(ms.holds_bel(sym("a"), recipe_prop(), turn(2)));
  CHECK(ms.holds_bel(sym("a"), recipe_prop(), turn(9)));
}

TEST_CASE("intention facts are validated against their holder") {
  MentalStateStore ms;
  auto lift = act("lift", {pd("ac1")}, {"a"});
  ms.assert_fact(int_to("a", lift, 1));
  CHECK(ms.holds_int_to(sym("a"), lift, turn(1)));
  CHECK_FALSE(ms.holds_int_to(sym("e"), lift, turn(1)));
  CHECK_THROWS_AS(ms.assert_fact(int_to("e", lift)), MalformedFact);
}

TEST_CASE("a multi-agent action cannot be believed basic-level") {
  MentalStateStore ms;
  auto duo = act("carry", {pd("ac1")}, {"a", "e"});
  CHECK_THROWS_AS(ms.assert_fact(bel("a", BasicLevelProp{duo})), MalformedFact);
}

TEST_CASE("individuating sets start at the anchor and honor time") {
  MentalStateStore ms;
  auto flywheel = pd("flywheel", pd("ac1"));
  CHECK(ms.individuating_set(sym("a"), flywheel, turn(0)) ==
        std::vector<ParamDescr>{flywheel});

  auto residence = pd("residence", pd("john"));
  auto yellow = pd("yellow-house", pd("cherry-st"));
  ms.add_codesignation(sym("a"), residence, yellow, turn(1));
  auto is = ms.individuating_set(sym("a"), residence, turn(2));
  CHECK(is.size() == 2);
  CHECK(std::find(is.begin(), is.end(), yellow) != is.end());

  ms.add_codesignation(sym("a"), flywheel, pd("big-wheel"), turn(5));
  CHECK(ms.individuating_set(sym("a"), flywheel, turn(3)) ==
        std::vector<ParamDescr>{flywheel});
}

TEST_CASE("codesignation is symmetric, private, and idempotent") {
  MentalStateStore ms;
  auto p = pd("residence", pd("john"));
  auto q = pd("yellow-house", pd("cherry-st"));
  ms.add_codesignation(sym("a"), p, q, turn(1));
  auto from_other_side = ms.individuating_set(sym("a"), q, turn(1));
  CHECK(std::find(from_other_side.begin(), from_other_side.end(), p) != from_other_side.end());

  CHECK(ms.individuating_set(sym("e"), p, turn(1)) == std::vector<ParamDescr>{p});

  auto before = ms.dump();
  ms.add_codesignation(sym("a"), p, q, turn(1));
  ms.add_codesignation(sym("a"), q, p, turn(1));
  CHECK(ms.dump() == before);
}

TEST_CASE("codesignation closure is symmetric but not transitive") {
  MentalStateStore ms;
  auto p = pd("p"), q = pd("q"), r = pd("r");
  ms.add_codesignation(sym("a"), p, q, turn(0));
  ms.add_codesignation(sym("a"), q, r, turn(0));
  auto is_p = ms.individuating_set(sym("a"), p, turn(0));
  CHECK(is_p.size() == 2);
  CHECK(std::find(is_p.begin(), is_p.end(), r) == is_p.end());
  CHECK(ms.individuating_set(sym("a"), q, turn(0)).size() == 3);
}

TEST_CASE("facts can be retracted from a time onward") {
  MentalStateStore ms;
  ms.assert_fact(bel("a", recipe_prop(), 1));
  ms.retract_fact(FactKind::Bel, ag({"a"}), Proposition{recipe_prop()}, turn(4));
  CHECK(ms.holds_bel(sym("a"), recipe_prop(), turn(3)));
  CHECK_FALSE(ms.holds_bel(sym("a"), recipe_prop(), turn(4)));
  CHECK_FALSE(ms.holds_bel(sym("a"), recipe_prop(), turn(7)));
}

TEST_CASE("world facts persist, retract, and feed constraint lookup") {
  WorldState world;
  auto atom = pd("have", pd("a"), pd("allen-wrench"));
  CHECK_FALSE(world.holds(atom, turn(0)));
  world.add(atom, turn(1));
  CHECK(world.holds(atom, turn(5)));
  world.retract(atom, turn(6));
  CHECK_FALSE(world.holds(atom, turn(6)));
}

TEST_CASE("the store dump is sorted and insertion-order independent") {
  auto build = [](bool flipped) {
    MentalStateStore ms;
    std::vector<MentalFact> facts{
        bel("a", recipe_prop(), 0),
        mb({"a", "e"}, InIsSharedProp{pd("ac1"), pd("compressor-at", pd("workbench"))}, 0),
        int_to("a", act("lift", {pd("ac1")}, {"a"}), 2),
    };
    if (flipped) std::reverse(facts.begin(), facts.end());
    for (auto& f : facts) ms.assert_fact(f);
    ms.world().add(pd("power-off", pd("ac1")), turn(0));
    return ms.dump();
  };
  auto a = build(false);
  auto b = build(true);
  CHECK(a == b);
  CHECK(a.find("(bel a (in-recipes r1 remove-pump))") != std::string::npos);
}

TEST_CASE("a wider group's mutual belief covers its subgroups") {
  MentalStateStore ms;
  ms.assert_fact(mb({"a", "e", "c"}, recipe_prop()));
  CHECK(ms.holds_mb(ag({"a", "e"}), recipe_prop(), turn(0)));
  CHECK(ms.holds_mb(ag({"e", "c"}), recipe_prop(), turn(0)));
  ms.assert_fact(mb({"a", "e"}, InIsSharedProp{pd("x"), pd("y")}));
  CHECK_FALSE(ms.holds_mb(ag({"a", "e", "c"}), InIsSharedProp{pd("x"), pd("y")}, turn(0)));
}

TEST_CASE("privacy: one agent's facts never answer for another") {
  MentalStateStore ms;
  ms.assert_fact(bel("a", recipe_prop()));
  CHECK_FALSE(ms.holds_bel(sym("e"), recipe_prop(), turn(0)));
  CHECK_FALSE(ms.holds_mb(ag({"a", "e"}), recipe_prop(), turn(0)));
}
