#pragma once

#include "builders.hpp"

// A compressor-servicing scenario with one single-agent and one
// multi-agent constituent act, rich enough to establish every
// requirement kind. The store built by rich_store() lets the full
// ledger derive to completion.
namespace fixtures {

using namespace builders;

struct Rich {
  ActionDescr svc = act("service-compressor", {pd("ac1")}, {"a", "e"});
  ActionDescr drain = act("drain-tank", {pd("ac1")}, {"a"});
  ActionDescr lift = act("lift-housing", {pd("ac1")}, {"a", "e"});
  ActionDescr hold = act("hold-housing", {pd("ac1")}, {"a"});
  ActionDescr raise = act("raise-housing", {pd("ac1")}, {"e"});
  ParamDescr machine = pd("ac1");
  ParamDescr machine_descr = pd("compressor-at", pd("workbench"));

  RecipeRegistry registry() const {
    RecipeRegistry reg;
    reg.mark_basic_level(sym("drain-tank"));
    reg.mark_basic_level(sym("hold-housing"));
    reg.mark_basic_level(sym("raise-housing"));
    reg.register_recipe(sym("service-compressor"), Recipe(sym("r-svc"), {drain, lift}, {}));
    reg.register_recipe(sym("lift-housing"),
                        Recipe(sym("r-lift"), {hold, raise},
                               {Constraint{sym("straps-on"), {pd("ac1")}}}));
    return reg;
  }

  OracleTable oracle() const {
    OracleTable t;
    IdConstraint locatable{sym("machine-locatable"), {sym("compressor-at")}};
    t.add(sym("drain-tank"), 1, locatable);
    t.add(sym("lift-housing"), 1, locatable);
    t.add(sym("hold-housing"), 1, locatable);
    t.add(sym("raise-housing"), 1, locatable);
    t.add(sym("service-compressor"), 1, locatable);
    return t;
  }

  MentalStateStore rich_store() const {
    MentalStateStore ms;
    ms.assert_fact(mb({"a", "e"}, InRecipes{sym("r-svc"), sym("service-compressor")}));
    ms.assert_fact(mb({"a", "e"}, InRecipes{sym("r-lift"), sym("lift-housing")}));
    ms.assert_fact(bel("a", BasicLevelProp{drain}));
    ms.assert_fact(bel("a", BasicLevelProp{hold}));
    ms.assert_fact(bel("e", BasicLevelProp{raise}));
    ms.add_codesignation(sym("a"), machine, machine_descr, turn(0));
    ms.add_codesignation(sym("e"), machine, machine_descr, turn(0));
    ms.assert_fact(mb({"a", "e"}, InIsSharedProp{machine, machine_descr}));
    ms.assert_fact(mb({"a", "e"}, ConstraintHoldsProp{sym("straps-on"), {pd("ac1")}}));
    ms.assert_fact(int_to("a", drain));
    ms.assert_fact(int_to("a", hold));
    ms.assert_fact(int_to("e", raise));
    for (auto who : {"a", "e"}) {
      ms.assert_fact(int_th(who, succeed(ag({"a"}), drain)));
      ms.assert_fact(int_th(who, succeed(ag({"a"}), hold)));
      ms.assert_fact(int_th(who, succeed(ag({"e"}), raise)));
      ms.assert_fact(int_th(who, succeed(ag({"a", "e"}), lift)));
    }
    return ms;
  }

  /// Plan for svc derived to completion against rich_store().
  PlanStore complete_plans(const MentalStateStore& ms) const {
    PlanStore plans;
    plans.add(Plan::for_action(sym("P1"), PlanKind::Shared, ag({"a", "e"}), svc));
    RecipeRegistry reg = registry();
    OracleTable orc = oracle();
    EvalContext ctx{ms, reg, orc};
    derive_establishments(plans, sym("P1"), ctx, turn(0));
    return plans;
  }
};

}  // namespace fixtures
