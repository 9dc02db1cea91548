#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "term.hpp"

namespace sharedplan {

// Belief contents. All propositions are finite terms compared structurally.

/// recipe-id is a recipe for the act-type
struct InRecipes {
  Symbol recipe_id;
  Symbol act_type;
  bool operator==(const InRecipes&) const = default;
};

/// the action is executable at will, no recipe needed
struct BasicLevelProp {
  ActionDescr action;
  bool operator==(const BasicLevelProp&) const = default;
};

/// the constraint applies to the parameter description
struct SuffForIdProp {
  Symbol constraint;
  ParamDescr param;
  bool operator==(const SuffForIdProp&) const = default;
};

/// `other` is in the agent's individuating set anchored at `anchor`
struct InIsProp {
  Symbol agent;
  ParamDescr anchor;
  ParamDescr other;
  bool operator==(const InIsProp&) const = default;
};

/// shared-witness form used under mutual belief: `witness` is in every
/// group member's individuating set anchored at `anchor`
struct InIsSharedProp {
  ParamDescr anchor;
  ParamDescr witness;
  bool operator==(const InIsSharedProp&) const = default;
};

/// a recipe constraint holds
struct ConstraintHoldsProp {
  Symbol name;
  std::vector<ParamDescr> args;
  bool operator==(const ConstraintHoldsProp&) const = default;
};

/// uninterpreted world-state atom
struct GroundProp {
  ParamDescr atom;
  bool operator==(const GroundProp&) const = default;
};

/// the agents have a recipe for the action; recipe_id empty means "some
/// recipe", the form used as an information-seeking objective
struct HasRecipeProp {
  AgentSet agents;
  ActionDescr action;
  std::optional<Symbol> recipe_id;
  bool operator==(const HasRecipeProp&) const = default;
};

using Proposition = std::variant<InRecipes, BasicLevelProp, SuffForIdProp, InIsProp,
                                 InIsSharedProp, ConstraintHoldsProp, GroundProp, HasRecipeProp>;

/// the agents have a description of the parameter satisfying the named
/// identification constraint
struct HasSatDescrProp {
  AgentSet agents;
  ParamDescr param;
  Symbol constraint;
  bool operator==(const HasSatDescrProp&) const = default;
};

/// Objective of an information-seeking segment: make a knowledge
/// precondition true.
struct AchieveGoal {
  std::variant<HasRecipeProp, HasSatDescrProp> target;
  bool operator==(const AchieveGoal&) const = default;
};

/// What a plan is for: an action, or achieving a knowledge precondition.
using PlanObjective = std::variant<ActionDescr, AchieveGoal>;

/// Content of an intention-that fact: that a group's plan for an
/// objective be complete (full), i.e. that the group succeed.
struct PlanGoal {
  AgentSet agents;
  PlanObjective objective;
  bool operator==(const PlanGoal&) const = default;
};

// ---------------------------------------------------------------------------
// Surface syntax.

inline SExpr to_sexpr(const Proposition& p);
inline SExpr to_sexpr(const AchieveGoal& g);
inline SExpr to_sexpr(const PlanObjective& o);
inline SExpr to_sexpr(const PlanGoal& g);

inline SExpr to_sexpr(const HasRecipeProp& p) {
  std::vector<SExpr> items{SExpr::atom("has-recipe"), to_sexpr(p.agents), to_sexpr(p.action)};
  if (p.recipe_id) items.push_back(SExpr::atom(p.recipe_id->str()));
  return SExpr::list(std::move(items));
}

inline SExpr to_sexpr(const HasSatDescrProp& p) {
  return SExpr::list({SExpr::atom("has-sat-descr"), to_sexpr(p.agents), to_sexpr(p.param),
                      SExpr::atom(p.constraint.str())});
}

inline SExpr to_sexpr(const Proposition& p) {
  return std::visit(
      [](const auto& v) -> SExpr {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, InRecipes>) {
          return SExpr::list({SExpr::atom("in-recipes"), SExpr::atom(v.recipe_id.str()),
                              SExpr::atom(v.act_type.str())});
        } else if constexpr (std::is_same_v<T, BasicLevelProp>) {
          return SExpr::list({SExpr::atom("basic-level"), to_sexpr(v.action)});
        } else if constexpr (std::is_same_v<T, SuffForIdProp>) {
          return SExpr::list(
              {SExpr::atom("suff-for-id"), SExpr::atom(v.constraint.str()), to_sexpr(v.param)});
        } else if constexpr (std::is_same_v<T, InIsProp>) {
          return SExpr::list({SExpr::atom("in-is"), SExpr::atom(v.agent.str()),
                              to_sexpr(v.anchor), to_sexpr(v.other)});
        } else if constexpr (std::is_same_v<T, InIsSharedProp>) {
          return SExpr::list(
              {SExpr::atom("in-is-shared"), to_sexpr(v.anchor), to_sexpr(v.witness)});
        } else if constexpr (std::is_same_v<T, ConstraintHoldsProp>) {
          std::vector<SExpr> items{SExpr::atom("constraint-holds"), SExpr::atom(v.name.str())};
          for (const auto& a : v.args) items.push_back(to_sexpr(a));
          return SExpr::list(std::move(items));
        } else if constexpr (std::is_same_v<T, GroundProp>) {
          return SExpr::list({SExpr::atom("ground"), to_sexpr(v.atom)});
        } else {
          return to_sexpr(static_cast<const HasRecipeProp&>(v));
        }
      },
      p);
}

inline Proposition proposition_from_sexpr(const SExpr& s, ArityTable& arity) {
  const std::string& head = s.head();
  if (head == "in-recipes") {
    if (s.size() != 3) throw ParseError("in-recipes takes 2 arguments", s.line, s.col);
    return InRecipes{Symbol(s.at(1).atom_text()), Symbol(s.at(2).atom_text())};
  }
  if (head == "basic-level") {
    if (s.size() != 2) throw ParseError("basic-level takes 1 argument", s.line, s.col);
    return BasicLevelProp{action_from_sexpr(s.at(1), arity)};
  }
  if (head == "suff-for-id") {
    if (s.size() != 3) throw ParseError("suff-for-id takes 2 arguments", s.line, s.col);
    return SuffForIdProp{Symbol(s.at(1).atom_text()), param_from_sexpr(s.at(2))};
  }
  if (head == "in-is") {
    if (s.size() != 4) throw ParseError("in-is takes 3 arguments", s.line, s.col);
    return InIsProp{Symbol(s.at(1).atom_text()), param_from_sexpr(s.at(2)),
                    param_from_sexpr(s.at(3))};
  }
  if (head == "in-is-shared") {
    if (s.size() != 3) throw ParseError("in-is-shared takes 2 arguments", s.line, s.col);
    return InIsSharedProp{param_from_sexpr(s.at(1)), param_from_sexpr(s.at(2))};
  }
  if (head == "constraint-holds") {
    if (s.size() < 2) throw ParseError("constraint-holds needs a name", s.line, s.col);
    std::vector<ParamDescr> args;
    for (std::size_t i = 2; i < s.size(); ++i) args.push_back(param_from_sexpr(s.at(i)));
    return ConstraintHoldsProp{Symbol(s.at(1).atom_text()), std::move(args)};
  }
  if (head == "ground") {
    if (s.size() != 2) throw ParseError("ground takes 1 argument", s.line, s.col);
    return GroundProp{param_from_sexpr(s.at(1))};
  }
  if (head == "has-recipe") {
    if (s.size() != 3 && s.size() != 4)
      throw ParseError("has-recipe takes 2 or 3 arguments", s.line, s.col);
    std::optional<Symbol> rid;
    if (s.size() == 4) rid = Symbol(s.at(3).atom_text());
    return HasRecipeProp{agents_from_sexpr(s.at(1)), action_from_sexpr(s.at(2), arity), rid};
  }
  throw ParseError("unknown proposition form " + head, s.line, s.col);
}

inline SExpr to_sexpr(const AchieveGoal& g) {
  SExpr inner = std::visit(
      [](const auto& t) -> SExpr {
        using T = std::decay_t<decltype(t)>;
        if constexpr (std::is_same_v<T, HasRecipeProp>) return to_sexpr(t);
        else return to_sexpr(static_cast<const HasSatDescrProp&>(t));
      },
      g.target);
  return SExpr::list({SExpr::atom("achieve"), std::move(inner)});
}

inline AchieveGoal achieve_from_sexpr(const SExpr& s, ArityTable& arity) {
  if (s.size() != 2) throw ParseError("achieve takes 1 argument", s.line, s.col);
  const SExpr& t = s.at(1);
  if (t.head() == "has-recipe") {
    auto p = proposition_from_sexpr(t, arity);
    return AchieveGoal{std::get<HasRecipeProp>(p)};
  }
  if (t.head() == "has-sat-descr") {
    if (t.size() != 4) throw ParseError("has-sat-descr takes 3 arguments", t.line, t.col);
    return AchieveGoal{HasSatDescrProp{agents_from_sexpr(t.at(1)), param_from_sexpr(t.at(2)),
                                       Symbol(t.at(3).atom_text())}};
  }
  throw ParseError("unknown achieve target " + t.head(), t.line, t.col);
}

inline SExpr to_sexpr(const PlanObjective& o) {
  if (std::holds_alternative<ActionDescr>(o)) return to_sexpr(std::get<ActionDescr>(o));
  return to_sexpr(std::get<AchieveGoal>(o));
}

inline PlanObjective objective_from_sexpr(const SExpr& s, ArityTable& arity) {
  if (s.is_list() && !s.items().empty() && s.at(0).is_atom() && s.head() == "achieve")
    return achieve_from_sexpr(s, arity);
  return action_from_sexpr(s, arity);
}

/// Plan goals print as (fsp (agents) objective) for groups and
/// (fip (agent) objective) for a single agent; both spellings parse.
inline SExpr to_sexpr(const PlanGoal& g) {
  return SExpr::list({SExpr::atom(g.agents.is_singleton() ? "fip" : "fsp"), to_sexpr(g.agents),
                      to_sexpr(g.objective)});
}

inline PlanGoal plan_goal_from_sexpr(const SExpr& s, ArityTable& arity) {
  if (s.size() != 3 || (s.head() != "fsp" && s.head() != "fip"))
    throw ParseError("expected (fsp ...) or (fip ...) plan goal", s.line, s.col);
  return PlanGoal{agents_from_sexpr(s.at(1)), objective_from_sexpr(s.at(2), arity)};
}

inline std::string render(const Proposition& p) { return to_text(to_sexpr(p)); }
inline std::string render(const AchieveGoal& g) { return to_text(to_sexpr(g)); }
inline std::string render(const PlanObjective& o) { return to_text(to_sexpr(o)); }
inline std::string render(const PlanGoal& g) { return to_text(to_sexpr(g)); }

}  // namespace sharedplan
