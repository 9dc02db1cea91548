#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "mental_state.hpp"
#include "term.hpp"

namespace sharedplan {

/// A recipe constraint: a named condition on parameters, checked by
/// exact lookup against the world state.
struct Constraint {
  Symbol name;
  std::vector<ParamDescr> args;

  bool operator==(const Constraint&) const = default;

  ParamDescr as_atom() const { return ParamDescr(name, args); }
};

/// What an agent knows about how to do an act: constituent acts plus
/// constraints. Acts keep registration order but carry set semantics;
/// duplicates collapse. The distinguished empty recipe stands for
/// "no recipe needed" and is the only recipe allowed to have no acts.
class Recipe {
 public:
  Recipe(Symbol id, std::vector<ActionDescr> acts, std::vector<Constraint> constraints)
      : id_(std::move(id)), constraints_(std::move(constraints)) {
    for (auto& a : acts) {
      if (std::find(acts_.begin(), acts_.end(), a) == acts_.end()) acts_.push_back(std::move(a));
    }
    if (acts_.empty() && !(id_ == empty_id()))
      throw MalformedFact("recipe " + id_.str() + " has no constituent acts");
  }

  static const Symbol& empty_id() {
    static const Symbol id{std::string("r-empty")};
    return id;
  }

  static const Recipe& empty_recipe() {
    static const Recipe r{empty_id(), {}, {}};
    return r;
  }

  const Symbol& id() const { return id_; }
  const std::vector<ActionDescr>& acts() const { return acts_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  bool is_empty() const { return id_ == empty_id(); }

  bool operator==(const Recipe&) const = default;

 private:
  Symbol id_;
  std::vector<ActionDescr> acts_;
  std::vector<Constraint> constraints_;
};

/// Registry of recipes per act-type plus the basic-level designation.
/// Built once at load time, read-only afterwards.
class RecipeRegistry {
 public:
  void register_recipe(const Symbol& act_type, Recipe recipe) {
    if (basic_level_.count(act_type))
      throw BasicLevelConflict("act-type " + act_type.str() + " is basic-level");
    auto& recipes = by_act_type_[act_type];
    for (const auto& r : recipes) {
      if (r == recipe) return;
      if (r.id() == recipe.id())
        throw MalformedFact("recipe id " + recipe.id().str() + " already registered for " +
                            act_type.str() + " with different content");
    }
    recipes.push_back(std::move(recipe));
    std::sort(recipes.begin(), recipes.end(),
              [](const Recipe& a, const Recipe& b) { return a.id() < b.id(); });
  }

  void mark_basic_level(const Symbol& act_type) {
    auto it = by_act_type_.find(act_type);
    if (it != by_act_type_.end() && !it->second.empty())
      throw BasicLevelConflict("act-type " + act_type.str() + " already has recipes");
    basic_level_.insert(act_type);
  }

  bool is_basic_level(const Symbol& act_type) const { return basic_level_.count(act_type) > 0; }
  bool is_basic_level(const ActionDescr& a) const { return is_basic_level(a.act_type()); }

  /// Registered recipes for the act-type, sorted by recipe id. Empty
  /// for basic-level and unknown act-types.
  const std::vector<Recipe>& recipes_for(const Symbol& act_type) const {
    static const std::vector<Recipe> none;
    auto it = by_act_type_.find(act_type);
    return it == by_act_type_.end() ? none : it->second;
  }

  /// True iff every constraint of the recipe matches a world fact at t.
  bool constraints_satisfied(const WorldState& world, const Recipe& r, TimePoint t) const {
    for (const auto& c : r.constraints()) {
      if (!world.holds(c.as_atom(), t)) return false;
    }
    return true;
  }

  /// Every (act-type, parameter position) pair occurring in registered
  /// recipe acts; the identification-constraint table must cover all of
  /// them.
  std::vector<std::pair<Symbol, std::size_t>> recipe_act_positions() const {
    std::set<std::pair<Symbol, std::size_t>> seen;
    for (const auto& [act_type, recipes] : by_act_type_) {
      for (const auto& r : recipes) {
        for (const auto& act : r.acts()) {
          for (std::size_t i = 1; i <= act.params().size(); ++i) {
            seen.insert({act.act_type(), i});
          }
        }
      }
    }
    return {seen.begin(), seen.end()};
  }

 private:
  std::map<Symbol, std::vector<Recipe>> by_act_type_;
  std::set<Symbol> basic_level_;
};

// ---------------------------------------------------------------------------
// Recipe library file:
//   (recipes
//     (basic-level loosen pull-off)
//     (recipe remove-pump r-pump
//       (acts (remove-flywheel ac1 :agents (a) :t 0))
//       (constraints (pump-accessible ac1))))

inline RecipeRegistry load_recipes(std::string_view text, ArityTable& arity) {
  SExpr root = parse_sexpr(text);
  if (root.head() != "recipes") throw ParseError("expected (recipes ...)", root.line, root.col);
  RecipeRegistry reg;
  for (std::size_t i = 1; i < root.size(); ++i) {
    const SExpr& form = root.at(i);
    if (form.head() == "basic-level") {
      for (std::size_t j = 1; j < form.size(); ++j)
        reg.mark_basic_level(Symbol(form.at(j).atom_text()));
      continue;
    }
    if (form.head() != "recipe")
      throw ParseError("expected (recipe ...) or (basic-level ...)", form.line, form.col);
    if (form.size() < 3) throw ParseError("recipe needs act-type and id", form.line, form.col);
    Symbol act_type(form.at(1).atom_text());
    Symbol id(form.at(2).atom_text());
    std::vector<ActionDescr> acts;
    std::vector<Constraint> constraints;
    for (std::size_t j = 3; j < form.size(); ++j) {
      const SExpr& sect = form.at(j);
      if (sect.head() == "acts") {
        for (std::size_t k = 1; k < sect.size(); ++k)
          acts.push_back(action_from_sexpr(sect.at(k), arity));
      } else if (sect.head() == "constraints") {
        for (std::size_t k = 1; k < sect.size(); ++k) {
          const SExpr& c = sect.at(k);
          if (c.is_atom() || c.items().empty())
            throw ParseError("constraint must be (name args...)", c.line, c.col);
          std::vector<ParamDescr> args;
          for (std::size_t m = 1; m < c.size(); ++m) args.push_back(param_from_sexpr(c.at(m)));
          constraints.push_back(Constraint{Symbol(c.head()), std::move(args)});
        }
      } else {
        throw ParseError("unknown recipe section " + sect.head(), sect.line, sect.col);
      }
    }
    reg.register_recipe(act_type, Recipe(id, std::move(acts), std::move(constraints)));
  }
  return reg;
}

}  // namespace sharedplan
