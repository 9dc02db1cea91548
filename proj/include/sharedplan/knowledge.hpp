#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "mental_state.hpp"
#include "recipe.hpp"

namespace sharedplan {

/// A context-dependent standard a description must meet before it
/// counts as identifying a parameter, decided by the root symbol of
/// the candidate description.
struct IdConstraint {
  Symbol name;
  std::set<Symbol> sorts;

  bool operator==(const IdConstraint&) const = default;
};

/// True iff the constraint applies to the description, i.e. the
/// description's root symbol is one of the constraint's sorts.
inline bool suff_for_id(const IdConstraint& c, const ParamDescr& p) {
  return c.sorts.count(p.root()) > 0;
}

/// Table backing the identification-constraint oracle: one entry per
/// (act-type, 1-based parameter position). Supplied as data alongside
/// the recipe library and required to cover every parameter position
/// occurring in registered recipe acts.
class OracleTable {
 public:
  void add(const Symbol& act_type, std::size_t position, IdConstraint c) {
    entries_.insert_or_assign({act_type, position}, std::move(c));
  }

  const IdConstraint& lookup(const Symbol& act_type, std::size_t position) const {
    auto it = entries_.find({act_type, position});
    if (it == entries_.end())
      throw OracleGap("no identification constraint for (" + act_type.str() + ", " +
                      std::to_string(position) + ")");
    return it->second;
  }

  const IdConstraint* find_by_name(const Symbol& name) const {
    for (const auto& [key, c] : entries_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }

  void validate_total(const RecipeRegistry& reg) const {
    for (const auto& [act_type, pos] : reg.recipe_act_positions()) {
      lookup(act_type, pos);
    }
  }

 private:
  std::map<std::pair<Symbol, std::size_t>, IdConstraint> entries_;
};

// ---------------------------------------------------------------------------
// has.recipe

/// All recipes the agents believe in for the action, sorted by recipe
/// id. Basic-level actions yield the empty recipe when a singleton
/// group believes the action is basic-level; a group never has a
/// recipe for a basic-level action. Non-basic actions yield every
/// registered recipe the group believes (mutually, when |G| > 1) to be
/// a recipe for the act-type.
inline std::vector<Recipe> believed_recipes(const MentalStateStore& ms, const RecipeRegistry& reg,
                                            const AgentSet& group, const ActionDescr& action,
                                            TimePoint t) {
  std::vector<Recipe> out;
  if (reg.is_basic_level(action)) {
    if (group.is_singleton() &&
        ms.holds_bel(group.single(), Proposition{BasicLevelProp{action}}, t)) {
      out.push_back(Recipe::empty_recipe());
    }
    return out;
  }
  for (const Recipe& r : reg.recipes_for(action.act_type())) {
    Proposition p{InRecipes{r.id(), action.act_type()}};
    bool believed = group.is_singleton() ? ms.holds_bel(group.single(), p, t)
                                         : ms.holds_mb(group, p, t);
    if (believed) out.push_back(r);
  }
  return out;
}

/// The agents' recipe for the action, if they have one. Ties between
/// several believed recipes break toward the lowest recipe id.
inline std::optional<Recipe> has_recipe(const MentalStateStore& ms, const RecipeRegistry& reg,
                                        const AgentSet& group, const ActionDescr& action,
                                        TimePoint t) {
  auto candidates = believed_recipes(ms, reg, group, action, t);
  if (candidates.empty()) return std::nullopt;
  return candidates.front();
}

// ---------------------------------------------------------------------------
// has.sat.descr and id.params

/// True iff the agents have a description of the parameter that is
/// suitable under the constraint.
///
/// For a single agent: some member of the agent's individuating set
/// for the parameter satisfies the constraint. For a group: a single
/// shared witness must satisfy the constraint, be in every member's
/// individuating set, and be mutually believed shared (the in-is-shared
/// fact).
inline bool has_sat_descr(const MentalStateStore& ms, const AgentSet& group, const ParamDescr& p,
                          const IdConstraint& c, TimePoint t) {
  if (group.is_singleton()) {
    for (const auto& candidate : ms.individuating_set(group.single(), p, t)) {
      if (suff_for_id(c, candidate)) return true;
    }
    return false;
  }
  // Any valid shared witness is in every member's set, so the first
  // member's set is a complete candidate pool.
  for (const auto& candidate : ms.individuating_set(group.members().front(), p, t)) {
    if (!suff_for_id(c, candidate)) continue;
    bool in_all = true;
    for (const auto& member : group.members()) {
      const auto is = ms.individuating_set(member, p, t);
      if (std::find(is.begin(), is.end(), candidate) == is.end()) {
        in_all = false;
        break;
      }
    }
    if (!in_all) continue;
    if (ms.holds_mb(group, Proposition{InIsSharedProp{p, candidate}}, t)) return true;
  }
  return false;
}

struct IdParamsResult {
  bool ok;
  std::vector<std::size_t> failing;  // 1-based parameter positions
};

/// True iff the agents can identify every parameter of the action
/// under the constraints the oracle assigns per position. On failure
/// the result names exactly the failing positions.
inline IdParamsResult id_params(const MentalStateStore& ms, const OracleTable& oracle,
                                const AgentSet& group, const ActionDescr& action, TimePoint t) {
  IdParamsResult result{true, {}};
  for (std::size_t i = 1; i <= action.params().size(); ++i) {
    const IdConstraint& c = oracle.lookup(action.act_type(), i);
    if (!has_sat_descr(ms, group, action.params()[i - 1], c, t)) {
      result.ok = false;
      result.failing.push_back(i);
    }
  }
  return result;
}

// ---------------------------------------------------------------------------
// Oracle table file:
//   (oracle
//     (id-constraint loosen 1 fastener-locatable (sorts allen-screws)))

inline OracleTable load_oracle(std::string_view text) {
  SExpr root = parse_sexpr(text);
  if (root.head() != "oracle") throw ParseError("expected (oracle ...)", root.line, root.col);
  OracleTable table;
  for (std::size_t i = 1; i < root.size(); ++i) {
    const SExpr& form = root.at(i);
    if (form.head() != "id-constraint")
      throw ParseError("expected (id-constraint ...)", form.line, form.col);
    if (form.size() != 5)
      throw ParseError("id-constraint takes act-type, position, name, sorts", form.line,
                       form.col);
    Symbol act_type(form.at(1).atom_text());
    std::size_t pos = 0;
    try {
      int v = std::stoi(form.at(2).atom_text());
      if (v < 1) throw std::invalid_argument("position");
      pos = static_cast<std::size_t>(v);
    } catch (const std::logic_error&) {
      throw ParseError("bad parameter position", form.at(2).line, form.at(2).col);
    }
    Symbol name(form.at(3).atom_text());
    const SExpr& sorts_form = form.at(4);
    if (sorts_form.is_atom() || sorts_form.items().empty() || sorts_form.head() != "sorts")
      throw ParseError("expected (sorts ...)", sorts_form.line, sorts_form.col);
    std::set<Symbol> sorts;
    for (std::size_t j = 1; j < sorts_form.size(); ++j)
      sorts.insert(Symbol(sorts_form.at(j).atom_text()));
    table.add(act_type, pos, IdConstraint{std::move(name), std::move(sorts)});
  }
  return table;
}

}  // namespace sharedplan
