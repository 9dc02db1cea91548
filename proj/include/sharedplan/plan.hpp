#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "knowledge.hpp"

namespace sharedplan {

// Requirement ledger keys. A full plan needs: (1) a mutually believed
// recipe; per single-agent constituent act (2a) the performer's
// intention, (2b) the performer's capability, (2c) the performer's
// full individual plan, (2d) mutual belief of 2a-2c, (2e) every
// member's intention that the performer succeed; per multi-agent
// constituent act (3a) mutual capability, (3b) a full shared subplan,
// (3c) mutual belief of 3a-3b, (3d) every member's intention that the
// subgroup succeed.
enum class ReqTag { R1, R2a, R2b, R2c, R2d, R2e, R3a, R3b, R3c, R3d };

inline const char* tag_label(ReqTag t) {
  switch (t) {
    case ReqTag::R1: return "(1)";
    case ReqTag::R2a: return "(2a)";
    case ReqTag::R2b: return "(2b)";
    case ReqTag::R2c: return "(2c)";
    case ReqTag::R2d: return "(2d)";
    case ReqTag::R2e: return "(2e)";
    case ReqTag::R3a: return "(3a)";
    case ReqTag::R3b: return "(3b)";
    case ReqTag::R3c: return "(3c)";
    case ReqTag::R3d: return "(3d)";
  }
  return "?";
}

inline const char* tag_word(ReqTag t, bool has_subact) {
  switch (t) {
    case ReqTag::R1: return "recipe";
    case ReqTag::R2a: return "int-to";
    case ReqTag::R2b: return has_subact ? "bcba" : "achieved";
    case ReqTag::R2c: return "fip";
    case ReqTag::R2d: return "mb-2a-2c";
    case ReqTag::R2e: return "int-th";
    case ReqTag::R3a: return "mbcbag";
    case ReqTag::R3b: return "fsp";
    case ReqTag::R3c: return "mb-3a-3b";
    case ReqTag::R3d: return "int-th";
  }
  return "?";
}

struct RequirementKey {
  ReqTag tag;
  std::optional<ActionDescr> subact;

  bool operator==(const RequirementKey&) const = default;
};

inline RequirementKey req(ReqTag tag) { return RequirementKey{tag, std::nullopt}; }
inline RequirementKey req(ReqTag tag, ActionDescr subact) {
  return RequirementKey{tag, std::move(subact)};
}

inline std::string render(const RequirementKey& key) {
  std::string out = tag_label(key.tag);
  if (key.subact) out += render(*key.subact);
  return out;
}

struct Requirement {
  RequirementKey key;
  std::optional<TimePoint> established;
};

/// Why a newly opened plan is subsidiary to an active one: it targets
/// a constituent act of the active plan, the recipe knowledge a
/// performer is missing, or the identification of a parameter. The
/// requirement is the key of the parent plan's ledger the new plan
/// serves; for identify-param anchored inside a subsidiary individual
/// plan, via_plan/via_key name the plan and capability key on the way.
struct SubsidiaryJustification {
  enum class Kind { Subact, KnowRecipe, IdentifyParam };

  Kind kind;
  Symbol parent_plan;
  std::variant<ActionDescr, ParamDescr> anchor;
  RequirementKey requirement;
  std::optional<Symbol> via_plan;
  std::optional<RequirementKey> via_key;
};

inline const char* kind_label(SubsidiaryJustification::Kind k) {
  switch (k) {
    case SubsidiaryJustification::Kind::Subact: return "subact";
    case SubsidiaryJustification::Kind::KnowRecipe: return "know-recipe";
    case SubsidiaryJustification::Kind::IdentifyParam: return "identify-param";
  }
  return "?";
}

inline std::string render(const SubsidiaryJustification& j) {
  std::string out = kind_label(j.kind);
  out += ' ';
  std::visit([&](const auto& a) { out += render(a); }, j.anchor);
  out += " serving " + j.parent_plan.str() + ":" + render(j.requirement);
  if (j.via_plan) {
    out += " via " + j.via_plan->str();
    if (j.via_key) out += ":" + render(*j.via_key);
  }
  return out;
}

enum class PlanKind { Shared, Individual };

/// A plan as a requirement ledger. Shared plans track the full key
/// set; individual plans track the recipe plus per-act intention and
/// capability. Plans whose objective is an achieve goal carry a
/// degenerate three-key ledger: the exchange recipe and the opener's
/// intention count as established at opening, and the remaining key
/// tracks whether the targeted precondition now holds.
class Plan {
 public:
  static Plan for_action(Symbol id, PlanKind kind, AgentSet agents, ActionDescr objective) {
    if (kind == PlanKind::Individual && !agents.is_singleton())
      throw Error("individual plan must have a single agent");
    Plan p(std::move(id), kind, std::move(agents), PlanObjective{std::move(objective)});
    p.ledger_.push_back({req(ReqTag::R1), std::nullopt});
    return p;
  }

  static Plan for_goal(Symbol id, AgentSet agents, AchieveGoal goal, TimePoint opened) {
    Plan p(std::move(id), PlanKind::Shared, std::move(agents), PlanObjective{std::move(goal)});
    p.ledger_.push_back({req(ReqTag::R1), opened});
    p.ledger_.push_back({req(ReqTag::R2a), opened});
    p.ledger_.push_back({req(ReqTag::R2b), std::nullopt});
    return p;
  }

  const Symbol& id() const { return id_; }
  PlanKind kind() const { return kind_; }
  const AgentSet& agents() const { return agents_; }
  const PlanObjective& objective() const { return objective_; }
  const std::optional<Recipe>& recipe() const { return recipe_; }
  const std::vector<Requirement>& ledger() const { return ledger_; }
  const std::vector<std::pair<ActionDescr, Symbol>>& subplans() const { return subplans_; }

  bool is_achieve() const { return std::holds_alternative<AchieveGoal>(objective_); }

  const ActionDescr& objective_action() const { return std::get<ActionDescr>(objective_); }
  const AchieveGoal& objective_goal() const { return std::get<AchieveGoal>(objective_); }

  const Requirement* find(const RequirementKey& key) const {
    for (const auto& r : ledger_) {
      if (r.key == key) return &r;
    }
    return nullptr;
  }

  bool is_established(const RequirementKey& key) const {
    const Requirement* r = find(key);
    return r && r->established.has_value();
  }

  std::optional<Symbol> subplan_for(const ActionDescr& act) const {
    for (const auto& [a, id] : subplans_) {
      if (a == act) return id;
    }
    return std::nullopt;
  }

  // Ledger mechanics, used by apply_establishment and the engine.

  void mark_established(const RequirementKey& key, TimePoint t) {
    for (auto& r : ledger_) {
      if (r.key == key) {
        if (!r.established) r.established = t;
        return;
      }
    }
    throw UnknownKey("no requirement " + render(key) + " in plan " + id_.str());
  }

  void mark_missing(const RequirementKey& key) {
    for (auto& r : ledger_) {
      if (r.key == key) {
        r.established = std::nullopt;
        return;
      }
    }
    throw UnknownKey("no requirement " + render(key) + " in plan " + id_.str());
  }

  /// Records the established recipe and appends the per-act key groups
  /// in recipe act order.
  void adopt_recipe(Recipe r) {
    recipe_ = std::move(r);
    for (const auto& act : recipe_->acts()) {
      if (kind_ == PlanKind::Individual) {
        if (act.agents().size() > 1)
          throw MalformedFact("multi-agent act " + render(act) + " in individual plan recipe");
        ledger_.push_back({req(ReqTag::R2a, act), std::nullopt});
        ledger_.push_back({req(ReqTag::R2b, act), std::nullopt});
      } else if (act.agents().is_singleton()) {
        for (ReqTag tag : {ReqTag::R2a, ReqTag::R2b, ReqTag::R2c, ReqTag::R2d, ReqTag::R2e})
          ledger_.push_back({req(tag, act), std::nullopt});
      } else {
        for (ReqTag tag : {ReqTag::R3a, ReqTag::R3b, ReqTag::R3c, ReqTag::R3d})
          ledger_.push_back({req(tag, act), std::nullopt});
      }
    }
  }

  void add_subplan(ActionDescr act, Symbol plan_id) {
    subplans_.emplace_back(std::move(act), std::move(plan_id));
  }

 private:
  Plan(Symbol id, PlanKind kind, AgentSet agents, PlanObjective objective)
      : id_(std::move(id)),
        kind_(kind),
        agents_(std::move(agents)),
        objective_(std::move(objective)) {}

  Symbol id_;
  PlanKind kind_;
  AgentSet agents_;
  PlanObjective objective_;
  std::optional<Recipe> recipe_;
  std::vector<Requirement> ledger_;
  std::vector<std::pair<ActionDescr, Symbol>> subplans_;
};

/// True iff the ledger has no missing keys.
inline bool check_fsp(const Plan& plan, TimePoint) {
  for (const auto& r : plan.ledger()) {
    if (!r.established) return false;
  }
  return true;
}

/// Missing keys in canonical order: the recipe key first, then the
/// per-act groups in recipe act order, keys in ledger order within a
/// group.
inline std::vector<RequirementKey> missing_requirements(const Plan& plan, TimePoint) {
  std::vector<RequirementKey> out;
  for (const auto& r : plan.ledger()) {
    if (!r.established) out.push_back(r.key);
  }
  return out;
}

/// Test and analysis helper: the plan with one requirement reset to
/// missing.
inline Plan ablate(Plan plan, const RequirementKey& key) {
  plan.mark_missing(key);
  return plan;
}

// ---------------------------------------------------------------------------
// Capability operators.

struct EvalContext {
  const MentalStateStore& ms;
  const RecipeRegistry& reg;
  const OracleTable& oracle;
};

struct CapabilityResult {
  enum class Failure { None, KnowRecipe, IdentifyParam, Constraints };
  bool ok;
  Failure failure;
};

inline const char* failure_label(CapabilityResult::Failure f) {
  switch (f) {
    case CapabilityResult::Failure::None: return "ok";
    case CapabilityResult::Failure::KnowRecipe: return "know-recipe";
    case CapabilityResult::Failure::IdentifyParam: return "identify-param";
    case CapabilityResult::Failure::Constraints: return "constraints";
  }
  return "?";
}

/// Believes-can-bring-about, augmented with knowledge preconditions:
/// the agent has some recipe for the act, can identify the act's
/// parameters, and some believed recipe has its constraints satisfied
/// in the world state. The failure reason names the first failing
/// conjunct in that order.
inline CapabilityResult bcba(const EvalContext& ctx, const AgentSet& group,
                             const ActionDescr& act, TimePoint t) {
  if (!group.is_singleton()) throw Error("bcba applies to a single agent");
  auto candidates = believed_recipes(ctx.ms, ctx.reg, group, act, t);
  if (candidates.empty()) return {false, CapabilityResult::Failure::KnowRecipe};
  if (!id_params(ctx.ms, ctx.oracle, group, act, t).ok)
    return {false, CapabilityResult::Failure::IdentifyParam};
  for (const auto& r : candidates) {
    if (ctx.reg.constraints_satisfied(ctx.ms.world(), r, t))
      return {true, CapabilityResult::Failure::None};
  }
  return {false, CapabilityResult::Failure::Constraints};
}

/// Group analog of bcba. All three conjuncts sit under mutual belief:
/// the recipe is mutually believed, parameter identification uses the
/// shared-witness clause, and each constraint must be mutually
/// believed to hold.
inline CapabilityResult mbcbag(const EvalContext& ctx, const AgentSet& group,
                               const ActionDescr& act, TimePoint t) {
  if (group.size() < 2) throw Error("mbcbag applies to a group of at least two agents");
  auto candidates = believed_recipes(ctx.ms, ctx.reg, group, act, t);
  if (candidates.empty()) return {false, CapabilityResult::Failure::KnowRecipe};
  if (!id_params(ctx.ms, ctx.oracle, group, act, t).ok)
    return {false, CapabilityResult::Failure::IdentifyParam};
  for (const auto& r : candidates) {
    bool all = true;
    for (const auto& c : r.constraints()) {
      if (!ctx.ms.holds_mb(group, Proposition{ConstraintHoldsProp{c.name, c.args}}, t)) {
        all = false;
        break;
      }
    }
    if (all) return {true, CapabilityResult::Failure::None};
  }
  return {false, CapabilityResult::Failure::Constraints};
}

/// Whether an achieve goal's targeted precondition holds now.
inline bool target_holds(const EvalContext& ctx, const AchieveGoal& goal, TimePoint t) {
  if (const auto* hr = std::get_if<HasRecipeProp>(&goal.target)) {
    auto r = has_recipe(ctx.ms, ctx.reg, hr->agents, hr->action, t);
    if (!r) return false;
    return !hr->recipe_id || r->id() == *hr->recipe_id;
  }
  const auto& hs = std::get<HasSatDescrProp>(goal.target);
  const IdConstraint* c = ctx.oracle.find_by_name(hs.constraint);
  if (!c) throw OracleGap("unknown identification constraint " + hs.constraint.str());
  return has_sat_descr(ctx.ms, hs.agents, hs.param, *c, t);
}

/// Marks the key established at t. Establishing the recipe key
/// resolves the recipe from the store and appends the per-act key
/// groups; establishing a capability key requires the corresponding
/// capability predicate to evaluate true. Re-establishing an already
/// established key is a no-op.
inline Plan apply_establishment(Plan plan, const RequirementKey& key, TimePoint t,
                                const EvalContext& ctx) {
  const Requirement* r = plan.find(key);
  if (!r) throw UnknownKey("no requirement " + render(key) + " in plan " + plan.id().str());
  if (r->established) return plan;
  switch (key.tag) {
    case ReqTag::R1: {
      if (!plan.is_achieve()) {
        auto recipe = has_recipe(ctx.ms, ctx.reg, plan.agents(), plan.objective_action(), t);
        if (!recipe)
          throw CapabilityNotDerivable("no believed recipe for " +
                                       render(plan.objective_action()));
        plan.adopt_recipe(std::move(*recipe));
      }
      break;
    }
    case ReqTag::R2b: {
      if (key.subact) {
        if (!bcba(ctx, key.subact->agents(), *key.subact, t).ok)
          throw CapabilityNotDerivable("bcba is false for " + render(*key.subact));
      } else {
        if (!target_holds(ctx, plan.objective_goal(), t))
          throw CapabilityNotDerivable("achieve target does not hold for plan " +
                                       plan.id().str());
      }
      break;
    }
    case ReqTag::R3a: {
      if (!key.subact || !mbcbag(ctx, key.subact->agents(), *key.subact, t).ok)
        throw CapabilityNotDerivable("mbcbag is false for " +
                                     (key.subact ? render(*key.subact) : std::string("?")));
      break;
    }
    default:
      break;
  }
  plan.mark_established(key, t);
  return plan;
}

// ---------------------------------------------------------------------------
// Plan store and the establishment pass.

class PlanStore {
 public:
  Symbol fresh_id() { return Symbol("P" + std::to_string(++counter_)); }

  Symbol fresh_subplan_id(const Plan& parent, bool individual) {
    std::size_t n = parent.subplans().size() + 1;
    return Symbol(parent.id().str() + (individual ? ".i" : ".s") + std::to_string(n));
  }

  void add(Plan plan) {
    Symbol id = plan.id();
    if (plans_.count(id)) throw Error("duplicate plan id " + id.str());
    order_.push_back(id);
    plans_.emplace(std::move(id), std::move(plan));
  }

  bool contains(const Symbol& id) const { return plans_.count(id) > 0; }

  const Plan& get(const Symbol& id) const {
    auto it = plans_.find(id);
    if (it == plans_.end()) throw Error("unknown plan " + id.str());
    return it->second;
  }

  Plan& get_mut(const Symbol& id) {
    auto it = plans_.find(id);
    if (it == plans_.end()) throw Error("unknown plan " + id.str());
    return it->second;
  }

  const std::vector<Symbol>& order() const { return order_; }

 private:
  int counter_ = 0;
  std::vector<Symbol> order_;
  std::map<Symbol, Plan> plans_;
};

struct EstablishedKey {
  Symbol plan;
  RequirementKey key;
  std::optional<Symbol> recipe;  // set when the key is the recipe key
};

inline std::string render(const EstablishedKey& e) {
  std::string out = e.plan.str() + ":" + render(e.key);
  if (e.recipe) out += "=" + e.recipe->str();
  return out;
}

namespace detail {

inline void collect_tree(const PlanStore& store, const Symbol& id, std::vector<Symbol>& out) {
  out.push_back(id);
  for (const auto& [act, sub] : store.get(id).subplans()) collect_tree(store, sub, out);
}

/// Creates the subplan stubs a shared plan needs once its recipe is
/// known: an individual plan per single-agent act (the fip key) and a
/// shared plan per multi-agent act (the fsp key). Individual plans
/// stop at intention and capability keys and get no children.
inline void create_subplans(PlanStore& store, const Symbol& plan_id) {
  std::vector<ActionDescr> acts = store.get(plan_id).recipe()->acts();
  for (const auto& act : acts) {
    if (store.get(plan_id).subplan_for(act)) continue;
    bool individual = act.agents().is_singleton();
    Symbol sub_id = store.fresh_subplan_id(store.get(plan_id), individual);
    store.add(Plan::for_action(sub_id, individual ? PlanKind::Individual : PlanKind::Shared,
                               act.agents(), act));
    store.get_mut(plan_id).add_subplan(act, sub_id);
  }
}

inline bool derivable(const PlanStore& store, const Plan& plan, const RequirementKey& key,
                      const EvalContext& ctx, TimePoint t) {
  switch (key.tag) {
    case ReqTag::R1:
      if (plan.is_achieve()) return false;
      return has_recipe(ctx.ms, ctx.reg, plan.agents(), plan.objective_action(), t).has_value();
    case ReqTag::R2a:
      return ctx.ms.holds_int_to(key.subact->agents().single(), *key.subact, t);
    case ReqTag::R2b:
      if (!key.subact) return target_holds(ctx, plan.objective_goal(), t);
      return bcba(ctx, key.subact->agents(), *key.subact, t).ok;
    case ReqTag::R2c:
    case ReqTag::R3b: {
      auto sub = plan.subplan_for(*key.subact);
      return sub && check_fsp(store.get(*sub), t);
    }
    case ReqTag::R2d:
      // Everything that established 2a-2c arrived through the dialogue,
      // so it is public to the group; mutual belief follows.
      return plan.is_established(req(ReqTag::R2a, *key.subact)) &&
             plan.is_established(req(ReqTag::R2b, *key.subact)) &&
             plan.is_established(req(ReqTag::R2c, *key.subact));
    case ReqTag::R3c:
      return plan.is_established(req(ReqTag::R3a, *key.subact)) &&
             plan.is_established(req(ReqTag::R3b, *key.subact));
    case ReqTag::R2e:
    case ReqTag::R3d: {
      PlanGoal goal{key.subact->agents(), PlanObjective{*key.subact}};
      for (const auto& member : plan.agents().members()) {
        if (!ctx.ms.holds_int_th(member, goal, t)) return false;
      }
      return true;
    }
    case ReqTag::R3a:
      return mbcbag(ctx, key.subact->agents(), *key.subact, t).ok;
  }
  return false;
}

}  // namespace detail

/// Establishes every requirement of the plan tree rooted at `root`
/// that is now derivable from the store, to a fixpoint. Returns the
/// established keys in derivation order.
inline std::vector<EstablishedKey> derive_establishments(PlanStore& store, const Symbol& root,
                                                         const EvalContext& ctx, TimePoint t) {
  std::vector<EstablishedKey> established;
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Symbol> tree;
    detail::collect_tree(store, root, tree);
    for (const auto& plan_id : tree) {
      for (const auto& key : missing_requirements(store.get(plan_id), t)) {
        if (!detail::derivable(store, store.get(plan_id), key, ctx, t)) continue;
        Plan next = apply_establishment(store.get(plan_id), key, t, ctx);
        bool materialized = key.tag == ReqTag::R1 && !next.is_achieve();
        std::optional<Symbol> recipe_id;
        if (materialized) recipe_id = next.recipe()->id();
        store.get_mut(plan_id) = std::move(next);
        if (materialized && store.get(plan_id).kind() == PlanKind::Shared)
          detail::create_subplans(store, plan_id);
        established.push_back({plan_id, key, recipe_id});
        changed = true;
      }
    }
  }
  return established;
}

// ---------------------------------------------------------------------------
// Subsidiary inference.

namespace detail {

struct ViaMatch {
  Symbol via_plan;
  RequirementKey via_key;
};

/// Depth-first search for an individual plan under `plan_id` whose
/// recipe has an act by `group` carrying the parameter, with the
/// capability key for that act still missing.
inline std::optional<ViaMatch> find_param_in_individual(const PlanStore& store,
                                                        const Symbol& plan_id,
                                                        const AgentSet& group,
                                                        const ParamDescr& param) {
  const Plan& plan = store.get(plan_id);
  if (plan.kind() == PlanKind::Individual && plan.recipe()) {
    for (const auto& act : plan.recipe()->acts()) {
      if (!(act.agents() == group)) continue;
      for (const auto& p : act.params()) {
        if (descr_equal(p, param) && !plan.is_established(req(ReqTag::R2b, act)))
          return ViaMatch{plan_id, req(ReqTag::R2b, act)};
      }
    }
  }
  for (const auto& [act, sub] : plan.subplans()) {
    if (auto found = find_param_in_individual(store, sub, group, param)) return found;
  }
  return std::nullopt;
}

}  // namespace detail

/// Explains a newly opened objective against the active plans,
/// innermost first. Within one plan the rules apply in order: the
/// objective is a constituent act of the plan's recipe; the objective
/// is obtaining a recipe a performer is missing; the objective is
/// identifying a parameter of one of the plan's acts or of an act in
/// a subsidiary individual plan. Returns the first match, or nothing.
inline std::optional<SubsidiaryJustification> infer_subsidiary(
    const PlanObjective& goal, const std::vector<Symbol>& active_plans, const PlanStore& store,
    const EvalContext& ctx, TimePoint t) {
  (void)ctx;
  (void)t;
  for (const auto& plan_id : active_plans) {
    const Plan& plan = store.get(plan_id);
    if (!plan.recipe()) continue;
    const auto& acts = plan.recipe()->acts();

    if (const auto* act_goal = std::get_if<ActionDescr>(&goal)) {
      for (const auto& act : acts) {
        if (!descr_equal(act, *act_goal)) continue;
        RequirementKey key = act.agents().is_singleton() ? req(ReqTag::R2c, act)
                                                         : req(ReqTag::R3b, act);
        if (plan.is_established(key)) continue;
        return SubsidiaryJustification{SubsidiaryJustification::Kind::Subact, plan.id(), act,
                                       key, plan.subplan_for(act), std::nullopt};
      }
    }

    if (const auto* achieve = std::get_if<AchieveGoal>(&goal)) {
      if (const auto* hr = std::get_if<HasRecipeProp>(&achieve->target)) {
        for (const auto& act : acts) {
          if (!descr_equal(act, hr->action)) continue;
          if (!(act.agents() == hr->agents)) continue;
          RequirementKey key = act.agents().is_singleton() ? req(ReqTag::R2b, act)
                                                           : req(ReqTag::R3a, act);
          if (plan.is_established(key)) continue;
          return SubsidiaryJustification{SubsidiaryJustification::Kind::KnowRecipe, plan.id(),
                                         act, key, std::nullopt, std::nullopt};
        }
      }
      if (const auto* hs = std::get_if<HasSatDescrProp>(&achieve->target)) {
        for (const auto& act : acts) {
          if (!(act.agents() == hs->agents)) continue;
          bool carries = false;
          for (const auto& p : act.params()) {
            if (descr_equal(p, hs->param)) carries = true;
          }
          if (!carries) continue;
          RequirementKey key = act.agents().is_singleton() ? req(ReqTag::R2b, act)
                                                           : req(ReqTag::R3a, act);
          if (plan.is_established(key)) continue;
          return SubsidiaryJustification{SubsidiaryJustification::Kind::IdentifyParam,
                                         plan.id(), hs->param, key, std::nullopt, std::nullopt};
        }
        for (const auto& act : acts) {
          auto sub = plan.subplan_for(act);
          if (!sub) continue;
          auto found = detail::find_param_in_individual(store, *sub, hs->agents, hs->param);
          if (!found) continue;
          RequirementKey serving = act.agents().is_singleton() ? req(ReqTag::R2c, act)
                                                               : req(ReqTag::R3b, act);
          if (plan.is_established(serving)) continue;
          return SubsidiaryJustification{SubsidiaryJustification::Kind::IdentifyParam,
                                         plan.id(), hs->param, serving, found->via_plan,
                                         found->via_key};
        }
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Plan dump: ledger in canonical key order with established/missing
// markers and timestamps, subsidiary plans nested.

inline void dump_plan_into(const PlanStore& store, const Symbol& id, int indent,
                           std::string& out) {
  const Plan& plan = store.get(id);
  std::string pad(static_cast<std::size_t>(indent), ' ');
  out += pad + "plan " + plan.id().str() +
         (plan.kind() == PlanKind::Shared ? " (shared " : " (individual ") +
         render(plan.agents()) + ") objective " + render(plan.objective()) + "\n";
  for (const auto& r : plan.ledger()) {
    out += pad + "  " + tag_label(r.key.tag) + " " + tag_word(r.key.tag, r.key.subact.has_value());
    if (r.key.tag == ReqTag::R1 && plan.recipe()) out += " " + plan.recipe()->id().str();
    if (r.key.subact) out += " " + render(*r.key.subact);
    if (r.established) {
      out += " -- established @" + std::to_string(r.established->index);
    } else {
      out += " -- missing";
    }
    out += "\n";
  }
  for (const auto& [act, sub] : plan.subplans()) {
    out += pad + "  subplan for " + render(act) + ":\n";
    dump_plan_into(store, sub, indent + 4, out);
  }
}

inline std::string dump_plan(const PlanStore& store, const Symbol& id, int indent = 0) {
  std::string out;
  dump_plan_into(store, id, indent, out);
  return out;
}

}  // namespace sharedplan
