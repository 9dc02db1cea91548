#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "propositions.hpp"

namespace sharedplan {

enum class FactKind { Bel, Mb, IntTo, IntTh };

inline const char* kind_tag(FactKind k) {
  switch (k) {
    case FactKind::Bel: return "bel";
    case FactKind::Mb: return "mb";
    case FactKind::IntTo: return "int-to";
    case FactKind::IntTh: return "int-th";
  }
  return "?";
}

/// A time-indexed mental attitude. Facts persist from `from_time`
/// onward unless explicitly retracted.
struct MentalFact {
  FactKind kind;
  AgentSet holder;
  std::variant<Proposition, ActionDescr, PlanGoal> content;
  TimePoint from_time;

  bool operator==(const MentalFact&) const = default;
};

inline SExpr to_sexpr(const MentalFact& f) {
  std::vector<SExpr> items{SExpr::atom(kind_tag(f.kind))};
  if (f.kind == FactKind::Mb) {
    items.push_back(to_sexpr(f.holder));
  } else {
    items.push_back(SExpr::atom(f.holder.single().str()));
  }
  std::visit([&](const auto& c) { items.push_back(to_sexpr(c)); }, f.content);
  return SExpr::list(std::move(items));
}

inline std::string render(const MentalFact& f) { return to_text(to_sexpr(f)); }

/// Ground facts the physical constraints of recipes are checked
/// against. Monotone within a run unless a script event retracts.
class WorldState {
 public:
  void add(ParamDescr atom, TimePoint t) {
    if (holds(atom, t)) return;
    entries_.push_back({std::move(atom), t, std::nullopt});
  }

  void retract(const ParamDescr& atom, TimePoint t) {
    for (auto& e : entries_) {
      if (e.atom == atom && e.from <= t && !e.until) e.until = t;
    }
  }

  bool holds(const ParamDescr& atom, TimePoint t) const {
    for (const auto& e : entries_) {
      if (e.atom == atom && e.from <= t && (!e.until || t < *e.until)) return true;
    }
    return false;
  }

  std::vector<std::string> dump_lines() const {
    std::vector<std::string> out;
    for (const auto& e : entries_) {
      std::string line = "@" + std::to_string(e.from.index) + " (world " + render(e.atom) + ")";
      if (e.until) line += " retracted @" + std::to_string(e.until->index);
      out.push_back(std::move(line));
    }
    return out;
  }

 private:
  struct Entry {
    ParamDescr atom;
    TimePoint from;
    std::optional<TimePoint> until;
  };
  std::vector<Entry> entries_;
};

/// Time-indexed store of beliefs, mutual beliefs, intentions,
/// per-agent individuating sets, and world-state ground facts.
///
/// Mutual belief is primitive: an MB fact projects to member beliefs
/// but no nesting fixpoint is ever computed. Individuating sets are
/// per-agent symmetric codesignation structures; the closure is not
/// transitive across distinct anchors, so registering P~Q and Q~S
/// keeps IS(P) = {P, Q}.
class MentalStateStore {
 public:
  void assert_fact(MentalFact fact) {
    validate(fact);
    for (const auto& s : facts_) {
      if (s.fact == fact && !s.until) return;
    }
    facts_.push_back({std::move(fact), std::nullopt});
  }

  /// Retracts every live fact matching kind/holder/content from t on.
  void retract_fact(FactKind kind, const AgentSet& holder,
                    const std::variant<Proposition, ActionDescr, PlanGoal>& content,
                    TimePoint t) {
    for (auto& s : facts_) {
      if (s.fact.kind == kind && s.fact.holder == holder && s.fact.content == content &&
          s.fact.from_time <= t && !s.until) {
        s.until = t;
      }
    }
  }

  bool holds_bel(const Symbol& agent, const Proposition& p, TimePoint t) const {
    for (const auto& s : facts_) {
      if (!live_at(s, t)) continue;
      if (!std::holds_alternative<Proposition>(s.fact.content)) continue;
      if (std::get<Proposition>(s.fact.content) != p) continue;
      if (s.fact.kind == FactKind::Bel && s.fact.holder.single() == agent) return true;
      if (s.fact.kind == FactKind::Mb && s.fact.holder.contains(agent)) return true;
    }
    return false;
  }

  bool holds_mb(const AgentSet& group, const Proposition& p, TimePoint t) const {
    for (const auto& s : facts_) {
      if (!live_at(s, t)) continue;
      if (s.fact.kind != FactKind::Mb) continue;
      if (!s.fact.holder.includes(group)) continue;
      if (std::holds_alternative<Proposition>(s.fact.content) &&
          std::get<Proposition>(s.fact.content) == p)
        return true;
    }
    return false;
  }

  bool holds_int_to(const Symbol& agent, const ActionDescr& action, TimePoint t) const {
    for (const auto& s : facts_) {
      if (!live_at(s, t)) continue;
      if (s.fact.kind != FactKind::IntTo) continue;
      if (s.fact.holder.single() != agent) continue;
      if (std::get<ActionDescr>(s.fact.content) == action) return true;
    }
    return false;
  }

  bool holds_int_th(const Symbol& agent, const PlanGoal& goal, TimePoint t) const {
    for (const auto& s : facts_) {
      if (!live_at(s, t)) continue;
      if (s.fact.kind != FactKind::IntTh) continue;
      if (s.fact.holder.single() != agent) continue;
      if (std::get<PlanGoal>(s.fact.content) == goal) return true;
    }
    return false;
  }

  /// Registers that for `agent` the two descriptions denote the same
  /// object. Symmetric; a no-op when the descriptions are identical.
  void add_codesignation(const Symbol& agent, ParamDescr anchor, ParamDescr other, TimePoint t) {
    if (descr_equal(anchor, other)) return;
    if (param_less(other, anchor)) std::swap(anchor, other);
    for (const auto& e : edges_) {
      if (e.agent == agent && e.a == anchor && e.b == other && !e.until) return;
    }
    edges_.push_back({agent, std::move(anchor), std::move(other), t, std::nullopt});
  }

  void retract_codesignation(const Symbol& agent, ParamDescr anchor, ParamDescr other,
                             TimePoint t) {
    if (param_less(other, anchor)) std::swap(anchor, other);
    for (auto& e : edges_) {
      if (e.agent == agent && e.a == anchor && e.b == other && e.from <= t && !e.until)
        e.until = t;
    }
  }

  /// The agent's individuating set for `anchor`: the anchor plus every
  /// description registered as codesignating with it. Sorted.
  std::vector<ParamDescr> individuating_set(const Symbol& agent, const ParamDescr& anchor,
                                            TimePoint t) const {
    std::vector<ParamDescr> out{anchor};
    for (const auto& e : edges_) {
      if (e.agent != agent || e.from > t || (e.until && t >= *e.until)) continue;
      if (e.a == anchor) out.push_back(e.b);
      else if (e.b == anchor) out.push_back(e.a);
    }
    std::sort(out.begin(), out.end(), param_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  WorldState& world() { return world_; }
  const WorldState& world() const { return world_; }

  /// Deterministic sorted listing of everything in the store, one fact
  /// per line, for golden-file tests.
  std::string dump() const {
    std::vector<std::pair<int, std::string>> lines;
    for (const auto& s : facts_) {
      std::string line = "@" + std::to_string(s.fact.from_time.index) + " " + render(s.fact);
      if (s.until) line += " retracted @" + std::to_string(s.until->index);
      lines.emplace_back(s.fact.from_time.index, std::move(line));
    }
    for (const auto& e : edges_) {
      std::string line = "@" + std::to_string(e.from.index) + " (codesig " + e.agent.str() +
                         " " + render(e.a) + " " + render(e.b) + ")";
      if (e.until) line += " retracted @" + std::to_string(e.until->index);
      lines.emplace_back(e.from.index, std::move(line));
    }
    for (auto& w : world_.dump_lines()) {
      int t = 0;
      if (w.size() > 1 && w[0] == '@') t = std::stoi(w.substr(1, w.find(' ') - 1));
      lines.emplace_back(t, std::move(w));
    }
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (auto& [t, line] : lines) {
      out += line;
      out += '\n';
    }
    return out;
  }

 private:
  struct StoredFact {
    MentalFact fact;
    std::optional<TimePoint> until;
  };

  struct CodesigEdge {
    Symbol agent;
    ParamDescr a;
    ParamDescr b;
    TimePoint from;
    std::optional<TimePoint> until;
  };

  static bool live_at(const StoredFact& s, TimePoint t) {
    return s.fact.from_time <= t && (!s.until || t < *s.until);
  }

  static void validate(const MentalFact& fact) {
    switch (fact.kind) {
      case FactKind::Bel:
        if (!fact.holder.is_singleton()) throw MalformedFact("bel holder must be a single agent");
        if (!std::holds_alternative<Proposition>(fact.content))
          throw MalformedFact("bel content must be a proposition");
        break;
      case FactKind::Mb:
        if (fact.holder.size() < 2) throw MalformedFact("mb holder needs at least two agents");
        if (!std::holds_alternative<Proposition>(fact.content))
          throw MalformedFact("mb content must be a proposition");
        break;
      case FactKind::IntTo: {
        if (!fact.holder.is_singleton())
          throw MalformedFact("int-to holder must be a single agent");
        if (!std::holds_alternative<ActionDescr>(fact.content))
          throw MalformedFact("int-to content must be an action");
        const auto& act = std::get<ActionDescr>(fact.content);
        if (!(act.agents() == fact.holder))
          throw MalformedFact("int-to action agents must equal the holder");
        break;
      }
      case FactKind::IntTh:
        if (!fact.holder.is_singleton())
          throw MalformedFact("int-th holder must be a single agent");
        if (!std::holds_alternative<PlanGoal>(fact.content))
          throw MalformedFact("int-th content must be a plan goal");
        break;
    }
    if (std::holds_alternative<Proposition>(fact.content)) {
      const auto& p = std::get<Proposition>(fact.content);
      // Basic-level actions are single-agent by nature; reject the
      // assertion that would smuggle in a multi-agent one.
      if (const auto* bl = std::get_if<BasicLevelProp>(&p)) {
        if (bl->action.agents().size() > 1)
          throw MalformedFact("basic-level action must be single-agent");
      }
    }
  }

  std::vector<StoredFact> facts_;
  std::vector<CodesigEdge> edges_;
  WorldState world_;
};

}  // namespace sharedplan
