#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "plan.hpp"

namespace sharedplan {

// Utterance events arrive pre-annotated with their communicated
// intent: opening a segment purpose, conveying facts, committing to
// intentions, or signalling closure. Intent recognition is upstream.

struct CodesigItem {
  Symbol agent;
  ParamDescr anchor;
  ParamDescr other;
  bool operator==(const CodesigItem&) const = default;
};

struct WorldItem {
  ParamDescr atom;
  bool operator==(const WorldItem&) const = default;
};

struct ConveyItem {
  enum class Op { Assert, Retract };
  Op op;
  std::variant<MentalFact, CodesigItem, WorldItem> item;
  bool operator==(const ConveyItem&) const = default;
};

struct OpenDsp {
  Symbol holder;
  PlanObjective objective;
  bool operator==(const OpenDsp&) const = default;
};

struct Convey {
  std::vector<ConveyItem> items;
  bool operator==(const Convey&) const = default;
};

struct Commit {
  std::vector<MentalFact> facts;  // int-to and int-th only
  bool operator==(const Commit&) const = default;
};

struct CloseSignal {
  bool operator==(const CloseSignal&) const = default;
};

using Move = std::variant<OpenDsp, Convey, Commit, CloseSignal>;

struct UtteranceEvent {
  TimePoint turn;
  Symbol speaker;
  Move move;
  bool operator==(const UtteranceEvent&) const = default;
};

inline SExpr to_sexpr(const ConveyItem& item) {
  SExpr inner = std::visit(
      [](const auto& v) -> SExpr {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MentalFact>) {
          return to_sexpr(v);
        } else if constexpr (std::is_same_v<T, CodesigItem>) {
          return SExpr::list({SExpr::atom("codesig"), SExpr::atom(v.agent.str()),
                              to_sexpr(v.anchor), to_sexpr(v.other)});
        } else {
          return SExpr::list({SExpr::atom("world"), to_sexpr(v.atom)});
        }
      },
      item.item);
  if (item.op == ConveyItem::Op::Retract)
    return SExpr::list({SExpr::atom("retract"), std::move(inner)});
  return inner;
}

inline SExpr to_sexpr(const Move& move) {
  return std::visit(
      [](const auto& m) -> SExpr {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OpenDsp>) {
          return SExpr::list(
              {SExpr::atom("open-dsp"), SExpr::atom(m.holder.str()), to_sexpr(m.objective)});
        } else if constexpr (std::is_same_v<T, Convey>) {
          std::vector<SExpr> items{SExpr::atom("convey")};
          for (const auto& i : m.items) items.push_back(to_sexpr(i));
          return SExpr::list(std::move(items));
        } else if constexpr (std::is_same_v<T, Commit>) {
          std::vector<SExpr> items{SExpr::atom("commit")};
          for (const auto& f : m.facts) items.push_back(to_sexpr(f));
          return SExpr::list(std::move(items));
        } else {
          return SExpr::list({SExpr::atom("close")});
        }
      },
      move);
}

inline SExpr to_sexpr(const UtteranceEvent& ev) {
  return SExpr::list({SExpr::atom("event"), SExpr::atom(std::to_string(ev.turn.index)),
                      SExpr::atom(ev.speaker.str()), to_sexpr(ev.move)});
}

inline std::string render(const Move& m) { return to_text(to_sexpr(m)); }
inline std::string render(const UtteranceEvent& e) { return to_text(to_sexpr(e)); }

/// A discourse segment: its purpose (an intention held by the
/// initiating participant that the group's plan be formed), the plan
/// modelling that purpose, and its place in the tree.
struct Segment {
  Symbol id;
  Symbol icp;
  PlanGoal dsp;
  Symbol plan;
  std::optional<Symbol> parent;
  std::optional<SubsidiaryJustification> justification;
  TimePoint opened;
  std::optional<TimePoint> closed;
  bool forced = false;
};

/// How one event was understood.
struct Classification {
  enum class Kind { NewSegment, Contributes, Completes, Unexplained };

  Kind kind;
  std::optional<Symbol> segment;  // the segment opened (NewSegment)
  std::optional<Symbol> plan;     // its plan (NewSegment)
  std::optional<SubsidiaryJustification> justification;  // absent for a root segment
  std::vector<EstablishedKey> established;       // on the innermost open plan
  std::vector<Symbol> completed;                 // closed segments, innermost first
  std::vector<EstablishedKey> post_established;  // parent progress after closing
  bool forced = false;
};

inline std::vector<std::string> describe(const Classification& c) {
  auto key_list = [](const std::vector<EstablishedKey>& keys) {
    std::string out;
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (i) out += ", ";
      out += render(keys[i]);
    }
    return out;
  };
  std::vector<std::string> lines;
  switch (c.kind) {
    case Classification::Kind::NewSegment:
      lines.push_back("new segment " + c.segment->str() + " (plan " + c.plan->str() + ")" +
                      (c.justification ? " subsidiary [" + render(*c.justification) + "]"
                                       : " [root]"));
      break;
    case Classification::Kind::Unexplained:
      lines.push_back("unexplained");
      break;
    case Classification::Kind::Contributes:
      lines.push_back("contributes: " +
                      (c.established.empty() ? std::string("(none)") : key_list(c.established)));
      break;
    case Classification::Kind::Completes:
      if (!c.established.empty()) lines.push_back("contributes: " + key_list(c.established));
      for (const auto& seg : c.completed)
        lines.push_back("completes " + seg.str() + (c.forced ? " (forced)" : ""));
      if (!c.post_established.empty())
        lines.push_back("parent progress: " + key_list(c.post_established));
      break;
  }
  return lines;
}

/// Maintains the segment stack and tree over a replayed utterance
/// stream. Strictly sequential; the whole value can be copied or
/// handed off between events.
class DiscourseProcessor {
 public:
  DiscourseProcessor(AgentSet roster, RecipeRegistry registry, OracleTable oracle)
      : roster_(std::move(roster)), reg_(std::move(registry)), oracle_(std::move(oracle)) {}

  /// Opens the root segment from the script header, applies the
  /// initial facts at turn 0, and establishes whatever is already
  /// derivable. Returns the establishments for the trace.
  std::vector<EstablishedKey> initialize(const Symbol& holder, const PlanObjective& objective,
                                         const std::vector<ConveyItem>& init_items) {
    if (!segments_.empty()) throw Error("processor already initialized");
    TimePoint t0{0};
    last_turn_ = t0;
    open_segment(holder, objective, std::nullopt, t0);
    for (const auto& item : init_items) apply_item(item, t0);
    EvalContext ctx{ms_, reg_, oracle_};
    return derive_establishments(plans_, segments_.front().plan, ctx, t0);
  }

  Classification process_event(const UtteranceEvent& ev) {
    if (last_turn_ && ev.turn <= *last_turn_)
      throw OutOfOrderTurn("turn " + std::to_string(ev.turn.index) + " does not advance past " +
                           std::to_string(last_turn_->index));
    if (!roster_.contains(ev.speaker))
      throw UnknownSpeaker("speaker " + ev.speaker.str() + " is not a dialogue participant");
    last_turn_ = ev.turn;
    return std::visit([&](const auto& m) { return handle(m, ev.turn); }, ev.move);
  }

  const AgentSet& roster() const { return roster_; }
  const MentalStateStore& store() const { return ms_; }
  const PlanStore& plans() const { return plans_; }
  const std::vector<Segment>& segments() const { return segments_; }

  bool all_closed() const {
    for (const auto& s : segments_) {
      if (!s.closed) return false;
    }
    return true;
  }

  const Segment* innermost_open() const {
    if (stack_.empty()) return nullptr;
    return &segment(stack_.back());
  }

  /// Deterministic tree rendering: segments in opening order nested
  /// under their parents, each with its purpose, plan ledger snapshot,
  /// and justification, followed by the dominance edges.
  std::string render_structure() const {
    std::string out = "intentional structure:\n";
    if (segments_.empty()) {
      out += "(empty)\n";
      return out;
    }
    for (const auto& s : segments_) {
      if (!s.parent) render_segment(s, 0, out);
    }
    out += "dominance:\n";
    bool any = false;
    for (const auto& s : segments_) {
      if (!s.parent || !s.justification) continue;
      out += "  " + s.parent->str() + " -> " + s.id.str() + "  [" +
             render(*s.justification) + "]\n";
      any = true;
    }
    if (!any) out += "  (none)\n";
    return out;
  }

 private:
  const Segment& segment(const Symbol& id) const {
    for (const auto& s : segments_) {
      if (s.id == id) return s;
    }
    throw Error("unknown segment " + id.str());
  }

  Segment& segment_mut(const Symbol& id) {
    for (auto& s : segments_) {
      if (s.id == id) return s;
    }
    throw Error("unknown segment " + id.str());
  }

  void apply_item(const ConveyItem& ci, TimePoint t) {
    std::visit(
        [&](const auto& v) {
          using T = std::decay_t<decltype(v)>;
          if constexpr (std::is_same_v<T, MentalFact>) {
            if (ci.op == ConveyItem::Op::Assert) {
              MentalFact f = v;
              f.from_time = t;
              ms_.assert_fact(std::move(f));
            } else {
              ms_.retract_fact(v.kind, v.holder, v.content, t);
            }
          } else if constexpr (std::is_same_v<T, CodesigItem>) {
            if (ci.op == ConveyItem::Op::Assert)
              ms_.add_codesignation(v.agent, v.anchor, v.other, t);
            else
              ms_.retract_codesignation(v.agent, v.anchor, v.other, t);
          } else {
            if (ci.op == ConveyItem::Op::Assert)
              ms_.world().add(v.atom, t);
            else
              ms_.world().retract(v.atom, t);
          }
        },
        ci.item);
  }

  /// Creates (or adopts) the plan for a new segment and pushes it.
  Symbol open_segment(const Symbol& icp, const PlanObjective& objective,
                      std::optional<SubsidiaryJustification> justification, TimePoint t) {
    Symbol plan_id{"?"};
    if (const auto* goal = std::get_if<AchieveGoal>(&objective)) {
      plan_id = plans_.fresh_id();
      plans_.add(Plan::for_goal(plan_id, roster_, *goal, t));
    } else {
      const auto& act = std::get<ActionDescr>(objective);
      // A subact segment works on the parent's existing subplan; a
      // fresh action segment is the participants' own plan to get the
      // act done, whoever performs it.
      if (justification && justification->via_plan && plans_.contains(*justification->via_plan)) {
        plan_id = *justification->via_plan;
      } else {
        plan_id = plans_.fresh_id();
        PlanKind kind = roster_.is_singleton() ? PlanKind::Individual : PlanKind::Shared;
        plans_.add(Plan::for_action(plan_id, kind, roster_, act));
      }
    }
    std::optional<Symbol> parent;
    if (justification) {
      for (const auto& sid : stack_) {
        if (segment(sid).plan == justification->parent_plan) parent = sid;
      }
    }
    Symbol seg_id{"seg" + std::to_string(++seg_counter_)};
    const Plan& plan = plans_.get(plan_id);
    PlanGoal dsp{plan.agents(), plan.objective()};
    segments_.push_back(Segment{seg_id, icp, dsp, plan_id, parent, std::move(justification), t,
                                std::nullopt, false});
    stack_.push_back(seg_id);
    ms_.assert_fact(MentalFact{FactKind::IntTh, AgentSet({icp}), dsp, t});
    return seg_id;
  }

  Classification handle(const OpenDsp& m, TimePoint t) {
    if (!roster_.contains(m.holder))
      throw UnknownSpeaker("dsp holder " + m.holder.str() + " is not a dialogue participant");
    Classification c{};
    if (stack_.empty()) {
      Symbol seg = open_segment(m.holder, m.objective, std::nullopt, t);
      c.kind = Classification::Kind::NewSegment;
      c.segment = seg;
      c.plan = segment(seg).plan;
      return c;
    }
    std::vector<Symbol> active;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) active.push_back(segment(*it).plan);
    EvalContext ctx{ms_, reg_, oracle_};
    auto justification = infer_subsidiary(m.objective, active, plans_, ctx, t);
    if (!justification) {
      c.kind = Classification::Kind::Unexplained;
      return c;
    }
    Symbol seg = open_segment(m.holder, m.objective, justification, t);
    c.kind = Classification::Kind::NewSegment;
    c.segment = seg;
    c.plan = segment(seg).plan;
    c.justification = segment(seg).justification;
    return c;
  }

  Classification contribute(TimePoint t) {
    Classification c{};
    c.kind = Classification::Kind::Contributes;
    if (stack_.empty()) return c;
    EvalContext ctx{ms_, reg_, oracle_};
    c.established = derive_establishments(plans_, segment(stack_.back()).plan, ctx, t);
    while (!stack_.empty() && check_fsp(plans_.get(segment(stack_.back()).plan), t)) {
      Symbol closing = stack_.back();
      segment_mut(closing).closed = t;
      stack_.pop_back();
      c.completed.push_back(closing);
      if (!stack_.empty()) {
        auto more = derive_establishments(plans_, segment(stack_.back()).plan, ctx, t);
        c.post_established.insert(c.post_established.end(), more.begin(), more.end());
      }
    }
    if (!c.completed.empty()) c.kind = Classification::Kind::Completes;
    return c;
  }

  Classification handle(const Convey& m, TimePoint t) {
    for (const auto& item : m.items) apply_item(item, t);
    return contribute(t);
  }

  Classification handle(const Commit& m, TimePoint t) {
    for (const auto& f : m.facts) {
      if (f.kind != FactKind::IntTo && f.kind != FactKind::IntTh)
        throw MalformedFact("commit carries only int-to and int-th facts");
      MentalFact fact = f;
      fact.from_time = t;
      ms_.assert_fact(std::move(fact));
    }
    return contribute(t);
  }

  Classification handle(const CloseSignal&, TimePoint t) {
    Classification c{};
    if (stack_.empty()) {
      c.kind = Classification::Kind::Unexplained;
      return c;
    }
    Symbol closing = stack_.back();
    segment_mut(closing).closed = t;
    segment_mut(closing).forced = true;
    stack_.pop_back();
    c.kind = Classification::Kind::Completes;
    c.completed.push_back(closing);
    c.forced = true;
    return c;
  }

  void render_segment(const Segment& s, int depth, std::string& out) const {
    std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
    out += pad + s.id.str() + " [" + (s.justification ? render(*s.justification) : "root") + "]";
    if (s.closed) {
      out += " closed @" + std::to_string(s.closed->index);
      if (s.forced) out += " (forced)";
    } else {
      out += " open";
    }
    out += "\n";
    out += pad + "  dsp: (int-th " + s.icp.str() + " " + render(s.dsp) + ")\n";
    dump_plan_into(plans_, s.plan, depth * 2 + 2, out);
    for (const auto& child : segments_) {
      if (child.parent && *child.parent == s.id) render_segment(child, depth + 1, out);
    }
  }

  AgentSet roster_;
  RecipeRegistry reg_;
  OracleTable oracle_;
  MentalStateStore ms_;
  PlanStore plans_;
  std::vector<Segment> segments_;
  std::vector<Symbol> stack_;
  std::optional<TimePoint> last_turn_;
  int seg_counter_ = 0;
};

}  // namespace sharedplan
