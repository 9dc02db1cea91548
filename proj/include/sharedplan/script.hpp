#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "discourse.hpp"

namespace sharedplan {

/// A dialogue script: the participants, the facts holding before the
/// dialogue starts, the root segment purpose, and the utterance
/// events in turn order.
struct ScriptFile {
  AgentSet agents;
  Symbol root_holder;
  PlanObjective root_objective;
  std::vector<ConveyItem> init_items;
  std::vector<UtteranceEvent> events;

  bool operator==(const ScriptFile&) const = default;
};

namespace detail {

inline MentalFact fact_from_sexpr(const SExpr& s, ArityTable& arity) {
  const std::string& head = s.head();
  if (head == "bel" || head == "mb") {
    if (s.size() != 3) throw ParseError(head + " takes holder and proposition", s.line, s.col);
    AgentSet holder = head == "mb" ? agents_from_sexpr(s.at(1))
                                   : AgentSet({Symbol(s.at(1).atom_text())});
    return MentalFact{head == "mb" ? FactKind::Mb : FactKind::Bel, std::move(holder),
                      proposition_from_sexpr(s.at(2), arity), TimePoint{0}};
  }
  if (head == "int-to") {
    if (s.size() != 3) throw ParseError("int-to takes agent and action", s.line, s.col);
    return MentalFact{FactKind::IntTo, AgentSet({Symbol(s.at(1).atom_text())}),
                      action_from_sexpr(s.at(2), arity), TimePoint{0}};
  }
  if (head == "int-th") {
    if (s.size() != 3) throw ParseError("int-th takes agent and plan goal", s.line, s.col);
    return MentalFact{FactKind::IntTh, AgentSet({Symbol(s.at(1).atom_text())}),
                      plan_goal_from_sexpr(s.at(2), arity), TimePoint{0}};
  }
  throw ParseError("unknown fact form " + head, s.line, s.col);
}

inline ConveyItem convey_item_from_sexpr(const SExpr& s, ArityTable& arity) {
  if (s.is_list() && !s.items().empty() && s.at(0).is_atom() && s.head() == "retract") {
    if (s.size() != 2) throw ParseError("retract takes one item", s.line, s.col);
    ConveyItem inner = convey_item_from_sexpr(s.at(1), arity);
    if (inner.op == ConveyItem::Op::Retract)
      throw ParseError("nested retract", s.line, s.col);
    inner.op = ConveyItem::Op::Retract;
    return inner;
  }
  const std::string& head = s.head();
  if (head == "codesig") {
    if (s.size() != 4)
      throw ParseError("codesig takes agent and two descriptions", s.line, s.col);
    return ConveyItem{ConveyItem::Op::Assert,
                      CodesigItem{Symbol(s.at(1).atom_text()), param_from_sexpr(s.at(2)),
                                  param_from_sexpr(s.at(3))}};
  }
  if (head == "world") {
    if (s.size() != 2) throw ParseError("world takes one atom", s.line, s.col);
    return ConveyItem{ConveyItem::Op::Assert, WorldItem{param_from_sexpr(s.at(1))}};
  }
  return ConveyItem{ConveyItem::Op::Assert, fact_from_sexpr(s, arity)};
}

inline Move move_from_sexpr(const SExpr& s, ArityTable& arity) {
  const std::string& head = s.head();
  if (head == "open-dsp") {
    if (s.size() != 3) throw ParseError("open-dsp takes holder and objective", s.line, s.col);
    return OpenDsp{Symbol(s.at(1).atom_text()), objective_from_sexpr(s.at(2), arity)};
  }
  if (head == "convey") {
    Convey m;
    for (std::size_t i = 1; i < s.size(); ++i)
      m.items.push_back(convey_item_from_sexpr(s.at(i), arity));
    if (m.items.empty()) throw ParseError("convey needs at least one item", s.line, s.col);
    return m;
  }
  if (head == "commit") {
    Commit m;
    for (std::size_t i = 1; i < s.size(); ++i) {
      MentalFact f = fact_from_sexpr(s.at(i), arity);
      if (f.kind != FactKind::IntTo && f.kind != FactKind::IntTh)
        throw ParseError("commit carries only int-to and int-th facts", s.at(i).line,
                         s.at(i).col);
      m.facts.push_back(std::move(f));
    }
    if (m.facts.empty()) throw ParseError("commit needs at least one fact", s.line, s.col);
    return m;
  }
  if (head == "close") {
    if (s.size() != 1) throw ParseError("close takes no arguments", s.line, s.col);
    return CloseSignal{};
  }
  throw ParseError("unknown move " + head, s.line, s.col);
}

/// Agents mentioned by an item that must be declared in the header.
inline std::vector<Symbol> mentioned_agents(const ConveyItem& item) {
  std::vector<Symbol> out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, MentalFact>) {
          for (const auto& m : v.holder.members()) out.push_back(m);
        } else if constexpr (std::is_same_v<T, CodesigItem>) {
          out.push_back(v.agent);
        }
      },
      item.item);
  return out;
}

}  // namespace detail

/// Parses and structurally validates a script: turn ordering and
/// declaration of every speaker, holder, and fact-holding agent.
/// Semantic failures (an unexplainable purpose, an unsatisfiable
/// requirement) are not detected here; they surface during replay.
inline ScriptFile parse_script(std::string_view text, ArityTable& arity) {
  std::vector<SExpr> top = parse_sexprs(text);
  if (top.empty()) throw ParseError("missing header: empty script", 1, 1);
  if (top.size() != 1) throw ParseError("expected a single (script ...) form", 1, 1);
  const SExpr& root = top.front();
  if (root.is_atom() || root.items().empty() || root.head() != "script")
    throw ParseError("expected (script ...)", root.line, root.col);

  std::optional<AgentSet> agents;
  std::optional<Symbol> root_holder;
  std::optional<PlanObjective> root_objective;
  std::vector<ConveyItem> init_items;
  std::vector<UtteranceEvent> events;

  for (std::size_t i = 1; i < root.size(); ++i) {
    const SExpr& form = root.at(i);
    const std::string& head = form.head();
    if (head == "agents") {
      std::vector<Symbol> members;
      for (std::size_t j = 1; j < form.size(); ++j)
        members.push_back(Symbol(form.at(j).atom_text()));
      if (members.empty()) throw ParseError("agents list is empty", form.line, form.col);
      agents = AgentSet(std::move(members));
    } else if (head == "root-dsp") {
      if (form.size() != 3)
        throw ParseError("root-dsp takes holder and objective", form.line, form.col);
      root_holder = Symbol(form.at(1).atom_text());
      root_objective = objective_from_sexpr(form.at(2), arity);
    } else if (head == "init") {
      for (std::size_t j = 1; j < form.size(); ++j)
        init_items.push_back(detail::convey_item_from_sexpr(form.at(j), arity));
    } else if (head == "events") {
      for (std::size_t j = 1; j < form.size(); ++j) {
        const SExpr& ev = form.at(j);
        if (ev.is_atom() || ev.items().empty() || ev.head() != "event" || ev.size() != 4)
          throw ParseError("expected (event turn speaker move)", ev.line, ev.col);
        int t = 0;
        try {
          t = std::stoi(ev.at(1).atom_text());
        } catch (const std::logic_error&) {
          throw ParseError("bad turn number", ev.at(1).line, ev.at(1).col);
        }
        if (t < 1) throw ParseError("event turns start at 1", ev.at(1).line, ev.at(1).col);
        events.push_back(UtteranceEvent{TimePoint{t}, Symbol(ev.at(2).atom_text()),
                                        detail::move_from_sexpr(ev.at(3), arity)});
      }
    } else {
      throw ParseError("unknown script section " + head, form.line, form.col);
    }
  }

  if (!agents) throw ParseError("missing header: no (agents ...)", root.line, root.col);
  if (!root_holder || !root_objective)
    throw ParseError("missing header: no (root-dsp ...)", root.line, root.col);

  for (std::size_t i = 1; i < events.size(); ++i) {
    if (events[i].turn == events[i - 1].turn)
      throw DuplicateTurn("duplicate turn " + std::to_string(events[i].turn.index), root.line,
                          root.col);
    if (events[i].turn < events[i - 1].turn)
      throw DuplicateTurn("turn " + std::to_string(events[i].turn.index) +
                              " out of order after " + std::to_string(events[i - 1].turn.index),
                          root.line, root.col);
  }

  auto require_declared = [&](const Symbol& s) {
    if (!agents->contains(s))
      throw UndeclaredSymbol("agent " + s.str() + " is not declared in the header", root.line,
                             root.col);
  };
  require_declared(*root_holder);
  for (const auto& item : init_items) {
    for (const auto& a : detail::mentioned_agents(item)) require_declared(a);
  }
  for (const auto& ev : events) {
    require_declared(ev.speaker);
    if (const auto* open = std::get_if<OpenDsp>(&ev.move)) require_declared(open->holder);
    if (const auto* convey = std::get_if<Convey>(&ev.move)) {
      for (const auto& item : convey->items) {
        for (const auto& a : detail::mentioned_agents(item)) require_declared(a);
      }
    }
    if (const auto* commit = std::get_if<Commit>(&ev.move)) {
      for (const auto& f : commit->facts) {
        for (const auto& a : f.holder.members()) require_declared(a);
      }
    }
  }

  return ScriptFile{std::move(*agents), std::move(*root_holder), std::move(*root_objective),
                    std::move(init_items), std::move(events)};
}

/// Canonical rendering; parse(render(parse(x))) == parse(x).
inline std::string render_script(const ScriptFile& script) {
  std::string out = "(script\n  (agents";
  for (const auto& a : script.agents.members()) out += " " + a.str();
  out += ")\n  (root-dsp " + script.root_holder.str() + " " + render(script.root_objective) +
         ")\n  (init";
  for (const auto& item : script.init_items) out += "\n    " + to_text(to_sexpr(item));
  out += ")\n  (events";
  for (const auto& ev : script.events) out += "\n    " + render(ev);
  out += "))\n";
  return out;
}

}  // namespace sharedplan
