#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "sexpr.hpp"

namespace sharedplan {

/// Interned-by-content name: act-types, agents, constants, constraint names.
class Symbol {
 public:
  explicit Symbol(std::string name) : name_(std::move(name)) {
    if (name_.empty()) throw Error("empty symbol");
  }

  const std::string& str() const { return name_; }

  auto operator<=>(const Symbol&) const = default;

 private:
  std::string name_;
};

inline Symbol sym(std::string_view s) { return Symbol(std::string(s)); }

/// Turn counter; advances by one per utterance event. Turn 0 is the
/// script header.
struct TimePoint {
  int index = 0;
  auto operator<=>(const TimePoint&) const = default;
};

inline TimePoint turn(int i) {
  if (i < 0) throw Error("negative time point");
  return TimePoint{i};
}

/// A parameter description: an uninterpreted finite symbol tree.
/// Equality is structural identity. Whether two descriptions denote
/// the same object is never consulted here; that lives in the
/// per-agent individuating sets of the mental-state store.
class ParamDescr {
 public:
  explicit ParamDescr(Symbol root, std::vector<ParamDescr> args = {})
      : root_(std::move(root)), args_(std::move(args)) {}

  const Symbol& root() const { return root_; }
  const std::vector<ParamDescr>& args() const { return args_; }

  bool operator==(const ParamDescr& other) const {
    return root_ == other.root_ && args_ == other.args_;
  }

 private:
  Symbol root_;
  std::vector<ParamDescr> args_;
};

inline int compare(const ParamDescr& a, const ParamDescr& b) {
  if (a.root() != b.root()) return a.root() < b.root() ? -1 : 1;
  const auto& xa = a.args();
  const auto& xb = b.args();
  for (std::size_t i = 0; i < xa.size() && i < xb.size(); ++i) {
    int c = compare(xa[i], xb[i]);
    if (c != 0) return c;
  }
  if (xa.size() != xb.size()) return xa.size() < xb.size() ? -1 : 1;
  return 0;
}

inline bool param_less(const ParamDescr& a, const ParamDescr& b) { return compare(a, b) < 0; }

/// Non-empty set of agents, kept sorted for canonical rendering.
class AgentSet {
 public:
  explicit AgentSet(std::vector<Symbol> members) : members_(std::move(members)) {
    if (members_.empty()) throw Error("empty agent set");
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  const std::vector<Symbol>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool is_singleton() const { return members_.size() == 1; }

  const Symbol& single() const {
    if (!is_singleton()) throw Error("agent set is not a singleton");
    return members_.front();
  }

  bool contains(const Symbol& a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
  }

  bool includes(const AgentSet& other) const {
    return std::includes(members_.begin(), members_.end(), other.members_.begin(),
                         other.members_.end());
  }

  bool operator==(const AgentSet&) const = default;

 private:
  std::vector<Symbol> members_;
};

/// Intensional description of an action: act-type, ordered parameter
/// descriptions, the performing agents, and the time the act is
/// described for. Equality is componentwise structural equality; the
/// time argument participates in identity.
class ActionDescr {
 public:
  ActionDescr(Symbol act_type, std::vector<ParamDescr> params, AgentSet agents, TimePoint time)
      : act_type_(std::move(act_type)),
        params_(std::move(params)),
        agents_(std::move(agents)),
        time_(time) {}

  const Symbol& act_type() const { return act_type_; }
  const std::vector<ParamDescr>& params() const { return params_; }
  const AgentSet& agents() const { return agents_; }
  TimePoint time() const { return time_; }

  bool operator==(const ActionDescr&) const = default;

 private:
  Symbol act_type_;
  std::vector<ParamDescr> params_;
  AgentSet agents_;
  TimePoint time_;
};

inline int compare(const ActionDescr& a, const ActionDescr& b) {
  if (a.act_type() != b.act_type()) return a.act_type() < b.act_type() ? -1 : 1;
  for (std::size_t i = 0; i < a.params().size() && i < b.params().size(); ++i) {
    int c = compare(a.params()[i], b.params()[i]);
    if (c != 0) return c;
  }
  if (a.params().size() != b.params().size())
    return a.params().size() < b.params().size() ? -1 : 1;
  if (a.agents().members() != b.agents().members())
    return a.agents().members() < b.agents().members() ? -1 : 1;
  if (a.time() != b.time()) return a.time() < b.time() ? -1 : 1;
  return 0;
}

/// Records the arity of each act-type, fixed on first use.
class ArityTable {
 public:
  ActionDescr make(Symbol act_type, std::vector<ParamDescr> params, AgentSet agents,
                   TimePoint time) {
    auto it = fixed_.find(act_type);
    if (it == fixed_.end()) {
      fixed_.emplace(act_type, params.size());
    } else if (it->second != params.size()) {
      throw ArityMismatch("act-type " + act_type.str() + " has arity " +
                          std::to_string(it->second) + ", got " + std::to_string(params.size()));
    }
    return ActionDescr(std::move(act_type), std::move(params), std::move(agents), time);
  }

  std::optional<std::size_t> arity_of(const Symbol& act_type) const {
    auto it = fixed_.find(act_type);
    if (it == fixed_.end()) return std::nullopt;
    return it->second;
  }

 private:
  std::map<Symbol, std::size_t> fixed_;
};

inline ActionDescr mk_action(ArityTable& table, Symbol act_type, std::vector<ParamDescr> params,
                             AgentSet agents, TimePoint time) {
  return table.make(std::move(act_type), std::move(params), std::move(agents), time);
}

/// Description equality: structurally identical or not, nothing else.
inline bool descr_equal(const ParamDescr& a, const ParamDescr& b) { return a == b; }
inline bool descr_equal(const ActionDescr& a, const ActionDescr& b) { return a == b; }

// ---------------------------------------------------------------------------
// Surface syntax.
// Parameter descriptions print as `name` or `(root arg ...)`; a leaf never
// prints as `(name)`, and parsing `(name)` yields the same value as `name`.
// Actions print as `(act p1 .. pn :agents (a ..) :t N)`.

inline SExpr to_sexpr(const ParamDescr& p) {
  if (p.args().empty()) return SExpr::atom(p.root().str());
  std::vector<SExpr> items;
  items.push_back(SExpr::atom(p.root().str()));
  for (const auto& a : p.args()) items.push_back(to_sexpr(a));
  return SExpr::list(std::move(items));
}

inline ParamDescr param_from_sexpr(const SExpr& s) {
  if (s.is_atom()) {
    if (s.atom_text().empty() || s.atom_text().front() == ':')
      throw ParseError("bad parameter description '" + s.atom_text() + "'", s.line, s.col);
    return ParamDescr(Symbol(s.atom_text()));
  }
  if (s.items().empty()) throw ParseError("empty parameter description", s.line, s.col);
  std::vector<ParamDescr> args;
  for (std::size_t i = 1; i < s.size(); ++i) args.push_back(param_from_sexpr(s.at(i)));
  return ParamDescr(Symbol(s.head()), std::move(args));
}

inline SExpr to_sexpr(const AgentSet& g) {
  std::vector<SExpr> items;
  for (const auto& m : g.members()) items.push_back(SExpr::atom(m.str()));
  return SExpr::list(std::move(items));
}

inline AgentSet agents_from_sexpr(const SExpr& s) {
  std::vector<Symbol> members;
  for (const auto& item : s.items()) members.push_back(Symbol(item.atom_text()));
  if (members.empty()) throw ParseError("empty agent set", s.line, s.col);
  return AgentSet(std::move(members));
}

inline SExpr to_sexpr(const ActionDescr& a) {
  std::vector<SExpr> items;
  items.push_back(SExpr::atom(a.act_type().str()));
  for (const auto& p : a.params()) items.push_back(to_sexpr(p));
  items.push_back(SExpr::atom(":agents"));
  items.push_back(to_sexpr(a.agents()));
  items.push_back(SExpr::atom(":t"));
  items.push_back(SExpr::atom(std::to_string(a.time().index)));
  return SExpr::list(std::move(items));
}

inline ActionDescr action_from_sexpr(const SExpr& s, ArityTable& arity) {
  const auto& items = s.items();
  if (items.empty()) throw ParseError("empty action form", s.line, s.col);
  Symbol act_type(items[0].atom_text());
  std::vector<ParamDescr> params;
  std::size_t i = 1;
  while (i < items.size() && !(items[i].is_atom() && !items[i].atom_text().empty() &&
                               items[i].atom_text().front() == ':')) {
    params.push_back(param_from_sexpr(items[i]));
    ++i;
  }
  std::optional<AgentSet> group;
  TimePoint t{0};
  while (i < items.size()) {
    const std::string& key = items[i].atom_text();
    if (i + 1 >= items.size()) throw ParseError("missing value for " + key, s.line, s.col);
    if (key == ":agents") {
      group = agents_from_sexpr(items[i + 1]);
    } else if (key == ":t") {
      try {
        t = turn(std::stoi(items[i + 1].atom_text()));
      } catch (const std::logic_error&) {
        throw ParseError("bad time point", items[i + 1].line, items[i + 1].col);
      }
    } else {
      throw ParseError("unknown action key " + key, items[i].line, items[i].col);
    }
    i += 2;
  }
  if (!group) throw ParseError("action is missing :agents", s.line, s.col);
  return mk_action(arity, std::move(act_type), std::move(params), std::move(*group), t);
}

inline std::string render(const ParamDescr& p) { return to_text(to_sexpr(p)); }
inline std::string render(const AgentSet& g) { return to_text(to_sexpr(g)); }
inline std::string render(const ActionDescr& a) { return to_text(to_sexpr(a)); }

}  // namespace sharedplan
