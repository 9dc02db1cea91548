#pragma once

// Umbrella header for the sharedplan library: intensional action
// descriptions, a time-indexed mental-state store, recipe and
// identification-constraint registries, the knowledge-precondition
// predicates, the plan requirement ledger with capability operators,
// and the discourse-segment replay machinery.

#include "discourse.hpp"
#include "errors.hpp"
#include "knowledge.hpp"
#include "mental_state.hpp"
#include "plan.hpp"
#include "propositions.hpp"
#include "recipe.hpp"
#include "replay.hpp"
#include "script.hpp"
#include "sexpr.hpp"
#include "term.hpp"
