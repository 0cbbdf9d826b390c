#pragma once

#include <array>
#include <optional>
#include <vector>

#include "lexibridge/core.hpp"

namespace lexibridge {

struct Transition {
  WorkflowState from;
  Action action;
  Role role;
  WorkflowState to;
};

/// The complete review state machine. No other (state, action, role) triple
/// is accepted.
inline constexpr std::array<Transition, 9> kTransitionTable = {{
    {WorkflowState::Untranslated, Action::Submit, Role::Translator, WorkflowState::PendingCorrection},
    {WorkflowState::Untranslated, Action::MarkNotUnderstood, Role::Translator, WorkflowState::NotUnderstood},
    {WorkflowState::NotUnderstood, Action::Reassign, Role::Corrector, WorkflowState::Untranslated},
    {WorkflowState::PendingCorrection, Action::Accept, Role::Corrector, WorkflowState::PendingExpert},
    {WorkflowState::PendingCorrection, Action::Reject, Role::Corrector, WorkflowState::ReturnedToTranslator},
    {WorkflowState::ReturnedToTranslator, Action::Resubmit, Role::Translator, WorkflowState::PendingCorrection},
    {WorkflowState::PendingExpert, Action::Accept, Role::Expert, WorkflowState::Accepted},
    {WorkflowState::PendingExpert, Action::Reject, Role::Expert, WorkflowState::ReturnedToCorrector},
    {WorkflowState::ReturnedToCorrector, Action::Resubmit, Role::Corrector, WorkflowState::PendingExpert},
}};

inline std::optional<WorkflowState> next_state(WorkflowState from, Action action, Role role) {
  for (const auto& t : kTransitionTable)
    if (t.from == from && t.action == action && t.role == role) return t.to;
  return std::nullopt;
}

inline std::vector<Transition> transitions_from(WorkflowState from) {
  std::vector<Transition> out;
  for (const auto& t : kTransitionTable)
    if (t.from == from) out.push_back(t);
  return out;
}

inline bool is_legal_successor(WorkflowState from, WorkflowState to) {
  for (const auto& t : kTransitionTable)
    if (t.from == from && t.to == to) return true;
  return false;
}

/// Work queue membership: which states each role picks up.
inline bool in_queue(Role role, WorkflowState state) {
  switch (role) {
    case Role::Translator:
      return state == WorkflowState::Untranslated || state == WorkflowState::ReturnedToTranslator;
    case Role::Corrector:
      return state == WorkflowState::PendingCorrection || state == WorkflowState::ReturnedToCorrector ||
             state == WorkflowState::NotUnderstood;
    case Role::Expert:
      return state == WorkflowState::PendingExpert;
  }
  return false;
}

}  // namespace lexibridge
