#pragma once

// Three-stage review workflow: translator -> corrector -> expert, with
// rejection loops, mandatory notes, separation of duties, work-queue claims
// and the expert's Arabic-only view.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/transitions.hpp"
#include "lexibridge/validation.hpp"

namespace lexibridge::workflow {

/// Content payload carried by submit/resubmit (and by a corrector's reject
/// when it replaces a gap with counter-synonyms). Absent fields stay as-is.
struct RecordEdits {
  std::optional<bool> is_gap;
  std::optional<std::vector<std::string>> phrases;
  std::optional<std::vector<Synonym>> synonyms;
  std::optional<std::string> gloss;

  friend bool operator==(const RecordEdits&, const RecordEdits&) = default;
};

struct ActionRequest {
  Action action = Action::Submit;
  std::string actor;
  Role role = Role::Translator;
  std::string note;
  std::optional<RecordEdits> edits;
  std::optional<std::int64_t> expected_revision;
};

inline bool edits_permitted(Action action, Role role) {
  return action == Action::Submit || action == Action::Resubmit ||
         (action == Action::Reject && role == Role::Corrector);
}

/// Applies a content payload. Lemmas and phrases are whitespace-normalized and
/// synonyms are ordered by rank. Marking a gap clears synonyms; clearing it
/// drops the phrases.
inline TranslationRecord apply_edits(TranslationRecord record, const RecordEdits& edits) {
  if (edits.is_gap.value_or(record.is_gap) && edits.synonyms && !edits.synonyms->empty())
    throw Error(ErrorCode::InvalidEdits, "a lexical gap cannot carry synonyms");
  if (edits.gloss) record.gloss = text::collapse_whitespace(*edits.gloss);
  if (edits.phrases) {
    record.phrases.clear();
    for (const auto& p : *edits.phrases) {
      auto norm = text::collapse_whitespace(p);
      if (norm.empty()) throw Error(ErrorCode::InvalidEdits, "empty phrase");
      record.phrases.push_back(std::move(norm));
    }
  }
  if (edits.synonyms) {
    record.synonyms.clear();
    for (const auto& s : *edits.synonyms) {
      Synonym syn{normalize_lemma(s.lemma), s.rank, {}};
      if (syn.lemma.empty()) throw Error(ErrorCode::InvalidEdits, "synonym lemma is empty");
      for (const auto& ex : s.examples) {
        auto norm = text::collapse_whitespace(ex);
        if (norm.empty()) throw Error(ErrorCode::InvalidEdits, "empty example for '" + syn.lemma + "'");
        syn.examples.push_back(std::move(norm));
      }
      record.synonyms.push_back(std::move(syn));
    }
    std::stable_sort(record.synonyms.begin(), record.synonyms.end(),
                     [](const Synonym& a, const Synonym& b) { return a.rank < b.rank; });
  }
  if (edits.is_gap) {
    record.is_gap = *edits.is_gap;
    if (record.is_gap)
      record.synonyms.clear();
    else
      record.phrases.clear();
  }
  return record;
}

/// Translator marks the synset as a lexical gap with substitute phrases.
/// This is a draft edit: no event, no revision bump until submit/resubmit.
inline TranslationRecord mark_gap(const TranslationRecord& record, const std::vector<std::string>& phrases,
                                  const std::string& /*actor*/, Role role) {
  if (role != Role::Translator ||
      (record.state != WorkflowState::Untranslated && record.state != WorkflowState::ReturnedToTranslator))
    throw Error(ErrorCode::IllegalTransition,
                "gap marking needs a translator on an untranslated or returned record");
  std::vector<std::string> cleaned;
  for (const auto& p : phrases)
    if (auto n = text::collapse_whitespace(p); !n.empty()) cleaned.push_back(std::move(n));
  if (cleaned.empty()) throw Error(ErrorCode::EmptyPhrases, "a lexical gap needs at least one phrase");
  RecordEdits edits;
  edits.is_gap = true;
  edits.phrases = std::move(cleaned);
  return apply_edits(record, edits);
}

/// An actor holds a single role over the life of a record, so a corrector
/// never reviews their own translation and the expert is distinct from both.
inline void check_duty_separation(const TranslationRecord& record, const std::string& actor, Role role) {
  for (const auto& e : record.history)
    if (e.actor == actor && e.role != role)
      throw Error(ErrorCode::DutySeparationViolation, "actor '" + actor + "' already acted on " +
                                                          record.source.str() + " as " +
                                                          std::string(role_name(e.role)));
}

/// Performs one workflow action and returns the updated record. Edits are
/// applied atomically with the transition; the record passed in is never
/// modified. `lexicon` supplies the hierarchy for polysemy warnings.
inline TranslationRecord apply(const TranslationRecord& record, const ActionRequest& req, const Lexicon& lexicon,
                               const std::string& timestamp) {
  if (req.expected_revision && *req.expected_revision != record.revision)
    throw Error(ErrorCode::StaleRevision, "expected revision " + std::to_string(*req.expected_revision) +
                                              ", record is at " + std::to_string(record.revision));
  auto next = next_state(record.state, req.action, req.role);
  if (!next)
    throw Error(ErrorCode::IllegalTransition, std::string(role_name(req.role)) + " cannot " +
                                                  std::string(action_name(req.action)) + " a record in state " +
                                                  std::string(state_name(record.state)));
  const auto note = text::collapse_whitespace(req.note);
  if (action_requires_note(req.action) && note.empty())
    throw Error(ErrorCode::MissingNote, std::string(action_name(req.action)) + " requires a note");
  if (req.actor.empty()) throw Error(ErrorCode::BadRequest, "actor is required");
  check_duty_separation(record, req.actor, req.role);

  TranslationRecord out = record;
  if (req.edits) {
    if (!edits_permitted(req.action, req.role))
      throw Error(ErrorCode::InvalidEdits, std::string(action_name(req.action)) + " does not accept edits");
    if (req.edits->is_gap.value_or(false) && req.role == Role::Translator) {
      std::vector<std::string> phrases = req.edits->phrases.value_or(record.phrases);
      out = mark_gap(out, phrases, req.actor, req.role);
      auto rest = *req.edits;
      rest.is_gap.reset();
      rest.phrases.reset();
      out = apply_edits(out, rest);
    } else {
      out = apply_edits(out, *req.edits);
    }
  }
  out.not_understood = req.action == Action::MarkNotUnderstood;

  WorkflowEvent event;
  event.actor = req.actor;
  event.role = req.role;
  event.action = req.action;
  event.note = note;
  event.timestamp = timestamp;
  event.revision = record.revision;

  if (requires_content(*next)) {
    const SourceSynset* source = lexicon.source(record.source);
    auto check = validation::validate_for_transition(out, source, *next, lexicon);
    if (!check.ok)
      throw Error(ErrorCode::ValidationBlocked,
                  std::to_string(check.blocking.size()) + " blocking finding(s) on " + record.source.str(),
                  check.blocking);
    event.warnings = std::move(check.warnings);
  }

  out.state = *next;
  out.history.push_back(std::move(event));
  out.revision = record.revision + 1;
  return out;
}

// ---------------------------------------------------------------------------
// Role-scoped views
// ---------------------------------------------------------------------------

struct RecordView {
  TranslationRecord record;
  std::optional<SourceSynset> source;  // absent for the expert on non-gap records
  bool redacted = false;
};

/// Translators and correctors see both languages. The expert sees only the
/// target content, plus the English synset when it is a lexical gap; notes
/// written by earlier roles are withheld from the expert because they may
/// quote the English original.
inline RecordView view_for(const TranslationRecord& record, const SourceSynset* source, Role role) {
  RecordView view{record, {}, false};
  if (role != Role::Expert) {
    if (source) view.source = *source;
    return view;
  }
  view.redacted = !record.is_gap;
  if (record.is_gap && source) view.source = *source;
  for (auto& e : view.record.history)
    if (e.role != Role::Expert) e.note.clear();
  return view;
}

// ---------------------------------------------------------------------------
// Work-queue claims
// ---------------------------------------------------------------------------

struct Claim {
  std::string actor;
  Role role = Role::Translator;

  friend bool operator==(const Claim&, const Claim&) = default;
};

class ClaimBoard {
 public:
  /// Claims `record` for `actor`. Re-claiming one's own record is a no-op.
  const Claim& assign(const TranslationRecord& record, const std::string& actor, Role role) {
    if (!in_queue(role, record.state))
      throw Error(ErrorCode::WrongQueue, record.source.str() + " in state " + std::string(state_name(record.state)) +
                                             " is not in the " + std::string(role_name(role)) + " queue");
    auto it = claims_.find(record.source);
    if (it != claims_.end()) {
      if (it->second.actor != actor)
        throw Error(ErrorCode::AlreadyClaimed, record.source.str() + " is claimed by " + it->second.actor);
      return it->second;
    }
    return claims_.emplace(record.source, Claim{actor, role}).first->second;
  }

  const Claim* claim(const SynsetId& id) const {
    auto it = claims_.find(id);
    return it == claims_.end() ? nullptr : &it->second;
  }

  void release(const SynsetId& id) { claims_.erase(id); }
  std::size_t release_all() {
    auto n = claims_.size();
    claims_.clear();
    return n;
  }

  /// Restores a persisted claim without queue checks.
  void restore(const SynsetId& id, Claim c) { claims_[id] = std::move(c); }

  const std::map<SynsetId, Claim>& all() const { return claims_; }

  friend bool operator==(const ClaimBoard&, const ClaimBoard&) = default;

 private:
  std::map<SynsetId, Claim> claims_;
};

}  // namespace lexibridge::workflow
