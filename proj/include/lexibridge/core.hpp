#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "lexibridge/text.hpp"

namespace lexibridge {

// ---------------------------------------------------------------------------
// Parts of speech and synset identifiers
// ---------------------------------------------------------------------------

enum class Pos { Noun, Verb, Adjective, AdjectiveSatellite, Adverb };

inline constexpr std::array<Pos, 5> kAllPos = {Pos::Noun, Pos::Verb, Pos::Adjective,
                                               Pos::AdjectiveSatellite, Pos::Adverb};

/// WNDB ss_type letter: n, v, a, s, r.
inline char pos_letter(Pos pos) {
  switch (pos) {
    case Pos::Noun: return 'n';
    case Pos::Verb: return 'v';
    case Pos::Adjective: return 'a';
    case Pos::AdjectiveSatellite: return 's';
    case Pos::Adverb: return 'r';
  }
  return '?';
}

inline std::string_view pos_name(Pos pos) {
  switch (pos) {
    case Pos::Noun: return "noun";
    case Pos::Verb: return "verb";
    case Pos::Adjective: return "adjective";
    case Pos::AdjectiveSatellite: return "adjective_satellite";
    case Pos::Adverb: return "adverb";
  }
  return "?";
}

/// Accepts the WNDB letter or the long name.
inline std::optional<Pos> parse_pos(std::string_view s) {
  if (s == "n" || s == "noun") return Pos::Noun;
  if (s == "v" || s == "verb") return Pos::Verb;
  if (s == "a" || s == "adj" || s == "adjective") return Pos::Adjective;
  if (s == "s" || s == "adjective_satellite" || s == "adjective-satellite")
    return Pos::AdjectiveSatellite;
  if (s == "r" || s == "adv" || s == "adverb") return Pos::Adverb;
  return std::nullopt;
}

/// The four reporting buckets; satellites report under adjectives.
enum class PosGroup { Nouns, Verbs, Adjectives, Adverbs };

inline constexpr std::array<PosGroup, 4> kPosGroups = {PosGroup::Nouns, PosGroup::Verbs,
                                                       PosGroup::Adjectives, PosGroup::Adverbs};

inline PosGroup pos_group(Pos pos) {
  switch (pos) {
    case Pos::Noun: return PosGroup::Nouns;
    case Pos::Verb: return PosGroup::Verbs;
    case Pos::Adjective:
    case Pos::AdjectiveSatellite: return PosGroup::Adjectives;
    case Pos::Adverb: return PosGroup::Adverbs;
  }
  return PosGroup::Nouns;
}

inline std::string_view pos_group_name(PosGroup g) {
  switch (g) {
    case PosGroup::Nouns: return "nouns";
    case PosGroup::Verbs: return "verbs";
    case PosGroup::Adjectives: return "adjectives";
    case PosGroup::Adverbs: return "adverbs";
  }
  return "?";
}

inline bool is_offset_string(std::string_view s) {
  return s.size() == 8 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

class SynsetId {
 public:
  SynsetId() = default;

  /// Throws std::invalid_argument unless `offset` is exactly 8 decimal digits.
  SynsetId(Pos pos, std::string offset) : pos_(pos), offset_(std::move(offset)) {
    if (!is_offset_string(offset_))
      throw std::invalid_argument("synset offset must be 8 decimal digits: '" + offset_ + "'");
  }

  Pos pos() const { return pos_; }
  const std::string& offset() const { return offset_; }

  /// `n:00001740`
  std::string str() const { return std::string(1, pos_letter(pos_)) + ":" + offset_; }

  static std::optional<SynsetId> parse(std::string_view s) {
    auto colon = s.find(':');
    if (colon == std::string_view::npos) return std::nullopt;
    auto pos = parse_pos(s.substr(0, colon));
    auto off = s.substr(colon + 1);
    if (!pos || !is_offset_string(off)) return std::nullopt;
    return SynsetId(*pos, std::string(off));
  }

  friend bool operator==(const SynsetId&, const SynsetId&) = default;
  friend auto operator<=>(const SynsetId&, const SynsetId&) = default;

 private:
  Pos pos_ = Pos::Noun;
  std::string offset_ = "00000000";
};

// ---------------------------------------------------------------------------
// Source (English) synsets
// ---------------------------------------------------------------------------

struct SourceSynset {
  SynsetId id;
  std::vector<std::string> lemmas;
  std::string gloss;
  std::vector<std::string> examples;
  std::vector<SynsetId> hypernyms;
  int lex_file = 0;

  friend bool operator==(const SourceSynset&, const SourceSynset&) = default;
};

// ---------------------------------------------------------------------------
// Target-language records
// ---------------------------------------------------------------------------

/// Strips and collapses whitespace; never folds diacritics or hamza.
inline std::string normalize_lemma(std::string_view raw) { return text::collapse_whitespace(raw); }

struct Synonym {
  std::string lemma;
  int rank = 1;
  std::vector<std::string> examples;

  friend bool operator==(const Synonym&, const Synonym&) = default;
};

enum class WorkflowState {
  Untranslated,
  NotUnderstood,
  PendingCorrection,
  ReturnedToTranslator,
  PendingExpert,
  ReturnedToCorrector,
  Accepted
};

inline constexpr std::array<WorkflowState, 7> kAllStates = {
    WorkflowState::Untranslated,         WorkflowState::NotUnderstood,
    WorkflowState::PendingCorrection,    WorkflowState::ReturnedToTranslator,
    WorkflowState::PendingExpert,        WorkflowState::ReturnedToCorrector,
    WorkflowState::Accepted};

inline std::string_view state_name(WorkflowState s) {
  switch (s) {
    case WorkflowState::Untranslated: return "untranslated";
    case WorkflowState::NotUnderstood: return "not_understood";
    case WorkflowState::PendingCorrection: return "pending_correction";
    case WorkflowState::ReturnedToTranslator: return "returned_to_translator";
    case WorkflowState::PendingExpert: return "pending_expert";
    case WorkflowState::ReturnedToCorrector: return "returned_to_corrector";
    case WorkflowState::Accepted: return "accepted";
  }
  return "?";
}

inline std::optional<WorkflowState> parse_state(std::string_view s) {
  for (auto st : kAllStates)
    if (state_name(st) == s) return st;
  return std::nullopt;
}

/// States whose records must carry submitted content.
inline bool requires_content(WorkflowState s) {
  return s == WorkflowState::PendingCorrection || s == WorkflowState::PendingExpert ||
         s == WorkflowState::Accepted;
}

enum class Role { Translator, Corrector, Expert };

inline std::string_view role_name(Role r) {
  switch (r) {
    case Role::Translator: return "translator";
    case Role::Corrector: return "corrector";
    case Role::Expert: return "expert";
  }
  return "?";
}

inline std::optional<Role> parse_role(std::string_view s) {
  if (s == "translator") return Role::Translator;
  if (s == "corrector") return Role::Corrector;
  if (s == "expert") return Role::Expert;
  return std::nullopt;
}

enum class Action { Submit, MarkNotUnderstood, Reassign, Accept, Reject, Resubmit };

inline constexpr std::array<Action, 6> kAllActions = {Action::Submit, Action::MarkNotUnderstood,
                                                      Action::Reassign, Action::Accept,
                                                      Action::Reject, Action::Resubmit};

inline std::string_view action_name(Action a) {
  switch (a) {
    case Action::Submit: return "submit";
    case Action::MarkNotUnderstood: return "mark_not_understood";
    case Action::Reassign: return "reassign";
    case Action::Accept: return "accept";
    case Action::Reject: return "reject";
    case Action::Resubmit: return "resubmit";
  }
  return "?";
}

inline std::optional<Action> parse_action(std::string_view s) {
  for (auto a : kAllActions)
    if (action_name(a) == s) return a;
  return std::nullopt;
}

inline bool action_requires_note(Action a) {
  return a == Action::Reject || a == Action::MarkNotUnderstood;
}

// ---------------------------------------------------------------------------
// Findings
// ---------------------------------------------------------------------------

enum class Severity { Error, Warning };

inline std::string_view severity_name(Severity s) { return s == Severity::Error ? "error" : "warning"; }

struct Locus {
  SynsetId record;
  std::optional<std::size_t> synonym_index;

  /// `n:00001740` or `n:00001740#2`
  std::string str() const {
    auto s = record.str();
    if (synonym_index) s += "#" + std::to_string(*synonym_index);
    return s;
  }

  friend bool operator==(const Locus&, const Locus&) = default;
  friend auto operator<=>(const Locus&, const Locus&) = default;
};

struct Finding {
  std::string rule_id;
  Severity severity = Severity::Warning;
  Locus locus;
  std::string message;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Stable report order: rule id, then locus, then message.
inline void sort_findings(std::vector<Finding>& findings) {
  std::stable_sort(findings.begin(), findings.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.rule_id, a.locus, a.message) < std::tie(b.rule_id, b.locus, b.message);
  });
}

inline bool has_error(const std::vector<Finding>& findings) {
  return std::any_of(findings.begin(), findings.end(),
                     [](const Finding& f) { return f.severity == Severity::Error; });
}

// ---------------------------------------------------------------------------
// History and records
// ---------------------------------------------------------------------------

struct WorkflowEvent {
  std::string actor;
  Role role = Role::Translator;
  Action action = Action::Submit;
  std::string note;
  std::string timestamp;  // ISO-8601 UTC, e.g. 2024-01-31T12:00:00Z
  std::int64_t revision = 0;  // record revision the action was applied to
  std::vector<Finding> warnings;  // non-blocking findings attached on transition

  friend bool operator==(const WorkflowEvent&, const WorkflowEvent&) = default;
};

struct TranslationRecord {
  SynsetId source;
  WorkflowState state = WorkflowState::Untranslated;
  bool is_gap = false;
  std::vector<std::string> phrases;
  std::vector<Synonym> synonyms;
  std::string gloss;
  bool not_understood = false;
  std::int64_t revision = 0;
  std::vector<WorkflowEvent> history;

  friend bool operator==(const TranslationRecord&, const TranslationRecord&) = default;
};

inline TranslationRecord new_record(const SourceSynset& source) {
  TranslationRecord r;
  r.source = source.id;
  return r;
}

inline bool has_target_content(const TranslationRecord& r) {
  return !r.synonyms.empty() || !r.phrases.empty() || !r.gloss.empty();
}

/// Checks the state/content coupling, rank contiguity, and history ordering.
/// Returns a description of the first violation, or nullopt.
inline std::optional<std::string> check_invariants(const TranslationRecord& r) {
  if (r.is_gap) {
    if (!r.synonyms.empty()) return "gap record carries synonyms";
    if (r.phrases.empty()) return "gap record without substitute phrase";
  } else if (requires_content(r.state)) {
    if (r.synonyms.empty()) return "submitted record without synonyms";
    if (r.gloss.empty()) return "submitted record without gloss";
  }
  std::vector<int> ranks;
  for (const auto& s : r.synonyms) ranks.push_back(s.rank);
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i)
    if (ranks[i] != static_cast<int>(i) + 1) return "synonym ranks are not 1..k";
  if (r.not_understood && r.state != WorkflowState::NotUnderstood)
    return "not_understood flag outside NotUnderstood state";
  if (r.state == WorkflowState::NotUnderstood) {
    bool has_note = std::any_of(r.history.begin(), r.history.end(), [](const WorkflowEvent& e) {
      return e.action == Action::MarkNotUnderstood && !e.note.empty();
    });
    if (!has_note) return "NotUnderstood without a note";
  }
  for (std::size_t i = 0; i < r.history.size(); ++i) {
    if (i > 0 && r.history[i].revision != r.history[i - 1].revision + 1)
      return "history revisions are not contiguous";
    if (action_requires_note(r.history[i].action) && r.history[i].note.empty())
      return "reject or not-understood event without note";
  }
  if (!r.history.empty() && r.history.back().revision + 1 != r.revision)
    return "record revision does not follow history";
  return std::nullopt;
}

/// Snapshot of a project: English sources plus their target records.
struct Lexicon {
  std::map<SynsetId, SourceSynset> sources;
  std::map<SynsetId, TranslationRecord> records;

  const SourceSynset* source(const SynsetId& id) const {
    auto it = sources.find(id);
    return it == sources.end() ? nullptr : &it->second;
  }
  const TranslationRecord* record(const SynsetId& id) const {
    auto it = records.find(id);
    return it == records.end() ? nullptr : &it->second;
  }

  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

enum class ErrorCode {
  MalformedLine,
  FatalFormat,
  NoInputFiles,
  DuplicateRecord,
  IllegalTransition,
  MissingNote,
  ValidationBlocked,
  DutySeparationViolation,
  StaleRevision,
  EmptyPhrases,
  InvalidEdits,
  AlreadyClaimed,
  WrongQueue,
  ClaimedByOther,
  CyclicHierarchy,
  CorruptFile,
  VersionMismatch,
  NotFound,
  Unauthorized,
  BadRequest,
  Io,
};

inline std::string_view error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::MalformedLine: return "malformed_line";
    case ErrorCode::FatalFormat: return "fatal_format";
    case ErrorCode::NoInputFiles: return "no_input_files";
    case ErrorCode::DuplicateRecord: return "duplicate_record";
    case ErrorCode::IllegalTransition: return "illegal_transition";
    case ErrorCode::MissingNote: return "missing_note";
    case ErrorCode::ValidationBlocked: return "validation_blocked";
    case ErrorCode::DutySeparationViolation: return "duty_separation_violation";
    case ErrorCode::StaleRevision: return "stale_revision";
    case ErrorCode::EmptyPhrases: return "empty_phrases";
    case ErrorCode::InvalidEdits: return "invalid_edits";
    case ErrorCode::AlreadyClaimed: return "already_claimed";
    case ErrorCode::WrongQueue: return "wrong_queue";
    case ErrorCode::ClaimedByOther: return "claimed_by_other";
    case ErrorCode::CyclicHierarchy: return "cyclic_hierarchy";
    case ErrorCode::CorruptFile: return "corrupt_file";
    case ErrorCode::VersionMismatch: return "version_mismatch";
    case ErrorCode::NotFound: return "not_found";
    case ErrorCode::Unauthorized: return "unauthorized";
    case ErrorCode::BadRequest: return "bad_request";
    case ErrorCode::Io: return "io";
  }
  return "?";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::vector<Finding> findings = {})
      : std::runtime_error(message), code_(code), findings_(std::move(findings)) {}

  ErrorCode code() const { return code_; }
  const std::vector<Finding>& findings() const { return findings_; }

 private:
  ErrorCode code_;
  std::vector<Finding> findings_;
};

/// Raised by project-file loading; carries the byte offset of the damage.
class CorruptFileError : public Error {
 public:
  CorruptFileError(std::size_t byte_offset, const std::string& reason)
      : Error(ErrorCode::CorruptFile,
              "corrupt project file at byte " + std::to_string(byte_offset) + ": " + reason),
        byte_offset_(byte_offset) {}

  std::size_t byte_offset() const { return byte_offset_; }

 private:
  std::size_t byte_offset_;
};

}  // namespace lexibridge
