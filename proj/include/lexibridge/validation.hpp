#pragma once

// Rule set for translated records: completeness and correctness checks,
// lexical-gap consistency, and the two polysemy detectors.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/text.hpp"
#include "lexibridge/transitions.hpp"

namespace lexibridge::validation {

struct Rule {
  std::string_view id;
  Severity severity;
  std::string_view name;
  std::string_view description;
};

inline constexpr std::array<Rule, 13> kRules = {{
    {"E01", Severity::Error, "gap-with-synonyms", "lexical gap carries synonyms"},
    {"E02", Severity::Error, "gap-without-phrase", "lexical gap has no substitute phrase"},
    {"E03", Severity::Error, "empty-gloss", "translated synset has no gloss"},
    {"E04", Severity::Error, "no-synonyms", "translated synset has no synonyms"},
    {"E05", Severity::Error, "synonym-without-example", "every synonym needs at least one example"},
    {"E06", Severity::Error, "duplicate-lemma", "two synonyms share a normalized lemma"},
    {"E07", Severity::Error, "rank-gap", "synonym ranks are not 1..k"},
    {"W01", Severity::Warning, "latin-script-in-target", "gloss or lemma contains Latin letters"},
    {"W02", Severity::Warning, "example-missing-lemma", "example does not contain its synonym"},
    {"W03", Severity::Warning, "gloss-too-short", "gloss has fewer than 3 words"},
    {"W04", Severity::Warning, "near-duplicate-lemma", "lemmas differ only in diacritics or hamza"},
    {"W10", Severity::Warning, "compound-subsumption", "synonym is a fragment of a multiword synonym"},
    {"W11", Severity::Warning, "specialization-polysemy", "lemma repeated on a hypernym or hyponym"},
}};

inline const Rule& rule(std::string_view id) {
  for (const auto& r : kRules)
    if (r.id == id) return r;
  throw std::out_of_range("unregistered rule " + std::string(id));
}

inline Finding make_finding(std::string_view rule_id, const SynsetId& record,
                            std::optional<std::size_t> synonym_index, std::string message) {
  const auto& r = rule(rule_id);
  return Finding{std::string(r.id), r.severity, Locus{record, synonym_index}, std::move(message)};
}

/// Applies the per-record rules (E01-E07, W01-W04). Never throws on content.
inline std::vector<Finding> check_record(const TranslationRecord& record) {
  std::vector<Finding> out;
  const auto& id = record.source;
  const auto& syns = record.synonyms;

  if (record.is_gap && !syns.empty())
    out.push_back(make_finding("E01", id, {}, "lexical gap carries " + std::to_string(syns.size()) + " synonym(s)"));
  if (record.is_gap && record.phrases.empty())
    out.push_back(make_finding("E02", id, {}, "lexical gap has no substitute phrase"));
  if (!record.is_gap && record.gloss.empty()) out.push_back(make_finding("E03", id, {}, "gloss is empty"));
  if (!record.is_gap && syns.empty()) out.push_back(make_finding("E04", id, {}, "no synonyms"));

  std::vector<std::string> normalized;
  for (const auto& s : syns) normalized.push_back(normalize_lemma(s.lemma));

  for (std::size_t i = 0; i < syns.size(); ++i) {
    if (syns[i].examples.empty())
      out.push_back(make_finding("E05", id, i, "synonym '" + normalized[i] + "' has no example"));
    for (std::size_t j = 0; j < i; ++j) {
      if (normalized[i] == normalized[j]) {
        out.push_back(make_finding("E06", id, i,
                                   "synonym '" + normalized[i] + "' duplicates synonym #" + std::to_string(j)));
        break;
      }
    }
  }

  std::vector<int> ranks;
  for (const auto& s : syns) ranks.push_back(s.rank);
  std::sort(ranks.begin(), ranks.end());
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (ranks[i] != static_cast<int>(i) + 1) {
      out.push_back(make_finding("E07", id, {}, "ranks are not a contiguous 1.." + std::to_string(ranks.size())));
      break;
    }
  }

  if (text::has_latin_letter(record.gloss)) out.push_back(make_finding("W01", id, {}, "gloss contains Latin letters"));
  for (std::size_t i = 0; i < syns.size(); ++i) {
    if (text::has_latin_letter(normalized[i]))
      out.push_back(make_finding("W01", id, i, "lemma '" + normalized[i] + "' contains Latin letters"));
    for (std::size_t e = 0; e < syns[i].examples.size(); ++e)
      if (!normalized[i].empty() && syns[i].examples[e].find(normalized[i]) == std::string::npos)
        out.push_back(make_finding("W02", id, i,
                                   "example " + std::to_string(e + 1) + " does not contain '" + normalized[i] + "'"));
  }

  if (!record.gloss.empty()) {
    auto words = text::split_words(record.gloss).size();
    if (words < 3) out.push_back(make_finding("W03", id, {}, "gloss has " + std::to_string(words) + " word(s)"));
  }

  for (std::size_t i = 0; i < syns.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (normalized[i] != normalized[j] && text::fold_arabic(normalized[i]) == text::fold_arabic(normalized[j])) {
        out.push_back(make_finding("W04", id, i,
                                   "'" + normalized[i] + "' differs from '" + normalized[j] +
                                       "' only in diacritics or hamza"));
        break;
      }
    }
  }

  sort_findings(out);
  return out;
}

inline std::vector<Finding> check_record(const TranslationRecord& record, const SourceSynset& /*source*/) {
  return check_record(record);
}

// ---------------------------------------------------------------------------
// Compound-noun subsumption
// ---------------------------------------------------------------------------

/// True iff `part` is a strictly shorter contiguous run inside `whole`.
inline bool is_strict_contiguous_subsequence(const std::vector<std::string>& part,
                                             const std::vector<std::string>& whole) {
  if (part.empty() || part.size() >= whole.size()) return false;
  return std::search(whole.begin(), whole.end(), part.begin(), part.end()) != whole.end();
}

/// W10 for every synonym whose tokens appear contiguously inside a longer
/// synonym of the same record.
inline std::vector<Finding> detect_compound_subsumption(const SynsetId& record, const std::vector<Synonym>& synonyms) {
  std::vector<std::vector<std::string>> toks;
  for (const auto& s : synonyms) toks.push_back(text::split_words(s.lemma));
  std::vector<Finding> out;
  for (std::size_t a = 0; a < synonyms.size(); ++a) {
    std::optional<std::string> container;
    for (std::size_t b = 0; b < synonyms.size(); ++b) {
      if (a == b || !is_strict_contiguous_subsequence(toks[a], toks[b])) continue;
      auto lemma = normalize_lemma(synonyms[b].lemma);
      if (!container || lemma < *container) container = lemma;
    }
    if (container)
      out.push_back(make_finding("W10", record, a,
                                 "'" + normalize_lemma(synonyms[a].lemma) + "' is part of '" + *container + "'"));
  }
  sort_findings(out);
  return out;
}

// ---------------------------------------------------------------------------
// Specialization polysemy over the hypernym hierarchy
// ---------------------------------------------------------------------------

struct SpecializationResult {
  std::vector<Finding> findings;
  std::vector<SynsetId> cycles;  // traversal roots that hit a hypernym cycle
};

/// Caches ancestor sets and a lemma index over one lexicon snapshot.
class HierarchyIndex {
 public:
  explicit HierarchyIndex(const Lexicon& lexicon) : lexicon_(lexicon) {
    for (const auto& [id, rec] : lexicon.records) {
      if (rec.is_gap) continue;
      for (const auto& s : rec.synonyms) by_lemma_[normalize_lemma(s.lemma)].insert(id);
    }
  }

  struct Ancestry {
    std::set<SynsetId> ancestors;
    bool cyclic = false;
  };

  /// Transitive hypernyms of `id`. Dangling references end the walk; a
  /// revisit of a node on the current path marks the result cyclic.
  const Ancestry& ancestry(const SynsetId& id) {
    if (auto it = cache_.find(id); it != cache_.end()) return it->second;
    Ancestry result;
    std::set<SynsetId> on_path;
    std::set<SynsetId> done;
    walk(id, result, on_path, done);
    return cache_.emplace(id, std::move(result)).first->second;
  }

  /// Ancestor-or-descendant test; nullopt when either traversal is cyclic
  /// and the other does not settle the question.
  std::optional<bool> related(const SynsetId& a, const SynsetId& b) {
    const auto& up_a = ancestry(a);
    if (!up_a.cyclic && up_a.ancestors.count(b)) return true;
    const auto& up_b = ancestry(b);
    if (!up_b.cyclic && up_b.ancestors.count(a)) return true;
    if (up_a.cyclic || up_b.cyclic) return std::nullopt;
    return false;
  }

  SpecializationResult detect(const TranslationRecord& record) {
    SpecializationResult out;
    if (record.is_gap) return out;
    std::set<SynsetId> cyclic_roots;
    for (std::size_t i = 0; i < record.synonyms.size(); ++i) {
      auto lemma = normalize_lemma(record.synonyms[i].lemma);
      auto it = by_lemma_.find(lemma);
      if (it == by_lemma_.end()) continue;
      std::vector<std::string> hits;
      for (const auto& other : it->second) {
        if (other == record.source) continue;
        auto rel = related(record.source, other);
        if (!rel) {
          for (const auto& root : {record.source, other})
            if (ancestry(root).cyclic) cyclic_roots.insert(root);
          continue;
        }
        if (*rel) hits.push_back(other.str());
      }
      if (!hits.empty()) {
        std::string msg = "'" + lemma + "' also appears in related synset(s)";
        for (const auto& h : hits) msg += " " + h;
        out.findings.push_back(make_finding("W11", record.source, i, std::move(msg)));
      }
    }
    out.cycles.assign(cyclic_roots.begin(), cyclic_roots.end());
    sort_findings(out.findings);
    return out;
  }

 private:
  void walk(const SynsetId& node, Ancestry& result, std::set<SynsetId>& on_path, std::set<SynsetId>& done) {
    on_path.insert(node);
    if (const auto* src = lexicon_.source(node)) {
      for (const auto& h : src->hypernyms) {
        if (on_path.count(h)) {
          result.cyclic = true;
          continue;
        }
        if (done.count(h)) continue;
        result.ancestors.insert(h);
        walk(h, result, on_path, done);
      }
    }
    on_path.erase(node);
    done.insert(node);
  }

  const Lexicon& lexicon_;
  std::unordered_map<std::string, std::set<SynsetId>> by_lemma_;
  std::map<SynsetId, Ancestry> cache_;
};

/// W11 for each lemma of `record` that also appears in a record whose source
/// is an ancestor or descendant of `record`'s source. `record` is taken as
/// given; the lexicon's copy of it, if any, is ignored.
inline SpecializationResult detect_specialization_polysemy(const TranslationRecord& record, const Lexicon& lexicon) {
  HierarchyIndex index(lexicon);
  return index.detect(record);
}

// ---------------------------------------------------------------------------
// Aggregation and transition gating
// ---------------------------------------------------------------------------

/// Every finding for one record: per-record rules plus both detectors.
inline std::vector<Finding> all_findings(const TranslationRecord& record, HierarchyIndex& index) {
  auto out = check_record(record);
  auto compound = detect_compound_subsumption(record.source, record.synonyms);
  out.insert(out.end(), compound.begin(), compound.end());
  auto spec = index.detect(record);
  out.insert(out.end(), spec.findings.begin(), spec.findings.end());
  sort_findings(out);
  return out;
}

inline std::vector<Finding> all_findings(const TranslationRecord& record, const Lexicon& lexicon) {
  HierarchyIndex index(lexicon);
  return all_findings(record, index);
}

struct TransitionCheck {
  bool ok = true;
  std::vector<Finding> blocking;  // Error findings
  std::vector<Finding> warnings;
};

/// Gate for a state change. Entering PendingCorrection, PendingExpert or
/// Accepted is blocked by any Error finding; warnings ride along.
/// Throws IllegalTransition if `target` is not a successor of the record's state.
inline TransitionCheck validate_for_transition(const TranslationRecord& record, const SourceSynset* /*source*/,
                                               WorkflowState target, const Lexicon& lexicon) {
  if (!is_legal_successor(record.state, target))
    throw Error(ErrorCode::IllegalTransition, std::string("no transition from ") +
                                                  std::string(state_name(record.state)) + " to " +
                                                  std::string(state_name(target)));
  TransitionCheck check;
  if (!requires_content(target)) return check;
  for (auto& f : all_findings(record, lexicon)) {
    if (f.severity == Severity::Error)
      check.blocking.push_back(std::move(f));
    else
      check.warnings.push_back(std::move(f));
  }
  check.ok = check.blocking.empty();
  return check;
}

// ---------------------------------------------------------------------------
// Report format: severity<TAB>rule_id<TAB>pos:offset[#index]<TAB>message
// ---------------------------------------------------------------------------

inline std::string report_line(const Finding& f) {
  std::string msg = f.message;
  std::replace_if(msg.begin(), msg.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
  return std::string(severity_name(f.severity)) + "\t" + f.rule_id + "\t" + f.locus.str() + "\t" + msg + "\n";
}

inline std::string report(const std::vector<Finding>& findings) {
  std::string out;
  for (const auto& f : findings) out += report_line(f);
  return out;
}

}  // namespace lexibridge::validation
