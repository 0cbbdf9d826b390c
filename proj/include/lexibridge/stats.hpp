#pragma once

// Inventory and enrichment statistics, per reporting part of speech.

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "lexibridge/core.hpp"

namespace lexibridge::stats {

enum class CountingPolicy {
  SubmittedOrLater,  // PendingCorrection and every later state
  AcceptedOnly,
  AnyWithContent,
};

inline bool counts(const TranslationRecord& r, CountingPolicy policy) {
  switch (policy) {
    case CountingPolicy::SubmittedOrLater:
      return r.state >= WorkflowState::PendingCorrection;
    case CountingPolicy::AcceptedOnly:
      return r.state == WorkflowState::Accepted;
    case CountingPolicy::AnyWithContent:
      return !r.synonyms.empty();
  }
  return false;
}

inline std::optional<CountingPolicy> parse_policy(std::string_view s) {
  if (s == "submitted") return CountingPolicy::SubmittedOrLater;
  if (s == "accepted") return CountingPolicy::AcceptedOnly;
  if (s == "any") return CountingPolicy::AnyWithContent;
  return std::nullopt;
}

inline std::size_t group_index(PosGroup g) { return static_cast<std::size_t>(g); }

struct InventoryRow {
  std::int64_t synsets = 0;
  std::int64_t synonyms = 0;

  friend bool operator==(const InventoryRow&, const InventoryRow&) = default;
};

struct InventoryReport {
  std::array<InventoryRow, 4> by_group{};  // indexed by PosGroup
  InventoryRow total;

  InventoryRow& operator[](PosGroup g) { return by_group[group_index(g)]; }
  const InventoryRow& operator[](PosGroup g) const { return by_group[group_index(g)]; }

  /// Recomputes the totals row from the four part-of-speech rows.
  void compute_totals() {
    total = {};
    for (const auto& row : by_group) {
      total.synsets += row.synsets;
      total.synonyms += row.synonyms;
    }
  }

  friend bool operator==(const InventoryReport&, const InventoryReport&) = default;
};

/// Counts qualifying non-gap records and their synonym entries. Satellites
/// count as adjectives.
inline InventoryReport inventory(std::span<const TranslationRecord> records,
                                 CountingPolicy policy = CountingPolicy::SubmittedOrLater) {
  InventoryReport report;
  for (const auto& r : records) {
    if (r.is_gap || !counts(r, policy)) continue;
    auto& row = report[pos_group(r.source.pos())];
    ++row.synsets;
    row.synonyms += static_cast<std::int64_t>(r.synonyms.size());
  }
  report.compute_totals();
  return report;
}

struct EnrichmentCounts {
  std::int64_t synonyms_added = 0;
  std::int64_t synonyms_excluded = 0;
  std::int64_t glosses_added = 0;
  std::int64_t examples_added = 0;
  std::int64_t gaps_identified = 0;
  std::int64_t phrases_added = 0;

  EnrichmentCounts& operator+=(const EnrichmentCounts& o) {
    synonyms_added += o.synonyms_added;
    synonyms_excluded += o.synonyms_excluded;
    glosses_added += o.glosses_added;
    examples_added += o.examples_added;
    gaps_identified += o.gaps_identified;
    phrases_added += o.phrases_added;
    return *this;
  }

  friend bool operator==(const EnrichmentCounts&, const EnrichmentCounts&) = default;
};

struct EnrichmentDiff {
  std::array<EnrichmentCounts, 4> by_group{};
  EnrichmentCounts total;
  std::vector<std::string> warnings;

  EnrichmentCounts& operator[](PosGroup g) { return by_group[group_index(g)]; }
  const EnrichmentCounts& operator[](PosGroup g) const { return by_group[group_index(g)]; }

  void compute_totals() {
    total = {};
    for (const auto& c : by_group) total += c;
  }

  bool is_zero() const {
    EnrichmentCounts zero;
    for (const auto& c : by_group)
      if (!(c == zero)) return false;
    return total == zero;
  }
};

namespace detail {

inline std::set<std::string> lemma_set(const TranslationRecord& r) {
  std::set<std::string> out;
  if (r.is_gap) return out;
  for (const auto& s : r.synonyms) out.insert(normalize_lemma(s.lemma));
  return out;
}

inline std::set<std::string> phrase_set(const TranslationRecord& r) {
  std::set<std::string> out;
  for (const auto& p : r.phrases) out.insert(text::collapse_whitespace(p));
  return out;
}

inline std::int64_t example_count(const TranslationRecord& r) {
  std::int64_t n = 0;
  for (const auto& s : r.synonyms) n += static_cast<std::int64_t>(s.examples.size());
  return n;
}

inline std::int64_t count_missing(const std::set<std::string>& from, const std::set<std::string>& in) {
  std::int64_t n = 0;
  for (const auto& x : from)
    if (!in.count(x)) ++n;
  return n;
}

}  // namespace detail

/// Per-record enrichment between two snapshots, matched by (pos, offset).
/// Unmatched current records count all of their content as added; unmatched
/// baseline records are ignored with a warning.
inline EnrichmentDiff enrichment_diff(std::span<const TranslationRecord> baseline,
                                      std::span<const TranslationRecord> current) {
  EnrichmentDiff diff;
  std::map<SynsetId, const TranslationRecord*> base;
  for (const auto& r : baseline) base.emplace(r.source, &r);
  std::set<SynsetId> matched;

  for (const auto& c : current) {
    auto& row = diff[pos_group(c.source.pos())];
    auto it = base.find(c.source);
    const auto cur_lemmas = detail::lemma_set(c);
    const auto cur_phrases = detail::phrase_set(c);
    if (it == base.end()) {
      row.synonyms_added += static_cast<std::int64_t>(cur_lemmas.size());
      row.glosses_added += c.gloss.empty() ? 0 : 1;
      row.examples_added += detail::example_count(c);
      row.gaps_identified += c.is_gap ? 1 : 0;
      row.phrases_added += static_cast<std::int64_t>(cur_phrases.size());
      continue;
    }
    const auto& b = *it->second;
    matched.insert(c.source);
    const auto base_lemmas = detail::lemma_set(b);
    row.synonyms_added += detail::count_missing(cur_lemmas, base_lemmas);
    row.synonyms_excluded += detail::count_missing(base_lemmas, cur_lemmas);
    row.glosses_added += (b.gloss.empty() && !c.gloss.empty()) ? 1 : 0;
    row.examples_added += std::max<std::int64_t>(0, detail::example_count(c) - detail::example_count(b));
    row.gaps_identified += (c.is_gap && !b.is_gap) ? 1 : 0;
    row.phrases_added += detail::count_missing(cur_phrases, detail::phrase_set(b));
  }
  for (const auto& [id, rec] : base)
    if (!matched.count(id)) diff.warnings.push_back("baseline record " + id.str() + " has no current counterpart");
  diff.compute_totals();
  return diff;
}

// ---------------------------------------------------------------------------
// Rejection loops
// ---------------------------------------------------------------------------

struct LoopMetrics {
  // rejection count -> number of records with that count
  std::map<std::int64_t, std::int64_t> corrector_histogram;
  std::map<std::int64_t, std::int64_t> expert_histogram;
  std::int64_t corrector_rejections = 0;
  std::int64_t expert_rejections = 0;
};

inline LoopMetrics loop_metrics(std::span<const TranslationRecord> records) {
  LoopMetrics m;
  for (const auto& r : records) {
    std::int64_t by_corrector = 0, by_expert = 0;
    for (const auto& e : r.history) {
      if (e.action != Action::Reject) continue;
      if (e.role == Role::Corrector) ++by_corrector;
      if (e.role == Role::Expert) ++by_expert;
    }
    ++m.corrector_histogram[by_corrector];
    ++m.expert_histogram[by_expert];
    m.corrector_rejections += by_corrector;
    m.expert_rejections += by_expert;
  }
  return m;
}

// ---------------------------------------------------------------------------
// TSV rendering: rows are metrics, columns the four groups plus total.
// ---------------------------------------------------------------------------

inline std::string tsv_header() { return "metric\tnouns\tverbs\tadjectives\tadverbs\ttotal\n"; }

template <typename Row, typename Get>
std::string tsv_row(const std::string& name, const std::array<Row, 4>& rows, const Row& total, Get get) {
  std::string out = name;
  for (const auto& r : rows) out += "\t" + std::to_string(get(r));
  out += "\t" + std::to_string(get(total)) + "\n";
  return out;
}

inline std::string to_tsv(const InventoryReport& r) {
  return tsv_header() +
         tsv_row("synsets", r.by_group, r.total, [](const InventoryRow& x) { return x.synsets; }) +
         tsv_row("synonyms", r.by_group, r.total, [](const InventoryRow& x) { return x.synonyms; });
}

inline std::string to_tsv(const EnrichmentDiff& d) {
  using C = EnrichmentCounts;
  return tsv_header() +
         tsv_row("synonyms_added", d.by_group, d.total, [](const C& c) { return c.synonyms_added; }) +
         tsv_row("synonyms_excluded", d.by_group, d.total, [](const C& c) { return c.synonyms_excluded; }) +
         tsv_row("glosses_added", d.by_group, d.total, [](const C& c) { return c.glosses_added; }) +
         tsv_row("examples_added", d.by_group, d.total, [](const C& c) { return c.examples_added; }) +
         tsv_row("gaps_identified", d.by_group, d.total, [](const C& c) { return c.gaps_identified; }) +
         tsv_row("phrases_added", d.by_group, d.total, [](const C& c) { return c.phrases_added; });
}

inline std::string to_tsv(const LoopMetrics& m) {
  std::set<std::int64_t> keys;
  for (const auto& [k, v] : m.corrector_histogram) keys.insert(k);
  for (const auto& [k, v] : m.expert_histogram) keys.insert(k);
  std::string out = "rejections\tcorrector_records\texpert_records\n";
  for (auto k : keys) {
    auto get = [k](const auto& h) {
      auto it = h.find(k);
      return it == h.end() ? std::int64_t{0} : it->second;
    };
    out += std::to_string(k) + "\t" + std::to_string(get(m.corrector_histogram)) + "\t" +
           std::to_string(get(m.expert_histogram)) + "\n";
  }
  return out;
}

}  // namespace lexibridge::stats
