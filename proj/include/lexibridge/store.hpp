#pragma once

// Event-sourced project store. Every mutation appends one log entry; the
// snapshot is a pure function of the log.
//
// Project file layout (UTF-8, one JSON object per line):
//
//   LEXIBRIDGE-PROJECT 1
//   {"kind":"source",...}           log entries, oldest first
//   ...
//   #SNAPSHOT                       optional
//   {"sources":[...],"records":[...],"claims":{...}}
//   #END <entry count>

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/serialization.hpp"
#include "lexibridge/workflow.hpp"
#include "lexibridge/wndb.hpp"

namespace lexibridge {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kFileMagic = "LEXIBRIDGE-PROJECT";

inline std::string utc_now() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

/// Record content after a transition; replay overwrites the record with it.
struct ContentDelta {
  WorkflowState state = WorkflowState::Untranslated;
  bool is_gap = false;
  std::vector<std::string> phrases;
  std::vector<Synonym> synonyms;
  std::string gloss;
  bool not_understood = false;

  static ContentDelta of(const TranslationRecord& r) {
    return {r.state, r.is_gap, r.phrases, r.synonyms, r.gloss, r.not_understood};
  }

  friend bool operator==(const ContentDelta&, const ContentDelta&) = default;
};

inline void to_json(json& j, const ContentDelta& d) {
  j = json{{"state", d.state},       {"is_gap", d.is_gap}, {"phrases", d.phrases},
           {"synonyms", d.synonyms}, {"gloss", d.gloss},   {"not_understood", d.not_understood}};
}
inline void from_json(const json& j, ContentDelta& d) {
  j.at("state").get_to(d.state);
  j.at("is_gap").get_to(d.is_gap);
  j.at("phrases").get_to(d.phrases);
  j.at("synonyms").get_to(d.synonyms);
  j.at("gloss").get_to(d.gloss);
  j.at("not_understood").get_to(d.not_understood);
}

enum class EntryKind { Source, Create, Transition, Claim, Release, ReleaseAll };

inline std::string_view entry_kind_name(EntryKind k) {
  switch (k) {
    case EntryKind::Source: return "source";
    case EntryKind::Create: return "create";
    case EntryKind::Transition: return "transition";
    case EntryKind::Claim: return "claim";
    case EntryKind::Release: return "release";
    case EntryKind::ReleaseAll: return "release_all";
  }
  return "?";
}

struct LogEntry {
  EntryKind kind = EntryKind::Source;
  SynsetId id;
  std::optional<SourceSynset> source;        // Source
  std::optional<TranslationRecord> record;   // Create
  std::optional<WorkflowEvent> event;        // Transition
  std::optional<ContentDelta> delta;         // Transition
  std::optional<workflow::Claim> claim;      // Claim

  friend bool operator==(const LogEntry&, const LogEntry&) = default;
};

inline void to_json(json& j, const LogEntry& e) {
  j = json{{"kind", entry_kind_name(e.kind)}};
  if (e.kind != EntryKind::ReleaseAll) j["id"] = e.id;
  if (e.source) j["source"] = *e.source;
  if (e.record) j["record"] = *e.record;
  if (e.event) j["event"] = *e.event;
  if (e.delta) j["delta"] = *e.delta;
  if (e.claim) j["claim"] = *e.claim;
}

inline void from_json(const json& j, LogEntry& e) {
  auto kind = j.at("kind").get<std::string>();
  static const std::array<EntryKind, 6> kinds = {EntryKind::Source, EntryKind::Create, EntryKind::Transition,
                                                 EntryKind::Claim, EntryKind::Release, EntryKind::ReleaseAll};
  bool known = false;
  for (auto k : kinds)
    if (entry_kind_name(k) == kind) {
      e.kind = k;
      known = true;
    }
  if (!known) throw Error(ErrorCode::BadRequest, "unknown log entry kind " + kind);
  if (e.kind != EntryKind::ReleaseAll) j.at("id").get_to(e.id);
  if (j.contains("source")) e.source = j["source"].get<SourceSynset>();
  if (j.contains("record")) e.record = j["record"].get<TranslationRecord>();
  if (j.contains("event")) e.event = j["event"].get<WorkflowEvent>();
  if (j.contains("delta")) e.delta = j["delta"].get<ContentDelta>();
  if (j.contains("claim")) e.claim = j["claim"].get<workflow::Claim>();
}

struct ImportSummary {
  std::size_t sources_added = 0;
  std::size_t records_created = 0;
  std::size_t records_replaced = 0;
  std::vector<std::string> skipped;  // ids left untouched, with reason
};

class ProjectStore {
 public:
  const Lexicon& lexicon() const { return lexicon_; }
  const workflow::ClaimBoard& claims() const { return claims_; }
  const std::vector<LogEntry>& log() const { return log_; }

  const TranslationRecord& record(const SynsetId& id) const {
    const auto* r = lexicon_.record(id);
    if (!r) throw Error(ErrorCode::NotFound, "no record " + id.str());
    return *r;
  }

  std::vector<TranslationRecord> records() const {
    std::vector<TranslationRecord> out;
    out.reserve(lexicon_.records.size());
    for (const auto& [id, r] : lexicon_.records) out.push_back(r);
    return out;
  }

  /// Adds source synsets and an Untranslated record for each new one.
  ImportSummary add_sources(const std::map<SynsetId, SourceSynset>& synsets) {
    ImportSummary summary;
    for (const auto& [id, syn] : synsets) {
      const auto* existing = lexicon_.source(id);
      if (!existing || !(*existing == syn)) {
        append({EntryKind::Source, id, syn, {}, {}, {}, {}});
        ++summary.sources_added;
      }
      if (!lexicon_.record(id)) {
        append({EntryKind::Create, id, {}, new_record(syn), {}, {}, {}});
        ++summary.records_created;
      }
    }
    return summary;
  }

  /// Installs imported records. A record that already has workflow history
  /// is never overwritten.
  ImportSummary add_records(const std::vector<TranslationRecord>& records) {
    ImportSummary summary;
    for (const auto& rec : records) {
      const auto* existing = lexicon_.record(rec.source);
      if (existing && !existing->history.empty()) {
        summary.skipped.push_back(rec.source.str() + ": record already in review");
        continue;
      }
      append({EntryKind::Create, rec.source, {}, rec, {}, {}, {}});
      ++(existing ? summary.records_replaced : summary.records_created);
    }
    return summary;
  }

  /// Runs one workflow action. Claims held by another actor block it; a
  /// successful transition releases the claim.
  const TranslationRecord& transition(const SynsetId& id, const workflow::ActionRequest& req,
                                      const std::string& timestamp) {
    const auto& current = record(id);
    if (const auto* c = claims_.claim(id); c && c->actor != req.actor)
      throw Error(ErrorCode::ClaimedByOther, id.str() + " is claimed by " + c->actor);
    auto next = workflow::apply(current, req, lexicon_, timestamp);
    append({EntryKind::Transition, id, {}, {}, next.history.back(), ContentDelta::of(next), {}});
    return record(id);
  }

  const workflow::Claim& claim(const SynsetId& id, const std::string& actor, Role role) {
    const auto& rec = record(id);
    workflow::ClaimBoard probe = claims_;
    const auto& c = probe.assign(rec, actor, role);
    if (const auto* held = claims_.claim(id); held && *held == c) return *held;
    append({EntryKind::Claim, id, {}, {}, {}, {}, c});
    return *claims_.claim(id);
  }

  void release(const SynsetId& id) {
    if (claims_.claim(id)) append({EntryKind::Release, id, {}, {}, {}, {}, {}});
  }

  std::size_t release_all() {
    auto n = claims_.all().size();
    if (n) append({EntryKind::ReleaseAll, {}, {}, {}, {}, {}, {}});
    return n;
  }

  /// Rebuilds a store by replaying `log` from empty.
  static ProjectStore replay(const std::vector<LogEntry>& log) {
    ProjectStore s;
    for (const auto& e : log) s.append(e);
    return s;
  }

  // -------------------------------------------------------------------------
  // Persistence
  // -------------------------------------------------------------------------

  std::string serialize(bool with_snapshot = true) const {
    std::string out = std::string(kFileMagic) + " " + std::to_string(kSchemaVersion) + "\n";
    for (const auto& e : log_) out += json(e).dump() + "\n";
    if (with_snapshot) out += "#SNAPSHOT\n" + snapshot_json().dump() + "\n";
    out += "#END " + std::to_string(log_.size()) + "\n";
    return out;
  }

  /// Writes atomically via a sibling temporary file.
  void save(const std::filesystem::path& path, bool with_snapshot = true) const {
    auto tmp = path;
    tmp += ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      if (!out) throw Error(ErrorCode::Io, "cannot write " + tmp.string());
      out << serialize(with_snapshot);
      if (!out.flush()) throw Error(ErrorCode::Io, "write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw Error(ErrorCode::Io, "cannot replace " + path.string() + ": " + ec.message());
  }

  static ProjectStore deserialize(std::string_view contents) {
    std::size_t pos = 0;
    auto next_line = [&](std::size_t& start) -> std::optional<std::string_view> {
      start = pos;
      if (pos >= contents.size()) return std::nullopt;
      auto nl = contents.find('\n', pos);
      if (nl == std::string_view::npos) throw CorruptFileError(pos, "unterminated line");
      auto line = contents.substr(pos, nl - pos);
      pos = nl + 1;
      return line;
    };

    std::size_t at = 0;
    auto header = next_line(at);
    if (!header) throw CorruptFileError(0, "empty file");
    auto hv = text::split_words(*header);
    if (hv.size() != 2 || hv[0] != kFileMagic) throw CorruptFileError(0, "missing project header");
    if (hv[1] != std::to_string(kSchemaVersion))
      throw Error(ErrorCode::VersionMismatch, "unsupported project schema version " + hv[1]);

    std::vector<LogEntry> log;
    std::optional<json> snapshot;
    std::size_t snapshot_at = 0;
    bool ended = false;
    while (auto line = next_line(at)) {
      if (line->rfind("#END", 0) == 0) {
        auto n = text::trim(line->substr(4));
        if (n != std::to_string(log.size())) throw CorruptFileError(at, "entry count mismatch");
        ended = true;
        break;
      }
      if (*line == "#SNAPSHOT") {
        snapshot_at = pos;
        auto body = next_line(at);
        if (!body) throw CorruptFileError(at, "missing snapshot body");
        try {
          snapshot = json::parse(*body);
        } catch (const std::exception& e) {
          throw CorruptFileError(at, std::string("bad snapshot: ") + e.what());
        }
        continue;
      }
      try {
        log.push_back(json::parse(*line).get<LogEntry>());
      } catch (const std::exception& e) {
        throw CorruptFileError(at, std::string("bad log entry: ") + e.what());
      }
    }
    if (!ended) throw CorruptFileError(contents.size(), "missing end marker (truncated file)");
    if (pos != contents.size()) throw CorruptFileError(pos, "data after end marker");

    ProjectStore store;
    try {
      store = replay(log);
    } catch (const CorruptFileError&) {
      throw;
    } catch (const std::exception& e) {
      throw CorruptFileError(0, std::string("log does not replay: ") + e.what());
    }
    if (snapshot && *snapshot != store.snapshot_json())
      throw CorruptFileError(snapshot_at, "snapshot disagrees with event log");
    return store;
  }

  static ProjectStore load(const std::filesystem::path& path) { return deserialize(wndb::read_file(path)); }

  json snapshot_json() const {
    json sources = json::array();
    for (const auto& [id, s] : lexicon_.sources) sources.push_back(s);
    json records = json::array();
    for (const auto& [id, r] : lexicon_.records) records.push_back(r);
    json claims = json::object();
    for (const auto& [id, c] : claims_.all()) claims[id.str()] = c;
    return json{{"sources", sources}, {"records", records}, {"claims", claims}};
  }

  friend bool operator==(const ProjectStore& a, const ProjectStore& b) {
    return a.lexicon_ == b.lexicon_ && a.claims_ == b.claims_ && a.log_ == b.log_;
  }

 private:
  /// Applies an entry to the snapshot, then records it in the log.
  void append(const LogEntry& e) {
    switch (e.kind) {
      case EntryKind::Source:
        lexicon_.sources[e.id] = e.source.value();
        break;
      case EntryKind::Create:
        lexicon_.records[e.id] = e.record.value();
        break;
      case EntryKind::Transition: {
        auto it = lexicon_.records.find(e.id);
        if (it == lexicon_.records.end()) throw CorruptFileError(0, "transition on unknown record " + e.id.str());
        auto& r = it->second;
        const auto& ev = e.event.value();
        if (ev.revision != r.revision)
          throw CorruptFileError(0, "transition on " + e.id.str() + " out of revision order");
        const auto& d = e.delta.value();
        r.state = d.state;
        r.is_gap = d.is_gap;
        r.phrases = d.phrases;
        r.synonyms = d.synonyms;
        r.gloss = d.gloss;
        r.not_understood = d.not_understood;
        r.history.push_back(ev);
        r.revision = ev.revision + 1;
        claims_.release(e.id);
        break;
      }
      case EntryKind::Claim:
        claims_.restore(e.id, e.claim.value());
        break;
      case EntryKind::Release:
        claims_.release(e.id);
        break;
      case EntryKind::ReleaseAll:
        claims_.release_all();
        break;
    }
    log_.push_back(e);
  }

  Lexicon lexicon_;
  workflow::ClaimBoard claims_;
  std::vector<LogEntry> log_;
};

}  // namespace lexibridge
