#pragma once

// JSON mappings for the domain types (nlohmann/json ADL hooks).

#include <string>

#include "json.hpp"
#include "lexibridge/core.hpp"
#include "lexibridge/stats.hpp"
#include "lexibridge/workflow.hpp"

namespace lexibridge {

using json = nlohmann::json;

namespace detail {

template <typename T, typename Parse>
T parse_enum(const json& j, Parse parse, const char* what) {
  auto v = parse(j.get<std::string>());
  if (!v) throw Error(ErrorCode::BadRequest, std::string("unknown ") + what + ": " + j.get<std::string>());
  return *v;
}

}  // namespace detail

inline void to_json(json& j, const SynsetId& id) { j = id.str(); }
inline void from_json(const json& j, SynsetId& id) {
  auto parsed = SynsetId::parse(j.get<std::string>());
  if (!parsed) throw Error(ErrorCode::BadRequest, "bad synset id: " + j.get<std::string>());
  id = *parsed;
}

inline void to_json(json& j, Pos p) { j = std::string(1, pos_letter(p)); }
inline void from_json(const json& j, Pos& p) { p = detail::parse_enum<Pos>(j, parse_pos, "pos"); }
inline void to_json(json& j, WorkflowState s) { j = state_name(s); }
inline void from_json(const json& j, WorkflowState& s) { s = detail::parse_enum<WorkflowState>(j, parse_state, "state"); }
inline void to_json(json& j, Role r) { j = role_name(r); }
inline void from_json(const json& j, Role& r) { r = detail::parse_enum<Role>(j, parse_role, "role"); }
inline void to_json(json& j, Action a) { j = action_name(a); }
inline void from_json(const json& j, Action& a) { a = detail::parse_enum<Action>(j, parse_action, "action"); }
inline void to_json(json& j, Severity s) { j = severity_name(s); }
inline void from_json(const json& j, Severity& s) {
  auto v = j.get<std::string>();
  if (v == "error")
    s = Severity::Error;
  else if (v == "warning")
    s = Severity::Warning;
  else
    throw Error(ErrorCode::BadRequest, "unknown severity: " + v);
}

inline void to_json(json& j, const SourceSynset& s) {
  j = json{{"id", s.id},           {"lemmas", s.lemmas},       {"gloss", s.gloss},
           {"examples", s.examples}, {"hypernyms", s.hypernyms}, {"lex_file", s.lex_file}};
}
inline void from_json(const json& j, SourceSynset& s) {
  j.at("id").get_to(s.id);
  j.at("lemmas").get_to(s.lemmas);
  j.at("gloss").get_to(s.gloss);
  s.examples = j.value("examples", std::vector<std::string>{});
  s.hypernyms = j.value("hypernyms", std::vector<SynsetId>{});
  s.lex_file = j.value("lex_file", 0);
}

inline void to_json(json& j, const Synonym& s) {
  j = json{{"lemma", s.lemma}, {"rank", s.rank}, {"examples", s.examples}};
}
inline void from_json(const json& j, Synonym& s) {
  j.at("lemma").get_to(s.lemma);
  j.at("rank").get_to(s.rank);
  s.examples = j.value("examples", std::vector<std::string>{});
}

inline void to_json(json& j, const Finding& f) {
  j = json{{"rule_id", f.rule_id}, {"severity", f.severity}, {"locus", f.locus.str()}, {"message", f.message}};
}
inline void from_json(const json& j, Finding& f) {
  j.at("rule_id").get_to(f.rule_id);
  j.at("severity").get_to(f.severity);
  j.at("message").get_to(f.message);
  auto locus = j.at("locus").get<std::string>();
  auto hash = locus.find('#');
  auto id = SynsetId::parse(locus.substr(0, hash));
  if (!id) throw Error(ErrorCode::BadRequest, "bad locus: " + locus);
  f.locus.record = *id;
  f.locus.synonym_index.reset();
  if (hash != std::string::npos) f.locus.synonym_index = std::stoul(locus.substr(hash + 1));
}

inline void to_json(json& j, const WorkflowEvent& e) {
  j = json{{"actor", e.actor},         {"role", e.role},         {"action", e.action},
           {"note", e.note},           {"timestamp", e.timestamp}, {"revision", e.revision},
           {"warnings", e.warnings}};
}
inline void from_json(const json& j, WorkflowEvent& e) {
  j.at("actor").get_to(e.actor);
  j.at("role").get_to(e.role);
  j.at("action").get_to(e.action);
  e.note = j.value("note", std::string{});
  e.timestamp = j.value("timestamp", std::string{});
  j.at("revision").get_to(e.revision);
  e.warnings = j.value("warnings", std::vector<Finding>{});
}

inline void to_json(json& j, const TranslationRecord& r) {
  j = json{{"id", r.source},
           {"state", r.state},
           {"is_gap", r.is_gap},
           {"phrases", r.phrases},
           {"synonyms", r.synonyms},
           {"gloss", r.gloss},
           {"not_understood", r.not_understood},
           {"revision", r.revision},
           {"history", r.history}};
}
inline void from_json(const json& j, TranslationRecord& r) {
  j.at("id").get_to(r.source);
  j.at("state").get_to(r.state);
  r.is_gap = j.value("is_gap", false);
  r.phrases = j.value("phrases", std::vector<std::string>{});
  r.synonyms = j.value("synonyms", std::vector<Synonym>{});
  r.gloss = j.value("gloss", std::string{});
  r.not_understood = j.value("not_understood", false);
  r.revision = j.value("revision", std::int64_t{0});
  r.history = j.value("history", std::vector<WorkflowEvent>{});
}

namespace workflow {

inline void to_json(json& j, const RecordEdits& e) {
  j = json::object();
  if (e.is_gap) j["is_gap"] = *e.is_gap;
  if (e.phrases) j["phrases"] = *e.phrases;
  if (e.synonyms) j["synonyms"] = *e.synonyms;
  if (e.gloss) j["gloss"] = *e.gloss;
}
inline void from_json(const json& j, RecordEdits& e) {
  if (!j.is_object()) throw Error(ErrorCode::BadRequest, "edits must be an object");
  if (j.contains("is_gap")) e.is_gap = j["is_gap"].get<bool>();
  if (j.contains("phrases")) e.phrases = j["phrases"].get<std::vector<std::string>>();
  if (j.contains("synonyms")) e.synonyms = j["synonyms"].get<std::vector<Synonym>>();
  if (j.contains("gloss")) e.gloss = j["gloss"].get<std::string>();
}

inline void to_json(json& j, const Claim& c) { j = json{{"actor", c.actor}, {"role", c.role}}; }
inline void from_json(const json& j, Claim& c) {
  j.at("actor").get_to(c.actor);
  j.at("role").get_to(c.role);
}

/// The redacted form omits the `source` key entirely.
inline void to_json(json& j, const RecordView& v) {
  j = json(v.record);
  j["redacted"] = v.redacted;
  if (v.source) j["source"] = *v.source;
}

}  // namespace workflow

namespace stats {

inline void to_json(json& j, const InventoryRow& r) { j = json{{"synsets", r.synsets}, {"synonyms", r.synonyms}}; }

inline void to_json(json& j, const InventoryReport& r) {
  j = json::object();
  for (auto g : kPosGroups) j[std::string(pos_group_name(g))] = r[g];
  j["total"] = r.total;
}

inline void to_json(json& j, const EnrichmentCounts& c) {
  j = json{{"synonyms_added", c.synonyms_added},   {"synonyms_excluded", c.synonyms_excluded},
           {"glosses_added", c.glosses_added},     {"examples_added", c.examples_added},
           {"gaps_identified", c.gaps_identified}, {"phrases_added", c.phrases_added}};
}

inline void to_json(json& j, const EnrichmentDiff& d) {
  j = json::object();
  for (auto g : kPosGroups) j[std::string(pos_group_name(g))] = d[g];
  j["total"] = d.total;
  j["warnings"] = d.warnings;
}

inline void to_json(json& j, const LoopMetrics& m) {
  auto hist = [](const std::map<std::int64_t, std::int64_t>& h) {
    json o = json::object();
    for (const auto& [k, v] : h) o[std::to_string(k)] = v;
    return o;
  };
  j = json{{"corrector_histogram", hist(m.corrector_histogram)},
           {"expert_histogram", hist(m.expert_histogram)},
           {"corrector_rejections", m.corrector_rejections},
           {"expert_rejections", m.expert_rejections}};
}

}  // namespace stats

}  // namespace lexibridge
