#pragma once

// Shared helpers for the unit and acceptance suites: fixture paths, record
// builders, seeded random generators and brute-force oracles.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/store.hpp"
#include "lexibridge/wndb.hpp"
#include "lexibridge/workflow.hpp"

namespace lbtest {

using namespace lexibridge;
namespace fs = std::filesystem;

inline fs::path fixture(const std::string& rel) { return fs::path(LEXIBRIDGE_FIXTURES) / rel; }

inline std::string slurp(const fs::path& p) { return wndb::read_file(p); }

inline void spit(const fs::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out << body;
}

class TempDir {
 public:
  TempDir() {
    static std::mt19937_64 rng{std::random_device{}()};
    path_ = fs::temp_directory_path() / ("lexibridge-test-" + std::to_string(rng()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const fs::path& path() const { return path_; }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

inline SynsetId id(Pos pos, int offset) {
  std::ostringstream s;
  s.width(8);
  s.fill('0');
  s << offset;
  return SynsetId(pos, s.str());
}

inline SynsetId nid(int offset) { return id(Pos::Noun, offset); }

using SynSpec = std::vector<std::pair<std::string, std::vector<std::string>>>;

/// Non-gap record with ranks 1..k in the given order.
inline TranslationRecord content_record(const SynsetId& sid, const std::string& gloss, const SynSpec& syns,
                                        WorkflowState state = WorkflowState::Untranslated) {
  TranslationRecord r;
  r.source = sid;
  r.gloss = gloss;
  r.state = state;
  int rank = 0;
  for (const auto& [lemma, examples] : syns) r.synonyms.push_back(Synonym{lemma, ++rank, examples});
  return r;
}

inline TranslationRecord gap_record(const SynsetId& sid, std::vector<std::string> phrases,
                                    WorkflowState state = WorkflowState::Untranslated) {
  TranslationRecord r;
  r.source = sid;
  r.is_gap = true;
  r.phrases = std::move(phrases);
  r.state = state;
  return r;
}

inline SourceSynset source(const SynsetId& sid, std::vector<std::string> lemmas, std::vector<SynsetId> hypernyms = {},
                           std::string gloss = "") {
  SourceSynset s;
  s.id = sid;
  s.lemmas = std::move(lemmas);
  s.hypernyms = std::move(hypernyms);
  s.gloss = std::move(gloss);
  return s;
}

inline workflow::RecordEdits edits_from(const TranslationRecord& r) {
  workflow::RecordEdits e;
  e.is_gap = r.is_gap;
  e.gloss = r.gloss;
  if (r.is_gap)
    e.phrases = r.phrases;
  else
    e.synonyms = r.synonyms;
  return e;
}

inline workflow::ActionRequest request(Action action, std::string actor, Role role, std::string note = "",
                                       std::optional<workflow::RecordEdits> edits = {}) {
  workflow::ActionRequest req;
  req.action = action;
  req.actor = std::move(actor);
  req.role = role;
  req.note = std::move(note);
  req.edits = std::move(edits);
  return req;
}

// ---------------------------------------------------------------------------
// The bundled WNDB excerpt and an Arabic overlay for a handful of its synsets
// ---------------------------------------------------------------------------

namespace offsets {
// byte offsets in tests/fixtures/wndb/data.noun (and data.adv for the adverb)
inline const char* const kEntity = "00001728";
inline const char* const kObject = "00002116";
inline const char* const kDove = "00003517";
inline const char* const kTurtledove = "00003597";
inline const char* const kAustralianTurtledove = "00003689";
inline const char* const kCar = "00004826";
inline const char* const kExpressively = "00001728";
inline const char* const kShoppingCenter = "00006391";
inline const char* const kEloquent = "00001874";  // satellite of expressive (00001728)
}  // namespace offsets

inline const wndb::SourceLoad& fixture_source() {
  static const wndb::SourceLoad load = wndb::load_source(fixture("wndb"));
  return load;
}

inline Lexicon fixture_lexicon() {
  Lexicon lex;
  for (const auto& [sid, syn] : fixture_source().synsets) {
    lex.sources[sid] = syn;
    lex.records[sid] = new_record(syn);
  }
  return lex;
}

// ---------------------------------------------------------------------------
// Seeded generators
// ---------------------------------------------------------------------------

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int between(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }
  template <typename T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<int>(v.size()) - 1))];
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// Small vocabulary so that random records share lemmas and multiword
/// lemmas contain single-word ones.
inline const std::vector<std::string>& lemma_pool() {
  static const std::vector<std::string> pool = {
      "جسم",          "جسم طبيعي",   "مركز",         "مركز تجاري", "مركز تسوق", "سيارة",
      "عربة",         "حمامة",        "يمامة",        "يمامة أسترالية", "طائر",   "كائن",
      "كائن حي",      "حي",           "مركز تجاري كبير", "تجاري",   "سيارة سباق", "سباق",
  };
  return pool;
}

inline std::vector<Synonym> random_synonyms(Gen& g, int max_count, bool with_examples) {
  std::vector<Synonym> out;
  const int n = g.between(0, max_count);
  for (int i = 0; i < n; ++i) {
    auto lemma = g.pick(lemma_pool());
    std::vector<std::string> ex;
    if (with_examples) ex.push_back("مثال على " + lemma);
    out.push_back(Synonym{lemma, i + 1, ex});
  }
  return out;
}

/// Random forest of up to `max_synsets` noun synsets. Each node other than
/// the first takes an earlier node as hypernym with high probability, so the
/// graph is acyclic; a few nodes also carry a dangling hypernym.
inline Lexicon random_project(Gen& g, int max_synsets = 15) {
  Lexicon lex;
  const int n = g.between(1, max_synsets);
  std::vector<SynsetId> ids;
  for (int i = 0; i < n; ++i) ids.push_back(nid(100 + i));
  for (int i = 0; i < n; ++i) {
    SourceSynset s = source(ids[i], {"w" + std::to_string(i)});
    if (i > 0 && g.chance(0.85)) s.hypernyms.push_back(ids[g.between(0, i - 1)]);
    if (g.chance(0.05)) s.hypernyms.push_back(nid(90000 + i));
    lex.sources[ids[i]] = s;

    TranslationRecord r;
    r.source = ids[i];
    if (g.chance(0.1)) {
      r.is_gap = true;
      r.phrases = {"عبارة " + std::to_string(i)};
    } else {
      r.synonyms = random_synonyms(g, 4, true);
      r.gloss = "تعريف تجريبي للسنست رقم " + std::to_string(i);
    }
    lex.records[ids[i]] = r;
  }
  return lex;
}

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

/// Full transitive closure over the source graph by fixed-point iteration.
inline std::map<SynsetId, std::set<SynsetId>> ancestor_closure(const Lexicon& lex) {
  std::map<SynsetId, std::set<SynsetId>> up;
  for (const auto& [sid, s] : lex.sources) up[sid] = std::set<SynsetId>(s.hypernyms.begin(), s.hypernyms.end());
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [sid, set] : up) {
      std::set<SynsetId> add;
      for (const auto& a : set)
        if (auto it = up.find(a); it != up.end())
          for (const auto& b : it->second)
            if (!set.count(b)) add.insert(b);
      if (!add.empty()) {
        set.insert(add.begin(), add.end());
        changed = true;
      }
    }
  }
  return up;
}

/// (record, synonym index) pairs that must carry a specialization flag.
inline std::set<std::pair<SynsetId, std::size_t>> specialization_oracle(const Lexicon& lex) {
  auto up = ancestor_closure(lex);
  auto is_anc = [&](const SynsetId& a, const SynsetId& b) {
    auto it = up.find(a);
    return it != up.end() && it->second.count(b) > 0;
  };
  std::set<std::pair<SynsetId, std::size_t>> flags;
  for (const auto& [a, ra] : lex.records) {
    if (ra.is_gap) continue;
    for (std::size_t i = 0; i < ra.synonyms.size(); ++i) {
      const auto lemma = normalize_lemma(ra.synonyms[i].lemma);
      for (const auto& [b, rb] : lex.records) {
        if (a == b || rb.is_gap) continue;
        bool shares = std::any_of(rb.synonyms.begin(), rb.synonyms.end(),
                                  [&](const Synonym& s) { return normalize_lemma(s.lemma) == lemma; });
        if (shares && (is_anc(a, b) || is_anc(b, a))) flags.insert({a, i});
      }
    }
  }
  return flags;
}

inline std::size_t token_count(const std::string& s) {
  std::istringstream in(s);
  std::string t;
  std::size_t n = 0;
  while (in >> t) ++n;
  return n;
}

inline std::string padded_tokens(const std::string& s) {
  std::istringstream in(s);
  std::string t, out = " ";
  while (in >> t) out += t + " ";
  return out;
}

/// Synonym indices that are strict contiguous token runs of another synonym.
inline std::set<std::size_t> compound_oracle(const std::vector<Synonym>& syns) {
  std::set<std::size_t> flags;
  for (std::size_t a = 0; a < syns.size(); ++a)
    for (std::size_t b = 0; b < syns.size(); ++b) {
      if (a == b) continue;
      const auto ta = padded_tokens(syns[a].lemma), tb = padded_tokens(syns[b].lemma);
      if (token_count(syns[a].lemma) > 0 && token_count(syns[a].lemma) < token_count(syns[b].lemma) &&
          tb.find(ta) != std::string::npos)
        flags.insert(a);
    }
  return flags;
}

}  // namespace lbtest
