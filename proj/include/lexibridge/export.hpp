#pragma once

// Target-lexicon export: the 7-column TSV (same as import) and a minimal
// WN-LMF style XML document.

#include <map>
#include <string>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/wndb.hpp"

namespace lexibridge::exporter {

/// Records with any target-language content, in id order.
inline std::vector<TranslationRecord> exportable(const Lexicon& lexicon) {
  std::vector<TranslationRecord> out;
  for (const auto& [id, r] : lexicon.records)
    if (has_target_content(r)) out.push_back(r);
  return out;
}

inline std::string to_tsv(const Lexicon& lexicon) { return wndb::export_prior_tsv(exportable(lexicon)); }

inline std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string lmf_synset_id(const SynsetId& id, std::string_view prefix) {
  return std::string(prefix) + "-" + id.offset() + "-" + std::string(1, pos_letter(id.pos()));
}

/// Lexical entries group senses by (lemma, pos); each sense points at the
/// synset keyed by pos+offset. Gap synsets are emitted unlexicalized with
/// their substitute phrases as examples.
inline std::string to_lmf(const Lexicon& lexicon, std::string_view lexicon_id = "lexibridge-ar",
                          std::string_view language = "ar") {
  auto records = exportable(lexicon);
  struct Sense {
    SynsetId synset;
    std::vector<std::string> examples;
  };
  std::map<std::pair<std::string, char>, std::vector<Sense>> entries;
  for (const auto& r : records) {
    if (r.is_gap) continue;
    auto sorted = r.synonyms;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Synonym& a, const Synonym& b) { return a.rank < b.rank; });
    for (const auto& s : sorted) entries[{s.lemma, pos_letter(r.source.pos())}].push_back({r.source, s.examples});
  }

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<!DOCTYPE LexicalResource SYSTEM \"http://globalwordnet.github.io/schemas/WN-LMF-1.1.dtd\">\n";
  out += "<LexicalResource xmlns:dc=\"https://globalwordnet.github.io/schemas/dc/\">\n";
  out += "  <Lexicon id=\"" + xml_escape(lexicon_id) + "\" label=\"" + xml_escape(lexicon_id) + "\" language=\"" +
         xml_escape(language) + "\" email=\"\" license=\"\" version=\"1.0\">\n";
  std::size_t entry_no = 0;
  for (const auto& [key, senses] : entries) {
    const auto entry_id = std::string(lexicon_id) + "-w" + std::to_string(++entry_no);
    out += "    <LexicalEntry id=\"" + entry_id + "\">\n";
    out += "      <Lemma writtenForm=\"" + xml_escape(key.first) + "\" partOfSpeech=\"" + std::string(1, key.second) +
           "\"/>\n";
    for (const auto& s : senses) {
      out += "      <Sense id=\"" + entry_id + "-" + s.synset.offset() + "-" + std::string(1, key.second) +
             "\" synset=\"" + lmf_synset_id(s.synset, lexicon_id) + "\"";
      if (s.examples.empty()) {
        out += "/>\n";
        continue;
      }
      out += ">\n";
      for (const auto& ex : s.examples) out += "        <Example>" + xml_escape(ex) + "</Example>\n";
      out += "      </Sense>\n";
    }
    out += "    </LexicalEntry>\n";
  }
  for (const auto& r : records) {
    out += "    <Synset id=\"" + lmf_synset_id(r.source, lexicon_id) + "\" ili=\"\" partOfSpeech=\"" +
           std::string(1, pos_letter(r.source.pos())) + "\"";
    if (r.is_gap) out += " lexicalized=\"false\"";
    out += ">\n";
    if (!r.gloss.empty()) out += "      <Definition>" + xml_escape(r.gloss) + "</Definition>\n";
    if (r.is_gap)
      for (const auto& p : r.phrases) out += "      <Example>" + xml_escape(p) + "</Example>\n";
    out += "    </Synset>\n";
  }
  out += "  </Lexicon>\n";
  out += "</LexicalResource>\n";
  return out;
}

}  // namespace lexibridge::exporter
