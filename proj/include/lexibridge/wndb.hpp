#pragma once

// Reader for the Princeton WordNet database (WNDB) text files and for the
// tab-separated prior-translation format.

#include <cctype>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "lexibridge/core.hpp"
#include "lexibridge/text.hpp"

namespace lexibridge::wndb {

struct ParseIssue {
  std::string file;
  std::size_t line = 0;  // 1-based
  std::string reason;

  friend bool operator==(const ParseIssue&, const ParseIssue&) = default;
};

struct ParseReport {
  std::vector<std::string> files_read;
  std::map<Pos, std::size_t> synsets_parsed;
  std::size_t lines_skipped = 0;  // license header lines
  std::vector<ParseIssue> errors;  // MalformedLine
  std::vector<ParseIssue> warnings;  // dangling references, missing gloss, ...
  std::optional<std::string> version;

  std::size_t total_parsed() const {
    std::size_t n = 0;
    for (const auto& [pos, count] : synsets_parsed) n += count;
    return n;
  }

  void merge(const ParseReport& other) {
    files_read.insert(files_read.end(), other.files_read.begin(), other.files_read.end());
    for (const auto& [pos, count] : other.synsets_parsed) synsets_parsed[pos] += count;
    lines_skipped += other.lines_skipped;
    errors.insert(errors.end(), other.errors.begin(), other.errors.end());
    warnings.insert(warnings.end(), other.warnings.begin(), other.warnings.end());
    if (!version) version = other.version;
  }
};

struct GlossParts {
  std::string definition;
  std::vector<std::string> examples;
};

/// Splits a WNDB gloss into its definition and quoted examples. Every maximal
/// `"..."` span becomes one example; the unquoted remainder, with separator
/// semicolons trimmed, becomes the definition.
inline GlossParts split_gloss(std::string_view gloss) {
  GlossParts parts;
  std::vector<std::string> unquoted;
  std::size_t i = 0;
  while (i < gloss.size()) {
    auto open = gloss.find('"', i);
    if (open == std::string_view::npos) {
      unquoted.emplace_back(gloss.substr(i));
      break;
    }
    auto close = gloss.find('"', open + 1);
    if (close == std::string_view::npos) {
      // unbalanced quote stays in the definition text
      unquoted.emplace_back(gloss.substr(i));
      break;
    }
    unquoted.emplace_back(gloss.substr(i, open - i));
    parts.examples.push_back(text::collapse_whitespace(gloss.substr(open + 1, close - open - 1)));
    i = close + 1;
  }
  std::vector<std::string> pieces;
  for (auto& u : unquoted) {
    std::string_view v = u;
    while (!v.empty() && (text::is_ascii_space(v.front()) || v.front() == ';')) v.remove_prefix(1);
    while (!v.empty() && (text::is_ascii_space(v.back()) || v.back() == ';')) v.remove_suffix(1);
    if (!v.empty()) pieces.push_back(text::collapse_whitespace(v));
  }
  for (std::size_t k = 0; k < pieces.size(); ++k) {
    if (k) parts.definition += "; ";
    parts.definition += pieces[k];
  }
  return parts;
}

namespace detail {

inline bool all_of_class(std::string_view s, int (*pred)(int)) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [&](char c) { return pred(static_cast<unsigned char>(c)) != 0; });
}
inline bool is_decimal(std::string_view s) { return all_of_class(s, ::isdigit); }
inline bool is_hex(std::string_view s) { return all_of_class(s, ::isxdigit); }

inline std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && s[i] == ' ') ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

/// `short_circuit(a)` -> `short circuit`; drops adjective position markers.
inline std::string wndb_word(std::string_view w) {
  static const std::array<std::string_view, 3> markers = {"(a)", "(p)", "(ip)"};
  for (auto m : markers)
    if (w.size() > m.size() && w.substr(w.size() - m.size()) == m) {
      w.remove_suffix(m.size());
      break;
    }
  std::string out(w);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

inline std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline bool is_header_line(std::string_view line) { return line.size() >= 2 && line[0] == ' ' && line[1] == ' '; }

inline std::optional<std::string> header_version(std::string_view line) {
  static const std::regex re(R"(WordNet\s+([0-9]+(\.[0-9]+)*))");
  std::match_results<std::string_view::const_iterator> m;
  if (std::regex_search(line.begin(), line.end(), m, re)) return m[1].str();
  return std::nullopt;
}

/// Line iterator over text; strips a trailing CR.
template <typename F>
void for_each_line(std::string_view contents, F&& f) {
  std::size_t start = 0;
  std::size_t number = 0;
  while (start < contents.size()) {
    auto end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    auto line = contents.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    f(++number, line);
    start = end + 1;
  }
}

inline bool pos_fits_file(Pos ss_type, Pos file_pos) {
  if (file_pos == Pos::Adjective || file_pos == Pos::AdjectiveSatellite)
    return ss_type == Pos::Adjective || ss_type == Pos::AdjectiveSatellite;
  return ss_type == file_pos;
}

struct LineError {
  std::string reason;
};

}  // namespace detail

struct DataParse {
  std::vector<SourceSynset> synsets;
  ParseReport report;
};

/// Parses one `data.<pos>` file. Malformed lines are recorded and skipped;
/// a non-hexadecimal w_cnt or non-decimal p_cnt throws FatalFormat.
inline DataParse parse_data_file(std::string_view contents, Pos pos, const std::string& file_name = "") {
  DataParse out;
  const std::string name = file_name.empty() ? "data." + std::string(pos_name(pos)) : file_name;
  out.report.files_read.push_back(name);
  auto record_error = [&](std::size_t line, std::string reason) {
    out.report.errors.push_back({name, line, std::move(reason)});
  };

  detail::for_each_line(contents, [&](std::size_t number, std::string_view line) {
    if (detail::is_header_line(line)) {
      ++out.report.lines_skipped;
      if (!out.report.version)
        if (auto v = detail::header_version(line)) out.report.version = v;
      return;
    }
    if (text::trim(line).empty()) return;

    std::string_view fields = line;
    std::string_view gloss_text;
    bool has_bar = false;
    if (auto bar = line.find('|'); bar != std::string_view::npos) {
      fields = line.substr(0, bar);
      gloss_text = text::trim(line.substr(bar + 1));
      has_bar = true;
    }
    auto tok = detail::tokens(fields);
    std::size_t k = 0;
    auto next = [&]() -> std::optional<std::string_view> {
      if (k >= tok.size()) return std::nullopt;
      return tok[k++];
    };

    auto offset = next();
    if (!offset || !is_offset_string(*offset)) return record_error(number, "bad synset offset");
    auto lex = next();
    if (!lex || lex->size() != 2 || !detail::is_decimal(*lex)) return record_error(number, "bad lex_filenum");
    auto ss = next();
    std::optional<Pos> ss_type = ss && ss->size() == 1 ? parse_pos(*ss) : std::nullopt;
    if (!ss_type) return record_error(number, "bad ss_type");
    if (!detail::pos_fits_file(*ss_type, pos))
      return record_error(number, "ss_type does not belong in this file");

    auto wcnt = next();
    if (!wcnt) return record_error(number, "missing w_cnt");
    if (!detail::is_hex(*wcnt))
      throw Error(ErrorCode::FatalFormat,
                  name + ":" + std::to_string(number) + ": w_cnt is not hexadecimal: " + std::string(*wcnt));
    const auto word_count = std::stoul(std::string(*wcnt), nullptr, 16);
    if (word_count == 0) return record_error(number, "synset without words");

    SourceSynset syn;
    syn.id = SynsetId(*ss_type, std::string(*offset));
    syn.lex_file = std::stoi(std::string(*lex));
    std::set<std::string> seen;
    for (std::size_t w = 0; w < word_count; ++w) {
      auto word = next();
      auto lex_id = next();
      if (!word || !lex_id) return record_error(number, "word list shorter than w_cnt");
      if (!detail::is_hex(*lex_id)) return record_error(number, "bad lex_id");
      auto lemma = detail::wndb_word(*word);
      if (!seen.insert(detail::lower_ascii(lemma)).second) {
        out.report.warnings.push_back({name, number, "duplicate lemma dropped: " + lemma});
        continue;
      }
      syn.lemmas.push_back(std::move(lemma));
    }

    auto pcnt = next();
    if (!pcnt) return record_error(number, "missing p_cnt");
    if (!detail::is_decimal(*pcnt))
      throw Error(ErrorCode::FatalFormat,
                  name + ":" + std::to_string(number) + ": p_cnt is not decimal: " + std::string(*pcnt));
    const auto pointer_count = std::stoul(std::string(*pcnt));
    for (std::size_t p = 0; p < pointer_count; ++p) {
      auto symbol = next();
      auto target = next();
      auto target_pos = next();
      auto source_target = next();
      if (!symbol || !target || !target_pos || !source_target)
        return record_error(number, "pointer list shorter than p_cnt");
      auto tpos = target_pos->size() == 1 ? parse_pos(*target_pos) : std::nullopt;
      if (!is_offset_string(*target) || !tpos || source_target->size() != 4 ||
          !detail::is_hex(*source_target))
        return record_error(number, "malformed pointer");
      bool keep = *symbol == "@" || *symbol == "@i" ||
                  (*ss_type == Pos::AdjectiveSatellite && *symbol == "&");
      if (!keep) continue;
      SynsetId hyper(*tpos, std::string(*target));
      if (hyper == syn.id) {
        out.report.warnings.push_back({name, number, "self-referencing hypernym dropped"});
        continue;
      }
      if (std::find(syn.hypernyms.begin(), syn.hypernyms.end(), hyper) == syn.hypernyms.end())
        syn.hypernyms.push_back(hyper);
    }

    if (pos == Pos::Verb && k < tok.size()) {
      // verb frames: f_cnt followed by f_cnt triples of `+ f_num w_num`
      auto fcnt = next();
      if (!detail::is_decimal(*fcnt)) return record_error(number, "bad f_cnt");
      const auto frame_count = std::stoul(std::string(*fcnt));
      for (std::size_t f = 0; f < frame_count; ++f) {
        auto plus = next();
        auto fnum = next();
        auto wnum = next();
        if (!plus || *plus != "+" || !fnum || !wnum || !detail::is_decimal(*fnum) || !detail::is_hex(*wnum))
          return record_error(number, "malformed verb frame");
      }
    }
    if (k != tok.size()) return record_error(number, "unexpected trailing fields");

    if (!has_bar) {
      out.report.errors.push_back({name, number, "missing gloss separator '|'"});
    } else {
      auto parts = split_gloss(gloss_text);
      syn.gloss = std::move(parts.definition);
      syn.examples = std::move(parts.examples);
    }

    ++out.report.synsets_parsed[*ss_type];
    out.synsets.push_back(std::move(syn));
  });

  // Pointers into data.adj name the target as `a` even when it is a
  // satellite; rewrite them to the parsed ss_type.
  if (pos == Pos::Adjective || pos == Pos::AdjectiveSatellite) {
    std::map<std::string, Pos> in_file;
    for (const auto& s : out.synsets) in_file[s.id.offset()] = s.id.pos();
    for (auto& s : out.synsets)
      for (auto& h : s.hypernyms)
        if (h.pos() == Pos::Adjective || h.pos() == Pos::AdjectiveSatellite)
          if (auto it = in_file.find(h.offset()); it != in_file.end()) h = SynsetId(it->second, h.offset());
  }
  return out;
}

struct IndexParse {
  std::map<std::string, std::vector<SynsetId>> entries;
  ParseReport report;
};

/// Parses an `index.<pos>` file into lemma -> synset ids.
inline IndexParse parse_index_file(std::string_view contents, Pos pos, const std::string& file_name = "") {
  IndexParse out;
  const std::string name = file_name.empty() ? "index." + std::string(pos_name(pos)) : file_name;
  out.report.files_read.push_back(name);

  detail::for_each_line(contents, [&](std::size_t number, std::string_view line) {
    if (detail::is_header_line(line)) {
      ++out.report.lines_skipped;
      if (!out.report.version)
        if (auto v = detail::header_version(line)) out.report.version = v;
      return;
    }
    if (text::trim(line).empty()) return;
    auto fail = [&](const char* reason) { out.report.errors.push_back({name, number, reason}); };

    auto tok = detail::tokens(line);
    if (tok.size() < 6) return fail("too few fields");
    auto lemma = detail::wndb_word(tok[0]);
    auto line_pos = tok[1].size() == 1 ? parse_pos(tok[1]) : std::nullopt;
    if (!line_pos || !detail::pos_fits_file(*line_pos, pos)) return fail("bad pos field");
    if (!detail::is_decimal(tok[2]) || !detail::is_decimal(tok[3])) return fail("bad counts");
    const auto synset_count = std::stoul(std::string(tok[2]));
    const auto pointer_count = std::stoul(std::string(tok[3]));
    // lemma pos synset_cnt p_cnt [ptr]... sense_cnt tagsense_cnt [offset]...
    const std::size_t expected = 4 + pointer_count + 2 + synset_count;
    if (tok.size() != expected) return fail("field count does not match synset_cnt/p_cnt");
    std::vector<SynsetId> ids;
    for (std::size_t i = 4 + pointer_count + 2; i < tok.size(); ++i) {
      if (!is_offset_string(tok[i])) return fail("bad synset offset");
      ids.emplace_back(pos, std::string(tok[i]));
    }
    auto& slot = out.entries[lemma];
    slot.insert(slot.end(), ids.begin(), ids.end());
  });
  return out;
}

// ---------------------------------------------------------------------------
// Directory loading
// ---------------------------------------------------------------------------

struct SourceLoad {
  std::map<SynsetId, SourceSynset> synsets;
  std::map<std::string, std::vector<SynsetId>> index;  // lemma -> ids, all index files
  ParseReport report;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Loads every recognized `data.*` and `index.*` file in `directory`.
inline SourceLoad load_source(const std::filesystem::path& directory) {
  static const std::array<std::pair<std::string_view, Pos>, 4> kFiles = {
      {{"noun", Pos::Noun}, {"verb", Pos::Verb}, {"adj", Pos::Adjective}, {"adv", Pos::Adverb}}};
  SourceLoad out;
  bool any_data = false;
  for (auto [suffix, pos] : kFiles) {
    auto path = directory / ("data." + std::string(suffix));
    if (!std::filesystem::is_regular_file(path)) continue;
    any_data = true;
    auto parsed = parse_data_file(read_file(path), pos, path.filename().string());
    out.report.merge(parsed.report);
    for (auto& s : parsed.synsets) {
      auto id = s.id;
      if (!out.synsets.emplace(id, std::move(s)).second)
        out.report.warnings.push_back({path.filename().string(), 0, "duplicate synset " + id.str()});
    }
  }
  if (!any_data)
    throw Error(ErrorCode::NoInputFiles, "no data.{noun,verb,adj,adv} file in " + directory.string());

  for (auto [suffix, pos] : kFiles) {
    auto path = directory / ("index." + std::string(suffix));
    if (!std::filesystem::is_regular_file(path)) continue;
    auto parsed = parse_index_file(read_file(path), pos, path.filename().string());
    out.report.merge(parsed.report);
    for (auto& [lemma, ids] : parsed.entries) {
      auto& slot = out.index[lemma];
      for (const auto& id : ids) {
        // index files name satellites as `a`
        SynsetId resolved = id;
        if (!out.synsets.count(id) && pos == Pos::Adjective) {
          SynsetId sat(Pos::AdjectiveSatellite, id.offset());
          if (out.synsets.count(sat)) resolved = sat;
        }
        if (!out.synsets.count(resolved))
          out.report.warnings.push_back(
              {path.filename().string(), 0, "index entry '" + lemma + "' references unknown synset " + id.str()});
        slot.push_back(resolved);
      }
    }
  }

  for (const auto& [id, syn] : out.synsets)
    for (const auto& h : syn.hypernyms)
      if (!out.synsets.count(h))
        out.report.warnings.push_back({"", 0, "dangling hypernym " + h.str() + " from " + id.str()});
  return out;
}

// ---------------------------------------------------------------------------
// Prior translations (7-column TSV)
// ---------------------------------------------------------------------------
//
// offset <TAB> pos <TAB> gap(0|1) <TAB> synonyms <TAB> gloss <TAB> examples <TAB> phrases
//
// List columns are `;`-separated. Backslash escapes: \\ \t \n \; . An example
// may carry a `<rank>:` prefix naming its synonym; unprefixed examples attach
// to the synonym whose lemma they contain (longest match), else to rank 1.

namespace tsv {

inline std::string escape(std::string_view s, bool list_item) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\\': out += "\\\\"; break;
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': break;
      case ';':
        if (list_item) {
          out += "\\;";
          break;
        }
        [[fallthrough]];
      default: out.push_back(c);
    }
  }
  return out;
}

inline std::string unescape(std::string_view s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      char n = s[++i];
      out.push_back(n == 't' ? '\t' : n == 'n' ? '\n' : n);
    } else {
      out.push_back(s[i]);
    }
  }
  return out;
}

/// Splits on unescaped `;`, unescapes items and drops empty ones.
inline std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> items;
  std::string current;
  auto flush = [&] {
    auto v = text::trim(current);
    if (!v.empty()) items.push_back(unescape(v));
    current.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '\\' && i + 1 < s.size()) {
      current.push_back(s[i]);
      current.push_back(s[++i]);
    } else if (s[i] == ';') {
      flush();
    } else {
      current.push_back(s[i]);
    }
  }
  flush();
  return items;
}

inline std::string join_list(const std::vector<std::string>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ';';
    out += escape(items[i], true);
  }
  return out;
}

}  // namespace tsv

struct PriorImport {
  std::vector<TranslationRecord> records;
  std::vector<ParseIssue> errors;  // MalformedLine
};

/// Imports prior translations. Complete rows enter PendingCorrection; rows
/// lacking a gloss or synonyms stay Untranslated with their content as a
/// draft. Duplicate (offset, pos) rows throw DuplicateRecord.
inline PriorImport import_prior_translations(std::string_view contents, const std::string& file_name = "prior.tsv") {
  PriorImport out;
  std::map<SynsetId, std::size_t> first_line;
  std::vector<std::string> duplicates;

  detail::for_each_line(contents, [&](std::size_t number, std::string_view line) {
    if (text::trim(line).empty() || line.front() == '#') return;
    auto fail = [&](std::string reason) { out.errors.push_back({file_name, number, std::move(reason)}); };
    if (!text::is_valid_utf8(line)) return fail("invalid UTF-8");
    auto cols = text::split(line, '\t');
    if (cols.size() != 7) return fail("expected 7 tab-separated columns, got " + std::to_string(cols.size()));
    auto offset = std::string(text::trim(cols[0]));
    auto pos = parse_pos(text::trim(cols[1]));
    if (!is_offset_string(offset)) return fail("bad offset");
    if (!pos) return fail("bad pos");
    auto gap = text::trim(cols[2]);
    if (gap != "0" && gap != "1") return fail("gap flag must be 0 or 1");

    TranslationRecord rec;
    rec.source = SynsetId(*pos, offset);
    rec.is_gap = gap == "1";
    rec.gloss = text::collapse_whitespace(tsv::unescape(cols[4]));
    rec.phrases = tsv::split_list(cols[6]);
    for (auto& p : rec.phrases) p = text::collapse_whitespace(p);
    int rank = 0;
    for (auto& lemma : tsv::split_list(cols[3])) {
      auto norm = normalize_lemma(lemma);
      if (norm.empty()) continue;
      rec.synonyms.push_back(Synonym{norm, ++rank, {}});
    }
    if (rec.is_gap && !rec.synonyms.empty()) return fail("gap row carries synonyms");
    if (rec.is_gap && rec.phrases.empty()) return fail("gap row without phrase");

    auto examples = tsv::split_list(cols[5]);
    if (!examples.empty() && rec.synonyms.empty()) return fail("examples without synonyms");
    static const std::regex prefix(R"(^([0-9]+):(.*)$)");
    for (auto& ex : examples) {
      std::smatch m;
      std::size_t target = 0;
      std::string body = ex;
      bool placed = false;
      if (std::regex_match(ex, m, prefix)) {
        auto r = std::stoul(m[1].str());
        if (r >= 1 && r <= rec.synonyms.size()) {
          target = r - 1;
          body = m[2].str();
          placed = true;
        }
      }
      if (!placed) {
        std::size_t best_len = 0;
        for (std::size_t i = 0; i < rec.synonyms.size(); ++i) {
          const auto& lemma = rec.synonyms[i].lemma;
          if (lemma.size() > best_len && ex.find(lemma) != std::string::npos) {
            best_len = lemma.size();
            target = i;
          }
        }
      }
      rec.synonyms[target].examples.push_back(text::collapse_whitespace(body));
    }

    const bool complete = rec.is_gap || (!rec.synonyms.empty() && !rec.gloss.empty());
    rec.state = complete ? WorkflowState::PendingCorrection : WorkflowState::Untranslated;

    if (auto [it, inserted] = first_line.emplace(rec.source, number); !inserted) {
      duplicates.push_back(rec.source.str() + " (lines " + std::to_string(it->second) + ", " +
                           std::to_string(number) + ")");
      return;
    }
    out.records.push_back(std::move(rec));
  });

  if (!duplicates.empty()) {
    std::string msg = "duplicate records:";
    for (const auto& d : duplicates) msg += " " + d;
    throw Error(ErrorCode::DuplicateRecord, msg);
  }
  return out;
}

/// Writes records in the import format. Examples carry `<rank>:` prefixes so
/// that re-import restores their synonym.
inline std::string export_prior_tsv(const std::vector<TranslationRecord>& records) {
  std::string out;
  for (const auto& r : records) {
    std::vector<std::string> lemmas, examples;
    auto sorted = r.synonyms;
    std::stable_sort(sorted.begin(), sorted.end(), [](const Synonym& a, const Synonym& b) { return a.rank < b.rank; });
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      lemmas.push_back(sorted[i].lemma);
      for (const auto& ex : sorted[i].examples) examples.push_back(std::to_string(i + 1) + ":" + ex);
    }
    out += r.source.offset();
    out += '\t';
    out += pos_letter(r.source.pos());
    out += '\t';
    out += r.is_gap ? "1" : "0";
    out += '\t' + tsv::join_list(lemmas);
    out += '\t' + tsv::escape(r.gloss, false);
    out += '\t' + tsv::join_list(examples);
    out += '\t' + tsv::join_list(r.phrases);
    out += '\n';
  }
  return out;
}

}  // namespace lexibridge::wndb
