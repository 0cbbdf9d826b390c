// lexibridge: command-line front end for a localization project store.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "lexibridge/export.hpp"
#include "lexibridge/serialization.hpp"
#include "lexibridge/service.hpp"
#include "lexibridge/stats.hpp"
#include "lexibridge/store.hpp"
#include "lexibridge/validation.hpp"
#include "lexibridge/wndb.hpp"

namespace fs = std::filesystem;
using namespace lexibridge;

namespace {

constexpr int kExitFailure = 2;

fs::path default_store_path() {
  if (const char* env = std::getenv("LEXIBRIDGE_DATA"); env && *env) return env;
  return "lexibridge.project";
}

ProjectStore open_store(const fs::path& path) {
  if (!fs::exists(path)) return {};
  return ProjectStore::load(path);
}

void print_issues(const std::vector<wndb::ParseIssue>& issues, const char* kind) {
  for (const auto& i : issues)
    std::cerr << kind << ": " << (i.file.empty() ? "" : i.file + ":") << i.line << ": " << i.reason << "\n";
}

std::vector<TranslationRecord> load_baseline(const fs::path& path) {
  if (path.extension() == ".tsv") {
    auto imported = wndb::import_prior_translations(wndb::read_file(path), path.filename().string());
    print_issues(imported.errors, "baseline");
    return imported.records;
  }
  return ProjectStore::load(path).records();
}

bool emit_json(const std::string& format) {
  if (format != "tsv" && format != "json") throw Error(ErrorCode::BadRequest, "format must be tsv or json");
  return format == "json";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Translation workbench for WordNet localization projects"};
  app.require_subcommand(1);
  std::string store_opt;
  app.add_option("--store", store_opt, "project file (default: $LEXIBRIDGE_DATA or ./lexibridge.project)");

  auto* import_wndb = app.add_subcommand("import-wndb", "parse WNDB data/index files and add source synsets");
  std::string wndb_dir;
  import_wndb->add_option("dir", wndb_dir, "directory holding data.* and index.* files")->required();

  auto* import_prior = app.add_subcommand("import-prior", "import prior translations from a 7-column TSV");
  std::string prior_file;
  import_prior->add_option("tsv", prior_file, "TSV file")->required();

  auto* validate = app.add_subcommand("validate", "report findings; exit 1 iff any error");
  std::string validate_pos;
  bool errors_only = false;
  validate->add_option("--pos", validate_pos, "restrict to one part of speech (n, v, a, s, r)");
  validate->add_flag("--errors-only", errors_only, "omit warnings");

  auto* stats_cmd = app.add_subcommand("stats", "inventory, enrichment diff and loop reports");
  stats_cmd->require_subcommand(1);
  std::string format = "tsv";
  std::string policy_name = "submitted";
  auto* inventory = stats_cmd->add_subcommand("inventory", "synset and synonym counts per part of speech");
  inventory->add_option("--policy", policy_name, "submitted | accepted | any");
  inventory->add_option("--format", format, "tsv | json");
  auto* diff = stats_cmd->add_subcommand("diff", "enrichment against a baseline project or TSV");
  std::string baseline;
  diff->add_option("--baseline", baseline, "baseline project file or prior-translation TSV")->required();
  diff->add_option("--format", format, "tsv | json");
  auto* loops = stats_cmd->add_subcommand("loops", "rejection-loop histogram");
  loops->add_option("--format", format, "tsv | json");

  auto* export_cmd = app.add_subcommand("export", "write the target lexicon");
  std::string export_format = "tsv";
  std::string output;
  export_cmd->add_option("--format", export_format, "tsv | lmf")->check(CLI::IsMember({"tsv", "lmf"}));
  export_cmd->add_option("--output,-o", output, "output file (default: stdout)");

  auto* serve = app.add_subcommand("serve", "run the HTTP API");
  std::string addr = "127.0.0.1:8787";
  std::string users_file;
  serve->add_option("--addr", addr, "host:port");
  serve->add_option("--users", users_file, "user config (JSON)")->required();

  auto* release = app.add_subcommand("release-claims", "drop every work-queue claim");

  CLI11_PARSE(app, argc, argv);

  const fs::path store_path = store_opt.empty() ? default_store_path() : fs::path(store_opt);

  try {
    if (*import_wndb) {
      auto loaded = wndb::load_source(wndb_dir);
      print_issues(loaded.report.errors, "malformed");
      print_issues(loaded.report.warnings, "warning");
      auto store = open_store(store_path);
      auto summary = store.add_sources(loaded.synsets);
      store.save(store_path);
      std::cout << "parsed " << loaded.report.total_parsed() << " synsets";
      if (loaded.report.version) std::cout << " (WordNet " << *loaded.report.version << ")";
      std::cout << "; " << summary.sources_added << " sources added, " << summary.records_created
                << " records created\n";
      return 0;
    }

    if (*import_prior) {
      auto imported = wndb::import_prior_translations(wndb::read_file(prior_file), fs::path(prior_file).filename());
      print_issues(imported.errors, "malformed");
      auto store = open_store(store_path);
      auto summary = store.add_records(imported.records);
      store.save(store_path);
      for (const auto& s : summary.skipped) std::cerr << "skipped: " << s << "\n";
      std::cout << summary.records_created << " records created, " << summary.records_replaced << " replaced\n";
      return 0;
    }

    if (*validate) {
      std::optional<Pos> only;
      if (!validate_pos.empty()) {
        only = parse_pos(validate_pos);
        if (!only) throw Error(ErrorCode::BadRequest, "unknown pos " + validate_pos);
      }
      auto store = open_store(store_path);
      validation::HierarchyIndex index(store.lexicon());
      bool any_error = false;
      for (const auto& [id, rec] : store.lexicon().records) {
        if (rec.state == WorkflowState::Untranslated || rec.state == WorkflowState::NotUnderstood) continue;
        if (only && pos_group(id.pos()) != pos_group(*only)) continue;
        for (const auto& f : validation::all_findings(rec, index)) {
          if (f.severity == Severity::Error) any_error = true;
          if (errors_only && f.severity != Severity::Error) continue;
          std::cout << validation::report_line(f);
        }
      }
      return any_error ? 1 : 0;
    }

    if (*inventory) {
      auto policy = stats::parse_policy(policy_name);
      if (!policy) throw Error(ErrorCode::BadRequest, "unknown policy " + policy_name);
      auto report = stats::inventory(open_store(store_path).records(), *policy);
      std::cout << (emit_json(format) ? json(report).dump(2) + "\n" : stats::to_tsv(report));
      return 0;
    }

    if (*diff) {
      auto result = stats::enrichment_diff(load_baseline(baseline), open_store(store_path).records());
      for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << (emit_json(format) ? json(result).dump(2) + "\n" : stats::to_tsv(result));
      return 0;
    }

    if (*loops) {
      auto m = stats::loop_metrics(open_store(store_path).records());
      std::cout << (emit_json(format) ? json(m).dump(2) + "\n" : stats::to_tsv(m));
      return 0;
    }

    if (*export_cmd) {
      auto store = open_store(store_path);
      auto body = export_format == "lmf" ? exporter::to_lmf(store.lexicon()) : exporter::to_tsv(store.lexicon());
      if (output.empty()) {
        std::cout << body;
      } else {
        std::ofstream out(output, std::ios::binary);
        if (!(out << body)) throw Error(ErrorCode::Io, "cannot write " + output);
      }
      return 0;
    }

    if (*serve) {
      auto colon = addr.rfind(':');
      if (colon == std::string::npos) throw Error(ErrorCode::BadRequest, "--addr must be host:port");
      const auto host = addr.substr(0, colon);
      const int port = std::stoi(addr.substr(colon + 1));
      service::Service svc(open_store(store_path), service::UserConfig::load(users_file), store_path);
      httplib::Server server;
      svc.bind(server);
      std::cerr << "listening on " << host << ":" << port << " (store " << store_path << ")\n";
      if (!server.listen(host, port)) throw Error(ErrorCode::Io, "cannot listen on " + addr);
      return 0;
    }

    if (*release) {
      auto store = open_store(store_path);
      auto n = store.release_all();
      store.save(store_path);
      std::cout << "released " << n << " claim(s)\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return 0;
}
