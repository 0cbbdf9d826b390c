#pragma once

// HTTP API over a ProjectStore. Requests are handled by Service::handle,
// which is transport-independent; bind() wires it into cpp-httplib.

#include <filesystem>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <regex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "httplib.h"
#include "lexibridge/export.hpp"
#include "lexibridge/serialization.hpp"
#include "lexibridge/stats.hpp"
#include "lexibridge/store.hpp"
#include "lexibridge/validation.hpp"
#include "lexibridge/wndb.hpp"
#include "lexibridge/workflow.hpp"

namespace lexibridge::service {

struct User {
  std::string token;
  std::string id;
  Role role = Role::Translator;
};

class UserConfig {
 public:
  UserConfig() = default;

  /// Throws BadRequest on duplicate tokens or unknown roles.
  explicit UserConfig(std::vector<User> users) {
    for (auto& u : users) {
      if (u.token.empty() || u.id.empty()) throw Error(ErrorCode::BadRequest, "user entries need token and user");
      if (!by_token_.emplace(u.token, u).second) throw Error(ErrorCode::BadRequest, "duplicate token for " + u.id);
    }
  }

  /// Accepts `[{"token":..,"user":..,"role":..}, ...]` or `{"users":[...]}`.
  static UserConfig from_json(const json& j) {
    const json& list = j.is_object() ? j.at("users") : j;
    std::vector<User> users;
    for (const auto& u : list) {
      auto role = parse_role(u.at("role").get<std::string>());
      if (!role) throw Error(ErrorCode::BadRequest, "unknown role " + u.at("role").get<std::string>());
      users.push_back({u.at("token").get<std::string>(), u.at("user").get<std::string>(), *role});
    }
    return UserConfig(std::move(users));
  }

  static UserConfig load(const std::filesystem::path& path) {
    try {
      return from_json(json::parse(wndb::read_file(path)));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::BadRequest, "bad user config " + path.string() + ": " + e.what());
    }
  }

  const User* find(const std::string& token) const {
    auto it = by_token_.find(token);
    return it == by_token_.end() ? nullptr : &it->second;
  }

 private:
  std::map<std::string, User> by_token_;
};

struct Request {
  std::string method;
  std::string path;
  std::map<std::string, std::string> query;
  std::string body;
  std::string bearer_token;
};

struct Response {
  int status = 200;
  std::string body;
  std::string content_type = "application/json; charset=utf-8";

  json json_body() const { return json::parse(body); }
};

inline int http_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::StaleRevision:
    case ErrorCode::AlreadyClaimed:
    case ErrorCode::ClaimedByOther:
    case ErrorCode::DuplicateRecord: return 409;
    case ErrorCode::MissingNote:
    case ErrorCode::ValidationBlocked:
    case ErrorCode::EmptyPhrases:
    case ErrorCode::InvalidEdits:
    case ErrorCode::MalformedLine:
    case ErrorCode::FatalFormat: return 422;
    case ErrorCode::IllegalTransition:
    case ErrorCode::DutySeparationViolation:
    case ErrorCode::WrongQueue: return 403;
    case ErrorCode::Unauthorized: return 401;
    case ErrorCode::NotFound:
    case ErrorCode::NoInputFiles: return 404;
    case ErrorCode::BadRequest:
    case ErrorCode::CyclicHierarchy:
    case ErrorCode::CorruptFile:
    case ErrorCode::VersionMismatch: return 400;
    case ErrorCode::Io: return 500;
  }
  return 500;
}

inline Response error_response(const Error& e) {
  json body{{"code", error_code_name(e.code())}, {"message", e.what()}};
  if (!e.findings().empty()) body["findings"] = e.findings();
  return {http_status(e.code()), body.dump()};
}

class Service {
 public:
  using Clock = std::function<std::string()>;

  Service(ProjectStore store, UserConfig users, std::optional<std::filesystem::path> store_path = {},
          Clock clock = utc_now)
      : store_(std::move(store)), users_(std::move(users)), path_(std::move(store_path)), clock_(std::move(clock)) {}

  Response handle(const Request& req) {
    try {
      const User& user = authenticate(req);
      return route(req, user);
    } catch (const Error& e) {
      return error_response(e);
    } catch (const json::exception& e) {
      return error_response(Error(ErrorCode::BadRequest, e.what()));
    } catch (const std::logic_error& e) {
      return error_response(Error(ErrorCode::BadRequest, e.what()));
    }
  }

  /// Copy of the current store, taken under the read lock.
  ProjectStore snapshot() const {
    std::shared_lock lock(mutex_);
    return store_;
  }

  /// Registers every /api route on `server`.
  void bind(httplib::Server& server) {
    auto adapter = [this](const httplib::Request& in, httplib::Response& out) {
      Request req;
      req.method = in.method;
      req.path = in.path;
      for (const auto& [k, v] : in.params) req.query.emplace(k, v);
      req.body = in.body;
      auto auth = in.get_header_value("Authorization");
      if (auth.rfind("Bearer ", 0) == 0) req.bearer_token = auth.substr(7);
      auto res = handle(req);
      out.status = res.status;
      out.set_content(res.body, res.content_type);
    };
    server.Get(R"(/api/.*)", adapter);
    server.Post(R"(/api/.*)", adapter);
  }

 private:
  const User& authenticate(const Request& req) const {
    if (req.bearer_token.empty()) throw Error(ErrorCode::Unauthorized, "missing bearer token");
    const auto* u = users_.find(req.bearer_token);
    if (!u) throw Error(ErrorCode::Unauthorized, "unknown token");
    return *u;
  }

  static SynsetId id_from(const std::smatch& m) {
    auto pos = parse_pos(m[1].str());
    if (!pos || !is_offset_string(m[2].str()))
      throw Error(ErrorCode::BadRequest, "bad synset path " + m[1].str() + "/" + m[2].str());
    return SynsetId(*pos, m[2].str());
  }

  static std::optional<std::string> param(const Request& req, const std::string& key) {
    auto it = req.query.find(key);
    if (it == req.query.end() || it->second.empty()) return std::nullopt;
    return it->second;
  }

  static Response ok(const json& body) { return {200, body.dump()}; }
  static Response text_response(std::string body, std::string type) { return {200, std::move(body), std::move(type)}; }

  Response route(const Request& req, const User& user) {
    static const std::regex record_re(R"(^/api/synsets/([a-z_]+)/([0-9]+)$)");
    static const std::regex transition_re(R"(^/api/synsets/([a-z_]+)/([0-9]+)/transition$)");
    static const std::regex claim_re(R"(^/api/synsets/([a-z_]+)/([0-9]+)/claim$)");
    static const std::regex validate_re(R"(^/api/validate/([a-z_]+)/([0-9]+)$)");
    std::smatch m;
    const bool get = req.method == "GET";
    const bool post = req.method == "POST";

    if (get && req.path == "/api/synsets") return list_queue(req, user);
    if (get && std::regex_match(req.path, m, record_re)) return get_record(id_from(m), user);
    if (post && std::regex_match(req.path, m, transition_re)) return post_transition(id_from(m), req, user);
    if (post && std::regex_match(req.path, m, claim_re)) return post_claim(id_from(m), user);
    if (get && std::regex_match(req.path, m, validate_re)) return get_validate(id_from(m));
    if (get && req.path == "/api/stats/inventory") return get_inventory(req);
    if (get && req.path == "/api/stats/diff") return get_diff(req);
    if (get && req.path == "/api/stats/loops") return get_loops(req);
    if (post && req.path == "/api/import/wndb") return post_import_wndb(req, user);
    if (post && req.path == "/api/import/prior") return post_import_prior(req, user);
    if (get && req.path == "/api/export") return get_export(req);
    throw Error(ErrorCode::NotFound, "no route " + req.method + " " + req.path);
  }

  json summary(const TranslationRecord& r) const {
    json j{{"id", r.source},        {"pos", r.source.pos()}, {"offset", r.source.offset()},
           {"state", r.state},      {"revision", r.revision}, {"is_gap", r.is_gap},
           {"claimed_by", nullptr}};
    if (const auto* c = store_.claims().claim(r.source)) j["claimed_by"] = c->actor;
    return j;
  }

  Response list_queue(const Request& req, const User& user) {
    std::optional<WorkflowState> state;
    if (auto s = param(req, "state")) {
      state = parse_state(*s);
      if (!state) throw Error(ErrorCode::BadRequest, "unknown state " + *s);
    }
    std::optional<Pos> pos;
    if (auto p = param(req, "pos")) {
      pos = parse_pos(*p);
      if (!pos) throw Error(ErrorCode::BadRequest, "unknown pos " + *p);
    }
    const long page = std::stol(param(req, "page").value_or("1"));
    const long page_size = std::clamp(std::stol(param(req, "page_size").value_or("50")), 1L, 500L);
    if (page < 1) throw Error(ErrorCode::BadRequest, "page starts at 1");

    std::shared_lock lock(mutex_);
    std::vector<const TranslationRecord*> queue;
    for (const auto& [id, r] : store_.lexicon().records) {
      if (!in_queue(user.role, r.state)) continue;
      if (state && r.state != *state) continue;
      if (pos && pos_group(r.source.pos()) != pos_group(*pos)) continue;
      queue.push_back(&r);
    }
    std::stable_sort(queue.begin(), queue.end(),
                     [](const auto* a, const auto* b) { return a->revision < b->revision; });
    json items = json::array();
    const auto first = static_cast<std::size_t>((page - 1) * page_size);
    for (std::size_t i = first; i < queue.size() && i < first + static_cast<std::size_t>(page_size); ++i)
      items.push_back(summary(*queue[i]));
    return ok({{"page", page}, {"page_size", page_size}, {"total", queue.size()}, {"items", items}});
  }

  json view_json(const SynsetId& id, Role role) const {
    const auto& rec = store_.record(id);
    json j = workflow::view_for(rec, store_.lexicon().source(id), role);
    j["claimed_by"] = nullptr;
    if (const auto* c = store_.claims().claim(id)) j["claimed_by"] = c->actor;
    return j;
  }

  Response get_record(const SynsetId& id, const User& user) {
    std::shared_lock lock(mutex_);
    return ok(view_json(id, user.role));
  }

  Response post_transition(const SynsetId& id, const Request& req, const User& user) {
    auto body = json::parse(req.body.empty() ? "{}" : req.body);
    if (!body.is_object()) throw Error(ErrorCode::BadRequest, "body must be an object");
    if (!body.contains("action")) throw Error(ErrorCode::BadRequest, "action is required");
    if (!body.contains("expected_revision")) throw Error(ErrorCode::BadRequest, "expected_revision is required");
    workflow::ActionRequest action;
    action.action = body["action"].get<Action>();
    action.actor = user.id;
    action.role = user.role;
    action.note = body.value("note", std::string{});
    action.expected_revision = body["expected_revision"].get<std::int64_t>();
    if (body.contains("edits") && !body["edits"].is_null()) action.edits = body["edits"].get<workflow::RecordEdits>();

    std::unique_lock lock(mutex_);
    store_.transition(id, action, clock_());
    persist();
    return ok(view_json(id, user.role));
  }

  Response post_claim(const SynsetId& id, const User& user) {
    std::unique_lock lock(mutex_);
    const auto& c = store_.claim(id, user.id, user.role);
    json out{{"id", id}, {"actor", c.actor}, {"role", c.role}};
    persist();
    return ok(out);
  }

  Response get_validate(const SynsetId& id) {
    std::shared_lock lock(mutex_);
    const auto& rec = store_.record(id);
    auto findings = validation::all_findings(rec, store_.lexicon());
    return ok({{"id", id}, {"revision", rec.revision}, {"findings", findings}});
  }

  static bool wants_tsv(const Request& req) { return param(req, "format").value_or("json") == "tsv"; }

  Response get_inventory(const Request& req) {
    auto policy = stats::CountingPolicy::SubmittedOrLater;
    if (auto p = param(req, "policy")) {
      auto parsed = stats::parse_policy(*p);
      if (!parsed) throw Error(ErrorCode::BadRequest, "unknown policy " + *p);
      policy = *parsed;
    }
    std::shared_lock lock(mutex_);
    auto report = stats::inventory(store_.records(), policy);
    if (wants_tsv(req)) return text_response(stats::to_tsv(report), "text/tab-separated-values; charset=utf-8");
    return ok(report);
  }

  Response get_diff(const Request& req) {
    auto path = param(req, "baseline");
    if (!path) throw Error(ErrorCode::BadRequest, "baseline is required");
    auto baseline = load_baseline(*path);
    std::shared_lock lock(mutex_);
    auto diff = stats::enrichment_diff(baseline, store_.records());
    if (wants_tsv(req)) return text_response(stats::to_tsv(diff), "text/tab-separated-values; charset=utf-8");
    return ok(diff);
  }

  Response get_loops(const Request& req) {
    std::shared_lock lock(mutex_);
    auto m = stats::loop_metrics(store_.records());
    if (wants_tsv(req)) return text_response(stats::to_tsv(m), "text/tab-separated-values; charset=utf-8");
    return ok(m);
  }

  static void require_expert(const User& user) {
    if (user.role != Role::Expert) throw Error(ErrorCode::WrongQueue, "imports are restricted to the expert role");
  }

  Response post_import_wndb(const Request& req, const User& user) {
    require_expert(user);
    auto body = json::parse(req.body.empty() ? "{}" : req.body);
    auto dir = body.value("directory", std::string{});
    if (dir.empty()) throw Error(ErrorCode::BadRequest, "directory is required");
    auto loaded = wndb::load_source(dir);
    std::unique_lock lock(mutex_);
    auto summary = store_.add_sources(loaded.synsets);
    persist();
    json errors = json::array();
    for (const auto& e : loaded.report.errors) errors.push_back({{"file", e.file}, {"line", e.line}, {"reason", e.reason}});
    return ok({{"synsets_parsed", loaded.report.total_parsed()},
               {"sources_added", summary.sources_added},
               {"records_created", summary.records_created},
               {"errors", errors},
               {"warnings", loaded.report.warnings.size()}});
  }

  Response post_import_prior(const Request& req, const User& user) {
    require_expert(user);
    std::string tsv = req.body;
    if (auto j = json::parse(req.body, nullptr, false); !j.is_discarded() && j.is_object()) tsv = j.value("tsv", "");
    auto imported = wndb::import_prior_translations(tsv);
    std::unique_lock lock(mutex_);
    auto summary = store_.add_records(imported.records);
    persist();
    json errors = json::array();
    for (const auto& e : imported.errors) errors.push_back({{"line", e.line}, {"reason", e.reason}});
    return ok({{"records_created", summary.records_created},
               {"records_replaced", summary.records_replaced},
               {"skipped", summary.skipped},
               {"errors", errors}});
  }

  Response get_export(const Request& req) {
    auto format = param(req, "format").value_or("tsv");
    std::shared_lock lock(mutex_);
    if (format == "tsv")
      return text_response(exporter::to_tsv(store_.lexicon()), "text/tab-separated-values; charset=utf-8");
    if (format == "lmf") return text_response(exporter::to_lmf(store_.lexicon()), "application/xml; charset=utf-8");
    throw Error(ErrorCode::BadRequest, "format must be tsv or lmf");
  }

  static std::vector<TranslationRecord> load_baseline(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".tsv")
      return wndb::import_prior_translations(wndb::read_file(path)).records;
    return ProjectStore::load(path).records();
  }

  void persist() {
    if (path_) store_.save(*path_);
  }

  ProjectStore store_;
  UserConfig users_;
  std::optional<std::filesystem::path> path_;
  Clock clock_;
  mutable std::shared_mutex mutex_;
};

}  // namespace lexibridge::service
