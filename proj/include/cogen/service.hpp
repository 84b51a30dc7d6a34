#pragma once

// Run configuration (flags > env > config file) and the local HTTP service
// used by the Figma plugin.

#include <charconv>
#include <cstdlib>
#include <map>
#include <functional>
#include <optional>
#include <string>

#include <httplib.h>

#include "cogen/json_emitter.hpp"
#include "cogen/model_adapter.hpp"
#include "cogen/presets.hpp"
#include "cogen/prompt_parser.hpp"
#include "cogen/prompt_synthesis.hpp"

namespace cogen {

inline constexpr int kDefaultPort = 8787;
inline constexpr const char* kLocalhost = "127.0.0.1";

struct RunConfig {
  std::string adapter = "generator";
  SchemaKind schema = SchemaKind::Flat;
  std::string presets_path;  // empty: built-in table
  std::string lexicon_path;  // empty: built-in lexicon
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string cache_dir = ".cogen-cache";
  std::string token;
  std::string bind = kLocalhost;
  int port = kDefaultPort;
};

inline SchemaKind parse_schema(std::string_view text) {
  const auto t = detail::lower(detail::trim(text));
  if (t == "flat") return SchemaKind::Flat;
  if (t == "nested") return SchemaKind::Nested;
  throw Error(ErrorCode::InvalidValue, "schema must be flat or nested, got '" + std::string(text) + "'")
      .with_subject(std::string(text));
}

inline std::string_view schema_name(SchemaKind s) {
  return s == SchemaKind::Nested ? "nested" : s == SchemaKind::Flat ? "flat" : "auto";
}

namespace detail {

inline std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [p, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || p != end || text.empty()) {
    throw Error(ErrorCode::InvalidValue, key + " must be a non-negative integer, got '" + text + "'")
        .with_subject(key);
  }
  return v;
}

inline std::string layer_string(const json& value) {
  return value.is_string() ? value.get<std::string>() : value.dump();
}

// Applies one layer of string settings onto the config.
inline void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "adapter") cfg.adapter = value;
  else if (key == "schema") cfg.schema = parse_schema(value);
  else if (key == "presets") cfg.presets_path = value;
  else if (key == "lexicon") cfg.lexicon_path = value;
  else if (key == "seed") cfg.seed = parse_u64(key, value);
  else if (key == "out_dir") cfg.out_dir = value;
  else if (key == "cache_dir") cfg.cache_dir = value;
  else if (key == "token") cfg.token = value;
  else if (key == "bind") cfg.bind = value;
  else if (key == "port") {
    const auto p = parse_u64(key, value);
    if (p > 65535) throw Error(ErrorCode::InvalidValue, "port out of range").with_subject(key);
    cfg.port = static_cast<int>(p);
  } else {
    throw Error(ErrorCode::InvalidValue, "unknown config key '" + key + "'").with_subject(key);
  }
}

}  // namespace detail

/// Config keys and their environment variables.
inline const std::vector<std::pair<std::string, std::string>>& config_env_vars() {
  static const std::vector<std::pair<std::string, std::string>> vars{
      {"adapter", "COGEN_ADAPTER"}, {"schema", "COGEN_SCHEMA"},   {"presets", "COGEN_PRESETS"},
      {"lexicon", "COGEN_LEXICON"}, {"seed", "COGEN_SEED"},       {"out_dir", "COGEN_OUT_DIR"},
      {"cache_dir", "COGEN_CACHE_DIR"}, {"token", "FIGMA_TOKEN"}, {"bind", "COGEN_BIND"},
      {"port", "COGEN_PORT"}};
  return vars;
}

using EnvLookup = std::function<std::optional<std::string>(const std::string&)>;

inline EnvLookup process_env() {
  return [](const std::string& name) -> std::optional<std::string> {
    const char* v = std::getenv(name.c_str());
    return v ? std::optional<std::string>(v) : std::nullopt;
  };
}

/// Resolves settings with precedence flags > env > config file > defaults.
/// `file_layer` is the parsed config file (an object, or null for none);
/// `flags` holds only the flags the user actually passed.
inline RunConfig resolve_config(const json& file_layer, const EnvLookup& env,
                                const std::map<std::string, std::string>& flags) {
  RunConfig cfg;
  if (!file_layer.is_null()) {
    if (!file_layer.is_object()) throw Error(ErrorCode::InvalidValue, "config file must hold an object");
    for (const auto& [k, v] : file_layer.items()) detail::apply_setting(cfg, k, detail::layer_string(v));
  }
  for (const auto& [key, var] : config_env_vars()) {
    if (auto v = env(var); v && !v->empty()) detail::apply_setting(cfg, key, *v);
  }
  for (const auto& [k, v] : flags) detail::apply_setting(cfg, k, v);
  if (cfg.port < 1024 || cfg.port > 65535) {
    throw Error(ErrorCode::InvalidValue, "port must be in [1024, 65535], got " + std::to_string(cfg.port))
        .with_subject("port");
  }
  return cfg;
}

// ---------------------------------------------------------------------------
// HTTP service

struct ServiceResponse {
  int status = 200;
  json body;
};

inline int http_status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoComponentKind: return 422;
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidCharacter:
    case ErrorCode::SchemaViolation:
    case ErrorCode::UnknownKind:
    case ErrorCode::UnknownStyle:
    case ErrorCode::WrongPartCount:
    case ErrorCode::InvalidValue:
    case ErrorCode::EmptyInput: return 400;
    default: return 500;
  }
}

inline ServiceResponse error_response(int status, std::string_view code, const std::string& message) {
  return {status, {{"error", {{"code", code}, {"message", message}}}}};
}

inline ServiceResponse error_response(const Error& e) {
  return error_response(http_status_for(e.code()), to_string(e.code()), e.what());
}

/// Request handlers are pure functions of the immutable tables, so requests
/// run concurrently without locking.
class Service {
 public:
  Service(const StylePresetTable& presets, const Lexicon& lexicon, SchemaKind schema = SchemaKind::Flat,
          std::uint64_t seed = 0)
      : presets_(&presets), lexicon_(&lexicon), schema_(schema), seed_(seed) {
    routes();
  }

  ServiceResponse handle_generate(std::string_view body) const {
    json req;
    if (auto bad = parse_body(body, req)) return *bad;
    if (!req.contains("prompt") || !req["prompt"].is_string() ||
        detail::trim(req["prompt"].get<std::string>()).empty()) {
      return error_response(400, "BadRequest", "body needs a nonempty string field 'prompt'");
    }
    try {
      auto schema = schema_;
      if (req.contains("schema")) {
        if (!req["schema"].is_string()) return error_response(400, "BadRequest", "'schema' must be a string");
        schema = parse_schema(req["schema"].get<std::string>());
      }
      const auto parsed = parse_intent_detailed(req["prompt"].get<std::string>(), *lexicon_);
      const auto tree = emit_nested(parsed.intent, *presets_);
      const json document =
          schema == SchemaKind::Nested ? to_json(tree) : to_json(emit_flat(parsed.intent, *presets_));
      auto instructions = to_json(map_to_figma(tree));
      validate_instructions(instructions);
      return {200,
              {{"json", document},
               {"schema", schema_name(schema)},
               {"instructions", std::move(instructions)},
               {"warnings", parsed.warnings}}};
    } catch (const Error& e) {
      return error_response(e);
    } catch (const std::exception& e) {
      return error_response(500, "InternalError", e.what());
    }
  }

  ServiceResponse handle_describe(std::string_view body) const {
    json req;
    if (auto bad = parse_body(body, req)) return *bad;
    if (!req.contains("json") || !(req["json"].is_object() || req["json"].is_string())) {
      return error_response(400, "BadRequest", "body needs a field 'json' (object or string)");
    }
    try {
      std::uint64_t seed = seed_;
      if (req.contains("seed")) {
        if (!req["seed"].is_number_unsigned()) {
          return error_response(400, "BadRequest", "'seed' must be a non-negative integer");
        }
        seed = req["seed"].get<std::uint64_t>();
      }
      const auto raw = req["json"].is_string() ? req["json"].get<std::string>() : req["json"].dump();
      const auto spec = spec_from_document(validate_json(raw));
      return {200, {{"prompt", synthesize_prompt(spec, seed, *lexicon_)}}};
    } catch (const Error& e) {
      return error_response(e);
    } catch (const std::exception& e) {
      return error_response(500, "InternalError", e.what());
    }
  }

  httplib::Server& server() { return server_; }

  /// Binds and serves until stop(). Returns false if the address is taken.
  bool listen(const std::string& host, int port) { return server_.listen(host, port); }

  /// Binds to a free port on host and returns it (for tests); serve with
  /// listen_after_bind().
  int bind_any(const std::string& host = kLocalhost) { return server_.bind_to_any_port(host); }
  bool listen_after_bind() { return server_.listen_after_bind(); }
  void stop() { server_.stop(); }
  void wait_until_ready() const { server_.wait_until_ready(); }

 private:
  static std::optional<ServiceResponse> parse_body(std::string_view body, json& out) {
    try {
      out = json::parse(body);
    } catch (const json::exception& e) {
      return error_response(400, "BadRequest", std::string("body is not JSON: ") + e.what());
    }
    if (!out.is_object()) return error_response(400, "BadRequest", "body must be a JSON object");
    return std::nullopt;
  }

  static void reply(httplib::Response& res, const ServiceResponse& r) {
    res.status = r.status;
    res.set_content(r.body.dump(), "application/json");
  }

  void routes() {
    // Figma plugin iframes send Origin: null, so any origin is allowed.
    server_.set_default_headers({{"Access-Control-Allow-Origin", "*"},
                                 {"Access-Control-Allow-Methods", "GET, POST, OPTIONS"},
                                 {"Access-Control-Allow-Headers", "Content-Type"}});
    server_.Options(R"(.*)", [](const httplib::Request&, httplib::Response& res) { res.status = 204; });
    server_.Get("/health", [](const httplib::Request&, httplib::Response& res) {
      reply(res, {200, {{"status", "ok"}}});
    });
    server_.Post("/generate", [this](const httplib::Request& req, httplib::Response& res) {
      reply(res, handle_generate(req.body));
    });
    server_.Post("/describe", [this](const httplib::Request& req, httplib::Response& res) {
      reply(res, handle_describe(req.body));
    });
    server_.set_error_handler([](const httplib::Request&, httplib::Response& res) {
      if (res.body.empty()) {
        reply(res, error_response(res.status, res.status == 404 ? "NotFound" : "HttpError",
                                  "HTTP " + std::to_string(res.status)));
      }
    });
    server_.set_exception_handler(
        [](const httplib::Request&, httplib::Response& res, std::exception_ptr ep) {
          std::string what = "unknown error";
          try {
            std::rethrow_exception(ep);
          } catch (const std::exception& e) {
            what = e.what();
          } catch (...) {
          }
          reply(res, error_response(500, "InternalError", what));
        });
  }

  const StylePresetTable* presets_;
  const Lexicon* lexicon_;
  SchemaKind schema_;
  std::uint64_t seed_;
  httplib::Server server_;
};

}  // namespace cogen
