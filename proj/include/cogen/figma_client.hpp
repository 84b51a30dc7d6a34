#pragma once

// Figma REST client: GET /v1/files/{key} with retry on 429 and an on-disk
// cache (`<file_key>.json` plus an `index.json` manifest) for offline runs.

#include <chrono>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <thread>

#include <httplib.h>

#include "cogen/figma_extract.hpp"

namespace cogen {

struct FigmaClientOptions {
  std::string base_url = "https://api.figma.com";
  std::filesystem::path cache_dir = ".cogen-cache";
  bool offline = false;
  int max_retries = 3;
  std::chrono::milliseconds base_delay{500};
  std::chrono::seconds timeout{30};
  std::uint64_t jitter_seed = 0;
  /// Injected for tests; defaults to std::this_thread::sleep_for.
  std::function<void(std::chrono::milliseconds)> sleep;
};

namespace detail {

inline std::string iso8601(std::chrono::system_clock::time_point tp) {
  const auto t = std::chrono::system_clock::to_time_t(tp);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::mutex& cache_mutex(const std::string& path_key) {
  static std::mutex registry_guard;
  static std::map<std::string, std::unique_ptr<std::mutex>> registry;
  std::lock_guard lock(registry_guard);
  auto& slot = registry[path_key];
  if (!slot) slot = std::make_unique<std::mutex>();
  return *slot;
}

inline void write_atomic(const std::filesystem::path& path, std::string_view bytes) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  std::filesystem::rename(tmp, path);
}

inline void check_file_key(const std::string& key) {
  const bool ok = !key.empty() && std::all_of(key.begin(), key.end(), [](unsigned char c) {
    return std::isalnum(c) || c == '-' || c == '_';
  });
  if (!ok) throw Error(ErrorCode::InvalidValue, "invalid file key '" + key + "'").with_subject(key);
}

}  // namespace detail

class FigmaClient {
 public:
  explicit FigmaClient(FigmaClientOptions options = {}) : options_(std::move(options)) {
    if (!options_.sleep) {
      options_.sleep = [](std::chrono::milliseconds d) { std::this_thread::sleep_for(d); };
    }
  }

  const FigmaClientOptions& options() const { return options_; }

  std::filesystem::path cache_path(const std::string& file_key) const {
    return options_.cache_dir / (file_key + ".json");
  }

  /// Fetches and caches a file, or serves the cached copy when offline.
  RawDocument fetch_file(const std::string& file_key, const std::string& token) {
    detail::check_file_key(file_key);
    if (options_.offline) return load_cached(file_key);
    if (token.empty()) throw Error(ErrorCode::AuthError, "no Figma token (set FIGMA_TOKEN or --token)");

    httplib::Client client(options_.base_url);
    client.set_connection_timeout(options_.timeout);
    client.set_read_timeout(options_.timeout);
    const httplib::Headers headers{{"X-Figma-Token", token}};
    std::mt19937_64 jitter(options_.jitter_seed);

    for (int attempt = 0;; ++attempt) {
      auto res = client.Get("/v1/files/" + file_key, headers);
      if (!res) {
        throw Error(ErrorCode::TransportError,
                    "request to " + options_.base_url + " failed: " + httplib::to_string(res.error()));
      }
      switch (res->status) {
        case 200: {
          auto doc = parse_document(res->body, file_key);
          store(doc);
          return doc;
        }
        case 401:
        case 403:
          throw Error(ErrorCode::AuthError,
                      "Figma rejected the token (HTTP " + std::to_string(res->status) + ")");
        case 404:
          throw Error(ErrorCode::NotFound, "file '" + file_key + "' not found").with_subject(file_key);
        case 429: {
          double retry_after = 0.0;
          if (res->has_header("Retry-After")) {
            try {
              retry_after = std::stod(res->get_header_value("Retry-After"));
            } catch (const std::exception&) {
            }
          }
          if (attempt >= options_.max_retries) {
            throw Error(ErrorCode::RateLimited,
                        "rate limited after " + std::to_string(attempt + 1) + " attempts")
                .with_retry_after(retry_after);
          }
          const auto backoff = options_.base_delay * (1LL << attempt);
          const auto spread = static_cast<std::uint64_t>(options_.base_delay.count()) + 1;
          const std::chrono::milliseconds with_jitter =
              backoff + std::chrono::milliseconds(static_cast<long long>(jitter() % spread));
          const std::chrono::milliseconds hinted = std::chrono::milliseconds(static_cast<long long>(retry_after * 1000.0));
          options_.sleep(std::max(with_jitter, hinted));
          break;
        }
        default:
          throw Error(ErrorCode::TransportError,
                      "unexpected HTTP " + std::to_string(res->status) + " from Figma");
      }
    }
  }

  RawDocument load_cached(const std::string& file_key) const {
    detail::check_file_key(file_key);
    const auto path = cache_path(file_key);
    if (!std::filesystem::exists(path)) {
      throw Error(ErrorCode::NotFound, "no cached copy of '" + file_key + "' in " +
                                           options_.cache_dir.string())
          .with_subject(file_key);
    }
    std::lock_guard lock(detail::cache_mutex(path.string()));
    auto doc = parse_document(read_file(path), file_key);
    auto index = read_index();
    if (auto it = index.find(file_key); it != index.end()) {
      std::tm tm{};
      const auto stamp = it->value("retrieved_at", "");
      if (strptime(stamp.c_str(), "%Y-%m-%dT%H:%M:%SZ", &tm)) {
        doc.retrieved_at = std::chrono::system_clock::from_time_t(timegm(&tm));
      }
    }
    return doc;
  }

 private:
  json read_index() const {
    const auto path = options_.cache_dir / "index.json";
    if (!std::filesystem::exists(path)) return json::object();
    try {
      auto index = json::parse(read_file(path));
      return index.is_object() ? index : json::object();
    } catch (const json::exception&) {
      return json::object();
    }
  }

  void store(const RawDocument& doc) const {
    std::filesystem::create_directories(options_.cache_dir);
    const auto path = cache_path(doc.file_key);
    {
      std::lock_guard lock(detail::cache_mutex(path.string()));
      detail::write_atomic(path, doc.raw_text);
    }
    const auto index_path = options_.cache_dir / "index.json";
    std::lock_guard lock(detail::cache_mutex(index_path.string()));
    auto index = read_index();
    index[doc.file_key] = {{"path", doc.file_key + ".json"},
                           {"retrieved_at", detail::iso8601(doc.retrieved_at)},
                           {"bytes", doc.raw_text.size()}};
    detail::write_atomic(index_path, index.dump(2));
  }

  FigmaClientOptions options_;
};

}  // namespace cogen
