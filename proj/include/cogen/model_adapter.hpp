#pragma once

// Text-to-text generation contract shared by the built-in deterministic
// engine and external (e.g. neural) models attached over a line protocol.

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "cogen/json_emitter.hpp"
#include "cogen/prompt_parser.hpp"
#include "cogen/prompt_synthesis.hpp"

namespace cogen {

enum class Direction { JsonToPrompt, PromptToJson };

constexpr std::string_view direction_name(Direction d) {
  return d == Direction::JsonToPrompt ? "json_to_prompt" : "prompt_to_json";
}

inline std::optional<Direction> parse_direction(std::string_view text) {
  const auto f = detail::fold(text);
  if (f == "jsontoprompt") return Direction::JsonToPrompt;
  if (f == "prompttojson") return Direction::PromptToJson;
  return std::nullopt;
}

inline constexpr std::size_t kDefaultMaxLength = 512;

struct GenerationRequest {
  Direction direction = Direction::PromptToJson;
  std::string input;
  std::size_t max_length = kDefaultMaxLength;  // tokens, as counted by tokenize()
};

class Adapter {
 public:
  virtual ~Adapter() = default;
  virtual std::string generate(const GenerationRequest& request) = 0;
  virtual std::string name() const = 0;
  virtual Direction native_direction() const = 0;
};

namespace detail {

inline void check_request(const GenerationRequest& request) {
  if (request.input.empty()) throw Error(ErrorCode::AdapterError, "empty generation input");
}

inline void check_length(const std::string& output, std::size_t max_length) {
  const auto tokens = tokenize(output).size();
  if (tokens > max_length) {
    throw Error(ErrorCode::AdapterError, "output has " + std::to_string(tokens) +
                                             " tokens, over max_length " +
                                             std::to_string(max_length));
  }
}

[[noreturn]] inline void rethrow_wrapped(const Error& e) {
  throw Error(ErrorCode::AdapterError, e.what()).with_cause(e.code()).with_subject(e.subject());
}

}  // namespace detail

/// Reads a validated component document (flat or nested) into a flat view.
inline FlatComponentSpec spec_from_document(const ValidatedDocument& doc) {
  return doc.schema == SchemaKind::Flat ? flat_from_json(doc.document)
                                        : flatten(nested_from_json(doc.document));
}

/// JSON -> prompt: validate_json, read the spec, synthesize_prompt.
class Describer final : public Adapter {
 public:
  explicit Describer(std::uint64_t seed = 0, const Lexicon& lexicon = Lexicon::builtin())
      : seed_(seed), lexicon_(&lexicon) {}

  std::string generate(const GenerationRequest& request) override {
    detail::check_request(request);
    if (request.direction != Direction::JsonToPrompt) {
      throw Error(ErrorCode::AdapterError, "describer only supports json_to_prompt");
    }
    std::string out;
    try {
      out = synthesize_prompt(spec_from_document(validate_json(request.input)), seed_, *lexicon_);
    } catch (const Error& e) {
      detail::rethrow_wrapped(e);
    }
    detail::check_length(out, request.max_length);
    return out;
  }

  std::string name() const override { return "describer"; }
  Direction native_direction() const override { return Direction::JsonToPrompt; }

 private:
  std::uint64_t seed_;
  const Lexicon* lexicon_;
};

/// Prompt -> JSON: parse_intent, emit_flat or emit_nested, compact dump.
class Generator final : public Adapter {
 public:
  explicit Generator(SchemaKind schema = SchemaKind::Flat,
                     const StylePresetTable& presets = StylePresetTable::builtin(),
                     const Lexicon& lexicon = Lexicon::builtin())
      : schema_(schema == SchemaKind::Nested ? SchemaKind::Nested : SchemaKind::Flat),
        presets_(&presets),
        lexicon_(&lexicon) {}

  /// Canonical document for a prompt; errors are not wrapped.
  json generate_document(std::string_view prompt) const {
    const auto intent = parse_intent(prompt, *lexicon_);
    return schema_ == SchemaKind::Nested ? to_json(emit_nested(intent, *presets_))
                                         : to_json(emit_flat(intent, *presets_));
  }

  std::string generate(const GenerationRequest& request) override {
    detail::check_request(request);
    if (request.direction != Direction::PromptToJson) {
      throw Error(ErrorCode::AdapterError, "generator only supports prompt_to_json");
    }
    std::string out;
    try {
      out = generate_document(request.input).dump();
    } catch (const Error& e) {
      detail::rethrow_wrapped(e);
    }
    detail::check_length(out, request.max_length);
    return out;
  }

  std::string name() const override {
    return schema_ == SchemaKind::Nested ? "generator(nested)" : "generator(flat)";
  }
  Direction native_direction() const override { return Direction::PromptToJson; }
  SchemaKind schema() const { return schema_; }

 private:
  SchemaKind schema_;
  const StylePresetTable* presets_;
  const Lexicon* lexicon_;
};

// ---------------------------------------------------------------------------
// External process adapter

namespace detail {

/// Whitespace-separated argv with single/double quotes and backslash escapes.
inline std::vector<std::string> split_command_line(std::string_view line) {
  std::vector<std::string> out;
  std::string current;
  bool in_token = false;
  char quote = 0;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else if (c == '\\' && quote == '"' && i + 1 < line.size()) {
        current += line[++i];
      } else {
        current += c;
      }
      continue;
    }
    if (c == '\'' || c == '"') {
      quote = c;
      in_token = true;
    } else if (c == '\\' && i + 1 < line.size()) {
      current += line[++i];
      in_token = true;
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      if (in_token) out.push_back(std::move(current));
      current.clear();
      in_token = false;
    } else {
      current += c;
      in_token = true;
    }
  }
  if (quote) throw Error(ErrorCode::SpawnError, "unterminated quote in command line");
  if (in_token) out.push_back(std::move(current));
  return out;
}

inline void ignore_sigpipe() {
  static const bool done = [] {
    struct sigaction sa {};
    sa.sa_handler = SIG_IGN;
    sigaction(SIGPIPE, &sa, nullptr);
    return true;
  }();
  (void)done;
}

}  // namespace detail

/// Child process speaking one JSON request per line on stdin and one JSON
/// response per line on stdout:
///   -> {"direction": "prompt_to_json", "input": "...", "max_length": 512}
///   <- {"output": "..."} or {"error": "..."}
/// One request is in flight at a time. After a timeout or protocol error the
/// child is killed and the adapter refuses further requests.
class ExternalAdapter final : public Adapter {
 public:
  ExternalAdapter(const std::string& command_line, std::chrono::milliseconds timeout,
                  Direction direction = Direction::PromptToJson)
      : command_(command_line), timeout_(timeout), direction_(direction) {
    detail::ignore_sigpipe();
    const auto argv_strings = detail::split_command_line(command_line);
    if (argv_strings.empty()) throw Error(ErrorCode::SpawnError, "empty adapter command");

    int to_child[2];
    int from_child[2];
    int exec_status[2];
    if (pipe2(to_child, O_CLOEXEC) != 0 || pipe2(from_child, O_CLOEXEC) != 0 ||
        pipe2(exec_status, O_CLOEXEC) != 0) {
      throw Error(ErrorCode::SpawnError, std::string("pipe: ") + std::strerror(errno));
    }
    std::vector<char*> argv;
    for (const auto& a : argv_strings) argv.push_back(const_cast<char*>(a.c_str()));
    argv.push_back(nullptr);

    pid_ = fork();
    if (pid_ < 0) throw Error(ErrorCode::SpawnError, std::string("fork: ") + std::strerror(errno));
    if (pid_ == 0) {
      // dup2 clears close-on-exec on the standard descriptors only.
      dup2(to_child[0], STDIN_FILENO);
      dup2(from_child[1], STDOUT_FILENO);
      execvp(argv[0], argv.data());
      const int err = errno;
      ssize_t ignored = write(exec_status[1], &err, sizeof err);
      (void)ignored;
      _exit(127);
    }
    close(to_child[0]);
    close(from_child[1]);
    close(exec_status[1]);
    in_fd_ = to_child[1];
    out_fd_ = from_child[0];

    int child_errno = 0;
    const auto n = read(exec_status[0], &child_errno, sizeof child_errno);
    close(exec_status[0]);
    if (n > 0) {
      shutdown();
      throw Error(ErrorCode::SpawnError,
                  "cannot execute '" + argv_strings[0] + "': " + std::strerror(child_errno))
          .with_subject(argv_strings[0]);
    }
  }

  ExternalAdapter(const ExternalAdapter&) = delete;
  ExternalAdapter& operator=(const ExternalAdapter&) = delete;

  ~ExternalAdapter() override { shutdown(); }

  std::string generate(const GenerationRequest& request) override {
    detail::check_request(request);
    std::lock_guard lock(mutex_);
    if (pid_ <= 0) throw Error(ErrorCode::AdapterError, "adapter process is not running");

    json frame{{"direction", direction_name(request.direction)},
               {"input", request.input},
               {"max_length", request.max_length}};
    const auto line = frame.dump() + "\n";
    if (!write_all(line)) {
      shutdown();
      throw Error(ErrorCode::ProtocolError, "adapter closed its input");
    }
    const auto response = read_line();
    json reply;
    try {
      reply = json::parse(response);
    } catch (const json::parse_error&) {
      shutdown();
      throw Error(ErrorCode::ProtocolError, "non-JSON response line: " + response.substr(0, 200));
    }
    if (reply.is_object() && reply.contains("output") && reply["output"].is_string()) {
      return reply["output"].get<std::string>();
    }
    if (reply.is_object() && reply.contains("error")) {
      const auto message =
          reply["error"].is_string() ? reply["error"].get<std::string>() : reply["error"].dump();
      throw Error(ErrorCode::AdapterError, "adapter reported: " + message);
    }
    shutdown();
    throw Error(ErrorCode::ProtocolError, "response needs 'output' or 'error': " + response);
  }

  std::string name() const override { return "exec:" + command_; }
  Direction native_direction() const override { return direction_; }

 private:
  bool write_all(std::string_view data) {
    while (!data.empty()) {
      const auto n = write(in_fd_, data.data(), data.size());
      if (n < 0) {
        if (errno == EINTR) continue;
        return false;
      }
      data.remove_prefix(static_cast<std::size_t>(n));
    }
    return true;
  }

  std::string read_line() {
    const auto deadline = std::chrono::steady_clock::now() + timeout_;
    while (true) {
      if (auto pos = buffer_.find('\n'); pos != std::string::npos) {
        auto line = buffer_.substr(0, pos);
        buffer_.erase(0, pos + 1);
        return line;
      }
      const auto remaining = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (remaining.count() <= 0) {
        shutdown();
        throw Error(ErrorCode::TimeoutError,
                    "no response within " + std::to_string(timeout_.count()) + " ms");
      }
      pollfd pfd{out_fd_, POLLIN, 0};
      const int ready = poll(&pfd, 1, static_cast<int>(remaining.count()));
      if (ready < 0 && errno == EINTR) continue;
      if (ready <= 0) continue;  // loop re-checks the deadline
      char chunk[4096];
      const auto n = read(out_fd_, chunk, sizeof chunk);
      if (n < 0 && errno == EINTR) continue;
      if (n <= 0) {
        shutdown();
        throw Error(ErrorCode::ProtocolError, "adapter exited before responding");
      }
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }

  void shutdown() {
    if (in_fd_ >= 0) close(in_fd_);
    if (out_fd_ >= 0) close(out_fd_);
    in_fd_ = out_fd_ = -1;
    if (pid_ > 0) {
      // Give a well-behaved child a moment to exit on EOF, then kill it.
      for (int i = 0; i < 20; ++i) {
        if (waitpid(pid_, nullptr, WNOHANG) == pid_) {
          pid_ = -1;
          return;
        }
        usleep(5000);
      }
      kill(pid_, SIGKILL);
      waitpid(pid_, nullptr, 0);
      pid_ = -1;
    }
  }

  std::string command_;
  std::chrono::milliseconds timeout_;
  Direction direction_;
  pid_t pid_ = -1;
  int in_fd_ = -1;
  int out_fd_ = -1;
  std::string buffer_;
  std::mutex mutex_;
};

struct AdapterOptions {
  SchemaKind schema = SchemaKind::Flat;
  std::uint64_t seed = 0;
  std::chrono::milliseconds timeout{10000};
  Direction exec_direction = Direction::PromptToJson;
  const StylePresetTable* presets = nullptr;
  const Lexicon* lexicon = nullptr;
};

/// `describer`, `generator` or `exec:<command line>`.
inline std::unique_ptr<Adapter> make_adapter(std::string_view spec, const AdapterOptions& options = {}) {
  const auto& presets = options.presets ? *options.presets : StylePresetTable::builtin();
  const auto& lexicon = options.lexicon ? *options.lexicon : Lexicon::builtin();
  if (spec == "describer") return std::make_unique<Describer>(options.seed, lexicon);
  if (spec == "generator") return std::make_unique<Generator>(options.schema, presets, lexicon);
  if (spec.substr(0, 5) == "exec:") {
    return std::make_unique<ExternalAdapter>(std::string(spec.substr(5)), options.timeout,
                                             options.exec_direction);
  }
  throw Error(ErrorCode::InvalidValue,
              "unknown adapter '" + std::string(spec) + "' (describer|generator|exec:<cmd>)");
}

}  // namespace cogen
