// cogen: extract, synth, generate, describe, eval, serve.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "cogen/cogen.hpp"

namespace fs = std::filesystem;
using namespace cogen;

namespace {

enum Exit { kOk = 0, kOther = 1, kAuth = 2, kParse = 3, kIntent = 4 };

int exit_code_for(const Error& e) {
  auto code = e.code();
  if (code == ErrorCode::AdapterError && e.cause()) code = *e.cause();
  switch (code) {
    case ErrorCode::AuthError: return kAuth;
    case ErrorCode::SyntaxError:
    case ErrorCode::InvalidCharacter:
    case ErrorCode::SchemaViolation:
    case ErrorCode::MalformedDocument:
    case ErrorCode::MissingGeometry:
    case ErrorCode::DepthLimitExceeded:
    case ErrorCode::UnknownKind:
    case ErrorCode::UnknownStyle:
    case ErrorCode::WrongPartCount: return kParse;
    case ErrorCode::NoComponentKind:
    case ErrorCode::UnparseablePrompt: return kIntent;
    default: return kOther;
  }
}

void write_text(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::IoError, "cannot write " + path.string());
  out << text;
}

// Flags the user actually passed, keyed like the config file.
struct FlagLayer {
  std::map<std::string, std::string> values;
  std::vector<std::pair<CLI::Option*, std::string>> bound;

  template <typename T>
  CLI::Option* add(CLI::App* app, const std::string& flag, const std::string& key, T& target,
                   const std::string& help) {
    auto* opt = app->add_option(flag, target, help);
    bound.emplace_back(opt, key);
    return opt;
  }

  void collect() {
    for (auto& [opt, key] : bound) {
      if (opt->count() > 0) values[key] = opt->as<std::string>();
    }
  }
};

struct Tables {
  StylePresetTable presets;
  Lexicon lexicon;
};

Tables load_tables(const RunConfig& cfg) {
  return {cfg.presets_path.empty() ? StylePresetTable::builtin() : StylePresetTable::load(cfg.presets_path),
          cfg.lexicon_path.empty() ? Lexicon::builtin() : Lexicon::load(cfg.lexicon_path)};
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  for (const auto& part : detail::split(text, ',')) {
    out.push_back(detail::parse_u64("sizes", detail::trim(part)));
  }
  return out;
}

std::vector<SpecDocument> load_spec_dir(const fs::path& dir, SchemaKind schema) {
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<SpecDocument> out;
  for (const auto& f : files) {
    const auto doc = validate_json(read_file(f));
    if (doc.schema != schema) continue;
    if (schema == SchemaKind::Nested) {
      out.emplace_back(nested_from_json(doc.document));
    } else {
      out.emplace_back(flat_from_json(doc.document));
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate Figma component JSON from prompts and prompts from component JSON"};
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file (flags > env > config)")
      ->check(CLI::ExistingFile);

  FlagLayer flags;
  std::string s_adapter, s_schema, s_presets, s_lexicon, s_seed, s_out, s_cache, s_token, s_bind, s_port;

  // extract
  auto* extract = app.add_subcommand("extract", "Extract flat and nested JSON from a Figma file");
  std::string file_key, input_path, base_url = "https://api.figma.com";
  bool offline = false;
  auto* key_opt = extract->add_option("--file-key", file_key, "Figma file key");
  auto* path_opt = extract->add_option("--path", input_path, "Local Figma file JSON")->check(CLI::ExistingFile);
  key_opt->excludes(path_opt);
  extract->add_flag("--offline", offline, "Serve --file-key from the cache only");
  extract->add_option("--base-url", base_url, "Figma API base URL");
  flags.add(extract, "--token", "token", s_token, "Figma token (default: FIGMA_TOKEN)");
  flags.add(extract, "--out", "out_dir", s_out, "Output directory");
  flags.add(extract, "--cache-dir", "cache_dir", s_cache, "Cache directory");

  // synth
  auto* synth = app.add_subcommand("synth", "Build a prompt/JSON dataset");
  std::size_t count = 500, variants = 1;
  std::string dataset_out = "dataset.jsonl", specs_dir;
  synth->add_option("--count", count, "Synthetic specs to generate")->check(CLI::Range(1, 1000000));
  synth->add_option("--variants", variants, "Prompts per spec")->check(CLI::Range(1, 100));
  synth->add_option("--from", specs_dir, "Directory of component JSON files instead of synthetic specs")
      ->check(CLI::ExistingDirectory);
  synth->add_option("-o,--output", dataset_out, "JSONL output path");
  flags.add(synth, "--seed", "seed", s_seed, "RNG seed");
  flags.add(synth, "--schema", "schema", s_schema, "flat|nested");
  flags.add(synth, "--presets", "presets", s_presets, "Preset table JSON");
  flags.add(synth, "--lexicon", "lexicon", s_lexicon, "Lexicon JSON");

  // generate
  auto* generate = app.add_subcommand("generate", "Prompt to component JSON");
  std::string prompt, instructions_path;
  generate->add_option("prompt", prompt, "Prompt text")->required();
  generate->add_option("--emit-instructions", instructions_path, "Also write plugin instructions here");
  flags.add(generate, "--adapter", "adapter", s_adapter, "generator | exec:<command>");
  flags.add(generate, "--schema", "schema", s_schema, "flat|nested");
  flags.add(generate, "--presets", "presets", s_presets, "Preset table JSON");
  flags.add(generate, "--lexicon", "lexicon", s_lexicon, "Lexicon JSON");

  // describe
  auto* describe = app.add_subcommand("describe", "Component JSON to prompt");
  std::string json_path;
  describe->add_option("json", json_path, "Component JSON file")->required();
  flags.add(describe, "--seed", "seed", s_seed, "Template seed");
  flags.add(describe, "--lexicon", "lexicon", s_lexicon, "Lexicon JSON");

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate an adapter");
  std::string eval_dataset, sizes_text = "100,200,300,400,500", report_out, mode = "subset";
  eval->add_option("--dataset", eval_dataset, "Dataset JSONL (subset mode)")->check(CLI::ExistingFile);
  eval->add_option("--sizes", sizes_text, "Ascending subset sizes");
  eval->add_option("--out", report_out, "Write the JSON report here");
  eval->add_option("--mode", mode, "subset | success")->check(CLI::IsMember({"subset", "success"}));
  std::string exec_direction = "prompt_to_json";
  eval->add_option("--direction", exec_direction, "Direction of an exec: adapter")
      ->check(CLI::IsMember({"prompt_to_json", "json_to_prompt"}));
  flags.add(eval, "--adapter", "adapter", s_adapter, "describer | generator | exec:<command>");
  flags.add(eval, "--schema", "schema", s_schema, "flat|nested");
  flags.add(eval, "--seed", "seed", s_seed, "Describer seed");

  // serve
  auto* serve = app.add_subcommand("serve", "Local HTTP service for the Figma plugin");
  flags.add(serve, "--port", "port", s_port, "Port in [1024, 65535]");
  flags.add(serve, "--bind", "bind", s_bind, "Bind address (default 127.0.0.1)");
  flags.add(serve, "--schema", "schema", s_schema, "Default schema flat|nested");
  flags.add(serve, "--seed", "seed", s_seed, "Describe seed");
  flags.add(serve, "--presets", "presets", s_presets, "Preset table JSON");
  flags.add(serve, "--lexicon", "lexicon", s_lexicon, "Lexicon JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    flags.collect();
    json file_layer;
    if (!config_path.empty()) {
      try {
        file_layer = json::parse(read_file(config_path));
      } catch (const json::exception& e) {
        throw Error(ErrorCode::MalformedDocument, "config " + config_path + ": " + e.what());
      }
    }
    const auto cfg = resolve_config(file_layer, process_env(), flags.values);

    if (extract->parsed()) {
      if (file_key.empty() == input_path.empty()) {
        std::cerr << "extract: give exactly one of --file-key or --path\n";
        return kOther;
      }
      RawDocument doc;
      if (!input_path.empty()) {
        doc = load_file(input_path);
      } else {
        FigmaClientOptions opts;
        opts.base_url = base_url;
        opts.cache_dir = cfg.cache_dir;
        opts.offline = offline;
        doc = FigmaClient(opts).fetch_file(file_key, cfg.token);
      }
      std::vector<std::string> warnings;
      const auto components = extract_components(doc, &warnings);
      for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
      const fs::path out_dir = cfg.out_dir;
      for (const auto& c : components) {
        write_text(out_dir / (c.file_stem + ".flat.json"), canonical_dump(to_json(c.flat)) + "\n");
        write_text(out_dir / (c.file_stem + ".nested.json"), canonical_dump(to_json(c.nested)) + "\n");
      }
      std::cout << components.size() << " components written to " << out_dir.string() << "\n";
      return kOk;
    }

    if (synth->parsed()) {
      const auto tables = load_tables(cfg);
      std::vector<SpecDocument> specs;
      if (!specs_dir.empty()) {
        specs = load_spec_dir(specs_dir, cfg.schema);
      } else {
        for (auto& s : synthetic_specs(count, cfg.seed, tables.presets)) {
          if (cfg.schema == SchemaKind::Nested) {
            specs.emplace_back(nest_spec(s));
          } else {
            specs.emplace_back(std::move(s));
          }
        }
      }
      const auto records = build_dataset(specs, cfg.seed, {}, variants, tables.lexicon);
      write_text(dataset_out, to_jsonl(records));
      std::cout << records.size() << " records written to " << dataset_out << "\n";
      return kOk;
    }

    if (generate->parsed()) {
      const auto tables = load_tables(cfg);
      AdapterOptions opts;
      opts.schema = cfg.schema;
      opts.seed = cfg.seed;
      opts.presets = &tables.presets;
      opts.lexicon = &tables.lexicon;
      std::string raw;
      if (cfg.adapter == "generator") {
        raw = Generator(cfg.schema, tables.presets, tables.lexicon).generate_document(prompt).dump();
      } else {
        auto adapter = make_adapter(cfg.adapter, opts);
        raw = adapter->generate({Direction::PromptToJson, prompt, kDefaultMaxLength});
      }
      const auto doc = validate_json(raw, cfg.schema);
      for (const auto& w : doc.warnings) std::cerr << "warning: " << w << "\n";
      std::cout << canonical_dump(doc.document) << "\n";
      if (!instructions_path.empty()) {
        const auto tree = doc.schema == SchemaKind::Nested
                              ? nested_from_json(doc.document)
                              : emit_nested(parse_intent(prompt, tables.lexicon), tables.presets);
        auto payload = to_json(map_to_figma(tree));
        validate_instructions(payload);
        write_text(instructions_path, payload.dump(2) + "\n");
      }
      return kOk;
    }

    if (describe->parsed()) {
      const auto tables = load_tables(cfg);
      const auto doc = validate_json(read_file(json_path));
      std::cout << synthesize_prompt(spec_from_document(doc), cfg.seed, tables.lexicon) << "\n";
      return kOk;
    }

    if (eval->parsed()) {
      const auto tables = load_tables(cfg);
      AdapterOptions opts;
      opts.schema = cfg.schema;
      opts.seed = cfg.seed;
      opts.presets = &tables.presets;
      opts.lexicon = &tables.lexicon;
      opts.exec_direction = parse_direction(exec_direction).value_or(Direction::PromptToJson);
      json report;
      std::string text;
      if (mode == "success") {
        auto adapter = make_adapter(cfg.adapter, opts);
        const auto keys = default_dataset_keys(cfg.schema);
        const auto rows = success_rate_table(default_prompt_suite(), *adapter, keys, tables.lexicon);
        report = {{"adapter", adapter->name()}, {"rows", success_table_json(rows)}};
        text = success_table_text(rows);
      } else {
        if (eval_dataset.empty()) {
          std::cerr << "eval: --dataset is required in subset mode\n";
          return kOther;
        }
        auto adapter = make_adapter(cfg.adapter, opts);
        const auto records = from_jsonl(read_file(eval_dataset));
        const auto sizes = parse_sizes(sizes_text);
        const auto result = subset_eval(records, *adapter, sizes, tables.lexicon);
        report = to_json(result);
        text = subset_report_text(result);
      }
      std::cout << text;
      if (!report_out.empty()) write_text(report_out, report.dump(2) + "\n");
      return kOk;
    }

    if (serve->parsed()) {
      const auto tables = load_tables(cfg);
      Service service(tables.presets, tables.lexicon, cfg.schema, cfg.seed);
      std::cerr << "listening on http://" << cfg.bind << ":" << cfg.port << "\n";
      if (!service.listen(cfg.bind, cfg.port)) {
        std::cerr << "cannot bind " << cfg.bind << ":" << cfg.port << "\n";
        return kOther;
      }
      return kOk;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    const int code = exit_code_for(e);
    if (code == kIntent) {
      std::cerr << "hint: name a component kind, e.g. \"create a professional button\"\n";
    }
    return code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
  return kOther;
}
