#pragma once

// Rule-based prompt synthesis from component specs and construction of the
// JSON/prompt paired dataset.

#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cogen/component_model.hpp"
#include "cogen/presets.hpp"
#include "cogen/prompt_parser.hpp"

namespace cogen {

struct PromptTemplate {
  std::string_view id;
  std::string_view pattern;  // {style} {kind} {p1} {p2}
  std::size_t property_count;
};

// Every pattern starts "<verb> a {style} {kind}"; all styles begin with a
// consonant.
inline constexpr std::array<PromptTemplate, 10> kTemplates{{
    {"generate-with-1", "Generate a {style} {kind} with {p1}", 1},
    {"create-with-1", "Create a {style} {kind} with {p1}", 1},
    {"make-has-1", "Make a {style} {kind} that has {p1}", 1},
    {"generate-with-2", "Generate a {style} {kind} with {p1} and {p2}", 2},
    {"create-having-2", "Create a {style} {kind} having {p1} and {p2}", 2},
    {"make-has-2", "Make a {style} {kind} that has {p1} and {p2}", 2},
    {"create-0", "Create a {style} {kind}", 0},
    {"generate-0", "Generate a {style} {kind}", 0},
    {"make-0", "Make a {style} {kind}", 0},
    {"design-0", "Design a {style} {kind}", 0},
}};

/// Properties a prompt may verbalize, in canonical order.
inline constexpr std::array<std::string_view, 4> kMentionable{
    props::kBorderRadius, props::kSize, props::kEffect, props::kStrokeWeight};

inline constexpr std::size_t kMaxMentioned = 2;

struct SynthesizedPrompt {
  std::string text;
  std::string_view template_id;
  /// What the prompt states, keyed like ComponentIntent::explicit_properties.
  std::vector<std::pair<std::string, PropertyValue>> mentioned;
};

namespace detail {

// Raw engine output reduced by modulo; std distributions are
// implementation-defined and datasets must be byte-identical everywhere.
inline std::size_t draw(std::mt19937_64& rng, std::size_t n) {
  return static_cast<std::size_t>(rng() % n);
}

inline std::string with_article(const std::string& phrase) {
  const char c = static_cast<char>(std::tolower(static_cast<unsigned char>(phrase.front())));
  const bool vowel = c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
  return (vowel ? "an " : "a ") + phrase;
}

inline std::string capitalized(std::string text) {
  if (!text.empty()) text[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
  return text;
}

inline void replace_all(std::string& text, std::string_view from, const std::string& to) {
  for (auto pos = text.find(from); pos != std::string::npos; pos = text.find(from, pos)) {
    text.replace(pos, from.size(), to);
    pos += to.size();
  }
}

inline std::optional<std::string> size_variant(const VariantMap& variants) {
  const auto* value = find_variant(variants, "Size");
  if (!value) return std::nullopt;
  auto folded = lower(trim(*value));
  if (folded == "small" || folded == "large") return folded;
  return std::nullopt;
}

}  // namespace detail

/// Properties of `spec` that the lexicon can verbalize.
inline std::vector<std::pair<std::string, PropertyValue>> mentionable_properties(
    const FlatComponentSpec& spec, const Lexicon& lexicon = Lexicon::builtin()) {
  std::vector<std::pair<std::string, PropertyValue>> out;
  for (auto key : kMentionable) {
    if (key == props::kBorderRadius && spec.border_radius) {
      out.emplace_back(key, round2(*spec.border_radius));
    } else if (key == props::kSize) {
      if (auto size = detail::size_variant(spec.variant_properties)) out.emplace_back(key, *size);
    } else if (key == props::kEffect && spec.effect &&
               lexicon.surface_for(LexCategory::Effect, spec.effect->effect_name)) {
      out.emplace_back(key, spec.effect->effect_name);
    } else if (key == props::kStrokeWeight && spec.stroke_weight) {
      out.emplace_back(key, round2(*spec.stroke_weight));
    }
  }
  return out;
}

inline std::string verbalize(const std::string& key, const PropertyValue& value,
                             const Lexicon& lexicon = Lexicon::builtin()) {
  if (key == props::kEffect) {
    return detail::with_article(
        *lexicon.surface_for(LexCategory::Effect, std::get<std::string>(value)) + " effect");
  }
  const auto phrase = lexicon.surface_for(LexCategory::Property, key).value_or(key);
  if (const auto* size = std::get_if<std::string>(&value)) {
    return detail::with_article(phrase) + " of " + *size;
  }
  return detail::with_article(phrase) + " of " + format_number(std::get<double>(value));
}

/// Kind as written in prompts: the lexicon's preferred surface, capitalized.
inline std::string kind_phrase(ComponentKind kind, const Lexicon& lexicon = Lexicon::builtin()) {
  return detail::capitalized(
      lexicon.surface_for(LexCategory::Kind, std::string(display_name(kind)))
          .value_or(std::string(display_name(kind))));
}

inline SynthesizedPrompt synthesize_prompt_detailed(const FlatComponentSpec& spec,
                                                    std::uint64_t seed,
                                                    const Lexicon& lexicon = Lexicon::builtin()) {
  std::mt19937_64 rng(seed);
  auto candidates = mentionable_properties(spec, lexicon);
  if (candidates.size() > kMaxMentioned) {
    for (std::size_t i = 0; i < kMaxMentioned; ++i) {
      std::swap(candidates[i], candidates[i + detail::draw(rng, candidates.size() - i)]);
    }
    candidates.resize(kMaxMentioned);
  }

  std::vector<const PromptTemplate*> applicable;
  for (const auto& t : kTemplates) {
    if (t.property_count == candidates.size()) applicable.push_back(&t);
  }
  if (applicable.empty()) {
    throw Error(ErrorCode::NoApplicableTemplate,
                "no template mentions " + std::to_string(candidates.size()) + " properties");
  }
  const auto& chosen = *applicable[detail::draw(rng, applicable.size())];

  SynthesizedPrompt out;
  out.template_id = chosen.id;
  out.text = std::string(chosen.pattern);
  detail::replace_all(out.text, "{style}", std::string(display_name(spec.name.style)));
  detail::replace_all(out.text, "{kind}", kind_phrase(spec.name.kind, lexicon));
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    detail::replace_all(out.text, i == 0 ? "{p1}" : "{p2}",
                        verbalize(candidates[i].first, candidates[i].second, lexicon));
  }
  out.mentioned = std::move(candidates);
  return out;
}

/// Deterministic (per seed) natural-language prompt describing `spec`.
inline std::string synthesize_prompt(const FlatComponentSpec& spec, std::uint64_t seed,
                                     const Lexicon& lexicon = Lexicon::builtin()) {
  return synthesize_prompt_detailed(spec, seed, lexicon).text;
}

// ---------------------------------------------------------------------------
// Dataset

using SpecDocument = std::variant<FlatComponentSpec, NestedNode>;

inline json to_json(const SpecDocument& doc) {
  return std::visit([](const auto& d) { return to_json(d); }, doc);
}

inline FlatComponentSpec flat_view(const SpecDocument& doc) {
  if (const auto* flat = std::get_if<FlatComponentSpec>(&doc)) return *flat;
  return flatten(std::get<NestedNode>(doc));
}

struct DatasetRecord {
  std::size_t id = 0;
  json document;
  std::string prompt;
  std::string split;

  bool operator==(const DatasetRecord&) const = default;
};

struct SplitRatios {
  double train = 0.8;
  double val = 0.1;
  double test = 0.1;
};

namespace detail {

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

}  // namespace detail

/// One record per spec per variant, shuffled and split deterministically by
/// `seed`. Records come back in split order (train, val, test).
inline std::vector<DatasetRecord> build_dataset(std::span<const SpecDocument> specs,
                                                std::uint64_t seed, SplitRatios ratios = {},
                                                std::size_t variants_per_spec = 1,
                                                const Lexicon& lexicon = Lexicon::builtin()) {
  if (specs.empty() || variants_per_spec == 0) {
    throw Error(ErrorCode::EmptyInput, "dataset needs at least one spec");
  }
  const double fractions[] = {ratios.train, ratios.val, ratios.test};
  for (double f : fractions) {
    if (!(f >= 0.0 && f <= 1.0)) throw Error(ErrorCode::InvalidRatios, "ratio outside [0,1]");
  }
  if (std::abs(ratios.train + ratios.val + ratios.test - 1.0) > 1e-9) {
    throw Error(ErrorCode::InvalidRatios, "split ratios must sum to 1");
  }

  std::vector<DatasetRecord> records;
  records.reserve(specs.size() * variants_per_spec);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto flat = flat_view(specs[i]);
    const auto document = to_json(specs[i]);
    for (std::size_t v = 0; v < variants_per_spec; ++v) {
      DatasetRecord rec;
      rec.id = records.size();
      rec.document = document;
      rec.prompt = synthesize_prompt(flat, detail::mix_seed(seed, i, v), lexicon);
      records.push_back(std::move(rec));
    }
  }

  std::mt19937_64 rng(seed);
  for (std::size_t i = records.size(); i > 1; --i) {
    std::swap(records[i - 1], records[detail::draw(rng, i)]);
  }

  const auto n = records.size();
  const auto n_train = static_cast<std::size_t>(std::floor(ratios.train * n + 1e-9));
  const auto n_val =
      std::min(n - n_train, static_cast<std::size_t>(std::floor(ratios.val * n + 1e-9)));
  for (std::size_t i = 0; i < n; ++i) {
    records[i].split = i < n_train ? "train" : (i < n_train + n_val ? "val" : "test");
  }
  return records;
}

inline std::string to_jsonl(std::span<const DatasetRecord> records) {
  std::string out;
  for (const auto& r : records) {
    json line{{"json", r.document}, {"prompt", r.prompt}, {"split", r.split}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

/// Parses JSONL produced by to_jsonl; ids follow line order.
inline std::vector<DatasetRecord> from_jsonl(std::string_view text) {
  std::vector<DatasetRecord> out;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = detail::trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    json row;
    try {
      row = json::parse(line);
    } catch (const json::parse_error& e) {
      throw Error(ErrorCode::MalformedDocument,
                  "dataset line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!row.is_object() || !row.contains("json") || !row.contains("prompt") ||
        !row["prompt"].is_string()) {
      throw Error(ErrorCode::MalformedDocument,
                  "dataset line " + std::to_string(line_no) + " lacks json/prompt");
    }
    DatasetRecord rec;
    rec.id = out.size();
    rec.document = row["json"];
    rec.prompt = row["prompt"].get<std::string>();
    rec.split = row.value("split", "");
    out.push_back(std::move(rec));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Synthetic corpus

/// Randomized flat specs derived from the presets: random kind/style, subtype,
/// size variant, effect, border radius and stroke weight. Values are already
/// normalized to serialization precision.
inline std::vector<FlatComponentSpec> synthetic_specs(
    std::size_t count, std::uint64_t seed,
    const StylePresetTable& presets = StylePresetTable::builtin()) {
  static constexpr std::array<std::string_view, 4> kSubtypes{"Default", "Light", "Dark", ""};
  static constexpr std::array<std::string_view, 5> kEffects{"DROP_SHADOW", "INNER_SHADOW",
                                                            "LAYER_BLUR", "BACKGROUND_BLUR", ""};
  std::mt19937_64 rng(seed);
  std::vector<FlatComponentSpec> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto kind = kAllKinds[detail::draw(rng, kAllKinds.size())];
    const auto style = kAllStyles[detail::draw(rng, kAllStyles.size())];
    auto spec = presets.at(kind, style);
    const auto subtype = kSubtypes[detail::draw(rng, kSubtypes.size())];
    spec.name.subtype =
        subtype.empty() ? std::nullopt : std::optional<std::string>(std::string(subtype));
    switch (detail::draw(rng, 3)) {
      case 0: set_variant(spec.variant_properties, "Size", "Small"); break;
      case 1: set_variant(spec.variant_properties, "Size", "Large"); break;
      default: break;
    }
    const auto effect = kEffects[detail::draw(rng, kEffects.size())];
    if (effect.empty()) {
      spec.effect.reset();
    } else {
      spec.effect = EffectSpec{std::string(effect), {0.0, 0.0, 0.0, 0.25}};
    }
    // 0.25 steps up to 24px; none a quarter of the time.
    if (detail::draw(rng, 4) == 0) {
      spec.border_radius.reset();
    } else {
      spec.border_radius = round2(static_cast<double>(detail::draw(rng, 97)) * 0.25);
    }
    if (detail::draw(rng, 4) == 0) {
      spec.stroke_weight.reset();
    } else {
      spec.stroke_weight = round2(static_cast<double>(1 + detail::draw(rng, 16)) * 0.25);
    }
    spec.width = round2(spec.width + static_cast<double>(detail::draw(rng, 41)) - 20.0);
    spec.height = round2(spec.height + static_cast<double>(detail::draw(rng, 9)) - 4.0);
    spec.x = round2(static_cast<double>(detail::draw(rng, 2001)) * 0.5);
    spec.y = round2(static_cast<double>(detail::draw(rng, 2001)) * 0.5);
    out.push_back(std::move(spec));
  }
  return out;
}

}  // namespace cogen
