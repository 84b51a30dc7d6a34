#pragma once

// Grammar-based prompt parsing: a synonym lexicon, a tokenizer that merges
// multiword lexicon phrases, and the intent parser.

#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cogen/builtin_data.hpp"
#include "cogen/component_model.hpp"

namespace cogen {

enum class LexCategory { Kind, Style, Subtype, Size, Property, Effect, ColorWord };

struct LexEntry {
  LexCategory category;
  std::string target;  // canonical value: display name, property key, effect name...
};

/// Immutable synonym table. Surfaces are stored with words joined by `_` so a
/// merged token ("border_radius") looks itself up.
class Lexicon {
 public:
  static Lexicon from_json(const json& doc) {
    Lexicon lex;
    if (!doc.is_object()) throw Error(ErrorCode::MalformedDocument, "lexicon must be an object");
    lex.version_ = doc.value("version", 0);
    auto section = [&](const char* key, LexCategory category) {
      auto it = doc.find(key);
      if (it == doc.end()) return;
      for (const auto& [target, surfaces] : it->items()) {
        lex.ordered_[static_cast<int>(category)].push_back(target);
        for (const auto& surface : surfaces) {
          lex.add(surface.get<std::string>(), {category, target});
        }
      }
    };
    section("kinds", LexCategory::Kind);
    section("styles", LexCategory::Style);
    section("subtypes", LexCategory::Subtype);
    section("sizes", LexCategory::Size);
    section("properties", LexCategory::Property);
    section("effects", LexCategory::Effect);
    if (auto it = doc.find("color_words"); it != doc.end()) {
      for (const auto& [word, hex] : it->items()) {
        auto color = ColorValue::from_hex(hex.get<std::string>());
        if (!color) throw Error(ErrorCode::MalformedDocument, "bad color for '" + word + "'");
        lex.colors_.emplace(word, *color);
        lex.add(word, {LexCategory::ColorWord, word});
      }
    }
    for (const auto& p : doc.value("numeric_properties", std::vector<std::string>{})) {
      lex.numeric_.push_back(p);
    }
    for (const auto& p : doc.value("color_properties", std::vector<std::string>{})) {
      lex.color_props_.push_back(p);
    }
    // Kinds and styles are closed sets; every one needs a surface.
    for (auto kind : kAllKinds) {
      if (!lex.surface_for(LexCategory::Kind, std::string(display_name(kind)))) {
        throw Error(ErrorCode::MalformedDocument,
                    "lexicon has no surface for kind " + std::string(display_name(kind)));
      }
    }
    for (auto style : kAllStyles) {
      if (!lex.surface_for(LexCategory::Style, std::string(display_name(style)))) {
        throw Error(ErrorCode::MalformedDocument,
                    "lexicon has no surface for style " + std::string(display_name(style)));
      }
    }
    return lex;
  }

  static Lexicon load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open lexicon " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return from_json(json::parse(buf.str()));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedDocument, path.string() + ": " + e.what());
    }
  }

  static const Lexicon& builtin() {
    static const Lexicon lex = from_json(json::parse(builtin::kLexiconJson));
    return lex;
  }

  int version() const { return version_; }
  std::size_t max_words() const { return max_words_; }

  const LexEntry* find(std::string_view token) const {
    auto it = entries_.find(std::string(token));
    return it == entries_.end() ? nullptr : &it->second;
  }

  /// Preferred (first listed) surface for a canonical target, words separated
  /// by spaces.
  std::optional<std::string> surface_for(LexCategory category, const std::string& target) const {
    auto it = preferred_.find(key(category, target));
    if (it == preferred_.end()) return std::nullopt;
    return it->second;
  }

  /// Canonical targets of a category, in file order.
  const std::vector<std::string>& targets(LexCategory category) const {
    return ordered_[static_cast<int>(category)];
  }

  bool is_numeric_property(std::string_view prop) const {
    return std::find(numeric_.begin(), numeric_.end(), prop) != numeric_.end();
  }
  bool is_color_property(std::string_view prop) const {
    return std::find(color_props_.begin(), color_props_.end(), prop) != color_props_.end();
  }
  std::optional<ColorValue> color_word(std::string_view word) const {
    auto it = colors_.find(std::string(word));
    if (it == colors_.end()) return std::nullopt;
    return it->second;
  }

 private:
  static std::string key(LexCategory category, const std::string& target) {
    return std::to_string(static_cast<int>(category)) + ":" + target;
  }

  void add(const std::string& surface, LexEntry entry) {
    std::string joined;
    std::size_t words = 0;
    std::istringstream in(detail::lower(surface));
    for (std::string word; in >> word;) {
      if (!joined.empty()) joined += '_';
      joined += word;
      ++words;
    }
    if (joined.empty()) throw Error(ErrorCode::MalformedDocument, "empty lexicon surface");
    auto [it, inserted] = entries_.emplace(joined, entry);
    if (!inserted && (it->second.category != entry.category || it->second.target != entry.target)) {
      throw Error(ErrorCode::MalformedDocument,
                  "surface '" + surface + "' maps to both '" + it->second.target + "' and '" +
                      entry.target + "'")
          .with_subject(surface);
    }
    max_words_ = std::max(max_words_, words);
    std::string spaced = joined;
    std::replace(spaced.begin(), spaced.end(), '_', ' ');
    preferred_.emplace(key(entry.category, entry.target), spaced);
  }

  int version_ = 0;
  std::size_t max_words_ = 1;
  std::unordered_map<std::string, LexEntry> entries_;
  std::unordered_map<std::string, std::string> preferred_;
  std::array<std::vector<std::string>, 7> ordered_;
  std::unordered_map<std::string, ColorValue> colors_;
  std::vector<std::string> numeric_;
  std::vector<std::string> color_props_;
};

// ---------------------------------------------------------------------------
// Tokenizer

namespace detail {

enum class RawKind { Word, Number, Hex };

struct RawToken {
  RawKind kind;
  std::string text;
};

inline bool is_hex_digit(char c) { return std::isxdigit(static_cast<unsigned char>(c)) != 0; }

inline std::vector<RawToken> scan(std::string_view text) {
  std::vector<RawToken> out;
  std::size_t i = 0;
  auto at = [&](std::size_t k) -> unsigned char { return k < text.size() ? text[k] : '\0'; };
  while (i < text.size()) {
    const unsigned char c = at(i);
    if (c == '#') {
      std::size_t j = i + 1;
      while (j < text.size() && is_hex_digit(text[j])) ++j;
      const auto len = j - i - 1;
      const bool word_follows = std::isalnum(at(j)) || at(j) == '_';
      if ((len == 6 || len == 8) && !word_follows) {
        out.push_back({RawKind::Hex, lower(text.substr(i, j - i))});
        i = j;
        continue;
      }
      ++i;
      continue;
    }
    if (std::isdigit(c) || (c == '.' && std::isdigit(at(i + 1)))) {
      std::size_t j = i;
      while (std::isdigit(at(j))) ++j;
      if (at(j) == '.' && std::isdigit(at(j + 1))) {
        ++j;
        while (std::isdigit(at(j))) ++j;
      }
      std::string number(text.substr(i, j - i));
      if (number.front() == '.') number.insert(number.begin(), '0');
      out.push_back({RawKind::Number, number});
      i = j;
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      std::size_t j = i;
      while (std::isalnum(at(j)) || at(j) == '_') ++j;
      out.push_back({RawKind::Word, lower(text.substr(i, j - i))});
      i = j;
      continue;
    }
    ++i;  // punctuation and whitespace
  }
  return out;
}

}  // namespace detail

/// Lowercased word/number/hex tokens with punctuation dropped and multiword
/// lexicon entries merged by longest match ("border radius" -> "border_radius").
inline std::vector<std::string> tokenize(std::string_view prompt,
                                         const Lexicon& lexicon = Lexicon::builtin()) {
  const auto raw = detail::scan(prompt);
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < raw.size()) {
    if (raw[i].kind == detail::RawKind::Word) {
      std::size_t best = 0;
      std::string joined;
      std::string best_text;
      for (std::size_t n = 0; n < lexicon.max_words() && i + n < raw.size(); ++n) {
        if (raw[i + n].kind != detail::RawKind::Word) break;
        if (n > 0) joined += '_';
        joined += raw[i + n].text;
        if (lexicon.find(joined)) {
          best = n + 1;
          best_text = joined;
        }
      }
      if (best > 1) {
        out.push_back(best_text);
        i += best;
        continue;
      }
    }
    out.push_back(raw[i].text);
    ++i;
  }
  return out;
}

inline std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    if (!out.empty()) out += ' ';
    out += t;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Intent parsing

struct ParseResult {
  ComponentIntent intent;
  std::vector<std::string> warnings;
};

namespace detail {

inline std::optional<double> parse_number(std::string_view token) {
  if (token.empty() || !(std::isdigit(static_cast<unsigned char>(token.front())))) {
    return std::nullopt;
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

inline std::string title_case(std::string_view word) {
  std::string out(word);
  std::replace(out.begin(), out.end(), '_', ' ');
  if (!out.empty()) out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
  return out;
}

inline std::string describe(const PropertyValue& v) {
  if (const auto* d = std::get_if<double>(&v)) return format_number(*d);
  if (const auto* s = std::get_if<std::string>(&v)) return *s;
  return std::get<ColorValue>(v).hex();
}

}  // namespace detail

// Number of tokens a value may trail its property phrase by.
inline constexpr std::size_t kBindWindow = 3;

inline ParseResult parse_intent_detailed(std::string_view prompt,
                                         const Lexicon& lexicon = Lexicon::builtin()) {
  const auto tokens = tokenize(prompt, lexicon);
  std::vector<const LexEntry*> entries;
  entries.reserve(tokens.size());
  for (const auto& t : tokens) entries.push_back(lexicon.find(t));

  ParseResult result;
  auto& intent = result.intent;
  auto& props = intent.explicit_properties;

  auto set_prop = [&](std::string_view key, PropertyValue value) {
    auto it = props.find(key);
    if (it == props.end()) {
      props.emplace(std::string(key), std::move(value));
    } else if (!(it->second == value)) {
      result.warnings.push_back("conflicting values for " + std::string(key) + ": kept " +
                                detail::describe(it->second) + ", ignored " +
                                detail::describe(value));
    }
  };

  // Nearest property phrase within the bind window before `index`.
  auto property_before = [&](std::size_t index, auto&& accept) -> const LexEntry* {
    for (std::size_t back = 1; back <= kBindWindow && back <= index; ++back) {
      const auto* e = entries[index - back];
      if (e && e->category == LexCategory::Property && accept(e->target)) return e;
    }
    return nullptr;
  };

  std::optional<ComponentKind> kind;
  std::optional<StyleTheme> style;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    const auto* e = entries[i];
    if (e) {
      switch (e->category) {
        case LexCategory::Kind:
          if (!kind) kind = match_kind(e->target);
          break;
        case LexCategory::Style:
          if (!style) {
            style = match_style(e->target);
          } else if (match_style(e->target) != style) {
            result.warnings.push_back("conflicting styles: kept " +
                                      std::string(display_name(*style)) + ", ignored " +
                                      e->target);
          }
          break;
        case LexCategory::Subtype:
          if (!intent.subtype) intent.subtype = e->target;
          break;
        case LexCategory::Size:
          set_prop(props::kSize, detail::lower(e->target));
          break;
        case LexCategory::Effect:
          set_prop(props::kEffect, e->target);
          break;
        case LexCategory::ColorWord: {
          const auto* p = property_before(
              i, [&](const std::string& t) { return lexicon.is_color_property(t); });
          set_prop(p ? p->target : std::string(props::kColor), *lexicon.color_word(e->target));
          break;
        }
        case LexCategory::Property:
          if (e->target == props::kFontFamily) {
            // Next unknown word within the window names the family.
            for (std::size_t k = i + 1; k < tokens.size() && k <= i + kBindWindow; ++k) {
              if (entries[k] || tokens[k] == "of" || tokens[k] == "a" || tokens[k] == "an" ||
                  tokens[k] == "the" || detail::parse_number(tokens[k])) {
                continue;
              }
              set_prop(props::kFontFamily, detail::title_case(tokens[k]));
              break;
            }
          }
          break;
      }
      continue;
    }
    if (auto number = detail::parse_number(tokens[i])) {
      const auto* p = property_before(
          i, [&](const std::string& t) { return lexicon.is_numeric_property(t); });
      if (p) set_prop(p->target, round2(*number));
      continue;
    }
    if (tokens[i].front() == '#') {
      if (auto color = ColorValue::from_hex(tokens[i])) {
        const auto* p = property_before(
            i, [&](const std::string& t) { return lexicon.is_color_property(t); });
        set_prop(p ? p->target : std::string(props::kColor), *color);
      }
    }
  }

  if (!kind) {
    throw Error(ErrorCode::NoComponentKind,
                "no component kind in prompt (try e.g. 'create a button')")
        .with_subject(std::string(prompt));
  }
  intent.kind = *kind;
  intent.style = style.value_or(StyleTheme::Basic);
  return result;
}

/// Parses a free-text prompt into an intent. Throws NoComponentKind when no
/// kind token is present.
inline ComponentIntent parse_intent(std::string_view prompt,
                                    const Lexicon& lexicon = Lexicon::builtin()) {
  return parse_intent_detailed(prompt, lexicon).intent;
}

/// First kind token of a text, if any.
inline std::optional<ComponentKind> find_kind(std::string_view text,
                                              const Lexicon& lexicon = Lexicon::builtin()) {
  for (const auto& t : tokenize(text, lexicon)) {
    if (const auto* e = lexicon.find(t); e && e->category == LexCategory::Kind) {
      return match_kind(e->target);
    }
  }
  return std::nullopt;
}

}  // namespace cogen
