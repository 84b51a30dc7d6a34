#pragma once

// Domain vocabulary shared by every module: component kinds and styles, the
// `Style/Kind/Subtype` naming convention, the flat and nested component
// representations, and their canonical JSON forms.

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

#include "cogen/error.hpp"

namespace cogen {

using json = nlohmann::json;

enum class ComponentKind { Button, InputField, IconButton, MenuList, ListItem, Label };
enum class StyleTheme { Basic, Trendy, Playful, Professional };
enum class NodeKind { Frame, AutoLayout, Group, Text, Vector };

inline constexpr std::array<ComponentKind, 6> kAllKinds{
    ComponentKind::Button,   ComponentKind::InputField, ComponentKind::IconButton,
    ComponentKind::MenuList, ComponentKind::ListItem,   ComponentKind::Label};

inline constexpr std::array<StyleTheme, 4> kAllStyles{StyleTheme::Basic, StyleTheme::Trendy,
                                                      StyleTheme::Playful,
                                                      StyleTheme::Professional};

// Display spellings used in component-set names.
constexpr std::string_view display_name(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::Button: return "Button";
    case ComponentKind::InputField: return "Input field";
    case ComponentKind::IconButton: return "Icon button";
    case ComponentKind::MenuList: return "Menu list";
    case ComponentKind::ListItem: return "List items";
    case ComponentKind::Label: return "Label";
  }
  return "";
}

constexpr std::string_view display_name(StyleTheme style) {
  switch (style) {
    case StyleTheme::Basic: return "Basic";
    case StyleTheme::Trendy: return "Trendy";
    case StyleTheme::Playful: return "Playful";
    case StyleTheme::Professional: return "Professional";
  }
  return "";
}

constexpr std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::Frame: return "frame";
    case NodeKind::AutoLayout: return "autolayout";
    case NodeKind::Group: return "group";
    case NodeKind::Text: return "text";
    case NodeKind::Vector: return "vector";
  }
  return "";
}

constexpr bool is_grouping(NodeKind kind) {
  return kind == NodeKind::Frame || kind == NodeKind::AutoLayout || kind == NodeKind::Group;
}

namespace detail {

inline std::string trim(std::string_view s) {
  auto is_space = [](unsigned char c) { return std::isspace(c) != 0; };
  while (!s.empty() && is_space(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && is_space(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

inline std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Lowercase and drop separators so "Input field", "input_field" and
// "InputField" compare equal.
inline std::string fold(std::string_view s) {
  std::string out;
  for (unsigned char c : s) {
    if (std::isalnum(c)) out.push_back(static_cast<char>(std::tolower(c)));
  }
  return out;
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    parts.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace detail

inline std::optional<ComponentKind> match_kind(std::string_view text) {
  const auto folded = detail::fold(text);
  if (folded.empty()) return std::nullopt;
  for (auto kind : kAllKinds) {
    if (detail::fold(display_name(kind)) == folded) return kind;
  }
  // Singular / identifier spellings of the plural display name.
  if (folded == "listitem") return ComponentKind::ListItem;
  return std::nullopt;
}

inline std::optional<StyleTheme> match_style(std::string_view text) {
  const auto folded = detail::fold(text);
  for (auto style : kAllStyles) {
    if (detail::fold(display_name(style)) == folded) return style;
  }
  return std::nullopt;
}

inline std::optional<NodeKind> match_node_kind(std::string_view text) {
  const auto folded = detail::fold(text);
  for (auto kind : {NodeKind::Frame, NodeKind::AutoLayout, NodeKind::Group, NodeKind::Text,
                    NodeKind::Vector}) {
    if (detail::fold(node_kind_name(kind)) == folded) return kind;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Numbers

/// Geometry and typography values are kept at two decimals.
inline double round2(double v) {
  const double r = std::round(v * 100.0) / 100.0;
  return r == 0.0 ? 0.0 : r;  // no negative zero
}

/// Color channels keep four decimals, enough to round-trip 8-bit hex.
inline double round4(double v) {
  const double r = std::round(v * 10000.0) / 10000.0;
  return r == 0.0 ? 0.0 : r;
}

/// Shortest decimal text for `v`, always with a fractional part ("10.0",
/// "2.5", "1.25").
inline std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  std::string out(buf.data(), end);
  if (out.find_first_of(".eE") == std::string::npos) out += ".0";
  return out;
}

// ---------------------------------------------------------------------------
// Names

struct FullComponentName {
  StyleTheme style = StyleTheme::Basic;
  ComponentKind kind = ComponentKind::Button;
  std::optional<std::string> subtype;

  bool operator==(const FullComponentName&) const = default;
};

/// Parses `Style/ComponentName[/Subtype]`. Matching is case-insensitive and
/// whitespace around parts is ignored; an empty third part means no subtype.
inline FullComponentName parse_full_name(std::string_view raw) {
  const auto parts = detail::split(raw, '/');
  if (parts.size() < 2 || parts.size() > 3) {
    throw Error(ErrorCode::WrongPartCount,
                "expected Style/ComponentName[/Subtype], got '" + std::string(raw) + "'")
        .with_subject(std::string(raw));
  }
  FullComponentName name;
  const auto style_text = detail::trim(parts[0]);
  const auto style = match_style(style_text);
  if (!style) {
    throw Error(ErrorCode::UnknownStyle, "unknown style '" + style_text + "'")
        .with_subject(style_text);
  }
  const auto kind_text = detail::trim(parts[1]);
  const auto kind = match_kind(kind_text);
  if (!kind) {
    throw Error(ErrorCode::UnknownKind, "unknown component '" + kind_text + "'")
        .with_subject(kind_text);
  }
  name.style = *style;
  name.kind = *kind;
  if (parts.size() == 3) {
    auto subtype = detail::trim(parts[2]);
    if (!subtype.empty()) name.subtype = std::move(subtype);
  }
  return name;
}

inline std::string serialize_full_name(const FullComponentName& name) {
  std::string out;
  out += display_name(name.style);
  out += '/';
  out += display_name(name.kind);
  if (name.subtype && !name.subtype->empty()) {
    out += '/';
    out += *name.subtype;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Colors and effects

struct ColorValue {
  double r = 0.0;
  double g = 0.0;
  double b = 0.0;
  double a = 1.0;

  bool operator==(const ColorValue&) const = default;

  bool valid() const {
    auto in_unit = [](double c) { return c >= 0.0 && c <= 1.0; };
    return in_unit(r) && in_unit(g) && in_unit(b) && in_unit(a);
  }

  ColorValue normalized() const { return {round4(r), round4(g), round4(b), round4(a)}; }

  /// `#RRGGBB`, or `#RRGGBBAA` when alpha is below 1.
  std::string hex() const {
    auto byte = [](double c) {
      return static_cast<unsigned>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
    };
    std::array<char, 10> buf{};
    if (byte(a) == 255) {
      std::snprintf(buf.data(), buf.size(), "#%02X%02X%02X", byte(r), byte(g), byte(b));
    } else {
      std::snprintf(buf.data(), buf.size(), "#%02X%02X%02X%02X", byte(r), byte(g), byte(b),
                    byte(a));
    }
    return buf.data();
  }

  static std::optional<ColorValue> from_hex(std::string_view text) {
    if (!text.empty() && text.front() == '#') text.remove_prefix(1);
    if (text.size() != 6 && text.size() != 8) return std::nullopt;
    std::array<unsigned, 4> bytes{0, 0, 0, 255};
    for (std::size_t i = 0; i < text.size() / 2; ++i) {
      unsigned value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + 2 * i, text.data() + 2 * i + 2, value, 16);
      if (ec != std::errc{} || ptr != text.data() + 2 * i + 2) return std::nullopt;
      bytes[i] = value;
    }
    return ColorValue{bytes[0] / 255.0, bytes[1] / 255.0, bytes[2] / 255.0, bytes[3] / 255.0}
        .normalized();
  }

  /// Same 8-bit color (what a designer would call "the same color").
  bool same_as(const ColorValue& other) const { return hex() == other.hex(); }
};

struct EffectSpec {
  std::string effect_name;
  ColorValue effect_color{0.0, 0.0, 0.0, 0.25};

  bool operator==(const EffectSpec&) const = default;
};

using VariantMap = std::vector<std::pair<std::string, std::string>>;

inline const std::string* find_variant(const VariantMap& variants, std::string_view key) {
  for (const auto& [k, v] : variants) {
    if (detail::lower(k) == detail::lower(key)) return &v;
  }
  return nullptr;
}

inline void set_variant(VariantMap& variants, const std::string& key, const std::string& value) {
  for (auto& [k, v] : variants) {
    if (detail::lower(k) == detail::lower(key)) {
      v = value;
      return;
    }
  }
  // keep key order so specs compare equal after a JSON round trip
  auto at = std::find_if(variants.begin(), variants.end(), [&](const auto& kv) { return kv.first > key; });
  variants.emplace(at, key, value);
}

/// Variants ordered by key, as they come back from JSON.
inline VariantMap sorted_variants(VariantMap variants) {
  std::stable_sort(variants.begin(), variants.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return variants;
}

// ---------------------------------------------------------------------------
// Flat representation

struct FlatComponentSpec {
  FullComponentName name;
  VariantMap variant_properties;
  std::optional<ColorValue> color;
  std::optional<ColorValue> stroke_color;
  std::optional<double> stroke_weight;
  std::optional<ColorValue> text_color;
  std::optional<std::string> font_family;
  std::optional<double> font_weight;
  std::optional<double> font_size;
  std::optional<EffectSpec> effect;
  double height = 0.0;
  double width = 0.0;
  double x = 0.0;
  double y = 0.0;
  std::optional<double> border_radius;

  bool operator==(const FlatComponentSpec&) const = default;
};

namespace keys {
inline constexpr std::array<std::string_view, 16> kFlat{
    "name",         "variant_properties", "color",       "stroke_color", "stroke_weight",
    "text_color",   "font_family",        "font_weight", "font_size",    "effect_name",
    "effect_color", "height",             "width",       "x",            "y",
    "border_radius"};
inline constexpr std::array<std::string_view, 5> kFlatRequired{"name", "height", "width", "x",
                                                               "y"};
inline constexpr std::array<std::string_view, 6> kFlatDataset{
    "name", "variant_properties", "height", "width", "x", "y"};

inline constexpr std::array<std::string_view, 7> kNestedRequired{
    "kind", "name", "height", "width", "x", "y", "children"};
inline constexpr std::array<std::string_view, 7> kNestedDataset = kNestedRequired;
inline constexpr std::array<std::string_view, 7> kGroupingFields{
    "color",       "stroke_color",  "stroke_weight",     "effect_name",
    "effect_color", "border_radius", "variant_properties"};
inline constexpr std::array<std::string_view, 5> kTextFields{
    "text_color", "font_family", "font_weight", "font_size", "characters"};
inline constexpr std::array<std::string_view, 1> kVectorFields{"color"};
}  // namespace keys

inline json color_to_json(const ColorValue& c) {
  const auto n = c.normalized();
  return json{{"r", n.r}, {"g", n.g}, {"b", n.b}, {"a", n.a}, {"hex", n.hex()}};
}

namespace detail {

[[noreturn]] inline void schema_error(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::SchemaViolation, what + " ('" + key + "')").with_subject(key);
}

inline const json& require(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(key, "missing required key");
  return *it;
}

inline double as_number(const json& value, const std::string& key) {
  if (!value.is_number()) schema_error(key, "expected a number");
  return value.get<double>();
}

inline std::string as_string(const json& value, const std::string& key) {
  if (!value.is_string()) schema_error(key, "expected a string");
  return value.get<std::string>();
}

inline std::optional<double> opt_number(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return round2(as_number(*it, key));
}

inline std::optional<std::string> opt_string(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return as_string(*it, key);
}

inline void put(json& obj, const char* key, const std::optional<double>& v) {
  if (v) obj[key] = round2(*v);
}

}  // namespace detail

inline ColorValue color_from_json(const json& value, const std::string& key) {
  if (!value.is_object()) detail::schema_error(key, "expected a color object");
  ColorValue c;
  c.r = detail::as_number(detail::require(value, "r"), key + ".r");
  c.g = detail::as_number(detail::require(value, "g"), key + ".g");
  c.b = detail::as_number(detail::require(value, "b"), key + ".b");
  if (auto it = value.find("a"); it != value.end()) c.a = detail::as_number(*it, key + ".a");
  if (!c.valid()) detail::schema_error(key, "color channel outside [0,1]");
  return c.normalized();
}

namespace detail {

inline std::optional<ColorValue> opt_color(const json& obj, const std::string& key) {
  auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) return std::nullopt;
  return color_from_json(*it, key);
}

inline json variants_to_json(const VariantMap& variants) {
  json out = json::object();
  for (const auto& [k, v] : variants) out[k] = v;
  return out;
}

inline VariantMap variants_from_json(const json& obj) {
  VariantMap out;
  auto it = obj.find("variant_properties");
  if (it == obj.end() || it->is_null()) return out;
  if (!it->is_object()) schema_error("variant_properties", "expected an object");
  for (const auto& [k, v] : it->items()) {
    out.emplace_back(k, as_string(v, "variant_properties." + k));
  }
  return out;
}

inline void put_effect(json& obj, const std::optional<EffectSpec>& effect) {
  if (!effect) return;
  obj["effect_name"] = effect->effect_name;
  obj["effect_color"] = color_to_json(effect->effect_color);
}

inline std::optional<EffectSpec> effect_from_json(const json& obj) {
  auto name = opt_string(obj, "effect_name");
  if (!name) return std::nullopt;
  if (name->empty()) schema_error("effect_name", "effect name must be nonempty");
  EffectSpec effect;
  effect.effect_name = *name;
  if (auto c = opt_color(obj, "effect_color")) effect.effect_color = *c;
  return effect;
}

inline void check_non_negative(const std::optional<double>& v, const std::string& key) {
  if (v && *v < 0.0) schema_error(key, "must be non-negative");
}

}  // namespace detail

inline json to_json(const FlatComponentSpec& spec) {
  json out = json::object();
  out["name"] = serialize_full_name(spec.name);
  out["variant_properties"] = detail::variants_to_json(spec.variant_properties);
  if (spec.color) out["color"] = color_to_json(*spec.color);
  if (spec.stroke_color) out["stroke_color"] = color_to_json(*spec.stroke_color);
  detail::put(out, "stroke_weight", spec.stroke_weight);
  if (spec.text_color) out["text_color"] = color_to_json(*spec.text_color);
  if (spec.font_family) out["font_family"] = *spec.font_family;
  detail::put(out, "font_weight", spec.font_weight);
  detail::put(out, "font_size", spec.font_size);
  detail::put_effect(out, spec.effect);
  out["height"] = round2(spec.height);
  out["width"] = round2(spec.width);
  out["x"] = round2(spec.x);
  out["y"] = round2(spec.y);
  detail::put(out, "border_radius", spec.border_radius);
  return out;
}

/// Reads a flat spec; throws SchemaViolation on missing keys, wrong types or
/// broken invariants. Unknown keys are ignored here (see validate_json).
inline FlatComponentSpec flat_from_json(const json& doc) {
  if (!doc.is_object()) detail::schema_error("<root>", "expected an object");
  FlatComponentSpec spec;
  const auto name = detail::as_string(detail::require(doc, "name"), "name");
  try {
    spec.name = parse_full_name(name);
  } catch (const Error& e) {
    detail::schema_error("name", std::string("invalid component name: ") + e.what());
  }
  spec.variant_properties = detail::variants_from_json(doc);
  spec.color = detail::opt_color(doc, "color");
  spec.stroke_color = detail::opt_color(doc, "stroke_color");
  spec.stroke_weight = detail::opt_number(doc, "stroke_weight");
  spec.text_color = detail::opt_color(doc, "text_color");
  spec.font_family = detail::opt_string(doc, "font_family");
  spec.font_weight = detail::opt_number(doc, "font_weight");
  spec.font_size = detail::opt_number(doc, "font_size");
  spec.effect = detail::effect_from_json(doc);
  spec.height = round2(detail::as_number(detail::require(doc, "height"), "height"));
  spec.width = round2(detail::as_number(detail::require(doc, "width"), "width"));
  spec.x = round2(detail::as_number(detail::require(doc, "x"), "x"));
  spec.y = round2(detail::as_number(detail::require(doc, "y"), "y"));
  spec.border_radius = detail::opt_number(doc, "border_radius");
  if (spec.height < 0.0) detail::schema_error("height", "must be non-negative");
  if (spec.width < 0.0) detail::schema_error("width", "must be non-negative");
  detail::check_non_negative(spec.stroke_weight, "stroke_weight");
  detail::check_non_negative(spec.border_radius, "border_radius");
  if (spec.font_size && *spec.font_size <= 0.0) {
    detail::schema_error("font_size", "must be positive");
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Nested representation

struct NestedNode {
  NodeKind kind = NodeKind::Frame;
  std::string name;
  double height = 0.0;
  double width = 0.0;
  double x = 0.0;
  double y = 0.0;
  // grouping kinds (color is also the fill of a vector)
  std::optional<ColorValue> color;
  std::optional<ColorValue> stroke_color;
  std::optional<double> stroke_weight;
  std::optional<EffectSpec> effect;
  std::optional<double> border_radius;
  VariantMap variant_properties;
  // text kind
  std::optional<ColorValue> text_color;
  std::optional<std::string> font_family;
  std::optional<double> font_weight;
  std::optional<double> font_size;
  std::optional<std::string> characters;

  std::vector<NestedNode> children;

  bool operator==(const NestedNode&) const = default;
};

inline std::size_t node_count(const NestedNode& node) {
  std::size_t n = 1;
  for (const auto& child : node.children) n += node_count(child);
  return n;
}

/// Serializes only the fields that belong to the node's kind.
inline json to_json(const NestedNode& node) {
  json out = json::object();
  out["kind"] = node_kind_name(node.kind);
  out["name"] = node.name;
  out["height"] = round2(node.height);
  out["width"] = round2(node.width);
  out["x"] = round2(node.x);
  out["y"] = round2(node.y);
  // component-level; only roots carry it, whatever their kind
  if (!node.variant_properties.empty()) {
    out["variant_properties"] = detail::variants_to_json(node.variant_properties);
  }
  if (is_grouping(node.kind)) {
    if (node.color) out["color"] = color_to_json(*node.color);
    if (node.stroke_color) out["stroke_color"] = color_to_json(*node.stroke_color);
    detail::put(out, "stroke_weight", node.stroke_weight);
    detail::put_effect(out, node.effect);
    detail::put(out, "border_radius", node.border_radius);
  } else if (node.kind == NodeKind::Text) {
    if (node.text_color) out["text_color"] = color_to_json(*node.text_color);
    if (node.font_family) out["font_family"] = *node.font_family;
    detail::put(out, "font_weight", node.font_weight);
    detail::put(out, "font_size", node.font_size);
    if (node.characters) out["characters"] = *node.characters;
  } else {
    if (node.color) out["color"] = color_to_json(*node.color);
  }
  json children = json::array();
  for (const auto& child : node.children) children.push_back(to_json(child));
  out["children"] = std::move(children);
  return out;
}

inline NestedNode nested_from_json(const json& doc, std::size_t depth = 0) {
  constexpr std::size_t kMaxDepth = 256;
  if (!doc.is_object()) detail::schema_error("<node>", "expected an object");
  if (depth > kMaxDepth) detail::schema_error("children", "nesting too deep");
  NestedNode node;
  const auto kind_text = detail::as_string(detail::require(doc, "kind"), "kind");
  const auto kind = match_node_kind(kind_text);
  if (!kind) detail::schema_error("kind", "unknown node kind '" + kind_text + "'");
  node.kind = *kind;
  node.name = detail::as_string(detail::require(doc, "name"), "name");
  node.height = round2(detail::as_number(detail::require(doc, "height"), "height"));
  node.width = round2(detail::as_number(detail::require(doc, "width"), "width"));
  node.x = round2(detail::as_number(detail::require(doc, "x"), "x"));
  node.y = round2(detail::as_number(detail::require(doc, "y"), "y"));
  if (node.height < 0.0) detail::schema_error("height", "must be non-negative");
  if (node.width < 0.0) detail::schema_error("width", "must be non-negative");
  node.variant_properties = detail::variants_from_json(doc);
  if (is_grouping(node.kind)) {
    node.color = detail::opt_color(doc, "color");
    node.stroke_color = detail::opt_color(doc, "stroke_color");
    node.stroke_weight = detail::opt_number(doc, "stroke_weight");
    node.effect = detail::effect_from_json(doc);
    node.border_radius = detail::opt_number(doc, "border_radius");
    detail::check_non_negative(node.stroke_weight, "stroke_weight");
    detail::check_non_negative(node.border_radius, "border_radius");
  } else if (node.kind == NodeKind::Text) {
    node.text_color = detail::opt_color(doc, "text_color");
    node.font_family = detail::opt_string(doc, "font_family");
    node.font_weight = detail::opt_number(doc, "font_weight");
    node.font_size = detail::opt_number(doc, "font_size");
    node.characters = detail::opt_string(doc, "characters");
    if (node.font_size && *node.font_size <= 0.0) {
      detail::schema_error("font_size", "must be positive");
    }
  } else {
    node.color = detail::opt_color(doc, "color");
  }
  const auto& children = detail::require(doc, "children");
  if (!children.is_array()) detail::schema_error("children", "expected an array");
  if (!is_grouping(node.kind) && !children.empty()) {
    detail::schema_error("children", "leaf node kinds cannot have children");
  }
  for (const auto& child : children) node.children.push_back(nested_from_json(child, depth + 1));
  return node;
}

namespace detail {

inline const NestedNode* first_text(const NestedNode& node) {
  if (node.kind == NodeKind::Text) return &node;
  for (const auto& child : node.children) {
    if (const auto* hit = first_text(child)) return hit;
  }
  return nullptr;
}

}  // namespace detail

/// Collapses a nested tree to the flat schema: root name, geometry and box
/// styling, typography from the first text node in document order.
inline FlatComponentSpec flatten(const NestedNode& root) {
  FlatComponentSpec spec;
  try {
    spec.name = parse_full_name(root.name);
  } catch (const Error& e) {
    detail::schema_error("name", std::string("root name is not a component name: ") + e.what());
  }
  spec.variant_properties = root.variant_properties;
  spec.height = root.height;
  spec.width = root.width;
  spec.x = root.x;
  spec.y = root.y;
  if (root.kind != NodeKind::Text) {
    spec.color = root.color;
    spec.stroke_color = root.stroke_color;
    spec.stroke_weight = root.stroke_weight;
    spec.effect = root.effect;
    spec.border_radius = root.border_radius;
  }
  if (const auto* text = detail::first_text(root)) {
    spec.text_color = text->text_color;
    spec.font_family = text->font_family;
    spec.font_weight = text->font_weight;
    spec.font_size = text->font_size;
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Intent

using PropertyValue = std::variant<double, std::string, ColorValue>;

/// Property names an intent may carry: the flat vocabulary plus `size`.
namespace props {
inline constexpr std::string_view kSize = "size";
inline constexpr std::string_view kBorderRadius = "border_radius";
inline constexpr std::string_view kStrokeWeight = "stroke_weight";
inline constexpr std::string_view kEffect = "effect_name";
inline constexpr std::string_view kColor = "color";
inline constexpr std::string_view kStrokeColor = "stroke_color";
inline constexpr std::string_view kTextColor = "text_color";
inline constexpr std::string_view kFontFamily = "font_family";
inline constexpr std::string_view kFontWeight = "font_weight";
inline constexpr std::string_view kFontSize = "font_size";
inline constexpr std::string_view kWidth = "width";
inline constexpr std::string_view kHeight = "height";
}  // namespace props

struct ComponentIntent {
  ComponentKind kind = ComponentKind::Button;
  StyleTheme style = StyleTheme::Basic;
  std::optional<std::string> subtype;
  std::map<std::string, PropertyValue, std::less<>> explicit_properties;

  bool operator==(const ComponentIntent&) const = default;

  template <typename T>
  const T* get(std::string_view key) const {
    auto it = explicit_properties.find(key);
    return it == explicit_properties.end() ? nullptr : std::get_if<T>(&it->second);
  }
};

inline json property_to_json(const PropertyValue& value) {
  if (const auto* d = std::get_if<double>(&value)) return round2(*d);
  if (const auto* s = std::get_if<std::string>(&value)) return *s;
  return color_to_json(std::get<ColorValue>(value));
}

inline json to_json(const ComponentIntent& intent) {
  json props = json::object();
  for (const auto& [k, v] : intent.explicit_properties) props[k] = property_to_json(v);
  json out{{"kind", display_name(intent.kind)},
           {"style", display_name(intent.style)},
           {"explicit_properties", std::move(props)}};
  out["subtype"] = intent.subtype ? json(*intent.subtype) : json(nullptr);
  return out;
}

inline std::string canonical_dump(const json& doc) { return doc.dump(2); }

}  // namespace cogen
