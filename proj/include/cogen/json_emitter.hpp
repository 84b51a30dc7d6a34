#pragma once

// Intent -> component JSON (flat or nested) using style presets, strict
// validation of component documents, and the node-creation instructions the
// Figma plugin executes.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cogen/component_model.hpp"
#include "cogen/presets.hpp"

namespace cogen {

inline constexpr double kSmallScale = 0.75;
inline constexpr double kLargeScale = 1.25;
inline constexpr std::size_t kMenuItemCount = 3;

inline const ColorValue kDefaultEffectColor{0.0, 0.0, 0.0, 0.25};

/// Preset for (kind, style) with the intent's explicit properties laid over it.
inline FlatComponentSpec emit_flat(const ComponentIntent& intent,
                                   const StylePresetTable& presets = StylePresetTable::builtin()) {
  FlatComponentSpec spec = presets.at(intent.kind, intent.style);
  spec.name = {intent.style, intent.kind, intent.subtype.value_or("Default")};

  if (const auto* size = intent.get<std::string>(props::kSize)) {
    const bool small = detail::lower(*size) == "small";
    const double factor = small ? kSmallScale : kLargeScale;
    spec.width = round2(spec.width * factor);
    spec.height = round2(spec.height * factor);
    set_variant(spec.variant_properties, "Size", small ? "Small" : "Large");
  }
  auto number = [&](std::string_view key) -> std::optional<double> {
    if (const auto* v = intent.get<double>(key)) return round2(*v);
    return std::nullopt;
  };
  if (auto v = number(props::kWidth)) spec.width = *v;
  if (auto v = number(props::kHeight)) spec.height = *v;
  if (auto v = number(props::kBorderRadius)) spec.border_radius = *v;
  if (auto v = number(props::kStrokeWeight)) spec.stroke_weight = *v;
  if (auto v = number(props::kFontSize)) spec.font_size = *v;
  if (auto v = number(props::kFontWeight)) spec.font_weight = *v;
  if (const auto* family = intent.get<std::string>(props::kFontFamily)) spec.font_family = *family;
  if (const auto* c = intent.get<ColorValue>(props::kColor)) spec.color = c->normalized();
  if (const auto* c = intent.get<ColorValue>(props::kStrokeColor)) {
    spec.stroke_color = c->normalized();
  }
  if (const auto* c = intent.get<ColorValue>(props::kTextColor)) spec.text_color = c->normalized();
  if (const auto* effect = intent.get<std::string>(props::kEffect)) {
    const auto color = spec.effect ? spec.effect->effect_color : kDefaultEffectColor;
    spec.effect = EffectSpec{*effect, color};
  }
  return spec;
}

namespace detail {

inline NestedNode text_node(const FlatComponentSpec& spec, std::string name,
                            std::string characters, double x, double y, double width,
                            double height) {
  NestedNode text;
  text.kind = NodeKind::Text;
  text.name = std::move(name);
  text.characters = std::move(characters);
  text.text_color = spec.text_color;
  text.font_family = spec.font_family;
  text.font_weight = spec.font_weight;
  text.font_size = spec.font_size;
  text.x = round2(x);
  text.y = round2(y);
  text.width = round2(std::max(width, 0.0));
  text.height = round2(std::max(height, 0.0));
  return text;
}

inline NestedNode box_node(const FlatComponentSpec& spec, std::string name) {
  NestedNode frame;
  frame.kind = NodeKind::Frame;
  frame.name = std::move(name);
  frame.x = spec.x;
  frame.y = spec.y;
  frame.width = spec.width;
  frame.height = spec.height;
  frame.color = spec.color;
  frame.stroke_color = spec.stroke_color;
  frame.stroke_weight = spec.stroke_weight;
  frame.effect = spec.effect;
  frame.border_radius = spec.border_radius;
  return frame;
}

// Text child inset horizontally and centered vertically in `box`.
inline NestedNode inset_text(const FlatComponentSpec& spec, const NestedNode& box,
                             std::string name, std::string characters) {
  const double pad = std::min(16.0, box.width * 0.1);
  const double line = std::min(box.height, spec.font_size.value_or(14.0) * 1.25);
  return text_node(spec, std::move(name), std::move(characters), box.x + pad,
                   box.y + (box.height - line) / 2.0, box.width - 2.0 * pad, line);
}

}  // namespace detail

/// Per-kind node template populated from a flat spec.
inline NestedNode nest_spec(const FlatComponentSpec& spec) {
  const auto root_name = serialize_full_name(spec.name);

  if (spec.name.kind == ComponentKind::Label) {
    auto label = detail::text_node(spec, root_name, "Label", spec.x, spec.y, spec.width, spec.height);
    label.variant_properties = spec.variant_properties;
    return label;
  }

  auto root = detail::box_node(spec, root_name);
  root.variant_properties = spec.variant_properties;
  switch (spec.name.kind) {
    case ComponentKind::Button:
      root.children.push_back(detail::inset_text(spec, root, "Text", "Button"));
      break;
    case ComponentKind::InputField:
      root.children.push_back(detail::inset_text(spec, root, "Placeholder", "Enter text"));
      break;
    case ComponentKind::ListItem:
      root.children.push_back(detail::inset_text(spec, root, "Text", "List item"));
      break;
    case ComponentKind::IconButton: {
      NestedNode icon;
      icon.kind = NodeKind::Vector;
      icon.name = "Icon";
      const double side = round2(std::min(root.width, root.height) * 0.5);
      icon.width = side;
      icon.height = side;
      icon.x = round2(root.x + (root.width - side) / 2.0);
      icon.y = round2(root.y + (root.height - side) / 2.0);
      icon.color = spec.text_color ? spec.text_color : spec.stroke_color;
      root.children.push_back(std::move(icon));
      break;
    }
    case ComponentKind::MenuList: {
      const double item_height = round2(root.height / static_cast<double>(kMenuItemCount));
      for (std::size_t i = 0; i < kMenuItemCount; ++i) {
        NestedNode item;
        item.kind = NodeKind::Frame;
        item.name = "Item " + std::to_string(i + 1);
        item.x = root.x;
        item.y = round2(root.y + item_height * static_cast<double>(i));
        item.width = root.width;
        item.height = item_height;
        item.color = spec.color;
        item.children.push_back(
            detail::inset_text(spec, item, "Text", "Menu item " + std::to_string(i + 1)));
        root.children.push_back(std::move(item));
      }
      break;
    }
    case ComponentKind::Label:
      break;
  }
  return root;
}

inline NestedNode emit_nested(const ComponentIntent& intent,
                              const StylePresetTable& presets = StylePresetTable::builtin()) {
  return nest_spec(emit_flat(intent, presets));
}

// ---------------------------------------------------------------------------
// Validation

enum class SchemaKind { Auto, Flat, Nested };

struct ValidatedDocument {
  json document;
  SchemaKind schema = SchemaKind::Flat;
  std::vector<std::string> warnings;
};

namespace detail {

// Rejects malformed UTF-8 and raw control characters (anywhere inside a
// string, anywhere but \t \n \r outside one).
inline void check_characters(std::string_view raw) {
  bool in_string = false;
  bool escaped = false;
  std::size_t i = 0;
  auto fail = [&](std::size_t at, const std::string& what) {
    throw Error(ErrorCode::InvalidCharacter, what + " at byte " + std::to_string(at))
        .with_offset(at);
  };
  while (i < raw.size()) {
    const auto c = static_cast<unsigned char>(raw[i]);
    if (c >= 0x80) {
      std::size_t len = (c & 0xE0) == 0xC0 ? 2 : (c & 0xF0) == 0xE0 ? 3 : (c & 0xF8) == 0xF0 ? 4 : 0;
      if (len == 0 || i + len > raw.size()) fail(i, "invalid UTF-8 lead byte");
      std::uint32_t cp = c & (0x7F >> len);
      for (std::size_t k = 1; k < len; ++k) {
        const auto cc = static_cast<unsigned char>(raw[i + k]);
        if ((cc & 0xC0) != 0x80) fail(i + k, "invalid UTF-8 continuation byte");
        cp = (cp << 6) | (cc & 0x3F);
      }
      const bool overlong = (len == 2 && cp < 0x80) || (len == 3 && cp < 0x800) ||
                            (len == 4 && cp < 0x10000);
      if (overlong || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) {
        fail(i, "invalid UTF-8 sequence");
      }
      escaped = false;
      i += len;
      continue;
    }
    if (c < 0x20) {
      if (in_string) fail(i, "raw control character inside string");
      if (c != '\t' && c != '\n' && c != '\r') fail(i, "control character");
    }
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
    } else if (c == '"') {
      in_string = true;
    }
    ++i;
  }
}

class SchemaWalker {
 public:
  explicit SchemaWalker(std::vector<std::string>& warnings) : warnings_(warnings) {}

  void flat(const json& doc) {
    require_object(doc, "<root>");
    for (auto key : keys::kFlatRequired) require_key(doc, key, "");
    check_common(doc, "");
    for (const auto& [key, value] : doc.items()) {
      if (std::find(keys::kFlat.begin(), keys::kFlat.end(), key) == keys::kFlat.end()) {
        warnings_.push_back("unknown key '" + key + "'");
      }
    }
  }

  void nested(const json& node, const std::string& path, std::size_t depth) {
    constexpr std::size_t kMaxDepth = 256;
    require_object(node, path.empty() ? "<root>" : path);
    if (depth > kMaxDepth) schema_error(path, "nesting too deep");
    for (auto key : keys::kNestedRequired) require_key(node, key, path);
    const auto& kind_value = node["kind"];
    if (!kind_value.is_string()) schema_error(path + "kind", "expected a string");
    const auto kind = match_node_kind(kind_value.get<std::string>());
    if (!kind) schema_error(path + "kind", "unknown node kind");
    check_common(node, path);

    auto allowed = [&](std::string_view key) {
      if (std::find(keys::kNestedRequired.begin(), keys::kNestedRequired.end(), key) !=
          keys::kNestedRequired.end()) {
        return true;
      }
      if (depth == 0 && key == "variant_properties") return true;
      if (is_grouping(*kind)) {
        return std::find(keys::kGroupingFields.begin(), keys::kGroupingFields.end(), key) !=
               keys::kGroupingFields.end();
      }
      if (*kind == NodeKind::Text) {
        return std::find(keys::kTextFields.begin(), keys::kTextFields.end(), key) !=
               keys::kTextFields.end();
      }
      return key == "color";
    };
    for (const auto& [key, value] : node.items()) {
      if (!allowed(key)) {
        warnings_.push_back("unknown key '" + path + key + "' for " +
                            std::string(node_kind_name(*kind)) + " node");
      }
    }
    const auto& children = node["children"];
    if (!children.is_array()) schema_error(path + "children", "expected an array");
    if (!is_grouping(*kind) && !children.empty()) {
      schema_error(path + "children", "leaf node kinds cannot have children");
    }
    for (std::size_t i = 0; i < children.size(); ++i) {
      nested(children[i], path + "children[" + std::to_string(i) + "].", depth + 1);
    }
  }

 private:
  static void require_object(const json& doc, const std::string& where) {
    if (!doc.is_object()) schema_error(where, "expected an object");
  }

  static void require_key(const json& doc, std::string_view key, const std::string& path) {
    if (!doc.contains(key)) schema_error(path + std::string(key), "missing required key");
  }

  void check_common(const json& doc, const std::string& path) {
    auto number = [&](std::string_view key, bool positive) {
      auto it = doc.find(key);
      if (it == doc.end()) return;
      const auto where = path + std::string(key);
      if (!it->is_number()) schema_error(where, "expected a number");
      const double v = it->get<double>();
      if (positive ? !(v > 0.0) : !(v >= 0.0)) {
        schema_error(where, positive ? "must be positive" : "must be non-negative");
      }
    };
    auto signed_number = [&](std::string_view key) {
      auto it = doc.find(key);
      if (it != doc.end() && !it->is_number()) {
        schema_error(path + std::string(key), "expected a number");
      }
    };
    auto string = [&](std::string_view key) {
      auto it = doc.find(key);
      if (it != doc.end() && !it->is_string()) {
        schema_error(path + std::string(key), "expected a string");
      }
    };
    auto color = [&](std::string_view key) {
      auto it = doc.find(key);
      if (it == doc.end()) return;
      const auto where = path + std::string(key);
      if (!it->is_object()) schema_error(where, "expected a color object");
      for (const char* channel : {"r", "g", "b", "a"}) {
        auto c = it->find(channel);
        if (c == it->end()) {
          if (std::string_view(channel) == "a") continue;
          schema_error(where + "." + channel, "missing required key");
        }
        if (!c->is_number()) schema_error(where + "." + channel, "expected a number");
        const double v = c->get<double>();
        if (v < 0.0 || v > 1.0) schema_error(where + "." + channel, "outside [0,1]");
      }
      for (const auto& [k, v] : it->items()) {
        if (k == "hex") {
          if (!v.is_string()) schema_error(where + ".hex", "expected a string");
        } else if (k != "r" && k != "g" && k != "b" && k != "a") {
          warnings_.push_back("unknown key '" + where + "." + k + "'");
        }
      }
    };

    string("name");
    number("height", false);
    number("width", false);
    signed_number("x");
    signed_number("y");
    number("stroke_weight", false);
    number("border_radius", false);
    number("font_weight", false);
    number("font_size", true);
    string("font_family");
    string("effect_name");
    string("characters");
    color("color");
    color("stroke_color");
    color("text_color");
    color("effect_color");
    if (auto it = doc.find("effect_name"); it != doc.end() && it->get<std::string>().empty()) {
      schema_error(path + "effect_name", "effect name must be nonempty");
    }
    if (auto it = doc.find("variant_properties"); it != doc.end()) {
      if (!it->is_object()) schema_error(path + "variant_properties", "expected an object");
      for (const auto& [k, v] : it->items()) {
        if (!v.is_string()) schema_error(path + "variant_properties." + k, "expected a string");
      }
    }
  }

  std::vector<std::string>& warnings_;
};

}  // namespace detail

inline SchemaKind detect_schema(const json& doc) {
  return doc.is_object() && (doc.contains("kind") || doc.contains("children"))
             ? SchemaKind::Nested
             : SchemaKind::Flat;
}

/// Strict parse (no comments, no trailing commas, no raw control characters)
/// followed by a schema check against the flat or nested vocabulary. Unknown
/// keys are reported as warnings; everything else throws.
inline ValidatedDocument validate_json(std::string_view raw, SchemaKind expected = SchemaKind::Auto) {
  detail::check_characters(raw);
  ValidatedDocument out;
  try {
    out.document = json::parse(raw);
  } catch (const json::parse_error& e) {
    const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
    throw Error(ErrorCode::SyntaxError, e.what()).with_offset(offset);
  }
  if (!out.document.is_object()) {
    detail::schema_error("<root>", "expected a JSON object");
  }
  out.schema = detect_schema(out.document);
  if (expected != SchemaKind::Auto && expected != out.schema) {
    detail::schema_error("<root>", expected == SchemaKind::Flat
                                       ? "expected a flat component document"
                                       : "expected a nested component document");
  }
  detail::SchemaWalker walker(out.warnings);
  if (out.schema == SchemaKind::Flat) {
    walker.flat(out.document);
  } else {
    walker.nested(out.document, "", 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Plugin instructions

enum class PluginOp { CreateFrame, CreateText, CreateRectangle };

constexpr std::string_view op_name(PluginOp op) {
  switch (op) {
    case PluginOp::CreateFrame: return "create_frame";
    case PluginOp::CreateText: return "create_text";
    case PluginOp::CreateRectangle: return "create_rectangle";
  }
  return "";
}

struct PluginCommand {
  PluginOp op = PluginOp::CreateFrame;
  std::optional<std::size_t> parent;
  std::string name;
  // relative to the parent; absolute for the root
  double x = 0.0;
  double y = 0.0;
  double width = 0.0;
  double height = 0.0;
  bool autolayout = false;
  std::optional<ColorValue> fill;
  std::optional<ColorValue> stroke;
  std::optional<double> stroke_weight;
  std::optional<double> corner_radius;
  std::optional<EffectSpec> effect;
  std::optional<ColorValue> text_color;
  std::optional<std::string> font_family;
  std::optional<double> font_weight;
  std::optional<double> font_size;
  std::optional<std::string> characters;

  bool operator==(const PluginCommand&) const = default;
};

using PluginInstruction = std::vector<PluginCommand>;

namespace detail {

inline void map_node(const NestedNode& node, std::optional<std::size_t> parent,
                     const NestedNode* parent_node, PluginInstruction& out) {
  PluginCommand cmd;
  cmd.parent = parent;
  cmd.name = node.name;
  cmd.x = round2(parent_node ? node.x - parent_node->x : node.x);
  cmd.y = round2(parent_node ? node.y - parent_node->y : node.y);
  cmd.width = node.width;
  cmd.height = node.height;
  if (is_grouping(node.kind)) {
    cmd.op = PluginOp::CreateFrame;
    cmd.autolayout = node.kind == NodeKind::AutoLayout;
    cmd.fill = node.color;
    cmd.stroke = node.stroke_color;
    cmd.stroke_weight = node.stroke_weight;
    cmd.corner_radius = node.border_radius;
    cmd.effect = node.effect;
  } else if (node.kind == NodeKind::Text) {
    cmd.op = PluginOp::CreateText;
    cmd.text_color = node.text_color;
    cmd.font_family = node.font_family;
    cmd.font_weight = node.font_weight;
    cmd.font_size = node.font_size;
    cmd.characters = node.characters;
  } else {
    cmd.op = PluginOp::CreateRectangle;
    cmd.fill = node.color;
  }
  const auto index = out.size();
  out.push_back(std::move(cmd));
  for (const auto& child : node.children) map_node(child, index, &node, out);
}

}  // namespace detail

/// Pre-order node-creation commands; every parent precedes its children.
inline PluginInstruction map_to_figma(const NestedNode& tree) {
  PluginInstruction out;
  detail::map_node(tree, std::nullopt, nullptr, out);
  return out;
}

inline json to_json(const PluginCommand& cmd) {
  json out{{"op", op_name(cmd.op)},
           {"name", cmd.name},
           {"x", round2(cmd.x)},
           {"y", round2(cmd.y)},
           {"width", round2(cmd.width)},
           {"height", round2(cmd.height)}};
  out["parent"] = cmd.parent ? json(*cmd.parent) : json(nullptr);
  if (cmd.op == PluginOp::CreateFrame) out["autolayout"] = cmd.autolayout;
  if (cmd.fill) out["fill"] = color_to_json(*cmd.fill);
  if (cmd.stroke) out["stroke"] = color_to_json(*cmd.stroke);
  detail::put(out, "stroke_weight", cmd.stroke_weight);
  detail::put(out, "corner_radius", cmd.corner_radius);
  if (cmd.effect) {
    out["effect"] = {{"type", cmd.effect->effect_name},
                     {"color", color_to_json(cmd.effect->effect_color)}};
  }
  if (cmd.text_color) out["text_color"] = color_to_json(*cmd.text_color);
  if (cmd.font_family) out["font_family"] = *cmd.font_family;
  detail::put(out, "font_weight", cmd.font_weight);
  detail::put(out, "font_size", cmd.font_size);
  if (cmd.characters) out["characters"] = *cmd.characters;
  return out;
}

inline json to_json(const PluginInstruction& instructions) {
  json out = json::array();
  for (const auto& cmd : instructions) out.push_back(to_json(cmd));
  return out;
}

/// Checks a wire-format instruction payload: known ops, numeric geometry,
/// parents that are earlier frame commands. Throws SchemaViolation naming the
/// offending command index.
inline void validate_instructions(const json& payload) {
  if (!payload.is_array()) detail::schema_error("<root>", "instructions must be an array");
  for (std::size_t i = 0; i < payload.size(); ++i) {
    const auto& cmd = payload[i];
    const auto where = "[" + std::to_string(i) + "]";
    if (!cmd.is_object()) detail::schema_error(where, "command must be an object");
    const auto op = cmd.value("op", "");
    if (op != "create_frame" && op != "create_text" && op != "create_rectangle") {
      detail::schema_error(where + ".op", "unknown op '" + op + "'");
    }
    for (const char* key : {"x", "y", "width", "height"}) {
      if (!cmd.contains(key) || !cmd[key].is_number()) {
        detail::schema_error(where + "." + key, "expected a number");
      }
    }
    if (!cmd.contains("parent")) detail::schema_error(where + ".parent", "missing required key");
    const auto& parent = cmd["parent"];
    if (i == 0) {
      if (!parent.is_null()) detail::schema_error(where + ".parent", "root must have no parent");
      continue;
    }
    if (!parent.is_number_unsigned()) {
      detail::schema_error(where + ".parent", "non-root command needs a parent index");
    }
    const auto index = parent.get<std::size_t>();
    if (index >= i) detail::schema_error(where + ".parent", "parent must precede the command");
    if (payload[index].value("op", "") != "create_frame") {
      detail::schema_error(where + ".parent", "parent must be a frame");
    }
  }
}

}  // namespace cogen
