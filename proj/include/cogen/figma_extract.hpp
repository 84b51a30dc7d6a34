#pragma once

// Figma file documents: loading (REST or offline dump), component-set
// discovery, and flat / nested extraction.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cogen/component_model.hpp"

namespace cogen {

struct RawDocument {
  json root;
  std::string file_key;
  std::chrono::system_clock::time_point retrieved_at;
  std::string raw_text;  // bytes as received / read

  const json& document() const { return root.at("document"); }
};

/// Parses a Figma file response. Throws MalformedDocument for invalid JSON or a
/// missing `document` root object.
inline RawDocument parse_document(std::string text, std::string file_key = {}) {
  if (detail::trim(text).empty()) throw Error(ErrorCode::MalformedDocument, "empty document");
  RawDocument doc;
  try {
    doc.root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::MalformedDocument, e.what()).with_offset(e.byte);
  }
  if (!doc.root.is_object() || !doc.root.contains("document") ||
      !doc.root["document"].is_object()) {
    throw Error(ErrorCode::MalformedDocument, "missing 'document' root object");
  }
  doc.file_key = std::move(file_key);
  doc.retrieved_at = std::chrono::system_clock::now();
  doc.raw_text = std::move(text);
  return doc;
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string()).with_subject(path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline RawDocument load_file(const std::filesystem::path& path) {
  auto doc = parse_document(read_file(path), path.stem().string());
  std::error_code ec;
  auto mtime = std::filesystem::last_write_time(path, ec);
  if (!ec) {
    doc.retrieved_at = std::chrono::time_point_cast<std::chrono::system_clock::duration>(
        mtime - std::filesystem::file_time_type::clock::now() + std::chrono::system_clock::now());
  }
  return doc;
}

// ---------------------------------------------------------------------------
// Component sets and variants

struct ComponentSetRef {
  FullComponentName name;
  const json* node = nullptr;  // points into the scanned document
};

struct ComponentSetScan {
  std::vector<ComponentSetRef> sets;
  std::vector<std::string> warnings;
};

namespace detail {

inline void scan_sets(const json& node, ComponentSetScan& out) {
  if (!node.is_object()) return;
  if (node.value("type", "") == "COMPONENT_SET") {
    const auto raw_name = node.value("name", "");
    try {
      out.sets.push_back({parse_full_name(raw_name), &node});
    } catch (const Error& e) {
      out.warnings.push_back("skipped component set '" + raw_name + "': " + e.what());
    }
    return;
  }
  if (auto it = node.find("children"); it != node.end() && it->is_array()) {
    for (const auto& child : *it) scan_sets(child, out);
  }
}

}  // namespace detail

/// Depth-first, document-order list of COMPONENT_SET nodes whose names follow
/// `Style/ComponentName/Subtype`. Others are reported as warnings.
inline ComponentSetScan find_component_sets(const RawDocument& doc) {
  ComponentSetScan out;
  detail::scan_sets(doc.document(), out);
  return out;
}

/// The COMPONENT variants directly inside a set node.
inline std::vector<const json*> component_variants(const json& set_node) {
  std::vector<const json*> out;
  if (auto it = set_node.find("children"); it != set_node.end() && it->is_array()) {
    for (const auto& child : *it) {
      if (child.value("type", "") == "COMPONENT") out.push_back(&child);
    }
  }
  return out;
}

struct VariantParse {
  VariantMap variants;
  std::vector<std::string> warnings;
};

/// "State=Default, Size=Large" -> ordered key/value pairs. Segments without
/// `=` become a key with an empty value and a warning.
inline VariantParse parse_variant_name_detailed(std::string_view raw) {
  VariantParse out;
  if (detail::trim(raw).empty()) return out;
  for (const auto& segment : detail::split(raw, ',')) {
    const auto trimmed = detail::trim(segment);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    std::string key;
    std::string value;
    if (eq == std::string::npos) {
      key = trimmed;
      out.warnings.push_back("variant segment '" + trimmed + "' has no '='");
    } else {
      key = detail::trim(std::string_view(trimmed).substr(0, eq));
      value = detail::trim(std::string_view(trimmed).substr(eq + 1));
    }
    bool duplicate = false;
    for (auto& [k, v] : out.variants) {
      if (k == key) {
        v = value;
        duplicate = true;
        out.warnings.push_back("duplicate variant key '" + key + "'");
      }
    }
    if (!duplicate) out.variants.emplace_back(std::move(key), std::move(value));
  }
  return out;
}

inline VariantMap parse_variant_name(std::string_view raw) {
  return parse_variant_name_detailed(raw).variants;
}

// ---------------------------------------------------------------------------
// Property readers

namespace detail {

struct Box {
  double x, y, width, height;
};

inline Box bounding_box(const json& node) {
  auto it = node.find("absoluteBoundingBox");
  if (it == node.end() || !it->is_object()) {
    throw Error(ErrorCode::MissingGeometry,
                "node '" + node.value("name", "") + "' has no absoluteBoundingBox")
        .with_subject(node.value("id", ""));
  }
  auto num = [&](const char* key) {
    auto v = it->find(key);
    if (v == it->end() || !v->is_number()) {
      throw Error(ErrorCode::MissingGeometry,
                  "node '" + node.value("name", "") + "' bounding box lacks " + key);
    }
    return round2(v->get<double>());
  };
  return {num("x"), num("y"), std::max(0.0, num("width")), std::max(0.0, num("height"))};
}

inline std::optional<ColorValue> paint_color(const json& paint) {
  auto it = paint.find("color");
  if (it == paint.end() || !it->is_object()) return std::nullopt;
  ColorValue c{it->value("r", 0.0), it->value("g", 0.0), it->value("b", 0.0), it->value("a", 1.0)};
  c.a *= paint.value("opacity", 1.0);
  c = {std::clamp(c.r, 0.0, 1.0), std::clamp(c.g, 0.0, 1.0), std::clamp(c.b, 0.0, 1.0),
       std::clamp(c.a, 0.0, 1.0)};
  return c.normalized();
}

// First visible paint of a paint list.
inline const json* first_paint(const json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end() || !it->is_array()) return nullptr;
  for (const auto& paint : *it) {
    if (paint.value("visible", true)) return &paint;
  }
  return nullptr;
}

inline std::optional<ColorValue> first_color(const json& node, const char* key) {
  const auto* paint = first_paint(node, key);
  return paint ? paint_color(*paint) : std::nullopt;
}

inline std::optional<double> number_at(const json& node, const char* key) {
  auto it = node.find(key);
  if (it == node.end() || !it->is_number()) return std::nullopt;
  return round2(it->get<double>());
}

inline std::optional<EffectSpec> first_effect(const json& node) {
  auto it = node.find("effects");
  if (it == node.end() || !it->is_array()) return std::nullopt;
  for (const auto& effect : *it) {
    if (!effect.value("visible", true)) continue;
    const auto type = effect.value("type", "");
    if (type.empty()) continue;
    EffectSpec spec;
    spec.effect_name = type;
    if (auto c = paint_color(effect)) spec.effect_color = *c;
    return spec;
  }
  return std::nullopt;
}

struct Typography {
  std::optional<ColorValue> color;
  std::optional<std::string> family;
  std::optional<double> weight;
  std::optional<double> size;
};

inline Typography typography(const json& text_node) {
  Typography t;
  t.color = first_color(text_node, "fills");
  if (auto style = text_node.find("style"); style != text_node.end() && style->is_object()) {
    if (auto f = style->find("fontFamily"); f != style->end() && f->is_string()) {
      t.family = f->get<std::string>();
    }
    t.weight = number_at(*style, "fontWeight");
    t.size = number_at(*style, "fontSize");
  }
  return t;
}

inline const json* first_text_descendant(const json& node) {
  auto it = node.find("children");
  if (it == node.end() || !it->is_array()) return nullptr;
  for (const auto& child : *it) {
    if (child.value("type", "") == "TEXT") return &child;
    if (const auto* hit = first_text_descendant(child)) return hit;
  }
  return nullptr;
}

}  // namespace detail

/// Flat spec of one COMPONENT variant. Only the first fill, stroke and effect
/// are read; typography comes from the first TEXT descendant.
inline FlatComponentSpec extract_flat(const json& node, const FullComponentName& set_name) {
  FlatComponentSpec spec;
  spec.name = set_name;
  spec.variant_properties = sorted_variants(parse_variant_name(node.value("name", "")));
  const auto box = detail::bounding_box(node);
  spec.x = box.x;
  spec.y = box.y;
  spec.width = box.width;
  spec.height = box.height;
  spec.color = detail::first_color(node, "fills");
  if (detail::first_paint(node, "strokes")) {
    spec.stroke_color = detail::first_color(node, "strokes");
    spec.stroke_weight = detail::number_at(node, "strokeWeight");
  }
  spec.effect = detail::first_effect(node);
  spec.border_radius = detail::number_at(node, "cornerRadius");
  const json* text = node.value("type", "") == "TEXT" ? &node : detail::first_text_descendant(node);
  if (text) {
    auto t = detail::typography(*text);
    spec.text_color = t.color;
    spec.font_family = t.family;
    spec.font_weight = t.weight;
    spec.font_size = t.size;
  }
  return spec;
}

/// Figma node type -> NodeKind, or nullopt for kinds the nested schema skips.
inline std::optional<NodeKind> classify_node(const json& node) {
  const auto type = node.value("type", "");
  if (type == "FRAME" || type == "COMPONENT" || type == "COMPONENT_SET" || type == "INSTANCE") {
    const auto layout = node.value("layoutMode", "NONE");
    return layout == "HORIZONTAL" || layout == "VERTICAL" ? NodeKind::AutoLayout : NodeKind::Frame;
  }
  if (type == "GROUP") return NodeKind::Group;
  if (type == "TEXT") return NodeKind::Text;
  if (type == "VECTOR" || type == "RECTANGLE" || type == "ELLIPSE" || type == "LINE" ||
      type == "STAR" || type == "REGULAR_POLYGON") {
    return NodeKind::Vector;
  }
  return std::nullopt;
}

struct NestedOptions {
  std::size_t max_depth = 32;
};

namespace detail {

inline NestedNode extract_node(const json& node, NodeKind kind, std::size_t depth,
                               const NestedOptions& options, std::vector<std::string>& warnings) {
  if (depth > options.max_depth) {
    throw Error(ErrorCode::DepthLimitExceeded,
                "node tree deeper than " + std::to_string(options.max_depth));
  }
  NestedNode out;
  out.kind = kind;
  out.name = node.value("name", "");
  const auto box = bounding_box(node);
  out.x = box.x;
  out.y = box.y;
  out.width = box.width;
  out.height = box.height;
  if (kind == NodeKind::Text) {
    auto t = typography(node);
    out.text_color = t.color;
    out.font_family = t.family;
    out.font_weight = t.weight;
    out.font_size = t.size;
    if (auto c = node.find("characters"); c != node.end() && c->is_string()) {
      out.characters = c->get<std::string>();
    }
    return out;
  }
  if (kind == NodeKind::Vector) {
    out.color = first_color(node, "fills");
    return out;
  }
  out.color = first_color(node, "fills");
  if (first_paint(node, "strokes")) {
    out.stroke_color = first_color(node, "strokes");
    out.stroke_weight = number_at(node, "strokeWeight");
  }
  out.effect = first_effect(node);
  out.border_radius = number_at(node, "cornerRadius");
  if (auto it = node.find("children"); it != node.end() && it->is_array()) {
    for (const auto& child : *it) {
      const auto child_kind = classify_node(child);
      if (!child_kind) {
        warnings.push_back("skipped unsupported node '" + child.value("name", "") + "' of type " +
                           child.value("type", "?"));
        continue;
      }
      out.children.push_back(extract_node(child, *child_kind, depth + 1, options, warnings));
    }
  }
  return out;
}

}  // namespace detail

/// Recursive extraction mirroring the Figma hierarchy. Unsupported node kinds
/// (and their subtrees) are skipped with a warning; an unsupported root is a
/// MalformedDocument error.
inline NestedNode extract_nested(const json& node, std::vector<std::string>* warnings = nullptr,
                                 NestedOptions options = {}) {
  const auto kind = classify_node(node);
  if (!kind) {
    throw Error(ErrorCode::MalformedDocument,
                "unsupported root node type " + node.value("type", "?"));
  }
  std::vector<std::string> local;
  auto out = detail::extract_node(node, *kind, 0, options, warnings ? *warnings : local);
  return out;
}

struct ExtractedComponent {
  FlatComponentSpec flat;
  NestedNode nested;
  std::string file_stem;  // e.g. Professional_Button_Default__State-Default_Size-Large
};

inline std::string sanitize_file_stem(std::string_view text) {
  std::string out;
  for (unsigned char c : text) {
    if (std::isalnum(c)) {
      out.push_back(static_cast<char>(c));
    } else if (c == '=') {
      out.push_back('-');
    } else if (!out.empty() && out.back() != '_') {
      out.push_back('_');
    }
  }
  while (!out.empty() && out.back() == '_') out.pop_back();
  return out;
}

/// Flat and nested forms of every variant of every conforming component set.
/// The nested root is renamed to the set's full name and carries the variant
/// properties so it is self-describing.
inline std::vector<ExtractedComponent> extract_components(const RawDocument& doc,
                                                          std::vector<std::string>* warnings = nullptr,
                                                          NestedOptions options = {}) {
  std::vector<ExtractedComponent> out;
  auto scan = find_component_sets(doc);
  if (warnings) warnings->insert(warnings->end(), scan.warnings.begin(), scan.warnings.end());
  for (const auto& set : scan.sets) {
    for (const json* variant : component_variants(*set.node)) {
      ExtractedComponent item;
      item.flat = extract_flat(*variant, set.name);
      item.nested = extract_nested(*variant, warnings, options);
      item.nested.name = serialize_full_name(set.name);
      item.nested.variant_properties = item.flat.variant_properties;
      auto stem = sanitize_file_stem(serialize_full_name(set.name));
      const auto variant_name = sanitize_file_stem(variant->value("name", ""));
      if (!variant_name.empty()) stem += "__" + variant_name;
      item.file_stem = std::move(stem);
      out.push_back(std::move(item));
    }
  }
  return out;
}

}  // namespace cogen
