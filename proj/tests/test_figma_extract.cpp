#include <gtest/gtest.h>

#include <set>

#include "cogen/figma_extract.hpp"
#include "support/paths.hpp"

using namespace cogen;

namespace {

const std::set<std::string> kSupported{"FRAME",   "COMPONENT", "COMPONENT_SET", "INSTANCE", "GROUP",
                                       "TEXT",    "VECTOR",    "RECTANGLE",     "ELLIPSE",  "LINE",
                                       "STAR",    "REGULAR_POLYGON"};

// Supported nodes reachable from `node` through supported parents only.
std::size_t supported_count(const json& node) {
  if (!kSupported.count(node.value("type", ""))) return 0;
  std::size_t n = 1;
  if (node.value("type", "") == "TEXT") return n;
  if (node.contains("children")) {
    for (const auto& c : node["children"]) n += supported_count(c);
  }
  return n;
}

RawDocument design_system() { return load_file(testpaths::fixture("design_system.json")); }

}  // namespace

TEST(FindSets, ConformingOnlyInDocumentOrder) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  ASSERT_EQ(scan.sets.size(), 3u);
  EXPECT_EQ(serialize_full_name(scan.sets[0].name), "Professional/Button/Default");
  EXPECT_EQ(serialize_full_name(scan.sets[1].name), "Trendy/Input field/Light");
  EXPECT_EQ(serialize_full_name(scan.sets[2].name), "Playful/Icon button/Dark");
  ASSERT_EQ(scan.warnings.size(), 1u);
  EXPECT_NE(scan.warnings[0].find("Misc/Thing"), std::string::npos);
}

TEST(Variants, ParseNames) {
  const auto v = parse_variant_name("State=Default, Size=Large");
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0], (std::pair<std::string, std::string>{"State", "Default"}));
  EXPECT_EQ(v[1], (std::pair<std::string, std::string>{"Size", "Large"}));
  EXPECT_TRUE(parse_variant_name("").empty());
  const auto odd = parse_variant_name_detailed("Primary, State = Hover, State=Pressed");
  EXPECT_EQ(odd.variants.size(), 2u);
  EXPECT_EQ(odd.warnings.size(), 2u);
  EXPECT_EQ(*find_variant(odd.variants, "State"), "Pressed");
}

TEST(ExtractFlat, GoldenButton) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  const auto variants = component_variants(*scan.sets[0].node);
  ASSERT_EQ(variants.size(), 2u);
  const auto got = canonical_dump(to_json(extract_flat(*variants[0], scan.sets[0].name))) + "\n";
  EXPECT_EQ(got, read_file(testpaths::fixture("golden_button_default.flat.json")));
}

TEST(ExtractFlat, FirstVisiblePaintAndOpacity) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  const auto spec = extract_flat(*component_variants(*scan.sets[1].node)[0], scan.sets[1].name);
  ASSERT_TRUE(spec.color);
  EXPECT_EQ(spec.color->hex(), "#8B5CF680");  // hidden red skipped, opacity 0.5
  EXPECT_FALSE(spec.stroke_color);             // empty strokes list
  EXPECT_FALSE(spec.stroke_weight);
  ASSERT_TRUE(spec.effect);
  EXPECT_EQ(spec.effect->effect_name, "LAYER_BLUR");
  EXPECT_EQ(spec.font_family, "Poppins");      // text found two levels down
  EXPECT_EQ(spec.border_radius, 12.0);
}

TEST(ExtractNested, PreservesSupportedNodeCount) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  for (const auto& set : scan.sets) {
    for (const json* variant : component_variants(*set.node)) {
      std::vector<std::string> warnings;
      const auto tree = extract_nested(*variant, &warnings);
      EXPECT_EQ(node_count(tree), supported_count(*variant)) << variant->value("id", "");
    }
  }
}

TEST(ExtractNested, SkipsUnsupportedWithWarning) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  std::vector<std::string> warnings;
  const auto tree = extract_nested(*component_variants(*scan.sets[0].node)[0], &warnings);
  ASSERT_EQ(tree.children.size(), 2u);  // text + rectangle; boolean op dropped
  EXPECT_EQ(tree.children[0].kind, NodeKind::Text);
  EXPECT_EQ(tree.children[0].characters, "Button");
  EXPECT_EQ(tree.children[1].kind, NodeKind::Vector);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("BOOLEAN_OPERATION"), std::string::npos);
}

TEST(ExtractNested, AutoLayoutAndGroups) {
  const auto doc = design_system();
  const auto scan = find_component_sets(doc);
  const auto input = extract_nested(*component_variants(*scan.sets[1].node)[0]);
  EXPECT_EQ(input.kind, NodeKind::AutoLayout);
  EXPECT_EQ(input.children[0].kind, NodeKind::AutoLayout);
  const auto icon = extract_nested(*component_variants(*scan.sets[2].node)[0]);
  ASSERT_EQ(icon.children.size(), 1u);
  EXPECT_EQ(icon.children[0].kind, NodeKind::Group);
  EXPECT_EQ(icon.children[0].children.size(), 2u);  // sticky note skipped
}

TEST(ExtractNested, FiveLevelsDeep) {
  const auto doc = load_file(testpaths::fixture("deep_nesting.json"));
  const auto scan = find_component_sets(doc);
  ASSERT_EQ(scan.sets.size(), 1u);
  const json& variant = *component_variants(*scan.sets[0].node)[0];
  const auto tree = extract_nested(variant);
  EXPECT_EQ(node_count(tree), supported_count(variant));
  EXPECT_EQ(node_count(tree), 7u);
  const NestedNode* n = &tree;
  for (int depth = 0; depth < 6; ++depth) {
    ASSERT_EQ(n->children.size(), 1u);
    n = &n->children[0];
  }
  EXPECT_EQ(n->kind, NodeKind::Text);
  EXPECT_EQ(n->characters, "deep");

  try {
    extract_nested(variant, nullptr, NestedOptions{3});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DepthLimitExceeded);
  }
}

TEST(ExtractComponents, BothFormsPerVariant) {
  std::vector<std::string> warnings;
  const auto items = extract_components(design_system(), &warnings);
  ASSERT_EQ(items.size(), 4u);
  EXPECT_EQ(items[0].file_stem, "Professional_Button_Default__State-Default_Size-Large");
  EXPECT_EQ(items[1].file_stem, "Professional_Button_Default__State-Hover_Size-Large");
  for (const auto& item : items) {
    EXPECT_EQ(item.nested.name, serialize_full_name(item.flat.name));
    EXPECT_EQ(item.nested.variant_properties, item.flat.variant_properties);
    EXPECT_EQ(flat_from_json(to_json(item.flat)), item.flat);
    EXPECT_EQ(nested_from_json(to_json(item.nested)), item.nested);
  }
}

TEST(Documents, Errors) {
  auto code_of = [](const std::string& text) {
    try {
      parse_document(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidValue;
  };
  EXPECT_EQ(code_of("{not json"), ErrorCode::MalformedDocument);
  EXPECT_EQ(code_of(R"({"name": "no document"})"), ErrorCode::MalformedDocument);
  try {
    load_file(testpaths::fixture("missing.json"));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IoError);
  }
}

TEST(Documents, MissingGeometry) {
  json node = {{"type", "COMPONENT"}, {"name", "State=Default"}};
  EXPECT_THROW(extract_flat(node, parse_full_name("Basic/Button")), Error);
}
