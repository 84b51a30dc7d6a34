#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <utility>

#include "cogen/builtin_data.hpp"
#include "cogen/component_model.hpp"

namespace cogen {

/// Default flat-spec values for every (kind, style) pair. Loaded from a
/// versioned document keyed by "<Style>/<Kind>"; the table must be total.
class StylePresetTable {
 public:
  static StylePresetTable from_json(const json& doc) {
    if (!doc.is_object() || !doc.contains("presets") || !doc["presets"].is_object()) {
      throw Error(ErrorCode::MalformedDocument, "preset document needs a 'presets' object");
    }
    StylePresetTable table;
    table.version_ = doc.value("version", 0);
    for (const auto& [key, body] : doc["presets"].items()) {
      FullComponentName name;
      try {
        name = parse_full_name(key);
      } catch (const Error& e) {
        throw Error(ErrorCode::MalformedDocument, "bad preset key '" + key + "': " + e.what());
      }
      if (name.subtype) {
        throw Error(ErrorCode::MalformedDocument, "preset key '" + key + "' has a subtype");
      }
      json spec_doc = body;
      name.subtype = "Default";
      spec_doc["name"] = serialize_full_name(name);
      FlatComponentSpec spec;
      try {
        spec = flat_from_json(spec_doc);
      } catch (const Error& e) {
        throw Error(ErrorCode::MalformedDocument, "preset '" + key + "': " + e.what());
      }
      table.presets_[{name.kind, name.style}] = std::move(spec);
    }
    for (auto kind : kAllKinds) {
      for (auto style : kAllStyles) {
        if (!table.presets_.count({kind, style})) {
          throw Error(ErrorCode::MalformedDocument,
                      "missing preset " + std::string(display_name(style)) + "/" +
                          std::string(display_name(kind)));
        }
      }
    }
    return table;
  }

  static StylePresetTable load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::IoError, "cannot open presets " + path.string());
    std::stringstream buf;
    buf << in.rdbuf();
    try {
      return from_json(json::parse(buf.str()));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::MalformedDocument, path.string() + ": " + e.what());
    }
  }

  static const StylePresetTable& builtin() {
    static const StylePresetTable table = from_json(json::parse(builtin::kPresetsJson));
    return table;
  }

  int version() const { return version_; }

  /// The preset named `Style/Kind/Default`.
  const FlatComponentSpec& at(ComponentKind kind, StyleTheme style) const {
    return presets_.at({kind, style});
  }

  std::size_t size() const { return presets_.size(); }

 private:
  int version_ = 0;
  std::map<std::pair<ComponentKind, StyleTheme>, FlatComponentSpec> presets_;
};

}  // namespace cogen
