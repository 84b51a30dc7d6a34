#pragma once

#include <string>
#include <vector>

#include "cogen/error.hpp"

namespace corpus {

struct Case {
  std::string label;
  std::string text;
  cogen::ErrorCode expected;
};

// Twenty documents validate_json must reject, each with the error it must raise.
inline std::vector<Case> malformed() {
  using cogen::ErrorCode;
  const std::string ok_tail = R"("height": 40, "width": 120, "x": 0, "y": 0)";
  return {
      // syntax
      {"trailing comma in object", R"({"name": "Basic/Button", )" + ok_tail + ",}",
       ErrorCode::SyntaxError},
      {"trailing comma in array",
       R"({"kind": "frame", "name": "Basic/Button", )" + ok_tail + R"(, "children": [{},]})",
       ErrorCode::SyntaxError},
      {"unterminated object", R"({"name": "Basic/Button", "height": 40)", ErrorCode::SyntaxError},
      {"single quotes", R"({'name': 'Basic/Button'})", ErrorCode::SyntaxError},
      {"line comment", "{\"name\": \"Basic/Button\", // note\n" + ok_tail + "}",
       ErrorCode::SyntaxError},
      {"NaN literal", R"({"name": "Basic/Button", "height": NaN, "width": 1, "x": 0, "y": 0})",
       ErrorCode::SyntaxError},
      {"empty input", "", ErrorCode::SyntaxError},
      {"two documents", R"({"name": "Basic/Button"}{"name": "Basic/Label"})", ErrorCode::SyntaxError},
      // characters
      {"raw newline in string", "{\"name\": \"Basic/\nButton\", " + ok_tail + "}",
       ErrorCode::InvalidCharacter},
      {"raw tab in string", "{\"name\": \"Basic/\tButton\", " + ok_tail + "}",
       ErrorCode::InvalidCharacter},
      {"control byte outside string", "{\x01\"name\": \"Basic/Button\", " + ok_tail + "}",
       ErrorCode::InvalidCharacter},
      {"NUL in string", std::string("{\"name\": \"Basic/Bu\0tton\", ", 26) + ok_tail + "}",
       ErrorCode::InvalidCharacter},
      {"invalid UTF-8", "{\"name\": \"Basic/Button\xff\", " + ok_tail + "}",
       ErrorCode::InvalidCharacter},
      // schema
      {"missing name", "{" + ok_tail + "}", ErrorCode::SchemaViolation},
      {"missing width", R"({"name": "Basic/Button", "height": 40, "x": 0, "y": 0})",
       ErrorCode::SchemaViolation},
      {"missing x and y", R"({"name": "Basic/Button", "height": 40, "width": 120})",
       ErrorCode::SchemaViolation},
      {"nested node without children",
       R"({"kind": "frame", "name": "Basic/Button", )" + ok_tail + "}", ErrorCode::SchemaViolation},
      {"width is a string",
       R"({"name": "Basic/Button", "height": 40, "width": "120", "x": 0, "y": 0})",
       ErrorCode::SchemaViolation},
      {"root is an array", "[" + std::string(R"({"name": "Basic/Button"})") + "]",
       ErrorCode::SchemaViolation},
      {"color channel out of range",
       R"({"name": "Basic/Button", )" + ok_tail + R"(, "color": {"r": 1.5, "g": 0, "b": 0, "a": 1}})",
       ErrorCode::SchemaViolation},
  };
}

}  // namespace corpus
