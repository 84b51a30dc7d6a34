#include <gtest/gtest.h>

#include "cogen/builtin_data.hpp"
#include "cogen/figma_extract.hpp"
#include "support/paths.hpp"

using namespace cogen;

// The embedded tables must track the files shipped under data/.
TEST(BuiltinData, LexiconMatchesFile) {
  EXPECT_EQ(json::parse(builtin::kLexiconJson), json::parse(read_file(testpaths::data("lexicon.json"))));
}

TEST(BuiltinData, PresetsMatchFile) {
  EXPECT_EQ(json::parse(builtin::kPresetsJson), json::parse(read_file(testpaths::data("presets.json"))));
}
