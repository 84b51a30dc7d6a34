#include <gtest/gtest.h>

#include "cogen/model_adapter.hpp"

using namespace cogen;

namespace {

const std::string kStub = COGEN_ADAPTER_STUB;

ErrorCode code_of(Adapter& a, const GenerationRequest& r) {
  try {
    a.generate(r);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidValue;
}

}  // namespace

TEST(Generator, ProducesValidatedDocument) {
  Generator g;
  const auto out = g.generate({Direction::PromptToJson, "a trendy button", kDefaultMaxLength});
  const auto doc = validate_json(out, SchemaKind::Flat);
  EXPECT_EQ(doc.document["name"], "Trendy/Button/Default");
  Generator nested(SchemaKind::Nested);
  EXPECT_EQ(validate_json(nested.generate({Direction::PromptToJson, "a menu", kDefaultMaxLength})).schema,
            SchemaKind::Nested);
}

TEST(Generator, WrapsErrors) {
  Generator g;
  try {
    g.generate({Direction::PromptToJson, "hello there", kDefaultMaxLength});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AdapterError);
    EXPECT_EQ(e.cause(), ErrorCode::NoComponentKind);
  }
  EXPECT_EQ(code_of(g, {Direction::JsonToPrompt, "{}", kDefaultMaxLength}), ErrorCode::AdapterError);
  EXPECT_EQ(code_of(g, {Direction::PromptToJson, "", kDefaultMaxLength}), ErrorCode::AdapterError);
  EXPECT_EQ(code_of(g, {Direction::PromptToJson, "a button", 3}), ErrorCode::AdapterError);
}

TEST(Describer, DescribesDocuments) {
  Describer d(0);
  Generator g;
  const auto doc = g.generate({Direction::PromptToJson, "a professional label", kDefaultMaxLength});
  const auto prompt = d.generate({Direction::JsonToPrompt, doc, kDefaultMaxLength});
  EXPECT_EQ(parse_intent(prompt).kind, ComponentKind::Label);
  try {
    d.generate({Direction::JsonToPrompt, "{bad", kDefaultMaxLength});
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AdapterError);
    EXPECT_EQ(e.cause(), ErrorCode::SyntaxError);
  }
}

TEST(Factory, KnownSpecs) {
  EXPECT_EQ(make_adapter("describer")->native_direction(), Direction::JsonToPrompt);
  EXPECT_EQ(make_adapter("generator")->native_direction(), Direction::PromptToJson);
  EXPECT_EQ(make_adapter("generator", {SchemaKind::Nested})->name(), "generator(nested)");
  EXPECT_THROW(make_adapter("gpt"), Error);
}

TEST(External, RoundTripsThroughProcess) {
  auto a = make_adapter("exec:" + kStub + " generator");
  for (int i = 0; i < 3; ++i) {  // one process serves many requests
    const auto out = a->generate({Direction::PromptToJson, "a playful icon button", kDefaultMaxLength});
    EXPECT_EQ(validate_json(out).document["name"], "Playful/Icon button/Default");
  }
  EXPECT_EQ(a->name(), "exec:" + kStub + " generator");
}

TEST(External, MatchesInProcessGenerator) {
  ExternalAdapter ext(kStub + " generator", std::chrono::seconds(5));
  Generator g;
  for (auto p : {"a button", "a large trendy menu list", "a label with a font size of 20"}) {
    const GenerationRequest r{Direction::PromptToJson, p, kDefaultMaxLength};
    EXPECT_EQ(ext.generate(r), g.generate(r));
  }
}

TEST(External, ReportedErrorKeepsProcess) {
  ExternalAdapter a(kStub + " error", std::chrono::seconds(5));
  EXPECT_EQ(code_of(a, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::AdapterError);
  EXPECT_EQ(code_of(a, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::AdapterError);
}

TEST(External, ProtocolErrors) {
  ExternalAdapter garbage(kStub + " garbage", std::chrono::seconds(5));
  EXPECT_EQ(code_of(garbage, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::ProtocolError);
  // dead after a protocol error
  EXPECT_EQ(code_of(garbage, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::AdapterError);

  ExternalAdapter shape(kStub + " wrong-shape", std::chrono::seconds(5));
  EXPECT_EQ(code_of(shape, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::ProtocolError);

  ExternalAdapter quits(kStub + " exit", std::chrono::seconds(5));
  const auto code = code_of(quits, {Direction::PromptToJson, "x", kDefaultMaxLength});
  EXPECT_EQ(code, ErrorCode::ProtocolError);
}

TEST(External, Timeout) {
  ExternalAdapter slow(kStub + " sleep 2000", std::chrono::milliseconds(200));
  const auto start = std::chrono::steady_clock::now();
  EXPECT_EQ(code_of(slow, {Direction::PromptToJson, "x", kDefaultMaxLength}), ErrorCode::TimeoutError);
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::milliseconds(1500));
}

TEST(External, SpawnErrors) {
  try {
    ExternalAdapter a("/definitely/not/here --flag", std::chrono::seconds(1));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SpawnError);
  }
  EXPECT_THROW(ExternalAdapter("", std::chrono::seconds(1)), Error);
  EXPECT_THROW(ExternalAdapter("'unterminated", std::chrono::seconds(1)), Error);
}

TEST(External, CommandLineQuoting) {
  const auto argv = detail::split_command_line(R"(prog "a b" 'c d' e\ f)");
  ASSERT_EQ(argv.size(), 4u);
  EXPECT_EQ(argv[1], "a b");
  EXPECT_EQ(argv[2], "c d");
  EXPECT_EQ(argv[3], "e f");
}
