#include <gtest/gtest.h>

#include "cogen/service.hpp"
#include "support/live_service.hpp"

using namespace cogen;

namespace {

Service& service() {
  static Service s(StylePresetTable::builtin(), Lexicon::builtin());
  return s;
}

json prompt_body(const std::string& p) { return {{"prompt", p}}; }

}  // namespace

TEST(Handlers, GenerateReturnsDocumentAndInstructions) {
  const auto r = service().handle_generate(
      prompt_body("generate a professional button with a size of small").dump());
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(r.body["schema"], "flat");
  EXPECT_EQ(r.body["json"]["name"], "Professional/Button/Default");
  const auto& ins = r.body["instructions"];
  ASSERT_EQ(ins.size(), 2u);
  EXPECT_EQ(ins[0]["op"], "create_frame");
  EXPECT_EQ(ins[1]["op"], "create_text");
  EXPECT_EQ(ins[1]["parent"], 0);
  EXPECT_NO_THROW(validate_json(r.body["json"].dump(), SchemaKind::Flat));
}

TEST(Handlers, GenerateNestedOnRequest) {
  json body = prompt_body("a playful menu list");
  body["schema"] = "nested";
  const auto r = service().handle_generate(body.dump());
  ASSERT_EQ(r.status, 200);
  EXPECT_EQ(r.body["schema"], "nested");
  EXPECT_TRUE(r.body["json"].contains("children"));
  body["schema"] = "tree";
  EXPECT_EQ(service().handle_generate(body.dump()).status, 400);
}

TEST(Handlers, GenerateErrors) {
  EXPECT_EQ(service().handle_generate("{}").status, 400);
  EXPECT_EQ(service().handle_generate("not json").status, 400);
  EXPECT_EQ(service().handle_generate("[1]").status, 400);
  EXPECT_EQ(service().handle_generate(prompt_body("   ").dump()).status, 400);
  const auto r = service().handle_generate(prompt_body("hello").dump());
  EXPECT_EQ(r.status, 422);
  EXPECT_EQ(r.body["error"]["code"], "NoComponentKind");
  EXPECT_FALSE(r.body["error"]["message"].get<std::string>().empty());
}

TEST(Handlers, Describe) {
  const auto doc = service().handle_generate(prompt_body("a trendy label").dump()).body["json"];
  const auto r = service().handle_describe(json{{"json", doc}, {"seed", 3}}.dump());
  ASSERT_EQ(r.status, 200) << r.body.dump();
  EXPECT_EQ(parse_intent(r.body["prompt"].get<std::string>()).kind, ComponentKind::Label);
  const auto as_string = service().handle_describe(json{{"json", doc.dump()}, {"seed", 3}}.dump());
  EXPECT_EQ(as_string.body, r.body);
  EXPECT_EQ(service().handle_describe(json{{"json", "{bad"}}.dump()).status, 400);
  EXPECT_EQ(service().handle_describe(json{{"json", doc}, {"seed", -1}}.dump()).status, 400);
  EXPECT_EQ(service().handle_describe("{}").status, 400);
}

TEST(Live, GenerateOverHttp) {
  LiveService live;
  auto c = live.client();
  auto res = c.Post("/generate", prompt_body("generate a professional button with a size of small").dump(),
                    "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  const auto body = json::parse(res->body);
  EXPECT_EQ(body["instructions"][0]["op"], "create_frame");
  EXPECT_EQ(body["instructions"][1]["op"], "create_text");

  res = c.Post("/generate", "{}", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 400);
  res = c.Post("/generate", prompt_body("hello").dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 422);
}

TEST(Live, HealthCorsAndUnknownRoutes) {
  LiveService live;
  auto c = live.client();
  auto res = c.Get("/health");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(json::parse(res->body)["status"], "ok");

  res = c.Options("/generate");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 204);
  EXPECT_EQ(res->get_header_value("Access-Control-Allow-Origin"), "*");
  EXPECT_NE(res->get_header_value("Access-Control-Allow-Methods").find("POST"), std::string::npos);

  res = c.Get("/nowhere");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_EQ(json::parse(res->body)["error"]["code"], "NotFound");
}

TEST(Live, DescribeOverHttp) {
  LiveService live;
  auto c = live.client();
  const auto doc = service().handle_generate(prompt_body("an icon button").dump()).body["json"];
  auto res = c.Post("/describe", json{{"json", doc}}.dump(), "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_TRUE(json::parse(res->body).contains("prompt"));
}

TEST(Config, Precedence) {
  const json file{{"adapter", "describer"}, {"seed", 1}, {"port", 9000}, {"schema", "nested"}};
  std::map<std::string, std::string> env{{"COGEN_SEED", "2"}, {"COGEN_PORT", "9100"}};
  const EnvLookup lookup = [&](const std::string& k) -> std::optional<std::string> {
    auto it = env.find(k);
    return it == env.end() ? std::nullopt : std::optional<std::string>(it->second);
  };
  auto cfg = resolve_config(file, lookup, {{"seed", "3"}});
  EXPECT_EQ(cfg.adapter, "describer");  // file only
  EXPECT_EQ(cfg.schema, SchemaKind::Nested);
  EXPECT_EQ(cfg.port, 9100);            // env beats file
  EXPECT_EQ(cfg.seed, 3u);              // flag beats env
  EXPECT_EQ(cfg.bind, kLocalhost);

  env["FIGMA_TOKEN"] = "from-env";
  EXPECT_EQ(resolve_config(nullptr, lookup, {}).token, "from-env");
  EXPECT_EQ(resolve_config(nullptr, lookup, {{"token", "flag"}}).token, "flag");
}

TEST(Config, Rejects) {
  const EnvLookup none = [](const std::string&) { return std::nullopt; };
  EXPECT_THROW(resolve_config(nullptr, none, {{"port", "80"}}), Error);
  EXPECT_THROW(resolve_config(nullptr, none, {{"port", "70000"}}), Error);
  EXPECT_THROW(resolve_config(nullptr, none, {{"seed", "-4"}}), Error);
  EXPECT_THROW(resolve_config(json{{"colour", "red"}}, none, {}), Error);
  EXPECT_THROW(resolve_config(json::array(), none, {}), Error);
  EXPECT_EQ(resolve_config(nullptr, none, {}).port, kDefaultPort);
}

TEST(Config, StatusMapping) {
  EXPECT_EQ(http_status_for(ErrorCode::NoComponentKind), 422);
  EXPECT_EQ(http_status_for(ErrorCode::SchemaViolation), 400);
  EXPECT_EQ(http_status_for(ErrorCode::IoError), 500);
}
