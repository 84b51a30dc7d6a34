#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <thread>

#include "cogen/cogen.hpp"
#include "support/paths.hpp"

using namespace cogen;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with FIGMA_TOKEN and COGEN_* cleared; stderr is discarded.
Run cli(const std::string& args) {
  const std::string cmd = "env -u FIGMA_TOKEN -u COGEN_SEED -u COGEN_SCHEMA -u COGEN_ADAPTER '" +
                          std::string(COGEN_CLI) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override { dir_ = testpaths::scratch_dir("cli"); }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, GeneratePrintsCanonicalJson) {
  const auto r = cli("generate 'generate a professional button with a size of small'");
  ASSERT_EQ(r.code, 0);
  const auto doc = validate_json(r.out, SchemaKind::Flat);
  EXPECT_EQ(doc.document["name"], "Professional/Button/Default");
  EXPECT_EQ(r.out, canonical_dump(doc.document) + "\n");
}

TEST_F(CliTest, GenerateNestedWithInstructions) {
  const auto ins = dir_ / "ins.json";
  const auto r = cli("generate 'a trendy menu list' --schema nested --emit-instructions " + q(ins));
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).contains("children"));
  const auto payload = json::parse(read_file(ins));
  EXPECT_NO_THROW(validate_instructions(payload));
  EXPECT_EQ(payload[0]["op"], "create_frame");
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(cli("generate 'hello'").code, 4);
  {
    std::ofstream(dir_ / "bad.json") << "{\"name\": \"Basic/Button\",}";
  }
  EXPECT_EQ(cli("describe " + q(dir_ / "bad.json")).code, 3);
  EXPECT_EQ(cli("generate 'a button' --schema tree").code, 1);
  EXPECT_NE(cli("frobnicate").code, 0);
}

TEST_F(CliTest, ExtractAuthFailure) {
  httplib::Server server;
  server.Get(R"(/v1/files/(\w+))", [](const httplib::Request&, httplib::Response& res) {
    res.status = 403;
    res.set_content(R"({"status":403,"err":"Invalid token"})", "application/json");
  });
  const int port = server.bind_to_any_port("127.0.0.1");
  std::thread t([&] { server.listen_after_bind(); });
  server.wait_until_ready();
  const auto r = cli("extract --file-key abc --token nope --base-url http://127.0.0.1:" +
                     std::to_string(port) + " --cache-dir " + q(dir_ / "cache") + " --out " + q(dir_));
  server.stop();
  t.join();
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(cli("extract --file-key abc --offline --cache-dir " + q(dir_ / "cache")).code, 1);
}

TEST_F(CliTest, ExtractFixtureWritesBothForms) {
  const auto r = cli("extract --path " + q(testpaths::fixture("design_system.json")) + " --out " + q(dir_));
  ASSERT_EQ(r.code, 0);
  std::size_t flat = 0, nested = 0;
  for (const auto& e : fs::directory_iterator(dir_)) {
    const auto name = e.path().filename().string();
    if (name.ends_with(".flat.json")) ++flat;
    if (name.ends_with(".nested.json")) ++nested;
    EXPECT_NO_THROW(validate_json(read_file(e.path())));
  }
  EXPECT_EQ(flat, 4u);
  EXPECT_EQ(nested, 4u);
  EXPECT_EQ(read_file(dir_ / "Professional_Button_Default__State-Default_Size-Large.flat.json"),
            read_file(testpaths::fixture("golden_button_default.flat.json")));
}

TEST_F(CliTest, SynthThenEval) {
  const auto data = dir_ / "data.jsonl";
  ASSERT_EQ(cli("synth --count 60 --seed 4 -o " + q(data)).code, 0);
  const auto records = from_jsonl(read_file(data));
  ASSERT_EQ(records.size(), 60u);
  const auto report = dir_ / "report.json";
  const auto r = cli("eval --dataset " + q(data) + " --sizes 20,60 --adapter describer --out " + q(report));
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(read_file(report));
  ASSERT_EQ(j["rows"].size(), 2u);
  EXPECT_EQ(j["rows"][1]["accuracy"], 1.0);
  EXPECT_EQ(cli("eval --dataset " + q(data) + " --sizes 20,600 --adapter describer").code, 1);
}

TEST_F(CliTest, SynthNestedAndSuccessMode) {
  const auto data = dir_ / "nested.jsonl";
  ASSERT_EQ(cli("synth --count 10 --schema nested -o " + q(data)).code, 0);
  for (const auto& rec : from_jsonl(read_file(data))) EXPECT_TRUE(rec.document.contains("children"));
  const auto r = cli("eval --mode success --adapter generator");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("100.0%"), std::string::npos);
}

TEST_F(CliTest, ConfigFileAndFlagPrecedence) {
  std::ofstream(dir_ / "cfg.json") << R"({"schema": "nested"})";
  auto r = cli("--config " + q(dir_ / "cfg.json") + " generate 'a button'");
  ASSERT_EQ(r.code, 0);
  EXPECT_TRUE(json::parse(r.out).contains("children"));
  r = cli("--config " + q(dir_ / "cfg.json") + " generate 'a button' --schema flat");
  ASSERT_EQ(r.code, 0);
  EXPECT_FALSE(json::parse(r.out).contains("children"));
}

TEST_F(CliTest, EvalExternalDescriberDirection) {
  const auto data = dir_ / "data.jsonl";
  ASSERT_EQ(cli("synth --count 20 -o " + q(data)).code, 0);
  const auto report = dir_ / "report.json";
  const auto r = cli("eval --dataset " + q(data) + " --sizes 20 --direction json_to_prompt --adapter " +
                     q(std::string("exec:") + COGEN_ADAPTER_STUB + " echo") + " --out " + q(report));
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(read_file(report))["direction"], "json_to_prompt");
}
