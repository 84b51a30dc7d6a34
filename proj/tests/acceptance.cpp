// Acceptance checks. One PASS/FAIL line per criterion; exit code is the
// number of failures.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "cogen/cogen.hpp"
#include "support/live_service.hpp"
#include "support/malformed_corpus.hpp"
#include "support/oracles.hpp"
#include "support/paths.hpp"
#include "support/random_text.hpp"

using namespace cogen;
using Clock = std::chrono::steady_clock;

namespace {

// Throws on the first broken expectation; message is the detail printed.
struct Failed {
  std::string what;
};

void check(bool ok, const std::string& what) {
  if (!ok) throw Failed{what};
}

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

int failures = 0;

void criterion(const std::string& name, const std::function<std::string()>& body) {
  try {
    const auto note = body();
    std::printf("PASS  %-28s %s\n", name.c_str(), note.c_str());
  } catch (const Failed& f) {
    ++failures;
    std::printf("FAIL  %-28s %s\n", name.c_str(), f.what.c_str());
  } catch (const std::exception& e) {
    ++failures;
    std::printf("FAIL  %-28s exception: %s\n", name.c_str(), e.what());
  }
  std::fflush(stdout);
}

std::string fmt(const char* f, double a, double b = 0) {
  char buf[128];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

// --- round trip

std::vector<FlatComponentSpec> fuzz_specs(std::size_t n, std::uint64_t seed) {
  auto specs = synthetic_specs(n, seed);
  std::mt19937_64 rng(seed ^ 0x5eedULL);
  std::uniform_real_distribution<double> value(0.0, 100.0);
  for (auto& s : specs) {
    switch (rng() % 3) {
      case 0: s.border_radius = round2(value(rng)); break;
      case 1: s.border_radius.reset(); break;
      default: break;
    }
    switch (rng() % 3) {
      case 0: s.stroke_weight = round2(value(rng) / 10.0); break;
      case 1: s.stroke_weight.reset(); break;
      default: break;
    }
  }
  return specs;
}

std::string round_trip() {
  const auto start = Clock::now();
  const auto specs = fuzz_specs(500, 2024);
  std::size_t mentioned = 0;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto p = synthesize_prompt_detailed(specs[i], i);
    const auto intent = parse_intent(p.text);
    check(intent.kind == specs[i].name.kind, "kind lost: " + p.text);
    check(intent.style == specs[i].name.style, "style lost: " + p.text);
    for (const auto& [key, v] : p.mentioned) {
      auto it = intent.explicit_properties.find(key);
      check(it != intent.explicit_properties.end() && it->second == v, key + " lost: " + p.text);
      ++mentioned;
    }
  }
  const double t = seconds_since(start);
  check(t < 10.0, fmt("took %.2fs", t));
  return fmt("500/500 specs, %.0f properties, %.3fs", static_cast<double>(mentioned), t);
}

// --- success rate

class DropStyle : public Adapter {
 public:
  std::string generate(const GenerationRequest& r) override {
    auto doc = json::parse(inner_.generate(r));
    const auto name = doc["name"].get<std::string>();
    doc["name"] = name.substr(name.find('/') + 1);
    return doc.dump();
  }
  std::string name() const override { return "generator-without-style"; }
  Direction native_direction() const override { return Direction::PromptToJson; }

 private:
  Generator inner_;
};

std::string success_rate() {
  const auto keys = default_dataset_keys(SchemaKind::Flat);
  Generator g;
  for (const auto& row : success_rate_table(default_prompt_suite(), g, keys)) {
    check(row.pass == 5.0 && row.fail == 0.0 && row.rate == 1.0,
          std::string(display_name(row.kind)) + fmt(" scored %.2f", row.rate));
  }
  DropStyle d;
  for (const auto& row : success_rate_table(default_prompt_suite(), d, keys)) {
    check(row.pass == 3.75 && row.fail == 1.25 && row.rate == 0.75,
          std::string(display_name(row.kind)) + fmt(" without style scored %.4f", row.rate));
  }
  return "6 kinds at 100%; without style 3.75/1.25/75%";
}

// --- metrics

std::string metric_oracles() {
  const auto start = Clock::now();
  std::mt19937_64 rng(99);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto c = randtext::sentence(rng, 1, 14, 6);
    const auto r1 = randtext::sentence(rng, 1, 14, 6);
    const auto r2 = randtext::sentence(rng, 1, 14, 6);
    check(tokenize(randtext::join(c)) == c, "tokenizer altered plain words");
    const std::vector<std::string> refs{randtext::join(r1), randtext::join(r2)};
    const auto ct = randtext::join(c);
    auto near = [&](double a, double b) {
      worst = std::max(worst, std::abs(a - b));
      check(std::abs(a - b) <= 1e-9, fmt("pair %.0f off by %.3g", i, std::abs(a - b)));
    };
    near(bleu(ct, refs), oracle::bleu(c, {r1, r2}));
    for (std::size_t n : {1u, 2u}) {
      const auto got = rouge_n(ct, refs[0], n);
      const auto want = oracle::rouge_n(c, r1, n);
      near(got.precision, want.p);
      near(got.recall, want.r);
      near(got.f1, want.f);
    }
    const auto l = rouge_l(ct, refs[0]);
    const auto wl = oracle::rouge_l(c, r1);
    near(l.precision, wl.p);
    near(l.recall, wl.r);
    near(l.f1, wl.f);
  }
  const std::vector<std::string> self{"generate a professional button with a size of small"};
  check(bleu(self[0], self) == 1.0, "BLEU(x,[x]) != 1");
  const std::vector<std::string> other{"sun moon lake road"};
  const double disjoint = bleu("red blue cat dog", other);
  check(disjoint < 1e-6, fmt("disjoint BLEU %.3g", disjoint));
  const double t = seconds_since(start);
  check(t < 5.0, fmt("took %.2fs", t));
  return fmt("50 pairs, max diff %.2g, %.3fs", worst, t);
}

std::string accuracy_recall() {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> cell(0, 12);
  int matrices = 0;
  while (matrices < 100) {
    const std::size_t k = 2 + rng() % 6;
    std::vector<std::vector<std::size_t>> m(k, std::vector<std::size_t>(k));
    std::vector<std::string> gold, pred;
    // last class stands for "no kind found"
    auto label = [&](std::size_t i) {
      return i + 1 == k ? std::string(kNoneClass) : "k" + std::to_string(i);
    };
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        m[i][j] = static_cast<std::size_t>(cell(rng));
        for (std::size_t c = 0; c < m[i][j]; ++c) {
          gold.push_back(label(i));
          pred.push_back(label(j));
        }
      }
    }
    if (gold.empty()) continue;
    const auto r = classification_report(gold, pred);
    check(std::abs(r.accuracy - r.recall) <= 1e-12,
          fmt("accuracy %.6f vs recall %.6f", r.accuracy, r.recall));
    const auto want = oracle::from_confusion(m);
    check(std::abs(r.accuracy - want.accuracy) <= 1e-12, "accuracy disagrees with oracle");
    ++matrices;
  }
  return "100 random confusion matrices";
}

// --- extraction

std::set<std::string> supported_types() {
  return {"FRAME", "COMPONENT", "COMPONENT_SET", "INSTANCE", "GROUP", "TEXT", "VECTOR",
          "RECTANGLE", "ELLIPSE", "LINE", "STAR", "REGULAR_POLYGON"};
}

std::size_t supported_count(const json& node) {
  static const auto types = supported_types();
  const auto type = node.value("type", "");
  if (!types.count(type)) return 0;
  std::size_t n = 1;
  if (type != "TEXT" && node.contains("children")) {
    for (const auto& c : node["children"]) n += supported_count(c);
  }
  return n;
}

std::string extraction() {
  std::size_t variants = 0, nodes = 0;
  for (const auto* fixture : {"design_system.json", "deep_nesting.json"}) {
    const auto doc = load_file(testpaths::fixture(fixture));
    for (const auto& set : find_component_sets(doc).sets) {
      for (const json* v : component_variants(*set.node)) {
        const auto got = node_count(extract_nested(*v));
        const auto want = supported_count(*v);
        check(got == want, std::string(fixture) + " " + v->value("id", "") +
                               fmt(": %.0f nodes, expected %.0f", static_cast<double>(got),
                                   static_cast<double>(want)));
        ++variants;
        nodes += got;
      }
    }
  }
  const auto doc = load_file(testpaths::fixture("design_system.json"));
  const auto scan = find_component_sets(doc);
  const auto flat = extract_flat(*component_variants(*scan.sets[0].node)[0], scan.sets[0].name);
  const auto got = canonical_dump(to_json(flat)) + "\n";
  check(got == read_file(testpaths::fixture("golden_button_default.flat.json")),
        "flat spec differs from golden");
  return fmt("%.0f variants, %.0f nodes; golden identical", static_cast<double>(variants),
             static_cast<double>(nodes));
}

// --- validator

std::string validator() {
  const auto cases = corpus::malformed();
  check(cases.size() == 20, "corpus size");
  for (const auto& c : cases) {
    try {
      validate_json(c.text);
      check(false, "accepted: " + c.label);
    } catch (const Error& e) {
      check(e.code() == c.expected, c.label + ": got " + std::string(to_string(e.code())));
    }
  }
  std::size_t accepted = 0;
  auto accept = [&](const json& doc, SchemaKind schema) {
    const auto v = validate_json(doc.dump(2), schema);
    check(v.warnings.empty(), "warnings on emitted document");
    ++accepted;
  };
  for (auto kind : kAllKinds) {
    for (auto style : kAllStyles) {
      for (const char* size : {"", "small", "large"}) {
        ComponentIntent intent;
        intent.kind = kind;
        intent.style = style;
        if (*size) intent.explicit_properties.emplace("size", std::string(size));
        accept(to_json(emit_flat(intent)), SchemaKind::Flat);
        accept(to_json(emit_nested(intent)), SchemaKind::Nested);
      }
    }
  }
  for (const auto& s : fuzz_specs(200, 7)) {
    accept(to_json(s), SchemaKind::Flat);
    accept(to_json(nest_spec(s)), SchemaKind::Nested);
  }
  for (const auto& item : extract_components(load_file(testpaths::fixture("design_system.json")))) {
    accept(to_json(item.flat), SchemaKind::Flat);
    accept(to_json(item.nested), SchemaKind::Nested);
  }
  return fmt("20/20 rejected; %.0f/%.0f emitted accepted", static_cast<double>(accepted),
             static_cast<double>(accepted));
}

// --- subset sweep

std::string subset_sweep() {
  std::vector<SpecDocument> specs;
  for (auto& s : synthetic_specs(500, 0)) specs.emplace_back(std::move(s));
  const std::vector<std::size_t> sizes{100, 200, 300, 400, 500};
  auto run = [&] {
    const auto records = build_dataset(specs, 0);
    Describer d(0);
    return subset_eval(records, d, sizes);
  };
  const auto a = run();
  const auto b = run();
  const auto ja = to_json(a).dump(2), jb = to_json(b).dump(2);
  check(ja == jb, "reports differ between runs");
  for (const auto& row : a.rows) {
    check(row.classification.accuracy == 1.0,
          fmt("size %.0f accuracy %.4f", static_cast<double>(row.size), row.classification.accuracy));
  }
  return fmt("sizes 100..500 identical (%.0f bytes), accuracy 1.0", static_cast<double>(ja.size()));
}

// --- service

std::string service_contract() {
  LiveService live;
  auto c = live.client();
  const json body{{"prompt", "generate a professional button with a size of small"}};
  auto res = c.Post("/generate", body.dump(), "application/json");
  check(static_cast<bool>(res), "no response");
  check(res->status == 200, fmt("status %.0f", res->status));
  const auto reply = json::parse(res->body);
  const auto& ins = reply.at("instructions");
  validate_instructions(ins);
  check(ins.size() >= 2, "fewer than two instructions");
  check(ins[0]["op"] == "create_frame", "first op " + ins[0]["op"].dump());
  check(ins[1]["op"] == "create_text", "second op " + ins[1]["op"].dump());
  check(ins[1]["parent"] == 0, "text not inside the frame");
  return fmt("port %.0f: 200, create_frame then create_text", live.port());
}

}  // namespace

int main() {
  criterion("round-trip totality", round_trip);
  criterion("success-rate protocol", success_rate);
  criterion("metric oracle equivalence", metric_oracles);
  criterion("accuracy equals recall", accuracy_recall);
  criterion("extraction correctness", extraction);
  criterion("validator", validator);
  criterion("subset sweep determinism", subset_sweep);
  criterion("service contract", service_contract);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
