#pragma once

// Evaluation: BLEU, ROUGE-1/2/L, component-name classification reports,
// subset sweeps, and the four-criterion success-rate protocol.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cogen/json_emitter.hpp"
#include "cogen/model_adapter.hpp"
#include "cogen/prompt_parser.hpp"
#include "cogen/prompt_synthesis.hpp"

namespace cogen {

/// Floor applied to zero n-gram precisions so short texts keep a nonzero BLEU.
inline constexpr double kBleuEpsilon = 1e-9;

using Tokens = std::vector<std::string>;
using NgramCounts = std::map<Tokens, std::size_t>;

inline NgramCounts ngram_counts(const Tokens& tokens, std::size_t n) {
  NgramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    ++counts[Tokens(tokens.begin() + static_cast<std::ptrdiff_t>(i),
                    tokens.begin() + static_cast<std::ptrdiff_t>(i + n))];
  }
  return counts;
}

namespace detail {

struct BleuStats {
  std::vector<std::size_t> matches;  // clipped, per order
  std::vector<std::size_t> totals;
  std::size_t candidate_length = 0;
  std::size_t reference_length = 0;
};

inline void accumulate_bleu(const Tokens& candidate, std::span<const Tokens> references,
                            std::size_t max_n, BleuStats& stats) {
  stats.matches.resize(max_n, 0);
  stats.totals.resize(max_n, 0);
  for (std::size_t n = 1; n <= max_n; ++n) {
    const auto cand = ngram_counts(candidate, n);
    NgramCounts max_ref;
    for (const auto& ref : references) {
      for (const auto& [gram, count] : ngram_counts(ref, n)) {
        auto& slot = max_ref[gram];
        slot = std::max(slot, count);
      }
    }
    for (const auto& [gram, count] : cand) {
      auto it = max_ref.find(gram);
      stats.matches[n - 1] += std::min(count, it == max_ref.end() ? 0 : it->second);
      stats.totals[n - 1] += count;
    }
  }
  // Closest reference length, ties to the shorter one.
  std::size_t best = references.front().size();
  for (const auto& ref : references) {
    const auto d = [&](std::size_t len) {
      return len > candidate.size() ? len - candidate.size() : candidate.size() - len;
    };
    if (d(ref.size()) < d(best) || (d(ref.size()) == d(best) && ref.size() < best)) {
      best = ref.size();
    }
  }
  stats.candidate_length += candidate.size();
  stats.reference_length += best;
}

inline double bleu_from_stats(const BleuStats& stats, std::size_t max_n) {
  if (stats.candidate_length == 0) return 0.0;
  double log_sum = 0.0;
  for (std::size_t n = 0; n < max_n; ++n) {
    double p = stats.totals[n] == 0 ? 0.0
                                    : static_cast<double>(stats.matches[n]) /
                                          static_cast<double>(stats.totals[n]);
    if (p == 0.0) p = kBleuEpsilon;
    log_sum += std::log(p);
  }
  const double c = static_cast<double>(stats.candidate_length);
  const double r = static_cast<double>(stats.reference_length);
  const double brevity = c > r ? 1.0 : std::exp(1.0 - r / c);
  return brevity * std::exp(log_sum / static_cast<double>(max_n));
}

inline std::vector<Tokens> tokenize_all(std::span<const std::string> texts, const Lexicon& lexicon) {
  std::vector<Tokens> out;
  for (const auto& t : texts) out.push_back(tokenize(t, lexicon));
  return out;
}

}  // namespace detail

/// Sentence BLEU with modified n-gram precision, brevity penalty against the
/// closest reference length, and epsilon smoothing of zero precisions.
inline double bleu(const std::string& candidate, std::span<const std::string> references,
                   std::size_t max_n = 4, const Lexicon& lexicon = Lexicon::builtin()) {
  if (max_n == 0) throw Error(ErrorCode::InvalidValue, "max_n must be at least 1");
  const auto cand = tokenize(candidate, lexicon);
  if (cand.empty() || references.empty()) throw Error(ErrorCode::EmptyInput, "BLEU needs text");
  const auto refs = detail::tokenize_all(references, lexicon);
  for (const auto& r : refs) {
    if (r.empty()) throw Error(ErrorCode::EmptyInput, "empty BLEU reference");
  }
  detail::BleuStats stats;
  detail::accumulate_bleu(cand, refs, max_n, stats);
  return detail::bleu_from_stats(stats, max_n);
}

/// Corpus BLEU: counts pooled over all (candidate, references) pairs. Empty
/// candidates contribute length 0 and no n-grams.
inline double corpus_bleu(std::span<const std::string> candidates,
                          std::span<const std::vector<std::string>> references, std::size_t max_n = 4,
                          const Lexicon& lexicon = Lexicon::builtin()) {
  if (candidates.empty() || candidates.size() != references.size()) {
    throw Error(ErrorCode::EmptyInput, "corpus BLEU needs matching candidates and references");
  }
  detail::BleuStats stats;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto refs = detail::tokenize_all(references[i], lexicon);
    if (refs.empty()) throw Error(ErrorCode::EmptyInput, "candidate without references");
    detail::accumulate_bleu(tokenize(candidates[i], lexicon), refs, max_n, stats);
  }
  return detail::bleu_from_stats(stats, max_n);
}

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  bool operator==(const RougeScore&) const = default;
};

inline double harmonic_f1(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

inline RougeScore rouge_n(const std::string& candidate, const std::string& reference, std::size_t n,
                          const Lexicon& lexicon = Lexicon::builtin()) {
  if (n == 0) throw Error(ErrorCode::InvalidValue, "ROUGE-N needs n >= 1");
  const auto cand = tokenize(candidate, lexicon);
  const auto ref = tokenize(reference, lexicon);
  if (ref.size() < n || cand.size() < n) return {};
  const auto c = ngram_counts(cand, n);
  const auto r = ngram_counts(ref, n);
  std::size_t overlap = 0;
  for (const auto& [gram, count] : c) {
    if (auto it = r.find(gram); it != r.end()) overlap += std::min(count, it->second);
  }
  RougeScore s;
  s.precision = static_cast<double>(overlap) / static_cast<double>(cand.size() - n + 1);
  s.recall = static_cast<double>(overlap) / static_cast<double>(ref.size() - n + 1);
  s.f1 = harmonic_f1(s.precision, s.recall);
  return s;
}

inline std::size_t lcs_length(const Tokens& a, const Tokens& b) {
  std::vector<std::size_t> row(b.size() + 1, 0);
  for (const auto& x : a) {
    std::size_t diag = 0;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const auto up = row[j];
      row[j] = x == b[j - 1] ? diag + 1 : std::max(row[j], row[j - 1]);
      diag = up;
    }
  }
  return row[b.size()];
}

inline RougeScore rouge_l(const std::string& candidate, const std::string& reference,
                          const Lexicon& lexicon = Lexicon::builtin()) {
  const auto cand = tokenize(candidate, lexicon);
  const auto ref = tokenize(reference, lexicon);
  if (cand.empty() || ref.empty()) return {};
  const auto lcs = static_cast<double>(lcs_length(cand, ref));
  RougeScore s;
  s.precision = lcs / static_cast<double>(cand.size());
  s.recall = lcs / static_cast<double>(ref.size());
  s.f1 = harmonic_f1(s.precision, s.recall);
  return s;
}

// ---------------------------------------------------------------------------
// Classification

inline constexpr std::string_view kNoneClass = "none";

struct ClassificationReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t total = 0;
  std::map<std::string, std::size_t> support;  // gold count per class
  std::string averaging = "weighted";

  bool operator==(const ClassificationReport&) const = default;
};

/// Single-label multi-class report; P/R/F1 are averaged with weights equal to
/// each class's gold support.
inline ClassificationReport classification_report(std::span<const std::string> gold,
                                                  std::span<const std::string> predicted) {
  if (gold.empty() || gold.size() != predicted.size()) {
    throw Error(ErrorCode::EmptyInput, "classification needs matching, nonempty label lists");
  }
  std::map<std::string, std::size_t> tp;
  std::map<std::string, std::size_t> predicted_count;
  ClassificationReport report;
  report.total = gold.size();
  std::size_t correct = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    ++report.support[gold[i]];
    ++predicted_count[predicted[i]];
    if (gold[i] == predicted[i]) {
      ++tp[gold[i]];
      ++correct;
    }
  }
  const double n = static_cast<double>(gold.size());
  report.accuracy = static_cast<double>(correct) / n;
  for (const auto& [label, support] : report.support) {
    const double weight = static_cast<double>(support) / n;
    const double hits = static_cast<double>(tp[label]);
    const auto pc = predicted_count[label];
    const double p = pc == 0 ? 0.0 : hits / static_cast<double>(pc);
    const double r = hits / static_cast<double>(support);
    report.precision += weight * p;
    report.recall += weight * r;
    report.f1 += weight * harmonic_f1(p, r);
  }
  return report;
}

struct NamePair {
  std::string generated_prompt;
  FlatComponentSpec gold;
};

/// Kind named in each generated prompt (first kind token, or "none") against
/// the gold spec's kind.
inline ClassificationReport component_name_accuracy(std::span<const NamePair> pairs,
                                                    const Lexicon& lexicon = Lexicon::builtin()) {
  if (pairs.empty()) throw Error(ErrorCode::EmptyInput, "no prompt/spec pairs");
  std::vector<std::string> gold;
  std::vector<std::string> predicted;
  for (const auto& p : pairs) {
    gold.emplace_back(display_name(p.gold.name.kind));
    const auto kind = find_kind(p.generated_prompt, lexicon);
    predicted.emplace_back(kind ? display_name(*kind) : kNoneClass);
  }
  return classification_report(gold, predicted);
}

// ---------------------------------------------------------------------------
// Document inspection shared by subset_eval and the success-rate scorer

namespace detail {

inline std::string document_name(const json& doc) {
  if (!doc.is_object()) return {};
  auto it = doc.find("name");
  return it != doc.end() && it->is_string() ? it->get<std::string>() : std::string{};
}

// Per-segment match so a name missing its style still yields its kind.
inline std::optional<ComponentKind> kind_in_name(std::string_view name) {
  for (const auto& part : split(name, '/')) {
    if (auto k = match_kind(trim(part))) return k;
  }
  return std::nullopt;
}

inline std::optional<StyleTheme> style_in_name(std::string_view name) {
  for (const auto& part : split(name, '/')) {
    if (auto s = match_style(trim(part))) return s;
  }
  return std::nullopt;
}

// Flat view of a validated document regardless of whether its name parses.
inline std::optional<FlatComponentSpec> lenient_flat(const ValidatedDocument& doc) {
  json copy = doc.document;
  copy["name"] = "Basic/Button";
  try {
    return doc.schema == SchemaKind::Flat ? flat_from_json(copy) : flatten(nested_from_json(copy));
  } catch (const Error&) {
    return std::nullopt;
  }
}

inline bool property_present(const FlatComponentSpec& spec, const std::string& key,
                             const PropertyValue& value) {
  constexpr double kTol = 1e-9;
  auto same_number = [&](const std::optional<double>& field) {
    return field && std::abs(round2(*field) - round2(std::get<double>(value))) <= kTol;
  };
  auto same_color = [&](const std::optional<ColorValue>& field) {
    return field && field->same_as(std::get<ColorValue>(value));
  };
  if (key == props::kSize) {
    const auto* v = find_variant(spec.variant_properties, "Size");
    return v && lower(trim(*v)) == lower(std::get<std::string>(value));
  }
  if (key == props::kEffect) {
    return spec.effect && lower(spec.effect->effect_name) == lower(std::get<std::string>(value));
  }
  if (key == props::kFontFamily) {
    return spec.font_family && lower(*spec.font_family) == lower(std::get<std::string>(value));
  }
  if (key == props::kBorderRadius) return same_number(spec.border_radius);
  if (key == props::kStrokeWeight) return same_number(spec.stroke_weight);
  if (key == props::kFontSize) return same_number(spec.font_size);
  if (key == props::kFontWeight) return same_number(spec.font_weight);
  if (key == props::kWidth) return same_number(spec.width);
  if (key == props::kHeight) return same_number(spec.height);
  if (key == props::kColor) return same_color(spec.color);
  if (key == props::kStrokeColor) return same_color(spec.stroke_color);
  if (key == props::kTextColor) return same_color(spec.text_color);
  return false;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Success rate

struct CriterionResult {
  bool properties = false;      // variant details and properties identified
  bool component_name = false;  // kind identified
  bool style = false;           // style identified
  bool dataset_keys = false;    // document keys cover the dataset keys
  double success_rate = 0.0;    // 0.25 per passed criterion

  int passed() const {
    return int(properties) + int(component_name) + int(style) + int(dataset_keys);
  }
  bool operator==(const CriterionResult&) const = default;
};

/// Keys every emitted document of a schema carries.
inline std::vector<std::string> default_dataset_keys(SchemaKind schema) {
  std::vector<std::string> out;
  if (schema == SchemaKind::Nested) {
    for (auto k : keys::kNestedDataset) out.emplace_back(k);
  } else {
    for (auto k : keys::kFlatDataset) out.emplace_back(k);
  }
  return out;
}

/// Top-level keys present in every dataset document.
inline std::vector<std::string> dataset_keys_from(std::span<const DatasetRecord> records) {
  if (records.empty()) throw Error(ErrorCode::EmptyInput, "no dataset records");
  std::map<std::string, std::size_t> seen;
  for (const auto& r : records) {
    if (!r.document.is_object()) continue;
    for (const auto& [k, v] : r.document.items()) ++seen[k];
  }
  std::vector<std::string> out;
  for (const auto& [k, n] : seen) {
    if (n == records.size()) out.push_back(k);
  }
  return out;
}

/// Scores one generated document against the intent of its prompt. Each of the
/// four criteria is pass/fail and worth 0.25.
inline CriterionResult success_rate_score(std::string_view prompt, const ValidatedDocument& generated,
                                          std::span<const std::string> dataset_keys,
                                          const Lexicon& lexicon = Lexicon::builtin()) {
  ComponentIntent intent;
  try {
    intent = parse_intent(prompt, lexicon);
  } catch (const Error& e) {
    throw Error(ErrorCode::UnparseablePrompt, e.what()).with_cause(e.code());
  }
  CriterionResult result;
  const auto name = detail::document_name(generated.document);
  result.component_name = detail::kind_in_name(name) == intent.kind;
  result.style = detail::style_in_name(name) == intent.style;
  if (const auto spec = detail::lenient_flat(generated)) {
    result.properties = std::all_of(
        intent.explicit_properties.begin(), intent.explicit_properties.end(),
        [&](const auto& kv) { return detail::property_present(*spec, kv.first, kv.second); });
  }
  result.dataset_keys = std::all_of(dataset_keys.begin(), dataset_keys.end(), [&](const auto& k) {
    return generated.document.contains(k);
  });
  result.success_rate = 0.25 * result.passed();
  return result;
}

inline constexpr std::size_t kSuitePromptsPerKind = 5;

using PromptSuite = std::vector<std::pair<ComponentKind, std::vector<std::string>>>;

struct SuccessRow {
  ComponentKind kind = ComponentKind::Button;
  double pass = 0.0;  // sum of per-prompt success rates, 0..5
  double fail = 0.0;  // 5 - pass
  double rate = 0.0;  // pass / 5
  std::vector<CriterionResult> prompts;
};

/// Five prompts per kind; each prompt is generated, validated and scored.
/// Generation or validation failures score 0 for that prompt.
inline std::vector<SuccessRow> success_rate_table(const PromptSuite& suite, Adapter& adapter,
                                                  std::span<const std::string> dataset_keys,
                                                  const Lexicon& lexicon = Lexicon::builtin()) {
  if (suite.empty()) throw Error(ErrorCode::WrongSuiteShape, "empty prompt suite");
  for (const auto& [kind, prompts] : suite) {
    if (prompts.size() != kSuitePromptsPerKind) {
      throw Error(ErrorCode::WrongSuiteShape,
                  std::string(display_name(kind)) + " has " + std::to_string(prompts.size()) +
                      " prompts, expected " + std::to_string(kSuitePromptsPerKind));
    }
  }
  std::vector<SuccessRow> rows;
  for (const auto& [kind, prompts] : suite) {
    SuccessRow row;
    row.kind = kind;
    for (const auto& prompt : prompts) {
      CriterionResult scored;
      std::optional<ValidatedDocument> doc;
      try {
        doc = validate_json(adapter.generate({Direction::PromptToJson, prompt, kDefaultMaxLength}));
      } catch (const Error&) {
        // scored stays all-fail, but the prompt itself must still parse
        try {
          (void)parse_intent(prompt, lexicon);
        } catch (const Error& e) {
          throw Error(ErrorCode::UnparseablePrompt, e.what()).with_cause(e.code());
        }
      }
      if (doc) scored = success_rate_score(prompt, *doc, dataset_keys, lexicon);
      row.pass += scored.success_rate;
      row.prompts.push_back(scored);
    }
    row.fail = static_cast<double>(kSuitePromptsPerKind) - row.pass;
    row.rate = row.pass / static_cast<double>(kSuitePromptsPerKind);
    rows.push_back(std::move(row));
  }
  return rows;
}


inline PromptSuite default_prompt_suite() {
  return {
      {ComponentKind::Button,
       {"Generate a professional button with a size of small",
        "Create a basic button with a border radius of 12",
        "Make a playful button that has a drop shadow effect",
        "Generate a trendy button with a stroke weight of 2 and a size of large",
        "Create a dark professional button with a font size of 16"}},
      {ComponentKind::Label,
       {"Create a basic label", "Generate a professional label with a font size of 18",
        "Make a playful label with a text color of #FF0000",
        "Generate a trendy label with a font weight of 700", "Create a large label"}},
      {ComponentKind::InputField,
       {"Create a professional input field",
        "Generate a basic text field with a border radius of 6",
        "Make a trendy input field with a stroke weight of 1.5", "Create a small playful input field",
        "Generate an input field with an inner shadow effect"}},
      {ComponentKind::MenuList,
       {"Create a professional menu list", "Generate a playful menu with a border radius of 16",
        "Make a basic menu list with a drop shadow effect",
        "Create a trendy menu list with a size of large",
        "Generate a menu list with a stroke weight of 2"}},
      {ComponentKind::ListItem,
       {"Create a basic list item", "Generate a professional list item with a size of small",
        "Make a trendy list item with a border radius of 10",
        "Create a playful list item with a font size of 14",
        "Generate a light list item with a layer blur effect"}},
      {ComponentKind::IconButton,
       {"Create a trendy icon button", "Generate a basic icon button with a border radius of 20",
        "Make a professional icon button with a size of large",
        "Create a playful icon button with a stroke weight of 3",
        "Generate an icon button with a color of #10B981"}},
  };
}

inline json to_json(const CriterionResult& r) {
  return {{"properties", r.properties},
          {"component_name", r.component_name},
          {"style", r.style},
          {"dataset_keys", r.dataset_keys},
          {"success_rate", r.success_rate}};
}

inline json success_table_json(std::span<const SuccessRow> rows) {
  json out = json::array();
  for (const auto& row : rows) {
    json prompts = json::array();
    for (const auto& p : row.prompts) prompts.push_back(to_json(p));
    out.push_back({{"kind", display_name(row.kind)},
                   {"pass", row.pass},
                   {"fail", row.fail},
                   {"rate", row.rate},
                   {"prompts", prompts}});
  }
  return out;
}

inline std::string success_table_text(std::span<const SuccessRow> rows) {
  std::string out = "kind          pass   fail   rate\n";
  char buf[96];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%-12s %5.2f  %5.2f  %5.1f%%\n",
                  std::string(display_name(row.kind)).c_str(), row.pass, row.fail, row.rate * 100.0);
    out += buf;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subset sweep

struct SubsetRow {
  std::size_t size = 0;
  ClassificationReport classification;
  double bleu = 0.0;  // corpus BLEU over the subset
  RougeScore rouge1;  // means over the subset
  RougeScore rouge2;
  RougeScore rougeL;
};

struct SubsetReport {
  std::string adapter;
  Direction direction = Direction::JsonToPrompt;
  std::vector<SubsetRow> rows;
};

namespace detail {

inline std::string record_kind(const json& doc) {
  const auto kind = kind_in_name(document_name(doc));
  return kind ? std::string(display_name(*kind)) : std::string(kNoneClass);
}

inline std::string output_kind(const std::string& output, Direction direction, const Lexicon& lexicon) {
  if (direction == Direction::JsonToPrompt) {
    const auto kind = find_kind(output, lexicon);
    return kind ? std::string(display_name(*kind)) : std::string(kNoneClass);
  }
  try {
    return record_kind(json::parse(output));
  } catch (const json::exception&) {
    return std::string(kNoneClass);
  }
}

}  // namespace detail

/// Evaluates the adapter on the first n records for each n in `sizes`
/// (ascending). Each record is run once; prefixes share outputs, so results for
/// a given dataset, adapter and size list are deterministic.
inline SubsetReport subset_eval(std::span<const DatasetRecord> dataset, Adapter& adapter,
                                std::span<const std::size_t> sizes,
                                const Lexicon& lexicon = Lexicon::builtin()) {
  if (sizes.empty()) throw Error(ErrorCode::EmptyInput, "no subset sizes");
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    if (sizes[i] == 0 || (i > 0 && sizes[i] <= sizes[i - 1])) {
      throw Error(ErrorCode::InvalidValue, "subset sizes must be positive and strictly ascending");
    }
  }
  if (sizes.back() > dataset.size()) {
    throw Error(ErrorCode::InsufficientData, "dataset has " + std::to_string(dataset.size()) +
                                                 " records, largest subset is " +
                                                 std::to_string(sizes.back()));
  }
  SubsetReport report;
  report.adapter = adapter.name();
  report.direction = adapter.native_direction();

  const std::size_t n = sizes.back();
  std::vector<std::string> outputs(n), references(n), gold(n), predicted(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& rec = dataset[i];
    const auto doc_text = rec.document.dump();
    const bool to_prompt = report.direction == Direction::JsonToPrompt;
    references[i] = to_prompt ? rec.prompt : doc_text;
    try {
      outputs[i] = adapter.generate({report.direction, to_prompt ? doc_text : rec.prompt, kDefaultMaxLength});
    } catch (const Error&) {
      outputs[i].clear();
    }
    gold[i] = detail::record_kind(rec.document);
    predicted[i] = detail::output_kind(outputs[i], report.direction, lexicon);
  }

  for (const auto size : sizes) {
    SubsetRow row;
    row.size = size;
    const std::span<const std::string> g(gold.data(), size), p(predicted.data(), size);
    row.classification = classification_report(g, p);
    std::vector<std::vector<std::string>> refs;
    for (std::size_t i = 0; i < size; ++i) refs.push_back({references[i]});
    row.bleu = corpus_bleu(std::span<const std::string>(outputs.data(), size), refs, 4, lexicon);
    for (std::size_t i = 0; i < size; ++i) {
      const auto add = [](RougeScore& acc, const RougeScore& s) {
        acc.precision += s.precision;
        acc.recall += s.recall;
        acc.f1 += s.f1;
      };
      add(row.rouge1, rouge_n(outputs[i], references[i], 1, lexicon));
      add(row.rouge2, rouge_n(outputs[i], references[i], 2, lexicon));
      add(row.rougeL, rouge_l(outputs[i], references[i], lexicon));
    }
    for (auto* s : {&row.rouge1, &row.rouge2, &row.rougeL}) {
      s->precision /= static_cast<double>(size);
      s->recall /= static_cast<double>(size);
      s->f1 /= static_cast<double>(size);
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

inline json to_json(const RougeScore& s) {
  return {{"precision", s.precision}, {"recall", s.recall}, {"f1", s.f1}};
}

inline json to_json(const SubsetReport& report) {
  json rows = json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"size", r.size},
                    {"accuracy", r.classification.accuracy},
                    {"precision", r.classification.precision},
                    {"recall", r.classification.recall},
                    {"f1", r.classification.f1},
                    {"support", r.classification.support},
                    {"bleu", r.bleu},
                    {"rouge1", to_json(r.rouge1)},
                    {"rouge2", to_json(r.rouge2)},
                    {"rougeL", to_json(r.rougeL)}});
  }
  return {{"adapter", report.adapter},
          {"direction", direction_name(report.direction)},
          {"metadata",
           {{"bleu_max_n", 4},
            {"bleu_smoothing", "zero n-gram precisions floored at 1e-9"},
            {"bleu_aggregate", "corpus"},
            {"rouge_aggregate", "mean over records"},
            {"averaging", "weighted by gold support"},
            {"tokenizer", "lexicon tokenize, lowercase, multiword entries merged"}}},
          {"rows", rows}};
}

inline std::string subset_report_text(const SubsetReport& report) {
  std::string out = "adapter: " + report.adapter + " (" +
                    std::string(direction_name(report.direction)) + ")\n";
  out += "  size  accuracy  precision  recall      f1    bleu  rouge1  rouge2  rougeL\n";
  char buf[160];
  for (const auto& r : report.rows) {
    std::snprintf(buf, sizeof buf, "%6zu  %8.4f  %9.4f  %6.4f  %6.4f  %6.4f  %6.4f  %6.4f  %6.4f\n",
                  r.size, r.classification.accuracy, r.classification.precision,
                  r.classification.recall, r.classification.f1, r.bleu, r.rouge1.f1, r.rouge2.f1,
                  r.rougeL.f1);
    out += buf;
  }
  return out;
}

}  // namespace cogen
