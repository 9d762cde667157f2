// senselist: decision-list word sense disambiguation over vertical corpora.
//
// One binary, one subcommand per protocol, TSV-only output. Every output
// file starts with `##` metadata lines echoing the resolved configuration,
// so a run can be reproduced from its artifact alone.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "senselist/senselist.hpp"

namespace {

using nlohmann::json;
using namespace senselist;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split_commas(const std::string& csv) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(csv);
  while (std::getline(in, part, ','))
    if (!part.empty()) out.push_back(part);
  return out;
}

KindSet parse_kinds(const std::string& csv) {
  if (csv.empty()) return KindSet::all();
  KindSet kinds;
  for (const std::string& name : split_commas(csv)) {
    if (name == "all") {
      kinds = KindSet::all();
    } else if (name == "local-content") {
      for (FeatureKind k : KindSet::local_content().to_list()) kinds.insert(k);
    } else if (name == "local-posfun") {
      for (FeatureKind k : KindSet::local_pos_function().to_list()) kinds.insert(k);
    } else if (name == "global") {
      for (FeatureKind k : KindSet::global_content().to_list()) kinds.insert(k);
    } else if (auto k = parse_feature_kind(name)) {
      kinds.insert(*k);
    } else {
      throw UsageError("--kinds: unknown kind '" + name + "'");
    }
  }
  return kinds;
}

Corpus load_corpus(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("--corpus: cannot open '" + path + "'");
  try {
    return parse_corpus(in, std::filesystem::path(path).stem().string());
  } catch (const ParseError& e) {
    throw DataError("--corpus: " + path + ": " + e.what());
  }
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("--out: cannot open '" + path + "' for writing");
  return out;
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%g", v);
  return buf;
}

struct Options {
  std::vector<std::string> corpus_paths;
  std::string words_csv;
  std::string kinds_csv;
  int k = 10;
  std::uint64_t seed = 0;
  double smoothing = 0.1;
  std::string fold_unit = "example";
  bool equalize = false;
  std::string out_path;
  std::string spec_path;
  std::string detail_out_path;
};

using Meta = std::vector<std::pair<std::string, std::string>>;

Meta base_meta(const std::string& command, const Options& opt) {
  Meta meta;
  meta.emplace_back("command", command);
  if (!opt.corpus_paths.empty()) meta.emplace_back("corpus", detail::join(opt.corpus_paths, ','));
  if (!opt.spec_path.empty()) meta.emplace_back("spec", opt.spec_path);
  meta.emplace_back("out", opt.out_path);
  return meta;
}

SynthSpec spec_from_json(const json& j) {
  SynthSpec spec;
  spec.name = j.at("name").get<std::string>();
  spec.seed = j.value("seed", std::uint64_t{0});
  spec.documents = j.value("documents", 1);
  spec.categories = j.value("categories", std::vector<std::string>{});
  for (const json& jw : j.at("words")) {
    SynthWord word;
    word.target_key = jw.at("target_key").get<std::string>();
    word.target_form = jw.value("target_form", std::string{});
    word.senses = jw.at("senses").get<std::vector<std::string>>();
    if (jw.contains("signatures"))
      word.signatures =
          jw.at("signatures").get<std::map<std::string, std::vector<std::string>>>();
    word.confounders = jw.value("confounders", std::vector<std::string>{});
    word.noise = jw.value("noise", 0.0);
    word.examples = jw.value("examples", 0);
    word.document_skew = jw.value("document_skew", 0.0);
    spec.words.push_back(std::move(word));
  }
  return spec;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision-list word sense disambiguation toolkit"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_out = true) {
    sub->add_option("--corpus", opt.corpus_paths, "corpus file (repeatable)");
    sub->add_option("--words", opt.words_csv, "comma-separated target keys (default: all)");
    sub->add_option("--kinds", opt.kinds_csv,
                    "comma-separated kind names or groups: local-content, local-posfun, "
                    "global, all (default: all)");
    sub->add_option("--k", opt.k, "number of folds")->capture_default_str();
    sub->add_option("--seed", opt.seed, "random seed")->capture_default_str();
    sub->add_option("--smoothing", opt.smoothing, "smoothing constant")->capture_default_str();
    if (needs_out) sub->add_option("--out", opt.out_path, "output path")->required();
  };

  CLI::App* train = app.add_subcommand("train", "train decision lists and dump the rules");
  add_common(train);
  CLI::App* tag = app.add_subcommand("tag", "train on one corpus, tag occurrences of another");
  add_common(tag);
  CLI::App* xval = app.add_subcommand("xval", "k-fold cross-validation inside one corpus");
  add_common(xval);
  xval->add_option("--fold-unit", opt.fold_unit, "fold unit: example or document")
      ->capture_default_str();
  CLI::App* cross = app.add_subcommand("cross", "train on corpus A, tag corpus B");
  add_common(cross);
  cross->add_flag("--equalize", opt.equalize, "equalize per-word example counts first");
  CLI::App* categories =
      app.add_subcommand("categories", "tag each category of corpus A with lists from corpus B "
                                       "and from the rest of A");
  add_common(categories);
  CLI::App* agree = app.add_subcommand("agree", "cross-corpus collocation agreement statistics");
  add_common(agree);
  agree->add_option("--detail-out", opt.detail_out_path,
                    "contradiction detail path (default: <out>.detail)");
  CLI::App* synth = app.add_subcommand("synth", "generate a synthetic corpus from a JSON spec");
  synth->add_option("--spec", opt.spec_path, "synthesis spec (JSON)")->required();
  synth->add_option("--seed", opt.seed, "override the spec's seed");
  synth->add_option("--out", opt.out_path, "output path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "senselist: " << e.what() << '\n';
    return 1;
  }

  try {
    if (opt.smoothing <= 0.0) throw UsageError("--smoothing: must be positive");
    if (opt.k < 2) throw UsageError("--k: must be at least 2");
    const KindSet kinds = parse_kinds(opt.kinds_csv);
    const std::vector<std::string> words = split_commas(opt.words_csv);
    std::vector<Corpus> corpora;
    for (const std::string& path : opt.corpus_paths) corpora.push_back(load_corpus(path));

    auto echo_common = [&](Meta& meta) {
      meta.emplace_back("words", opt.words_csv.empty() ? "(all)" : opt.words_csv);
      meta.emplace_back("kinds", detail::kinds_spelled(kinds));
      meta.emplace_back("k", std::to_string(opt.k));
      meta.emplace_back("seed", std::to_string(opt.seed));
      meta.emplace_back("smoothing", format_double(opt.smoothing));
      meta.emplace_back("fold-unit", opt.fold_unit);
      meta.emplace_back("equalize", opt.equalize ? "true" : "false");
    };

    if (*train) {
      if (corpora.size() != 1) throw UsageError("--corpus: train needs exactly one corpus");
      const Corpus& corpus = corpora.front();
      std::vector<std::string> keys = words.empty() ? annotated_target_keys(corpus) : words;
      std::sort(keys.begin(), keys.end());
      Meta meta = base_meta("train", opt);
      echo_common(meta);
      auto out = open_output(opt.out_path);
      write_metadata(out, meta);
      out << "## columns=weight sense feature count_i others_sum\n";
      for (const std::string& key : keys) {
        const auto examples = extract_examples(corpus, key);
        if (examples.empty()) {
          std::cerr << "senselist: warning: no examples for '" << key << "', skipping\n";
          continue;
        }
        write_decision_list_tsv(out, senselist::train(examples, kinds, opt.smoothing));
      }
    } else if (*tag) {
      if (corpora.empty() || corpora.size() > 2)
        throw UsageError("--corpus: tag needs one or two corpora (train [test])");
      const Corpus& train_corpus = corpora.front();
      const Corpus& test_corpus = corpora.back();
      std::vector<std::string> keys = words.empty() ? annotated_target_keys(test_corpus) : words;
      std::sort(keys.begin(), keys.end());
      Meta meta = base_meta("tag", opt);
      echo_common(meta);
      auto out = open_output(opt.out_path);
      write_metadata(out, meta);
      out << "target_key\tdoc_id\tsentence\ttoken\tgold\tpredicted\tweight\tfeature\n";
      for (const std::string& key : keys) {
        const auto train_examples = extract_examples(train_corpus, key);
        const auto test_examples = extract_examples(test_corpus, key);
        std::optional<DecisionList> dl;
        if (!train_examples.empty()) dl = senselist::train(train_examples, kinds, opt.smoothing);
        for (const Example& ex : test_examples) {
          Decision d;
          if (dl) d = predict(*dl, extract_features(ex, kinds));
          out << ex.target_key << '\t' << ex.doc_id << '\t' << ex.sentence_index << '\t'
              << ex.token_index << '\t' << ex.sense << '\t';
          if (d.answered())
            out << d.sense() << '\t' << format_fixed(d.fired->weight, 6) << '\t'
                << d.fired->feature_string << '\n';
          else
            out << "-\t-\t-\n";
        }
      }
    } else if (*xval) {
      if (corpora.size() != 1) throw UsageError("--corpus: xval needs exactly one corpus");
      FoldUnit unit;
      if (opt.fold_unit == "example")
        unit = FoldUnit::Example;
      else if (opt.fold_unit == "document")
        unit = FoldUnit::DocumentGroup;
      else
        throw UsageError("--fold-unit: expected 'example' or 'document', got '" + opt.fold_unit +
                         "'");
      const Report report =
          run_xval(corpora.front(), words, kinds, opt.k, opt.seed, unit, opt.smoothing);
      Meta meta = base_meta("xval", opt);
      echo_common(meta);
      for (const auto& kv : report.metadata)
        if (kv.first == "skipped") meta.push_back(kv);
      auto out = open_output(opt.out_path);
      Report stamped{std::move(meta), report.rows};
      write_report_tsv(out, stamped);
    } else if (*cross) {
      if (corpora.size() != 2) throw UsageError("--corpus: cross needs exactly two corpora");
      const Report report = run_cross(corpora[0], corpora[1], kinds, opt.seed, opt.equalize,
                                      opt.smoothing, words);
      Meta meta = base_meta("cross", opt);
      echo_common(meta);
      auto out = open_output(opt.out_path);
      Report stamped{std::move(meta), report.rows};
      write_report_tsv(out, stamped);
    } else if (*categories) {
      if (corpora.size() != 2)
        throw UsageError("--corpus: categories needs exactly two corpora (categorized, other)");
      const Report report =
          run_categories(corpora[0], corpora[1], kinds, opt.seed, opt.smoothing);
      Meta meta = base_meta("categories", opt);
      echo_common(meta);
      auto out = open_output(opt.out_path);
      Report stamped{std::move(meta), report.rows};
      write_report_tsv(out, stamped);
    } else if (*agree) {
      if (corpora.size() != 2) throw UsageError("--corpus: agree needs exactly two corpora");
      const KindSet agree_kinds = opt.kinds_csv.empty() ? KindSet::local_content() : kinds;
      std::vector<std::string> keys;
      {
        const auto a = annotated_target_keys(corpora[0]);
        const auto b = annotated_target_keys(corpora[1]);
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(keys));
        if (!words.empty()) {
          std::vector<std::string> filter = words;
          std::sort(filter.begin(), filter.end());
          std::vector<std::string> narrowed;
          std::set_intersection(keys.begin(), keys.end(), filter.begin(), filter.end(),
                                std::back_inserter(narrowed));
          keys = std::move(narrowed);
        }
      }
      if (keys.empty()) throw DataError("no shared target keys between corpora");
      Meta meta = base_meta("agree", opt);
      meta.emplace_back("words", opt.words_csv.empty() ? "(all)" : opt.words_csv);
      meta.emplace_back("kinds", detail::kinds_spelled(agree_kinds));
      const std::string detail_path =
          opt.detail_out_path.empty() ? opt.out_path + ".detail" : opt.detail_out_path;
      meta.emplace_back("detail-out", detail_path);
      auto out = open_output(opt.out_path);
      auto detail_out = open_output(detail_path);
      write_metadata(out, meta);
      write_agreement_header(out);
      write_metadata(detail_out, meta);
      std::vector<Contradiction> all_contradictions;
      for (const std::string& key : keys) {
        const auto result = senselist::compare(collect(corpora[0], key, agree_kinds),
                                               collect(corpora[1], key, agree_kinds));
        write_agreement_row(out, key, result.stats);
        for (const Contradiction& c : result.contradictions) all_contradictions.push_back(c);
      }
      write_contradictions_tsv(detail_out, all_contradictions);
    } else if (*synth) {
      std::ifstream spec_in(opt.spec_path, std::ios::binary);
      if (!spec_in) throw DataError("--spec: cannot open '" + opt.spec_path + "'");
      SynthSpec spec;
      try {
        spec = spec_from_json(json::parse(spec_in));
      } catch (const json::exception& e) {
        throw DataError("--spec: " + opt.spec_path + ": " + e.what());
      }
      if (synth->count("--seed") > 0) spec.seed = opt.seed;
      const Corpus corpus = senselist::synth(spec);
      Meta meta = base_meta("synth", opt);
      meta.emplace_back("name", spec.name);
      meta.emplace_back("seed", std::to_string(spec.seed));
      meta.emplace_back("documents", std::to_string(spec.documents));
      auto out = open_output(opt.out_path);
      write_metadata(out, meta);
      serialize_corpus(corpus, out);
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "senselist: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "senselist: " << e.what() << '\n';
    return 2;
  }
}
