#ifndef SENSELIST_TESTS_HELPERS_HPP
#define SENSELIST_TESTS_HELPERS_HPP

// Shared fixtures and tiny brute-force oracles. Oracles recount evidence by
// direct enumeration and never go through SenseCounts or DecisionList
// internals, so they stay independent of the code paths they check.

#include <cmath>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "senselist/senselist.hpp"

namespace helpers {

using namespace senselist;

/// "governing/VBG body/NN serves/VBZ" -> Sentence.
inline Sentence make_sentence(const std::string& spec) {
  Sentence sentence;
  std::istringstream in(spec);
  std::string item;
  while (in >> item) {
    const std::size_t slash = item.rfind('/');
    sentence.tokens.push_back(Token{item.substr(0, slash), item.substr(slash + 1)});
  }
  return sentence;
}

inline Example make_example(const Sentence& sentence, std::size_t token_index,
                            std::string target_key, std::string sense = "s1") {
  return Example{std::move(target_key), std::move(sense),        "doc", 0, token_index,
                 sentence.tokens.at(token_index).form, &sentence};
}

struct AnnotatedRow {
  std::string sentence;  // make_sentence spec
  std::size_t target_index;
  std::string sense;
  int repeat = 1;
};

/// One-document corpus holding the given annotated sentences for one word.
inline Corpus corpus_from_rows(const std::string& target_key,
                               const std::vector<AnnotatedRow>& rows,
                               const std::string& corpus_name = "fixture") {
  Corpus corpus{corpus_name, {}};
  Document doc{corpus_name + "-d0", corpus_name, corpus_name + "-d0", std::nullopt, {}};
  for (const AnnotatedRow& row : rows) {
    for (int i = 0; i < row.repeat; ++i) {
      Sentence sentence = make_sentence(row.sentence);
      sentence.annotations[row.target_index] = SenseAnnotation{target_key, row.sense};
      doc.sentences.push_back(std::move(sentence));
    }
  }
  corpus.documents.push_back(std::move(doc));
  return corpus;
}

/// The strong local content-word collocations of the running "state.n"
/// fixture. Counts per feature:
///   CW_RIGHT  State+government   {#5:4}           ln(4/0.1)  = 3.688879
///   CW_2RIGHT State+and,local    {#3:1,#4:1,#5:15} ln(15/2)  = 2.014903
///   CW_2LEFT  state+Federal,and  {#4:1,#5:5}       ln(5/1)   = 1.609438
///   CW_RIGHT  state+court        {#3:12,#5:3}      ln(12/3)  = 1.386294
///   CW_RIGHT  State+governments  {#1:1,#5:3}       ln(3/1)   = 1.098612
inline Corpus state_fixture_corpus() {
  return corpus_from_rows("state.n",
                          {
                              {"State/NNP government/NN", 0, "#5", 4},
                              {"state/NN court/NN", 0, "#3", 12},
                              {"state/NN court/NN", 0, "#5", 3},
                              {"State/NNP and/CC local/JJ", 0, "#5", 15},
                              {"State/NNP and/CC local/JJ", 0, "#3", 1},
                              {"State/NNP and/CC local/JJ", 0, "#4", 1},
                              {"Federal/NNP and/CC state/NN", 2, "#5", 5},
                              {"Federal/NNP and/CC state/NN", 2, "#4", 1},
                              {"State/NNP governments/NNS", 0, "#5", 3},
                              {"State/NNP governments/NNS", 0, "#1", 1},
                          });
}

/// Random one-word corpus for property tests: every sentence is a fresh
/// random draw of forms and tags around an annotated target.
inline Corpus random_word_corpus(std::uint64_t seed, int n_examples, int n_senses,
                                 const std::string& target_key = "word.n") {
  static const std::vector<std::string> forms = {"alpha", "beta",  "gamma", "delta", "epsilon",
                                                 "zeta",  "theta", "kappa", "the",   "of"};
  static const std::vector<std::string> tags = {"NN", "VB", "JJ", "RB", "DT", "IN", "CC", "."};
  SplitMix64 rng(seed);
  std::vector<AnnotatedRow> rows;
  for (int i = 0; i < n_examples; ++i) {
    const std::size_t len = 1 + rng.below(7);
    const std::size_t target = rng.below(len);
    std::string spec;
    for (std::size_t j = 0; j < len; ++j) {
      if (!spec.empty()) spec += ' ';
      if (j == target) {
        spec += "word/NN";
      } else {
        spec += forms[rng.below(forms.size())] + "/" + tags[rng.below(tags.size())];
      }
    }
    rows.push_back(AnnotatedRow{spec, target, "s" + std::to_string(rng.below(n_senses)), 1});
  }
  return corpus_from_rows(target_key, rows);
}

/// Brute-force recount of (feature, sense) evidence by scanning examples.
inline std::pair<std::int64_t, std::int64_t> oracle_counts(const std::vector<Example>& examples,
                                                           const Feature& feature,
                                                           const std::string& sense,
                                                           KindSet kinds) {
  std::int64_t count_i = 0, others = 0;
  for (const Example& ex : examples) {
    bool has = false;
    for (const Feature& f : extract_features(ex, kinds))
      if (f == feature) {
        has = true;
        break;
      }
    if (!has) continue;
    if (ex.sense == sense)
      ++count_i;
    else
      ++others;
  }
  return {count_i, others};
}

/// Independent prediction oracle: scan every (feature, sense) pair with the
/// feature present in the example and pick the max by (weight, kind ordinal,
/// feature string, sense) — mirroring the documented tie order.
inline Decision oracle_predict(const std::vector<Example>& train_examples, const Example& ex,
                               KindSet kinds, double smoothing) {
  const auto present = extract_features(ex, kinds);
  const Rule* best_rule = nullptr;
  static thread_local std::vector<Rule> storage;
  storage.clear();
  for (const Feature& f : present) {
    std::map<std::string, std::int64_t> per_sense;
    for (const Example& tr : train_examples) {
      bool has = false;
      for (const Feature& tf : extract_features(tr, kinds))
        if (tf == f) {
          has = true;
          break;
        }
      if (has) per_sense[tr.sense] += 1;
    }
    std::int64_t total = 0;
    for (const auto& [s, c] : per_sense) total += c;
    for (const auto& [s, c] : per_sense)
      storage.push_back(
          Rule{f, render_feature(f), s, weight(c, total - c, smoothing), c, total - c});
  }
  for (const Rule& r : storage) {
    if (best_rule == nullptr) {
      best_rule = &r;
      continue;
    }
    const Rule& b = *best_rule;
    const auto key = [](const Rule& x) {
      return std::make_tuple(-x.weight, static_cast<int>(x.feature.kind), x.feature_string,
                             x.sense);
    };
    if (key(r) < key(b)) best_rule = &r;
  }
  if (best_rule == nullptr) return Decision{};
  return Decision{*best_rule};
}

inline const Rule* find_rule(const DecisionList& dl, const std::string& feature_string,
                             const std::string& sense) {
  for (const Rule& r : dl.rules)
    if (r.feature_string == feature_string && r.sense == sense) return &r;
  return nullptr;
}

}  // namespace helpers

#endif  // SENSELIST_TESTS_HELPERS_HPP
