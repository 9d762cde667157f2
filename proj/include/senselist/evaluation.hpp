#ifndef SENSELIST_EVALUATION_HPP
#define SENSELIST_EVALUATION_HPP

// Scoring and the four experimental protocols:
//
//   run_xval        k-fold cross-validation inside one corpus, folding by
//                   example or by document group
//   run_cross       train on one corpus, tag another
//   run_categories  tag each category of a categorized corpus with lists
//                   trained on a second corpus and on the rest of the first
//
// plus the per-word equalizer used when comparing corpora. All randomness
// is splitmix64 + Fisher-Yates, so reports are byte-reproducible.

#include <cctype>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "senselist/corpus.hpp"
#include "senselist/decision_list.hpp"
#include "senselist/features.hpp"
#include "senselist/rng.hpp"

namespace senselist {

struct Score {
  std::int64_t total = 0;
  std::int64_t answered = 0;
  std::int64_t correct = 0;

  double precision() const {
    return answered > 0 ? static_cast<double>(correct) / static_cast<double>(answered) : 0.0;
  }
  double coverage() const {
    return total > 0 ? static_cast<double>(answered) / static_cast<double>(total) : 0.0;
  }
};

inline Score score(const std::vector<Decision>& decisions, const std::vector<std::string>& gold) {
  if (decisions.size() != gold.size())
    throw std::invalid_argument("score: decision/gold length mismatch");
  Score s;
  s.total = static_cast<std::int64_t>(decisions.size());
  for (std::size_t i = 0; i < decisions.size(); ++i) {
    if (!decisions[i].answered()) continue;
    ++s.answered;
    if (decisions[i].sense() == gold[i]) ++s.correct;
  }
  return s;
}

enum class FoldUnit { Example, DocumentGroup };

inline std::string_view fold_unit_name(FoldUnit unit) {
  return unit == FoldUnit::Example ? "example" : "document";
}

/// A k-way partition of units. Unit ids are decimal example indices for
/// Example folds and grouping keys for DocumentGroup folds.
struct FoldSpec {
  int k = 0;
  FoldUnit unit = FoldUnit::Example;
  std::uint64_t seed = 0;
  std::map<std::string, int> assignment;
};

namespace detail {

/// Shuffle the unit ids with splitmix64-driven Fisher-Yates, then deal the
/// shuffled sequence round-robin over the k folds. Sizes differ by at most 1.
inline std::map<std::string, int> deal_folds(std::vector<std::string> units, int k,
                                             std::uint64_t seed) {
  SplitMix64 rng(seed);
  fisher_yates_shuffle(units, rng);
  std::map<std::string, int> assignment;
  for (std::size_t p = 0; p < units.size(); ++p)
    assignment[std::move(units[p])] = static_cast<int>(p % static_cast<std::size_t>(k));
  return assignment;
}

}  // namespace detail

inline FoldSpec kfold_by_example(std::size_t n_examples, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold: k must be at least 2");
  if (n_examples < static_cast<std::size_t>(k))
    throw std::invalid_argument("kfold: k exceeds the number of examples");
  std::vector<std::string> units(n_examples);
  for (std::size_t i = 0; i < n_examples; ++i) units[i] = std::to_string(i);
  return FoldSpec{k, FoldUnit::Example, seed, detail::deal_folds(std::move(units), k, seed)};
}

inline FoldSpec kfold_by_document(const Corpus& corpus, int k, std::uint64_t seed) {
  if (k < 2) throw std::invalid_argument("kfold: k must be at least 2");
  std::set<std::string> groups;
  for (const Document& doc : corpus.documents) groups.insert(doc.grouping_key);
  if (groups.size() < static_cast<std::size_t>(k))
    throw std::invalid_argument("kfold: fewer document groups than folds");
  std::vector<std::string> units(groups.begin(), groups.end());
  return FoldSpec{k, FoldUnit::DocumentGroup, seed, detail::deal_folds(std::move(units), k, seed)};
}

/// Fold index per example position for an Example-unit spec.
inline std::vector<int> example_folds(const FoldSpec& spec, std::size_t n_examples) {
  std::vector<int> folds(n_examples, -1);
  for (std::size_t i = 0; i < n_examples; ++i) folds[i] = spec.assignment.at(std::to_string(i));
  return folds;
}

/// Per-word equalization: for every target key keep min(count in a, count
/// in b) examples on each side, chosen by seeded uniform sampling without
/// replacement, original order preserved. Keys absent from one side are
/// dropped from both.
inline std::pair<std::vector<Example>, std::vector<Example>> equalize_per_word(
    const std::vector<Example>& a, const std::vector<Example>& b, std::uint64_t seed) {
  std::map<std::string, std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> by_key;
  for (std::size_t i = 0; i < a.size(); ++i) by_key[a[i].target_key].first.push_back(i);
  for (std::size_t i = 0; i < b.size(); ++i) by_key[b[i].target_key].second.push_back(i);

  std::vector<bool> keep_a(a.size(), false), keep_b(b.size(), false);
  for (const auto& [key, sides] : by_key) {
    const auto& [ia, ib] = sides;
    const std::size_t m = ia.size() < ib.size() ? ia.size() : ib.size();
    if (m == 0) continue;
    SplitMix64 rng_a(derive_seed(seed, key + "|a"));
    for (std::size_t p : sample_indices(ia.size(), m, rng_a)) keep_a[ia[p]] = true;
    SplitMix64 rng_b(derive_seed(seed, key + "|b"));
    for (std::size_t p : sample_indices(ib.size(), m, rng_b)) keep_b[ib[p]] = true;
  }

  std::pair<std::vector<Example>, std::vector<Example>> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (keep_a[i]) out.first.push_back(a[i]);
  for (std::size_t i = 0; i < b.size(); ++i)
    if (keep_b[i]) out.second.push_back(b[i]);
  return out;
}

struct ReportRow {
  std::string scope;  // "N", "V", ..., "ALL"; category label for run_categories
  std::string label;  // kind name, kind-group name, or "OVERALL"
  Score score;
};

struct Report {
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<ReportRow> rows;
};

namespace detail {

inline constexpr std::string_view kOverallLabel = "OVERALL";
inline constexpr std::string_view kAllScope = "ALL";

inline std::string pos_class(const std::string& target_key) {
  const std::size_t dot = target_key.rfind('.');
  if (dot == std::string::npos || dot + 1 == target_key.size()) return "?";
  std::string cls = target_key.substr(dot + 1);
  for (char& c : cls) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return cls;
}

struct KindGroup {
  std::string_view label;
  KindSet kinds;
};

inline const std::vector<KindGroup>& kind_groups() {
  static const std::vector<KindGroup> groups = {
      {"local-content", KindSet::local_content()},
      {"local-posfun", KindSet::local_pos_function()},
      {"global", KindSet::global_content()},
  };
  return groups;
}

/// Pooled counts per (scope, label) cell; micro-averaging by construction.
using Cells = std::map<std::pair<std::string, std::string>, Score>;

/// Restricted views of a trained list: one per kind, one per kind group,
/// plus the full list as OVERALL. One training pass serves every row.
inline std::vector<std::pair<std::string, DecisionList>> restricted_views(const DecisionList& dl,
                                                                          KindSet kinds) {
  std::vector<std::pair<std::string, DecisionList>> views;
  for (FeatureKind k : kinds.to_list())
    views.emplace_back(std::string(kind_name(k)), restrict_kinds(dl, KindSet{k}));
  for (const KindGroup& group : kind_groups()) {
    const KindSet inter = group.kinds.intersect(kinds);
    if (!inter.empty()) views.emplace_back(std::string(group.label), restrict_kinds(dl, inter));
  }
  views.emplace_back(std::string(kOverallLabel), dl);
  return views;
}

inline void bump(Score& cell, bool answered, bool correct) {
  ++cell.total;
  if (answered) ++cell.answered;
  if (correct) ++cell.correct;
}

inline void tally(Cells& cells, const std::string& scope, const std::string& label, bool answered,
                  bool correct) {
  bump(cells[{scope, label}], answered, correct);
  bump(cells[{std::string(kAllScope), label}], answered, correct);
}

/// Score `test` examples against every restricted view of `dl`.
inline void evaluate_block(Cells& cells, const std::string& scope, const DecisionList& dl,
                           KindSet kinds, const std::vector<Example>& test) {
  const auto views = restricted_views(dl, kinds);
  for (const Example& ex : test) {
    const auto present = feature_strings(extract_features(ex, kinds));
    for (const auto& [label, view] : views) {
      const Decision d = predict(view, present);
      tally(cells, scope, label, d.answered(), d.answered() && d.sense() == ex.sense);
    }
  }
}

/// Canonical row order: scopes sorted with ALL last; within a scope the
/// kinds in ordinal order, then kind groups, then OVERALL.
inline std::vector<ReportRow> assemble_rows(const Cells& cells, KindSet kinds) {
  std::set<std::string> scopes;
  for (const auto& [key, cell] : cells)
    if (key.first != kAllScope) scopes.insert(key.first);

  std::vector<std::string> labels;
  for (FeatureKind k : kinds.to_list()) labels.emplace_back(kind_name(k));
  for (const KindGroup& group : kind_groups())
    if (!group.kinds.intersect(kinds).empty()) labels.emplace_back(group.label);
  labels.emplace_back(kOverallLabel);

  std::vector<std::string> ordered_scopes(scopes.begin(), scopes.end());
  ordered_scopes.emplace_back(kAllScope);

  std::vector<ReportRow> rows;
  for (const std::string& scope : ordered_scopes)
    for (const std::string& label : labels)
      if (auto it = cells.find({scope, label}); it != cells.end())
        rows.push_back(ReportRow{scope, label, it->second});
  return rows;
}

inline std::string join(const std::vector<std::string>& parts, char sep) {
  std::string out;
  for (const std::string& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

inline std::vector<std::string> resolve_words(const Corpus& corpus,
                                              std::vector<std::string> filter) {
  if (filter.empty()) return annotated_target_keys(corpus);
  std::sort(filter.begin(), filter.end());
  filter.erase(std::unique(filter.begin(), filter.end()), filter.end());
  return filter;
}

inline std::string kinds_spelled(KindSet kinds) {
  std::vector<std::string> names;
  for (FeatureKind k : kinds.to_list()) names.emplace_back(kind_name(k));
  return join(names, ',');
}

}  // namespace detail

/// K-fold cross-validation inside one corpus. Folds by example use an
/// independent per-word unit stream derived from (seed, target key); folds
/// by document group partition the corpus once, at the given seed, and every
/// example inherits its group's fold, so no train/test pair ever shares a
/// grouping key. Words that cannot fold are skipped and listed in the
/// metadata under "skipped".
inline Report run_xval(const Corpus& corpus, std::vector<std::string> target_keys, KindSet kinds,
                       int k, std::uint64_t seed, FoldUnit unit, double smoothing = 0.1) {
  const std::vector<std::string> words = detail::resolve_words(corpus, std::move(target_keys));
  detail::Cells cells;
  std::vector<std::string> skipped;

  std::optional<FoldSpec> doc_folds;
  std::map<std::string, std::string> group_of_doc;
  if (unit == FoldUnit::DocumentGroup) {
    doc_folds = kfold_by_document(corpus, k, seed);
    for (const Document& doc : corpus.documents) group_of_doc[doc.id] = doc.grouping_key;
  }

  for (const std::string& word : words) {
    const std::vector<Example> examples = extract_examples(corpus, word);
    if (examples.empty()) {
      skipped.push_back(word);
      continue;
    }
    std::vector<int> fold_of(examples.size());
    if (unit == FoldUnit::Example) {
      if (examples.size() < static_cast<std::size_t>(k)) {
        skipped.push_back(word);
        continue;
      }
      fold_of = example_folds(kfold_by_example(examples.size(), k, derive_seed(seed, word)),
                              examples.size());
    } else {
      for (std::size_t i = 0; i < examples.size(); ++i)
        fold_of[i] = doc_folds->assignment.at(group_of_doc.at(examples[i].doc_id));
    }

    const std::string cls = detail::pos_class(word);
    for (int fold = 0; fold < k; ++fold) {
      std::vector<Example> train_set, test_set;
      for (std::size_t i = 0; i < examples.size(); ++i)
        (fold_of[i] == fold ? test_set : train_set).push_back(examples[i]);
      if (test_set.empty()) continue;
      const DecisionList dl = train_set.empty() ? DecisionList{word, smoothing, {}}
                                                : train(train_set, kinds, smoothing);
      detail::evaluate_block(cells, cls, dl, kinds, test_set);
    }
  }

  Report report;
  report.metadata.emplace_back("corpus", corpus.name);
  report.metadata.emplace_back("words", detail::join(words, ','));
  report.metadata.emplace_back("kinds", detail::kinds_spelled(kinds));
  report.metadata.emplace_back("k", std::to_string(k));
  report.metadata.emplace_back("seed", std::to_string(seed));
  report.metadata.emplace_back("fold-unit", std::string(fold_unit_name(unit)));
  report.metadata.emplace_back("smoothing", std::to_string(smoothing));
  if (!skipped.empty()) report.metadata.emplace_back("skipped", detail::join(skipped, ','));
  report.rows = detail::assemble_rows(cells, kinds);
  return report;
}

/// Train per word on one corpus, tag the other. With `equalize`, both sides
/// are first subsampled to equal per-word example counts.
inline Report run_cross(const Corpus& train_corpus, const Corpus& test_corpus, KindSet kinds,
                        std::uint64_t seed, bool equalize, double smoothing = 0.1,
                        std::vector<std::string> target_keys = {}) {
  const std::vector<std::string> train_keys = annotated_target_keys(train_corpus);
  const std::vector<std::string> test_keys = annotated_target_keys(test_corpus);
  std::vector<std::string> shared;
  std::set_intersection(train_keys.begin(), train_keys.end(), test_keys.begin(), test_keys.end(),
                        std::back_inserter(shared));
  if (!target_keys.empty()) {
    std::sort(target_keys.begin(), target_keys.end());
    std::vector<std::string> narrowed;
    std::set_intersection(shared.begin(), shared.end(), target_keys.begin(), target_keys.end(),
                          std::back_inserter(narrowed));
    shared = std::move(narrowed);
  }
  if (shared.empty()) throw DataError("no shared target keys between corpora");

  const std::set<std::string> shared_set(shared.begin(), shared.end());
  auto gather = [&shared_set](const Corpus& corpus) {
    std::vector<Example> out;
    for (Example& ex : extract_examples(corpus))
      if (shared_set.contains(ex.target_key)) out.push_back(std::move(ex));
    return out;
  };
  std::vector<Example> train_all = gather(train_corpus);
  std::vector<Example> test_all = gather(test_corpus);
  if (equalize) {
    auto [ea, eb] = equalize_per_word(train_all, test_all, seed);
    train_all = std::move(ea);
    test_all = std::move(eb);
  }

  std::map<std::string, std::vector<Example>> train_by_key, test_by_key;
  for (Example& ex : train_all) train_by_key[ex.target_key].push_back(std::move(ex));
  for (Example& ex : test_all) test_by_key[ex.target_key].push_back(std::move(ex));

  detail::Cells cells;
  for (const std::string& word : shared) {
    const auto& train_set = train_by_key[word];
    const auto& test_set = test_by_key[word];
    if (train_set.empty() || test_set.empty()) continue;
    const DecisionList dl = train(train_set, kinds, smoothing);
    detail::evaluate_block(cells, detail::pos_class(word), dl, kinds, test_set);
  }

  Report report;
  report.metadata.emplace_back("train-corpus", train_corpus.name);
  report.metadata.emplace_back("test-corpus", test_corpus.name);
  report.metadata.emplace_back("words", detail::join(shared, ','));
  report.metadata.emplace_back("kinds", detail::kinds_spelled(kinds));
  report.metadata.emplace_back("seed", std::to_string(seed));
  report.metadata.emplace_back("equalize", equalize ? "true" : "false");
  report.metadata.emplace_back("smoothing", std::to_string(smoothing));
  report.rows = detail::assemble_rows(cells, kinds);
  return report;
}

/// Tag each category of `categorized` twice: with lists trained on `other`
/// (row label "train-other") and with lists trained on the remaining
/// categories of `categorized` itself (row label "train-rest"). A row whose
/// training side shares no target key with the category is emitted with zero
/// counts and an ":EMPTY" label suffix.
inline Report run_categories(const Corpus& categorized, const Corpus& other, KindSet kinds,
                             std::uint64_t seed, double smoothing = 0.1) {
  std::vector<std::string> missing;
  for (const Document& doc : categorized.documents)
    if (!doc.category) missing.push_back(doc.id);
  if (!missing.empty())
    throw DataError("documents without category: " + detail::join(missing, ','));

  std::map<std::string, std::string> category_of_doc;
  std::set<std::string> categories;
  for (const Document& doc : categorized.documents) {
    category_of_doc[doc.id] = *doc.category;
    categories.insert(*doc.category);
  }

  const std::vector<Example> cat_examples = extract_examples(categorized);
  const std::vector<Example> other_examples = extract_examples(other);

  auto by_key = [](const std::vector<Example>& examples) {
    std::map<std::string, std::vector<Example>> out;
    for (const Example& ex : examples) out[ex.target_key].push_back(ex);
    return out;
  };

  Report report;
  report.metadata.emplace_back("categorized-corpus", categorized.name);
  report.metadata.emplace_back("other-corpus", other.name);
  report.metadata.emplace_back("kinds", detail::kinds_spelled(kinds));
  report.metadata.emplace_back("seed", std::to_string(seed));
  report.metadata.emplace_back("smoothing", std::to_string(smoothing));

  const auto other_by_key = by_key(other_examples);
  for (const std::string& category : categories) {
    std::vector<Example> in_cat, rest;
    for (const Example& ex : cat_examples)
      (category_of_doc.at(ex.doc_id) == category ? in_cat : rest).push_back(ex);
    const auto test_by_key = by_key(in_cat);
    const auto rest_by_key = by_key(rest);

    struct Side {
      std::string_view label;
      const std::map<std::string, std::vector<Example>>* train;
    };
    for (const Side& side : {Side{"train-other", &other_by_key}, Side{"train-rest", &rest_by_key}}) {
      Score total;
      bool any_shared = false;
      for (const auto& [word, test_set] : test_by_key) {
        const auto it = side.train->find(word);
        if (it == side.train->end() || it->second.empty()) continue;
        any_shared = true;
        const DecisionList dl = train(it->second, kinds, smoothing);
        for (const Example& ex : test_set) {
          const Decision d = predict(dl, extract_features(ex, kinds));
          ++total.total;
          if (d.answered()) {
            ++total.answered;
            if (d.sense() == ex.sense) ++total.correct;
          }
        }
      }
      std::string label(side.label);
      if (!any_shared) label += ":EMPTY";
      report.rows.push_back(ReportRow{category, std::move(label), total});
    }
  }
  return report;
}

}  // namespace senselist

#endif  // SENSELIST_EVALUATION_HPP
