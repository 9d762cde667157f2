#ifndef SENSELIST_DECISION_LIST_HPP
#define SENSELIST_DECISION_LIST_HPP

// N-way decision lists over collocation features.
//
// A rule scores sense i against the summed evidence for every competing
// sense of the same feature:
//
//   weight = ln(count_i / others_sum)
//
// where a zero denominator is replaced by the smoothing constant
// (default 0.1). Weights may be negative; unseen (feature, sense) pairs
// produce no rule. Prediction walks the list in order and answers with
// the first rule whose feature is present, or abstains.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "senselist/corpus.hpp"
#include "senselist/features.hpp"

namespace senselist {

/// Per-feature sense occurrence counts, keyed by canonical feature string.
/// Zero counts are absent, never stored.
using SenseCounts = std::map<std::string, std::map<std::string, std::int64_t>>;

struct Rule {
  Feature feature;
  std::string feature_string;  // render_feature(feature), cached
  std::string sense;
  double weight = 0.0;
  std::int64_t count = 0;   // examples of `sense` whose feature set contains `feature`
  std::int64_t others = 0;  // summed counts of the competing senses
};

struct DecisionList {
  std::string target_key;
  double smoothing = 0.1;
  std::vector<Rule> rules;  // descending weight; ties broken deterministically
};

struct Decision {
  std::optional<Rule> fired;  // empty = abstain

  bool answered() const { return fired.has_value(); }
  const std::string& sense() const { return fired->sense; }
};

inline double weight(std::int64_t count_i, std::int64_t others_sum, double smoothing) {
  if (smoothing <= 0.0) throw std::invalid_argument("weight: smoothing must be positive");
  const double denom = others_sum > 0 ? static_cast<double>(others_sum) : smoothing;
  return std::log(static_cast<double>(count_i) / denom);
}

namespace detail {

/// Feature-keyed counts; one increment per example per feature (set
/// semantics: an example contributes at most once per feature).
inline std::map<Feature, std::map<std::string, std::int64_t>> count_by_feature(
    const std::vector<Example>& examples, KindSet kinds) {
  std::map<Feature, std::map<std::string, std::int64_t>> counts;
  const std::string* key = nullptr;
  for (const Example& ex : examples) {
    if (key == nullptr) {
      key = &ex.target_key;
    } else if (ex.target_key != *key) {
      throw std::invalid_argument("count: mixed target keys '" + *key + "' and '" +
                                  ex.target_key + "'");
    }
    for (const Feature& f : extract_features(ex, kinds)) counts[f][ex.sense] += 1;
  }
  return counts;
}

inline bool rule_before(const Rule& a, const Rule& b) {
  if (a.weight != b.weight) return a.weight > b.weight;
  if (a.feature.kind != b.feature.kind) return a.feature.kind < b.feature.kind;
  if (a.feature_string != b.feature_string) return a.feature_string < b.feature_string;
  return a.sense < b.sense;
}

}  // namespace detail

inline SenseCounts count(const std::vector<Example>& examples, KindSet kinds) {
  SenseCounts out;
  for (const auto& [feature, per_sense] : detail::count_by_feature(examples, kinds)) {
    auto& cell = out[render_feature(feature)];
    for (const auto& [sense, c] : per_sense) cell[sense] += c;
  }
  return out;
}

inline DecisionList train(const std::vector<Example>& examples, KindSet kinds,
                          double smoothing = 0.1) {
  if (examples.empty()) throw std::invalid_argument("train: need at least one example");
  DecisionList dl{examples.front().target_key, smoothing, {}};
  for (const auto& [feature, per_sense] : detail::count_by_feature(examples, kinds)) {
    std::int64_t total = 0;
    for (const auto& [sense, c] : per_sense) total += c;
    const std::string feature_string = render_feature(feature);
    for (const auto& [sense, c] : per_sense)
      dl.rules.push_back(
          Rule{feature, feature_string, sense, weight(c, total - c, smoothing), c, total - c});
  }
  std::sort(dl.rules.begin(), dl.rules.end(), detail::rule_before);
  return dl;
}

/// First rule in list order whose feature is among `present` (canonical
/// feature strings); abstains when none fires.
inline Decision predict(const DecisionList& dl, const std::unordered_set<std::string>& present) {
  for (const Rule& rule : dl.rules)
    if (present.contains(rule.feature_string)) return Decision{rule};
  return Decision{};
}

inline std::unordered_set<std::string> feature_strings(const std::vector<Feature>& features) {
  std::unordered_set<std::string> out;
  out.reserve(features.size());
  for (const Feature& f : features) out.insert(render_feature(f));
  return out;
}

inline Decision predict(const DecisionList& dl, const std::vector<Feature>& features) {
  return predict(dl, feature_strings(features));
}

/// Rules whose kind is in `kinds`, order preserved; smoothing and target
/// key unchanged. Equivalent to retraining on the intersected kind set.
inline DecisionList restrict_kinds(const DecisionList& dl, KindSet kinds) {
  DecisionList out{dl.target_key, dl.smoothing, {}};
  for (const Rule& rule : dl.rules)
    if (kinds.contains(rule.feature.kind)) out.rules.push_back(rule);
  return out;
}

}  // namespace senselist

#endif  // SENSELIST_DECISION_LIST_HPP
