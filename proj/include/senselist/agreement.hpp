#ifndef SENSELIST_AGREEMENT_HPP
#define SENSELIST_AGREEMENT_HPP

// Cross-corpus collocation agreement: how many collocations two corpora
// share for a word, and how many of the shared ones select contradictory
// majority senses.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "senselist/corpus.hpp"
#include "senselist/decision_list.hpp"
#include "senselist/features.hpp"

namespace senselist {

/// Per-corpus collocation inventory for one target word. Entries map the
/// canonical feature string to per-sense occurrence counts. Profiles are
/// comparable only when their kind sets match.
struct CollocationProfile {
  std::string target_key;
  KindSet kinds;
  std::string source;  // corpus name
  std::map<std::string, std::map<std::string, std::int64_t>> entries;
};

/// Default kind set follows the comparison focus: local content words.
inline CollocationProfile collect(const Corpus& corpus, const std::string& target_key,
                                  KindSet kinds = KindSet::local_content()) {
  CollocationProfile profile{target_key, kinds, corpus.name, {}};
  profile.entries = count(extract_examples(corpus, target_key), kinds);
  return profile;
}

/// Majority sense of one entry; ties resolve to the ascending sense label
/// and are flagged.
inline std::pair<std::string, bool> majority_sense(
    const std::map<std::string, std::int64_t>& entry) {
  if (entry.empty()) throw std::invalid_argument("majority_sense: empty entry");
  std::string best;
  std::int64_t best_count = -1;
  int at_max = 0;
  for (const auto& [sense, count] : entry) {
    if (count > best_count) {
      best = sense;
      best_count = count;
      at_max = 1;
    } else if (count == best_count) {
      ++at_max;
    }
  }
  return {best, at_max >= 2};
}

struct AgreementStats {
  std::int64_t count_a = 0;
  std::int64_t count_b = 0;
  std::int64_t shared = 0;
  std::int64_t contradictions = 0;
  std::int64_t ties_a = 0;  // shared collocations whose majority is tied in a
  std::int64_t ties_b = 0;
  double shared_pct = 0.0;         // 100 * shared / mean(count_a, count_b)
  double contradiction_pct = 0.0;  // 100 * contradictions / shared
};

/// One shared collocation whose majority senses disagree.
struct Contradiction {
  std::string feature;  // canonical feature string
  std::string sense_a;
  std::string sense_b;
  std::map<std::string, std::int64_t> counts_a;
  std::map<std::string, std::int64_t> counts_b;
};

struct AgreementResult {
  AgreementStats stats;
  std::vector<Contradiction> contradictions;  // sorted by feature string
};

inline AgreementResult compare(const CollocationProfile& a, const CollocationProfile& b) {
  if (a.target_key != b.target_key)
    throw std::invalid_argument("compare: profiles cover different target keys");
  if (a.kinds != b.kinds) throw std::invalid_argument("compare: profiles cover different kinds");

  AgreementResult result;
  AgreementStats& stats = result.stats;
  stats.count_a = static_cast<std::int64_t>(a.entries.size());
  stats.count_b = static_cast<std::int64_t>(b.entries.size());

  for (const auto& [feature, counts_a] : a.entries) {
    const auto it = b.entries.find(feature);
    if (it == b.entries.end()) continue;
    ++stats.shared;
    const auto [sense_a, tie_a] = majority_sense(counts_a);
    const auto [sense_b, tie_b] = majority_sense(it->second);
    if (tie_a) ++stats.ties_a;
    if (tie_b) ++stats.ties_b;
    if (sense_a != sense_b) {
      ++stats.contradictions;
      result.contradictions.push_back(
          Contradiction{feature, sense_a, sense_b, counts_a, it->second});
    }
  }

  const std::int64_t both = stats.count_a + stats.count_b;
  stats.shared_pct = both > 0 ? 200.0 * static_cast<double>(stats.shared) / both : 0.0;
  stats.contradiction_pct =
      stats.shared > 0 ? 100.0 * static_cast<double>(stats.contradictions) / stats.shared : 0.0;
  return result;
}

}  // namespace senselist

#endif  // SENSELIST_AGREEMENT_HPP
