#ifndef SENSELIST_FEATURES_HPP
#define SENSELIST_FEATURES_HPP

// Collocation features extracted from the sentence around a target word.
//
// Local kinds look at fixed positions next to the target; global kinds
// collect content words from a +-4 window and from the whole sentence.
// Surface forms are not lemmatized, and the form of the target itself is
// part of every feature's identity.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "senselist/corpus.hpp"

namespace senselist {

/// Declaration order is the canonical kind ordinal, used for tie-breaking.
enum class FeatureKind : int {
  CW_LEFT,    // content word at t-1
  CW_RIGHT,   // content word at t+1
  CW_2LEFT,   // words at t-2,t-1; at least one a content word
  CW_2RIGHT,  // words at t+1,t+2; at least one a content word
  CW_BOTH,    // words at t-1,t+1; at least one a content word
  FW_LEFT,    // function word at t-1
  FW_RIGHT,   // function word at t+1
  FW_BOTH,    // function words at both t-1 and t+1
  POS_LEFT,   // PoS tag at t-1
  POS_RIGHT,  // PoS tag at t+1
  POS_2LEFT,  // PoS tags at t-2,t-1
  POS_2RIGHT, // PoS tags at t+1,t+2
  POS_BOTH,   // PoS tags at t-1,t+1
  WIN4_WORD,  // content word within 4 tokens of the target
  SENT_WORD,  // content word anywhere in the sentence
};

inline constexpr int kFeatureKindCount = 15;

inline constexpr std::array<std::string_view, kFeatureKindCount> kFeatureKindNames = {
    "CW_LEFT",  "CW_RIGHT",  "CW_2LEFT",  "CW_2RIGHT",  "CW_BOTH",
    "FW_LEFT",  "FW_RIGHT",  "FW_BOTH",
    "POS_LEFT", "POS_RIGHT", "POS_2LEFT", "POS_2RIGHT", "POS_BOTH",
    "WIN4_WORD", "SENT_WORD",
};

inline constexpr std::string_view kind_name(FeatureKind kind) {
  return kFeatureKindNames[static_cast<int>(kind)];
}

inline std::optional<FeatureKind> parse_feature_kind(std::string_view name) {
  for (int i = 0; i < kFeatureKindCount; ++i)
    if (kFeatureKindNames[i] == name) return static_cast<FeatureKind>(i);
  return std::nullopt;
}

/// Small set of feature kinds (15 bits).
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<FeatureKind> kinds) {
    for (FeatureKind k : kinds) insert(k);
  }

  static constexpr KindSet all() { return from_bits((1u << kFeatureKindCount) - 1u); }
  static constexpr KindSet local_content() {
    return {FeatureKind::CW_LEFT, FeatureKind::CW_RIGHT, FeatureKind::CW_2LEFT,
            FeatureKind::CW_2RIGHT, FeatureKind::CW_BOTH};
  }
  static constexpr KindSet local_pos_function() {
    return {FeatureKind::FW_LEFT,   FeatureKind::FW_RIGHT,  FeatureKind::FW_BOTH,
            FeatureKind::POS_LEFT,  FeatureKind::POS_RIGHT, FeatureKind::POS_2LEFT,
            FeatureKind::POS_2RIGHT, FeatureKind::POS_BOTH};
  }
  static constexpr KindSet global_content() {
    return {FeatureKind::WIN4_WORD, FeatureKind::SENT_WORD};
  }

  constexpr bool contains(FeatureKind k) const { return bits_ & bit(k); }
  constexpr KindSet& insert(FeatureKind k) {
    bits_ |= bit(k);
    return *this;
  }
  constexpr KindSet intersect(KindSet other) const { return from_bits(bits_ & other.bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (int i = 0; i < kFeatureKindCount; ++i)
      if (bits_ & (1u << i)) ++n;
    return n;
  }

  /// Members in canonical ordinal order.
  std::vector<FeatureKind> to_list() const {
    std::vector<FeatureKind> out;
    for (int i = 0; i < kFeatureKindCount; ++i)
      if (bits_ & (1u << i)) out.push_back(static_cast<FeatureKind>(i));
    return out;
  }

  friend constexpr bool operator==(KindSet, KindSet) = default;

 private:
  static constexpr std::uint32_t bit(FeatureKind k) { return 1u << static_cast<int>(k); }
  static constexpr KindSet from_bits(std::uint32_t b) {
    KindSet s;
    s.bits_ = b;
    return s;
  }

  std::uint32_t bits_ = 0;
};

/// One typed collocation instance. Parts are neighbor forms or PoS tags,
/// position-significant for local kinds; global kinds carry a single word.
/// The target's own surface form participates in identity.
struct Feature {
  FeatureKind kind{};
  std::string target_key;
  std::string target_form;
  std::vector<std::string> parts;

  friend bool operator==(const Feature&, const Feature&) = default;
  friend auto operator<=>(const Feature&, const Feature&) = default;
};

/// Canonical string key: `<kind>|<target_key>|<target_form>|<part1>[|<part2>]`.
/// This is the persistence and report key; it is bit-stable across runs.
inline std::string render_feature(const Feature& f) {
  std::string out{kind_name(f.kind)};
  out += '|';
  out += f.target_key;
  out += '|';
  out += f.target_form;
  for (const std::string& part : f.parts) {
    out += '|';
    out += part;
  }
  return out;
}

/// All features licensed by the example's sentence context, restricted to
/// `kinds`. Pure function of (sentence, target index, target key); returns a
/// sorted, duplicate-free vector (set semantics). Local positions outside the
/// sentence yield no feature, and nothing ever references the target itself.
inline std::vector<Feature> extract_features(const Example& example,
                                             KindSet kinds = KindSet::all()) {
  const Sentence& sentence = *example.context;
  const auto& toks = sentence.tokens;
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(toks.size());
  const std::ptrdiff_t t = static_cast<std::ptrdiff_t>(example.token_index);

  std::vector<Feature> out;
  auto content = [&](std::ptrdiff_t i) { return is_content_tag(toks[i].pos); };
  auto form = [&](std::ptrdiff_t i) -> const std::string& { return toks[i].form; };
  auto pos = [&](std::ptrdiff_t i) -> const std::string& { return toks[i].pos; };
  auto add = [&](FeatureKind kind, std::vector<std::string> parts) {
    if (kinds.contains(kind))
      out.push_back(Feature{kind, example.target_key, example.target_form, std::move(parts)});
  };

  const bool left = t - 1 >= 0, right = t + 1 < n;
  const bool left2 = t - 2 >= 0, right2 = t + 2 < n;

  if (left && content(t - 1)) add(FeatureKind::CW_LEFT, {form(t - 1)});
  if (right && content(t + 1)) add(FeatureKind::CW_RIGHT, {form(t + 1)});
  if (left2 && (content(t - 2) || content(t - 1)))
    add(FeatureKind::CW_2LEFT, {form(t - 2), form(t - 1)});
  if (right2 && (content(t + 1) || content(t + 2)))
    add(FeatureKind::CW_2RIGHT, {form(t + 1), form(t + 2)});
  if (left && right && (content(t - 1) || content(t + 1)))
    add(FeatureKind::CW_BOTH, {form(t - 1), form(t + 1)});

  if (left && !content(t - 1)) add(FeatureKind::FW_LEFT, {form(t - 1)});
  if (right && !content(t + 1)) add(FeatureKind::FW_RIGHT, {form(t + 1)});
  if (left && right && !content(t - 1) && !content(t + 1))
    add(FeatureKind::FW_BOTH, {form(t - 1), form(t + 1)});

  if (left) add(FeatureKind::POS_LEFT, {pos(t - 1)});
  if (right) add(FeatureKind::POS_RIGHT, {pos(t + 1)});
  if (left2) add(FeatureKind::POS_2LEFT, {pos(t - 2), pos(t - 1)});
  if (right2) add(FeatureKind::POS_2RIGHT, {pos(t + 1), pos(t + 2)});
  if (left && right) add(FeatureKind::POS_BOTH, {pos(t - 1), pos(t + 1)});

  const std::ptrdiff_t lo = t - 4 > 0 ? t - 4 : 0;
  const std::ptrdiff_t hi = t + 4 < n - 1 ? t + 4 : n - 1;
  for (std::ptrdiff_t i = lo; i <= hi; ++i)
    if (i != t && content(i)) add(FeatureKind::WIN4_WORD, {form(i)});
  for (std::ptrdiff_t i = 0; i < n; ++i)
    if (i != t && content(i)) add(FeatureKind::SENT_WORD, {form(i)});

  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace senselist

#endif  // SENSELIST_FEATURES_HPP
