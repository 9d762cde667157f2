#ifndef SENSELIST_IO_HPP
#define SENSELIST_IO_HPP

// TSV writers for reports, decision-list dumps and agreement tables.
// Output must be byte-stable across runs and platforms, so ratio columns
// are formatted from exact integer arithmetic with half-to-even rounding
// rather than through floating point.

#include <cstdint>
#include <cstdio>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "senselist/agreement.hpp"
#include "senselist/decision_list.hpp"
#include "senselist/evaluation.hpp"

namespace senselist {

/// Fixed-point rendering of num/den with `digits` decimals, rounding
/// half to even on the exact rational. den == 0 renders as zero.
inline std::string format_ratio(std::int64_t num, std::int64_t den, int digits) {
  std::int64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  std::int64_t scaled = 0;
  if (den > 0 && num > 0) {
    const std::int64_t x = num * scale;
    scaled = x / den;
    const std::int64_t rem = x % den;
    if (2 * rem > den || (2 * rem == den && scaled % 2 != 0)) ++scaled;
  }
  std::string digits_part = std::to_string(scaled % scale);
  digits_part.insert(0, static_cast<std::size_t>(digits) - digits_part.size(), '0');
  return std::to_string(scaled / scale) + "." + digits_part;
}

inline std::string format_fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

inline void write_metadata(std::ostream& out,
                           const std::vector<std::pair<std::string, std::string>>& metadata) {
  for (const auto& [key, value] : metadata) out << "## " << key << '=' << value << '\n';
}

/// Report TSV: `scope\tlabel\tprecision\tcoverage\tanswered\tcorrect\ttotal`,
/// ratios with 3 decimals, metadata as leading `##` comments.
inline void write_report_tsv(std::ostream& out, const Report& report) {
  write_metadata(out, report.metadata);
  out << "scope\tlabel\tprecision\tcoverage\tanswered\tcorrect\ttotal\n";
  for (const ReportRow& row : report.rows) {
    const Score& s = row.score;
    out << row.scope << '\t' << row.label << '\t' << format_ratio(s.correct, s.answered, 3)
        << '\t' << format_ratio(s.answered, s.total, 3) << '\t' << s.answered << '\t' << s.correct
        << '\t' << s.total << '\n';
  }
}

/// Decision-list dump, one rule per line in list order:
/// `weight(6 decimals)\tsense\tfeature-string\tcount_i\tothers_sum`.
inline void write_decision_list_tsv(std::ostream& out, const DecisionList& dl) {
  for (const Rule& rule : dl.rules)
    out << format_fixed(rule.weight, 6) << '\t' << rule.sense << '\t' << rule.feature_string
        << '\t' << rule.count << '\t' << rule.others << '\n';
}

/// One agreement row per word: `word\t#coll_a\t#coll_b\t%shared\t%contradiction`.
inline void write_agreement_header(std::ostream& out) {
  out << "word\t#coll_a\t#coll_b\t%shared\t%contradiction\n";
}

inline void write_agreement_row(std::ostream& out, const std::string& word,
                                const AgreementStats& stats) {
  out << word << '\t' << stats.count_a << '\t' << stats.count_b << '\t'
      << format_ratio(200 * stats.shared, stats.count_a + stats.count_b, 1) << '\t'
      << format_ratio(100 * stats.contradictions, stats.shared, 1) << '\n';
}

/// Contradiction detail rows: for every contradictory collocation, one line
/// per sense seen on either side: `feature\tsense\tcount_a\tcount_b`.
inline void write_contradictions_tsv(std::ostream& out,
                                     const std::vector<Contradiction>& contradictions) {
  out << "feature\tsense\tcount_a\tcount_b\n";
  for (const Contradiction& c : contradictions) {
    std::map<std::string, std::pair<std::int64_t, std::int64_t>> senses;
    for (const auto& [sense, count] : c.counts_a) senses[sense].first = count;
    for (const auto& [sense, count] : c.counts_b) senses[sense].second = count;
    for (const auto& [sense, counts] : senses)
      out << c.feature << '\t' << sense << '\t' << counts.first << '\t' << counts.second << '\n';
  }
}

}  // namespace senselist

#endif  // SENSELIST_IO_HPP
