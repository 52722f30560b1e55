#include "nlgames/scan.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "nlgames/pi_format.hpp"
#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nlgames {

ScanRecord analyze_game(GameTable g) {
  ScanRecord r;
  r.game = g;
  r.partition = partition_of(g);
  r.classical = classical_max_value(g);
  r.family = analytic_family_max(coefficient_profile(g)).value;
  r.reported_quantum = std::max(r.family, r.classical.value());
  r.separation = std::max(0.0, r.family - r.classical.value());
  r.inconsistent = has_inconsistent_pair(g);
  return r;
}

std::vector<ScanRecord> scan(GameFilter filter, int workers) {
  if (workers < 1) throw std::invalid_argument("scan needs at least one worker");
  const std::vector<GameTable> games = enumerate_games(filter);
  std::vector<ScanRecord> records(games.size());
  const auto count = static_cast<long>(games.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) num_threads(workers)
#endif
  for (long i = 0; i < count; ++i) records[i] = analyze_game(games[i]);
  return records;
}

std::vector<ScanRecord> scan_serial(GameFilter filter) {
  const std::vector<GameTable> games = enumerate_games(filter);
  std::vector<ScanRecord> records(games.size());
  for (size_t i = 0; i < games.size(); ++i) records[i] = analyze_game(games[i]);
  return records;
}

namespace {

double round_micro(double v) { return std::round(v * 1e6) / 1e6; }

// Summaries sort by total descending, then counts lexicographically
// descending; the advantage table uses the reference row order (counts
// ascending within a total).
bool summary_order(const Partition& lhs, const Partition& rhs) {
  if (lhs.total() != rhs.total()) return lhs.total() > rhs.total();
  return lhs.counts > rhs.counts;
}

}  // namespace

std::vector<PartitionSummary> summarize(const std::vector<ScanRecord>& records) {
  if (records.empty()) throw std::invalid_argument("cannot summarize an empty record list");

  std::map<Partition, PartitionSummary> by_partition;
  for (const ScanRecord& r : records) {
    PartitionSummary& s = by_partition[r.partition];
    s.partition = r.partition;
    s.game_count += 1;
    const std::pair<Quarters, double> pair{r.classical, round_micro(r.reported_quantum)};
    if (std::find(s.outcome_pairs.begin(), s.outcome_pairs.end(), pair) == s.outcome_pairs.end())
      s.outcome_pairs.push_back(pair);
    if (r.separation > s.max_separation) {
      s.max_separation = r.separation;
      s.witness = r.game;
    }
  }

  std::vector<PartitionSummary> out;
  out.reserve(by_partition.size());
  for (auto& [partition, summary] : by_partition) {
    std::sort(summary.outcome_pairs.begin(), summary.outcome_pairs.end());
    if (!(summary.max_separation > 0)) summary.witness.reset();
    out.push_back(std::move(summary));
  }
  std::sort(out.begin(), out.end(), [](const PartitionSummary& a, const PartitionSummary& b) {
    return summary_order(a.partition, b.partition);
  });
  return out;
}

std::vector<AdvantageRow> advantage_table(const std::vector<PartitionSummary>& summaries) {
  std::vector<AdvantageRow> rows;
  for (const PartitionSummary& s : summaries) {
    if (!(s.max_separation > 1e-9) || !s.witness) continue;
    AdvantageRow row;
    row.partition = s.partition;
    row.witness = *s.witness;
    row.witness_anf = to_anf(row.witness);
    const ClassicalResult classical = classical_max(row.witness);
    row.classical = classical.max_probability;
    row.strategy = classical.maximizers.front();
    const AnalyticSolution family = analytic_family_max(coefficient_profile(row.witness));
    row.family = family.value;
    row.angles = family.angles;
    row.separation = s.max_separation;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const AdvantageRow& a, const AdvantageRow& b) {
    if (a.partition.total() != b.partition.total()) return a.partition.total() > b.partition.total();
    return a.partition.counts < b.partition.counts;
  });
  return rows;
}

bool Nga19Census::all_expected() const {
  return total_nonconstant == 14 && total_pairs == 196 && pair_counts[0][0] == 16 &&
         pair_counts[0][1] == 16 && pair_counts[1][0] == 16 && pair_counts[1][1] == 16;
}

Nga19Census verify_nga19_counts() {
  // A two-variable boolean function is a 4-bit truth table; 0x0 and 0xF are
  // the constants.  Weight class = |g^{-1}(0)| = 4 - popcount.
  Nga19Census census;
  std::vector<int> zero_weights;
  for (int tt = 1; tt <= 14; ++tt) {
    census.total_nonconstant += 1;
    zero_weights.push_back(4 - std::popcount(static_cast<unsigned>(tt)));
  }
  for (int w1 : zero_weights)
    for (int w2 : zero_weights) {
      census.total_pairs += 1;
      if ((w1 == 1 || w1 == 3) && (w2 == 1 || w2 == 3))
        census.pair_counts[w1 == 3][w2 == 3] += 1;
    }
  return census;
}

EmitFormat parse_emit_format(const std::string& name) {
  if (name == "csv") return EmitFormat::Csv;
  if (name == "json") return EmitFormat::Json;
  if (name == "markdown" || name == "md") return EmitFormat::Markdown;
  throw std::invalid_argument("unknown format '" + name + "' (want csv, json or markdown)");
}

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fixed9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9f", v);
  return buf;
}

std::string fixed6(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string angles_text(const AngleSet& a) {
  return "theta0=" + format_angle(a.theta0) + ", theta1=" + format_angle(a.theta1) +
         ", psi0=" + format_angle(a.psi0) + ", psi1=" + format_angle(a.psi1);
}

template <typename Payload, typename Fn>
void emit_to_path(const Payload& payload, EmitFormat format,
                  const std::filesystem::path& destination, Fn&& writer) {
  std::ofstream file(destination, std::ios::binary);
  if (!file) throw IoError("cannot open '" + destination.string() + "' for writing");
  writer(payload, format, file);
  file.flush();
  if (!file) throw IoError("write failed for '" + destination.string() + "'");
}

void write_records_csv(const std::vector<ScanRecord>& records, std::ostream& out) {
  out << "mask_hex,partition,classical,family_max,reported_quantum,separation,inconsistent\n";
  for (const ScanRecord& r : records)
    out << format_mask(r.game) << ',' << to_string(r.partition) << ',' << to_string(r.classical)
        << ',' << fixed9(r.family) << ',' << fixed9(r.reported_quantum) << ','
        << fixed9(r.separation) << ',' << (r.inconsistent ? "true" : "false") << '\n';
}

ordered_json record_json(const ScanRecord& r) {
  return ordered_json{{"mask_hex", format_mask(r.game)},
                      {"partition", to_string(r.partition)},
                      {"classical", r.classical.value()},
                      {"family_max", r.family},
                      {"reported_quantum", r.reported_quantum},
                      {"separation", r.separation},
                      {"inconsistent", r.inconsistent}};
}

void write_records_markdown(const std::vector<ScanRecord>& records, std::ostream& out) {
  out << "| Mask | Partition | Classical | Family max | Reported quantum | Separation | Inconsistent |\n";
  out << "|---|---|---|---|---|---|---|\n";
  for (const ScanRecord& r : records)
    out << "| " << format_mask(r.game) << " | " << to_string(r.partition) << " | "
        << to_string(r.classical) << " | " << fixed6(r.family) << " | "
        << fixed6(r.reported_quantum) << " | " << fixed6(r.separation) << " | "
        << (r.inconsistent ? "yes" : "no") << " |\n";
}

void write_summaries_csv(const std::vector<PartitionSummary>& summaries, std::ostream& out) {
  out << "partition,total,game_count,classical,quantum,separation\n";
  for (const PartitionSummary& s : summaries)
    for (const auto& [classical, quantum] : s.outcome_pairs) {
      const double sep = quantum - classical.value();
      out << to_string(s.partition) << ',' << s.partition.total() << ',' << s.game_count << ','
          << to_string(classical) << ',' << fixed6(quantum) << ','
          << (sep > 1e-9 ? fixed6(sep) : "NA") << '\n';
    }
}

ordered_json summary_json(const PartitionSummary& s) {
  ordered_json pairs = ordered_json::array();
  for (const auto& [classical, quantum] : s.outcome_pairs) {
    const double sep = quantum - classical.value();
    pairs.push_back(ordered_json{{"classical", classical.value()},
                                 {"quantum", quantum},
                                 {"separation", sep > 1e-9 ? ordered_json(sep) : ordered_json()}});
  }
  ordered_json j{{"partition", to_string(s.partition)},
                 {"total", s.partition.total()},
                 {"game_count", s.game_count},
                 {"outcome_pairs", pairs},
                 {"max_separation", s.max_separation}};
  j["witness_mask"] = s.witness ? ordered_json(format_mask(*s.witness)) : ordered_json();
  return j;
}

// The reference tables' layout: one row per outcome pair, separation
// column "NA" where the quantum value offers no advantage.
void write_summaries_markdown(const std::vector<PartitionSummary>& summaries, std::ostream& out) {
  out << "| Partitions | Max. classical success prob. | Max. quantum success prob. | Corresponding Separation |\n";
  out << "|---|---|---|---|\n";
  for (const PartitionSummary& s : summaries) {
    bool first = true;
    for (const auto& [classical, quantum] : s.outcome_pairs) {
      const double sep = quantum - classical.value();
      out << "| " << (first ? to_string(s.partition) : std::string()) << " | "
          << to_string(classical) << " | " << fixed6(quantum) << " | "
          << (sep > 1e-9 ? fixed6(sep) : "NA") << " |\n";
      first = false;
    }
  }
}

void write_advantage_csv(const std::vector<AdvantageRow>& rows, std::ostream& out) {
  out << "total,partition,game_anf,witness_mask,classical,strategy,family_max,angles,separation\n";
  for (const AdvantageRow& r : rows)
    out << r.partition.total() << ',' << to_string(r.partition) << ',' << to_string(r.witness_anf)
        << ',' << format_mask(r.witness) << ',' << to_string(r.classical) << ",\""
        << to_string(r.strategy) << "\"," << fixed9(r.family) << ",\"" << angles_text(r.angles)
        << "\"," << fixed9(r.separation) << '\n';
}

ordered_json advantage_json(const AdvantageRow& r) {
  return ordered_json{{"total", r.partition.total()},
                      {"partition", to_string(r.partition)},
                      {"game_anf", to_string(r.witness_anf)},
                      {"witness_mask", format_mask(r.witness)},
                      {"classical", r.classical.value()},
                      {"strategy", to_string(r.strategy)},
                      {"family_max", r.family},
                      {"angles", angles_text(r.angles)},
                      {"separation", r.separation}};
}

void write_advantage_markdown(const std::vector<AdvantageRow>& rows, std::ostream& out) {
  out << "| No. of succ. outcomes | Partition | A game corr. to the partition (in ANF form) | "
         "Max. classical succ. prob. | Corr. classical strategy | Max. quantum succ. prob. | "
         "Corr. quantum strategy | Max. Separation |\n";
  out << "|---|---|---|---|---|---|---|---|\n";
  for (const AdvantageRow& r : rows)
    out << "| " << r.partition.total() << " | " << to_string(r.partition) << " | "
        << to_string(r.witness_anf) << " | " << to_string(r.classical) << " | "
        << to_string(r.strategy) << " | " << fixed6(r.family) << " | " << angles_text(r.angles)
        << " | " << fixed6(r.separation) << " |\n";
}

template <typename Row>
void write_json_array(const std::vector<Row>& rows, ordered_json (*to_json)(const Row&),
                      std::ostream& out) {
  ordered_json arr = ordered_json::array();
  for (const Row& r : rows) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

}  // namespace

void emit_records(const std::vector<ScanRecord>& records, EmitFormat format, std::ostream& out) {
  if (records.empty()) throw std::invalid_argument("refusing to emit an empty record list");
  switch (format) {
    case EmitFormat::Csv: write_records_csv(records, out); break;
    case EmitFormat::Json: write_json_array(records, record_json, out); break;
    case EmitFormat::Markdown: write_records_markdown(records, out); break;
  }
}

void emit_records(const std::vector<ScanRecord>& records, EmitFormat format,
                  const std::filesystem::path& destination) {
  if (records.empty()) throw std::invalid_argument("refusing to emit an empty record list");
  emit_to_path(records, format, destination,
               [](const auto& p, EmitFormat f, std::ostream& o) { emit_records(p, f, o); });
}

void emit_summaries(const std::vector<PartitionSummary>& summaries, EmitFormat format,
                    std::ostream& out) {
  if (summaries.empty()) throw std::invalid_argument("refusing to emit an empty summary list");
  switch (format) {
    case EmitFormat::Csv: write_summaries_csv(summaries, out); break;
    case EmitFormat::Json: write_json_array(summaries, summary_json, out); break;
    case EmitFormat::Markdown: write_summaries_markdown(summaries, out); break;
  }
}

void emit_summaries(const std::vector<PartitionSummary>& summaries, EmitFormat format,
                    const std::filesystem::path& destination) {
  if (summaries.empty()) throw std::invalid_argument("refusing to emit an empty summary list");
  emit_to_path(summaries, format, destination,
               [](const auto& p, EmitFormat f, std::ostream& o) { emit_summaries(p, f, o); });
}

void emit_advantage_table(const std::vector<AdvantageRow>& rows, EmitFormat format,
                          std::ostream& out) {
  switch (format) {
    case EmitFormat::Csv: write_advantage_csv(rows, out); break;
    case EmitFormat::Json: write_json_array(rows, advantage_json, out); break;
    case EmitFormat::Markdown: write_advantage_markdown(rows, out); break;
  }
}

void emit_advantage_table(const std::vector<AdvantageRow>& rows, EmitFormat format,
                          const std::filesystem::path& destination) {
  emit_to_path(rows, format, destination,
               [](const auto& p, EmitFormat f, std::ostream& o) { emit_advantage_table(p, f, o); });
}

namespace {

// Expected (classical, quantum) outcome rows for the report's discrepancy
// section, keyed by partition counts.  Totals 4..11 carry the tabulated
// rows; totals >= 12 are expected to be winnable with certainty.
const std::map<std::array<int, 4>, std::vector<std::pair<double, double>>>& expected_rows_map() {
  static const std::map<std::array<int, 4>, std::vector<std::pair<double, double>>> rows = {
      {{4, 2, 1, 1}, {{0.75, 0.75}, {1.0, 1.0}}},
      {{3, 3, 1, 1}, {{0.75, 0.75}, {1.0, 1.0}}},
      {{2, 2, 2, 2}, {{0.75, 0.853}, {1.0, 1.0}}},
      {{3, 2, 2, 1}, {{0.75, 0.78}, {1.0, 1.0}}},
      {{4, 3, 1, 1}, {{0.75, 0.75}, {1.0, 1.0}}},
      {{4, 2, 2, 1}, {{1.0, 1.0}}},
      {{3, 2, 2, 2}, {{1.0, 1.0}}},
      {{3, 3, 2, 1}, {{0.75, 0.792}, {1.0, 1.0}}},
      {{4, 4, 1, 1}, {{1.0, 1.0}}},
      {{4, 2, 2, 2}, {{1.0, 1.0}}},
      {{3, 3, 2, 2}, {{1.0, 1.0}}},
      {{4, 3, 2, 1}, {{1.0, 1.0}}},
      {{3, 3, 3, 1}, {{0.75, 0.8}, {1.0, 1.0}}},
      {{4, 4, 2, 1}, {{1.0, 1.0}}},
      {{4, 3, 3, 1}, {{1.0, 1.0}}},
      {{4, 3, 2, 2}, {{1.0, 1.0}}},
      {{3, 3, 3, 2}, {{1.0, 1.0}}},
      {{3, 2, 1, 1}, {{0.75, 0.75}, {1.0, 1.0}}},
      {{2, 2, 2, 1}, {{0.75, 0.762}, {1.0, 1.0}}},
      {{3, 1, 1, 1}, {{0.5, 0.55}, {0.75, 0.75}, {1.0, 1.0}}},
      {{2, 2, 1, 1}, {{0.75, 0.75}, {1.0, 1.0}}},
      {{2, 1, 1, 1}, {{0.5, 0.542}, {0.75, 0.75}, {1.0, 1.0}}},
      {{1, 1, 1, 1}, {{0.5, 0.5}, {0.75, 0.75}, {1.0, 1.0}}},
  };
  return rows;
}

const std::vector<std::pair<double, double>>& certain_win_row() {
  static const std::vector<std::pair<double, double>> row = {{1.0, 1.0}};
  return row;
}

}  // namespace

const std::vector<std::pair<double, double>>* expected_outcome_rows(const Partition& p) {
  const auto& rows = expected_rows_map();
  if (auto it = rows.find(p.counts); it != rows.end()) return &it->second;
  if (p.total() >= 12) return &certain_win_row();
  return nullptr;  // no expectation on record (4+1+1+1)
}

std::vector<Discrepancy> find_discrepancies(const std::vector<PartitionSummary>& summaries) {
  std::vector<Discrepancy> out;
  for (const PartitionSummary& s : summaries) {
    const auto* expected = expected_outcome_rows(s.partition);
    for (const auto& [classical, quantum] : s.outcome_pairs) {
      bool matched = false;
      if (expected)
        for (const auto& [ec, eq] : *expected)
          if (classical.value() == ec && std::abs(quantum - eq) <= 5e-3) {
            matched = true;
            break;
          }
      if (!matched) out.push_back({s.partition, classical, quantum});
    }
  }
  return out;
}

void write_summary_report(std::ostream& out, const std::vector<PartitionSummary>& summaries) {
  out << "# Exhaustive scan summary\n\n";
  out << "Games scanned: ";
  long total = 0;
  for (const PartitionSummary& s : summaries) total += s.game_count;
  out << total << " across " << summaries.size() << " partitions.\n\n";

  out << "## Outcomes per partition\n\n";
  out << "Partitions ordered by total winners descending (the narrative\n"
         "presentation groups totals as 8, 9, 10, 11, 12+, 7, 6, 5, 4).\n\n";
  write_summaries_markdown(summaries, out);

  out << "\n## Partitions with quantum advantage\n\n";
  const auto advantage = advantage_table(summaries);
  if (advantage.empty()) {
    out << "none\n";
  } else {
    write_advantage_markdown(advantage, out);
  }

  out << "\n## Discrepancies\n\n";
  const auto discrepancies = find_discrepancies(summaries);
  if (discrepancies.empty()) {
    out << "none: every outcome pair found by the scan matches an expected row.\n";
  } else {
    out << "Outcome pairs found by the scan with no matching expected row\n"
           "(the scan is ground truth; these are findings, not failures):\n\n";
    for (const Discrepancy& d : discrepancies)
      out << "- partition " << to_string(d.partition) << ": (" << to_string(d.classical) << ", "
          << fixed6(d.quantum) << ")\n";
  }
}

void write_summary_report(const std::filesystem::path& destination,
                          const std::vector<PartitionSummary>& summaries) {
  std::ofstream file(destination, std::ios::binary);
  if (!file) throw IoError("cannot open '" + destination.string() + "' for writing");
  write_summary_report(file, summaries);
  file.flush();
  if (!file) throw IoError("write failed for '" + destination.string() + "'");
}

}  // namespace nlgames
