#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nlgames/anf.hpp"
#include "nlgames/classical.hpp"
#include "nlgames/game.hpp"
#include "nlgames/quantum.hpp"

namespace nlgames {

struct ScanRecord {
  GameTable game;
  Partition partition;
  Quarters classical;
  double family = 0;            // family quantum maximum
  double reported_quantum = 0;  // max(family, classical)
  double separation = 0;        // max(0, family - classical)
  bool inconsistent = false;

  friend bool operator==(const ScanRecord&, const ScanRecord&) = default;
};

ScanRecord analyze_game(GameTable g);

// One record per game in ascending mask order, regardless of worker count.
// scan() fans the per-game kernel out over OpenMP threads with each record
// written to its own slot; scan_serial() is the plain-loop reference the
// tests compare against.
std::vector<ScanRecord> scan(GameFilter filter, int workers);
std::vector<ScanRecord> scan_serial(GameFilter filter);

struct PartitionSummary {
  Partition partition;
  long game_count = 0;
  // Distinct (classical, reported quantum) outcomes over the partition's
  // games, quantum rounded to 1e-6 before deduplication, sorted ascending.
  std::vector<std::pair<Quarters, double>> outcome_pairs;
  double max_separation = 0;
  std::optional<GameTable> witness;  // attains max_separation; present iff > 0
};

// One summary per distinct partition, sorted by total descending then
// counts lexicographically descending.  Rejects an empty record list.
std::vector<PartitionSummary> summarize(const std::vector<ScanRecord>& records);

struct AdvantageRow {
  Partition partition;
  GameTable witness;
  AnfPolynomial witness_anf;
  Quarters classical;
  JointStrategy strategy;  // first maximizer in table row order
  double family = 0;
  AngleSet angles;         // achieve `family` on the witness
  double separation = 0;
};

// The partitions with max_separation > 1e-9, ordered by total descending
// then counts ascending (the reference table's row order).
std::vector<AdvantageRow> advantage_table(const std::vector<PartitionSummary>& summaries);

// Census of composed games f(x,y) * g(a,b) built from non-constant
// two-variable boolean functions: of the 14 non-constant functions, 4 have
// a single zero and 4 a single one, so each of the four weight classes
// {1,3} x {1,3} contributes exactly 4 x 4 = 16 function pairs.
struct Nga19Census {
  // pair_counts[i][j]: pairs with |g1^{-1}(0)| = (i ? 3 : 1) and
  // |g2^{-1}(0)| = (j ? 3 : 1).
  int pair_counts[2][2] = {{0, 0}, {0, 0}};
  int total_nonconstant = 0;
  int total_pairs = 0;

  bool all_expected() const;
};

Nga19Census verify_nga19_counts();

enum class EmitFormat { Csv, Json, Markdown };

EmitFormat parse_emit_format(const std::string& name);  // throws std::invalid_argument

// Emission failures carry the destination path in the message.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Byte-deterministic writers.  The record CSV columns are fixed:
// mask_hex,partition,classical,family_max,reported_quantum,separation,inconsistent.
// Empty payloads are rejected rather than emitted as empty files.
void emit_records(const std::vector<ScanRecord>& records, EmitFormat format, std::ostream& out);
void emit_records(const std::vector<ScanRecord>& records, EmitFormat format,
                  const std::filesystem::path& destination);
void emit_summaries(const std::vector<PartitionSummary>& summaries, EmitFormat format,
                    std::ostream& out);
void emit_summaries(const std::vector<PartitionSummary>& summaries, EmitFormat format,
                    const std::filesystem::path& destination);
void emit_advantage_table(const std::vector<AdvantageRow>& rows, EmitFormat format,
                          std::ostream& out);
void emit_advantage_table(const std::vector<AdvantageRow>& rows, EmitFormat format,
                          const std::filesystem::path& destination);

// Expected (classical, quantum) outcome rows per partition, used for the
// report's discrepancy section: the tabulated rows for totals 4..11, and
// (1.0, 1.0) for totals >= 12.  Returns nullptr for partitions with no
// expectation on record (e.g. 4+1+1+1).
const std::vector<std::pair<double, double>>* expected_outcome_rows(const Partition& p);

struct Discrepancy {
  Partition partition;
  Quarters classical;
  double quantum = 0;
};

// Scan outcomes with no matching expected row (classical exact, quantum
// within 5e-3).  Findings, not failures: the scan is ground truth.
std::vector<Discrepancy> find_discrepancies(const std::vector<PartitionSummary>& summaries);

// The full markdown report: per-partition outcome table, advantage table,
// discrepancy section.
void write_summary_report(std::ostream& out, const std::vector<PartitionSummary>& summaries);
void write_summary_report(const std::filesystem::path& destination,
                          const std::vector<PartitionSummary>& summaries);

}  // namespace nlgames
