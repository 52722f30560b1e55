#include "nlgames/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlgames/anf.hpp"
#include "nlgames/classical.hpp"
#include "nlgames/game.hpp"
#include "nlgames/pi_format.hpp"
#include "nlgames/quantum.hpp"
#include "nlgames/scan.hpp"
#include "nlgames/simulate.hpp"

namespace nlgames {

namespace {

using ordered_json = nlohmann::ordered_json;

GameTable resolve_game(const std::string& mask_text, const std::string& anf_text) {
  const bool has_mask = !mask_text.empty();
  const bool has_anf = !anf_text.empty();
  if (has_mask == has_anf)
    throw std::invalid_argument("give the game exactly one way: --mask or --anf");
  return has_mask ? parse_mask(mask_text) : from_anf(parse_anf(anf_text));
}

ordered_json angles_json(const AngleSet& a) {
  return ordered_json{{"theta0", format_angle(a.theta0)},
                      {"theta1", format_angle(a.theta1)},
                      {"psi0", format_angle(a.psi0)},
                      {"psi1", format_angle(a.psi1)}};
}

int run_analyze(const std::string& mask_text, const std::string& anf_text, std::ostream& out) {
  const GameTable game = resolve_game(mask_text, anf_text);
  const ClassicalResult classical = classical_max(game);
  const AnalyticSolution family = analytic_family_max(coefficient_profile(game));
  const QuantumAssessment quantum = quantum_max(game);

  ordered_json strategies = ordered_json::array();
  for (JointStrategy s : classical.maximizers) strategies.push_back(to_string(s));

  ordered_json result{
      {"mask", format_mask(game)},
      {"anf", to_string(to_anf(game))},
      {"partition", to_string(partition_of(game))},
      {"admissible", is_admissible(game)},
      {"inconsistent", has_inconsistent_pair(game)},
      {"classical", ordered_json{{"value", classical.max_probability.value()},
                                 {"strategies", strategies}}},
      {"quantum", ordered_json{{"family", family.value},
                               {"reported", quantum.reported},
                               {"t_star", family.t_star},
                               {"angles", angles_json(family.angles)},
                               {"angles_radians",
                                ordered_json{family.angles.theta0, family.angles.theta1,
                                             family.angles.psi0, family.angles.psi1}}}},
      {"separation", quantum.separation}};
  out << result.dump(2) << '\n';
  return 0;
}

int run_anf(const std::string& mask_text, const std::string& anf_text, std::ostream& out) {
  const bool has_mask = !mask_text.empty();
  const bool has_anf = !anf_text.empty();
  if (has_mask == has_anf)
    throw std::invalid_argument("give the game exactly one way: --mask or --anf");
  if (has_mask) {
    out << to_string(to_anf(parse_mask(mask_text))) << '\n';
  } else {
    out << format_mask(from_anf(parse_anf(anf_text))) << '\n';
  }
  return 0;
}

int run_scan(const std::string& mask_out, const std::string& summary_out,
             const std::string& format_name, bool include_inadmissible, int jobs,
             std::ostream& out) {
  const EmitFormat format = parse_emit_format(format_name);
  if (format == EmitFormat::Markdown)
    throw std::invalid_argument("scan records support csv or json; the summary is markdown");
  if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");

  const GameFilter filter =
      include_inadmissible ? GameFilter::All : GameFilter::AdmissibleOnly;
  const std::vector<ScanRecord> records = scan(filter, jobs);
  const std::vector<PartitionSummary> summaries = summarize(records);

  if (!mask_out.empty()) emit_records(records, format, std::filesystem::path(mask_out));
  if (!summary_out.empty()) {
    write_summary_report(std::filesystem::path(summary_out), summaries);
  } else if (mask_out.empty()) {
    write_summary_report(out, summaries);
  }
  return 0;
}

AngleSet parse_angle_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) values.push_back(parse_angle(token));
  if (values.size() != 4)
    throw std::invalid_argument("--angles needs four comma-separated values (theta0,theta1,psi0,psi1)");
  return {values[0], values[1], values[2], values[3]};
}

int run_simulate(const std::string& mask_text, const std::string& anf_text,
                 const std::string& mode_name, const std::string& strategy_text,
                 const std::string& angles_text, long rounds, uint64_t seed, std::ostream& out) {
  SimulationConfig config;
  config.game = resolve_game(mask_text, anf_text);
  config.rounds = rounds;
  config.seed = seed;
  if (mode_name == "classical") {
    config.mode = SimulationConfig::Mode::Classical;
    if (strategy_text.empty()) throw std::invalid_argument("--mode classical needs --strategy");
    if (!angles_text.empty()) throw std::invalid_argument("--angles only applies to --mode quantum");
    config.strategy = parse_strategy(strategy_text);
  } else if (mode_name == "quantum") {
    config.mode = SimulationConfig::Mode::Quantum;
    if (angles_text.empty()) throw std::invalid_argument("--mode quantum needs --angles");
    if (!strategy_text.empty()) throw std::invalid_argument("--strategy only applies to --mode classical");
    config.angles = parse_angle_list(angles_text);
  } else {
    throw std::invalid_argument("unknown mode '" + mode_name + "' (want classical or quantum)");
  }

  const SimulationReport report = run_simulation(config);
  ordered_json result{{"mask", format_mask(config.game)},
                      {"mode", mode_name},
                      {"rounds", report.rounds},
                      {"seed", seed},
                      {"wins", report.wins},
                      {"empirical_rate", report.empirical_rate},
                      {"expected_rate", report.expected_rate},
                      {"standard_error", report.standard_error},
                      {"z_score", report.z_score}};
  out << result.dump(2) << '\n';
  return 0;
}

int run_verify_nga19(std::ostream& out) {
  const Nga19Census census = verify_nga19_counts();
  ordered_json counts{{"(1,1)", census.pair_counts[0][0]},
                      {"(1,3)", census.pair_counts[0][1]},
                      {"(3,1)", census.pair_counts[1][0]},
                      {"(3,3)", census.pair_counts[1][1]}};
  ordered_json result{{"pair_counts", counts},
                      {"total_nonconstant", census.total_nonconstant},
                      {"total_pairs", census.total_pairs},
                      {"all_expected", census.all_expected()}};
  out << result.dump(2) << '\n';
  return census.all_expected() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact classical and quantum analysis of binary two-party games"};
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Full classical + quantum analysis of one game");
  std::string an_mask, an_anf;
  analyze->add_option("--mask", an_mask, "game as a 16-bit win mask (hex or decimal)");
  analyze->add_option("--anf", an_anf, "game as an ANF polynomial, e.g. \"xy+a+b\"");

  auto* scan_cmd = app.add_subcommand("scan", "Exhaustive scan over all games");
  std::string scan_out, scan_summary, scan_format = "csv";
  bool include_inadmissible = false;
  int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  scan_cmd->add_option("--out", scan_out, "write per-game records here");
  scan_cmd->add_option("--summary", scan_summary, "write the markdown summary report here");
  scan_cmd->add_option("--format", scan_format, "record format: csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_flag("--include-inadmissible", include_inadmissible,
                     "scan all 65536 games, not just the 50625 admissible ones");
  scan_cmd->add_option("--jobs", jobs, "worker threads (output is identical for any count)");

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo referee for one game");
  std::string sim_mask, sim_anf, sim_mode, sim_strategy, sim_angles;
  long rounds = 1000000;
  uint64_t seed = 1;
  simulate->add_option("--mask", sim_mask, "game as a 16-bit win mask");
  simulate->add_option("--anf", sim_anf, "game as an ANF polynomial");
  simulate->add_option("--mode", sim_mode, "classical or quantum")->required();
  simulate->add_option("--strategy", sim_strategy, "classical strategy, e.g. \"a=0, b=0\"");
  simulate->add_option("--angles", sim_angles,
                       "four angles theta0,theta1,psi0,psi1, e.g. \"0,pi/4,pi/8,7pi/8\"");
  simulate->add_option("--rounds", rounds, "number of rounds (default 1000000)");
  simulate->add_option("--seed", seed, "PRNG seed (default 1)");

  auto* anf_cmd = app.add_subcommand("anf", "Convert between win mask and ANF text");
  std::string conv_mask, conv_anf;
  anf_cmd->add_option("--mask", conv_mask, "mask to convert to ANF");
  anf_cmd->add_option("--anf", conv_anf, "ANF to convert to a mask");

  auto* verify = app.add_subcommand("verify-nga19", "Census of composed two-variable games");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (analyze->parsed()) return run_analyze(an_mask, an_anf, out);
    if (scan_cmd->parsed())
      return run_scan(scan_out, scan_summary, scan_format, include_inadmissible, jobs, out);
    if (simulate->parsed())
      return run_simulate(sim_mask, sim_anf, sim_mode, sim_strategy, sim_angles, rounds, seed, out);
    if (anf_cmd->parsed()) return run_anf(conv_mask, conv_anf, out);
    if (verify->parsed()) return run_verify_nga19(out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  err << "no command given\n";
  return 1;
}

}  // namespace nlgames
