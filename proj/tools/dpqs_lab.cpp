// dpqs-lab: cross-checks expected comparison counts of dual-pivot
// quickselect over five computation paths (enumeration, Monte Carlo,
// recurrence DP, generating functions, closed forms).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dpqs/exactdp.hpp"
#include "dpqs/formulas.hpp"
#include "dpqs/gfcatalog.hpp"
#include "dpqs/report.hpp"
#include "dpqs/simkit.hpp"

namespace {

using dpqs::StrategyId;

int env_threads() {
  if (const char* v = std::getenv("DPQS_THREADS")) {
    const int t = std::atoi(v);
    if (t > 0) return t;
  }
  return 0;  // available parallelism
}

std::vector<StrategyId> parse_strategies(const std::string& csv) {
  std::vector<StrategyId> out;
  size_t pos = 0;
  while (pos <= csv.size()) {
    const size_t comma = csv.find(',', pos);
    const std::string tok = csv.substr(pos, comma == std::string::npos ? csv.size() - pos
                                                                       : comma - pos);
    if (!tok.empty()) {
      const auto s = dpqs::parse_strategy(tok);
      if (!s) throw CLI::ValidationError("unknown strategy '" + tok + "'");
      out.push_back(*s);
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::ostream& open_output(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw CLI::ValidationError("cannot open output file '" + path + "'");
  return file;
}

void print_series_json(const dpqs::TruncSeries& s, const std::string& name, std::ostream& os) {
  nlohmann::ordered_json doc;
  if (!name.empty()) doc["name"] = name;
  doc["order"] = s.order();
  std::vector<std::string> coeffs;
  for (int k = 0; k <= s.order(); ++k) coeffs.push_back(s[k].str());
  doc["coeffs"] = coeffs;
  os << doc.dump(2) << '\n';
}

void print_series_csv(const dpqs::TruncSeries& s, std::ostream& os) {
  os << "k,coeff\n";
  for (int k = 0; k <= s.order(); ++k) os << k << ',' << s[k].str() << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dual-pivot quickselect comparison-count laboratory"};
  app.require_subcommand(1);

  // --- concordance
  auto* concord = app.add_subcommand("concordance", "cross-path concordance report");
  int c_nmax = 8;
  std::string c_strategies = "sf,ct,cv,yar,classical";
  std::string c_output;
  long long c_trials = 100000;
  std::uint64_t c_seed = 12345;
  bool c_no_mc = false;
  concord->add_option("--n-max", c_nmax, "largest list length (exact backends)");
  concord->add_option("--strategies", c_strategies, "comma-separated strategy ids");
  concord->add_option("--output", c_output, "output base path (.csv/.json appended)")->required();
  concord->add_option("--trials", c_trials, "Monte Carlo trials per sampled cell");
  concord->add_option("--seed", c_seed, "Monte Carlo seed");
  concord->add_flag("--no-mc", c_no_mc, "skip the Monte Carlo rows");

  // --- asymptotics
  auto* asym = app.add_subcommand("asymptotics", "residuals against the asymptotic expansions");
  std::string a_strategy = "ct";
  int a_j = -1;
  bool a_grand = false;
  bool a_partition = false;
  int a_max_pow = 12;
  std::string a_format = "csv";
  std::string a_output;
  std::string a_expansion = "derived";
  asym->add_option("--strategy", a_strategy, "strategy id");
  asym->add_option("--j", a_j, "rank (1..4 where an expansion exists)");
  asym->add_flag("--grand", a_grand, "grand average");
  asym->add_flag("--partition", a_partition, "partition cost expansion");
  asym->add_option("--max-pow", a_max_pow, "grid is 2^6 .. 2^max-pow");
  asym->add_option("--expansion", a_expansion,
                   "printed coefficients or the oracle-derived corrections")
      ->check(CLI::IsMember({"printed", "derived"}));
  asym->add_option("--format", a_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  asym->add_option("--output", a_output, "output path (default stdout)");

  // --- simulate
  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate");
  std::string s_strategy = "ct";
  int s_n = 64;
  int s_j = -1;
  bool s_grand = false;
  long long s_trials = 100000;
  std::uint64_t s_seed = 12345;
  std::string s_format = "json";
  std::string s_output;
  sim->add_option("--strategy", s_strategy, "strategy id");
  sim->add_option("--n", s_n, "list length")->required();
  sim->add_option("--j", s_j, "rank");
  sim->add_flag("--grand", s_grand, "uniform random rank");
  sim->add_option("--trials", s_trials, "number of trials");
  sim->add_option("--seed", s_seed, "seed");
  sim->add_option("--format", s_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--output", s_output, "output path (default stdout)");

  // --- series
  auto* ser = app.add_subcommand("series", "dump a catalog generating function");
  std::string g_name = "Pct";
  int g_order = 16;
  std::string g_format = "json";
  std::string g_output;
  ser->add_option("--name", g_name, "one of the catalog names (e.g. Pct, Cct_grand)");
  ser->add_option("--order", g_order, "truncation order");
  ser->add_option("--format", g_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  ser->add_option("--output", g_output, "output path (default stdout)");

  // --- partition-cost
  auto* pc = app.add_subcommand("partition-cost", "expected cost of one partition round");
  std::string p_strategy = "ct";
  int p_n = 16;
  bool p_float = false;
  std::string p_format = "json";
  std::string p_output;
  pc->add_option("--strategy", p_strategy, "strategy id (sf, lf, ct, cv)");
  pc->add_option("--n", p_n, "list length")->required();
  pc->add_flag("--float", p_float, "float backend");
  pc->add_option("--format", p_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  pc->add_option("--output", p_output, "output path (default stdout)");

  // --- select-cost
  auto* sc = app.add_subcommand("select-cost", "expected selection cost from the recurrence DP");
  std::string q_strategy = "ct";
  int q_n = 16;
  int q_j = -1;
  bool q_grand = false;
  bool q_float = false;
  std::string q_format = "json";
  std::string q_output;
  sc->add_option("--strategy", q_strategy, "strategy id (sf, lf, ct, cv)");
  sc->add_option("--n", q_n, "list length")->required();
  sc->add_option("--j", q_j, "rank");
  sc->add_flag("--grand", q_grand, "uniform random rank");
  sc->add_flag("--float", q_float, "float backend (larger n)");
  sc->add_option("--format", q_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sc->add_option("--output", q_output, "output path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*concord) {
      dpqs::ConcordanceOptions opt;
      opt.n_max = c_nmax;
      opt.strategies = parse_strategies(c_strategies);
      opt.mc_trials = c_trials;
      opt.seed = c_seed;
      opt.threads = env_threads();
      opt.with_mc = !c_no_mc;
      const dpqs::ConcordanceReport report = dpqs::build_concordance(opt);
      {
        std::ofstream csv(c_output + ".csv");
        if (!csv) throw std::runtime_error("cannot write " + c_output + ".csv");
        dpqs::write_concordance_csv(report, csv);
      }
      {
        std::ofstream json(c_output + ".json");
        if (!json) throw std::runtime_error("cannot write " + c_output + ".json");
        dpqs::write_concordance_json(report, json);
      }
      std::cout << "rows: " << report.rows.size() << ", findings: " << report.findings.size()
                << ", hard violations: " << report.hard_violations.size() << '\n';
      for (const auto& f : report.findings)
        std::cout << "finding: " << f.id << " n=" << f.n
                  << (f.has_delta ? " delta=" + f.delta.str() : "")
                  << (f.registered ? " (registered)" : " (UNREGISTERED)") << '\n';
      for (const auto& v : report.hard_violations) std::cout << "violation: " << v << '\n';
      return report.hard_violations.empty() ? 0 : 1;
    }

    if (*asym) {
      const auto strategy = dpqs::parse_strategy(a_strategy);
      if (!strategy) throw std::runtime_error("unknown strategy " + a_strategy);
      std::optional<int> j;
      if (a_partition) j = 0;
      else if (!a_grand) {
        if (a_j < 1) throw std::runtime_error("need --grand, --partition or --j");
        j = a_j;
      }
      const auto table =
          dpqs::asymptotic_residuals(*strategy, j, 6, a_max_pow, a_expansion == "printed");
      std::ofstream file;
      std::ostream& os = open_output(file, a_output);
      if (a_format == "csv") dpqs::write_residuals_csv(table, os);
      else dpqs::write_residuals_json(table, os);
      return 0;
    }

    if (*sim) {
      const auto strategy = dpqs::parse_strategy(s_strategy);
      if (!strategy) throw std::runtime_error("unknown strategy " + s_strategy);
      std::optional<int> j;
      if (!s_grand) {
        if (s_j < 1) throw std::runtime_error("need --grand or --j");
        j = s_j;
      }
      const dpqs::CostValue v =
          dpqs::monte_carlo(s_n, j, *strategy, s_trials, s_seed, env_threads());
      std::ofstream file;
      std::ostream& os = open_output(file, s_output);
      if (s_format == "json") {
        nlohmann::ordered_json doc;
        doc["strategy"] = s_strategy;
        doc["n"] = s_n;
        doc["j"] = j ? nlohmann::ordered_json(*j) : nlohmann::ordered_json("grand");
        doc["mean"] = v.mean;
        doc["stderr"] = std::isfinite(v.stderr_of_mean)
                            ? nlohmann::ordered_json(v.stderr_of_mean)
                            : nlohmann::ordered_json("inf");
        doc["trials"] = v.trials;
        doc["seed"] = v.seed;
        os << doc.dump(2) << '\n';
      } else {
        os << "strategy,n,j,mean,stderr,trials,seed\n";
        os.precision(12);
        os << s_strategy << ',' << s_n << ',' << (j ? std::to_string(*j) : "grand") << ','
           << v.mean << ',' << v.stderr_of_mean << ',' << v.trials << ',' << v.seed << '\n';
      }
      return 0;
    }

    if (*ser) {
      const auto name = dpqs::parse_gf_name(g_name);
      if (!name) throw std::runtime_error("unknown generating function " + g_name);
      const dpqs::TruncSeries s = dpqs::stated_gf(*name, g_order);
      std::ofstream file;
      std::ostream& os = open_output(file, g_output);
      if (g_format == "json") print_series_json(s, g_name, os);
      else print_series_csv(s, os);
      return 0;
    }

    if (*pc) {
      const auto strategy = dpqs::parse_strategy(p_strategy);
      if (!strategy) throw std::runtime_error("unknown strategy " + p_strategy);
      std::ofstream file;
      std::ostream& os = open_output(file, p_output);
      nlohmann::ordered_json doc;
      doc["strategy"] = p_strategy;
      doc["n"] = p_n;
      if (p_float) doc["value"] = dpqs::partition_cost_float(*strategy, p_n);
      else doc["value"] = dpqs::partition_cost(*strategy, p_n).str();
      doc["backend"] = p_float ? "float" : "exact";
      if (p_format == "json") os << doc.dump(2) << '\n';
      else {
        os << "strategy,n,value,backend\n"
           << p_strategy << ',' << p_n << ',' << doc["value"].dump() << ','
           << (p_float ? "float" : "exact") << '\n';
      }
      return 0;
    }

    if (*sc) {
      const auto strategy = dpqs::parse_strategy(q_strategy);
      if (!strategy) throw std::runtime_error("unknown strategy " + q_strategy);
      if (!q_grand && q_j < 1) throw std::runtime_error("need --grand or --j");
      std::ofstream file;
      std::ostream& os = open_output(file, q_output);
      nlohmann::ordered_json doc;
      doc["strategy"] = q_strategy;
      doc["n"] = q_n;
      doc["j"] = q_grand ? nlohmann::ordered_json("grand") : nlohmann::ordered_json(q_j);
      if (q_float) {
        doc["value"] = q_grand ? dpqs::grand_average_float(*strategy, q_n)
                               : dpqs::expected_cost_float(*strategy, q_n, q_j);
      } else {
        doc["value"] = (q_grand ? dpqs::grand_average(*strategy, q_n)
                                : dpqs::expected_cost(*strategy, q_n, q_j))
                           .str();
      }
      doc["backend"] = q_float ? "float" : "exact";
      if (q_format == "json") os << doc.dump(2) << '\n';
      else {
        os << "strategy,n,j,value,backend\n"
           << q_strategy << ',' << q_n << ','
           << (q_grand ? std::string("grand") : std::to_string(q_j)) << ','
           << doc["value"].dump() << ',' << (q_float ? "float" : "exact") << '\n';
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
