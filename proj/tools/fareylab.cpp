// Command-line front end: enumerate Farey sequences, gap histograms,
// identity/dynamics verification sweeps, asymptotic constants, and region
// dumps. Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 completed with warnings.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "fareylab/constant.hpp"
#include "fareylab/farey.hpp"
#include "fareylab/parallel.hpp"
#include "fareylab/serialize.hpp"
#include "fareylab/verify.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitWarning = 3;

std::vector<std::int64_t> parse_list(const std::string& csv) {
  std::vector<std::int64_t> values;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) values.push_back(std::stoll(item));
  }
  return values;
}

struct OutputSink {
  std::string out_path;
  std::string manifest_path;
  std::string command;
  std::ostringstream buffer;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  int flush(int exit_code) {
    const std::string bytes = buffer.str();
    if (out_path.empty()) {
      std::cout << bytes;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) {
        std::cerr << "cannot open output file: " << out_path << "\n";
        return kExitUsage;
      }
      f << bytes;
    }
    if (!manifest_path.empty()) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start);
      nlohmann::ordered_json manifest = {
          {"version", kVersion},
          {"command", command},
          {"wall_ms", elapsed.count()},
          {"digest", fareylab::fnv1a_digest(bytes)}};
      std::ofstream f(manifest_path, std::ios::binary);
      f << manifest.dump(2) << "\n";
    }
    return exit_code;
  }
};

}  // namespace

int main(int argc, char** argv) {
  using namespace fareylab;

  CLI::App app{"Farey fractions in arithmetic progressions: sequences, gap "
               "statistics, triangle-map geometry, and asymptotic constants"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  int workers = default_workers();
  std::string out_path, manifest_path, format = "csv";

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--workers", workers, "Worker thread count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--out", out_path, "Output path (default stdout)");
    cmd->add_option("--manifest", manifest_path, "Write a run manifest JSON");
  };

  // farey
  std::int64_t Q = 0, d = 1, k = 1;
  bool count_only = false;
  CLI::App* cmd_farey = app.add_subcommand("farey", "Stream F_Q or F_{Q,d}");
  cmd_farey->add_option("--Q", Q, "Farey order")->required()->check(CLI::PositiveNumber);
  cmd_farey->add_option("--d", d, "Denominator progression modulus")
      ->check(CLI::PositiveNumber);
  cmd_farey->add_flag("--count-only", count_only, "Print only the element count");
  add_common(cmd_farey);

  // gaps
  CLI::App* cmd_gaps = app.add_subcommand("gaps", "Gap-numerator histogram of F_{Q,d}");
  cmd_gaps->add_option("--Q", Q, "Farey order")->required()->check(CLI::PositiveNumber);
  cmd_gaps->add_option("--d", d, "Denominator progression modulus")
      ->check(CLI::PositiveNumber);
  cmd_gaps->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  add_common(cmd_gaps);

  // verify
  std::int64_t Q_max = 300, l_max = 6, k_max = 5;
  bool inject_fault = false;
  CLI::App* cmd_verify =
      app.add_subcommand("verify", "Identity, dynamics, and Lemma-1 sweeps");
  cmd_verify->add_option("--Q-max", Q_max, "Sweep orders 1..Q_max")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--l-max", l_max, "Largest ell for the identity sweep")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_option("--k-max", k_max, "Largest k for the Lemma-1 sweep")
      ->check(CLI::PositiveNumber);
  cmd_verify->add_flag("--inject-fault", inject_fault,
                       "Perturb one 2-index (failure-path self-test)");
  add_common(cmd_verify);

  // constant
  std::string convergence_list;
  std::int64_t K_max_opt = 0, L_opt = 0;
  CLI::App* cmd_constant = app.add_subcommand("constant", "Compute c(d, k)");
  cmd_constant->add_option("--d", d, "Progression modulus")->required()
      ->check(CLI::PositiveNumber);
  cmd_constant->add_option("--k", k, "Gap numerator")->required()
      ->check(CLI::PositiveNumber);
  cmd_constant->add_option("--K-max", K_max_opt, "Tuple entry bound override")
      ->check(CLI::PositiveNumber);
  cmd_constant->add_option("--L", L_opt, "Window length bound override")
      ->check(CLI::PositiveNumber);
  cmd_constant->add_option("--convergence", convergence_list,
                           "Comma-separated Q list for an empirical table");
  add_common(cmd_constant);

  // regions
  std::int64_t l_filter = 0;
  CLI::App* cmd_regions =
      app.add_subcommand("regions", "Dump tuple pullback regions for (d, k)");
  cmd_regions->add_option("--d", d, "Progression modulus")->required()
      ->check(CLI::PositiveNumber);
  cmd_regions->add_option("--k", k, "Gap numerator")->required()
      ->check(CLI::PositiveNumber);
  cmd_regions->add_option("--l", l_filter, "Only tuples with this ell")
      ->check(CLI::PositiveNumber);
  cmd_regions->add_option("--K-max", K_max_opt, "Tuple entry bound override")
      ->check(CLI::PositiveNumber);
  add_common(cmd_regions);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  OutputSink sink;
  sink.out_path = out_path;
  sink.manifest_path = manifest_path;
  {
    std::ostringstream cmdline;
    for (int i = 0; i < argc; ++i) cmdline << (i ? " " : "") << argv[i];
    sink.command = cmdline.str();
  }

  try {
    if (*cmd_farey) {
      if (count_only) {
        sink.buffer << restricted_size(Q, d) << "\n";
      } else {
        for_each_restricted(Q, d, [&](const Fraction& f) {
          sink.buffer << f.num << "/" << f.den << "\n";
        });
      }
      return sink.flush(kExitOk);
    }

    if (*cmd_gaps) {
      const GapHistogram h = gap_numerator_counts(Q, d);
      if (format == "json")
        sink.buffer << histogram_json(h).dump(2) << "\n";
      else
        sink.buffer << histogram_csv(h);
      return sink.flush(kExitOk);
    }

    if (*cmd_verify) {
      std::vector<SweepResult> results;
      results.push_back(identity_sweep(Q_max, l_max, workers,
                                       inject_fault ? Q_max : 0));
      results.push_back(dynamics_sweep(Q_max, workers));
      results.push_back(lemma1_sweep(Q_max, k_max, workers));
      results.push_back(mediant_sweep(Q_max, workers));
      bool ok = true;
      sink.buffer << "sweep,checks,violations\n";
      for (const auto& r : results) {
        sink.buffer << r.name << "," << r.checks << "," << r.violations.size()
                    << "\n";
        ok = ok && r.ok();
      }
      if (!ok) {
        for (const auto& r : results) {
          if (!r.ok()) {
            sink.buffer << "first violation: " << r.violations.front() << "\n";
            break;
          }
        }
        return sink.flush(kExitVerificationFailure);
      }
      return sink.flush(kExitOk);
    }

    if (*cmd_constant) {
      ConstantOptions options;
      if (K_max_opt > 0) options.K_max = K_max_opt;
      if (L_opt > 0) options.L = L_opt;
      const ConstantReport report = compute_constant(d, k, options);
      nlohmann::ordered_json j = constant_report_json(report);
      if (!convergence_list.empty()) {
        const auto rows = convergence_report(d, k, parse_list(convergence_list),
                                             workers);
        j["convergence"] = convergence_json(rows);
      }
      sink.buffer << j.dump(2) << "\n";
      return sink.flush(report.k_max_warning ? kExitWarning : kExitOk);
    }

    if (*cmd_regions) {
      ConstantOptions options;
      if (K_max_opt > 0) options.K_max = K_max_opt;
      const ConstantReport report = compute_constant(d, k, options);
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& rec : report.breakdown) {
        if (l_filter > 0 && rec.ell != l_filter) continue;
        arr.push_back(tuple_record_json(rec));
      }
      sink.buffer << nlohmann::ordered_json(
                         {{"d", d}, {"k", k}, {"tuples", arr}})
                         .dump(2)
                  << "\n";
      return sink.flush(report.k_max_warning ? kExitWarning : kExitOk);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
