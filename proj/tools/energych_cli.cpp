#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "energych/enumerate.hpp"
#include "energych/errors.hpp"
#include "energych/graph6.hpp"
#include "energych/report.hpp"
#include "energych/verifier.hpp"

namespace {

constexpr int kUsageError = 3;

const std::map<std::string, energych::TheoremMode> kModes{
    {"main", energych::TheoremMode::Main}, {"chi", energych::TheoremMode::Chi},
    {"ng", energych::TheoremMode::Ng},     {"lemmas", energych::TheoremMode::Lemmas},
    {"all", energych::TheoremMode::All},
};
const std::map<std::string, energych::OutputFormat> kFormats{
    {"csv", energych::OutputFormat::Csv}, {"json", energych::OutputFormat::Json}};

// "-" means stdout.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path == "-") {
    fn(std::cout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  fn(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph energy versus chromatic and choice numbers"};
  app.require_subcommand(1);

  energych::RunConfig cfg;
  std::string out_path = "-";
  std::string corpus;
  auto* verify = app.add_subcommand("verify", "exhaustive verification over small graphs");
  verify->add_option("--theorem", cfg.theorem, "main|chi|ng|lemmas|all")
      ->required()
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  verify->add_option("--max-order", cfg.max_order, "largest order enumerated")
      ->required()
      ->check(CLI::Range(1, 8));
  verify->add_option("--corpus", corpus, "graph6 file used instead of enumeration")
      ->check(CLI::ExistingFile);
  verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--tolerance", cfg.tolerance, "borderline band")->check(CLI::Range(0.0, 1e-3));
  verify->add_option("--node-cap", cfg.node_cap, "choosability search budget per graph");
  verify->add_option("--format", cfg.format, "csv|json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  verify->add_option("--out", out_path, "report path, - for stdout");
  bool no_empty_t = false, no_empty_f2 = false;
  verify->add_flag("--f1-nonempty-t", no_empty_t, "reject F1 witnesses with T empty");
  verify->add_flag("--f2-nonempty-parts", no_empty_f2, "reject F2 witnesses with K or S empty");

  std::string graph_arg;
  energych::TheoremMode compute_mode = energych::TheoremMode::Main;
  energych::OutputFormat compute_format = energych::OutputFormat::Csv;
  double compute_tolerance = energych::kDefaultTolerance;
  auto* compute = app.add_subcommand("compute", "invariants of one graph");
  compute->add_option("--graph", graph_arg, "graph6 string or family such as K2,4 or A7,4")
      ->required();
  compute->add_option("--theorem", compute_mode, "classification to report")
      ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case));
  compute->add_option("--format", compute_format, "csv|json")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
  compute->add_option("--tolerance", compute_tolerance, "borderline band")
      ->check(CLI::Range(0.0, 1e-3));

  int enum_order = 0;
  std::string enum_out = "-";
  auto* enumerate = app.add_subcommand("enumerate", "non-isomorphic graphs of one order as graph6");
  enumerate->add_option("--order", enum_order, "vertex count")->required()->check(CLI::Range(0, 8));
  enumerate->add_option("--out", enum_out, "output path, - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  try {
    if (*verify) {
      if (!corpus.empty()) cfg.corpus_path = corpus;
      cfg.conventions.allow_empty_t = !no_empty_t;
      cfg.conventions.allow_empty_f2_parts = !no_empty_f2;
      cfg.validate();
      const energych::Report report = energych::run_verification(cfg);
      with_output(out_path, [&](std::ostream& os) { energych::write_report(report, os); });
      std::cerr << energych::summary_text(report.summary) << '\n';
      return report.summary.exit_code();
    }
    if (*compute) {
      const auto r = energych::compute_invariants(graph_arg, compute_mode, compute_tolerance);
      if (compute_format == energych::OutputFormat::Json) {
        std::cout << energych::to_json(r).dump(2) << '\n';
      } else {
        std::cout << energych::kCsvHeader << '\n' << energych::csv_row(r) << '\n';
      }
      if (r.mismatch) return 1;
      return r.unresolved ? 2 : 0;
    }
    if (*enumerate) {
      const auto graphs = energych::enumerate_graphs(enum_order);
      with_output(enum_out, [&](std::ostream& os) { energych::write_g6_corpus(os, graphs); });
      return 0;
    }
  } catch (const energych::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return 0;
}
