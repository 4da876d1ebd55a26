#ifndef ENERGYCH_VERIFIER_HPP
#define ENERGYCH_VERIFIER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "energych/choosability.hpp"
#include "energych/families.hpp"
#include "energych/graph.hpp"
#include "energych/ng_types.hpp"
#include "energych/spectral.hpp"

namespace energych {

// main: E < 2 ch classification; chi: E < 2 chi classification;
// ng: choice-number Nordhaus-Gaddum bound and its equality types;
// lemmas: the supporting spectral/colouring inequalities; all: everything.
enum class TheoremMode { Main, Chi, Ng, Lemmas, All };
enum class OutputFormat { Csv, Json };
enum class Verdict { StrictException, NonException, Borderline };

std::string to_string(TheoremMode mode);
std::string to_string(Verdict verdict);
std::optional<TheoremMode> parse_theorem_mode(std::string_view text);

struct RunConfig {
  int max_order = 7;
  TheoremMode theorem = TheoremMode::Main;
  double tolerance = kDefaultTolerance;
  int jobs = 1;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> corpus_path;
  std::uint64_t node_cap = kDefaultNodeCap;
  TypeConventions conventions;

  // Throws std::invalid_argument unless 1 <= max_order <= 8,
  // 0 < tolerance <= 1e-3 and jobs >= 1.
  void validate() const;
};

// Each flag is present only when the selected mode checks it.
struct LemmaFlags {
  std::optional<bool> energy_chi_bar;   // E >= 2(n - chi(Gbar))
  std::optional<bool> chi_bar_ch_bar;   // n - chi(Gbar) >= n - ch(Gbar)
  std::optional<bool> ch_bar_ch;        // n - ch(Gbar) >= ch(G) - 1
  std::optional<bool> top_eigen_sum;    // n - chi(Gbar) <= lambda_1 + ... + lambda_chi(Gbar)
  std::optional<bool> wilf;             // ch <= lambda_1 + 1
  std::optional<bool> induced_2k2;      // induced 2K2 implies E >= 2 ch
  std::optional<bool> ng_chi;           // chi + chi(Gbar) <= n + 1
  std::optional<bool> ng_ch;            // ch + ch(Gbar) <= n + 1
  std::optional<bool> ng_equality;      // equality <=> an F1, F1bar or F2 witness
  std::optional<bool> chi_theorem;      // chromatic classification holds (mode all)
  std::optional<bool> degeneracy;       // chi <= ch <= degeneracy + 1

  std::vector<std::pair<std::string, bool>> entries() const;
  bool all_pass() const;
};

// Slack allowed on every floating inequality.
inline constexpr double kLemmaSlack = 1e-8;

struct VerificationRecord {
  std::string g6;
  std::string canonical;
  int n = 0;
  int m = 0;
  double energy = 0.0;
  int chi = 0;
  int ch = 0;
  int chi_bar = 0;
  std::optional<int> ch_bar;
  double margin = 0.0;  // energy - 2 * (ch, or chi in chi mode)
  Verdict verdict = Verdict::NonException;
  std::optional<ExceptionWitness> family;
  std::optional<ExceptionWitness> chi_family;  // mode all only
  int isolated_count = 0;
  LemmaFlags flags;
  std::optional<int> exact_sign;  // borderline rows: sign of the margin, decided exactly
  std::optional<TypeWitness> type_witness;
  std::vector<double> spectrum;
  // Forensics, filled for borderline or mismatched rows.
  std::vector<std::int64_t> char_poly;
  std::optional<ListAssignment> counterexample;  // ch - 1 lists with no colouring
  bool unresolved = false;
  bool mismatch = false;
  std::string note;
};

struct Summary {
  std::string theorem;
  double tolerance = kDefaultTolerance;
  std::map<int, int> graphs_per_order;
  std::map<std::string, int> family_census;
  std::map<std::string, int> chi_family_census;
  std::map<std::string, int> type_census;
  std::map<std::string, int> flag_failures;
  std::vector<std::string> borderline;
  std::vector<std::string> mismatches;
  std::vector<std::string> unresolved;
  int strict_exceptions = 0;

  // 1 on any mismatch or failed flag, else 2 on unresolved graphs, else 0.
  int exit_code() const;
};

struct Report {
  RunConfig config;
  std::vector<VerificationRecord> records;
  Summary summary;
};

// Per-graph evaluation under one mode, sharing a choice-number memo.
class Evaluator {
 public:
  Evaluator(TheoremMode mode, double tolerance, std::uint64_t node_cap,
            TypeConventions conventions = {});

  VerificationRecord evaluate(const Graph& g);
  ChoiceNumberCache& cache() { return cache_; }

 private:
  TheoremMode mode_;
  double tolerance_;
  TypeConventions conventions_;
  ChoiceNumberCache cache_;
};

// Evaluates the enumerated (or ingested) corpus on cfg.jobs OpenMP workers;
// records come back ordered by (n, canonical label) whatever the worker count.
Report run_verification(const RunConfig& cfg);
Report run_verification(const RunConfig& cfg, const std::vector<Graph>& corpus);

Report verify_choice_classification(RunConfig cfg);
Report verify_chromatic_classification(RunConfig cfg);

LemmaFlags verify_lemma_chain(const Graph& g, ChoiceNumberCache& cache);
bool verify_wilf(const Graph& g, ChoiceNumberCache& cache);
bool verify_2k2(const Graph& g, ChoiceNumberCache& cache);

// Accepts a family string ("K2,5", "A7,4", ...) or a graph6 string.
// Throws ParseError when neither parses.
Graph parse_graph_argument(std::string_view text);
VerificationRecord compute_invariants(std::string_view text, TheoremMode mode = TheoremMode::Main,
                                      double tolerance = kDefaultTolerance);

}  // namespace energych

#endif  // ENERGYCH_VERIFIER_HPP
