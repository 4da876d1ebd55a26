#include "energych/verifier.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "energych/canon.hpp"
#include "energych/charpoly.hpp"
#include "energych/coloring.hpp"
#include "energych/enumerate.hpp"
#include "energych/errors.hpp"
#include "energych/graph6.hpp"

namespace energych {

std::string to_string(TheoremMode mode) {
  switch (mode) {
    case TheoremMode::Main: return "main";
    case TheoremMode::Chi: return "chi";
    case TheoremMode::Ng: return "ng";
    case TheoremMode::Lemmas: return "lemmas";
    case TheoremMode::All: return "all";
  }
  return "?";
}

std::string to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::StrictException: return "strict_exception";
    case Verdict::NonException: return "non_exception";
    case Verdict::Borderline: return "borderline";
  }
  return "?";
}

std::optional<TheoremMode> parse_theorem_mode(std::string_view text) {
  for (auto m : {TheoremMode::Main, TheoremMode::Chi, TheoremMode::Ng, TheoremMode::Lemmas,
                 TheoremMode::All})
    if (text == to_string(m)) return m;
  return std::nullopt;
}

void RunConfig::validate() const {
  if (max_order < 1 || max_order > 8)
    throw std::invalid_argument("max order must be in [1, 8], got " + std::to_string(max_order));
  if (!(tolerance > 0.0) || tolerance > 1e-3)
    throw std::invalid_argument("tolerance must be in (0, 1e-3]");
  if (jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (node_cap == 0) throw std::invalid_argument("node cap must be positive");
}

std::vector<std::pair<std::string, bool>> LemmaFlags::entries() const {
  std::vector<std::pair<std::string, bool>> out;
  auto add = [&](const char* name, const std::optional<bool>& f) {
    if (f) out.emplace_back(name, *f);
  };
  add("energy_chi_bar", energy_chi_bar);
  add("chi_bar_ch_bar", chi_bar_ch_bar);
  add("ch_bar_ch", ch_bar_ch);
  add("top_eigen_sum", top_eigen_sum);
  add("wilf", wilf);
  add("induced_2k2", induced_2k2);
  add("ng_chi", ng_chi);
  add("ng_ch", ng_ch);
  add("ng_equality", ng_equality);
  add("chi_theorem", chi_theorem);
  add("degeneracy", degeneracy);
  return out;
}

bool LemmaFlags::all_pass() const {
  for (const auto& [name, ok] : entries())
    if (!ok) return false;
  return true;
}

int Summary::exit_code() const {
  if (!mismatches.empty() || !flag_failures.empty()) return 1;
  if (!unresolved.empty()) return 2;
  return 0;
}

namespace {

const Graph& two_k2() {
  static const Graph g = generate({FamilyKind::TwoK2, 0, 0});
  return g;
}

double top_sum(const Spectrum& s, int count) {
  double sum = 0.0;
  for (int i = 0; i < count && i < s.order(); ++i) sum += s.values[i];
  return sum;
}

double spectral_radius(const Spectrum& s) { return s.order() ? s.values.front() : 0.0; }

void set_chain(LemmaFlags& f, int n, double e, const Spectrum& s, int chi_bar, int ch_bar,
               int ch) {
  f.energy_chi_bar = e >= 2.0 * (n - chi_bar) - kLemmaSlack;
  f.chi_bar_ch_bar = n - chi_bar >= n - ch_bar;
  f.ch_bar_ch = n - ch_bar >= ch - 1;
  f.top_eigen_sum = n - chi_bar <= top_sum(s, chi_bar) + kLemmaSlack;
}

bool wilf_holds(int ch, const Spectrum& s) { return ch <= spectral_radius(s) + 1.0 + kLemmaSlack; }

bool two_k2_holds(const Graph& g, double e, int ch) {
  return !has_induced(g, two_k2()) || e >= 2.0 * ch - kLemmaSlack;
}

struct Classification {
  double margin = 0.0;
  Verdict verdict = Verdict::NonException;
  std::optional<int> exact_sign;
  bool unresolved = false;
  bool mismatch = false;
};

Classification classify(const Graph& g, const Spectrum& s, double e, int bound,
                        bool family_present, double tolerance) {
  Classification c;
  c.margin = e - 2.0 * bound;
  if (std::abs(c.margin) <= tolerance) {
    c.verdict = Verdict::Borderline;
    c.exact_sign = compare_energy_exact(g, s, 2 * static_cast<std::int64_t>(bound));
    if (!c.exact_sign) {
      c.unresolved = true;
      return c;
    }
  } else {
    c.verdict = c.margin < 0 ? Verdict::StrictException : Verdict::NonException;
  }
  const bool expected = c.verdict == Verdict::StrictException ||
                        (c.verdict == Verdict::Borderline && *c.exact_sign < 0);
  c.mismatch = expected != family_present;
  return c;
}

}  // namespace

Evaluator::Evaluator(TheoremMode mode, double tolerance, std::uint64_t node_cap,
                     TypeConventions conventions)
    : mode_(mode),
      tolerance_(tolerance),
      conventions_(conventions),
      cache_(ChoosabilityOptions{node_cap, 1}) {}

VerificationRecord Evaluator::evaluate(const Graph& g) {
  VerificationRecord r;
  r.g6 = g6_encode(g);
  r.canonical = canonical_label(g).bytes;
  r.n = g.order();
  r.m = g.edge_count();
  r.isolated_count = strip_isolated(g).isolated_count;

  try {
    const Spectrum s = eigenvalues(g);
    r.spectrum = s.values;
    r.energy = energy_of(s);
    r.chi = chromatic_number(g);
    const Graph gbar = complement(g);
    r.chi_bar = chromatic_number(gbar);
    r.ch = cache_.choice_number(g);

    const bool need_ch_bar =
        mode_ == TheoremMode::Ng || mode_ == TheoremMode::Lemmas || mode_ == TheoremMode::All;
    if (need_ch_bar) r.ch_bar = cache_.choice_number(gbar);

    const bool chi_mode = mode_ == TheoremMode::Chi;
    r.family = chi_mode ? classify_chi_exception(g) : classify_ch_exception(g);
    if (r.family) r.isolated_count = r.family->isolated_count;
    const Classification c =
        classify(g, s, r.energy, chi_mode ? r.chi : r.ch, r.family.has_value(), tolerance_);
    r.margin = c.margin;
    r.verdict = c.verdict;
    r.exact_sign = c.exact_sign;
    if (c.unresolved) {
      r.unresolved = true;
      r.note = "borderline margin has no exact integer/quadratic resolution";
    }
    r.mismatch = c.mismatch;
    if ((r.mismatch || r.verdict == Verdict::Borderline) && r.n <= kCharPolyMaxOrder)
      r.char_poly = char_poly_exact(g);
    if (r.mismatch && r.ch >= 2)
      r.counterexample = is_k_choosable(g, r.ch - 1, {kDefaultNodeCap, 1}).counterexample;

    LemmaFlags& f = r.flags;
    f.ng_chi = r.chi + r.chi_bar <= r.n + 1;
    if (!chi_mode) {
      f.wilf = wilf_holds(r.ch, s);
      f.induced_2k2 = two_k2_holds(g, r.energy, r.ch);
      f.degeneracy = r.chi <= r.ch && r.ch <= degeneracy(g) + 1;
    }
    if (r.ch_bar) {
      if (mode_ != TheoremMode::Ng) set_chain(f, r.n, r.energy, s, r.chi_bar, *r.ch_bar, r.ch);
      if (mode_ != TheoremMode::Lemmas) {
        f.ng_ch = r.ch + *r.ch_bar <= r.n + 1;
        const auto eq = check_equality_characterization(g, cache_, conventions_);
        f.ng_equality = eq.consistent();
        r.type_witness = eq.witness;
      }
    }
    if (mode_ == TheoremMode::All) {
      r.chi_family = classify_chi_exception(g);
      const Classification cc =
          classify(g, s, r.energy, r.chi, r.chi_family.has_value(), tolerance_);
      if (cc.unresolved) {
        r.unresolved = true;
        r.note = "chromatic borderline margin has no exact resolution";
      } else {
        f.chi_theorem = !cc.mismatch;
      }
    }
  } catch (const SearchBudgetExceeded& e) {
    r.unresolved = true;
    r.note = e.what();
  } catch (const ConvergenceError& e) {
    r.unresolved = true;
    r.note = e.what();
  }
  return r;
}

namespace {

std::string census_key(const ExceptionWitness& w) {
  std::string key = w.to_string();
  if (w.isolated_count) key += "+" + std::to_string(w.isolated_count) + "K1";
  return key;
}

Summary summarize(const RunConfig& cfg, const std::vector<VerificationRecord>& records) {
  Summary s;
  s.theorem = to_string(cfg.theorem);
  s.tolerance = cfg.tolerance;
  for (const auto& r : records) {
    ++s.graphs_per_order[r.n];
    if (r.family) ++s.family_census[census_key(*r.family)];
    if (r.chi_family) ++s.chi_family_census[census_key(*r.chi_family)];
    if (r.type_witness) ++s.type_census[to_string(r.type_witness->kind)];
    if (r.verdict == Verdict::StrictException) ++s.strict_exceptions;
    if (r.verdict == Verdict::Borderline) {
      std::string line = r.g6 + " margin_sign=";
      line += r.exact_sign ? std::to_string(*r.exact_sign) : "unknown";
      s.borderline.push_back(line);
    }
    if (r.mismatch) s.mismatches.push_back(r.g6);
    if (r.unresolved) s.unresolved.push_back(r.g6 + ": " + r.note);
    for (const auto& [name, ok] : r.flags.entries())
      if (!ok) ++s.flag_failures[name];
  }
  return s;
}

std::vector<Graph> load_corpus(const RunConfig& cfg) {
  if (!cfg.corpus_path) return enumerate_up_to(cfg.max_order);
  std::ifstream in(*cfg.corpus_path);
  if (!in) throw std::runtime_error("cannot open corpus " + *cfg.corpus_path);
  return read_g6_corpus(in);
}

}  // namespace

Report run_verification(const RunConfig& cfg, const std::vector<Graph>& corpus) {
  cfg.validate();
  Report report;
  report.config = cfg;
  report.records.resize(corpus.size());
  Evaluator evaluator(cfg.theorem, cfg.tolerance, cfg.node_cap, cfg.conventions);

  const long count = static_cast<long>(corpus.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(cfg.jobs)
  for (long i = 0; i < count; ++i) report.records[i] = evaluator.evaluate(corpus[i]);

  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    return std::tie(a.n, a.canonical, a.g6) < std::tie(b.n, b.canonical, b.g6);
  });
  report.summary = summarize(cfg, report.records);
  return report;
}

Report run_verification(const RunConfig& cfg) {
  cfg.validate();
  return run_verification(cfg, load_corpus(cfg));
}

Report verify_choice_classification(RunConfig cfg) {
  cfg.theorem = TheoremMode::Main;
  return run_verification(cfg);
}

Report verify_chromatic_classification(RunConfig cfg) {
  cfg.theorem = TheoremMode::Chi;
  return run_verification(cfg);
}

LemmaFlags verify_lemma_chain(const Graph& g, ChoiceNumberCache& cache) {
  LemmaFlags f;
  const Spectrum s = eigenvalues(g);
  const Graph gbar = complement(g);
  set_chain(f, g.order(), energy_of(s), s, chromatic_number(gbar), cache.choice_number(gbar),
            cache.choice_number(g));
  return f;
}

bool verify_wilf(const Graph& g, ChoiceNumberCache& cache) {
  return wilf_holds(cache.choice_number(g), eigenvalues(g));
}

bool verify_2k2(const Graph& g, ChoiceNumberCache& cache) {
  if (!has_induced(g, two_k2())) return true;
  return two_k2_holds(g, energy(g).value, cache.choice_number(g));
}

Graph parse_graph_argument(std::string_view text) {
  if (auto spec = parse_family(text)) return generate(*spec);
  return g6_decode(text);
}

VerificationRecord compute_invariants(std::string_view text, TheoremMode mode, double tolerance) {
  const Graph g = parse_graph_argument(text);
  Evaluator evaluator(mode, tolerance, kDefaultNodeCap);
  return evaluator.evaluate(g);
}

}  // namespace energych
