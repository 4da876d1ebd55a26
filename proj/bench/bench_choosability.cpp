// Times the reference list-colouring search against the class-multiset
// kernel, serial and threaded, then a whole verification run at 1 and N jobs.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "energych/choosability.hpp"
#include "energych/enumerate.hpp"
#include "energych/families.hpp"
#include "energych/verifier.hpp"

using namespace energych;

namespace {

double seconds(const std::function<void()>& body, int repeat) {
  const auto start = std::chrono::steady_clock::now();
  for (int r = 0; r < repeat; ++r) body();
  const std::chrono::duration<double> d = std::chrono::steady_clock::now() - start;
  return d.count() / repeat;
}

struct Case {
  std::string name;
  int k;
  bool reference;  // reference search is too slow past these sizes
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"choosability and verifier timings"};
  int threads = 4, repeat = 3, order = 6, sweep = 5;
  app.add_option("--threads", threads, "workers for the parallel runs")->check(CLI::PositiveNumber);
  app.add_option("--repeat", repeat, "repetitions per timing")->check(CLI::PositiveNumber);
  app.add_option("--max-order", order, "verification corpus order")->check(CLI::Range(1, 8));
  app.add_option("--sweep-order", sweep, "order of the all-graphs k = 3 sweep")
      ->check(CLI::Range(1, 6));
  CLI11_PARSE(app, argc, argv);
  std::setvbuf(stdout, nullptr, _IOLBF, 0);

  const std::vector<Case> cases = {
      {"K2,3", 2, true}, {"K2,4", 2, true}, {"C5", 2, true},  {"K3,3", 2, true},
      {"K5", 4, true},   {"K3,3", 3, false}, {"K4,4", 3, false}, {"K3,5", 3, false},
      {"C7", 2, true},
  };

  ChoosabilityOptions serial, parallel;
  parallel.threads = threads;
  std::printf("%-8s %2s %12s %12s %12s %s\n", "graph", "k", "reference", "serial", "parallel",
              "answer");
  for (const Case& c : cases) {
    const Graph g = generate(*parse_family(c.name));
    bool answer = true;
    std::string ref = "-";
    if (c.reference) {
      bool r = true;
      const double t = seconds([&] { r = reference::is_k_choosable(g, c.k).choosable; }, repeat);
      ref = std::to_string(t);
      answer = r;
    }
    bool s = true, p = true;
    const double ts = seconds([&] { s = is_k_choosable(g, c.k, serial).choosable; }, repeat);
    const double tp = seconds([&] { p = is_k_choosable(g, c.k, parallel).choosable; }, repeat);
    const bool agree = s == p && (!c.reference || s == answer);
    std::printf("%-8s %2d %12s %12.6f %12.6f %s%s\n", c.name.c_str(), c.k, ref.c_str(), ts, tp,
                s ? "choosable" : "not choosable", agree ? "" : " DISAGREE");
    if (!agree) return 1;
  }

  // every graph of one order at k = 3
  const auto corpus = enumerate_graphs(sweep);
  int ref_yes = 0, fast_yes = 0, par_yes = 0;
  const double tr = seconds([&] {
    ref_yes = 0;
    for (const Graph& g : corpus) ref_yes += reference::is_k_choosable(g, 3).choosable;
  }, 1);
  const double ts = seconds([&] {
    fast_yes = 0;
    for (const Graph& g : corpus) fast_yes += is_k_choosable(g, 3, serial).choosable;
  }, repeat);
  const double tp = seconds([&] {
    par_yes = 0;
    for (const Graph& g : corpus) par_yes += is_k_choosable(g, 3, parallel).choosable;
  }, repeat);
  std::printf("sweep n=%d k=3 (%zu graphs, %d choosable): reference %.3fs serial %.3fs parallel %.3fs\n",
              sweep, corpus.size(), fast_yes, tr, ts, tp);
  if (ref_yes != fast_yes || par_yes != fast_yes) return 1;

  for (int jobs : {1, threads}) {
    RunConfig cfg;
    cfg.max_order = order;
    cfg.theorem = TheoremMode::All;
    cfg.jobs = jobs;
    std::size_t graphs = 0;
    const double t = seconds([&] { graphs = run_verification(cfg).records.size(); }, 1);
    std::printf("verify all n<=%d jobs=%d: %zu graphs in %.3fs\n", order, jobs, graphs, t);
  }
  return 0;
}
