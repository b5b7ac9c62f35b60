// Acceptance harness: every release-blocking guarantee as one pass/fail
// line. Exit code is the number of failed lines.

#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "dikroma/bounds.hpp"
#include "dikroma/coloring.hpp"
#include "dikroma/digraph.hpp"
#include "dikroma/enumeration.hpp"
#include "dikroma/formats.hpp"
#include "dikroma/greedy.hpp"
#include "dikroma/solvers.hpp"
#include "dikroma/sweep.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dikroma;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& note) {
    std::string line = std::string(ok ? "PASS" : "FAIL") + " - " + name;
    if (!note.empty()) line += " [" + note + "]";
    std::puts(line.c_str());
    if (!ok) ++failures;
}

template <class F>
void criterion(const std::string& name, F&& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body(note);
    } catch (const std::exception& e) {
        ok = false;
        note = std::string("exception: ") + e.what();
    }
    report(name, ok, note);
}

bool sweep_clean(const SweepReport& rep, std::string& note) {
    if (!rep.violations.empty()) {
        const Violation& v = rep.violations.front();
        note = "violation at index " + std::to_string(v.index) + " (" + v.digraph6 + "): " +
               check_name(v.check) + ": " + v.detail;
        return false;
    }
    for (const CheckStats& s : rep.checks) {
        if (s.evaluated == 0) {
            note = std::string(check_name(s.check)) + " was never evaluated";
            return false;
        }
        if (s.passed != s.evaluated) {
            note = std::string(check_name(s.check)) + " passed " + std::to_string(s.passed) +
                   " of " + std::to_string(s.evaluated) + " without violations recorded";
            return false;
        }
    }
    for (const ExtremalRecord& e : rep.extremal) {
        if (e.max_sum > e.bound) {
            note = std::string("extremal ") + check_name(e.check) + " sum " +
                   std::to_string(e.max_sum) + " exceeds bound " + std::to_string(e.bound);
            return false;
        }
    }
    return true;
}

std::vector<CheckId> all_checks() {
    return {kAllChecks.begin(), kAllChecks.end()};
}

} // namespace

int main() {
    criterion("[1] exhaustive n<=4: chain, degree bound, sum bounds, both interpolation "
              "witness maps, greedy/parsimonious duality",
              [](std::string& note) {
                  std::uint64_t seen = 0;
                  for (int n = 1; n <= 4; ++n) {
                      SweepReport rep = run_sweep(FamilySpec::exhaustive(n), all_checks());
                      if (!sweep_clean(rep, note)) {
                          note = "n=" + std::to_string(n) + ": " + note;
                          return false;
                      }
                      seen += rep.digraphs;
                      DigraphEnumerator en(n);
                      for (std::uint64_t i = 0; i < en.size(); ++i) {
                          Digraph d = en.at(i);
                          if (digrundy_number(d).value != digrundy_by_orderings(d)) {
                              note = "greedy-maximum mismatch at n=" + std::to_string(n) +
                                     " index " + std::to_string(i);
                              return false;
                          }
                      }
                  }
                  note = std::to_string(seen) + " digraphs, all checks clean";
                  return seen == 1 + 4 + 64 + 4096;
              });

    criterion("[2] exhaustive n=5: chain and all three sum bounds on every digraph, "
              "parsimonious dual on a 1000-digraph seeded subsample",
              [](std::string& note) {
                  if (check_bound(CheckId::ng_dg, 5) != 7) {
                      note = "order-5 greedy sum bound is not 7";
                      return false;
                  }
                  SweepOptions opts;
                  opts.heavy_check_samples = 1000;
                  SweepReport rep = run_sweep(
                      FamilySpec::exhaustive(5),
                      {CheckId::chain, CheckId::ng_dc, CheckId::ng_dac, CheckId::ng_dg,
                       CheckId::dg_equals_dco},
                      opts);
                  if (!sweep_clean(rep, note)) return false;
                  if (rep.digraphs != 1048576) {
                      note = "expected 1048576 digraphs, saw " + std::to_string(rep.digraphs);
                      return false;
                  }
                  for (const CheckStats& s : rep.checks) {
                      if (s.check == CheckId::chain && s.evaluated != 1048576) {
                          note = "chain evaluated " + std::to_string(s.evaluated) + " times";
                          return false;
                      }
                      if (s.check == CheckId::dg_equals_dco && s.evaluated != 1000) {
                          note = "dual subsample evaluated " + std::to_string(s.evaluated) +
                                 " times";
                          return false;
                      }
                  }
                  note = "1048576 digraphs clean, dual equality on 1000 sampled";
                  return true;
              });

    criterion("[3] sampled n=6..10: 10000 seeded digraphs per order across five densities, "
              "all three sum bounds clean",
              [](std::string& note) {
                  for (int n = 6; n <= 10; ++n) {
                      FamilySpec fam =
                          FamilySpec::sampled(n, {0.1, 0.3, 0.5, 0.7, 0.9}, 2000, 2026);
                      SweepReport rep = run_sweep(
                          fam, {CheckId::ng_dc, CheckId::ng_dac, CheckId::ng_dg});
                      if (!sweep_clean(rep, note)) {
                          note = "n=" + std::to_string(n) + ": " + note;
                          return false;
                      }
                      if (rep.digraphs != 10000) {
                          note = "n=" + std::to_string(n) + " sampled " +
                                 std::to_string(rep.digraphs) + " digraphs";
                          return false;
                      }
                  }
                  note = "50000 digraphs across orders 6..10";
                  return true;
              });

    criterion("[4] tightness: complete digon digraphs attain the dichromatic sum bound for "
              "n<=5, an order-3 digraph attains the diachromatic sum bound",
              [](std::string& note) {
                  for (int n = 1; n <= 5; ++n) {
                      Digraph kn = fixtures::complete_digon(n);
                      int sum = dichromatic_number(kn).value +
                                dichromatic_number(kn.complement()).value;
                      if (sum != n + 1) {
                          note = "complete digon sum at n=" + std::to_string(n) + " is " +
                                 std::to_string(sum);
                          return false;
                      }
                      auto witnesses = find_extremal(n, CheckId::ng_dc, {});
                      if (witnesses.empty() || witnesses.front().sum != n + 1) {
                          note = "extremal scan at n=" + std::to_string(n) +
                                 " missed the bound";
                          return false;
                      }
                      for (const auto& w : witnesses)
                          if (w.sum > ng_bound_dc(n)) {
                              note = "extremal scan exceeded the bound";
                              return false;
                          }
                  }
                  auto dac3 = find_extremal(3, CheckId::ng_dac, {});
                  if (dac3.empty() || dac3.front().sum != 4) {
                      note = "no order-3 digraph attained diachromatic sum 4";
                      return false;
                  }
                  note = "sum n+1 attained for n=1..5, diachromatic sum 4 attained at n=3";
                  return true;
              });

    criterion("[5] golden parameter values on the four reference digraphs",
              [](std::string& note) {
                  struct Row {
                      const char* name;
                      Digraph d;
                      int dc, dg, dac;
                  };
                  const Row rows[] = {
                      {"directed triangle", fixtures::directed_triangle(), 2, 2, 2},
                      {"directed path", fixtures::directed_path3(), 1, 1, 2},
                      {"complete digon triple", fixtures::complete_digon3(), 3, 3, 3},
                      {"symmetric path", fixtures::symmetric_path4(), 2, 3, 3},
                  };
                  for (const Row& r : rows) {
                      if (dichromatic_number(r.d).value != r.dc ||
                          digrundy_number(r.d).value != r.dg ||
                          diachromatic_number(r.d).value != r.dac) {
                          note = std::string("solver mismatch on ") + r.name;
                          return false;
                      }
                      if (oracles::dc(r.d) != r.dc || digrundy_by_orderings(r.d) != r.dg ||
                          oracles::dac(r.d, PairMode::ordered) != r.dac) {
                          note = std::string("oracle mismatch on ") + r.name;
                          return false;
                      }
                  }
                  note = "solver and oracle agree on all four";
                  return true;
              });

    criterion("[6] symmetric digraphs reduce to undirected coloring: chromatic and Grundy "
              "numbers match on every undirected graph with n<=5",
              [](std::string& note) {
                  std::uint64_t graphs = 0;
                  for (int n = 1; n <= 5; ++n) {
                      for (const auto& g : oracles::all_undirected_graphs(n)) {
                          Digraph d = oracles::digon_embed(g);
                          if (dichromatic_number(d).value != oracles::chromatic(g)) {
                              note = "chromatic mismatch at n=" + std::to_string(n);
                              return false;
                          }
                          if (digrundy_number(d).value != oracles::grundy(g)) {
                              note = "Grundy mismatch at n=" + std::to_string(n);
                              return false;
                          }
                          ++graphs;
                      }
                  }
                  note = std::to_string(graphs) + " undirected graphs embedded and matched";
                  return true;
              });

    criterion("[7] forced-reuse branching: the 4-vertex digon chain needs a non-greedy "
              "choice to stay at two colors",
              [](std::string& note) {
                  Digraph d = fixtures::branching_example();
                  VertexOrdering phi{0, 1, 2, 3};
                  ParsimoniousRun run = parsimonious_min_colors(d, phi);
                  Coloring greedy = greedy_color(d, phi); // always-smallest policy
                  int oracle_min = oracles::parsimonious_min(d, phi);
                  if (run.colors_used != 2 || oracle_min != 2) {
                      note = "optimal run uses " + std::to_string(run.colors_used) +
                             ", oracle says " + std::to_string(oracle_min);
                      return false;
                  }
                  if (greedy.k != 3) {
                      note = "always-smallest policy used " + std::to_string(greedy.k);
                      return false;
                  }
                  Coloring replayed = replay_run(d, run);
                  if (replayed.k != 2 || !is_acyclic_coloring(d, replayed)) {
                      note = "witness replay failed";
                      return false;
                  }
                  note = "optimal 2 vs greedy 3, witness replays";
                  return true;
              });

    criterion("[8] format fidelity: digraph6 and edge list round-trip bit-exactly on every "
              "digraph with n<=4",
              [](std::string& note) {
                  std::uint64_t count = 0;
                  for (int n = 1; n <= 4; ++n) {
                      DigraphEnumerator en(n);
                      for (std::uint64_t i = 0; i < en.size(); ++i) {
                          Digraph d = en.at(i);
                          std::string s6 = serialize_digraph6(d);
                          if (!(parse_digraph6(s6) == d) ||
                              serialize_digraph6(parse_digraph6(s6)) != s6) {
                              note = "digraph6 mismatch at n=" + std::to_string(n) +
                                     " index " + std::to_string(i);
                              return false;
                          }
                          std::string el = serialize_edge_list(d);
                          if (!(parse_edge_list(el) == d) ||
                              serialize_edge_list(parse_edge_list(el)) != el) {
                              note = "edge list mismatch at n=" + std::to_string(n) +
                                     " index " + std::to_string(i);
                              return false;
                          }
                          ++count;
                      }
                  }
                  note = std::to_string(count) + " digraphs round-tripped in both formats";
                  return true;
              });

    return failures == 0 ? 0 : 1;
}
