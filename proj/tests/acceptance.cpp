// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Runtimes are reported so regressions against the stated limits
// are visible.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "lir/casetable.hpp"
#include "lir/decomposition.hpp"
#include "lir/families.hpp"
#include "lir/independent.hpp"
#include "lir/lift.hpp"
#include "lir/oracle.hpp"
#include "lir/path_expand.hpp"
#include "lir/phi.hpp"
#include "lir/planar.hpp"
#include "lir/regular.hpp"
#include "lir/split.hpp"
#include "lir/verifier.hpp"

using namespace lir;

namespace {

int failures = 0;

void criterion(int id, const std::string& name, const std::function<bool(std::string&)>& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %2d: %s (%.1fs%s%s)\n", ok ? "PASS" : "FAIL", id, name.c_str(), dt,
                detail.empty() ? "" : ", ", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool deg3_independent(const Multigraph& g) {
    for (const auto& p : g.pairs)
        if (g.degree(p.u) == 3 && g.degree(p.v) == 3) return false;
    return true;
}

}  // namespace

int main() {
    criterion(1, "bow-tie fixture: lir(B) = 4 and lir(^2B) <= 2", [](std::string& detail) {
        Multigraph b = make_bowtie();
        auto simple = exact_lir(b, 4);
        if (!simple.colorable || simple.value != 4) {
            detail = "simple bow-tie value " + std::to_string(simple.value);
            return false;
        }
        if (!verify(b, *simple.witness).ok) return false;
        auto dbl = exact_lir(doubled(b), 2);
        if (!dbl.colorable || dbl.value > 2) return false;
        if (!verify(doubled(b), *dbl.witness).ok) return false;
        detail = "lir(B)=4, lir(^2B)=" + std::to_string(dbl.value);
        return true;
    });

    criterion(2, "conjecture sweep: lir(^2G) <= 2 for all connected G != K2, n <= 7",
              [](std::string& detail) {
                  long long graphs = 0;
                  for (int n = 1; n <= 7; ++n)
                      for (const Multigraph& g : enumerate_connected(n)) {
                          if (g.n == 2) continue;
                          auto res = exact_lir(doubled(g), 2);
                          if (!res.colorable || res.value > 2) {
                              detail = "counterexample candidate at n=" + std::to_string(n);
                              return false;
                          }
                          if (res.value > 0 && !verify(doubled(g), *res.witness).ok) return false;
                          ++graphs;
                      }
                  detail = std::to_string(graphs) + " graphs";
                  return graphs >= 995;
              });

    criterion(3, "regular constructor: verified 2-colorings with the weight identity, n <= 8",
              [](std::string& detail) {
                  long long count = 0;
                  for (int n = 3; n <= 8; ++n)
                      for (const Multigraph& g : enumerate_connected(n)) {
                          if (!g.is_regular() || g.degree(0) < 2) continue;
                          Multigraph g2 = doubled(g);
                          EdgeColoring c = color_regular_double(g);
                          if (!verify(g2, c).ok) return false;
                          if ((int)c.colors_used().size() > 2) return false;
                          // the red-degree identity: red degrees of adjacent
                          // vertices differ (they equal the shifted sums,
                          // asserted inside the constructor)
                          for (const auto& p : g.pairs)
                              if (color_degree(g2, c, p.u, RED) == color_degree(g2, c, p.v, RED))
                                  return false;
                          ++count;
                      }
                  detail = std::to_string(count) + " regular graphs";
                  return count >= 20;
              });

    criterion(4, "split equivalence: table matches the oracle and doubles 2-color, n <= 8",
              [](std::string& detail) {
                  long long split_count = 0;
                  for (int n = 2; n <= 8; ++n)
                      for (const Multigraph& g : enumerate_connected(n)) {
                          auto p = split_recognize(g);
                          if (!p) continue;
                          ++split_count;
                          SplitLir predicted = split_lir_table(g, *p);
                          auto actual = exact_lir(g, (int)g.copy_count());
                          if (predicted == SplitLir::Undecomposable) {
                              if (actual.colorable) return false;
                          } else {
                              if (!actual.colorable || actual.value != (int)predicted) {
                                  detail = "table mismatch on a split graph with n=" +
                                           std::to_string(g.n);
                                  return false;
                              }
                          }
                          if (g.n == 2) continue;  // K2 excluded from the construction
                          EdgeColoring c = color_split_double(g, *p);
                          if (!verify(doubled(g), c).ok) return false;
                          if ((int)c.colors_used().size() > 2) return false;
                      }
                  detail = std::to_string(split_count) + " split graphs";
                  return split_count >= 300;
              });

    criterion(5, "planar/4-partite pipeline: >= 200 instances incl. K4 and odd wheels",
              [](std::string& detail) {
                  std::vector<Multigraph> pool;
                  pool.push_back(make_complete(4));
                  pool.push_back(make_wheel(5));
                  pool.push_back(make_wheel(7));
                  pool.push_back(make_wheel(9));
                  for (int n = 3; n <= 6; ++n)
                      for (const Multigraph& g : enumerate_connected(n))
                          if (g.n != 2) pool.push_back(g);
                  for (uint64_t seed = 0; pool.size() < 260 && seed < 4000; ++seed) {
                      int n = 7 + (int)(seed % 3);
                      Multigraph g = random_connected(n, 0.35 + 0.05 * (seed % 4), seed + 1000);
                      pool.push_back(g);
                  }
                  long long tested = 0;
                  for (const Multigraph& g : pool) {
                      auto vc = proper_vertex_coloring(g, 4);
                      if (!vc) continue;  // chromatic number above four
                      Multigraph g2 = doubled(g);
                      EdgeColoring c = color_planar_double(g);
                      if (!verify(g2, c).ok) return false;
                      int palette = (int)c.colors_used().size();
                      if (palette > 4) return false;
                      if (g.bipartition() && palette > 2) return false;
                      ++tested;
                  }
                  detail = std::to_string(tested) + " instances";
                  return tested >= 200;
              });

    criterion(6, "subcubic 3-coloring pipeline over all colorable G, n <= 10",
              [](std::string& detail) {
                  long long done = 0;
                  for (int n = 2; n <= 10; ++n)
                      for (const Multigraph& g : enumerate_connected_subcubic(n)) {
                          PertinentDecomposition d;
                          ElementColoring phi;
                          try {
                              std::tie(d, phi) = decompose_and_color(g);
                          } catch (const error&) {
                              // must be a genuinely uncolorable graph
                              if (find_lir_coloring(g, 4).has_value()) {
                                  detail = "decomposition failed on a colorable graph";
                                  return false;
                              }
                              continue;
                          }
                          if (!phi.minimal4) return false;
                          for (const auto& mc : classify_mono_components(g, d, phi)) {
                              if (mc.shape == 'f' || mc.shape == 'g') return false;
                              if (mc.color == 4 && mc.shape != 'a' && mc.shape != 'b') return false;
                          }
                          Multigraph g2 = doubled(g);
                          EdgeColoring c = lift_double_3(g, d, phi);
                          if (!verify(g2, c).ok) return false;
                          if ((int)c.colors_used().size() > 3) return false;
                          if (!verify_property_P(g2, c, d, phi)) return false;
                          ++done;
                      }
                  detail = std::to_string(done) + " graphs";
                  return done >= 2000;
              });

    criterion(7, "computer-check reproduction: 3375/3375 with a stable table",
              [](std::string& detail) {
                  CaseTable t = middle_part_casecheck();
                  if (t.extension.size() != 3375) return false;
                  const auto& opts = boundary_options();
                  for (int i = 0; i < 15; ++i)
                      for (int j = 0; j < 15; ++j)
                          for (int k = 0; k < 15; ++k)
                              if (!extension_valid(opts[i], opts[j], opts[k], t.lookup(i, j, k)))
                                  return false;
                  if (t.serialize() != middle_part_casecheck().serialize()) return false;
                  detail = "3375/3375 extendable";
                  return true;
              });

    criterion(8, "independent degree-3 family: verified 2-colorings with the invariant, n <= 11",
              [](std::string& detail) {
                  long long done = 0;
                  for (int n = 3; n <= 11; ++n)
                      for (const Multigraph& g : enumerate_connected_subcubic(n)) {
                          if (!deg3_independent(g)) continue;
                          Multigraph g2 = doubled(g);
                          EdgeColoring c = color_subcubic_independent(g);
                          if (!verify(g2, c).ok) return false;
                          if ((int)c.colors_used().size() > 2) return false;
                          if (!verify_pendant_invariant(g2, c)) return false;
                          ++done;
                      }
                  detail = std::to_string(done) + " graphs";
                  return done >= 350;  // the family's size at n <= 11
              });

    criterion(9, "path expansion from every cubic base, lengths 5..12, all branches",
              [](std::string& detail) {
                  std::set<ExpansionBranch> seen;
                  long long done = 0;
                  for (int n : {4, 6, 8})
                      for (const Multigraph& h : enumerate_connected_cubic(n)) {
                          EdgeColoring base = color_regular_double(h);
                          if (!verify(doubled(h), base).ok) return false;
                          for (const auto& p : h.pairs)
                              for (int len = 5; len <= 12; ++len) {
                                  ExpansionResult res = expand_edge_to_path(h, base, p.u, p.v, len);
                                  if (!verify(doubled(res.g), res.c).ok) return false;
                                  if ((int)res.c.colors_used().size() > 2) return false;
                                  seen.insert(res.branch);
                                  ++done;
                              }
                      }
                  // drive the red-blue subcases explicitly: search base
                  // colorings realizing each dispatch class on K4
                  Multigraph k4 = make_complete(4);
                  Multigraph k4d = doubled(k4);
                  for (auto [ru, rv] : std::vector<std::pair<int, int>>{
                           {1, 2}, {3, 4}, {3, 5}, {1, 3}, {2, 3}, {2, 4}, {1, 5}}) {
                      auto c = find_lir_coloring_where(k4d, 2, [&](const EdgeColoring& cc) {
                          int pi = k4d.pair_index(0, 1);
                          if (cc.colors[pi][0] == cc.colors[pi][1]) return false;
                          return color_degree(k4d, cc, 0, RED) == ru &&
                                 color_degree(k4d, cc, 1, RED) == rv;
                      });
                      if (!c) continue;
                      for (int len = 5; len <= 12; ++len) {
                          ExpansionResult res = expand_edge_to_path(k4, *c, 0, 1, len);
                          if (!verify(doubled(res.g), res.c).ok) return false;
                          seen.insert(res.branch);
                          ++done;
                      }
                  }
                  detail = std::to_string(done) + " expansions, " + std::to_string(seen.size()) +
                           "/4 branches";
                  return done >= 500 && seen.size() == 4;
              });

    criterion(10, "nsd weighting with {1,2,3} on every connected G != K2, n <= 7",
              [](std::string& detail) {
                  long long done = 0;
                  for (int n = 3; n <= 7; ++n)
                      for (const Multigraph& g : enumerate_connected(n)) {
                          auto w = find_nsd_123(g);
                          for (size_t i = 0; i < g.pairs.size(); ++i)
                              if (w.weight[i] < 1 || w.weight[i] > 3) return false;
                          for (const auto& p : g.pairs)
                              if (w.vertex_sum[p.u] == w.vertex_sum[p.v]) return false;
                          ++done;
                      }
                  detail = std::to_string(done) + " graphs";
                  return done >= 990;
              });

    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}
