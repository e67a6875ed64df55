#include "arrowlab/arrows.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "arrowlab/graph.hpp"
#include "arrowlab/wellconn.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arrowlab {

std::string kind_name(ArrowKind k) {
  switch (k) {
    case ArrowKind::classical: return "classical";
    case ArrowKind::hc: return "hc";
    case ArrowKind::wc: return "wc";
  }
  return "?";
}

std::string engine_name(Engine e) {
  return e == Engine::exhaustive ? "exhaustive" : "backtrack";
}

ArrowKind kind_from_name(const std::string& s) {
  if (s == "classical") return ArrowKind::classical;
  if (s == "hc") return ArrowKind::hc;
  if (s == "wc") return ArrowKind::wc;
  throw std::invalid_argument("unknown arrow kind '" + s + "'");
}

Engine engine_from_name(const std::string& s) {
  if (s == "exhaustive") return Engine::exhaustive;
  if (s == "backtrack") return Engine::backtrack;
  throw std::invalid_argument("unknown engine '" + s + "'");
}

namespace {

// Edges in column order: (0,1), (0,2), (1,2), (0,3), ... Edge k of column
// j has tri index j(j-1)/2 + i, matching the coloring file layout.
std::vector<std::pair<int, int>> column_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) e.emplace_back(i, j);
  return e;
}

// longest tree-order chain over mask adjacency (suffix reachability)
uint64_t chain_max_masks(const std::vector<uint32_t>& adj, int n) {
  std::vector<int> pred_count(n, 0);
  uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  for (int a = 0; a < n; ++a) {
    uint32_t allowed = full & ~((uint32_t{1} << a) - 1);
    uint32_t reach = uint32_t{1} << a;
    while (true) {
      uint32_t grown = reach;
      for (uint32_t f = reach; f;) {
        int v = std::countr_zero(f);
        f &= f - 1;
        grown |= adj[v] & allowed;
      }
      if (grown == reach) break;
      reach = grown;
    }
    for (uint32_t f = reach & ~((uint32_t{1} << a) | ((uint32_t{1} << a) - 1)); f;) {
      int b = std::countr_zero(f);
      f &= f - 1;
      ++pred_count[b];
    }
  }
  int best = 0;
  for (int b = 0; b < n; ++b) best = std::max(best, pred_count[b]);
  return static_cast<uint64_t>(best) + 1;
}

void clique_dfs_masks(const std::vector<uint32_t>& adj, uint32_t cand, uint64_t depth,
                      uint64_t& best) {
  if (depth + static_cast<uint64_t>(std::popcount(cand)) <= best) return;
  while (cand) {
    if (depth + static_cast<uint64_t>(std::popcount(cand)) <= best) return;
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    best = std::max(best, depth + 1);
    clique_dfs_masks(adj, cand & adj[static_cast<size_t>(v)], depth + 1, best);
  }
}

uint64_t clique_max_masks(const std::vector<uint32_t>& adj, int n) {
  uint32_t full = n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1;
  uint64_t best = 1;
  clique_dfs_masks(adj, full, 0, best);
  return best;
}

// best witness size over all colors for a fully colored prefix on nn vertices
uint64_t best_witness(const uint8_t* d, int nn, uint64_t lambda, ArrowKind kind) {
  uint64_t best = 1;
  std::vector<uint32_t> adj(nn);
  for (uint64_t color = 0; color < lambda; ++color) {
    std::fill(adj.begin(), adj.end(), 0);
    int k = 0;
    bool used = false;
    for (int j = 1; j < nn; ++j)
      for (int i = 0; i < j; ++i, ++k)
        if (d[k] == color) {
          adj[i] |= uint32_t{1} << j;
          adj[j] |= uint32_t{1} << i;
          used = true;
        }
    if (!used) continue;
    uint64_t s = kind == ArrowKind::wc ? chain_max_masks(adj, nn) : clique_max_masks(adj, nn);
    best = std::max(best, s);
  }
  return best;
}

bool color_canonical(const uint8_t* d, int E) {
  uint8_t next = 0;
  for (int k = 0; k < E; ++k) {
    if (d[k] > next) return false;
    if (d[k] == next) ++next;
  }
  return true;
}

// edge index permutations induced by vertex permutations
std::vector<std::vector<int>> edge_perms(int n) {
  auto edges = column_edges(n);
  int E = static_cast<int>(edges.size());
  std::vector<std::vector<int>> out;
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  auto edge_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return j * (j - 1) / 2 + i;
  };
  do {
    std::vector<int> ep(E);
    for (int k = 0; k < E; ++k) ep[k] = edge_index(perm[edges[k].first], perm[edges[k].second]);
    out.push_back(std::move(ep));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// does the permuted, color-recanonicalized sequence precede d?
bool perm_smaller(const uint8_t* d, const std::vector<int>& ep, int E) {
  int relabel[64];
  std::fill(relabel, relabel + 64, -1);
  int next = 0;
  for (int k = 0; k < E; ++k) {
    int c = d[ep[k]];
    if (relabel[c] < 0) relabel[c] = next++;
    if (relabel[c] != d[k]) return relabel[c] < d[k];
  }
  return false;
}

Coloring coloring_from_digits(const uint8_t* d, uint64_t n, uint64_t lambda) {
  std::vector<uint64_t> tri(n * (n - 1) / 2);
  for (size_t k = 0; k < tri.size(); ++k) tri[k] = d[k];
  return Coloring::dense(OrdinalDomain::initial_segment(n), lambda, std::move(tri));
}

ArrowVerdict decide_exhaustive(const ArrowQuery& q) {
  int n = static_cast<int>(q.n);
  int E = n * (n - 1) / 2;
  double log2_canon = E * std::log2(static_cast<double>(q.colors));
  for (uint64_t i = 2; i <= q.colors; ++i) log2_canon -= std::log2(static_cast<double>(i));
  if (log2_canon > 26.0)
    throw ResourceGuardError("exhaustive engine requires colors^(n(n-1)/2) <= 2^26 "
                             "after color canonicalization");
  if (q.colors > 60) throw ResourceGuardError("exhaustive engine color limit exceeded");
  uint64_t total = 1;
  for (int k = 0; k < E; ++k) total *= q.colors;

  bool vertex_sym = q.kind != ArrowKind::wc && n <= 6;
  std::vector<std::vector<int>> eperms;
  if (vertex_sym) eperms = edge_perms(n);

  std::atomic<uint64_t> fail_code{total};  // total = none
  std::atomic<uint64_t> visited{0};
  std::atomic<uint64_t> maxw{0};

  auto body = [&](uint64_t code) {
    if (code >= fail_code.load(std::memory_order_relaxed)) return;
    uint8_t d[512];
    uint64_t c = code;
    for (int k = 0; k < E; ++k) {
      d[k] = static_cast<uint8_t>(c % q.colors);
      c /= q.colors;
    }
    if (!color_canonical(d, E)) return;
    if (vertex_sym)
      for (const auto& ep : eperms)
        if (perm_smaller(d, ep, E)) return;
    visited.fetch_add(1, std::memory_order_relaxed);
    uint64_t w = best_witness(d, n, q.colors, q.kind);
    uint64_t prev = maxw.load(std::memory_order_relaxed);
    while (w > prev && !maxw.compare_exchange_weak(prev, w)) {
    }
    if (w < q.m) {
      uint64_t cur = fail_code.load(std::memory_order_relaxed);
      while (code < cur && !fail_code.compare_exchange_weak(cur, code)) {
      }
    }
  };

  if (q.deterministic || q.threads == 1) {
    for (uint64_t code = 0; code < total; ++code) {
      if (fail_code.load(std::memory_order_relaxed) < total) break;
      body(code);
    }
  } else {
#ifdef _OPENMP
    if (q.threads > 0) omp_set_num_threads(q.threads);
#pragma omp parallel for schedule(dynamic, 4096)
    for (long long code = 0; code < static_cast<long long>(total); ++code)
      body(static_cast<uint64_t>(code));
#else
    for (uint64_t code = 0; code < total; ++code) {
      if (fail_code.load(std::memory_order_relaxed) < total) break;
      body(code);
    }
#endif
  }

  ArrowVerdict v;
  v.stats.visited = visited.load();
  v.max_witness_seen = maxw.load();
  uint64_t fc = fail_code.load();
  v.holds = fc == total;
  if (!v.holds) {
    uint8_t d[512];
    uint64_t c = fc;
    for (int k = 0; k < E; ++k) {
      d[k] = static_cast<uint8_t>(c % q.colors);
      c /= q.colors;
    }
    v.counterexample = coloring_from_digits(d, q.n, q.colors);
  }
  return v;
}

struct BacktrackSearch {
  int n = 0;
  int E = 0;
  uint64_t lambda = 0;
  uint64_t m = 0;
  ArrowKind kind = ArrowKind::classical;
  std::vector<std::pair<int, int>> edges;
  std::vector<uint8_t> d;
  SearchStats stats;
  uint64_t maxw = 1;
  bool found = false;

  // true once a counterexample is found (first in canonical DFS order)
  bool dfs(int k, uint8_t used) {
    if (k == E) {
      found = true;
      return true;
    }
    auto [i, j] = edges[static_cast<size_t>(k)];
    uint8_t limit = static_cast<uint8_t>(std::min<uint64_t>(used + 1, lambda));
    for (uint8_t c = 0; c < limit; ++c) {
      d[static_cast<size_t>(k)] = c;
      ++stats.visited;
      if (i == j - 1) {
        // column j complete: the restriction to {0..j} is fully colored,
        // and its witnesses persist under any extension
        uint64_t w = best_witness(d.data(), j + 1, lambda, kind);
        maxw = std::max(maxw, w);
        if (w >= m) {
          ++stats.prunes;
          continue;
        }
      }
      if (dfs(k + 1, std::max<uint8_t>(used, static_cast<uint8_t>(c + 1)))) return true;
    }
    return false;
  }
};

ArrowVerdict decide_backtrack(const ArrowQuery& q) {
  if (q.n > 16) throw ResourceGuardError("backtrack engine requires n <= 16");
  BacktrackSearch s;
  s.n = static_cast<int>(q.n);
  s.E = s.n * (s.n - 1) / 2;
  s.lambda = q.colors;
  s.m = q.m;
  s.kind = q.kind;
  s.edges = column_edges(s.n);
  s.d.assign(static_cast<size_t>(s.E), 0);
  ArrowVerdict v;
  v.holds = !s.dfs(0, 0);
  v.stats = s.stats;
  v.max_witness_seen = s.maxw;
  if (!v.holds) v.counterexample = coloring_from_digits(s.d.data(), q.n, q.colors);
  return v;
}

}  // namespace

ArrowVerdict decide_arrow(const ArrowQuery& q) {
  if (q.n < 1 || q.m < 1 || q.colors < 1)
    throw std::invalid_argument("arrow query requires n, m, colors >= 1");
  if (q.m == 1) {
    // |X| = 1 is vacuous in every kind
    ArrowVerdict v;
    v.holds = true;
    v.max_witness_seen = 1;
    return v;
  }
  if (q.m > q.n) {
    // no subset of size m exists; any coloring refutes
    ArrowVerdict v;
    v.holds = false;
    std::vector<uint64_t> tri(q.n * (q.n - 1) / 2, 0);
    v.counterexample = Coloring::dense(OrdinalDomain::initial_segment(q.n), q.colors,
                                       std::move(tri));
    return v;
  }
  auto t0 = std::chrono::steady_clock::now();
  ArrowVerdict v = q.engine == Engine::exhaustive ? decide_exhaustive(q) : decide_backtrack(q);
  v.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return v;
}

RamseyScan ramsey_number(ArrowKind kind, uint64_t m, uint64_t colors, uint64_t n_max,
                         Engine engine) {
  RamseyScan scan;
  for (uint64_t n = 1; n <= n_max; ++n) {
    ArrowQuery q;
    q.kind = kind;
    q.n = n;
    q.m = m;
    q.colors = colors;
    q.engine = engine;
    ArrowVerdict v = decide_arrow(q);
    scan.verdicts.emplace_back(n, v.holds);
    if (v.holds) {
      scan.value = n;
      break;
    }
  }
  return scan;
}

uint64_t wc_pigeonhole_bound(uint64_t m, uint64_t colors) {
  if (m < 2) throw std::invalid_argument("wc_pigeonhole_bound requires m >= 2");
  return colors * (m - 2) + 2;
}

bool verify_counterexample(const Coloring& c, uint64_t m, ArrowKind kind) {
  if (m <= 1) return false;  // singletons always witness
  const OrdinalDomain& D = c.domain();
  if (D.size() < 2) return D.size() < m;
  if (kind == ArrowKind::wc) {
    for (const WCMaxEntry& e : max_wc(c, D))
      if (e.size >= m) return false;
    return true;
  }
  for (uint64_t color : c.realized_colors()) {
    ColorGraph g = color_graph(c, D, color);
    if (max_clique(g).size >= m) return false;
  }
  return true;
}

nlohmann::ordered_json verdict_json(const ArrowQuery& q, const ArrowVerdict& v) {
  nlohmann::ordered_json j;
  j["kind"] = "arrow-verdict";
  j["query"] = nlohmann::ordered_json{{"kind", kind_name(q.kind)},
                                      {"n", q.n},
                                      {"m", q.m},
                                      {"colors", q.colors},
                                      {"engine", engine_name(q.engine)}};
  j["holds"] = v.holds;
  if (v.counterexample)
    j["counterexample"] = nlohmann::ordered_json{{"inline", v.counterexample->to_text()}};
  j["stats"] = nlohmann::ordered_json{{"visited", v.stats.visited},
                                      {"prunes", v.stats.prunes},
                                      {"max-witness", v.max_witness_seen}};
  j["tool-version"] = kToolVersion;
  return j;
}

}  // namespace arrowlab
