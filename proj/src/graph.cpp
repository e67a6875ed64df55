#include "arrowlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace arrowlab {

size_t Bitset::count() const {
  size_t c = 0;
  for (uint64_t w : w_) c += static_cast<size_t>(std::popcount(w));
  return c;
}

bool Bitset::any() const {
  for (uint64_t w : w_)
    if (w) return true;
  return false;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
  return *this;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
  return *this;
}

Bitset& Bitset::and_not(const Bitset& o) {
  for (size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
  return *this;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i]) return false;
  return true;
}

int Bitset::find_first() const {
  for (size_t i = 0; i < w_.size(); ++i)
    if (w_[i]) return static_cast<int>(i * 64 + static_cast<size_t>(std::countr_zero(w_[i])));
  return -1;
}

std::vector<size_t> Bitset::bits() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < w_.size(); ++i) {
    uint64_t w = w_[i];
    while (w) {
      out.push_back(i * 64 + static_cast<size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
  return out;
}

size_t ColorGraph::edge_count() const {
  size_t s = 0;
  for (const Bitset& b : adj) s += b.count();
  return s / 2;
}

bool ColorGraph::is_complete() const {
  for (size_t i = 0; i < n; ++i)
    if (adj[i].count() != n - 1) return false;
  return true;
}

ColorGraph color_graph(const Coloring& c, const OrdinalDomain& D, uint64_t color) {
  ColorGraph g;
  g.n = D.size();
  g.labels.reserve(g.n);
  std::vector<size_t> idx(g.n);
  for (size_t i = 0; i < g.n; ++i) {
    Ordinal x = D.at(i);
    auto k = c.domain().index_of(x);
    if (!k) throw std::invalid_argument("graph domain is not a subset of the coloring domain");
    idx[i] = *k;
    g.labels.push_back(std::move(x));
  }
  g.adj.assign(g.n, Bitset(g.n));
  for (size_t j = 1; j < g.n; ++j)
    for (size_t i = 0; i < j; ++i)
      if (c.eval_idx(idx[i], idx[j]) == color) {
        g.adj[i].set(j);
        g.adj[j].set(i);
      }
  return g;
}

ColorGraph graph_from_adjacency(std::vector<Bitset> adj) {
  ColorGraph g;
  g.n = adj.size();
  for (size_t i = 0; i < g.n; ++i) g.labels.push_back(Ordinal::nat(i));
  g.adj = std::move(adj);
  return g;
}

Bitset reachable(const ColorGraph& G, size_t start, size_t floor) {
  if (start < floor) throw std::invalid_argument("reachable requires start >= floor");
  Bitset allowed(G.n);
  for (size_t i = floor; i < G.n; ++i) allowed.set(i);
  Bitset seen(G.n);
  seen.set(start);
  std::deque<size_t> queue{start};
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    Bitset next = G.adj[v];
    next &= allowed;
    next.and_not(seen);
    for (size_t u : next.bits()) {
      seen.set(u);
      queue.push_back(u);
    }
  }
  return seen;
}

namespace {

// unit vertex capacities via vertex splitting; BFS augmenting paths
uint64_t max_vertex_flow(const ColorGraph& G, size_t s, size_t t) {
  size_t n = G.n;
  size_t N = 2 * n;  // v_in = 2v, v_out = 2v+1
  const int INF = 1 << 20;
  std::vector<std::vector<int>> cap(N, std::vector<int>(N, 0));
  for (size_t v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? INF : 1;
  for (size_t u = 0; u < n; ++u)
    for (size_t v : G.adj[u].bits()) cap[2 * u + 1][2 * v] = INF;
  size_t src = 2 * s + 1, dst = 2 * t;
  uint64_t flow = 0;
  while (true) {
    std::vector<int> parent(N, -1);
    parent[src] = static_cast<int>(src);
    std::deque<size_t> queue{src};
    while (!queue.empty() && parent[dst] < 0) {
      size_t v = queue.front();
      queue.pop_front();
      for (size_t u = 0; u < N; ++u)
        if (parent[u] < 0 && cap[v][u] > 0) {
          parent[u] = static_cast<int>(v);
          queue.push_back(u);
        }
    }
    if (parent[dst] < 0) break;
    int aug = INF;
    for (size_t v = dst; v != src; v = static_cast<size_t>(parent[v]))
      aug = std::min(aug, cap[static_cast<size_t>(parent[v])][v]);
    for (size_t v = dst; v != src; v = static_cast<size_t>(parent[v])) {
      cap[static_cast<size_t>(parent[v])][v] -= aug;
      cap[v][static_cast<size_t>(parent[v])] += aug;
    }
    flow += static_cast<uint64_t>(aug);
  }
  return flow;
}

}  // namespace

uint64_t vertex_connectivity(const ColorGraph& G) {
  if (G.n == 0) throw std::invalid_argument("connectivity of empty graph");
  if (G.is_complete()) return G.n - 1;
  uint64_t best = G.n;  // some non-adjacent pair exists, so a cut does too
  for (size_t s = 0; s < G.n; ++s)
    for (size_t t = s + 1; t < G.n; ++t)
      if (!G.has_edge(s, t)) best = std::min(best, max_vertex_flow(G, s, t));
  return best;
}

bool is_highly_connected(const ColorGraph& G) {
  if (G.n == 0) throw std::invalid_argument("empty graph");
  return G.is_complete();
}

namespace {

// greedy coloring upper bound on the clique number of the candidate set
uint64_t color_bound(const ColorGraph& G, const Bitset& cand) {
  std::vector<Bitset> classes;
  for (size_t v : cand.bits()) {
    bool placed = false;
    for (Bitset& cl : classes) {
      Bitset conflict = cl;
      conflict &= G.adj[v];
      if (conflict.none()) {
        cl.set(v);
        placed = true;
        break;
      }
    }
    if (!placed) {
      Bitset cl(G.n);
      cl.set(v);
      classes.push_back(std::move(cl));
    }
  }
  return classes.size();
}

void clique_size_dfs(const ColorGraph& G, Bitset cand, uint64_t depth, uint64_t& best) {
  if (depth + color_bound(G, cand) <= best) return;
  while (cand.any()) {
    if (depth + color_bound(G, cand) <= best) return;
    size_t v = static_cast<size_t>(cand.find_first());
    cand.reset(v);
    Bitset next = cand;
    next &= G.adj[v];
    if (depth + 1 > best) best = depth + 1;
    clique_size_dfs(G, next, depth + 1, best);
  }
}

// first size-target clique in lexicographic subset order
bool lex_clique_dfs(const ColorGraph& G, const Bitset& cand, std::vector<size_t>& cur,
                    uint64_t target) {
  if (cur.size() == target) return true;
  if (cur.size() + color_bound(G, cand) < target) return false;
  for (size_t v : cand.bits()) {
    Bitset next = cand;
    next &= G.adj[v];
    // drop candidates <= v so each subset is visited once, smallest first
    for (size_t u : next.bits()) {
      if (u <= v) next.reset(u);
    }
    cur.push_back(v);
    if (lex_clique_dfs(G, next, cur, target)) return true;
    cur.pop_back();
  }
  return false;
}

}  // namespace

CliqueResult max_clique(const ColorGraph& G) {
  if (G.n == 0) throw std::invalid_argument("empty graph");
  Bitset all(G.n);
  for (size_t i = 0; i < G.n; ++i) all.set(i);
  uint64_t best = 1;
  clique_size_dfs(G, all, 0, best);
  CliqueResult r;
  r.size = best;
  lex_clique_dfs(G, all, r.witness, best);
  return r;
}

}  // namespace arrowlab
