#include "arrowlab/wellconn.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace arrowlab {

namespace {

// BFS from start over vertices >= floor, neighbors visited in increasing
// index order so recovered shortest paths prefer smaller vertices.
std::vector<int> suffix_bfs_parents(const ColorGraph& G, size_t start, size_t floor) {
  std::vector<int> parent(G.n, -1);
  parent[start] = static_cast<int>(start);
  std::deque<size_t> queue{start};
  while (!queue.empty()) {
    size_t v = queue.front();
    queue.pop_front();
    for (size_t u : G.adj[v].bits()) {
      if (u < floor || parent[u] >= 0) continue;
      parent[u] = static_cast<int>(v);
      queue.push_back(u);
    }
  }
  return parent;
}

std::vector<size_t> recover_path(const std::vector<int>& parent, size_t start, size_t goal) {
  std::vector<size_t> path;
  for (size_t v = goal;; v = static_cast<size_t>(parent[v])) {
    path.push_back(v);
    if (v == start) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

WCCertificate is_well_connected(const Coloring& c, uint64_t color,
                                const std::vector<Ordinal>& X, const OrdinalDomain& D) {
  if (X.empty()) throw std::invalid_argument("well-connectedness of the empty set");
  ColorGraph G = color_graph(c, D, color);
  std::vector<size_t> xi;
  xi.reserve(X.size());
  for (const Ordinal& x : X) {
    auto i = D.index_of(x);
    if (!i) throw std::invalid_argument("witness set must lie inside the ambient domain");
    xi.push_back(*i);
  }
  std::sort(xi.begin(), xi.end());
  xi.erase(std::unique(xi.begin(), xi.end()), xi.end());

  WCCertificate cert;
  cert.color = color;
  for (size_t i : xi) cert.witness.push_back(G.labels[i]);
  cert.domain_elems = D.elements();
  cert.coloring_text = c.to_text();

  for (size_t a = 0; a < xi.size(); ++a) {
    std::vector<int> parent = suffix_bfs_parents(G, xi[a], xi[a]);
    for (size_t b = a + 1; b < xi.size(); ++b) {
      if (parent[xi[b]] < 0) {
        cert.accepted = false;
        cert.failing_pair = {G.labels[xi[a]], G.labels[xi[b]]};
        cert.paths.clear();
        for (size_t v = 0; v < G.n; ++v)
          if (parent[v] >= 0) cert.reachable_set.push_back(G.labels[v]);
        return cert;
      }
      PathWitness pw;
      pw.color = color;
      for (size_t v : recover_path(parent, xi[a], xi[b])) pw.vertices.push_back(G.labels[v]);
      cert.paths.push_back(std::move(pw));
    }
  }
  cert.accepted = true;
  return cert;
}

TreeOrder wc_tree_from_graph(const ColorGraph& G, uint64_t color, bool parallel) {
  TreeOrder t;
  t.color = color;
  t.n = G.n;
  std::vector<Bitset> succ(G.n, Bitset(G.n));
#ifdef _OPENMP
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long long a = 0; a < static_cast<long long>(G.n); ++a)
      succ[static_cast<size_t>(a)] = reachable(G, static_cast<size_t>(a), static_cast<size_t>(a));
  } else
#endif
  {
    (void)parallel;
    for (size_t a = 0; a < G.n; ++a) succ[a] = reachable(G, a, a);
  }
  t.pred.assign(G.n, Bitset(G.n));
  for (size_t a = 0; a < G.n; ++a)
    for (size_t b : succ[a].bits())
      if (b > a) t.pred[b].set(a);
  return t;
}

TreeOrder wc_tree(const Coloring& c, const OrdinalDomain& D, uint64_t color) {
  return wc_tree_from_graph(color_graph(c, D, color), color, true);
}

TreeOrder wc_tree_serial(const Coloring& c, const OrdinalDomain& D, uint64_t color) {
  // reference: one independent suffix BFS per ordered pair
  ColorGraph G = color_graph(c, D, color);
  TreeOrder t;
  t.color = color;
  t.n = G.n;
  t.pred.assign(G.n, Bitset(G.n));
  for (size_t a = 0; a < G.n; ++a) {
    for (size_t b = a + 1; b < G.n; ++b) {
      std::vector<int> parent = suffix_bfs_parents(G, a, a);
      if (parent[b] >= 0) t.pred[b].set(a);
    }
  }
  return t;
}

std::vector<WCMaxEntry> max_wc(const Coloring& c, const OrdinalDomain& D) {
  std::vector<WCMaxEntry> out;
  size_t n = D.size();
  std::vector<uint64_t> colors;
  {
    // realized colors on D (which may be a sub-domain of c)
    std::vector<size_t> idx(n);
    for (size_t i = 0; i < n; ++i) idx[i] = *c.domain().index_of(D.at(i));
    std::vector<uint64_t> seen;
    for (size_t j = 1; j < n; ++j)
      for (size_t i = 0; i < j; ++i) seen.push_back(c.eval_idx(idx[i], idx[j]));
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
    colors = std::move(seen);
  }
  if (colors.empty() && n >= 1) {
    // single vertex: no pairs, every color vacuous; report color 0, size 1
    WCMaxEntry e;
    e.color = 0;
    e.size = 1;
    e.witness.push_back(D.at(0));
    out.push_back(std::move(e));
    return out;
  }
  for (uint64_t color : colors) {
    TreeOrder t = wc_tree(c, D, color);
    size_t best_b = 0;
    uint64_t best = 1;
    for (size_t b = 0; b < n; ++b) {
      uint64_t sz = t.pred[b].count() + 1;
      if (sz > best) {
        best = sz;
        best_b = b;
      }
    }
    WCMaxEntry e;
    e.color = color;
    e.size = best;
    for (size_t a : t.pred[best_b].bits()) e.witness.push_back(D.at(a));
    e.witness.push_back(D.at(best_b));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<WCMaxEntry> brute_force_max_wc(const Coloring& c, const OrdinalDomain& D) {
  size_t n = D.size();
  if (n > 16) throw std::length_error("brute_force_max_wc supports at most 16 vertices");
  std::vector<size_t> idx(n);
  for (size_t i = 0; i < n; ++i) {
    auto k = c.domain().index_of(D.at(i));
    if (!k) throw std::invalid_argument("domain is not a subset of the coloring domain");
    idx[i] = *k;
  }
  std::vector<uint64_t> colors;
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i) colors.push_back(c.eval_idx(idx[i], idx[j]));
  std::sort(colors.begin(), colors.end());
  colors.erase(std::unique(colors.begin(), colors.end()), colors.end());

  std::vector<WCMaxEntry> out;
  if (colors.empty()) {
    WCMaxEntry e;
    e.color = 0;
    e.size = 1;
    e.witness.push_back(D.at(0));
    out.push_back(std::move(e));
    return out;
  }
  for (uint64_t color : colors) {
    // own adjacency and own BFS, independent of the graphs module
    std::vector<uint32_t> adj(n, 0);
    for (size_t j = 1; j < n; ++j)
      for (size_t i = 0; i < j; ++i)
        if (c.eval_idx(idx[i], idx[j]) == color) {
          adj[i] |= uint32_t{1} << j;
          adj[j] |= uint32_t{1} << i;
        }
    std::vector<uint32_t> wc_above(n, 0);  // {b > a : {a,b} suffix-path-connected}
    for (size_t a = 0; a < n; ++a) {
      uint32_t allowed = ~((uint32_t{1} << a) - 1) & ((n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1));
      uint32_t reach = uint32_t{1} << a;
      while (true) {
        uint32_t grown = reach;
        uint32_t f = reach;
        while (f) {
          size_t v = static_cast<size_t>(std::countr_zero(f));
          f &= f - 1;
          grown |= adj[v] & allowed;
        }
        if (grown == reach) break;
        reach = grown;
      }
      wc_above[a] = reach & ~((uint32_t{1} << a) | ((uint32_t{1} << a) - 1));
    }
    uint64_t best = 1;
    uint32_t best_mask = 1;
    for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
      if (static_cast<uint64_t>(std::popcount(mask)) <= best) continue;
      bool ok = true;
      uint32_t m = mask;
      while (m && ok) {
        size_t a = static_cast<size_t>(std::countr_zero(m));
        m &= m - 1;
        uint32_t above = mask & ~((uint32_t{1} << a) | ((uint32_t{1} << a) - 1));
        if (above & ~wc_above[a]) ok = false;
      }
      if (ok) {
        best = static_cast<uint64_t>(std::popcount(mask));
        best_mask = mask;
      }
    }
    WCMaxEntry e;
    e.color = color;
    e.size = best;
    for (size_t i = 0; i < n; ++i)
      if (best_mask & (uint32_t{1} << i)) e.witness.push_back(D.at(i));
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<std::vector<size_t>> branches(const TreeOrder& t) {
  // maximal chains are exactly pred(b) + {b} for b with no tree successor
  std::vector<bool> has_succ(t.n, false);
  for (size_t b = 0; b < t.n; ++b)
    for (size_t a : t.pred[b].bits()) has_succ[a] = true;
  std::vector<std::vector<size_t>> out;
  for (size_t b = 0; b < t.n; ++b) {
    if (has_succ[b]) continue;
    std::vector<size_t> chain = t.pred[b].bits();
    chain.push_back(b);
    out.push_back(std::move(chain));
  }
  return out;
}

namespace {

nlohmann::ordered_json ordinal_list(const std::vector<Ordinal>& v) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (const Ordinal& x : v) a.push_back(x.str());
  return a;
}

}  // namespace

nlohmann::ordered_json certificate_json(const WCCertificate& cert) {
  nlohmann::ordered_json j;
  j["kind"] = cert.accepted ? "wc-witness" : "wc-refutation";
  j["color"] = cert.color;
  j["witness"] = ordinal_list(cert.witness);
  if (cert.accepted) {
    nlohmann::ordered_json paths = nlohmann::ordered_json::array();
    for (const PathWitness& p : cert.paths) paths.push_back(ordinal_list(p.vertices));
    j["paths"] = paths;
  } else {
    j["failing-pair"] = nlohmann::ordered_json::array(
        {cert.failing_pair->first.str(), cert.failing_pair->second.str()});
    j["reachable"] = ordinal_list(cert.reachable_set);
  }
  j["domain"] = ordinal_list(cert.domain_elems);
  j["coloring"] = nlohmann::ordered_json{{"inline", cert.coloring_text}};
  j["tool-version"] = kToolVersion;
  return j;
}

}  // namespace arrowlab
