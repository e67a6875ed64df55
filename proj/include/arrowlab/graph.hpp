#pragma once

#include <cstdint>
#include <vector>

#include "arrowlab/coloring.hpp"
#include "arrowlab/ordinal.hpp"

namespace arrowlab {

class Bitset {
 public:
  explicit Bitset(size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}

  size_t size() const { return n_; }
  void set(size_t i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(size_t i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  size_t count() const;
  bool any() const;
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o);
  Bitset& operator&=(const Bitset& o);
  Bitset& and_not(const Bitset& o);  // this &= ~o
  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool is_subset_of(const Bitset& o) const;

  int find_first() const;  // -1 when empty
  std::vector<size_t> bits() const;

 private:
  size_t n_;
  std::vector<uint64_t> w_;
};

// The monochromatic graph substrate: vertices carry increasing ordinal
// labels; adjacency is symmetric and irreflexive.
struct ColorGraph {
  size_t n = 0;
  std::vector<Ordinal> labels;
  std::vector<Bitset> adj;

  bool has_edge(size_t i, size_t j) const { return adj[i].test(j); }
  size_t edge_count() const;
  bool is_complete() const;
};

// Edge {a,b} present iff eval(c,a,b) == color. D must be a subset of the
// coloring's domain.
ColorGraph color_graph(const Coloring& c, const OrdinalDomain& D, uint64_t color);

ColorGraph graph_from_adjacency(std::vector<Bitset> adj);

// Vertices reachable from start using only vertices with index >= floor.
Bitset reachable(const ColorGraph& G, size_t start, size_t floor);

// Minimum number of vertex deletions disconnecting G; n-1 for complete
// graphs, 0 for disconnected ones. Vertex-capacity max-flow over all
// non-adjacent pairs.
uint64_t vertex_connectivity(const ColorGraph& G);

// Connected after deleting any fewer than n vertices; finitely this is
// exactly completeness.
bool is_highly_connected(const ColorGraph& G);

struct CliqueResult {
  uint64_t size = 0;
  std::vector<size_t> witness;  // lexicographically least by vertex index
};

// Exact maximum clique, branch and bound with a greedy coloring bound.
CliqueResult max_clique(const ColorGraph& G);

}  // namespace arrowlab
