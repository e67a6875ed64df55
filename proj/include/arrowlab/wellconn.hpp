#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arrowlab/coloring.hpp"
#include "arrowlab/graph.hpp"
#include "arrowlab/ordinal.hpp"

#include <json.hpp>

namespace arrowlab {

inline constexpr const char* kToolVersion = "arrowlab 1.0";

// A finite path of i-colored edges, every vertex at or above the first
// endpoint (the minimum of the pair it certifies).
struct PathWitness {
  uint64_t color = 0;
  std::vector<Ordinal> vertices;  // from min endpoint to max endpoint
};

// Accepting: one shortest-path witness per unordered pair of X.
// Rejecting: the least failing pair plus the suffix-reachable set that
// demonstrates the absence of a path.
//
// Connecting paths may use any vertex of the declared ambient domain D,
// not just X. When D is a finite sample of an infinite vertex supply,
// restriction only removes paths: refutations on samples are sound
// evidence, acceptances do not lift to the full supply.
struct WCCertificate {
  bool accepted = false;
  uint64_t color = 0;
  std::vector<Ordinal> witness;  // X, sorted
  std::vector<PathWitness> paths;
  std::optional<std::pair<Ordinal, Ordinal>> failing_pair;
  std::vector<Ordinal> reachable_set;  // suffix-reachable from the failing minimum
  std::vector<Ordinal> domain_elems;
  std::string coloring_text;  // inline arrowlab-coloring v1
};

// Accepts iff every pair a < b of X has a path of `color`-edges from a to
// b inside D using only vertices >= a. X must be nonempty and within D.
WCCertificate is_well_connected(const Coloring& c, uint64_t color,
                                const std::vector<Ordinal>& X, const OrdinalDomain& D);

// The tree order: pred(b) = { a < b : {a,b} well-connected in `color` },
// as per-vertex predecessor bitsets over domain indices.
struct TreeOrder {
  uint64_t color = 0;
  size_t n = 0;
  std::vector<Bitset> pred;
};

TreeOrder wc_tree(const Coloring& c, const OrdinalDomain& D, uint64_t color);
// one BFS per pair instead of one per source; reference for testing
TreeOrder wc_tree_serial(const Coloring& c, const OrdinalDomain& D, uint64_t color);
TreeOrder wc_tree_from_graph(const ColorGraph& G, uint64_t color, bool parallel);

struct WCMaxEntry {
  uint64_t color = 0;
  uint64_t size = 0;
  std::vector<Ordinal> witness;
};

// Longest-chain characterization: per realized color, the largest
// well-connected subset is max over b of pred(b) + {b}, for the least
// optimal b.
std::vector<WCMaxEntry> max_wc(const Coloring& c, const OrdinalDomain& D);

// Independent oracle: full subset enumeration with per-pair path checks.
// Requires |D| <= 16.
std::vector<WCMaxEntry> brute_force_max_wc(const Coloring& c, const OrdinalDomain& D);

// All maximal chains of the tree order, as sorted vertex-index lists.
std::vector<std::vector<size_t>> branches(const TreeOrder& t);

nlohmann::ordered_json certificate_json(const WCCertificate& cert);

}  // namespace arrowlab
