#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arrowlab/coloring.hpp"

#include <json.hpp>

namespace arrowlab {

enum class ArrowKind { classical, hc, wc };
enum class Engine { exhaustive, backtrack };

std::string kind_name(ArrowKind k);
std::string engine_name(Engine e);
ArrowKind kind_from_name(const std::string& s);
Engine engine_from_name(const std::string& s);

// The query n ->_* (m)^2_colors.
struct ArrowQuery {
  ArrowKind kind = ArrowKind::classical;
  uint64_t n = 1;
  uint64_t m = 1;
  uint64_t colors = 1;
  Engine engine = Engine::exhaustive;
  bool deterministic = false;
  int threads = 0;  // 0 = library default
};

struct SearchStats {
  uint64_t visited = 0;  // canonical colorings checked / DFS nodes
  uint64_t prunes = 0;
  double seconds = 0.0;
};

struct ArrowVerdict {
  bool holds = false;
  std::optional<Coloring> counterexample;
  SearchStats stats;
  uint64_t max_witness_seen = 0;  // largest witness size over visited colorings
};

class ResourceGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Holds iff every coloring of [n]^2 by `colors` colors admits a size-m
// monochromatic witness: a clique for classical and hc (finitely these
// coincide), a well-connected chain for wc. Failing verdicts carry a
// verified counterexample; with the deterministic flag (or always for
// the verdict boolean) the counterexample is the first in canonical
// order. Color symmetry is always broken by first-occurrence order;
// vertex symmetry additionally for classical/hc (wc is not invariant
// under vertex permutations).
ArrowVerdict decide_arrow(const ArrowQuery& q);

struct RamseyScan {
  std::optional<uint64_t> value;  // least n <= n_max that holds
  std::vector<std::pair<uint64_t, bool>> verdicts;
};

RamseyScan ramsey_number(ArrowKind kind, uint64_t m, uint64_t colors, uint64_t n_max,
                         Engine engine = Engine::backtrack);

// colors*(m-2)+2: the top vertex has colors*(m-2)+1 direct predecessors,
// pigeonhole gives m-1 of one color, and tree-order predecessor sets are
// chains, so a size-m well-connected set exists. Requires m >= 2.
uint64_t wc_pigeonhole_bound(uint64_t m, uint64_t colors);

// Independent checker: no color admits a size-m witness, via the
// graphs/wellconn modules rather than the search kernels.
bool verify_counterexample(const Coloring& c, uint64_t m, ArrowKind kind);

nlohmann::ordered_json verdict_json(const ArrowQuery& q, const ArrowVerdict& v);

}  // namespace arrowlab
