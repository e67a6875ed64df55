#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arrowlab/ordinal.hpp"

namespace arrowlab::walks {

// The canonical C-sequence: C_0 is empty, C_{a+1} = {a}, and C_a for
// limit a is the fundamental-sequence stream. Elements are strictly
// increasing and cofinal in a, order type <= w.
struct CSequence {
  Ordinal owner;

  // j-th element; throws for owner 0, and for j > 0 on successors.
  Ordinal at(uint64_t j) const;
  // number of elements (1 for successors); unbounded for limits
  bool finite() const { return !owner.is_limit(); }
};

Ordinal c_seq(const Ordinal& owner, uint64_t j);

// The walk weight: rho(a,a) = 0, otherwise
//   rho(a,b) = max{ otp(C_b cap a), rho(a, min(C_b \ a)),
//                   max_{xi in C_b cap a} rho(xi, a) }.
// Requires a <= b. Memoized per process.
uint64_t rho(const Ordinal& a, const Ordinal& b);

// { xi <= base : rho(xi, base) <= bound }, sorted ascending.
struct FiberSet {
  Ordinal base;
  uint64_t bound = 0;
  std::vector<Ordinal> members;
};

FiberSet rho_fiber(const Ordinal& a, uint64_t n);

// varrho(a,b) = (rho(a,b), otp{ xi <= a : rho(xi,a) <= rho(a,b) }).
// Requires a < b.
std::pair<uint64_t, uint64_t> varrho(const Ordinal& a, const Ordinal& b);

// drop the process-wide memo tables (test hook)
void clear_caches();

}  // namespace arrowlab::walks
