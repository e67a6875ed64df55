#include "arrowlab/walks.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

namespace arrowlab::walks {

namespace {

struct PairLess {
  bool operator()(const std::pair<Ordinal, Ordinal>& x,
                  const std::pair<Ordinal, Ordinal>& y) const {
    int c = cmp(x.first, y.first);
    if (c != 0) return c < 0;
    return cmp(x.second, y.second) < 0;
  }
};

struct FiberKeyLess {
  bool operator()(const std::pair<Ordinal, uint64_t>& x,
                  const std::pair<Ordinal, uint64_t>& y) const {
    int c = cmp(x.first, y.first);
    if (c != 0) return c < 0;
    return x.second < y.second;
  }
};

std::mutex g_mutex;
std::map<std::pair<Ordinal, Ordinal>, uint64_t, PairLess> g_rho_memo;
std::map<std::pair<Ordinal, uint64_t>, std::vector<Ordinal>, FiberKeyLess> g_closure_memo;

uint64_t rho_impl(const Ordinal& a, const Ordinal& b);

uint64_t rho_cached(const Ordinal& a, const Ordinal& b) {
  if (a == b) return 0;
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_rho_memo.find({a, b});
    if (it != g_rho_memo.end()) return it->second;
  }
  uint64_t r = rho_impl(a, b);
  std::lock_guard<std::mutex> lock(g_mutex);
  g_rho_memo.emplace(std::make_pair(a, b), r);
  return r;
}

uint64_t rho_impl(const Ordinal& a, const Ordinal& b) {
  // b > a, so b > 0 and C_b is nonempty
  std::vector<Ordinal> below;  // C_b cap a
  Ordinal step;                // min(C_b \ a)
  for (uint64_t j = 0;; ++j) {
    Ordinal e = c_seq(b, j);
    if (e >= a) {
      step = e;
      break;
    }
    below.push_back(e);
    if (!b.is_limit()) {  // singleton C-sequence exhausted
      throw std::logic_error("rho: successor C-sequence below a");
    }
  }
  uint64_t best = below.size();  // otp(C_b cap a), finite
  best = std::max(best, rho_cached(a, step));
  for (const Ordinal& xi : below) best = std::max(best, rho_cached(xi, a));
  return best;
}

// P_n(a): terminating over-approximation of the fiber, closed under the
// first walk step (which is capped at C_a(n) since otp(C_a cap xi) <= n).
std::vector<Ordinal> closure(const Ordinal& a, uint64_t n) {
  {
    std::lock_guard<std::mutex> lock(g_mutex);
    auto it = g_closure_memo.find({a, n});
    if (it != g_closure_memo.end()) return it->second;
  }
  std::set<Ordinal, OrdinalLess> acc;
  acc.insert(a);
  if (!a.is_zero()) {
    uint64_t jmax = a.is_limit() ? n : 0;
    std::vector<Ordinal> cs;  // C_a(0..j)
    for (uint64_t j = 0; j <= jmax; ++j) {
      Ordinal cj = c_seq(a, j);
      std::vector<Ordinal> cand = closure(cj, n);
      for (const Ordinal& xi : cand) {
        if (j > 0 && !(xi > cs[j - 1])) continue;
        bool ok = true;
        for (uint64_t l = 0; l < j && ok; ++l)
          if (rho_cached(cs[l], xi) > n) ok = false;
        if (ok) acc.insert(xi);
      }
      cs.push_back(std::move(cj));
    }
  }
  std::vector<Ordinal> out(acc.begin(), acc.end());
  std::lock_guard<std::mutex> lock(g_mutex);
  g_closure_memo.emplace(std::make_pair(a, n), out);
  return out;
}

}  // namespace

Ordinal CSequence::at(uint64_t j) const { return c_seq(owner, j); }

Ordinal c_seq(const Ordinal& owner, uint64_t j) {
  if (owner.is_zero()) throw std::invalid_argument("C_0 is empty");
  if (owner.is_successor()) {
    if (j > 0) throw std::out_of_range("successor C-sequence is a singleton");
    return owner.predecessor();
  }
  return fund_seq(owner, j);
}

uint64_t rho(const Ordinal& a, const Ordinal& b) {
  if (a > b) throw std::invalid_argument("rho requires a <= b");
  return rho_cached(a, b);
}

FiberSet rho_fiber(const Ordinal& a, uint64_t n) {
  FiberSet f;
  f.base = a;
  f.bound = n;
  for (const Ordinal& xi : closure(a, n))
    if (rho_cached(xi, a) <= n) f.members.push_back(xi);  // soundness filter
  return f;
}

std::pair<uint64_t, uint64_t> varrho(const Ordinal& a, const Ordinal& b) {
  if (!(a < b)) throw std::invalid_argument("varrho requires a < b");
  uint64_t r = rho_cached(a, b);
  FiberSet f = rho_fiber(a, r);
  return {r, f.members.size()};
}

void clear_caches() {
  std::lock_guard<std::mutex> lock(g_mutex);
  g_rho_memo.clear();
  g_closure_memo.clear();
}

}  // namespace arrowlab::walks
