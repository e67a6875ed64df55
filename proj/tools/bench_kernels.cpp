// Compare the serial reference kernels against the parallel ones:
// tree-order construction (per-pair BFS vs per-source sweep) and the
// exhaustive arrow sweep (1 thread vs all threads).

#include <chrono>
#include <cstdint>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "arrowlab/arrows.hpp"
#include "arrowlab/coloring.hpp"
#include "arrowlab/wellconn.hpp"

using namespace arrowlab;

namespace {

double now_s() {
  using clock = std::chrono::steady_clock;
  return std::chrono::duration<double>(clock::now().time_since_epoch()).count();
}

template <typename F>
double timed(F&& f) {
  double t0 = now_s();
  f();
  return now_s() - t0;
}

void bench_tree(uint64_t n, uint64_t arity, uint64_t seed) {
  Coloring c = Coloring::random(n, arity, seed);
  const OrdinalDomain& D = c.domain();
  TreeOrder serial, parallel;
  double ts = timed([&] {
    for (uint64_t color = 0; color < arity; ++color) serial = wc_tree_serial(c, D, color);
  });
  double tp = timed([&] {
    for (uint64_t color = 0; color < arity; ++color) parallel = wc_tree(c, D, color);
  });
  bool agree = true;
  for (size_t i = 0; i < serial.n; ++i)
    if (!(serial.pred[i] == parallel.pred[i])) agree = false;
  std::cout << "tree n=" << n << " arity=" << arity << " serial=" << ts << "s parallel=" << tp
            << "s speedup=" << (tp > 0 ? ts / tp : 0.0) << " agree=" << (agree ? "yes" : "NO")
            << "\n";
}

void bench_sweep(ArrowQuery q) {
  ArrowVerdict a, b;
  q.threads = 1;
  double t1 = timed([&] { a = decide_arrow(q); });
  q.threads = 0;  // library default: all available
  double tn = timed([&] { b = decide_arrow(q); });
  std::cout << "sweep " << kind_name(q.kind) << " n=" << q.n << " m=" << q.m
            << " colors=" << q.colors << " 1-thread=" << t1 << "s parallel=" << tn
            << "s speedup=" << (tn > 0 ? t1 / tn : 0.0)
            << " agree=" << (a.holds == b.holds ? "yes" : "NO") << "\n";
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::cout << "openmp max threads: " << omp_get_max_threads() << "\n";
#else
  std::cout << "built without openmp; comparing identical serial paths\n";
#endif
  // the serial reference runs one BFS per ordered pair, so it scales as
  // n^2 searches; keep n moderate to finish in seconds
  bench_tree(200, 3, 1);
  bench_tree(320, 2, 2);
  ArrowQuery q;
  q.kind = ArrowKind::wc;
  q.n = 6;
  q.m = 4;
  q.colors = 2;
  q.engine = Engine::exhaustive;
  bench_sweep(q);
  q.kind = ArrowKind::classical;
  q.n = 6;
  q.m = 3;
  q.colors = 2;
  bench_sweep(q);
  return 0;
}
