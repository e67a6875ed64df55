#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "arrowlab/walks.hpp"

using namespace arrowlab;
using namespace arrowlab::walks;

namespace {

const Ordinal w = Ordinal::omega();

Ordinal o(const std::string& s) { return parse_ordinal(s); }

std::vector<Ordinal> fiber_members(const std::string& a, uint64_t n) {
  return rho_fiber(o(a), n).members;
}

}  // namespace

TEST_CASE("C-sequences") {
  CHECK_THROWS_AS(c_seq(Ordinal{}, 0), std::invalid_argument);
  CHECK(c_seq(o("1"), 0) == o("0"));
  CHECK(c_seq(o("w+4"), 0) == o("w+3"));
  CHECK_THROWS_AS(c_seq(o("w+4"), 1), std::out_of_range);
  for (uint64_t j = 0; j < 6; ++j) CHECK(c_seq(w, j) == Ordinal::nat(j));
  CHECK(c_seq(o("w*2"), 0) == o("w+1"));
  CHECK(c_seq(o("w^2"), 3) == o("w*4"));
  CSequence cs{o("w^w")};
  CHECK(cs.at(2) == o("w^2"));
  CHECK_FALSE(cs.finite());
  CHECK(CSequence{o("5")}.finite());
}

TEST_CASE("rho vanishes on finite walks") {
  for (uint64_t b = 0; b <= 10; ++b)
    for (uint64_t a = 0; a <= b; ++a)
      CHECK(rho(Ordinal::nat(a), Ordinal::nat(b)) == 0);
}

TEST_CASE("rho examples at the first limit") {
  CHECK(rho(o("3"), o("3")) == 0);
  CHECK(rho(o("3"), o("7")) == 0);
  for (uint64_t k = 0; k < 12; ++k) CHECK(rho(Ordinal::nat(k), w) == k);
  CHECK(rho(w, w) == 0);
  CHECK(rho(w, o("w+1")) == 0);
  CHECK(rho(w, o("w*2")) == 0);
  CHECK(rho(o("w+1"), o("w*2")) == 0);  // first C-element is w+1 itself
  CHECK(rho(o("w+2"), o("w*2")) == 1);  // passes through {w+1}
  CHECK_THROWS_AS(rho(w, o("3")), std::invalid_argument);
}

TEST_CASE("rho is stable across evaluation orders and cache resets") {
  clear_caches();
  uint64_t first = rho(o("w*2+3"), o("w^2"));
  clear_caches();
  // evaluate subproblems in a different order first
  (void)rho(o("w"), o("w^2"));
  (void)rho(o("5"), o("w*2"));
  CHECK(rho(o("w*2+3"), o("w^2")) == first);
}

TEST_CASE("fiber examples") {
  SUBCASE("finite base, bound 0") {
    auto m = fiber_members("5", 0);
    REQUIRE(m.size() == 6);
    for (uint64_t k = 0; k <= 5; ++k) CHECK(m[k] == Ordinal::nat(k));
  }
  SUBCASE("base w") {
    auto m = fiber_members("w", 2);
    REQUIRE(m.size() == 4);
    CHECK(m[0] == o("0"));
    CHECK(m[1] == o("1"));
    CHECK(m[2] == o("2"));
    CHECK(m[3] == w);
  }
}

TEST_CASE("fiber soundness and sampled completeness") {
  for (const char* s : {"w", "w*2", "w^2", "w^2+w*2+1"}) {
    Ordinal a = o(s);
    for (uint64_t n = 0; n <= 3; ++n) {
      FiberSet f = rho_fiber(a, n);
      REQUIRE_FALSE(f.members.empty());
      for (size_t i = 0; i < f.members.size(); ++i) {
        CHECK(f.members[i] <= a);
        CHECK(rho(f.members[i], a) <= n);  // soundness, exact
        if (i > 0) CHECK(f.members[i - 1] < f.members[i]);
      }
      CHECK(f.members.back() == a);  // rho(a,a) = 0
    }
  }
  // completeness against a direct scan of everything below a small base
  Ordinal a = o("w*2+2");
  for (uint64_t n = 0; n <= 3; ++n) {
    FiberSet f = rho_fiber(a, n);
    for (uint64_t k = 0;; ++k) {
      Ordinal xi = enumerate_below(a, k);
      if (xi.size_weight() > 12) break;
      if (rho(xi, a) <= n) {
        bool found = false;
        for (const Ordinal& m : f.members)
          if (m == xi) found = true;
        CHECK(found);
      }
    }
  }
}

TEST_CASE("varrho examples") {
  CHECK(varrho(o("3"), w) == std::pair<uint64_t, uint64_t>{3, 4});
  CHECK(varrho(o("2"), o("3")) == std::pair<uint64_t, uint64_t>{0, 3});
  CHECK(varrho(o("0"), o("1")) == std::pair<uint64_t, uint64_t>{0, 1});
  CHECK_THROWS_AS(varrho(w, w), std::invalid_argument);
  CHECK_THROWS_AS(varrho(w, o("2")), std::invalid_argument);
}
