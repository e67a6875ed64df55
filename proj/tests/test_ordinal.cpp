#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "arrowlab/ordinal.hpp"

using namespace arrowlab;

namespace {

const Ordinal w = Ordinal::omega();

Ordinal o(const std::string& s) { return parse_ordinal(s); }

}  // namespace

TEST_CASE("comparison agrees with a hand-ordered reference chain") {
  std::vector<Ordinal> chain = {
      o("0"),       o("1"),       o("2"),        o("5"),       o("w"),
      o("w+1"),     o("w+3"),     o("w*2"),      o("w*2+1"),   o("w^2"),
      o("w^2+w"),   o("w^2+w+4"), o("w^2*3"),    o("w^3"),     o("w^3+w^2*2"),
      o("w^w"),     o("w^w+w^3"), o("w^w*2"),    o("w^(w+1)"), o("w^(w*2)"),
      o("w^(w^2)"), o("w^(w^w)"),
  };
  for (size_t i = 0; i < chain.size(); ++i) {
    for (size_t j = 0; j < chain.size(); ++j) {
      int c = cmp(chain[i], chain[j]);
      if (i < j) CHECK(c < 0);
      if (i == j) CHECK(c == 0);
      if (i > j) CHECK(c > 0);
    }
  }
}

TEST_CASE("string rendering round-trips through the parser") {
  for (const char* s : {"0", "7", "w", "w+1", "w*2", "w*2+3", "w^2", "w^2+w+1", "w^3*4",
                        "w^w", "w^w+w^2*2+5", "w^(w+1)", "w^(w^2+1)*3+w^w+2"}) {
    Ordinal x = o(s);
    CHECK(x.str() == s);
    CHECK(parse_ordinal(x.str()) == x);
  }
}

TEST_CASE("parser normalizes unordered and mergeable input") {
  CHECK(o("1+w") == w);
  CHECK(o("w+w") == o("w*2"));
  CHECK(o("w^2+w+w^2") == o("w^2*2"));
  CHECK(o("3+5") == Ordinal::nat(8));
  CHECK(o("0+w+0") == w);
  CHECK(o(" w ^ 2 + w * 3 ") == o("w^2+w*3"));
  CHECK(o("w^1") == w);
  CHECK(o("w^0") == Ordinal::nat(1));
  CHECK(o("w^0*4") == Ordinal::nat(4));
}

TEST_CASE("parser reports errors with positions") {
  CHECK_THROWS_AS(o(""), ParseError);
  CHECK_THROWS_AS(o("w^"), ParseError);
  CHECK_THROWS_AS(o("3w"), ParseError);
  CHECK_THROWS_AS(o("w*0"), ParseError);
  CHECK_THROWS_AS(o("w)"), ParseError);
  CHECK_THROWS_AS(o("w^(w"), ParseError);
  CHECK_THROWS_AS(o("+1"), ParseError);
  try {
    o("w^*2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 2);
  }
}

TEST_CASE("successor, predecessor and limit classification") {
  CHECK(Ordinal{}.is_zero());
  CHECK_FALSE(Ordinal{}.is_limit());
  CHECK_FALSE(Ordinal{}.is_successor());
  CHECK(o("3").is_successor());
  CHECK(o("3").predecessor() == o("2"));
  CHECK(w.is_limit());
  CHECK(o("w+1").is_successor());
  CHECK(o("w+1").predecessor() == w);
  CHECK(o("w*2").is_limit());
  CHECK(o("w^2+w").is_limit());
  CHECK(w.successor() == o("w+1"));
  CHECK(o("w+1").successor() == o("w+2"));
  CHECK_THROWS_AS(w.predecessor(), std::logic_error);
  CHECK_THROWS_AS(Ordinal{}.predecessor(), std::logic_error);
}

TEST_CASE("nat helpers") {
  CHECK(Ordinal::nat(0).is_nat());
  CHECK(Ordinal::nat(12).as_nat() == 12);
  CHECK_FALSE(w.is_nat());
  CHECK_THROWS_AS(w.as_nat(), std::logic_error);
  CHECK_THROWS_AS(Ordinal::power(w, 0), std::invalid_argument);
}

TEST_CASE("ordinal addition absorbs smaller trailing terms") {
  CHECK(Ordinal::nat(5).add_power(Ordinal::nat(1), 1) == w);  // 5 + w = w
  CHECK(w.add_power(Ordinal{}, 1) == o("w+1"));
  CHECK(o("w+3").add_power(Ordinal::nat(1), 1) == o("w*2"));
  CHECK(o("w^2+w").add_power(Ordinal::nat(2), 1) == o("w^2*2"));
}

TEST_CASE("fundamental sequences") {
  SUBCASE("C_w is the identity") {
    for (uint64_t k = 0; k < 10; ++k) CHECK(fund_seq(w, k) == Ordinal::nat(k));
  }
  SUBCASE("successor-exponent step") {
    CHECK(fund_seq(o("w*2"), 0) == o("w+1"));
    CHECK(fund_seq(o("w*2"), 3) == o("w+4"));
    CHECK(fund_seq(o("w^2"), 0) == w);
    CHECK(fund_seq(o("w^2"), 2) == o("w*3"));
    CHECK(fund_seq(o("w^2+w"), 4) == o("w^2+5"));
    CHECK(fund_seq(o("w^3"), 1) == o("w^2*2"));
  }
  SUBCASE("limit-exponent step") {
    CHECK(fund_seq(o("w^w"), 0) == Ordinal::nat(1));  // w^(w[0]) = w^0
    CHECK(fund_seq(o("w^w"), 3) == o("w^3"));
    CHECK(fund_seq(o("w^w*2"), 2) == o("w^w+w^2"));
    CHECK(fund_seq(o("w^(w+1)"), 2) == o("w^w*3"));
  }
  SUBCASE("monotone and below the owner") {
    for (const char* s : {"w*3", "w^2", "w^2+w*2", "w^w", "w^(w+1)"}) {
      Ordinal b = o(s);
      Ordinal prev = fund_seq(b, 0);
      CHECK(prev < b);
      for (uint64_t k = 1; k < 8; ++k) {
        Ordinal cur = fund_seq(b, k);
        CHECK(prev < cur);
        CHECK(cur < b);
        prev = cur;
      }
    }
  }
  CHECK_THROWS_AS(fund_seq(o("3"), 0), std::invalid_argument);
  CHECK_THROWS_AS(fund_seq(o("w+1"), 0), std::invalid_argument);
}

TEST_CASE("size weight") {
  CHECK(Ordinal{}.size_weight() == 0);
  CHECK(Ordinal::nat(3).size_weight() == 4);
  CHECK(w.size_weight() == 4);  // coeffs 1+1, depth 2
  CHECK(o("w+1").size_weight() == 5);
}

TEST_CASE("enumeration is the identity on finite bounds and on w") {
  for (uint64_t k = 0; k < 7; ++k) {
    CHECK(enumerate_below(Ordinal::nat(7), k) == Ordinal::nat(k));
    CHECK(enumerate_below(w, k) == Ordinal::nat(k));
    CHECK(enum_index(w, Ordinal::nat(k)) == k);
  }
  CHECK_THROWS_AS(enumerate_below(Ordinal::nat(3), 3), std::out_of_range);
  CHECK_THROWS_AS(enumerate_below(Ordinal{}, 0), std::invalid_argument);
  CHECK_THROWS_AS(enum_index(w, w), std::invalid_argument);
}

TEST_CASE("enumeration below w+1 dovetails w in at the right stage") {
  // frozen golden values: stages emit 0 | - | 1 | 2 | 3,w
  CHECK(enumerate_below(o("w+1"), 0) == o("0"));
  CHECK(enumerate_below(o("w+1"), 1) == o("1"));
  CHECK(enumerate_below(o("w+1"), 2) == o("2"));
  CHECK(enumerate_below(o("w+1"), 3) == o("3"));
  CHECK(enumerate_below(o("w+1"), 4) == w);
  CHECK(enum_index(o("w+1"), w) == 4);
}

TEST_CASE("enumeration is a bijection with stage-ordered output") {
  for (const char* s : {"w^2", "w^2+w", "w^w"}) {
    Ordinal b = o(s);
    std::set<Ordinal, OrdinalLess> seen;
    uint64_t prev_weight = 0;
    for (uint64_t k = 0; k < 200; ++k) {
      Ordinal x = enumerate_below(b, k);
      CHECK(x < b);
      CHECK(seen.insert(x).second);
      CHECK(x.size_weight() >= prev_weight);  // emitted stage by stage
      prev_weight = x.size_weight();
      CHECK(enum_index(b, x) == k);
    }
  }
}

TEST_CASE("ordinal domains") {
  OrdinalDomain init = OrdinalDomain::initial_segment(4);
  CHECK(init.size() == 4);
  CHECK(init.at(2) == o("2"));
  CHECK(init.index_of(o("3")) == size_t{3});
  CHECK_FALSE(init.index_of(o("4")).has_value());
  CHECK_FALSE(init.index_of(w).has_value());

  OrdinalDomain ex = OrdinalDomain::explicit_set({o("1"), o("w"), o("w^2+3")});
  CHECK(ex.size() == 3);
  CHECK(ex.at(1) == w);
  CHECK(ex.index_of(o("w^2+3")) == size_t{2});
  CHECK_FALSE(ex.index_of(o("0")).has_value());
  CHECK(ex.elements().size() == 3);

  CHECK_THROWS_AS(OrdinalDomain::initial_segment(0), std::invalid_argument);
  CHECK_THROWS_AS(OrdinalDomain::explicit_set({}), std::invalid_argument);
  CHECK_THROWS_AS(OrdinalDomain::explicit_set({o("w"), o("w")}), std::invalid_argument);
  CHECK_THROWS_AS(OrdinalDomain::explicit_set({o("w"), o("3")}), std::invalid_argument);
}
