#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "arrowlab/coloring.hpp"

using namespace arrowlab;

namespace {

Ordinal o(const std::string& s) { return parse_ordinal(s); }

const char* kPentagon =
    "arrowlab-coloring v1\n"
    "n=5 arity=2 domain=initial\n"
    "0\n"
    "1,0\n"
    "1,1,0\n"
    "0,1,1,0\n";

}  // namespace

TEST_CASE("diagonal pair encoding") {
  CHECK(encode_pair(0, 0) == 0);
  CHECK(encode_pair(1, 0) == 1);
  CHECK(encode_pair(0, 1) == 2);
  CHECK(encode_pair(3, 4) == 32);
  std::set<uint64_t> codes;
  for (uint64_t u = 0; u <= 40; ++u)
    for (uint64_t v = 0; v <= 40; ++v) {
      uint64_t k = encode_pair(u, v);
      CHECK(codes.insert(k).second);
      CHECK(decode_pair(k) == std::pair<uint64_t, uint64_t>{u, v});
    }
}

TEST_CASE("splitmix64 reference vector") {
  uint64_t state = 0;
  CHECK(splitmix64(state) == 0xE220A8397B1DCDAFULL);
  CHECK(splitmix64(state) == 0x6E789E6AA1B965F4ULL);
  CHECK(splitmix64(state) == 0x06C45D188009454FULL);
}

TEST_CASE("dense coloring evaluation and symmetry") {
  Coloring c = Coloring::from_text(kPentagon);
  CHECK(c.domain().size() == 5);
  CHECK(c.arity() == uint64_t{2});
  CHECK(c.family() == ColorFamily::dense);
  // cycle edges color 0, chords color 1
  CHECK(c.eval(o("0"), o("1")) == 0);
  CHECK(c.eval(o("0"), o("4")) == 0);
  CHECK(c.eval(o("0"), o("2")) == 1);
  CHECK(c.eval(o("1"), o("3")) == 1);
  CHECK(c.eval(o("3"), o("4")) == 0);
  CHECK(c.eval(o("4"), o("0")) == c.eval(o("0"), o("4")));
  CHECK(c.eval_idx(3, 1) == c.eval_idx(1, 3));
  CHECK(c.realized_colors() == std::vector<uint64_t>{0, 1});
  CHECK_THROWS_AS(c.eval_idx(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(c.eval(o("0"), o("5")), std::invalid_argument);
  CHECK(c.to_text() == kPentagon);
}

TEST_CASE("format rejections") {
  CHECK_THROWS_WITH_AS(Coloring::from_text("arrowlab-coloring v1\nn=2 arity=2 domain=initial\n0"),
                       "missing mandatory trailing newline", ColoringFormatError);
  CHECK_THROWS_AS(Coloring::from_text("coloring v1\nn=2 arity=2 domain=initial\n0\n"),
                  ColoringFormatError);
  CHECK_THROWS_AS(Coloring::from_text("arrowlab-coloring v1\nn=two arity=2 domain=initial\n0\n"),
                  ColoringFormatError);
  // wrong number of rows
  CHECK_THROWS_AS(Coloring::from_text("arrowlab-coloring v1\nn=3 arity=2 domain=initial\n0\n"),
                  ColoringFormatError);
  // wrong row length
  CHECK_THROWS_AS(
      Coloring::from_text("arrowlab-coloring v1\nn=3 arity=2 domain=initial\n0\n1,0,1\n"),
      ColoringFormatError);
  // color out of range
  CHECK_THROWS_AS(
      Coloring::from_text("arrowlab-coloring v1\nn=3 arity=2 domain=initial\n0\n2,0\n"),
      ColoringFormatError);
  // explicit domain vertex count mismatch
  CHECK_THROWS_AS(Coloring::from_text(
                      "arrowlab-coloring v1\nn=3 arity=2 domain=explicit\nvertices=0,w\n0\n1,0\n"),
                  ColoringFormatError);
  // non-increasing explicit domain
  CHECK_THROWS_AS(Coloring::from_text(
                      "arrowlab-coloring v1\nn=2 arity=2 domain=explicit\nvertices=w,3\n0\n"),
                  ColoringFormatError);
  CHECK_THROWS_AS(Coloring::from_text("arrowlab-coloring v1\nn=2 arity=unbounded domain=initial\n0\n"),
                  ColoringFormatError);
}

TEST_CASE("random colorings are deterministic per seed") {
  Coloring a = Coloring::random(10, 3, 42);
  Coloring b = Coloring::random(10, 3, 42);
  Coloring c = Coloring::random(10, 3, 43);
  bool all_equal = true, any_diff = false;
  for (size_t j = 1; j < 10; ++j)
    for (size_t i = 0; i < j; ++i) {
      if (a.eval_idx(i, j) != b.eval_idx(i, j)) all_equal = false;
      if (a.eval_idx(i, j) != c.eval_idx(i, j)) any_diff = true;
      CHECK(a.eval_idx(i, j) < 3);
    }
  CHECK(all_equal);
  CHECK(any_diff);
  // frozen golden matrix for n=5, arity=2, seed=1 (column order)
  Coloring g = Coloring::random(5, 2, 1);
  std::vector<uint64_t> got;
  for (size_t j = 1; j < 5; ++j)
    for (size_t i = 0; i < j; ++i) got.push_back(g.eval_idx(i, j));
  std::vector<uint64_t> want;
  uint64_t state = 1;
  for (int k = 0; k < 10; ++k) want.push_back(splitmix64(state) % 2);
  CHECK(got == want);
}

TEST_CASE("dense round trip through text") {
  Coloring c = Coloring::random(8, 4, 7);
  Coloring back = Coloring::from_text(c.to_text());
  for (size_t j = 1; j < 8; ++j)
    for (size_t i = 0; i < j; ++i) CHECK(c.eval_idx(i, j) == back.eval_idx(i, j));
  CHECK(back.to_text() == c.to_text());
}

TEST_CASE("ek coloring on an initial segment is c(i,j) = i") {
  Coloring c = Coloring::ek(OrdinalDomain::initial_segment(9));
  CHECK_FALSE(c.arity().has_value());
  for (size_t j = 1; j < 9; ++j)
    for (size_t i = 0; i < j; ++i) CHECK(c.eval_idx(i, j) == i);
}

TEST_CASE("ek coloring separates colors toward a common top vertex") {
  OrdinalDomain D = OrdinalDomain::explicit_set(
      {o("0"), o("3"), o("w"), o("w+1"), o("w*2"), o("w^2"), o("w^2+w")});
  Coloring c = Coloring::ek(D);
  for (size_t k = 2; k < D.size(); ++k)
    for (size_t j = 1; j < k; ++j)
      for (size_t i = 0; i < j; ++i) CHECK(c.eval_idx(i, k) != c.eval_idx(j, k));
  // family colorings round-trip as recipes, not matrices
  std::string text = c.to_text();
  CHECK(text.find("family=ek params=-") != std::string::npos);
  Coloring back = Coloring::from_text(text);
  CHECK(back.family() == ColorFamily::ek);
  for (size_t j = 1; j < D.size(); ++j)
    for (size_t i = 0; i < j; ++i) CHECK(back.eval_idx(i, j) == c.eval_idx(i, j));
}

TEST_CASE("varrho family packs walk pairs") {
  OrdinalDomain D = OrdinalDomain::explicit_set({o("0"), o("1"), o("2"), o("3"), o("w")});
  Coloring c = Coloring::varrho_family(D);
  CHECK(c.pair_valued());
  CHECK(c.eval(o("3"), o("w")) == encode_pair(3, 4));
  CHECK(c.eval(o("2"), o("3")) == encode_pair(0, 3));
  CHECK(c.eval(o("0"), o("1")) == encode_pair(0, 1));
  Coloring back = Coloring::from_text(c.to_text());
  CHECK(back.eval(o("3"), o("w")) == encode_pair(3, 4));
}

TEST_CASE("delta coloring is the highest differing bit") {
  Coloring c = Coloring::delta(3);
  CHECK(c.domain().size() == 8);
  CHECK(c.eval_idx(0, 1) == 0);
  CHECK(c.eval_idx(2, 3) == 0);
  CHECK(c.eval_idx(1, 2) == 1);
  CHECK(c.eval_idx(3, 7) == 2);
  CHECK(c.eval_idx(0, 7) == 2);
  CHECK_THROWS_AS(Coloring::delta(0), std::invalid_argument);
  CHECK_THROWS_AS(Coloring::delta(21), std::invalid_argument);
  Coloring back = Coloring::from_text(c.to_text());
  CHECK(back.eval_idx(1, 2) == 1);
  // delta yields a proper coloring: no two same-colored edges at a vertex
  // would form a monochromatic triangle, i.e. each color class is
  // triangle-free by the xor identity
  for (size_t a = 0; a < 8; ++a)
    for (size_t b = a + 1; b < 8; ++b)
      for (size_t d = b + 1; d < 8; ++d) {
        uint64_t ab = c.eval_idx(a, b), bd = c.eval_idx(b, d), ad = c.eval_idx(a, d);
        CHECK_FALSE((ab == bd && bd == ad));
      }
}

TEST_CASE("random family line round trips") {
  std::string text =
      "arrowlab-coloring v1\nn=6 arity=3 domain=initial\nfamily=random params=seed=9;arity=3\n";
  Coloring c = Coloring::from_text(text);
  Coloring direct = Coloring::random(6, 3, 9);
  for (size_t j = 1; j < 6; ++j)
    for (size_t i = 0; i < j; ++i) CHECK(c.eval_idx(i, j) == direct.eval_idx(i, j));
}
