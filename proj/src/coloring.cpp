#include "arrowlab/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "arrowlab/walks.hpp"

namespace arrowlab {

uint64_t encode_pair(uint64_t u, uint64_t v) {
  uint64_t s = u + v;
  return s * (s + 1) / 2 + v;
}

std::pair<uint64_t, uint64_t> decode_pair(uint64_t k) {
  // s = floor((sqrt(8k+1)-1)/2), corrected for rounding
  uint64_t s = static_cast<uint64_t>((std::sqrt(8.0 * static_cast<double>(k) + 1.0) - 1.0) / 2.0);
  while (s * (s + 1) / 2 > k) --s;
  while ((s + 1) * (s + 2) / 2 <= k) ++s;
  uint64_t v = k - s * (s + 1) / 2;
  return {s - v, v};
}

uint64_t splitmix64(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::string family_name(ColorFamily f) {
  switch (f) {
    case ColorFamily::dense: return "dense";
    case ColorFamily::ek: return "ek";
    case ColorFamily::varrho: return "varrho";
    case ColorFamily::delta: return "delta";
    case ColorFamily::random_family: return "random";
  }
  return "?";
}

Coloring Coloring::dense(OrdinalDomain domain, uint64_t arity, std::vector<uint64_t> tri) {
  size_t n = domain.size();
  if (tri.size() != n * (n - 1) / 2)
    throw std::invalid_argument("dense coloring matrix size mismatch");
  for (uint64_t v : tri)
    if (v >= arity) throw std::invalid_argument("dense coloring entry out of range");
  Coloring c(std::move(domain), arity, ColorFamily::dense);
  c.tri_ = std::move(tri);
  return c;
}

Coloring Coloring::ek(OrdinalDomain domain) {
  return Coloring(std::move(domain), std::nullopt, ColorFamily::ek);
}

Coloring Coloring::varrho_family(OrdinalDomain domain) {
  return Coloring(std::move(domain), std::nullopt, ColorFamily::varrho);
}

Coloring Coloring::delta(uint64_t bits) {
  if (bits < 1) throw std::invalid_argument("delta coloring requires bits >= 1");
  if (bits > 20) throw std::invalid_argument("delta coloring domain too large");
  Coloring c(OrdinalDomain::initial_segment(uint64_t{1} << bits), bits, ColorFamily::delta);
  c.bits_ = bits;
  return c;
}

Coloring Coloring::random(uint64_t n, uint64_t arity, uint64_t seed) {
  if (n < 2) throw std::invalid_argument("random coloring requires n >= 2");
  if (arity < 1) throw std::invalid_argument("random coloring requires arity >= 1");
  std::vector<uint64_t> tri(n * (n - 1) / 2);
  uint64_t state = seed;
  for (uint64_t& v : tri) v = splitmix64(state) % arity;
  return dense(OrdinalDomain::initial_segment(n), arity, std::move(tri));
}

size_t Coloring::tri_index(size_t i, size_t j) const { return j * (j - 1) / 2 + i; }

uint64_t Coloring::compute(size_t i, size_t j) const {
  Ordinal a = domain_.at(i);
  Ordinal b = domain_.at(j);
  switch (family_) {
    case ColorFamily::ek:
      return enum_index(b, a);
    case ColorFamily::varrho: {
      auto [u, v] = walks::varrho(a, b);
      return encode_pair(u, v);
    }
    case ColorFamily::delta: {
      uint64_t x = a.as_nat() ^ b.as_nat();
      uint64_t bit = 0;
      while (x >>= 1) ++bit;
      return bit;
    }
    default:
      throw std::logic_error("compute on dense coloring");
  }
}

uint64_t Coloring::eval_idx(size_t i, size_t j) const {
  if (i == j) throw std::invalid_argument("coloring diagonal is undefined");
  if (i > j) std::swap(i, j);
  if (j >= domain_.size()) throw std::out_of_range("coloring index out of domain");
  size_t k = tri_index(i, j);
  if (family_ == ColorFamily::dense) return tri_[k];
  if (memo_.empty()) {
    size_t n = domain_.size();
    memo_.assign(n * (n - 1) / 2, 0);
    memo_set_.assign(n * (n - 1) / 2, 0);
  }
  if (!memo_set_[k]) {
    memo_[k] = compute(i, j);
    memo_set_[k] = 1;
  }
  return memo_[k];
}

uint64_t Coloring::eval(const Ordinal& a, const Ordinal& b) const {
  auto i = domain_.index_of(a);
  auto j = domain_.index_of(b);
  if (!i || !j) throw std::invalid_argument("coloring evaluated outside its domain");
  return eval_idx(*i, *j);
}

std::vector<uint64_t> Coloring::realized_colors() const {
  std::set<uint64_t> s;
  size_t n = domain_.size();
  for (size_t j = 1; j < n; ++j)
    for (size_t i = 0; i < j; ++i) s.insert(eval_idx(i, j));
  return {s.begin(), s.end()};
}

std::string Coloring::to_text() const {
  std::ostringstream out;
  out << "arrowlab-coloring v1\n";
  out << "n=" << domain_.size() << " arity=";
  if (arity_)
    out << *arity_;
  else
    out << "unbounded";
  out << " domain=" << (domain_.initial() ? "initial" : "explicit") << "\n";
  if (!domain_.initial()) {
    out << "vertices=";
    for (size_t i = 0; i < domain_.size(); ++i) {
      if (i) out << ",";
      out << domain_.at(i).str();
    }
    out << "\n";
  }
  if (family_ == ColorFamily::dense) {
    size_t n = domain_.size();
    for (size_t j = 1; j < n; ++j) {
      for (size_t i = 0; i < j; ++i) {
        if (i) out << ",";
        out << eval_idx(i, j);
      }
      out << "\n";
    }
  } else {
    out << "family=" << family_name(family_) << " params=";
    if (family_ == ColorFamily::delta)
      out << "bits=" << bits_;
    else
      out << "-";
    out << "\n";
  }
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    size_t p = s.find(sep, start);
    if (p == std::string::npos) {
      out.push_back(s.substr(start));
      break;
    }
    out.push_back(s.substr(start, p - start));
    start = p + 1;
  }
  return out;
}

uint64_t parse_u64(const std::string& s, const char* what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ColoringFormatError(std::string("malformed ") + what + ": '" + s + "'");
  return std::stoull(s);
}

}  // namespace

Coloring Coloring::from_text(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    throw ColoringFormatError("missing mandatory trailing newline");
  std::vector<std::string> lines = split(text.substr(0, text.size() - 1), '\n');
  if (lines.empty() || lines[0] != "arrowlab-coloring v1")
    throw ColoringFormatError("bad magic line");
  if (lines.size() < 2) throw ColoringFormatError("missing header line");
  std::vector<std::string> fields = split(lines[1], ' ');
  if (fields.size() != 3 || fields[0].rfind("n=", 0) != 0 ||
      fields[1].rfind("arity=", 0) != 0 || fields[2].rfind("domain=", 0) != 0)
    throw ColoringFormatError("malformed header line");
  uint64_t n = parse_u64(fields[0].substr(2), "vertex count");
  if (n == 0) throw ColoringFormatError("empty domain");
  std::string arity_s = fields[1].substr(6);
  std::optional<uint64_t> arity;
  if (arity_s != "unbounded") arity = parse_u64(arity_s, "arity");
  std::string dom_s = fields[2].substr(7);
  size_t next = 2;
  OrdinalDomain domain = OrdinalDomain::initial_segment(1);
  if (dom_s == "initial") {
    domain = OrdinalDomain::initial_segment(n);
  } else if (dom_s == "explicit") {
    if (lines.size() < 3 || lines[2].rfind("vertices=", 0) != 0)
      throw ColoringFormatError("explicit domain requires a vertices line");
    std::vector<Ordinal> elems;
    for (const std::string& t : split(lines[2].substr(9), ',')) {
      try {
        elems.push_back(parse_ordinal(t));
      } catch (const ParseError& e) {
        throw ColoringFormatError(std::string("bad vertex expression: ") + e.what());
      }
    }
    if (elems.size() != n) throw ColoringFormatError("vertex count mismatch");
    try {
      domain = OrdinalDomain::explicit_set(std::move(elems));
    } catch (const std::invalid_argument& e) {
      throw ColoringFormatError(e.what());
    }
    next = 3;
  } else {
    throw ColoringFormatError("unknown domain kind '" + dom_s + "'");
  }

  if (next < lines.size() && lines[next].rfind("family=", 0) == 0) {
    std::vector<std::string> fs = split(lines[next], ' ');
    if (fs.size() != 2 || fs[1].rfind("params=", 0) != 0)
      throw ColoringFormatError("malformed family line");
    std::string fam = fs[0].substr(7);
    std::string params = fs[1].substr(7);
    if (next + 1 != lines.size()) throw ColoringFormatError("trailing content after family line");
    if (fam == "ek") return Coloring::ek(std::move(domain));
    if (fam == "varrho") return Coloring::varrho_family(std::move(domain));
    if (fam == "delta") {
      if (params.rfind("bits=", 0) != 0) throw ColoringFormatError("delta requires bits param");
      uint64_t bits = parse_u64(params.substr(5), "bits");
      Coloring c = Coloring::delta(bits);
      if (c.domain().size() != n) throw ColoringFormatError("delta vertex count mismatch");
      return c;
    }
    if (fam == "random") {
      uint64_t seed = 0, rarity = 0;
      bool have_seed = false, have_arity = false;
      for (const std::string& p : split(params, ';')) {
        if (p.rfind("seed=", 0) == 0) {
          seed = parse_u64(p.substr(5), "seed");
          have_seed = true;
        } else if (p.rfind("arity=", 0) == 0) {
          rarity = parse_u64(p.substr(6), "arity");
          have_arity = true;
        } else {
          throw ColoringFormatError("unknown random param '" + p + "'");
        }
      }
      if (!have_seed || !have_arity)
        throw ColoringFormatError("random requires seed and arity params");
      return Coloring::random(n, rarity, seed);
    }
    throw ColoringFormatError("unknown family '" + fam + "'");
  }

  // dense matrix rows
  if (!arity) throw ColoringFormatError("dense coloring requires finite arity");
  if (lines.size() != next + (n - 1))
    throw ColoringFormatError("matrix size mismatch: wrong number of rows");
  std::vector<uint64_t> tri;
  tri.reserve(n * (n - 1) / 2);
  for (uint64_t j = 1; j < n; ++j) {
    std::vector<std::string> cells = split(lines[next + j - 1], ',');
    if (cells.size() != j) throw ColoringFormatError("matrix size mismatch: wrong row length");
    for (const std::string& cell : cells) {
      uint64_t v = parse_u64(cell, "color");
      if (v >= *arity) throw ColoringFormatError("color out of range");
      tri.push_back(v);
    }
  }
  return Coloring::dense(std::move(domain), *arity, std::move(tri));
}

void Coloring::save_file(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << to_text();
}

Coloring Coloring::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str());
}

}  // namespace arrowlab
