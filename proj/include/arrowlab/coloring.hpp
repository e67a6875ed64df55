#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arrowlab/ordinal.hpp"

namespace arrowlab {

// Diagonal pairing (u,v) -> (u+v)(u+v+1)/2 + v, the canonical scalar
// encoding for pair-valued colors.
uint64_t encode_pair(uint64_t u, uint64_t v);
std::pair<uint64_t, uint64_t> decode_pair(uint64_t k);

// SplitMix64 step (Steele/Lea/Flood); the project-wide deterministic
// generator for random colorings and test sampling.
uint64_t splitmix64(uint64_t& state);

enum class ColorFamily { dense, ek, varrho, delta, random_family };

std::string family_name(ColorFamily f);

// A total symmetric pair coloring over a finite ordinal domain. Dense
// colorings store an upper-triangular matrix in column order (for each
// beta, the colors c(alpha,beta) for alpha < beta); generated families
// are computed on demand and memoized.
class Coloring {
 public:
  static Coloring dense(OrdinalDomain domain, uint64_t arity, std::vector<uint64_t> tri);
  static Coloring ek(OrdinalDomain domain);
  static Coloring varrho_family(OrdinalDomain domain);
  static Coloring delta(uint64_t bits);
  static Coloring random(uint64_t n, uint64_t arity, uint64_t seed);

  uint64_t eval(const Ordinal& a, const Ordinal& b) const;
  uint64_t eval_idx(size_t i, size_t j) const;

  const OrdinalDomain& domain() const { return domain_; }
  std::optional<uint64_t> arity() const { return arity_; }
  ColorFamily family() const { return family_; }
  bool pair_valued() const { return family_ == ColorFamily::varrho; }
  uint64_t delta_bits() const { return bits_; }

  // distinct colors realized on the full domain, ascending
  std::vector<uint64_t> realized_colors() const;

  // file format "arrowlab-coloring v1"; trailing newline mandatory
  std::string to_text() const;
  static Coloring from_text(const std::string& text);
  void save_file(const std::string& path) const;
  static Coloring load_file(const std::string& path);

 private:
  Coloring(OrdinalDomain domain, std::optional<uint64_t> arity, ColorFamily family)
      : domain_(std::move(domain)), arity_(arity), family_(family) {}

  size_t tri_index(size_t i, size_t j) const;  // i < j
  uint64_t compute(size_t i, size_t j) const;  // generated families

  OrdinalDomain domain_;
  std::optional<uint64_t> arity_;
  ColorFamily family_;
  uint64_t bits_ = 0;
  std::vector<uint64_t> tri_;  // dense values, or memo for generated
  mutable std::vector<uint64_t> memo_;
  mutable std::vector<char> memo_set_;
};

class ColoringFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace arrowlab
