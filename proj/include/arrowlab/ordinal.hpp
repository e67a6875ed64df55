#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace arrowlab {

// An ordinal below epsilon_0 in Cantor normal form: a strictly decreasing
// list of (exponent, coefficient) terms denoting sum of w^exponent * coeff.
// The empty list is 0. Immutable after construction.
class Ordinal {
 public:
  struct Term;

  Ordinal() = default;

  static Ordinal nat(uint64_t n);
  static Ordinal omega();
  // w^exp * coeff, coeff >= 1
  static Ordinal power(Ordinal exp, uint64_t coeff = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_nat() const;
  uint64_t as_nat() const;  // requires is_nat()
  bool is_successor() const;
  bool is_limit() const { return !is_zero() && !is_successor(); }

  Ordinal successor() const;
  Ordinal predecessor() const;  // requires is_successor()

  const std::vector<Term>& terms() const { return terms_; }

  // Ordinal addition of a single term w^exp * coeff: terms with smaller
  // exponent are absorbed, equal exponents merge.
  Ordinal add_power(const Ordinal& exp, uint64_t coeff) const;

  // Sum of all coefficients in the expression tree (exponents included).
  uint64_t coeff_total() const;
  // Nesting depth: 0 for 0, else 1 + max depth of exponents.
  uint64_t depth() const;
  // Dovetail stage at which this ordinal is emitted by enumerate_below.
  uint64_t size_weight() const { return coeff_total() + depth(); }

  std::string str() const;

 private:
  std::vector<Term> terms_;
};

struct Ordinal::Term {
  Ordinal exponent;
  uint64_t coeff = 1;
};

// Three-way CNF comparison: negative, zero, positive.
int cmp(const Ordinal& a, const Ordinal& b);

inline bool operator==(const Ordinal& a, const Ordinal& b) { return cmp(a, b) == 0; }
inline bool operator!=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) != 0; }
inline bool operator<(const Ordinal& a, const Ordinal& b) { return cmp(a, b) < 0; }
inline bool operator<=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) <= 0; }
inline bool operator>(const Ordinal& a, const Ordinal& b) { return cmp(a, b) > 0; }
inline bool operator>=(const Ordinal& a, const Ordinal& b) { return cmp(a, b) >= 0; }

struct OrdinalLess {
  bool operator()(const Ordinal& a, const Ordinal& b) const { return cmp(a, b) < 0; }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, size_t position);
  size_t position() const { return position_; }

 private:
  size_t position_;
};

// Grammar: expr := term ('+' term)*
//          term := '0' | nat | 'w' ['^' exponent] ['*' nat]
//          exponent := '(' expr ')' | 'w' | nat
// Non-normalized input (unordered or mergeable terms) is normalized via
// ordinal addition, never rejected. Whitespace is insignificant.
Ordinal parse_ordinal(const std::string& text);

// k-th element (0-indexed) of the canonical fundamental sequence of a
// limit ordinal. C_w is the identity; otherwise Wainer-style, with
// (gamma + w^(e+1) * c)[k] = gamma + w^(e+1)*(c-1) + w^e * (k+1) and
// (gamma + w^e * c)[k] = gamma + w^e*(c-1) + w^(e[k]) for limit e.
Ordinal fund_seq(const Ordinal& b, uint64_t k);

// Canonical dovetail enumeration of { x : x < b }: stage t emits, in
// increasing ordinal order, all not-yet-emitted x < b with
// size_weight(x) <= t. The identity on finite b and on w.
Ordinal enumerate_below(const Ordinal& b, uint64_t k);
// Inverse of enumerate_below; requires a < b.
uint64_t enum_index(const Ordinal& b, const Ordinal& a);

// A finite vertex supply: either {0,...,n-1} or an explicit strictly
// increasing set of ordinals. Never empty.
class OrdinalDomain {
 public:
  static OrdinalDomain initial_segment(uint64_t n);
  static OrdinalDomain explicit_set(std::vector<Ordinal> elems);

  size_t size() const;
  Ordinal at(size_t i) const;
  std::optional<size_t> index_of(const Ordinal& x) const;
  bool initial() const { return initial_; }
  bool contains(const Ordinal& x) const { return index_of(x).has_value(); }
  std::vector<Ordinal> elements() const;

 private:
  OrdinalDomain() = default;
  bool initial_ = true;
  uint64_t n_ = 0;
  std::vector<Ordinal> elems_;
};

}  // namespace arrowlab
