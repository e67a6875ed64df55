#include "arrowlab/ordinal.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace arrowlab {

Ordinal Ordinal::nat(uint64_t n) {
  Ordinal o;
  if (n > 0) o.terms_.push_back(Term{Ordinal{}, n});
  return o;
}

Ordinal Ordinal::omega() { return power(nat(1), 1); }

Ordinal Ordinal::power(Ordinal exp, uint64_t coeff) {
  if (coeff == 0) throw std::invalid_argument("ordinal term coefficient must be positive");
  Ordinal o;
  o.terms_.push_back(Term{std::move(exp), coeff});
  return o;
}

bool Ordinal::is_nat() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].exponent.is_zero());
}

uint64_t Ordinal::as_nat() const {
  if (!is_nat()) throw std::logic_error("as_nat on infinite ordinal");
  return terms_.empty() ? 0 : terms_[0].coeff;
}

bool Ordinal::is_successor() const {
  return !terms_.empty() && terms_.back().exponent.is_zero();
}

Ordinal Ordinal::successor() const { return add_power(Ordinal{}, 1); }

Ordinal Ordinal::predecessor() const {
  if (!is_successor()) throw std::logic_error("predecessor of a non-successor ordinal");
  Ordinal o = *this;
  if (o.terms_.back().coeff > 1)
    o.terms_.back().coeff -= 1;
  else
    o.terms_.pop_back();
  return o;
}

Ordinal Ordinal::add_power(const Ordinal& exp, uint64_t coeff) const {
  if (coeff == 0) throw std::invalid_argument("ordinal term coefficient must be positive");
  Ordinal o;
  o.terms_ = terms_;
  while (!o.terms_.empty() && cmp(o.terms_.back().exponent, exp) < 0) o.terms_.pop_back();
  if (!o.terms_.empty() && cmp(o.terms_.back().exponent, exp) == 0)
    o.terms_.back().coeff += coeff;
  else
    o.terms_.push_back(Term{exp, coeff});
  return o;
}

uint64_t Ordinal::coeff_total() const {
  uint64_t s = 0;
  for (const Term& t : terms_) s += t.coeff + t.exponent.coeff_total();
  return s;
}

uint64_t Ordinal::depth() const {
  if (terms_.empty()) return 0;
  uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.exponent.depth());
  return d + 1;
}

int cmp(const Ordinal& a, const Ordinal& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t k = std::min(ta.size(), tb.size());
  for (size_t i = 0; i < k; ++i) {
    int c = cmp(ta[i].exponent, tb[i].exponent);
    if (c != 0) return c;
    if (ta[i].coeff != tb[i].coeff) return ta[i].coeff < tb[i].coeff ? -1 : 1;
  }
  if (ta.size() != tb.size()) return ta.size() < tb.size() ? -1 : 1;
  return 0;
}

namespace {

// exponent rendered without parentheses iff it parses back as an atom
bool atomic_exponent(const Ordinal& e) {
  return e.is_nat() || e == Ordinal::omega();
}

}  // namespace

std::string Ordinal::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : terms_) {
    if (!first) out += "+";
    first = false;
    if (t.exponent.is_zero()) {
      out += std::to_string(t.coeff);
      continue;
    }
    out += "w";
    if (!(t.exponent.is_nat() && t.exponent.as_nat() == 1)) {
      out += "^";
      if (atomic_exponent(t.exponent))
        out += t.exponent.str();
      else
        out += "(" + t.exponent.str() + ")";
    }
    if (t.coeff > 1) out += "*" + std::to_string(t.coeff);
  }
  return out;
}

ParseError::ParseError(const std::string& msg, size_t position)
    : std::runtime_error(msg + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  Ordinal parse() {
    Ordinal o = expr();
    skip_ws();
    if (pos_ != s_.size()) throw ParseError("unexpected trailing input", pos_);
    return o;
  }

 private:
  Ordinal expr() {
    Ordinal o = Ordinal{};
    auto [e, c] = term();
    if (c > 0) o = o.add_power(e, c);
    while (true) {
      skip_ws();
      if (!eat('+')) break;
      auto [e2, c2] = term();
      if (c2 > 0) o = o.add_power(e2, c2);
    }
    return o;
  }

  // returns (exponent, coeff) of a single term; 0 maps to (0, coeff 0) — see below
  std::pair<Ordinal, uint64_t> term() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("expected term", pos_);
    char ch = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      uint64_t n = number();
      if (n == 0) return {Ordinal{}, 0};  // "0" contributes nothing
      return {Ordinal{}, n};
    }
    if (ch != 'w') throw ParseError("expected 'w', digit or '('", pos_);
    ++pos_;
    Ordinal exp = Ordinal::nat(1);
    skip_ws();
    if (eat('^')) exp = exponent();
    skip_ws();
    uint64_t coeff = 1;
    if (eat('*')) {
      skip_ws();
      coeff = number();
      if (coeff == 0) throw ParseError("zero coefficient", pos_);
    }
    return {exp, coeff};
  }

  Ordinal exponent() {
    skip_ws();
    if (pos_ >= s_.size()) throw ParseError("expected exponent", pos_);
    char ch = s_[pos_];
    if (ch == '(') {
      ++pos_;
      Ordinal o = expr();
      skip_ws();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return o;
    }
    if (ch == 'w') {
      ++pos_;
      return Ordinal::omega();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) return Ordinal::nat(number());
    throw ParseError("expected exponent", pos_);
  }

  uint64_t number() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected number", pos_);
    uint64_t n = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      n = n * 10 + static_cast<uint64_t>(s_[pos_] - '0');
      ++pos_;
    }
    return n;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

Ordinal parse_ordinal(const std::string& text) {
  Parser p(text);
  return p.parse();
}

Ordinal fund_seq(const Ordinal& b, uint64_t k) {
  if (!b.is_limit()) throw std::invalid_argument("fund_seq requires a limit ordinal");
  if (b == Ordinal::omega()) return Ordinal::nat(k);  // C_w = {0,1,2,...}
  const auto& terms = b.terms();
  const Ordinal::Term& last = terms.back();
  // gamma + w^e * (c-1), the part kept unchanged
  Ordinal head;
  for (size_t i = 0; i + 1 < terms.size(); ++i)
    head = head.add_power(terms[i].exponent, terms[i].coeff);
  if (last.coeff > 1) head = head.add_power(last.exponent, last.coeff - 1);
  if (last.exponent.is_successor()) {
    return head.add_power(last.exponent.predecessor(), k + 1);
  }
  return head.add_power(fund_seq(last.exponent, k), 1);
}

namespace {

// All x < bound with coeff_total <= cs and depth <= d, ascending.
void extend_terms(const Ordinal& prefix, const Ordinal& exp_bound, uint64_t cs_left,
                  uint64_t d, const Ordinal& value_bound, std::vector<Ordinal>& out);

std::vector<Ordinal> ordinals_below(const Ordinal& bound, uint64_t cs, uint64_t d) {
  std::vector<Ordinal> out;
  if (bound.is_zero()) return out;
  out.push_back(Ordinal{});
  if (d >= 1 && cs >= 1) {
    Ordinal first_exp_bound = bound.terms().front().exponent.successor();
    extend_terms(Ordinal{}, first_exp_bound, cs, d, bound, out);
  }
  std::sort(out.begin(), out.end(), OrdinalLess{});
  return out;
}

void extend_terms(const Ordinal& prefix, const Ordinal& exp_bound, uint64_t cs_left,
                  uint64_t d, const Ordinal& value_bound, std::vector<Ordinal>& out) {
  if (d == 0 || cs_left == 0) return;
  // candidate exponents strictly below exp_bound, one nesting level down
  std::vector<Ordinal> exps = ordinals_below(exp_bound, cs_left - 1, d - 1);
  for (const Ordinal& e : exps) {
    uint64_t ec = e.coeff_total();
    for (uint64_t c = 1; c + ec <= cs_left; ++c) {
      Ordinal next = prefix.add_power(e, c);
      if (!(cmp(next, value_bound) < 0)) break;  // larger coeff only grows
      out.push_back(next);
      extend_terms(next, e, cs_left - (c + ec), d, value_bound, out);
    }
  }
}

struct EnumState {
  Ordinal bound;
  uint64_t stage = 0;
  std::vector<Ordinal> order;
  std::map<Ordinal, uint64_t, OrdinalLess> index;

  void extend_stage() {
    ++stage;
    std::vector<Ordinal> all = ordinals_below(bound, stage, stage);
    for (const Ordinal& x : all) {
      if (x.size_weight() > stage) continue;
      if (index.count(x)) continue;
      index.emplace(x, order.size());
      order.push_back(x);
    }
  }
};

std::mutex g_enum_mutex;
std::map<Ordinal, EnumState, OrdinalLess> g_enum_states;

EnumState& enum_state_locked(const Ordinal& b) {
  auto it = g_enum_states.find(b);
  if (it == g_enum_states.end()) {
    it = g_enum_states.emplace(b, EnumState{}).first;
    it->second.bound = b;
  }
  return it->second;
}

}  // namespace

Ordinal enumerate_below(const Ordinal& b, uint64_t k) {
  if (b.is_zero()) throw std::invalid_argument("enumerate_below: empty range");
  if (b.is_nat()) {
    if (k >= b.as_nat()) throw std::out_of_range("enumerate_below: index out of range");
    return Ordinal::nat(k);
  }
  std::lock_guard<std::mutex> lock(g_enum_mutex);
  EnumState& st = enum_state_locked(b);
  while (st.order.size() <= k) st.extend_stage();
  return st.order[k];
}

uint64_t enum_index(const Ordinal& b, const Ordinal& a) {
  if (!(a < b)) throw std::invalid_argument("enum_index requires a < b");
  if (b.is_nat()) return a.as_nat();
  std::lock_guard<std::mutex> lock(g_enum_mutex);
  EnumState& st = enum_state_locked(b);
  uint64_t target_stage = a.size_weight();
  while (true) {
    auto it = st.index.find(a);
    if (it != st.index.end()) return it->second;
    if (st.stage > target_stage)
      throw std::logic_error("enum_index: ordinal not reached by its stage");
    st.extend_stage();
  }
}

OrdinalDomain OrdinalDomain::initial_segment(uint64_t n) {
  if (n == 0) throw std::invalid_argument("domain must be nonempty");
  OrdinalDomain d;
  d.initial_ = true;
  d.n_ = n;
  return d;
}

OrdinalDomain OrdinalDomain::explicit_set(std::vector<Ordinal> elems) {
  if (elems.empty()) throw std::invalid_argument("domain must be nonempty");
  for (size_t i = 0; i + 1 < elems.size(); ++i)
    if (!(elems[i] < elems[i + 1]))
      throw std::invalid_argument("explicit domain must be strictly increasing");
  OrdinalDomain d;
  d.initial_ = false;
  d.elems_ = std::move(elems);
  return d;
}

size_t OrdinalDomain::size() const { return initial_ ? n_ : elems_.size(); }

Ordinal OrdinalDomain::at(size_t i) const {
  if (i >= size()) throw std::out_of_range("domain index");
  return initial_ ? Ordinal::nat(i) : elems_[i];
}

std::optional<size_t> OrdinalDomain::index_of(const Ordinal& x) const {
  if (initial_) {
    if (!x.is_nat() || x.as_nat() >= n_) return std::nullopt;
    return x.as_nat();
  }
  auto it = std::lower_bound(elems_.begin(), elems_.end(), x, OrdinalLess{});
  if (it == elems_.end() || *it != x) return std::nullopt;
  return static_cast<size_t>(it - elems_.begin());
}

std::vector<Ordinal> OrdinalDomain::elements() const {
  if (!initial_) return elems_;
  std::vector<Ordinal> v;
  v.reserve(n_);
  for (uint64_t i = 0; i < n_; ++i) v.push_back(Ordinal::nat(i));
  return v;
}

}  // namespace arrowlab
