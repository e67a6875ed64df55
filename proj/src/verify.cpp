#include "arrowlab/verify.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

#include "arrowlab/arrows.hpp"
#include "arrowlab/coloring.hpp"
#include "arrowlab/ordinal.hpp"

namespace arrowlab {

namespace {

struct Reject {
  std::string reason;
};

std::vector<Ordinal> parse_list(const nlohmann::json& a) {
  std::vector<Ordinal> out;
  for (const auto& s : a) out.push_back(parse_ordinal(s.get<std::string>()));
  return out;
}

Coloring load_referenced_coloring(const nlohmann::json& cert) {
  const auto& c = cert.at("coloring");
  if (c.contains("inline")) return Coloring::from_text(c.at("inline").get<std::string>());
  if (c.contains("file")) return Coloring::load_file(c.at("file").get<std::string>());
  throw Reject{"certificate carries no coloring"};
}

// reachability by plain DFS over the listed domain, vertices >= floor only
std::vector<Ordinal> dfs_reach(const Coloring& c, const std::vector<Ordinal>& domain,
                               uint64_t color, const Ordinal& start, const Ordinal& floor) {
  std::vector<Ordinal> stack{start};
  std::vector<Ordinal> seen{start};
  auto contains = [](const std::vector<Ordinal>& v, const Ordinal& x) {
    for (const Ordinal& y : v)
      if (y == x) return true;
    return false;
  };
  while (!stack.empty()) {
    Ordinal v = stack.back();
    stack.pop_back();
    for (const Ordinal& u : domain) {
      if (u < floor || u == v || contains(seen, u)) continue;
      if (c.eval(v, u) != color) continue;
      seen.push_back(u);
      stack.push_back(u);
    }
  }
  std::sort(seen.begin(), seen.end(), OrdinalLess{});
  return seen;
}

void check_wc_witness(const nlohmann::json& cert) {
  Coloring c = load_referenced_coloring(cert);
  uint64_t color = cert.at("color").get<uint64_t>();
  std::vector<Ordinal> witness = parse_list(cert.at("witness"));
  std::vector<Ordinal> domain = parse_list(cert.at("domain"));
  if (witness.empty()) throw Reject{"empty witness"};
  for (size_t i = 0; i + 1 < witness.size(); ++i)
    if (!(witness[i] < witness[i + 1])) throw Reject{"witness not strictly increasing"};
  auto in_domain = [&](const Ordinal& x) {
    for (const Ordinal& y : domain)
      if (y == x) return true;
    return false;
  };
  for (const Ordinal& x : witness)
    if (!in_domain(x)) throw Reject{"witness vertex outside the declared domain"};

  const auto& paths = cert.at("paths");
  size_t expected = witness.size() * (witness.size() - 1) / 2;
  if (paths.size() != expected) throw Reject{"wrong number of path witnesses"};
  size_t p = 0;
  for (size_t a = 0; a < witness.size(); ++a) {
    for (size_t b = a + 1; b < witness.size(); ++b, ++p) {
      std::vector<Ordinal> path = parse_list(paths[p]);
      if (path.size() < 2) throw Reject{"path too short"};
      if (path.front() != witness[a] || path.back() != witness[b])
        throw Reject{"path endpoints do not match the pair"};
      for (size_t i = 0; i < path.size(); ++i) {
        if (!in_domain(path[i])) throw Reject{"path vertex outside the declared domain"};
        if (path[i] < witness[a]) throw Reject{"path vertex below the pair minimum"};
        for (size_t k = i + 1; k < path.size(); ++k)
          if (path[i] == path[k]) throw Reject{"repeated path vertex"};
      }
      for (size_t i = 0; i + 1 < path.size(); ++i)
        if (c.eval(path[i], path[i + 1]) != color) throw Reject{"path edge has the wrong color"};
    }
  }
}

void check_wc_refutation(const nlohmann::json& cert) {
  Coloring c = load_referenced_coloring(cert);
  uint64_t color = cert.at("color").get<uint64_t>();
  std::vector<Ordinal> witness = parse_list(cert.at("witness"));
  std::vector<Ordinal> domain = parse_list(cert.at("domain"));
  const auto& fp = cert.at("failing-pair");
  Ordinal a = parse_ordinal(fp.at(0).get<std::string>());
  Ordinal b = parse_ordinal(fp.at(1).get<std::string>());
  if (!(a < b)) throw Reject{"failing pair not ordered"};
  bool in_a = false, in_b = false;
  for (const Ordinal& x : witness) {
    if (x == a) in_a = true;
    if (x == b) in_b = true;
  }
  if (!in_a || !in_b) throw Reject{"failing pair not inside the witness set"};
  std::vector<Ordinal> reach = dfs_reach(c, domain, color, a, a);
  for (const Ordinal& x : reach)
    if (x == b) throw Reject{"failing pair is actually suffix-connected"};
  std::vector<Ordinal> claimed = parse_list(cert.at("reachable"));
  std::sort(claimed.begin(), claimed.end(), OrdinalLess{});
  if (claimed.size() != reach.size()) throw Reject{"reachable set mismatch"};
  for (size_t i = 0; i < reach.size(); ++i)
    if (claimed[i] != reach[i]) throw Reject{"reachable set mismatch"};
}

void check_arrow_verdict(const nlohmann::json& cert) {
  const auto& q = cert.at("query");
  ArrowKind kind = kind_from_name(q.at("kind").get<std::string>());
  uint64_t n = q.at("n").get<uint64_t>();
  uint64_t m = q.at("m").get<uint64_t>();
  uint64_t colors = q.at("colors").get<uint64_t>();
  bool holds = cert.at("holds").get<bool>();
  if (holds) return;  // nothing refutable to re-check
  if (!cert.contains("counterexample")) throw Reject{"failing verdict without counterexample"};
  Coloring c = Coloring::from_text(cert.at("counterexample").at("inline").get<std::string>());
  if (c.domain().size() != n) throw Reject{"counterexample vertex count mismatch"};
  if (!c.arity() || *c.arity() > colors) throw Reject{"counterexample arity mismatch"};
  if (!verify_counterexample(c, m, kind)) throw Reject{"counterexample admits a witness"};
}

}  // namespace

VerifyResult verify_certificate(const nlohmann::json& cert) {
  VerifyResult r;
  try {
    r.kind = cert.at("kind").get<std::string>();
    if (r.kind == "wc-witness")
      check_wc_witness(cert);
    else if (r.kind == "wc-refutation")
      check_wc_refutation(cert);
    else if (r.kind == "arrow-verdict")
      check_arrow_verdict(cert);
    else
      throw Reject{"unknown certificate kind '" + r.kind + "'"};
    r.accepted = true;
  } catch (const Reject& rej) {
    r.accepted = false;
    r.reason = rej.reason;
  } catch (const std::exception& e) {
    r.accepted = false;
    r.reason = e.what();
  }
  return r;
}

VerifyResult verify_certificate_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    VerifyResult r;
    r.reason = "cannot open " + path;
    return r;
  }
  nlohmann::json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    VerifyResult r;
    r.reason = e.what();
    return r;
  }
  return verify_certificate(j);
}

}  // namespace arrowlab
