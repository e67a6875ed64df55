// arrowlab: decide partition arrows, build colorings, check
// well-connectedness and emit machine-checkable certificates.

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arrowlab/arrows.hpp"
#include "arrowlab/coloring.hpp"
#include "arrowlab/graph.hpp"
#include "arrowlab/ordinal.hpp"
#include "arrowlab/verify.hpp"
#include "arrowlab/walks.hpp"
#include "arrowlab/wellconn.hpp"

namespace {

using namespace arrowlab;

constexpr int kExitHolds = 0;
constexpr int kExitFails = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<Ordinal> parse_ordinal_list(const std::string& csv) {
  std::vector<Ordinal> out;
  size_t start = 0;
  while (start <= csv.size()) {
    size_t p = csv.find(',', start);
    std::string tok = csv.substr(start, p == std::string::npos ? p : p - start);
    if (tok.empty()) throw UsageError("empty ordinal expression in list");
    out.push_back(parse_ordinal(tok));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

std::string join_labels(const std::vector<Ordinal>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].str();
  }
  return s;
}

void write_json(const std::string& path, const nlohmann::ordered_json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << j.dump(2) << "\n";
}

std::string color_display(const Coloring& c, uint64_t color) {
  if (!c.pair_valued()) return std::to_string(color);
  auto [u, v] = decode_pair(color);
  return std::to_string(color) + "=(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

OrdinalDomain sampled_domain(const Ordinal& bound, uint64_t sample, uint64_t seed) {
  if (bound.is_nat()) {
    uint64_t n = bound.as_nat();
    if (n == 0) throw UsageError("domain bound must be positive");
    if (sample == 0 || sample >= n) return OrdinalDomain::initial_segment(n);
    std::set<uint64_t> picks;
    uint64_t state = seed;
    while (picks.size() < sample) picks.insert(splitmix64(state) % n);
    std::vector<Ordinal> elems;
    for (uint64_t p : picks) elems.push_back(Ordinal::nat(p));
    return OrdinalDomain::explicit_set(std::move(elems));
  }
  if (sample == 0)
    throw UsageError("infinite domain bound requires --sample");
  std::set<Ordinal, OrdinalLess> acc;
  uint64_t state = seed;
  uint64_t range = std::max<uint64_t>(64, 8 * sample);
  while (acc.size() < sample) acc.insert(enumerate_below(bound, splitmix64(state) % range));
  return OrdinalDomain::explicit_set({acc.begin(), acc.end()});
}

int run_decide(ArrowQuery q, const std::string& out_path, const std::string& cert_path) {
  ArrowVerdict v = decide_arrow(q);
  std::string rel = kind_name(q.kind) + " " + std::to_string(q.n) + "->(" +
                    std::to_string(q.m) + ")^2_" + std::to_string(q.colors);
  std::cout << (v.holds ? "HOLDS " : "FAILS ") << rel << "\n";
  std::cout << "engine=" << engine_name(q.engine) << " visited=" << v.stats.visited
            << " prunes=" << v.stats.prunes << " max-witness=" << v.max_witness_seen
            << " seconds=" << v.stats.seconds << "\n";
  if (!v.holds && !out_path.empty()) {
    v.counterexample->save_file(out_path);
    std::cout << "counterexample written to " << out_path << "\n";
  }
  if (!cert_path.empty()) write_json(cert_path, verdict_json(q, v));
  return v.holds ? kExitHolds : kExitFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partition-arrow laboratory for finite colorings"};
  app.require_subcommand(1);

  // arrow decide / arrow number
  auto* arrow = app.add_subcommand("arrow", "decide partition relations");
  arrow->require_subcommand(1);
  std::string a_kind = "classical", a_engine = "exhaustive";
  uint64_t a_n = 1, a_m = 1, a_colors = 1, a_nmax = 8;
  bool a_det = false;
  int a_threads = 0;
  std::string a_out = "counterexample.clr", a_cert;

  auto* decide = arrow->add_subcommand("decide", "decide n ->_* (m)^2_colors");
  decide->add_option("--kind", a_kind, "classical|hc|wc")->required();
  decide->add_option("--n", a_n)->required();
  decide->add_option("--m", a_m)->required();
  decide->add_option("--colors", a_colors)->required();
  decide->add_option("--engine", a_engine, "exhaustive|backtrack");
  decide->add_flag("--deterministic", a_det, "single-threaded canonical search order");
  decide->add_option("--threads", a_threads)->envname("ARROWLAB_THREADS");
  decide->add_option("--out", a_out, "counterexample coloring file");
  decide->add_option("--cert", a_cert, "verdict certificate file");

  auto* number = arrow->add_subcommand("number", "least n with n ->_* (m)^2_colors");
  number->add_option("--kind", a_kind)->required();
  number->add_option("--m", a_m)->required();
  number->add_option("--colors", a_colors)->required();
  number->add_option("--nmax", a_nmax)->required();
  number->add_option("--engine", a_engine);

  // coloring gen / coloring show
  auto* coloring = app.add_subcommand("coloring", "generate and inspect colorings");
  coloring->require_subcommand(1);
  std::string c_family, c_out, c_in, c_domain;
  uint64_t c_n = 0, c_arity = 2, c_seed = 0, c_bits = 0, c_sample = 0;
  bool c_dense = false;

  auto* gen = coloring->add_subcommand("gen", "generate a coloring file");
  gen->add_option("--family", c_family, "ek|varrho|delta|random")->required();
  gen->add_option("--out", c_out)->required();
  gen->add_option("--n", c_n, "initial-segment domain size");
  gen->add_option("--domain", c_domain, "ordinal bound expression, e.g. w^2");
  gen->add_option("--sample", c_sample, "random sample size below --domain");
  gen->add_option("--seed", c_seed);
  gen->add_option("--arity", c_arity, "random family arity");
  gen->add_option("--bits", c_bits, "delta family bits");
  gen->add_flag("--dense", c_dense, "materialize generated families as dense");

  auto* show = coloring->add_subcommand("show", "print a coloring file");
  show->add_option("--in", c_in)->required();

  // wc check / wc tree / wc max
  auto* wc = app.add_subcommand("wc", "well-connectedness checks");
  wc->require_subcommand(1);
  std::string w_coloring, w_set, w_cert;
  uint64_t w_color = 0;

  auto* wcheck = wc->add_subcommand("check", "certify well-connectedness of a set");
  wcheck->add_option("--coloring", w_coloring)->required();
  wcheck->add_option("--color", w_color)->required();
  wcheck->add_option("--set", w_set, "comma-separated ordinal expressions")->required();
  wcheck->add_option("--cert", w_cert);

  auto* wtree = wc->add_subcommand("tree", "print the tree order for one color");
  wtree->add_option("--coloring", w_coloring)->required();
  wtree->add_option("--color", w_color)->required();

  auto* wmax = wc->add_subcommand("max", "largest well-connected set per color");
  wmax->add_option("--coloring", w_coloring)->required();

  // hc check
  auto* hc = app.add_subcommand("hc", "highly-connected checks");
  hc->require_subcommand(1);
  auto* hcheck = hc->add_subcommand("check", "is the monochromatic subgraph on a set highly connected");
  hcheck->add_option("--coloring", w_coloring)->required();
  hcheck->add_option("--color", w_color)->required();
  hcheck->add_option("--set", w_set)->required();

  // graph connectivity
  auto* graph = app.add_subcommand("graph", "graph utilities");
  graph->require_subcommand(1);
  auto* conn = graph->add_subcommand("connectivity", "vertex connectivity of a color class");
  conn->add_option("--coloring", w_coloring)->required();
  conn->add_option("--color", w_color)->required();
  conn->add_option("--set", w_set, "restrict to a subset (default: full domain)");

  // walks rho / varrho / fiber
  auto* walks_cmd = app.add_subcommand("walks", "walk functions on ordinals");
  walks_cmd->require_subcommand(1);
  std::string k_a, k_b;
  uint64_t k_n = 0;
  auto* rho_cmd = walks_cmd->add_subcommand("rho", "walk weight rho(a,b)");
  rho_cmd->add_option("--a", k_a)->required();
  rho_cmd->add_option("--b", k_b)->required();
  auto* varrho_cmd = walks_cmd->add_subcommand("varrho", "the pair coloring varrho(a,b)");
  varrho_cmd->add_option("--a", k_a)->required();
  varrho_cmd->add_option("--b", k_b)->required();
  auto* fiber_cmd = walks_cmd->add_subcommand("fiber", "{xi <= a : rho(xi,a) <= n}");
  fiber_cmd->add_option("--a", k_a)->required();
  fiber_cmd->add_option("--n", k_n)->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "re-validate a certificate file");
  std::string v_file;
  verify_cmd->add_option("file", v_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (decide->parsed()) {
      ArrowQuery q;
      q.kind = kind_from_name(a_kind);
      q.n = a_n;
      q.m = a_m;
      q.colors = a_colors;
      q.engine = engine_from_name(a_engine);
      q.deterministic = a_det;
      q.threads = a_threads;
      return run_decide(q, a_out, a_cert);
    }
    if (number->parsed()) {
      RamseyScan scan = ramsey_number(kind_from_name(a_kind), a_m, a_colors, a_nmax,
                                      engine_from_name(a_engine));
      for (auto [n, holds] : scan.verdicts)
        std::cout << "n=" << n << " " << (holds ? "holds" : "fails") << "\n";
      if (scan.value) {
        std::cout << "RAMSEY " << a_kind << " m=" << a_m << " colors=" << a_colors
                  << " n=" << *scan.value << "\n";
        return kExitHolds;
      }
      std::cout << "EXCEEDS " << a_kind << " m=" << a_m << " colors=" << a_colors
                << " nmax=" << a_nmax << "\n";
      return kExitFails;
    }
    if (gen->parsed()) {
      OrdinalDomain dom = OrdinalDomain::initial_segment(1);
      bool have_dom = false;
      if (!c_domain.empty()) {
        dom = sampled_domain(parse_ordinal(c_domain), c_sample, c_seed);
        have_dom = true;
      } else if (c_n > 0) {
        dom = OrdinalDomain::initial_segment(c_n);
        have_dom = true;
      }
      Coloring out = [&] {
        if (c_family == "ek") {
          if (!have_dom) throw UsageError("ek requires --n or --domain");
          return Coloring::ek(dom);
        }
        if (c_family == "varrho") {
          if (!have_dom) throw UsageError("varrho requires --n or --domain");
          return Coloring::varrho_family(dom);
        }
        if (c_family == "delta") {
          if (c_bits == 0) throw UsageError("delta requires --bits");
          return Coloring::delta(c_bits);
        }
        if (c_family == "random") {
          if (c_n == 0) throw UsageError("random requires --n");
          return Coloring::random(c_n, c_arity, c_seed);
        }
        throw UsageError("unknown family '" + c_family + "'");
      }();
      if (c_dense && out.family() != ColorFamily::dense) {
        size_t n = out.domain().size();
        std::vector<uint64_t> tri;
        uint64_t arity = 0;
        for (size_t j = 1; j < n; ++j)
          for (size_t i = 0; i < j; ++i) {
            tri.push_back(out.eval_idx(i, j));
            arity = std::max(arity, tri.back() + 1);
          }
        out = Coloring::dense(out.domain(), out.arity().value_or(arity), std::move(tri));
      }
      out.save_file(c_out);
      std::cout << "WROTE " << c_out << " n=" << out.domain().size() << " family="
                << family_name(out.family()) << "\n";
      return kExitHolds;
    }
    if (show->parsed()) {
      Coloring c = Coloring::load_file(c_in);
      std::cout << c.to_text();
      return kExitHolds;
    }
    if (wcheck->parsed()) {
      Coloring c = Coloring::load_file(w_coloring);
      std::vector<Ordinal> X = parse_ordinal_list(w_set);
      WCCertificate cert = is_well_connected(c, w_color, X, c.domain());
      if (!w_cert.empty()) write_json(w_cert, certificate_json(cert));
      if (cert.accepted) {
        std::cout << "WITNESS color=" << w_color << " size=" << cert.witness.size() << "\n";
        for (const PathWitness& p : cert.paths)
          std::cout << "path " << join_labels(p.vertices) << "\n";
        return kExitHolds;
      }
      std::cout << "REFUTED color=" << w_color << " pair=" << cert.failing_pair->first.str()
                << "," << cert.failing_pair->second.str() << "\n";
      return kExitFails;
    }
    if (wtree->parsed()) {
      Coloring c = Coloring::load_file(w_coloring);
      TreeOrder t = wc_tree(c, c.domain(), w_color);
      for (size_t b = 0; b < t.n; ++b) {
        std::vector<Ordinal> preds;
        for (size_t a : t.pred[b].bits()) preds.push_back(c.domain().at(a));
        std::cout << "pred(" << c.domain().at(b).str() << ")={" << join_labels(preds) << "}\n";
      }
      return kExitHolds;
    }
    if (wmax->parsed()) {
      Coloring c = Coloring::load_file(w_coloring);
      for (const WCMaxEntry& e : max_wc(c, c.domain()))
        std::cout << "color=" << color_display(c, e.color) << " size=" << e.size
                  << " witness=" << join_labels(e.witness) << "\n";
      return kExitHolds;
    }
    if (hcheck->parsed()) {
      Coloring c = Coloring::load_file(w_coloring);
      std::vector<Ordinal> X = parse_ordinal_list(w_set);
      std::sort(X.begin(), X.end(), OrdinalLess{});
      ColorGraph g = color_graph(c, OrdinalDomain::explicit_set(X), w_color);
      bool ok = is_highly_connected(g);
      std::cout << (ok ? "HC" : "NOT-HC") << " color=" << w_color << " size=" << g.n << "\n";
      return ok ? kExitHolds : kExitFails;
    }
    if (conn->parsed()) {
      Coloring c = Coloring::load_file(w_coloring);
      OrdinalDomain D = c.domain();
      if (!w_set.empty()) {
        std::vector<Ordinal> X = parse_ordinal_list(w_set);
        std::sort(X.begin(), X.end(), OrdinalLess{});
        D = OrdinalDomain::explicit_set(X);
      }
      ColorGraph g = color_graph(c, D, w_color);
      std::cout << "CONNECTIVITY color=" << w_color << " value=" << vertex_connectivity(g)
                << "\n";
      return kExitHolds;
    }
    if (rho_cmd->parsed()) {
      Ordinal a = parse_ordinal(k_a), b = parse_ordinal(k_b);
      std::cout << "RHO " << a.str() << " " << b.str() << " " << walks::rho(a, b) << "\n";
      return kExitHolds;
    }
    if (varrho_cmd->parsed()) {
      Ordinal a = parse_ordinal(k_a), b = parse_ordinal(k_b);
      auto [u, v] = walks::varrho(a, b);
      std::cout << "VARRHO " << a.str() << " " << b.str() << " (" << u << "," << v << ")\n";
      return kExitHolds;
    }
    if (fiber_cmd->parsed()) {
      Ordinal a = parse_ordinal(k_a);
      walks::FiberSet f = walks::rho_fiber(a, k_n);
      std::cout << "FIBER " << a.str() << " " << k_n << " {" << join_labels(f.members) << "}\n";
      return kExitHolds;
    }
    if (verify_cmd->parsed()) {
      VerifyResult r = verify_certificate_file(v_file);
      if (r.accepted) {
        std::cout << "VERIFIED " << r.kind << "\n";
        return kExitHolds;
      }
      std::cout << "REJECTED " << r.kind << ": " << r.reason << "\n";
      return kExitFails;
    }
  } catch (const ResourceGuardError& e) {
    std::cerr << "resource guard: " << e.what() << "\n";
    return kExitGuard;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "ordinal syntax error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
