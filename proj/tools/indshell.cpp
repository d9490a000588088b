// indshell: command-line front end.
// Exit codes: 0 property holds, 1 property fails, 2 usage or I/O error, 3 budget exhausted.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indshell/chordality.hpp"
#include "indshell/complex.hpp"
#include "indshell/conn.hpp"
#include "indshell/constructions.hpp"
#include "indshell/error.hpp"
#include "indshell/io.hpp"
#include "indshell/shelling.hpp"
#include "indshell/suites.hpp"

using namespace indshell;

namespace {

constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Source {
  std::string graph_path;
  std::string construct;
  int r = -1;
  int t = -1;
  int n = -1;
  std::vector<int> sizes;
};

void add_source(CLI::App* cmd, Source& s, bool need_r) {
  cmd->add_option("--graph", s.graph_path, "graph file (text or JSON)");
  cmd->add_option("--construct", s.construct, "named construction: gt, t3, she-higher, whiskered-c4, star-clique, clique-path, clique-cycle");
  auto* r = cmd->add_option("--r", s.r, "the r of ind_r / con_r");
  if (need_r) r->required();
  cmd->add_option("--t", s.t, "construction parameter t");
  cmd->add_option("--n", s.n, "construction parameter n");
  cmd->add_option("--sizes", s.sizes, "clique sizes")->delimiter(',');
}

LabeledGraph construct(const std::string& family, const Source& s) {
  if (family == "gt") {
    const int r = s.r >= 0 ? s.r : 4;
    return counterexample_gt_paths(r, s.t >= 0 ? s.t : std::max(1, r - 3));
  }
  if (family == "t3") return t3_graph();
  if (family == "she-higher") return she_higher_family(s.n >= 0 ? s.n : 2, s.t >= 0 ? s.t : 1).g;
  if (family == "she-higher-host") return she_higher_family(s.n >= 0 ? s.n : 2, s.t >= 0 ? s.t : 1).h;
  if (family == "whiskered-c4") {
    LabeledGraph c4 = clique_cycle({2, 2, 2, 2}).graph;
    for (Vertex v = 0; v < 4; ++v) c4.labels[static_cast<std::size_t>(v)] = "x" + std::to_string(v + 1);
    return whiskered(c4);
  }
  if (family == "star-clique") return star_clique(s.sizes);
  if (family == "clique-path") return clique_path(s.sizes).graph;
  if (family == "clique-cycle") return clique_cycle(s.sizes).graph;
  if (family == "whiskered" && !s.graph_path.empty()) return whiskered(load_graph(s.graph_path));
  throw Error(ErrorKind::InvalidInput, "unknown construction '" + family + "'");
}

LabeledGraph load(const Source& s) {
  if (!s.graph_path.empty() && !s.construct.empty() && s.construct != "whiskered") {
    throw Error(ErrorKind::InvalidInput, "give either --graph or --construct");
  }
  if (!s.construct.empty()) return construct(s.construct, s);
  if (s.graph_path.empty()) throw Error(ErrorKind::InvalidInput, "missing --graph or --construct");
  return load_graph(s.graph_path);
}

std::string name_set(const LabeledGraph& g, VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (Vertex v : s) {
    out += (first ? "" : ",") + g.label(v);
    first = false;
  }
  return out + "}";
}

void print_family(const LabeledGraph& g, const std::vector<VertexSet>& family) {
  for (VertexSet s : family) std::cout << name_set(g, s) << "\n";
}

// Comma-separated labels or indices.
VertexSet parse_vertices(const LabeledGraph& g, const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    try {
      out = out.with(g.vertex(item));
    } catch (const Error&) {
      std::size_t used = 0;
      int v = -1;
      try {
        v = std::stoi(item, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != item.size() || v < 0 || v >= g.graph.vertex_count()) {
        throw Error(ErrorKind::InvalidVertex, "no vertex '" + item + "'");
      }
      out = out.with(v);
    }
  }
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int verify_cert(const LabeledGraph& g, const std::string& path, std::uint64_t budget) {
  const CertificateCheck check = verify_certificate(g.graph, slurp(path), budget);
  std::cout << (check.valid ? "valid " : "invalid ") << check.kind << (check.reason.empty() ? "" : ": " + check.reason)
            << "\n";
  return check.valid ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indshell: higher independence complexes, shellability and w-chordality"};
  app.require_subcommand(1);

  Source src;
  std::uint64_t budget = default_budget();
  std::string out_path;
  std::string cert_path;
  bool serial = false;

  auto* conr = app.add_subcommand("conr", "print the edges of con_r(G)");
  add_source(conr, src, true);

  auto* indr = app.add_subcommand("indr", "summarise ind_r(G)");
  add_source(indr, src, true);

  auto* facets = app.add_subcommand("facets", "list the facets of ind_r(G)");
  add_source(facets, src, true);

  bool dump_facets = false;
  auto* shellable = app.add_subcommand("shellable", "decide shellability of ind_r(G)");
  add_source(shellable, src, true);
  shellable->add_option("--budget", budget, "search node budget");
  shellable->add_option("--out", out_path, "write the certificate here");
  shellable->add_option("--verify-cert", cert_path, "re-verify a certificate instead of searching");
  shellable->add_flag("--dump-facets", dump_facets, "print the facets");
  shellable->add_flag("--serial", serial, "use the serial reference search");

  bool contractions_only = false;
  auto* wchordal = app.add_subcommand("wchordal", "decide w-chordality of con_r(G)");
  add_source(wchordal, src, true);
  wchordal->add_option("--budget", budget, "minor budget");
  wchordal->add_option("--out", out_path, "write the bad-minor certificate here");
  wchordal->add_option("--verify-cert", cert_path, "re-verify a certificate instead of searching");
  wchordal->add_flag("--contractions-only", contractions_only, "only contractions (every c-minor simplicial)");
  wchordal->add_flag("--serial", serial, "use the serial reference scan");

  std::string family;
  std::string format = "text";
  auto* build = app.add_subcommand("construct", "print a named construction");
  build->add_option("family", family, "gt, t3, she-higher, she-higher-host, whiskered-c4, star-clique, clique-path, clique-cycle, whiskered")
      ->required();
  add_source(build, src, false);
  build->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string suite;
  SuiteOptions opts;
  bool list = false;
  auto* verify = app.add_subcommand("verify", "run a theorem suite and print its report");
  verify->add_option("suite", suite, "suite id (see --list)");
  verify->add_flag("--list", list, "list registered suites");
  verify->add_option("--seed", opts.seed, "sampling seed");
  verify->add_option("--samples", opts.samples, "sample count");
  verify->add_option("--max-n", opts.max_n, "largest order");
  verify->add_option("--budget", budget, "node budget per instance");
  verify->add_option("--out", opts.out_dir, "certificate directory");
  verify->add_option("--r", opts.r, "suite parameter r");
  verify->add_option("--t", opts.t, "suite parameter t");
  verify->add_option("--n", opts.n, "suite parameter n");
  verify->add_flag("--per-component", opts.per_component, "tree-lower: also probe the per-component reading");
  verify->add_flag("--full-search", opts.full_search, "she-higher: also search ind_r(G) itself");

  std::string face;
  auto* lk = app.add_subcommand("link", "link of a face in ind_r(G)");
  add_source(lk, src, true);
  lk->add_option("--face", face, "comma-separated vertices")->required();

  std::string del;
  std::string con;
  auto* mnr = app.add_subcommand("minor", "a minor of con_r(G) and its simplicial vertices (exit 1 when none)");
  add_source(mnr, src, true);
  mnr->add_option("--delete", del, "comma-separated vertices to delete");
  mnr->add_option("--contract", con, "comma-separated vertices to contract");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*conr) {
      const LabeledGraph g = load(src);
      const Hypergraph h = con_r(g.graph, src.r);
      std::cout << h.edge_count() << " edges\n";
      print_family(g, h.edges());
      return kTrue;
    }
    if (*indr || *facets) {
      const LabeledGraph g = load(src);
      const SimplicialComplex d = ind_r_complex(g.graph, src.r);
      if (*indr) {
        std::cout << "facets " << d.facet_count() << "\ndimension " << d.dimension() << "\npure "
                  << (d.is_pure() ? "yes" : "no") << "\n";
      } else {
        print_family(g, d.facets());
      }
      return kTrue;
    }
    if (*shellable) {
      const LabeledGraph g = load(src);
      if (!cert_path.empty()) return verify_cert(g, cert_path, budget);
      const SimplicialComplex d = ind_r_complex(g.graph, src.r);
      const ShellingDecision dec = is_shellable(d, budget, serial ? Execution::Serial : Execution::Parallel);
      std::cout << to_string(dec.verdict) << "\n";
      if (dump_facets) print_family(g, d.facets());
      if (dec.shellable() && dec.certificate && dump_facets) {
        std::cout << "order:\n";
        print_family(g, dec.certificate->order);
      }
      if (!out_path.empty()) {
        if (dec.shellable()) write_file(out_path, shelling_certificate(g.graph, src.r, *dec.certificate));
        if (dec.verdict == ShellingDecision::Verdict::NotShellable) {
          write_file(out_path, exhausted_search_certificate(g.graph, src.r, dec.nodes));
        }
      }
      if (dec.verdict == ShellingDecision::Verdict::Unknown) return kUnknown;
      return dec.shellable() ? kTrue : kFalse;
    }
    if (*wchordal) {
      const LabeledGraph g = load(src);
      if (!cert_path.empty()) return verify_cert(g, cert_path, budget);
      const Hypergraph h = con_r(g.graph, src.r);
      const Execution exec = serial ? Execution::Serial : Execution::Parallel;
      const ChordalityDecision dec =
          contractions_only ? every_contraction_simplicial(h, budget, exec) : is_w_chordal(h, budget, exec);
      const char* word = dec.holds() ? (contractions_only ? "EveryContractionSimplicial" : "WChordal")
                         : dec.verdict == ChordalityDecision::Verdict::Fails
                             ? (contractions_only ? "ContractionWithoutSimplicialVertex" : "NotWChordal")
                             : "Unknown";
      std::cout << word << " (" << dec.minors_examined << " minors)\n";
      if (dec.certificate) {
        const auto& c = *dec.certificate;
        std::cout << "deleted " << name_set(g, c.spec.deleted) << "\ncontracted " << name_set(g, c.spec.contracted)
                  << "\nminor edges:\n";
        print_family(g, c.minor_edges);
        if (!out_path.empty()) write_file(out_path, bad_minor_certificate(g.graph, src.r, c, contractions_only));
      }
      if (dec.verdict == ChordalityDecision::Verdict::Unknown) return kUnknown;
      return dec.holds() ? kTrue : kFalse;
    }
    if (*build) {
      const LabeledGraph g = construct(family, src);
      std::cout << (format == "json" ? to_json(g) + "\n" : to_text(g.graph));
      return kTrue;
    }
    if (*verify) {
      if (list) {
        for (const auto& s : registered_suites()) std::cout << s.id << "\t" << s.expectation << "\t" << s.summary << "\n";
        return kTrue;
      }
      if (suite.empty()) throw Error(ErrorKind::InvalidInput, "missing suite id");
      opts.budget = budget;
      const auto start = std::chrono::steady_clock::now();
      const RunReport report = run_suite(suite, opts);
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      std::cout << report.to_json() << "\n";
      std::cerr << suite << ": " << report.instances << " instances in " << secs << " s\n";
      if (report.ok()) return kTrue;
      const bool only_unknown = report.fail == 0 && report.oracle_disagreements == 0 && report.chain_violations == 0 &&
                                std::all_of(report.checks.begin(), report.checks.end(), [](const auto& kv) { return kv.second; });
      return only_unknown ? kUnknown : kFalse;
    }
    if (*lk) {
      const LabeledGraph g = load(src);
      const SimplicialComplex l = link(ind_r_complex(g.graph, src.r), parse_vertices(g, face));
      print_family(g, l.facets());
      return kTrue;
    }
    if (*mnr) {
      const LabeledGraph g = load(src);
      const MinorSpec spec{parse_vertices(g, del), parse_vertices(g, con)};
      const Hypergraph m = minor(con_r(g.graph, src.r), spec);
      std::cout << "vertices " << name_set(g, m.vertices()) << "\nedges:\n";
      print_family(g, m.edges());
      const VertexSet simp = hyper_simplicial_vertices(m);
      std::cout << "simplicial " << name_set(g, simp) << "\n";
      return simp.empty() ? kFalse : kTrue;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
