#include "indshell/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "indshell/complex.hpp"
#include "indshell/conn.hpp"
#include "indshell/error.hpp"

namespace indshell {

using nlohmann::json;

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

Graph build_graph(long long n, const std::vector<std::pair<long long, long long>>& edges) {
  if (n < 0) parse_error("negative vertex count");
  if (n > kMaxVertices) throw Error(ErrorKind::TooLarge, "at most " + std::to_string(kMaxVertices) + " vertices");
  std::vector<Edge> es;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(u) + " " + std::to_string(v) + " leaves 0.." +
                                               std::to_string(n - 1));
    }
    es.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::from_edges(static_cast<int>(n), es);
}

LabeledGraph parse_text(std::string_view text) {
  std::vector<std::vector<long long>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string tok;
    while (fields >> tok) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) parse_error("line " + std::to_string(line_no) + ": '" + tok + "' is not an integer");
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (row.size() != 2) parse_error("line " + std::to_string(line_no) + ": expected two integers");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) parse_error("missing 'n m' header");
  const long long m = rows.front()[1];
  if (m < 0) parse_error("negative edge count");
  if (static_cast<long long>(rows.size()) - 1 != m) {
    parse_error("header announces " + std::to_string(m) + " edges, found " + std::to_string(rows.size() - 1));
  }
  std::vector<std::pair<long long, long long>> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) edges.emplace_back(rows[i][0], rows[i][1]);
  return with_index_labels(build_graph(rows.front()[0], edges));
}

LabeledGraph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    parse_error(std::string("JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) parse_error("JSON graph needs \"n\" and \"edges\"");
  try {
    const long long n = doc.at("n").get<long long>();
    std::vector<std::pair<long long, long long>> edges;
    for (const auto& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) parse_error("each edge must be a pair");
      edges.emplace_back(e[0].get<long long>(), e[1].get<long long>());
    }
    LabeledGraph out = with_index_labels(build_graph(n, edges));
    if (doc.contains("labels")) {
      auto labels = doc.at("labels").get<std::vector<std::string>>();
      if (static_cast<long long>(labels.size()) != n) parse_error("labels must name every vertex");
      out.labels = std::move(labels);
    }
    return out;
  } catch (const json::exception& e) {
    parse_error(std::string("JSON: ") + e.what());
  }
}

json set_json(VertexSet s) { return s.to_vector(); }

json family_json(const std::vector<VertexSet>& family) {
  json out = json::array();
  for (VertexSet s : family) out.push_back(set_json(s));
  return out;
}

VertexSet read_set(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int x = v.get<int>();
    if (x < 0 || x >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(x));
    s = s.with(x);
  }
  return s;
}

std::vector<VertexSet> read_family(const json& j) {
  std::vector<VertexSet> out;
  for (const auto& s : j) out.push_back(read_set(s));
  return out;
}

json header(const char* kind, const Graph& host, int r) {
  return json{{"kind", kind}, {"host_hash", host_hash(host)}, {"n", host.vertex_count()}, {"r", r}};
}

}  // namespace

LabeledGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_text(text);
}

LabeledGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

std::string to_text(const Graph& g) {
  auto edges = g.edges();
  std::sort(edges.begin(), edges.end());
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(edges.size()) + "\n";
  for (auto [u, v] : edges) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

std::string to_json(const LabeledGraph& g) {
  auto edges = g.graph.edges();
  std::sort(edges.begin(), edges.end());
  json doc{{"n", g.graph.vertex_count()}, {"edges", json::array()}};
  for (auto [u, v] : edges) doc["edges"].push_back({u, v});
  if (!g.labels.empty()) doc["labels"] = g.labels;
  return doc.dump();
}

std::string host_hash(const Graph& g) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : to_text(g)) h = (h ^ c) * 1099511628211ull;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string shelling_certificate(const Graph& host, int r, const ShellingCertificate& cert) {
  json doc = header("shelling_order", host, r);
  doc["order"] = family_json(cert.order);
  return doc.dump(2);
}

std::string bad_minor_certificate(const Graph& host, int r, const BadMinorCertificate& cert, bool contractions_only) {
  json doc = header("bad_minor", host, r);
  doc["contractions_only"] = contractions_only;
  doc["deleted"] = set_json(cert.spec.deleted);
  doc["contracted"] = set_json(cert.spec.contracted);
  doc["minor_vertices"] = set_json(cert.minor_vertices);
  doc["minor_edges"] = family_json(cert.minor_edges);
  return doc.dump(2);
}

std::string exhausted_search_certificate(const Graph& host, int r, std::uint64_t nodes) {
  json doc = header("exhausted_search", host, r);
  doc["nodes"] = nodes;
  return doc.dump(2);
}

CertificateCheck verify_certificate(const Graph& host, std::string_view certificate_json, std::uint64_t budget) {
  CertificateCheck out;
  json doc;
  try {
    doc = json::parse(certificate_json);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate: ") + e.what());
  }
  try {
    out.kind = doc.at("kind").get<std::string>();
    if (doc.at("host_hash").get<std::string>() != host_hash(host)) {
      out.reason = "host hash mismatch";
      return out;
    }
    const int r = doc.at("r").get<int>();
    if (out.kind == "shelling_order") {
      const SimplicialComplex d = ind_r_complex(host, r);
      const auto order = read_family(doc.at("order"));
      std::vector<VertexSet> sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != d.facets()) {
        out.reason = "order is not a permutation of the facets";
      } else if (!verify_shelling_by_definition(d, order)) {
        out.reason = "order is not a shelling";
      } else {
        out.valid = true;
      }
    } else if (out.kind == "bad_minor") {
      BadMinorCertificate cert{{read_set(doc.at("deleted")), read_set(doc.at("contracted"))},
                               read_set(doc.at("minor_vertices")),
                               read_family(doc.at("minor_edges"))};
      canonicalize(cert.minor_edges);
      if (doc.value("contractions_only", false) && !cert.spec.deleted.empty()) {
        out.reason = "contraction-only certificate deletes vertices";
      } else if (!verify_bad_minor(con_r(host, r), cert)) {
        out.reason = "minor does not reproduce or has a simplicial vertex";
      } else {
        out.valid = true;
      }
    } else if (out.kind == "exhausted_search") {
      const auto d = is_shellable(ind_r_complex(host, r), budget, Execution::Serial);
      out.valid = d.verdict == ShellingDecision::Verdict::NotShellable;
      if (!out.valid) out.reason = std::string("search now reports ") + std::string(to_string(d.verdict));
    } else {
      out.reason = "unknown certificate kind";
    }
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("certificate: ") + e.what());
  }
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << content;
  if (!content.empty() && content.back() != '\n') out << '\n';
}

}  // namespace indshell
