#include "indshell/vertex_set.hpp"

#include <algorithm>

#include "indshell/error.hpp"

namespace indshell {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidVertex: return "InvalidVertex";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::InvalidEdge: return "InvalidEdge";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::EmptyEdgeCollapse: return "EmptyEdgeCollapse";
    case ErrorKind::NotAFace: return "NotAFace";
    case ErrorKind::InvalidOrder: return "InvalidOrder";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAVertexCover: return "NotAVertexCover";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::NoQualifyingClique: return "NoQualifyingClique";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Error";
}

VertexSet::VertexSet(std::initializer_list<Vertex> vs) {
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "label " + std::to_string(v));
    bits_ |= std::uint64_t{1} << v;
  }
}

VertexSet VertexSet::range(int n) {
  if (n < 0 || n > kMaxVertices) throw Error(ErrorKind::TooLarge, std::to_string(n) + " vertices");
  if (n == kMaxVertices) return VertexSet(~std::uint64_t{0});
  return VertexSet((std::uint64_t{1} << n) - 1);
}

VertexSet VertexSet::from(const std::vector<Vertex>& vs) {
  VertexSet s;
  for (Vertex v : vs) {
    if (v < 0 || v >= kMaxVertices) throw Error(ErrorKind::InvalidVertex, "label " + std::to_string(v));
    s = s.with(v);
  }
  return s;
}

std::vector<Vertex> VertexSet::to_vector() const { return {begin(), end()}; }

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : *this) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

void canonicalize(std::vector<VertexSet>& family) {
  std::sort(family.begin(), family.end());
  family.erase(std::unique(family.begin(), family.end()), family.end());
}

std::vector<VertexSet> minimal_sets(std::vector<VertexSet> family) {
  // Sorting by size first means a set can only be absorbed by an earlier one.
  std::sort(family.begin(), family.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : family) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return k.subset_of(s); });
    if (!absorbed) kept.push_back(s);
  }
  canonicalize(kept);
  return kept;
}

std::vector<VertexSet> maximal_sets(std::vector<VertexSet> family) {
  std::sort(family.begin(), family.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a.bits() < b.bits();
  });
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<VertexSet> kept;
  for (VertexSet s : family) {
    bool absorbed = std::any_of(kept.begin(), kept.end(), [s](VertexSet k) { return s.subset_of(k); });
    if (!absorbed) kept.push_back(s);
  }
  canonicalize(kept);
  return kept;
}

}  // namespace indshell
