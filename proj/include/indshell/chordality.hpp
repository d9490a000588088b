#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "indshell/conn.hpp"
#include "indshell/execution.hpp"
#include "indshell/hypergraph.hpp"

namespace indshell {

/// A minor with no simplicial vertex, together with the spec that produced it.
struct BadMinorCertificate {
  MinorSpec spec;
  VertexSet minor_vertices;
  std::vector<VertexSet> minor_edges;
};

struct ChordalityDecision {
  /// Holds: every examined minor has a simplicial vertex (w-chordal, or
  /// "every contraction simplicial" for the contraction-only check).
  enum class Verdict { Holds, Fails, Unknown };

  Verdict verdict = Verdict::Unknown;
  std::optional<BadMinorCertificate> certificate;
  std::uint64_t minors_examined = 0;

  bool holds() const { return verdict == Verdict::Holds; }
};

std::string_view to_string(ChordalityDecision::Verdict v);

/// Walks minor specs in canonical order: by |V_d|+|V_c|, then by the sorted
/// list of touched vertices, then by the deletion mask over that list
/// (all-contracted first). Specs leaving no vertex are skipped; so are specs
/// whose contraction would create the empty edge.
class MinorCursor {
 public:
  MinorCursor(const Hypergraph& host, bool contractions_only);

  /// Advances to the next defined spec; false when the walk is over.
  bool next(MinorSpec& spec);

 private:
  bool advance_raw(MinorSpec& spec);

  const Hypergraph& host_;
  bool contractions_only_;
  std::vector<Vertex> items_;
  int k_ = 0;
  std::vector<int> idx_;
  std::uint64_t mask_ = 0;
  bool started_ = false;
  bool done_ = false;
};

/// Decides w-chordality: every minor (nonempty vertex set) has a simplicial
/// vertex. On failure the certificate is the first bad minor in cursor order.
ChordalityDecision is_w_chordal(const Hypergraph& h, std::uint64_t budget = kDefaultBudget,
                                Execution exec = Execution::Parallel);

/// Same check restricted to contractions (V_d = ∅).
ChordalityDecision every_contraction_simplicial(const Hypergraph& h, std::uint64_t budget = kDefaultBudget,
                                                Execution exec = Execution::Parallel);

/// True iff applying the certificate's spec to `host` reproduces its minor and
/// that minor has no simplicial vertex.
bool verify_bad_minor(const Hypergraph& host, const BadMinorCertificate& cert);

/// c'-minors of con_r(G): contractions without singleton edges.
std::vector<Contraction> c_prime_minor_stream(const Graph& g, int r);

/// For every induced subgraph G[A], every c'-minor of con_r(G[A]) has a
/// simplicial vertex. By the deletion-hierarchy argument this implies
/// con_r(G) is w-chordal.
bool hereditary_c_prime_simplicial(const Graph& g, int r);

}  // namespace indshell
