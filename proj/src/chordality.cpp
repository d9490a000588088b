#include "indshell/chordality.hpp"

#include <algorithm>
#include <climits>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indshell {

std::string_view to_string(ChordalityDecision::Verdict v) {
  switch (v) {
    case ChordalityDecision::Verdict::Holds: return "Holds";
    case ChordalityDecision::Verdict::Fails: return "Fails";
    case ChordalityDecision::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

MinorCursor::MinorCursor(const Hypergraph& host, bool contractions_only)
    : host_(host), contractions_only_(contractions_only), items_(host.vertices().to_vector()) {}

bool MinorCursor::advance_raw(MinorSpec& spec) {
  const int n = static_cast<int>(items_.size());
  if (done_) return false;
  if (!started_) {
    started_ = true;
    k_ = 0;
    idx_.clear();
    mask_ = 0;
  } else if (!contractions_only_ && mask_ + 1 < (std::uint64_t{1} << k_)) {
    ++mask_;
  } else {
    mask_ = 0;
    int pos = k_ - 1;
    while (pos >= 0 && idx_[static_cast<std::size_t>(pos)] == n - k_ + pos) --pos;
    if (pos >= 0) {
      ++idx_[static_cast<std::size_t>(pos)];
      for (int i = pos + 1; i < k_; ++i) idx_[static_cast<std::size_t>(i)] = idx_[static_cast<std::size_t>(i - 1)] + 1;
    } else {
      ++k_;
      // Touching every vertex leaves an empty minor, which is not examined.
      if (k_ >= n) {
        done_ = true;
        return false;
      }
      idx_.resize(static_cast<std::size_t>(k_));
      for (int i = 0; i < k_; ++i) idx_[static_cast<std::size_t>(i)] = i;
    }
  }
  if (n == 0) {
    done_ = true;
    return false;
  }
  spec = MinorSpec{};
  for (int i = 0; i < k_; ++i) {
    const Vertex v = items_[static_cast<std::size_t>(idx_[static_cast<std::size_t>(i)])];
    if ((mask_ >> i) & 1u) {
      spec.deleted = spec.deleted.with(v);
    } else {
      spec.contracted = spec.contracted.with(v);
    }
  }
  return true;
}

bool MinorCursor::next(MinorSpec& spec) {
  while (advance_raw(spec)) {
    if (minor_is_defined(host_, spec)) return true;
  }
  return false;
}

namespace {

struct MinorKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : k) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

using MinorMemo = std::unordered_set<std::vector<std::uint64_t>, MinorKeyHash>;

std::vector<std::uint64_t> minor_key(const Hypergraph& m) {
  std::vector<std::uint64_t> key;
  key.reserve(m.edges().size() + 1);
  key.push_back(m.vertices().bits());
  for (VertexSet e : m.edges()) key.push_back(e.bits());
  return key;
}

// True when the minor has a simplicial vertex; memo holds minors already
// known to have one.
bool minor_is_fine(const Hypergraph& m, MinorMemo& memo) {
  auto key = minor_key(m);
  if (memo.contains(key)) return true;
  if (!has_hyper_simplicial_vertex(m)) return false;
  memo.insert(std::move(key));
  return true;
}

ChordalityDecision failure(const Hypergraph& h, const MinorSpec& spec, std::uint64_t examined) {
  const Hypergraph m = minor(h, spec);
  ChordalityDecision out;
  out.verdict = ChordalityDecision::Verdict::Fails;
  out.minors_examined = examined;
  out.certificate = BadMinorCertificate{spec, m.vertices(), m.edges()};
  return out;
}

ChordalityDecision serial_scan(const Hypergraph& h, std::uint64_t budget, bool contractions_only) {
  MinorCursor cursor(h, contractions_only);
  MinorMemo memo;
  MinorSpec spec;
  ChordalityDecision out;
  while (cursor.next(spec)) {
    if (++out.minors_examined > budget) {
      out.verdict = ChordalityDecision::Verdict::Unknown;
      return out;
    }
    if (!minor_is_fine(minor(h, spec), memo)) return failure(h, spec, out.minors_examined);
  }
  out.verdict = ChordalityDecision::Verdict::Holds;
  return out;
}

// Pulls specs from the cursor in fixed-size batches and checks each batch in
// parallel. The first failing spec of the earliest failing batch is reported,
// so the certificate matches the serial scan.
ChordalityDecision parallel_scan(const Hypergraph& h, std::uint64_t budget, bool contractions_only) {
  constexpr std::size_t kBatch = 2048;
  MinorCursor cursor(h, contractions_only);
  std::vector<MinorMemo> memos(static_cast<std::size_t>(worker_count()));
  std::vector<MinorSpec> batch;
  batch.reserve(kBatch);
  ChordalityDecision out;
  bool exhausted = false;
  bool capped = false;
  while (!exhausted && !capped) {
    batch.clear();
    MinorSpec spec;
    while (batch.size() < kBatch) {
      if (!cursor.next(spec)) {
        exhausted = true;
        break;
      }
      if (out.minors_examined + batch.size() >= budget) {
        capped = true;
        break;
      }
      batch.push_back(spec);
    }
    int first_bad = INT_MAX;
    const int count = static_cast<int>(batch.size());
#pragma omp parallel for schedule(dynamic, 64) reduction(min : first_bad)
    for (int i = 0; i < count; ++i) {
      if (i > first_bad) continue;
#ifdef _OPENMP
      MinorMemo& memo = memos[static_cast<std::size_t>(omp_get_thread_num())];
#else
      MinorMemo& memo = memos.front();
#endif
      if (!minor_is_fine(minor(h, batch[static_cast<std::size_t>(i)]), memo)) first_bad = std::min(first_bad, i);
    }
    if (first_bad != INT_MAX) {
      return failure(h, batch[static_cast<std::size_t>(first_bad)], out.minors_examined + static_cast<std::uint64_t>(first_bad) + 1);
    }
    out.minors_examined += batch.size();
  }
  if (capped) {
    out.minors_examined = budget + 1;
    out.verdict = ChordalityDecision::Verdict::Unknown;
    return out;
  }
  out.verdict = ChordalityDecision::Verdict::Holds;
  return out;
}

ChordalityDecision scan(const Hypergraph& h, std::uint64_t budget, Execution exec, bool contractions_only) {
  return exec == Execution::Parallel ? parallel_scan(h, budget, contractions_only)
                                     : serial_scan(h, budget, contractions_only);
}

}  // namespace

ChordalityDecision is_w_chordal(const Hypergraph& h, std::uint64_t budget, Execution exec) {
  return scan(h, budget, exec, false);
}

ChordalityDecision every_contraction_simplicial(const Hypergraph& h, std::uint64_t budget, Execution exec) {
  return scan(h, budget, exec, true);
}

bool verify_bad_minor(const Hypergraph& host, const BadMinorCertificate& cert) {
  if (!minor_is_defined(host, cert.spec)) return false;
  const Hypergraph m = minor(host, cert.spec);
  if (m.vertices() != cert.minor_vertices || m.edges() != cert.minor_edges) return false;
  return !m.vertices().empty() && !has_hyper_simplicial_vertex(m);
}

std::vector<Contraction> c_prime_minor_stream(const Graph& g, int r) {
  return enumerate_contractions(con_r(g, r), ContractionFilter::CPrime);
}

bool hereditary_c_prime_simplicial(const Graph& g, int r) {
  bool ok = true;
  for_each_subset_by_size(g.vertices(), [&](VertexSet a) {
    if (a.empty()) return true;
    const Graph sub = induced_subgraph(g, a).graph;
    for_each_contraction(con_r(sub, r), ContractionFilter::CPrime, [&](VertexSet, const Hypergraph& m) {
      if (ok && !m.vertices().empty() && !has_hyper_simplicial_vertex(m)) ok = false;
    });
    return ok;
  });
  return ok;
}

}  // namespace indshell
