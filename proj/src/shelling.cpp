#include "indshell/shelling.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "indshell/error.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indshell {

std::uint64_t default_budget() {
  if (const char* env = std::getenv("INDSHELL_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultBudget;
}

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::string_view to_string(ShellingDecision::Verdict v) {
  switch (v) {
    case ShellingDecision::Verdict::Shellable: return "Shellable";
    case ShellingDecision::Verdict::NotShellable: return "NotShellable";
    case ShellingDecision::Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

bool extends_shelling(VertexSet facet, const std::vector<VertexSet>& earlier) {
  if (earlier.empty()) return true;
  // Vertices v with F \ {v} inside some earlier facet.
  VertexSet ridge_gaps;
  for (VertexSet g : earlier) {
    VertexSet missing = facet - g;
    if (missing.size() == 1) ridge_gaps |= missing;
  }
  return std::all_of(earlier.begin(), earlier.end(), [&](VertexSet g) { return (facet - g).intersects(ridge_gaps); });
}

bool extends_shelling_by_definition(VertexSet facet, const std::vector<VertexSet>& earlier) {
  if (earlier.empty()) return true;
  std::vector<VertexSet> meets;
  meets.reserve(earlier.size());
  for (VertexSet g : earlier) meets.push_back(facet & g);
  for (VertexSet m : maximal_sets(std::move(meets))) {
    if (m.size() != facet.size() - 1) return false;
  }
  return true;
}

namespace {

void require_permutation(const SimplicialComplex& d, const std::vector<VertexSet>& order) {
  std::vector<VertexSet> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != d.facets()) throw Error(ErrorKind::InvalidOrder, "order is not a permutation of the facets");
}

template <typename Step>
bool verify_with(const SimplicialComplex& d, const std::vector<VertexSet>& order, Step step) {
  require_permutation(d, order);
  std::vector<VertexSet> prefix;
  for (VertexSet f : order) {
    if (!step(f, prefix)) return false;
    prefix.push_back(f);
  }
  return true;
}

using PlacedKey = std::vector<std::uint64_t>;

struct PlacedKeyHash {
  std::size_t operator()(const PlacedKey& k) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : k) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

// Facets sorted by size descending, then lexicographically.
std::vector<VertexSet> search_order(const SimplicialComplex& d) {
  std::vector<VertexSet> fs = d.facets();
  std::stable_sort(fs.begin(), fs.end(), [](VertexSet a, VertexSet b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return fs;
}

class ShellingSearch {
 public:
  enum class Result { Found, Exhausted, OutOfBudget, Cancelled };

  ShellingSearch(const std::vector<VertexSet>& facets, std::uint64_t budget, const std::atomic<int>* cancel_above,
                 int task_index)
      : facets_(facets),
        budget_(budget),
        placed_((facets.size() + 63) / 64, 0),
        cancel_above_(cancel_above),
        task_index_(task_index) {}

  Result run_from(std::size_t first) {
    place(first);
    Result r = descend();
    if (r != Result::Found) unplace(first);
    return r;
  }

  Result run() { return descend(); }

  std::uint64_t nodes() const { return nodes_; }
  const std::vector<VertexSet>& order() const { return order_; }

 private:
  void place(std::size_t i) {
    placed_[i / 64] |= std::uint64_t{1} << (i % 64);
    order_.push_back(facets_[i]);
  }
  void unplace(std::size_t i) {
    placed_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    order_.pop_back();
  }
  bool is_placed(std::size_t i) const { return (placed_[i / 64] >> (i % 64)) & 1u; }

  Result descend() {
    if (order_.size() == facets_.size()) return Result::Found;
    if (++nodes_ > budget_) return Result::OutOfBudget;
    if (cancel_above_ != nullptr && (nodes_ & 1023u) == 0 &&
        cancel_above_->load(std::memory_order_relaxed) < task_index_) {
      return Result::Cancelled;
    }
    if (dead_.contains(placed_)) return Result::Exhausted;

    // Only facets of the largest remaining dimension are candidates.
    std::size_t first_free = 0;
    while (is_placed(first_free)) ++first_free;
    const int size = facets_[first_free].size();
    for (std::size_t i = first_free; i < facets_.size() && facets_[i].size() == size; ++i) {
      if (is_placed(i) || !extends_shelling(facets_[i], order_)) continue;
      place(i);
      Result r = descend();
      if (r == Result::Found) return r;
      unplace(i);
      if (r != Result::Exhausted) return r;
    }
    dead_.insert(placed_);
    return Result::Exhausted;
  }

  const std::vector<VertexSet>& facets_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  PlacedKey placed_;
  std::vector<VertexSet> order_;
  std::unordered_set<PlacedKey, PlacedKeyHash> dead_;
  const std::atomic<int>* cancel_above_;
  int task_index_;
};

ShellingDecision trivially_shellable(const SimplicialComplex& d) {
  ShellingDecision out;
  out.verdict = ShellingDecision::Verdict::Shellable;
  out.certificate = ShellingCertificate{d.facets(), true};
  return out;
}

ShellingDecision finish(const std::vector<VertexSet>& order, std::uint64_t nodes, const SimplicialComplex& d) {
  ShellingDecision out;
  out.verdict = ShellingDecision::Verdict::Shellable;
  out.nodes = nodes;
  out.certificate = ShellingCertificate{order, verify_shelling(d, order)};
  return out;
}

ShellingDecision serial_search(const SimplicialComplex& d, std::uint64_t budget) {
  const std::vector<VertexSet> facets = search_order(d);
  ShellingSearch search(facets, budget, nullptr, 0);
  const auto r = search.run();
  if (r == ShellingSearch::Result::Found) return finish(search.order(), search.nodes(), d);
  ShellingDecision out;
  out.nodes = search.nodes();
  out.verdict = r == ShellingSearch::Result::Exhausted ? ShellingDecision::Verdict::NotShellable
                                                       : ShellingDecision::Verdict::Unknown;
  return out;
}

// One task per admissible first facet. The reported certificate is the one
// from the lowest-index successful task, which is what the serial search
// returns when neither run hits the budget.
ShellingDecision parallel_search(const SimplicialComplex& d, std::uint64_t budget) {
  const std::vector<VertexSet> facets = search_order(d);
  const int top = facets.front().size();
  int tasks = 0;
  while (tasks < static_cast<int>(facets.size()) && facets[static_cast<std::size_t>(tasks)].size() == top) ++tasks;

  std::vector<ShellingSearch::Result> results(static_cast<std::size_t>(tasks), ShellingSearch::Result::Cancelled);
  std::vector<std::vector<VertexSet>> orders(static_cast<std::size_t>(tasks));
  std::vector<std::uint64_t> nodes(static_cast<std::size_t>(tasks), 0);
  std::atomic<int> best{INT_MAX};

#pragma omp parallel for schedule(dynamic, 1)
  for (int t = 0; t < tasks; ++t) {
    if (best.load() < t) continue;
    ShellingSearch search(facets, budget, &best, t);
    const auto r = search.run_from(static_cast<std::size_t>(t));
    results[static_cast<std::size_t>(t)] = r;
    nodes[static_cast<std::size_t>(t)] = search.nodes();
    if (r == ShellingSearch::Result::Found) {
      orders[static_cast<std::size_t>(t)] = search.order();
      int cur = best.load();
      while (t < cur && !best.compare_exchange_weak(cur, t)) {
      }
    }
  }

  std::uint64_t total = 0;
  for (std::uint64_t n : nodes) total += n;
  bool unknown = false;
  for (int t = 0; t < tasks; ++t) {
    const auto r = results[static_cast<std::size_t>(t)];
    if (r == ShellingSearch::Result::Found) return finish(orders[static_cast<std::size_t>(t)], total, d);
    if (r == ShellingSearch::Result::OutOfBudget) unknown = true;
  }
  ShellingDecision out;
  out.nodes = total;
  out.verdict = unknown ? ShellingDecision::Verdict::Unknown : ShellingDecision::Verdict::NotShellable;
  return out;
}

}  // namespace

bool verify_shelling(const SimplicialComplex& d, const std::vector<VertexSet>& order) {
  return verify_with(d, order, extends_shelling);
}

bool verify_shelling_by_definition(const SimplicialComplex& d, const std::vector<VertexSet>& order) {
  return verify_with(d, order, extends_shelling_by_definition);
}

ShellingDecision is_shellable(const SimplicialComplex& d, std::uint64_t budget, Execution exec) {
  if (d.facet_count() <= 1) return trivially_shellable(d);
  return exec == Execution::Parallel ? parallel_search(d, budget) : serial_search(d, budget);
}

ShellingDecision brute_force_shellable(const SimplicialComplex& d, int max_facets) {
  if (d.facet_count() > max_facets) {
    throw Error(ErrorKind::TooLarge, std::to_string(d.facet_count()) + " facets exceed the brute-force limit of " +
                                         std::to_string(max_facets));
  }
  if (d.facet_count() <= 1) return trivially_shellable(d);
  std::vector<VertexSet> order = d.facets();  // sorted, so permutations run lexicographically
  ShellingDecision out;
  do {
    ++out.nodes;
    if (verify_shelling_by_definition(d, order)) {
      out.verdict = ShellingDecision::Verdict::Shellable;
      out.certificate = ShellingCertificate{order, true};
      return out;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  out.verdict = ShellingDecision::Verdict::NotShellable;
  return out;
}

}  // namespace indshell
