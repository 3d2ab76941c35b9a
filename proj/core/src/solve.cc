#include "klab/solve.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <thread>

#include "klab/error.h"
#include "klab/verify.h"

namespace klab {
namespace {

using Clock = std::chrono::steady_clock;

constexpr int kMaxColors = 64;
using ColorMask = std::uint64_t;

ColorMask first_colors(int c) {
  return c >= kMaxColors ? ~ColorMask{0} : (ColorMask{1} << c) - 1;
}

// Shared between the levels of one worker and across portfolio workers.
struct Budget {
  std::uint64_t max_nodes = 0;
  std::optional<Clock::time_point> deadline;
  std::atomic<bool>* stop = nullptr;
};

enum class Outcome { kFeasible, kInfeasible, kNodeLimit, kTimeLimit, kStopped };

// Backtracking search for a proper coloring with at most `colors` colors.
//
// Per edge the search keeps the number of assigned endpoints and, while they
// all agree, their common color. An edge whose last unassigned endpoint is
// reached with all others in color c forbids c for that endpoint (forward
// checking); a vertex whose domain empties fails the branch immediately.
class ColoringSearch {
 public:
  ColoringSearch(const Hypergraph& h, std::span<const std::uint32_t> tie_rank)
      : h_(h), tie_rank_(tie_rank.begin(), tie_rank.end()) {
    const std::size_t v = h.num_vertices();
    incident_.resize(v);
    for (std::size_t e = 0; e < h.edges.size(); ++e) {
      for (VertexId u : h.edges[e]) incident_[u].push_back(static_cast<std::uint32_t>(e));
    }
    degree_.resize(v);
    for (std::size_t u = 0; u < v; ++u) degree_[u] = static_cast<std::uint32_t>(incident_[u].size());
  }

  Outcome run(int colors, Budget& budget, std::uint64_t& nodes, std::vector<int>& solution) {
    colors_ = colors;
    budget_ = &budget;
    nodes_ = &nodes;
    const std::size_t v = h_.num_vertices();
    color_.assign(v, -1);
    forbid_count_.assign(v * kMaxColors, 0);
    forbidden_.assign(v, 0);
    edge_assigned_.assign(h_.edges.size(), 0);
    edge_color_.assign(h_.edges.size(), kNone);
    trail_.clear();
    assigned_ = 0;
    // A singleton edge can never be properly colored.
    for (const Edge& e : h_.edges) {
      if (e.size() < 2) return Outcome::kInfeasible;
    }
    if (v == 0) {
      solution.clear();
      return Outcome::kFeasible;
    }
    if (colors <= 0) return Outcome::kInfeasible;
    const Outcome out = search(0);
    if (out == Outcome::kFeasible) solution = color_;
    return out;
  }

 private:
  static constexpr int kNone = -1;
  static constexpr int kMixed = -2;

  struct TrailEntry {
    enum Kind : std::uint8_t { kEdge, kForbid } kind;
    std::uint32_t index;
    int a;
    int b;
  };

  Outcome search(int used) {
    if (assigned_ == h_.num_vertices()) return Outcome::kFeasible;
    if (const auto stop = check_budget()) return *stop;

    const int open = std::min(used + 1, colors_);
    const ColorMask window = first_colors(open);
    // Most constrained first: fewest available colors, then most incident
    // edges, then lowest tie rank.
    std::size_t best = h_.num_vertices();
    int best_avail = kMaxColors + 1;
    for (std::size_t u = 0; u < h_.num_vertices(); ++u) {
      if (color_[u] != -1) continue;
      const int avail = std::popcount(window & ~forbidden_[u]);
      if (best == h_.num_vertices() || avail < best_avail ||
          (avail == best_avail &&
           (degree_[u] > degree_[best] ||
            (degree_[u] == degree_[best] && tie_rank_[u] < tie_rank_[best])))) {
        best = u;
        best_avail = avail;
      }
      if (avail == 0) return Outcome::kInfeasible;
    }

    ColorMask choices = window & ~forbidden_[best];
    while (choices != 0) {
      const int c = std::countr_zero(choices);
      choices &= choices - 1;
      const std::size_t mark = trail_.size();
      const bool consistent = assign(best, c);
      if (consistent) {
        const Outcome out = search(c == used ? used + 1 : used);
        if (out != Outcome::kInfeasible) return out;
      }
      undo(best, mark);
    }
    return Outcome::kInfeasible;
  }

  std::optional<Outcome> check_budget() {
    const std::uint64_t n = ++*nodes_;
    if (budget_->max_nodes != 0 && n > budget_->max_nodes) return Outcome::kNodeLimit;
    if ((n & 1023u) == 0) {
      if (budget_->stop != nullptr && budget_->stop->load(std::memory_order_relaxed)) {
        return Outcome::kStopped;
      }
      if (budget_->deadline && Clock::now() > *budget_->deadline) return Outcome::kTimeLimit;
    }
    return std::nullopt;
  }

  // Returns false once some vertex has no color left.
  bool assign(std::size_t u, int c) {
    color_[u] = c;
    ++assigned_;
    bool ok = true;
    for (std::uint32_t e : incident_[u]) {
      const int ec = edge_color_[e];
      if (ec == kMixed) continue;
      trail_.push_back({TrailEntry::kEdge, e, edge_assigned_[e], ec});
      ++edge_assigned_[e];
      if (ec == kNone || ec == c) {
        edge_color_[e] = c;
        const Edge& edge = h_.edges[e];
        if (edge_assigned_[e] + 1 == static_cast<int>(edge.size())) {
          for (VertexId w : edge) {
            if (color_[w] == -1) {
              ok = forbid(w, c) && ok;
              break;
            }
          }
        }
      } else {
        edge_color_[e] = kMixed;
      }
    }
    return ok;
  }

  bool forbid(std::size_t w, int c) {
    trail_.push_back({TrailEntry::kForbid, static_cast<std::uint32_t>(w), c, 0});
    if (forbid_count_[w * kMaxColors + c]++ == 0) forbidden_[w] |= ColorMask{1} << c;
    return (first_colors(colors_) & ~forbidden_[w]) != 0;
  }

  void undo(std::size_t u, std::size_t mark) {
    while (trail_.size() > mark) {
      const TrailEntry t = trail_.back();
      trail_.pop_back();
      if (t.kind == TrailEntry::kEdge) {
        edge_assigned_[t.index] = t.a;
        edge_color_[t.index] = t.b;
      } else if (--forbid_count_[t.index * kMaxColors + t.a] == 0) {
        forbidden_[t.index] &= ~(ColorMask{1} << t.a);
      }
    }
    color_[u] = -1;
    --assigned_;
  }

  const Hypergraph& h_;
  std::vector<std::uint32_t> tie_rank_;
  std::vector<std::vector<std::uint32_t>> incident_;
  std::vector<std::uint32_t> degree_;

  int colors_ = 0;
  Budget* budget_ = nullptr;
  std::uint64_t* nodes_ = nullptr;
  std::vector<int> color_;
  std::vector<std::uint32_t> forbid_count_;
  std::vector<ColorMask> forbidden_;
  std::vector<int> edge_assigned_;
  std::vector<int> edge_color_;
  std::vector<TrailEntry> trail_;
  std::size_t assigned_ = 0;
};

// Greedily grown set of vertices joined pairwise by 2-element edges; they
// need distinct colors. Any edge at all forces two colors.
int cheap_lower_bound(const Hypergraph& h) {
  const std::size_t v = h.num_vertices();
  if (v == 0) return 0;
  if (h.edges.empty()) return 1;
  std::vector<std::vector<bool>> adj(v, std::vector<bool>(v, false));
  std::vector<std::uint32_t> deg(v, 0);
  for (const Edge& e : h.edges) {
    if (e.size() == 2) {
      adj[e[0]][e[1]] = adj[e[1]][e[0]] = true;
      ++deg[e[0]];
      ++deg[e[1]];
    }
  }
  std::vector<std::size_t> order(v);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return deg[a] > deg[b]; });
  int best = 0;
  constexpr std::size_t kSeeds = 64;
  for (std::size_t i = 0; i < std::min(v, kSeeds); ++i) {
    const std::size_t seed = order[i];
    std::vector<std::size_t> clique{seed};
    for (std::size_t u : order) {
      if (std::all_of(clique.begin(), clique.end(), [&](std::size_t w) { return adj[u][w]; })) {
        clique.push_back(u);
      }
    }
    best = std::max(best, static_cast<int>(clique.size()));
  }
  return std::max(best, 2);
}

struct WorkerResult {
  SolveStatus status = SolveStatus::kBounds;
  int lower = 0;
  int upper = 0;
  std::vector<int> coloring;
  std::uint64_t nodes = 0;
  bool stopped = false;
};

WorkerResult solve_worker(const Hypergraph& h, std::span<const std::uint32_t> tie_rank,
                          const SolveLimits& limits, Budget budget) {
  WorkerResult out;
  const std::size_t v = h.num_vertices();
  ColoringSearch search(h, tie_rank);
  out.lower = cheap_lower_bound(h);

  // With as many colors as vertices the search never backtracks, so the
  // first descent is a DSATUR-style greedy coloring.
  const int greedy_colors = static_cast<int>(std::min<std::size_t>(std::max<std::size_t>(v, 1), kMaxColors));
  Budget unlimited;
  std::uint64_t greedy_nodes = 0;
  const Outcome greedy = search.run(greedy_colors, unlimited, greedy_nodes, out.coloring);
  out.nodes += greedy_nodes;
  if (greedy != Outcome::kFeasible) {
    // Only possible with a singleton edge: nothing colors it.
    fail(Errc::kInvalidParams, "hypergraph has no proper coloring (singleton edge)");
  }
  out.upper = v == 0 ? 0 : *std::max_element(out.coloring.begin(), out.coloring.end()) + 1;

  if (out.lower >= out.upper) {
    out.lower = out.upper;
    out.status = SolveStatus::kExact;
    return out;
  }
  if (v > limits.max_exact_vertices) return out;

  for (int c = out.lower; c < out.upper; ++c) {
    std::vector<int> solution;
    const Outcome res = search.run(c, budget, out.nodes, solution);
    if (res == Outcome::kFeasible) {
      out.upper = c;
      out.coloring = std::move(solution);
      break;
    }
    if (res == Outcome::kInfeasible) {
      out.lower = c + 1;
      continue;
    }
    out.status = res == Outcome::kTimeLimit ? SolveStatus::kTimeout : SolveStatus::kBounds;
    out.stopped = res == Outcome::kStopped;
    return out;
  }
  out.lower = out.upper;
  out.status = SolveStatus::kExact;
  return out;
}

// Worker 0 breaks ties by vertex id; worker i > 0 by a fixed pseudo-random
// permutation seeded with i.
std::vector<std::uint32_t> tie_ranks(std::size_t v, int worker) {
  std::vector<std::uint32_t> rank(v);
  std::iota(rank.begin(), rank.end(), 0u);
  if (worker > 0) {
    std::mt19937_64 rng(static_cast<std::uint64_t>(worker));
    std::shuffle(rank.begin(), rank.end(), rng);
  }
  return rank;
}

}  // namespace

std::string_view status_name(SolveStatus s) {
  switch (s) {
    case SolveStatus::kExact: return "EXACT";
    case SolveStatus::kBounds: return "BOUNDS";
    case SolveStatus::kTimeout: return "TIMEOUT";
  }
  return "UNKNOWN";
}

Hypergraph ConflictHypergraph::as_hypergraph() const {
  Hypergraph h;
  h.n = params.n;
  h.k = params.k;
  h.r = params.r;
  h.vertices = base;
  h.edges = witnesses;
  return h;
}

ConflictHypergraph build_conflict_hypergraph(const GroundParams& p, std::size_t max_witnesses) {
  p.validate();
  ConflictHypergraph ch;
  ch.params = p;
  ch.base = enumerate_k_subsets(p.n, p.k);
  const auto count = static_cast<VertexId>(ch.base.size());
  std::vector<std::uint64_t> bits(count);
  for (VertexId i = 0; i < count; ++i) bits[i] = ch.base[i].bits();
  // suffix_and[i]: common intersection of vertices i.. ; a partial tuple
  // whose intersection meets it has no empty-intersection extension.
  std::vector<std::uint64_t> suffix_and(count + 1, ~std::uint64_t{0});
  for (VertexId i = count; i-- > 0;) suffix_and[i] = suffix_and[i + 1] & bits[i];

  Edge tuple;
  auto minimal = [&] {
    for (std::size_t skip = 0; skip < tuple.size(); ++skip) {
      std::uint64_t acc = ~std::uint64_t{0};
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (j != skip) acc &= bits[tuple[j]];
      }
      if (acc == 0) return false;
    }
    return true;
  };
  auto extend = [&](auto& self, VertexId start, std::uint64_t inter) -> void {
    if ((inter & suffix_and[start]) != 0) return;
    for (VertexId i = start; i < count; ++i) {
      const std::uint64_t next = inter & bits[i];
      tuple.push_back(i);
      if (next == 0) {
        if (tuple.size() >= 2 && minimal()) {
          if (ch.witnesses.size() >= max_witnesses) {
            fail(Errc::kInstanceTooLarge,
                 "conflict witnesses exceed cap " + std::to_string(max_witnesses));
          }
          ch.witnesses.push_back(tuple);
        }
      } else if (static_cast<int>(tuple.size()) < p.r) {
        self(self, i + 1, next);
      }
      tuple.pop_back();
    }
  };
  extend(extend, 0, ~std::uint64_t{0});
  return ch;
}

SolveResult chromatic_number(const Hypergraph& h, const SolveLimits& limits) {
  const auto start = Clock::now();
  for (const Edge& e : h.edges) {
    for (VertexId u : e) {
      if (u >= h.num_vertices()) fail(Errc::kInvalidParams, "edge references unknown vertex");
    }
  }

  std::atomic<bool> stop{false};
  Budget budget;
  budget.max_nodes = limits.max_nodes;
  budget.stop = &stop;
  if (limits.time_limit_seconds > 0) {
    budget.deadline = start + std::chrono::duration_cast<Clock::duration>(
                                  std::chrono::duration<double>(limits.time_limit_seconds));
  }

  const int workers = std::max(1, limits.workers);
  std::vector<WorkerResult> results(workers);
  if (workers == 1) {
    results[0] = solve_worker(h, tie_ranks(h.num_vertices(), 0), limits, budget);
  } else {
    std::vector<std::jthread> pool;
    std::mutex error_mu;
    std::exception_ptr error;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          results[w] = solve_worker(h, tie_ranks(h.num_vertices(), w), limits, budget);
          if (results[w].status == SolveStatus::kExact) stop.store(true);
        } catch (...) {
          std::lock_guard lock(error_mu);
          if (!error) error = std::current_exception();
          stop.store(true);
        }
      });
    }
    pool.clear();
    if (error) std::rethrow_exception(error);
  }

  // Prefer the lowest-index exact worker; otherwise merge the brackets.
  int chosen = -1;
  for (int w = 0; w < workers; ++w) {
    if (results[w].status == SolveStatus::kExact) {
      chosen = w;
      break;
    }
  }
  SolveResult out;
  if (chosen >= 0) {
    const WorkerResult& r = results[chosen];
    out.status = SolveStatus::kExact;
    out.lower = out.upper = r.upper;
    out.coloring = r.coloring;
    out.stats.nodes = r.nodes;
    out.stats.worker = chosen;
  } else {
    out.status = SolveStatus::kBounds;
    out.lower = 0;
    out.upper = std::numeric_limits<int>::max();
    for (int w = 0; w < workers; ++w) {
      const WorkerResult& r = results[w];
      out.lower = std::max(out.lower, r.lower);
      if (r.upper < out.upper) {
        out.upper = r.upper;
        out.coloring = r.coloring;
        out.stats.worker = w;
      }
      out.stats.nodes += r.nodes;
      if (r.status == SolveStatus::kTimeout) out.status = SolveStatus::kTimeout;
    }
  }

  if (out.status == SolveStatus::kExact && !verify_coloring(h, out.coloring).ok) {
    fail(Errc::kInternal, "solver produced an improper coloring");
  }
  out.stats.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

SolveResult min_partition_number(const GroundParams& p, const SolveLimits& limits) {
  const auto start = Clock::now();
  const ConflictHypergraph ch = build_conflict_hypergraph(p, limits.max_witnesses);
  SolveResult out = chromatic_number(ch.as_hypergraph(), limits);

  PartitionCertificate cert;
  cert.params = p;
  std::vector<std::vector<KSubset>> classes(out.upper);
  for (std::size_t v = 0; v < ch.base.size(); ++v) classes[out.coloring[v]].push_back(ch.base[v]);
  for (auto& members : classes) cert.families.emplace_back(p.n, std::move(members));
  if (out.exact() && !verify_partition_certificate(cert).ok) {
    fail(Errc::kInternal, "solver partition failed verification");
  }
  out.partition = std::move(cert);
  out.stats.millis = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

}  // namespace klab
