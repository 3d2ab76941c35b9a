// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "klab/constructions.h"
#include "klab/error.h"
#include "klab/kneser.h"
#include "klab/solve.h"
#include "klab/verify.h"
#include "oracles.h"

namespace {

using namespace klab;
using Clock = std::chrono::steady_clock;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << " [" << what << "]";
    }
  }
  void note(const std::string& s) { detail << " " << s; }
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string params_str(const GroundParams& p) {
  return "(" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + std::to_string(p.r) + ")";
}

// Solves, checks EXACT, the verified certificate, the expected value and the
// per-instance time limit.
void expect_partition(Check& c, const GroundParams& p, int expected, double limit_s) {
  const auto t = Clock::now();
  const SolveResult res = min_partition_number(p);
  const double secs = seconds_since(t);
  const std::string tag = params_str(p);
  c.expect(res.exact(), tag + " not EXACT");
  c.expect(res.upper == expected,
           tag + " got " + std::to_string(res.upper) + " want " + std::to_string(expected));
  c.expect(res.partition && verify_partition_certificate(*res.partition).ok,
           tag + " certificate");
  c.expect(secs < limit_s, tag + " too slow");
  c.note(tag + "=" + std::to_string(res.upper));
}

void expect_chi(Check& c, const std::string& tag, const Hypergraph& h, int expected,
                double limit_s, const std::function<void(const Hypergraph&)>& extra = {}) {
  const auto t = Clock::now();
  const SolveResult res = chromatic_number(h);
  const double secs = seconds_since(t);
  c.expect(res.exact(), tag + " not EXACT");
  c.expect(res.upper == expected,
           tag + " got " + std::to_string(res.upper) + " want " + std::to_string(expected));
  c.expect(verify_coloring(h, res.coloring).ok, tag + " coloring");
  c.expect(secs < limit_s, tag + " too slow");
  if (h.num_vertices() <= 16) {
    c.expect(brute_force_oracle(h, expected) == expected, tag + " oracle disagrees");
  }
  if (extra) extra(h);
  c.note(tag + "=" + std::to_string(res.upper));
}

Check criterion1() {
  Check c;
  const auto t = Clock::now();
  for (int n = 4; n <= 7; ++n) expect_partition(c, {n, 2, 2}, n - 2 * 2 + 2, 60.0);
  c.expect(seconds_since(t) < 60.0, "total time");
  return c;
}

Check criterion2() {
  Check c;
  const GroundParams cases[] = {{3, 1, 3}, {4, 2, 3}, {5, 2, 3}, {6, 2, 3}, {6, 3, 3}};
  const int formula[] = {3, 3, 4, 5, 3};
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    c.expect(tight_bound(cases[i]) == formula[i], params_str(cases[i]) + " tight_bound");
    expect_partition(c, cases[i], tight_bound(cases[i]), 600.0);
  }
  return c;
}

Check criterion3() {
  Check c;
  const GroundParams p{4, 2, 4};
  c.expect(p.admissible(), "admissible");
  c.expect(tight_bound(p) == 3, "tight_bound");
  c.expect(binomial(4, 2) == 6, "vertex count");
  expect_partition(c, p, 3, 60.0);
  return c;
}

Check criterion4() {
  Check c;
  const auto t = Clock::now();
  int instances = 0;
  for (int r = 2; r <= 5; ++r) {
    for (int k = 1; k <= 4; ++k) {
      for (int n = k; n <= 12; ++n) {
        const GroundParams p{n, k, r};
        if (!p.admissible()) continue;
        ++instances;
        const PartitionCertificate cert = build_tight_partition(p);
        c.expect(verify_partition_certificate(cert).ok, params_str(p) + " verify");
        c.expect(static_cast<int>(cert.families.size()) == tight_bound(p), params_str(p) + " size");
      }
    }
  }
  c.expect(seconds_since(t) < 120.0, "total time");
  c.note(std::to_string(instances) + " instances");
  return c;
}

Check criterion5() {
  Check c;
  const GroundParams cases[] = {{5, 2, 2}, {6, 2, 2}, {6, 2, 3}, {7, 2, 3}, {8, 2, 4}};
  const int expected[] = {3, 4, 2, 2, 2};
  for (std::size_t i = 0; i < std::size(cases); ++i) {
    const GroundParams& p = cases[i];
    c.expect(formula_chi(p) == expected[i], params_str(p) + " formula");
    expect_chi(c, "KG" + params_str(p), build_kneser_hypergraph(p), formula_chi(p), 300.0);
  }
  return c;
}

Check criterion6() {
  Check c;
  for (int n = 6; n <= 8; ++n) {
    expect_chi(c, "SG(2," + std::to_string(n) + ")", build_stable_subhypergraph({n, 2, 2}, 2),
               n - 2, 300.0);
  }
  expect_chi(c, "4-stable KG(8,2,4)", build_stable_subhypergraph({8, 2, 4}, 4), 2, 300.0,
             [&](const Hypergraph& h) {
               c.expect(h.num_vertices() == 4 && h.edges.size() == 1, "4-stable shape");
             });
  return c;
}

Check criterion7() {
  Check c;
  const PartSpec spec{{{1, 2}, {3, 4}, {5, 6}}};
  expect_chi(c, "constrained (6,2,3)", build_partition_constrained({6, 2, 3}, spec), 2, 60.0);
  return c;
}

Check criterion8() {
  Check c;
  const auto t = Clock::now();
  const Blowup b = blow_up(build_tight_partition({4, 2, 3}));
  const Hypergraph lifted = build_partition_constrained(b.map.lifted_params(), b.map.blocks);
  c.expect(b.coloring.ground_n == 8, "ground size");
  c.expect(lifted.num_vertices() == 24, "vertex count");
  c.expect(b.coloring.num_colors == 3, "colors");
  c.expect(b.coloring.num_colors == static_cast<int>(ceil_div(8 - 3, 2)), "color formula");
  c.expect(verify_coloring(lifted, b.coloring.colors).ok, "proper");
  c.expect(verify_coloring_certificate(b.coloring).ok, "certificate");
  const Report emb = check_stable_embedding(b.map);
  c.expect(emb.ok, "stable embedding");
  c.expect(seconds_since(t) < 60.0, "time");
  c.note("ground=8 vertices=" + std::to_string(lifted.num_vertices()) +
         " colors=" + std::to_string(b.coloring.num_colors) +
         " stable_vertices=" + std::to_string(emb.counters.at("stable_vertices")));
  return c;
}

Check criterion9() {
  Check c;
  // Floor/ceiling identity over the grid, against a scan for the ceiling.
  int identity = 0;
  for (int r = 2; r <= 8; ++r) {
    for (int k = 1; k <= 10; ++k) {
      for (int n = k; n <= 40; ++n) {
        const GroundParams p{n, k, r};
        if (!p.admissible()) continue;
        const int target = (r - 1) * n - r * (k - 1);
        int m = 0;
        while ((r - 1) * m < target) ++m;
        c.expect(tight_bound(p) == m && n - tail_size(k, r) + 1 == m, params_str(p) + " identity");
        ++identity;
      }
    }
  }
  c.note(std::to_string(identity) + " identities");

  // Solver vs exhaustive enumeration on random hypergraphs.
  std::mt19937_64 rng(20240101);
  for (int trial = 0; trial < 200; ++trial) {
    const Hypergraph h = oracle::random_hypergraph(rng, 1, 12, 4, 30);
    const SolveResult res = chromatic_number(h);
    const bool solved = res.exact() && verify_coloring(h, res.coloring).ok;
    const bool matches = brute_force_oracle(h, res.upper) == res.upper &&
                         (res.upper == 0 || !brute_force_oracle(h, res.upper - 1));
    c.expect(solved && matches, "random hypergraph " + std::to_string(trial));
  }
  c.note("200 random hypergraphs");

  // Verifier vs naive subfamily scan on families of at most 12 members.
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(3, 8)(rng);
    const std::size_t cap = (std::size_t{1} << n) - 1;
    const auto size = std::min(cap, std::uniform_int_distribution<std::size_t>(1, 12)(rng));
    const int r = std::uniform_int_distribution<int>(2, 5)(rng);
    std::vector<KSubset> members;
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << n) - 1);
    while (members.size() < size) {
      KSubset s(n, bits(rng));
      if (std::find(members.begin(), members.end(), s) == members.end()) members.push_back(s);
    }
    std::vector<std::uint64_t> masks;
    for (const KSubset& s : members) masks.push_back(s.bits());
    const SetFamily f(n, members);
    const bool verdict = is_r_wise_intersecting(f, r).ok;
    c.expect(verdict == oracle::r_wise_intersecting(masks, r), "family " + std::to_string(trial));
    // Monotone in r: r-wise intersecting implies (r-1)-wise intersecting.
    if (verdict && r > 2) c.expect(is_r_wise_intersecting(f, r - 1).ok, "monotone in r");
  }
  c.note("500 families");

  // Stability is monotone in s.
  for (int n = 3; n <= 10; ++n) {
    for (const KSubset& f : enumerate_k_subsets(n, 3)) {
      for (int s = 2; s <= n; ++s) {
        if (is_s_stable(f, s)) c.expect(is_s_stable(f, s - 1), "monotone in s");
      }
    }
  }

  // Tight bound grows by one per ground point.
  for (int r = 2; r <= 5; ++r) {
    for (int k = 1; k <= 5; ++k) {
      for (int n = k; n < 30; ++n) {
        const GroundParams p{n, k, r};
        if (!p.admissible()) continue;
        c.expect(tight_bound({n + 1, k, r}) == tight_bound(p) + 1, "bound step");
      }
    }
  }

  // Determinism in single-worker mode, and portfolio answers agree.
  const SolveResult a = min_partition_number({6, 2, 3});
  const SolveResult b = min_partition_number({6, 2, 3});
  c.expect(a.coloring == b.coloring && a.stats.nodes == b.stats.nodes &&
               a.partition == b.partition,
           "determinism");
  SolveLimits portfolio;
  portfolio.workers = 4;
  c.expect(min_partition_number({6, 2, 3}, portfolio).upper == a.upper, "portfolio");
  return c;
}

Check criterion10() {
  Check c;
  const SolveResult part = min_partition_number({6, 2, 3});
  const SolveResult chi = chromatic_number(build_kneser_hypergraph({6, 2, 3}));
  c.expect(part.exact() && chi.exact(), "EXACT");
  c.expect(part.upper == 5, "partition number");
  c.expect(chi.upper == 2, "chromatic number");
  c.expect(part.upper > chi.upper, "strict");
  c.note("min_partition=" + std::to_string(part.upper) + " chi=" + std::to_string(chi.upper));
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, Check (*)()> criteria[] = {
      {"1 Kneser case r=2, k=2, n=4..7", criterion1},
      {"2 tightness r=3", criterion2},
      {"3 tightness r=4, (4,2,4)", criterion3},
      {"4 construction validity grid", criterion4},
      {"5 chromatic numbers of Kneser hypergraphs", criterion5},
      {"6 stable variants", criterion6},
      {"7 partition-constrained variant", criterion7},
      {"8 blow-up end to end", criterion8},
      {"9 property suites", criterion9},
      {"10 strictness witness (6,2,3)", criterion10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    const auto t = Clock::now();
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note(std::string("exception: ") + e.what());
    }
    failures += !c.ok;
    std::printf("%s criterion %s (%.2fs):%s\n", c.ok ? "PASS" : "FAIL", name, seconds_since(t),
                c.detail.str().c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
