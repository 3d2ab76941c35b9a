#include <vector>

#include "klab/error.h"
#include "klab/solve.h"

namespace klab {
namespace {

bool proper(const Hypergraph& h, const std::vector<int>& color) {
  for (const Edge& e : h.edges) {
    bool mono = true;
    for (VertexId v : e) mono = mono && color[v] == color[e.front()];
    if (mono) return false;
  }
  return true;
}

// Restricted growth strings: vertex i may take any color up to one more than
// the largest color among vertices 0..i-1.
void enumerate(const Hypergraph& h, std::vector<int>& color, std::size_t i, int used,
               int max_colors, int& best) {
  if (i == color.size()) {
    if (used < best && proper(h, color)) best = used;
    return;
  }
  for (int c = 0; c <= used && c < max_colors; ++c) {
    color[i] = c;
    enumerate(h, color, i + 1, c == used ? used + 1 : used, max_colors, best);
  }
}

}  // namespace

std::optional<int> brute_force_oracle(const Hypergraph& h, int max_colors) {
  if (h.num_vertices() > 16) {
    fail(Errc::kInstanceTooLarge, "brute-force oracle is limited to 16 vertices");
  }
  if (h.num_vertices() == 0) return 0;
  std::vector<int> color(h.num_vertices(), 0);
  int best = max_colors + 1;
  enumerate(h, color, 0, 0, max_colors, best);
  if (best > max_colors) return std::nullopt;
  return best;
}

}  // namespace klab
