#include "dihom/relative.hpp"

#include <algorithm>

namespace dihom {

bool chain_in_extended(const PrecubicalSet& X, const std::vector<char>& mask,
                       const CubeChain& c) {
  if (c.cells.empty()) return mask[c.src];
  int first = -1, last = -1;
  for (int i = 0; i < static_cast<int>(c.cells.size()); ++i)
    if (X.cells[c.cells[i]].dim >= 2) {
      if (first < 0) first = i;
      last = i;
    }
  if (first < 0) {
    // a path: member iff it visits a vertex of the subcomplex
    if (mask[c.src]) return true;
    for (int e : c.cells)
      if (mask[X.cells[e].hi[0]]) return true;
    return false;
  }
  for (int i = first; i <= last; ++i)
    if (!mask[c.cells[i]]) return false;
  return true;
}

ConditionCheck is_relative_pair(const PrecubicalSet& X, const std::vector<char>& maskY) {
  if (!mask_is_closed(X, maskY)) return {false, "subcomplex is not face closed"};
  int V = X.num_vertices();
  auto reach = X.vertex_reachability();
  std::vector<char> from_y(V, 0), to_y(V, 0);
  for (int v = 0; v < V; ++v) {
    for (int y = 0; y < V; ++y) {
      if (!maskY[y]) continue;
      if (reach[static_cast<size_t>(y) * V + v]) from_y[v] = 1;
      if (reach[static_cast<size_t>(v) * V + y]) to_y[v] = 1;
    }
  }
  // The positions of Y along a directed path (vertices and edges interleaved)
  // must form one contiguous stretch; otherwise an extended chain admits two
  // different p (x) c (x) q decompositions and extension of scalars is not a
  // subspace. A violation is a position outside Y with Y positions both
  // strictly before and strictly after it on some path; by face closure the
  // flanking positions can be taken to be vertices of Y.
  for (int v = 0; v < V; ++v)
    if (!maskY[v] && from_y[v] && to_y[v])
      return {false, "paths through vertex " + X.cells[v].id +
                         " meet the subcomplex on both sides"};
  for (int e = X.dim_begin(1); e < X.dim_end(1); ++e)
    if (!maskY[e] && from_y[X.cells[e].lo[0]] && to_y[X.cells[e].hi[0]])
      return {false, "edge " + X.cells[e].id +
                         " leaves the subcomplex on a path that returns to it"};
  return {true, ""};
}

namespace {
// all edge paths out of v, including the empty one, fed to the visitor
template <class Fn>
void walk_paths(const PrecubicalSet& X, int v, std::vector<int>& cur, Fn&& visit) {
  visit(cur);
  for (int e = X.dim_begin(1); e < X.dim_end(1); ++e) {
    if (X.cells[e].lo[0] != v) continue;
    cur.push_back(e);
    walk_paths(X, X.cells[e].hi[0], cur, visit);
    cur.pop_back();
  }
}
}  // namespace

ConditionCheck is_relative_pair_bruteforce(const PrecubicalSet& X,
                                           const std::vector<char>& maskY) {
  if (!mask_is_closed(X, maskY)) return {false, "subcomplex is not face closed"};
  ConditionCheck out{true, ""};
  for (int v = 0; v < X.num_vertices() && out.ok; ++v) {
    std::vector<int> cur;
    walk_paths(X, v, cur, [&](const std::vector<int>& p) {
      if (!out.ok) return;
      // membership of the interleaved vertex/edge positions along the path;
      // more than one maximal run inside Y means the path left and returned
      std::vector<char> pos{maskY[v]};
      for (int e : p) {
        pos.push_back(maskY[e]);
        pos.push_back(maskY[X.cells[e].hi[0]]);
      }
      int runs = 0;
      for (size_t i = 0; i < pos.size(); ++i)
        if (pos[i] && (i == 0 || !pos[i - 1])) ++runs;
      if (runs > 1)
        out = {false, "a path meets the subcomplex in two separate stretches"};
    });
  }
  return out;
}

ConditionCheck is_good_cover(const PrecubicalSet& X, const std::vector<char>& m1,
                             const std::vector<char>& m2) {
  if (!mask_is_closed(X, m1) || !mask_is_closed(X, m2))
    return {false, "cover part is not face closed"};
  for (int c = 0; c < X.num_cells(); ++c)
    if (!m1[c] && !m2[c]) return {false, "cell " + X.cells[c].id + " is in neither part"};
  // composability digraph on cells of dim >= 1
  int V = X.num_vertices(), n = X.num_cells() - V;
  auto gi = [&](int cell) { return cell - V; };
  std::vector<char> reach(static_cast<size_t>(n) * n, 0);
  for (int c = V; c < X.num_cells(); ++c) reach[static_cast<size_t>(gi(c)) * n + gi(c)] = 1;
  for (int c = V; c < X.num_cells(); ++c) {
    std::vector<int> stack{c};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int b = V; b < X.num_cells(); ++b)
        if (X.full_face(u, 1) == X.full_face(b, 0) &&
            !reach[static_cast<size_t>(gi(c)) * n + gi(b)]) {
          reach[static_cast<size_t>(gi(c)) * n + gi(b)] = 1;
          stack.push_back(b);
        }
    }
  }
  // a cell can sit inside a core iff a dim >= 2 cell reaches it and it
  // reaches a dim >= 2 cell
  std::vector<char> left_ok(n, 0), right_ok(n, 0);
  for (int c = V; c < X.num_cells(); ++c)
    for (int b = V; b < X.num_cells(); ++b) {
      if (X.cells[b].dim < 2) continue;
      if (reach[static_cast<size_t>(gi(b)) * n + gi(c)]) left_ok[gi(c)] = 1;
      if (reach[static_cast<size_t>(gi(c)) * n + gi(b)]) right_ok[gi(c)] = 1;
    }
  for (int u = V; u < X.num_cells(); ++u)
    for (int w = V; w < X.num_cells(); ++w) {
      if (!left_ok[gi(u)] || !right_ok[gi(w)] || !reach[static_cast<size_t>(gi(u)) * n + gi(w)])
        continue;
      bool u1only = m1[u] && !m2[u], u2only = m2[u] && !m1[u];
      bool w1only = m1[w] && !m2[w], w2only = m2[w] && !m1[w];
      if ((u1only && w2only) || (u2only && w1only))
        return {false, "a composable run mixes " + X.cells[u].id + " and " + X.cells[w].id +
                           " from different parts"};
    }
  return {true, ""};
}

}  // namespace dihom
