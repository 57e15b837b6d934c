#include "dihom/homology.hpp"

namespace dihom {

FqGraph build_fq(const PrecubicalSet& X) {
  FqGraph fq;
  fq.nodes = reachable_pairs(X);
  for (int i = 0; i < static_cast<int>(fq.nodes.size()); ++i) fq.node_of[fq.nodes[i]] = i;
  for (int i = 0; i < static_cast<int>(fq.nodes.size()); ++i) {
    auto [v, w] = fq.nodes[i];
    for (int e = X.dim_begin(1); e < X.dim_end(1); ++e)
      if (X.cells[e].lo[0] == w) fq.arrows.push_back({i, fq.node_of.at({v, X.cells[e].hi[0]}), e, false});
    for (int e = X.dim_begin(1); e < X.dim_end(1); ++e)
      if (X.cells[e].hi[0] == v) fq.arrows.push_back({i, fq.node_of.at({X.cells[e].lo[0], w}), e, true});
  }
  return fq;
}

std::vector<int> interval_nodes(const FqGraph& fq, int p, int q) {
  int n = static_cast<int>(fq.nodes.size());
  auto reach_from = [&](int start, bool forward) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (const FqArrow& ar : fq.arrows) {
        int a = forward ? ar.src : ar.tgt, b = forward ? ar.tgt : ar.src;
        if (a == u && !seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    return seen;
  };
  auto down = reach_from(p, true), up = reach_from(q, false);
  std::vector<int> nodes;
  for (int i = 0; i < n; ++i)
    if (down[i] && up[i]) nodes.push_back(i);
  return nodes;
}

}  // namespace dihom
