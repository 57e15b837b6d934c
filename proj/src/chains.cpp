#include "dihom/chains.hpp"

#include <algorithm>

namespace dihom {

int chain_dim(const PrecubicalSet& X, const CubeChain& c) {
  int d = 0;
  for (int cell : c.cells) d += X.cells[cell].dim - 1;
  return d;
}

int chain_length(const PrecubicalSet& X, const CubeChain& c) {
  int l = 0;
  for (int cell : c.cells) l += X.cells[cell].dim;
  return l;
}

std::string chain_str(const PrecubicalSet& X, const CubeChain& c) {
  if (c.cells.empty()) return "e_" + X.cells[c.src].id;
  std::string s = "(";
  for (size_t i = 0; i < c.cells.size(); ++i) {
    if (i) s += ",";
    s += X.cells[c.cells[i]].id;
  }
  return s + ")";
}

std::vector<CubeChain> enumerate_chains(const PrecubicalSet& X, int v, int w, int dim) {
  // cells of dim >= 1 grouped by their lower corner
  int V = X.num_vertices();
  std::vector<std::vector<int>> from(V);
  for (int c = V; c < X.num_cells(); ++c) from[X.full_face(c, 0)].push_back(c);

  std::vector<CubeChain> out;
  if (dim == 0 && v == w) out.push_back(CubeChain{{}, v, v});
  std::vector<int> cur;
  auto dfs = [&](auto&& self, int at, int acc) -> void {
    if (at == w && acc == dim && !cur.empty()) out.push_back(CubeChain{cur, v, w});
    for (int c : from[at]) {
      int add = X.cells[c].dim - 1;
      if (acc + add > dim) continue;
      cur.push_back(c);
      self(self, X.full_face(c, 1), acc + add);
      cur.pop_back();
    }
  };
  dfs(dfs, v, 0);
  std::sort(out.begin(), out.end(), [&](const CubeChain& a, const CubeChain& b) {
    int la = chain_length(X, a), lb = chain_length(X, b);
    if (la != lb) return la < lb;
    return a.cells < b.cells;
  });
  return out;
}

namespace {
// +1 iff sum(I) = r(r+1)/2 mod 2, r = |I|
// (-1)^(m + r(r+1)/2 + r(n-r)) for I of size r inside {0..n-1} with element
// sum m. The r(n-r) term is what makes the differential square to zero on
// cells of dimension 4 and above; it is invisible for n <= 3.
int subset_sign(const std::vector<int>& I, int n) {
  int s = 0;
  for (int i : I) s += i;
  int r = static_cast<int>(I.size());
  s += r * (r + 1) / 2 + r * (n - r);
  return s % 2 == 0 ? 1 : -1;
}
}  // namespace

std::vector<std::pair<CubeChain, int>> chain_boundary(const PrecubicalSet& X,
                                                      const CubeChain& c) {
  std::vector<std::pair<CubeChain, int>> terms;
  int prefix = 0;  // n_1 + .. + n_(k-1), the dims strictly before cell k
  for (int k = 0; k < static_cast<int>(c.cells.size()); ++k) {
    int cell = c.cells[k];
    int n = X.cells[cell].dim;
    if (n < 2) {
      prefix += n;
      continue;
    }
    int base = ((prefix + k) % 2 == 0) ? 1 : -1;
    for (int bits = 1; bits < (1 << n) - 1; ++bits) {
      std::vector<int> I, comp;
      for (int i = 0; i < n; ++i) ((bits >> i) & 1 ? I : comp).push_back(i);
      int a = X.iterated_face(cell, comp, 0);
      int b = X.iterated_face(cell, I, 1);
      CubeChain t;
      t.src = c.src;
      t.dst = c.dst;
      t.cells.reserve(c.cells.size() + 1);
      t.cells.insert(t.cells.end(), c.cells.begin(), c.cells.begin() + k);
      t.cells.push_back(a);
      t.cells.push_back(b);
      t.cells.insert(t.cells.end(), c.cells.begin() + k + 1, c.cells.end());
      require(X.full_face(a, 1) == X.full_face(b, 0), "boundary split is not composable");
      terms.emplace_back(std::move(t), base * subset_sign(I, n));
    }
    prefix += n;
  }
  return terms;
}

std::vector<std::pair<int, int>> reachable_pairs(const PrecubicalSet& X) {
  int V = X.num_vertices();
  auto reach = X.vertex_reachability();
  std::vector<std::pair<int, int>> pairs;
  for (int v = 0; v < V; ++v)
    for (int w = 0; w < V; ++w)
      if (reach[static_cast<size_t>(v) * V + w]) pairs.emplace_back(v, w);
  return pairs;
}

}  // namespace dihom
