#pragma once

// Tensor product of precubical sets and the Kunneth comparison. The product
// has (X tensor Y)_n = union of X_i x Y_j over i + j = n; a face index k
// acts on the first factor when k < dim_X and on the second at k - dim_X
// otherwise. The comparison computes HM_n directly on the product and checks
// it against the graded formula
//   dim HM_n[X tensor Y]((v,p),(w,q)) =
//     sum_{i+j=n+1, i,j>=1} dim HM_i[X](v,w) * dim HM_j[Y](p,q).

#include "dihom/homology.hpp"
#include "dihom/precubical.hpp"

#include <string>
#include <vector>

namespace dihom {

inline std::string product_id(const std::string& x, const std::string& y) {
  return x + "⊗" + y;
}

PrecubicalSet tensor_product(const PrecubicalSet& X, const PrecubicalSet& Y);

// dims vectors are indexed by degree, entry 0 unused.
int boxtensor_dim(const std::vector<int>& dims_x, const std::vector<int>& dims_y, int n);

struct KunnethEntry {
  std::string vx, wx, vy, wy;
  int degree = 0;
  int direct = 0, formula = 0;
};

struct KunnethReport {
  int blocks_checked = 0;
  std::vector<KunnethEntry> entries;  // every compared block
  std::vector<KunnethEntry> mismatches;
  bool all_match() const { return mismatches.empty(); }
};

template <class F>
std::vector<int> block_dims_up_to(const F& f, const PrecubicalSet& X, int v, int w, int D) {
  HomologyBlock<F> H = homology_block(f, X, v, w, D);
  std::vector<int> dims(D + 1, 0);
  for (int d = 1; d <= D; ++d) dims[d] = H.dim_at(d);
  return dims;
}

template <class F>
KunnethReport kunneth_check(const F& f, const PrecubicalSet& X, const PrecubicalSet& Y,
                            int max_degree) {
  PrecubicalSet T = tensor_product(X, Y);
  T.require_valid();
  auto px = reachable_pairs(X), py = reachable_pairs(Y);
  KunnethReport rep;
  for (auto [vx, wx] : px) {
    std::vector<int> dx = block_dims_up_to(f, X, vx, wx, max_degree);
    for (auto [vy, wy] : py) {
      std::vector<int> dy = block_dims_up_to(f, Y, vy, wy, max_degree);
      int tv = T.index(product_id(X.cells[vx].id, Y.cells[vy].id));
      int tw = T.index(product_id(X.cells[wx].id, Y.cells[wy].id));
      std::vector<int> dt = block_dims_up_to(f, T, tv, tw, max_degree);
      ++rep.blocks_checked;
      for (int n = 1; n <= max_degree; ++n) {
        KunnethEntry e{X.cells[vx].id, X.cells[wx].id, Y.cells[vy].id, Y.cells[wy].id,
                       n, dt[n], boxtensor_dim(dx, dy, n)};
        rep.entries.push_back(e);
        if (e.direct != e.formula) rep.mismatches.push_back(e);
      }
    }
  }
  return rep;
}

}  // namespace dihom
