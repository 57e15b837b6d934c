#include "dihom/tensor.hpp"

namespace dihom {

PrecubicalSet tensor_product(const PrecubicalSet& X, const PrecubicalSet& Y) {
  std::vector<CellSpec> specs;
  for (const Cell& x : X.cells)
    for (const Cell& y : Y.cells) {
      CellSpec s;
      s.id = product_id(x.id, y.id);
      for (int i = 0; i < x.dim; ++i) {
        s.d0.push_back(product_id(X.cells[x.lo[i]].id, y.id));
        s.d1.push_back(product_id(X.cells[x.hi[i]].id, y.id));
      }
      for (int j = 0; j < y.dim; ++j) {
        s.d0.push_back(product_id(x.id, Y.cells[y.lo[j]].id));
        s.d1.push_back(product_id(x.id, Y.cells[y.hi[j]].id));
      }
      specs.push_back(std::move(s));
    }
  return build_pcs(X.name + "⊗" + Y.name, specs);
}

int boxtensor_dim(const std::vector<int>& dims_x, const std::vector<int>& dims_y, int n) {
  int total = 0;
  for (int i = 1; i <= n; ++i) {
    int j = n + 1 - i;
    if (i < static_cast<int>(dims_x.size()) && j >= 1 && j < static_cast<int>(dims_y.size()))
      total += dims_x[i] * dims_y[j];
  }
  return total;
}

}  // namespace dihom
