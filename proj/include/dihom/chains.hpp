#pragma once

// Cube chains: composable sequences of cells of dimension >= 1 joined corner
// to corner (upper corner of one cell = lower corner of the next), plus an
// empty chain e_v at every vertex. A chain built from cells of dimensions
// n_1..n_l has dim = sum(n_k) - l and length = sum(n_k).
//
// The degree-d term of the chain complex of a block (v, w) is spanned by the
// chains of dim d-1 from v to w. The differential replaces one cell c_k of
// dimension n >= 2 by the pair (lower face at the complement of I, upper face
// at I) over proper nonempty I in {0..n-1}, with sign
//   (-1)^(n_1+..+n_(k-1)+k+1) * (-1)^(m + r(r+1)/2 + r(n-r))
// for r = |I| and m = sum(I). This is the unique sign rule (up to a global
// flip per block degree) that squares to zero in every dimension and matches
// the usual conventions on squares and cubes.

#include "dihom/matrix.hpp"
#include "dihom/precubical.hpp"

#include <map>
#include <string>
#include <vector>

namespace dihom {

struct CubeChain {
  std::vector<int> cells;  // cell indices of dim >= 1; empty means e_src
  int src = 0, dst = 0;    // vertex cell indices

  bool operator==(const CubeChain& o) const {
    return cells == o.cells && src == o.src && dst == o.dst;
  }
};

int chain_dim(const PrecubicalSet& X, const CubeChain& c);
int chain_length(const PrecubicalSet& X, const CubeChain& c);
std::string chain_str(const PrecubicalSet& X, const CubeChain& c);

// All chains v -> w of the given dim, sorted by (length, cell index sequence).
// dim 0 with v == w includes the empty chain e_v.
std::vector<CubeChain> enumerate_chains(const PrecubicalSet& X, int v, int w, int dim);

// Signed boundary terms; every coefficient is +1 or -1.
std::vector<std::pair<CubeChain, int>> chain_boundary(const PrecubicalSet& X, const CubeChain& c);

// Vertex pairs (v, w) with v reaching w; the blocks where chains can live.
std::vector<std::pair<int, int>> reachable_pairs(const PrecubicalSet& X);

template <class F>
Matrix<F> boundary_matrix(const F& f, const PrecubicalSet& X,
                          const std::vector<CubeChain>& lower,
                          const std::vector<CubeChain>& upper) {
  std::map<std::vector<int>, int> where;
  for (int i = 0; i < static_cast<int>(lower.size()); ++i) where[lower[i].cells] = i;
  Matrix<F> M(static_cast<int>(lower.size()), static_cast<int>(upper.size()), f);
  for (int j = 0; j < static_cast<int>(upper.size()); ++j)
    for (const auto& [term, sign] : chain_boundary(X, upper[j])) {
      auto it = where.find(term.cells);
      require(it != where.end(), "boundary term missing from lower basis");
      M.at(it->second, j) = f.add(M.at(it->second, j), f.from_int(sign));
    }
  return M;
}

// Chain complex of one (v, w) block, degrees 1..top where top is the last
// degree with a nonempty basis. basis[d] spans degree d; bnd[d] : deg d ->
// deg d-1 for d >= 2 (the degree 1 differential is zero).
template <class F>
struct BlockComplex {
  int v = 0, w = 0;
  std::vector<std::vector<CubeChain>> basis;  // index 0 unused
  std::vector<Matrix<F>> bnd;                 // index 0, 1 unused

  int top_degree() const { return static_cast<int>(basis.size()) - 1; }
  int dim_at(int d) const {
    return d >= 1 && d <= top_degree() ? static_cast<int>(basis[d].size()) : 0;
  }
};

template <class F>
BlockComplex<F> build_block_complex(const F& f, const PrecubicalSet& X, int v, int w,
                                    int min_top_degree = 0) {
  BlockComplex<F> B;
  B.v = v;
  B.w = w;
  B.basis.push_back({});
  B.bnd.push_back(Matrix<F>());
  B.bnd.push_back(Matrix<F>());
  for (int d = 1;; ++d) {
    std::vector<CubeChain> chains = enumerate_chains(X, v, w, d - 1);
    if (chains.empty() && d > min_top_degree) break;
    B.basis.push_back(std::move(chains));
    if (d >= 2) B.bnd.push_back(boundary_matrix(f, X, B.basis[d - 1], B.basis[d]));
  }
  for (int d = 3; d <= B.top_degree(); ++d)
    require(is_zero_matrix(f, mat_mul(f, B.bnd[d - 1], B.bnd[d])),
            "differential does not square to zero");
  return B;
}

// Augmentation: sends every degree 1 basis chain to 1. Composes to zero with
// the degree 2 differential.
template <class F>
Matrix<F> augmentation(const F& f, int degree1_dim) {
  Matrix<F> e(1, degree1_dim, f);
  for (int j = 0; j < degree1_dim; ++j) e.at(0, j) = f.one();
  return e;
}

}  // namespace dihom
