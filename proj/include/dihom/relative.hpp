#pragma once

// Relative homology and exact sequence verification.
//
// For a subcomplex Y of X the chain group of the pair splits basis-wise:
// a chain belongs to the extended complex of Y iff
//   degree 1:  the path visits at least one vertex of Y
//              (for a relative pair the Y edges of such a path are
//               automatically consecutive),
//   degree >= 2: the core of the chain, the stretch from its first cell of
//              dimension >= 2 to its last, lies entirely in Y.
// The relative complex is spanned by the remaining basis chains with the
// differential truncated accordingly.

#include "dihom/chains.hpp"
#include "dihom/homology.hpp"
#include "dihom/matrix.hpp"
#include "dihom/precubical.hpp"

#include <array>
#include <string>
#include <vector>

namespace dihom {

bool chain_in_extended(const PrecubicalSet& X, const std::vector<char>& mask,
                       const CubeChain& c);

struct ConditionCheck {
  bool ok = true;
  std::string reason;
};

// (X, Y) is a relative pair iff every directed path of X meets Y in one
// contiguous stretch of positions (vertices and edges): leaving Y and coming
// back, even through a single vertex, would break the unique factorization of
// extended chains through the subcomplex.
ConditionCheck is_relative_pair(const PrecubicalSet& X, const std::vector<char>& maskY);
// Reference implementation quantifying over explicit paths.
ConditionCheck is_relative_pair_bruteforce(const PrecubicalSet& X,
                                           const std::vector<char>& maskY);

// A cover (X1, X2) is good iff it covers every cell and every composable
// sequence of cells whose two ends have dimension >= 2 stays inside X1 or
// inside X2.
ConditionCheck is_good_cover(const PrecubicalSet& X, const std::vector<char>& m1,
                             const std::vector<char>& m2);

struct SequenceReport {
  std::string kind;  // "relative" or "mayer-vietoris"
  int v = 0, w = 0;
  int top_degree = 0;
  std::vector<std::string> labels;  // 3 per degree, top degree first
  std::vector<int> dims;
  std::vector<int> out_ranks;  // rank of the map node i -> node i+1
  std::vector<char> exact_at;
  bool exact = false;
  long long alternating_sum = 0;
  std::vector<std::string> notes;

  // slot 0: subcomplex term, slot 1: middle term, slot 2: quotient / total
  int dim_of(int degree, int slot) const {
    int i = 3 * (top_degree - degree) + slot;
    return i >= 0 && i < static_cast<int>(dims.size()) ? dims[i] : 0;
  }
};

// Chain complex restricted to a subset of the basis of every degree.
template <class F>
struct SelectedComplex {
  std::vector<std::vector<int>> idx;             // index 0 unused
  std::vector<Matrix<F>> bnd;                    // index 0, 1 unused
  std::vector<SubquotientPresentation<F>> pres;  // index 0 unused

  int dim_at(int d) const {
    return d >= 1 && d < static_cast<int>(pres.size()) ? pres[d].dim : 0;
  }
};

template <class F>
SelectedComplex<F> selected_complex(const F& f, const BlockComplex<F>& B,
                                    const std::vector<std::vector<char>>& keep) {
  int T = B.top_degree();
  SelectedComplex<F> S;
  S.idx.resize(T + 1);
  S.bnd.resize(2, Matrix<F>());
  S.pres.resize(1);
  for (int d = 1; d <= T; ++d)
    for (int j = 0; j < B.dim_at(d); ++j)
      if (keep[d][j]) S.idx[d].push_back(j);
  for (int d = 2; d <= T; ++d)
    S.bnd.push_back(select_columns(f, select_rows(f, B.bnd[d], S.idx[d - 1]), S.idx[d]));
  for (int d = 1; d <= T; ++d) {
    int n = static_cast<int>(S.idx[d].size());
    Matrix<F> Z = d >= 2 ? kernel_basis(f, S.bnd[d]) : Matrix<F>::identity(n, f);
    Matrix<F> Bd = d + 1 <= T ? S.bnd[d + 1] : Matrix<F>(n, 0, f);
    S.pres.push_back(subquotient(f, n, Z, Bd));
  }
  return S;
}

// The differential of a member chain may only hit member chains; required
// for the subcomplex and the quotient to make sense.
template <class F>
void require_differential_closed(const F& f, const BlockComplex<F>& B,
                                 const std::vector<std::vector<char>>& memb,
                                 const std::string& what) {
  for (int d = 2; d <= B.top_degree(); ++d)
    for (int j = 0; j < B.dim_at(d); ++j) {
      if (!memb[d][j]) continue;
      for (int r = 0; r < B.dim_at(d - 1); ++r)
        require(memb[d - 1][r] || f.is_zero(B.bnd[d].at(r, j)),
                what + ": differential leaves the subcomplex");
    }
}

template <class F>
void check_exactness(const F& f, const std::vector<int>& dims,
                     const std::vector<Matrix<F>>& maps, SequenceReport& rep) {
  int N = static_cast<int>(dims.size());
  std::vector<int> rk;
  for (const auto& m : maps) rk.push_back(rank(f, m));
  bool composites_zero = true;
  for (int i = 0; i + 1 < static_cast<int>(maps.size()); ++i)
    composites_zero = composites_zero && is_zero_matrix(f, mat_mul(f, maps[i + 1], maps[i]));
  rep.out_ranks = rk;
  rep.exact_at.assign(N, 0);
  bool all = composites_zero;
  for (int i = 0; i < N; ++i) {
    int in = i > 0 ? rk[i - 1] : 0;
    int out = i < N - 1 ? rk[i] : 0;
    rep.exact_at[i] = (in + out == dims[i]);
    all = all && rep.exact_at[i];
  }
  rep.exact = all;
  rep.alternating_sum = 0;
  for (int i = 0; i < N; ++i) rep.alternating_sum += (i % 2 == 0 ? 1 : -1) * dims[i];
  if (!composites_zero) rep.notes.push_back("consecutive maps do not compose to zero");
}

// Column selection that embeds coordinates on idx back into the full basis.
template <class F>
Matrix<F> embed_rows(const F& f, int n, const std::vector<int>& idx) {
  Matrix<F> E(n, static_cast<int>(idx.size()), f);
  for (int t = 0; t < static_cast<int>(idx.size()); ++t) E.at(idx[t], t) = f.one();
  return E;
}

// Long exact sequence of the pair (X, Y) on the block (v, w):
//   ... -> ^XHM_d[Y] -> HM_d[X] -> HM_d[X,Y] -> ^XHM_{d-1}[Y] -> ... -> 0
template <class F>
SequenceReport verify_les_relative(const F& f, const PrecubicalSet& X,
                                   const std::vector<char>& maskY, int v, int w) {
  BlockComplex<F> B = build_block_complex(f, X, v, w);
  int T = B.top_degree();
  std::vector<std::vector<char>> memb(T + 1), quot(T + 1);
  for (int d = 1; d <= T; ++d)
    for (int j = 0; j < B.dim_at(d); ++j) {
      bool m = chain_in_extended(X, maskY, B.basis[d][j]);
      memb[d].push_back(m);
      quot[d].push_back(!m);
    }
  require_differential_closed(f, B, memb, "relative pair complex");

  SelectedComplex<F> A = selected_complex(f, B, memb);
  SelectedComplex<F> C = selected_complex(f, B, quot);
  std::vector<SubquotientPresentation<F>> full(1);
  for (int d = 1; d <= T; ++d) {
    int n = B.dim_at(d);
    Matrix<F> Z = d >= 2 ? kernel_basis(f, B.bnd[d]) : Matrix<F>::identity(n, f);
    Matrix<F> Bd = d + 1 <= T ? B.bnd[d + 1] : Matrix<F>(n, 0, f);
    full.push_back(subquotient(f, n, Z, Bd));
  }

  SequenceReport rep;
  rep.kind = "relative";
  rep.v = v;
  rep.w = w;
  rep.top_degree = T;
  std::vector<Matrix<F>> maps;
  for (int d = T; d >= 1; --d) {
    rep.labels.push_back("^XHM_" + std::to_string(d) + "[Y]");
    rep.labels.push_back("HM_" + std::to_string(d) + "[X]");
    rep.labels.push_back("HM_" + std::to_string(d) + "[X,Y]");
    rep.dims.push_back(A.dim_at(d));
    rep.dims.push_back(full[d].dim);
    rep.dims.push_back(C.dim_at(d));
    int n = B.dim_at(d);
    Matrix<F> inclA = embed_rows(f, n, A.idx[d]);
    Matrix<F> selC = transpose(f, embed_rows(f, n, C.idx[d]));
    maps.push_back(mat_mul(f, full[d].proj, mat_mul(f, inclA, A.pres[d].reps)));
    maps.push_back(mat_mul(f, C.pres[d].proj, mat_mul(f, selC, full[d].reps)));
    if (d >= 2) {
      // connecting map: lift a relative cycle, take its boundary, read it in Y
      Matrix<F> lift = mat_mul(f, embed_rows(f, n, C.idx[d]), C.pres[d].reps);
      Matrix<F> img = mat_mul(f, B.bnd[d], lift);
      for (int r : C.idx[d - 1])
        for (int j = 0; j < img.cols; ++j)
          require(f.is_zero(img.at(r, j)),
                  "connecting map: boundary of a lift leaves the subcomplex");
      maps.push_back(mat_mul(f, A.pres[d - 1].proj, select_rows(f, img, A.idx[d - 1])));
    }
  }
  check_exactness(f, rep.dims, maps, rep);
  return rep;
}

// Mayer-Vietoris sequence of a good cover (X1, X2) on the block (v, w):
//  ... -> ^XHM_d[X1&X2] -> ^XHM_d[X1] + ^XHM_d[X2] -> HM_d[X] -> ... -> 0
template <class F>
SequenceReport verify_les_mv(const F& f, const PrecubicalSet& X, const std::vector<char>& m1,
                             const std::vector<char>& m2, int v, int w) {
  BlockComplex<F> B = build_block_complex(f, X, v, w);
  int T = B.top_degree();
  std::vector<char> mi = mask_intersect(m1, m2);
  std::vector<std::vector<char>> in1(T + 1), in2(T + 1), ini(T + 1);
  for (int d = 1; d <= T; ++d)
    for (int j = 0; j < B.dim_at(d); ++j) {
      in1[d].push_back(chain_in_extended(X, m1, B.basis[d][j]));
      in2[d].push_back(chain_in_extended(X, m2, B.basis[d][j]));
      ini[d].push_back(chain_in_extended(X, mi, B.basis[d][j]));
      require(in1[d].back() || in2[d].back(),
              "cover does not span the chain complex");
    }
  require_differential_closed(f, B, in1, "first cover part");
  require_differential_closed(f, B, in2, "second cover part");
  require_differential_closed(f, B, ini, "cover intersection");

  SelectedComplex<F> A1 = selected_complex(f, B, in1);
  SelectedComplex<F> A2 = selected_complex(f, B, in2);
  SelectedComplex<F> AI = selected_complex(f, B, ini);
  std::vector<SubquotientPresentation<F>> full(1);
  for (int d = 1; d <= T; ++d) {
    int n = B.dim_at(d);
    Matrix<F> Z = d >= 2 ? kernel_basis(f, B.bnd[d]) : Matrix<F>::identity(n, f);
    Matrix<F> Bd = d + 1 <= T ? B.bnd[d + 1] : Matrix<F>(n, 0, f);
    full.push_back(subquotient(f, n, Z, Bd));
  }

  SequenceReport rep;
  rep.kind = "mayer-vietoris";
  rep.v = v;
  rep.w = w;
  rep.top_degree = T;
  std::vector<Matrix<F>> maps;
  for (int d = T; d >= 1; --d) {
    rep.labels.push_back("^XHM_" + std::to_string(d) + "[X1&X2]");
    rep.labels.push_back("^XHM_" + std::to_string(d) + "[X1]+^XHM_" + std::to_string(d) + "[X2]");
    rep.labels.push_back("HM_" + std::to_string(d) + "[X]");
    int d1 = A1.dim_at(d), d2 = A2.dim_at(d);
    rep.dims.push_back(AI.dim_at(d));
    rep.dims.push_back(d1 + d2);
    rep.dims.push_back(full[d].dim);
    int n = B.dim_at(d);
    Matrix<F> e1 = embed_rows(f, n, A1.idx[d]);
    Matrix<F> e2 = embed_rows(f, n, A2.idx[d]);
    Matrix<F> eI = embed_rows(f, n, AI.idx[d]);
    // alpha: x -> (x, -x) through both inclusions
    Matrix<F> into1 = mat_mul(f, A1.pres[d].proj, mat_mul(f, transpose(f, e1), mat_mul(f, eI, AI.pres[d].reps)));
    Matrix<F> into2 = mat_mul(f, A2.pres[d].proj, mat_mul(f, transpose(f, e2), mat_mul(f, eI, AI.pres[d].reps)));
    Matrix<F> alpha(d1 + d2, AI.dim_at(d), f);
    for (int i = 0; i < d1; ++i)
      for (int j = 0; j < alpha.cols; ++j) alpha.at(i, j) = into1.at(i, j);
    for (int i = 0; i < d2; ++i)
      for (int j = 0; j < alpha.cols; ++j) alpha.at(d1 + i, j) = f.neg(into2.at(i, j));
    maps.push_back(alpha);
    // beta: (x, y) -> x + y into the full complex
    Matrix<F> from1 = mat_mul(f, full[d].proj, mat_mul(f, e1, A1.pres[d].reps));
    Matrix<F> from2 = mat_mul(f, full[d].proj, mat_mul(f, e2, A2.pres[d].reps));
    Matrix<F> beta(full[d].dim, d1 + d2, f);
    for (int i = 0; i < beta.rows; ++i) {
      for (int j = 0; j < d1; ++j) beta.at(i, j) = from1.at(i, j);
      for (int j = 0; j < d2; ++j) beta.at(i, d1 + j) = from2.at(i, j);
    }
    maps.push_back(beta);
    if (d >= 2) {
      // connecting map: split a cycle basis-wise into the two parts (the
      // cover spans every basis chain), take the boundary of the first part
      Matrix<F> z = full[d].reps;  // n x dim
      Matrix<F> part1(n, z.cols, f);
      for (int r = 0; r < n; ++r)
        if (in1[d][r])
          for (int j = 0; j < z.cols; ++j) part1.at(r, j) = z.at(r, j);
      Matrix<F> img = mat_mul(f, B.bnd[d], part1);
      for (int r = 0; r < B.dim_at(d - 1); ++r)
        if (!ini[d - 1][r])
          for (int j = 0; j < img.cols; ++j)
            require(f.is_zero(img.at(r, j)),
                    "connecting map: split boundary leaves the intersection");
      maps.push_back(mat_mul(f, AI.pres[d - 1].proj, select_rows(f, img, AI.idx[d - 1])));
    }
  }
  check_exactness(f, rep.dims, maps, rep);
  return rep;
}

}  // namespace dihom
