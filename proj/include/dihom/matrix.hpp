#pragma once

// Dense exact matrices and the linear algebra the homology computations sit
// on: reduced echelon forms, rank / kernel / image, quotient and subquotient
// presentations, and finite diagram limits / colimits.
//
// Convention: a Matrix with r rows and c cols is a map F^c -> F^r acting on
// column vectors. Pivoting is deterministic (first nonzero entry in scan
// order), so every basis produced here is reproducible across runs and
// fields.

#include "dihom/field.hpp"

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dihom {

inline void require(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error(what);
}

template <class F>
struct Matrix {
  using E = typename F::elem;
  int rows = 0, cols = 0;
  std::vector<E> a;  // row-major

  Matrix() = default;
  Matrix(int r, int c, const F& f) : rows(r), cols(c), a(static_cast<size_t>(r) * c, f.zero()) {}

  E& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const E& at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n, const F& f) {
    Matrix m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
    return m;
  }
};

template <class F>
bool mat_eq(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  if (A.rows != B.rows || A.cols != B.cols) return false;
  for (size_t i = 0; i < A.a.size(); ++i)
    if (!f.eq(A.a[i], B.a[i])) return false;
  return true;
}

template <class F>
bool is_zero_matrix(const F& f, const Matrix<F>& A) {
  for (const auto& x : A.a)
    if (!f.is_zero(x)) return false;
  return true;
}

template <class F>
Matrix<F> transpose(const F& f, const Matrix<F>& A) {
  Matrix<F> T(A.cols, A.rows, f);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) T.at(j, i) = A.at(i, j);
  return T;
}

template <class F>
Matrix<F> mat_mul(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  require(A.cols == B.rows, "mat_mul: shape mismatch");
  Matrix<F> C(A.rows, B.cols, f);
  for (int i = 0; i < A.rows; ++i)
    for (int k = 0; k < A.cols; ++k) {
      if (f.is_zero(A.at(i, k))) continue;
      for (int j = 0; j < B.cols; ++j)
        C.at(i, j) = f.add(C.at(i, j), f.mul(A.at(i, k), B.at(k, j)));
    }
  return C;
}

template <class F>
Matrix<F> mat_sub(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  require(A.rows == B.rows && A.cols == B.cols, "mat_sub: shape mismatch");
  Matrix<F> C(A.rows, A.cols, f);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = f.sub(A.a[i], B.a[i]);
  return C;
}

template <class F>
Matrix<F> mat_neg(const F& f, const Matrix<F>& A) {
  Matrix<F> C(A.rows, A.cols, f);
  for (size_t i = 0; i < A.a.size(); ++i) C.a[i] = f.neg(A.a[i]);
  return C;
}

template <class F>
Matrix<F> hstack(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  require(A.rows == B.rows, "hstack: row mismatch");
  Matrix<F> C(A.rows, A.cols + B.cols, f);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) C.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols; ++j) C.at(i, A.cols + j) = B.at(i, j);
  }
  return C;
}

template <class F>
Matrix<F> select_columns(const F& f, const Matrix<F>& A, const std::vector<int>& js) {
  Matrix<F> C(A.rows, static_cast<int>(js.size()), f);
  for (int i = 0; i < A.rows; ++i)
    for (int t = 0; t < static_cast<int>(js.size()); ++t) C.at(i, t) = A.at(i, js[t]);
  return C;
}

template <class F>
Matrix<F> select_rows(const F& f, const Matrix<F>& A, const std::vector<int>& is) {
  Matrix<F> C(static_cast<int>(is.size()), A.cols, f);
  for (int t = 0; t < static_cast<int>(is.size()); ++t)
    for (int j = 0; j < A.cols; ++j) C.at(t, j) = A.at(is[t], j);
  return C;
}

template <class F>
struct Echelon {
  Matrix<F> R;                     // reduced row echelon form
  std::vector<int> pivot_col;      // per pivot row, ascending
  std::vector<int> pivot_of_col;   // col -> pivot row, or -1
  int rank = 0;
};

template <class F>
Echelon<F> rref(const F& f, Matrix<F> M) {
  Echelon<F> E;
  E.pivot_of_col.assign(M.cols, -1);
  int r = 0;
  for (int c = 0; c < M.cols && r < M.rows; ++c) {
    int piv = -1;
    for (int i = r; i < M.rows; ++i)
      if (!f.is_zero(M.at(i, c))) { piv = i; break; }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < M.cols; ++j) std::swap(M.at(piv, j), M.at(r, j));
    typename F::elem s = f.inv(M.at(r, c));
    for (int j = c; j < M.cols; ++j) M.at(r, j) = f.mul(M.at(r, j), s);
    for (int i = 0; i < M.rows; ++i) {
      if (i == r || f.is_zero(M.at(i, c))) continue;
      typename F::elem t = M.at(i, c);
      for (int j = c; j < M.cols; ++j) M.at(i, j) = f.sub(M.at(i, j), f.mul(t, M.at(r, j)));
    }
    E.pivot_col.push_back(c);
    E.pivot_of_col[c] = r;
    ++r;
  }
  E.R = std::move(M);
  E.rank = r;
  return E;
}

template <class F>
int rank(const F& f, const Matrix<F>& M) {
  return rref(f, M).rank;
}

// Columns x with Mx = 0; one column per free variable, ascending.
template <class F>
Matrix<F> kernel_basis(const F& f, const Matrix<F>& M) {
  Echelon<F> E = rref(f, M);
  std::vector<int> free_cols;
  for (int c = 0; c < M.cols; ++c)
    if (E.pivot_of_col[c] < 0) free_cols.push_back(c);
  Matrix<F> K(M.cols, static_cast<int>(free_cols.size()), f);
  for (int t = 0; t < static_cast<int>(free_cols.size()); ++t) {
    int c = free_cols[t];
    K.at(c, t) = f.one();
    for (int r = 0; r < E.rank; ++r) K.at(E.pivot_col[r], t) = f.neg(E.R.at(r, c));
  }
  return K;
}

// The pivot columns of M itself: the first maximal independent column family.
template <class F>
Matrix<F> image_basis(const F& f, const Matrix<F>& M) {
  Echelon<F> E = rref(f, M);
  return select_columns(f, M, E.pivot_col);
}

// Solves AX = B columnwise; nullopt when inconsistent. Free variables are 0.
template <class F>
std::optional<Matrix<F>> solve(const F& f, const Matrix<F>& A, const Matrix<F>& B) {
  require(A.rows == B.rows, "solve: shape mismatch");
  Echelon<F> E = rref(f, hstack(f, A, B));
  for (int c : E.pivot_col)
    if (c >= A.cols) return std::nullopt;
  Matrix<F> X(A.cols, B.cols, f);
  for (int r = 0; r < E.rank; ++r)
    for (int k = 0; k < B.cols; ++k) X.at(E.pivot_col[r], k) = E.R.at(r, A.cols + k);
  return X;
}

// Reduced column echelon basis of the column span. pivot_rows[t] is the
// leading row of column t; the reduced form has C[pivot_rows[t], s] = delta.
template <class F>
struct ColEchelon {
  Matrix<F> C;
  std::vector<int> pivot_rows;
};

template <class F>
ColEchelon<F> rcef(const F& f, const Matrix<F>& M) {
  Echelon<F> E = rref(f, transpose(f, M));
  ColEchelon<F> out;
  out.pivot_rows = E.pivot_col;
  std::vector<int> keep(E.rank);
  for (int i = 0; i < E.rank; ++i) keep[i] = i;
  out.C = transpose(f, select_rows(f, E.R, keep));
  return out;
}

// Presentation of F^n / span(S): representatives are the standard basis
// vectors at the non-pivot rows of the column echelon of S, and proj is the
// linear retraction with proj * S = 0 and proj(e_{rep_rows[t]}) = e_t.
template <class F>
struct QuotientPresentation {
  std::vector<int> rep_rows;
  Matrix<F> proj;  // q x n
};

template <class F>
QuotientPresentation<F> quotient(const F& f, int n, const Matrix<F>& S) {
  require(S.rows == n || S.cols == 0, "quotient: ambient dimension mismatch");
  ColEchelon<F> E = rcef(f, S.cols ? S : Matrix<F>(n, 0, f));
  std::vector<char> is_piv(n, 0);
  for (int r : E.pivot_rows) is_piv[r] = 1;
  QuotientPresentation<F> Q;
  for (int i = 0; i < n; ++i)
    if (!is_piv[i]) Q.rep_rows.push_back(i);
  Q.proj = Matrix<F>(static_cast<int>(Q.rep_rows.size()), n, f);
  for (int t = 0; t < static_cast<int>(Q.rep_rows.size()); ++t) {
    int i = Q.rep_rows[t];
    Q.proj.at(t, i) = f.one();
    for (int s = 0; s < E.C.cols; ++s)
      if (!f.is_zero(E.C.at(i, s))) Q.proj.at(t, E.pivot_rows[s]) = f.neg(E.C.at(i, s));
  }
  return Q;
}

// Presentation of span(Z) / span(Bd) inside F^n. reps holds cycle
// representatives as columns; proj is defined on all of F^n, restricts to the
// quotient map on span(Z), and satisfies proj * reps = Id, proj * Bd = 0.
template <class F>
struct SubquotientPresentation {
  int dim = 0;
  Matrix<F> reps;  // n x dim
  Matrix<F> proj;  // dim x n
};

template <class F>
SubquotientPresentation<F> subquotient(const F& f, int n, const Matrix<F>& Z, const Matrix<F>& Bd) {
  require(Z.rows == n || Z.cols == 0, "subquotient: Z ambient mismatch");
  require(Bd.rows == n || Bd.cols == 0, "subquotient: Bd ambient mismatch");
  ColEchelon<F> ZE = rcef(f, Z.cols ? Z : Matrix<F>(n, 0, f));
  int zr = ZE.C.cols;
  Matrix<F> K(zr, n, f);  // picks coordinates w.r.t. the echelon cycle basis
  for (int t = 0; t < zr; ++t) K.at(t, ZE.pivot_rows[t]) = f.one();
  Matrix<F> Y = Bd.cols ? mat_mul(f, K, Bd) : Matrix<F>(zr, 0, f);
  if (Bd.cols) {
    // boundaries must lie in the cycle space
    Matrix<F> back = mat_mul(f, ZE.C, Y);
    require(mat_eq(f, back, Bd), "subquotient: Bd not contained in span(Z)");
  }
  QuotientPresentation<F> Q = quotient(f, zr, Y);
  SubquotientPresentation<F> P;
  P.dim = static_cast<int>(Q.rep_rows.size());
  P.reps = select_columns(f, ZE.C, Q.rep_rows);
  P.proj = mat_mul(f, Q.proj, K);
  return P;
}

// Finite diagrams of finite dimensional vector spaces.
template <class F>
struct Diagram {
  struct Arrow {
    int src = 0, tgt = 0;
    Matrix<F> map;
  };
  std::vector<int> dims;
  std::vector<Arrow> arrows;

  int total() const {
    int n = 0;
    for (int d : dims) n += d;
    return n;
  }
  std::vector<int> offsets() const {
    std::vector<int> off(dims.size() + 1, 0);
    for (size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
    return off;
  }
};

template <class F>
struct LimitPresentation {
  int dim = 0;
  Matrix<F> basis;                // total x dim, columns are compatible families
  std::vector<Matrix<F>> cone;    // per object: dims[n] x dim
};

template <class F>
LimitPresentation<F> diagram_limit(const F& f, const Diagram<F>& D) {
  auto off = D.offsets();
  int total = D.total();
  int crows = 0;
  for (const auto& ar : D.arrows) crows += D.dims[ar.tgt];
  Matrix<F> C(crows, total, f);
  int r0 = 0;
  for (const auto& ar : D.arrows) {
    // x_tgt - map * x_src = 0
    for (int i = 0; i < D.dims[ar.tgt]; ++i) C.at(r0 + i, off[ar.tgt] + i) = f.one();
    for (int i = 0; i < ar.map.rows; ++i)
      for (int j = 0; j < ar.map.cols; ++j)
        C.at(r0 + i, off[ar.src] + j) = f.sub(C.at(r0 + i, off[ar.src] + j), ar.map.at(i, j));
    r0 += D.dims[ar.tgt];
  }
  LimitPresentation<F> L;
  L.basis = kernel_basis(f, C);
  L.dim = L.basis.cols;
  for (size_t n = 0; n < D.dims.size(); ++n) {
    std::vector<int> rows(D.dims[n]);
    for (int i = 0; i < D.dims[n]; ++i) rows[i] = off[n] + i;
    L.cone.push_back(select_rows(f, L.basis, rows));
  }
  return L;
}

template <class F>
struct ColimitPresentation {
  int dim = 0;
  Matrix<F> proj;                  // dim x total
  std::vector<Matrix<F>> cocone;   // per object: dim x dims[n]
};

template <class F>
ColimitPresentation<F> diagram_colimit(const F& f, const Diagram<F>& D) {
  auto off = D.offsets();
  int total = D.total();
  int rcols = 0;
  for (const auto& ar : D.arrows) rcols += D.dims[ar.src];
  Matrix<F> Rel(total, rcols, f);
  int c0 = 0;
  for (const auto& ar : D.arrows) {
    // iota_tgt(map e_j) - iota_src(e_j)
    for (int j = 0; j < D.dims[ar.src]; ++j) {
      for (int i = 0; i < ar.map.rows; ++i) Rel.at(off[ar.tgt] + i, c0 + j) = ar.map.at(i, j);
      Rel.at(off[ar.src] + j, c0 + j) = f.sub(Rel.at(off[ar.src] + j, c0 + j), f.one());
    }
    c0 += D.dims[ar.src];
  }
  QuotientPresentation<F> Q = quotient(f, total, Rel);
  ColimitPresentation<F> C;
  C.dim = static_cast<int>(Q.rep_rows.size());
  C.proj = Q.proj;
  for (size_t n = 0; n < D.dims.size(); ++n) {
    std::vector<int> cols(D.dims[n]);
    for (int i = 0; i < D.dims[n]; ++i) cols[i] = off[n] + i;
    C.cocone.push_back(select_columns(f, Q.proj, cols));
  }
  return C;
}

// Rank of the canonical map lim -> colim factored through any object of the
// diagram. The composite must not depend on the object; this is asserted.
template <class F>
int canonical_rank(const F& f, const Diagram<F>& D) {
  require(!D.dims.empty(), "canonical_rank: empty diagram");
  LimitPresentation<F> L = diagram_limit(f, D);
  ColimitPresentation<F> C = diagram_colimit(f, D);
  Matrix<F> comp = mat_mul(f, C.cocone[0], L.cone[0]);
  for (size_t n = 1; n < D.dims.size(); ++n) {
    Matrix<F> other = mat_mul(f, C.cocone[n], L.cone[n]);
    require(mat_eq(f, comp, other), "canonical_rank: composite depends on the object");
  }
  return rank(f, comp);
}

template <class F>
nlohmann::json matrix_json(const F& f, const Matrix<F>& M) {
  nlohmann::json entries = nlohmann::json::array();
  for (int i = 0; i < M.rows; ++i)
    for (int j = 0; j < M.cols; ++j)
      entries.push_back({f.num_str(M.at(i, j)), f.den_str(M.at(i, j))});
  return {{"rows", M.rows}, {"cols", M.cols}, {"entries", entries}};
}

}  // namespace dihom
