#pragma once

// Homology of the cube chain complex, blockwise over vertex pairs, and the
// induced quiver representation over the full path category: one node per
// reachable pair (v, w), a right arrow (v, w) -> (v, w') for every edge
// w -> w' (append) and a left arrow (v, w) -> (v', w) for every edge v' -> v
// (prepend; the first coordinate is contravariant).

#include "dihom/chains.hpp"
#include "dihom/matrix.hpp"
#include "dihom/precubical.hpp"

#include <map>
#include <utility>
#include <vector>

namespace dihom {

template <class F>
struct HomologyBlock {
  BlockComplex<F> cx;
  std::vector<SubquotientPresentation<F>> pres;  // pres[d], index 0 unused

  int top_degree() const { return cx.top_degree(); }
  int dim_at(int d) const {
    return d >= 1 && d < static_cast<int>(pres.size()) ? pres[d].dim : 0;
  }
};

template <class F>
HomologyBlock<F> homology_block(const F& f, const PrecubicalSet& X, int v, int w,
                                int min_top_degree = 0) {
  HomologyBlock<F> H;
  H.cx = build_block_complex(f, X, v, w, min_top_degree);
  H.pres.resize(1);
  for (int d = 1; d <= H.cx.top_degree(); ++d) {
    int n = H.cx.dim_at(d);
    Matrix<F> Z = d >= 2 ? kernel_basis(f, H.cx.bnd[d]) : Matrix<F>::identity(n, f);
    Matrix<F> Bd = d + 1 <= H.cx.top_degree() ? H.cx.bnd[d + 1] : Matrix<F>(n, 0, f);
    H.pres.push_back(subquotient(f, n, Z, Bd));
  }
  return H;
}

template <class F>
std::map<std::pair<int, int>, HomologyBlock<F>> homology_blocks(
    const F& f, const PrecubicalSet& X, const std::vector<std::pair<int, int>>& pairs,
    int min_top_degree = 0) {
  std::map<std::pair<int, int>, HomologyBlock<F>> out;
  for (auto [v, w] : pairs) out.emplace(std::make_pair(v, w), homology_block(f, X, v, w, min_top_degree));
  return out;
}

struct FqArrow {
  int src = 0, tgt = 0;  // node indices
  int edge = 0;          // acting edge cell
  bool left = false;     // true: prepend to the first coordinate
};

struct FqGraph {
  std::vector<std::pair<int, int>> nodes;  // reachable pairs, lex sorted
  std::vector<FqArrow> arrows;             // grouped by src; right before left
  std::map<std::pair<int, int>, int> node_of;

  int find_node(int v, int w) const {
    auto it = node_of.find({v, w});
    return it == node_of.end() ? -1 : it->second;
  }
};

FqGraph build_fq(const PrecubicalSet& X);

// Nodes r with p -> r -> q inside the arrow graph (p and q included).
std::vector<int> interval_nodes(const FqGraph& fq, int p, int q);

// Chain level action: append (right) or prepend (left) the edge to every
// basis chain of the source block; entries are 0/1.
template <class F>
Matrix<F> chain_action(const F& f, const PrecubicalSet& X, const std::vector<CubeChain>& src,
                       const std::vector<CubeChain>& tgt, int edge, bool left) {
  std::map<std::vector<int>, int> where;
  for (int i = 0; i < static_cast<int>(tgt.size()); ++i) where[tgt[i].cells] = i;
  Matrix<F> A(static_cast<int>(tgt.size()), static_cast<int>(src.size()), f);
  for (int j = 0; j < static_cast<int>(src.size()); ++j) {
    std::vector<int> cells = src[j].cells;
    if (left)
      cells.insert(cells.begin(), edge);
    else
      cells.push_back(edge);
    auto it = where.find(cells);
    require(it != where.end(), "acted chain missing from target basis");
    A.at(it->second, j) = f.one();
  }
  return A;
}

template <class F>
Matrix<F> homology_action(const F& f, const PrecubicalSet& X, const HomologyBlock<F>& src,
                          const HomologyBlock<F>& tgt, int degree, int edge, bool left) {
  const auto& sb = degree <= src.cx.top_degree() ? src.cx.basis[degree] : std::vector<CubeChain>{};
  const auto& tb = degree <= tgt.cx.top_degree() ? tgt.cx.basis[degree] : std::vector<CubeChain>{};
  Matrix<F> A = chain_action(f, X, sb, tb, edge, left);
  return mat_mul(f, tgt.pres[degree].proj, mat_mul(f, A, src.pres[degree].reps));
}

template <class F>
struct FqRepresentation {
  FqGraph fq;
  int degree = 1;
  std::vector<int> dims;              // per node
  std::vector<Matrix<F>> arrow_maps;  // per arrow
};

template <class F>
FqRepresentation<F> to_representation(const F& f, const PrecubicalSet& X, int degree) {
  FqRepresentation<F> R;
  R.fq = build_fq(X);
  R.degree = degree;
  std::map<std::pair<int, int>, HomologyBlock<F>> H =
      homology_blocks(f, X, R.fq.nodes, degree);
  for (const auto& vw : R.fq.nodes) R.dims.push_back(H.at(vw).dim_at(degree));
  for (const FqArrow& ar : R.fq.arrows) {
    const auto& s = R.fq.nodes[ar.src];
    const auto& t = R.fq.nodes[ar.tgt];
    R.arrow_maps.push_back(
        homology_action(f, X, H.at(s), H.at(t), degree, ar.edge, ar.left));
  }
  return R;
}

struct RankInvariant {
  int lim = 0, colim = 0, rank = 0;
};

template <class F>
RankInvariant rank_invariant(const F& f, const FqRepresentation<F>& rep, int p, int q) {
  std::vector<int> nodes = interval_nodes(rep.fq, p, q);
  if (nodes.empty()) return {};
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) local[nodes[i]] = i;
  Diagram<F> D;
  for (int n : nodes) D.dims.push_back(rep.dims[n]);
  for (size_t a = 0; a < rep.fq.arrows.size(); ++a) {
    auto si = local.find(rep.fq.arrows[a].src), ti = local.find(rep.fq.arrows[a].tgt);
    if (si == local.end() || ti == local.end()) continue;
    D.arrows.push_back({si->second, ti->second, rep.arrow_maps[a]});
  }
  RankInvariant out;
  LimitPresentation<F> L = diagram_limit(f, D);
  ColimitPresentation<F> C = diagram_colimit(f, D);
  out.lim = L.dim;
  out.colim = C.dim;
  Matrix<F> comp = mat_mul(f, C.cocone[0], L.cone[0]);
  for (size_t n = 1; n < D.dims.size(); ++n)
    require(mat_eq(f, comp, mat_mul(f, C.cocone[n], L.cone[n])),
            "canonical map depends on the interval node");
  out.rank = rank(f, comp);
  return out;
}

// Dimension level bisimulation between two quiver representations: relate
// nodes of equal dimension, refine under the transfer condition (every arrow
// out of one side must be matched, same side of the action, by an arrow out
// of the other into a related node), and require the fixpoint to be total on
// both sides.
template <class F>
bool dim_bisimulation(const FqRepresentation<F>& A, const FqRepresentation<F>& B) {
  int na = static_cast<int>(A.dims.size()), nb = static_cast<int>(B.dims.size());
  std::vector<char> rel(static_cast<size_t>(na) * nb, 0);
  for (int m = 0; m < na; ++m)
    for (int n = 0; n < nb; ++n) rel[static_cast<size_t>(m) * nb + n] = A.dims[m] == B.dims[n];
  bool changed = true;
  while (changed) {
    changed = false;
    for (int m = 0; m < na; ++m)
      for (int n = 0; n < nb; ++n) {
        if (!rel[static_cast<size_t>(m) * nb + n]) continue;
        bool ok = true;
        for (const FqArrow& ar : A.fq.arrows) {
          if (ar.src != m) continue;
          bool matched = false;
          for (const FqArrow& br : B.fq.arrows)
            if (br.src == n && br.left == ar.left &&
                rel[static_cast<size_t>(ar.tgt) * nb + br.tgt]) {
              matched = true;
              break;
            }
          if (!matched) { ok = false; break; }
        }
        if (ok)
          for (const FqArrow& br : B.fq.arrows) {
            if (br.src != n) continue;
            bool matched = false;
            for (const FqArrow& ar : A.fq.arrows)
              if (ar.src == m && ar.left == br.left &&
                  rel[static_cast<size_t>(ar.tgt) * nb + br.tgt]) {
                matched = true;
                break;
              }
            if (!matched) { ok = false; break; }
          }
        if (!ok) {
          rel[static_cast<size_t>(m) * nb + n] = 0;
          changed = true;
        }
      }
  }
  for (int m = 0; m < na; ++m) {
    bool any = false;
    for (int n = 0; n < nb; ++n) any = any || rel[static_cast<size_t>(m) * nb + n];
    if (!any) return false;
  }
  for (int n = 0; n < nb; ++n) {
    bool any = false;
    for (int m = 0; m < na; ++m) any = any || rel[static_cast<size_t>(m) * nb + n];
    if (!any) return false;
  }
  return true;
}

}  // namespace dihom
