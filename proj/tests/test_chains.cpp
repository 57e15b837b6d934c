#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihom/chains.hpp"
#include "dihom/field.hpp"
#include "dihom/fixtures.hpp"

#include <map>
#include <random>

using namespace dihom;

namespace {

CubeChain mk(const PrecubicalSet& X, const std::vector<std::string>& ids) {
  CubeChain c;
  for (const auto& id : ids) c.cells.push_back(X.index(id));
  c.src = X.full_face(c.cells.front(), 0);
  c.dst = X.full_face(c.cells.back(), 1);
  return c;
}

// Signed terms keyed by the cell sequence; src/dst are constant on a block.
std::map<std::vector<int>, int> terms_of(const PrecubicalSet& X, const CubeChain& c) {
  std::map<std::vector<int>, int> t;
  for (const auto& [term, sign] : chain_boundary(X, c)) t[term.cells] += sign;
  return t;
}

bool boundary_is(const PrecubicalSet& X, const std::vector<std::string>& chain,
                 const std::vector<std::pair<std::vector<std::string>, int>>& expected) {
  auto got = terms_of(X, mk(X, chain));
  std::map<std::vector<int>, int> want;
  for (const auto& [ids, sign] : expected) want[mk(X, ids).cells] = sign;
  return got == want;
}

// Expand the differential twice over the integers and collect coefficients.
bool dd_vanishes(const PrecubicalSet& X, const CubeChain& c) {
  std::map<std::vector<int>, int> acc;
  for (const auto& [t1, s1] : chain_boundary(X, c))
    for (const auto& [t2, s2] : chain_boundary(X, t1)) acc[t2.cells] += s1 * s2;
  for (const auto& [k, v] : acc)
    if (v != 0) return false;
  return true;
}

long long paths(const PrecubicalSet& X, const std::string& v, const std::string& w) {
  auto c = X.path_counts();
  return c[static_cast<size_t>(X.index(v)) * X.num_vertices() + X.index(w)];
}

}  // namespace

TEST_CASE("empty chains sit on the diagonal") {
  PrecubicalSet X = fx_empty_square();
  auto e4 = enumerate_chains(X, X.index("4"), X.index("4"), 0);
  REQUIRE(e4.size() == 1);
  CHECK(e4[0].cells.empty());
  CHECK(chain_dim(X, e4[0]) == 0);
  CHECK(chain_length(X, e4[0]) == 0);
  CHECK(chain_boundary(X, e4[0]).empty());
  CHECK(enumerate_chains(X, X.index("4"), X.index("1"), 0).size() == 2);
  CHECK(enumerate_chains(X, X.index("1"), X.index("4"), 0).empty());
}

TEST_CASE("dim 0 chains are exactly the paths") {
  for (auto fx : {fx_two_holes_antidiag(), fx_empty_cube(), fx_cube3()}) {
    INFO(fx.name);
    auto counts = fx.path_counts();
    int V = fx.num_vertices();
    for (int v = 0; v < V; ++v)
      for (int w = 0; w < V; ++w)
        CHECK(static_cast<long long>(enumerate_chains(fx, v, w, 0).size()) ==
              counts[static_cast<size_t>(v) * V + w]);
  }
}

TEST_CASE("chain dim and length bookkeeping") {
  PrecubicalSet X = fx_two_holes_diag();
  CubeChain c = mk(X, {"k", "F", "b"});
  CHECK(chain_dim(X, c) == 1);
  CHECK(chain_length(X, c) == 4);
  CHECK(chain_str(X, c) == "(k,F,b)");
  CHECK(c.src == X.index("9"));
  CHECK(c.dst == X.index("1"));
}

TEST_CASE("boundary of a 2-cell with whiskers") {
  PrecubicalSet X = fx_two_holes_diag();
  CHECK(boundary_is(X, {"k", "F", "b"},
                    {{{"k", "d", "e", "b"}, 1}, {{"k", "c", "a", "b"}, -1}}));
  CHECK(boundary_is(X, {"E"}, {{{"j", "l"}, 1}, {{"h", "f"}, -1}}));
  CHECK(boundary_is(X, {"F"}, {{{"d", "e"}, 1}, {{"c", "a"}, -1}}));
}

TEST_CASE("boundary signs depend on the position in the chain") {
  PrecubicalSet X = fx_two_holes_antidiag();
  CHECK(boundary_is(X, {"i", "h", "D"},
                    {{{"i", "h", "f", "g"}, 1}, {{"i", "h", "e", "b"}, -1}}));
  CHECK(boundary_is(X, {"C", "f", "g"},
                    {{{"i", "h", "f", "g"}, 1}, {{"k", "d", "f", "g"}, -1}}));
  CHECK(boundary_is(X, {"C", "D"}, {{{"i", "h", "D"}, 1},
                                    {{"k", "d", "D"}, -1},
                                    {{"C", "f", "g"}, -1},
                                    {{"C", "e", "b"}, 1}}));
}

TEST_CASE("boundary of the solid cube") {
  PrecubicalSet X = fx_cube3();
  CHECK(boundary_is(X, {"S"},
                    {{{"A", "11c"}, 1},
                     {{"B", "1b1"}, -1},
                     {{"C", "a11"}, 1},
                     {{"a00", "C'"}, -1},
                     {{"0b0", "B'"}, 1},
                     {{"00c", "A'"}, -1}}));
}

TEST_CASE("the differential squares to zero on every fixture block") {
  std::vector<PrecubicalSet> sets = {fx_two_holes_antidiag(), fx_two_holes_diag(),
                                     fx_cube3(),              fx_empty_cube(),
                                     fx_matchbox(),           fx_dn(3),
                                     fx_sn(2),                fx_sn(3),
                                     fx_dn(4),                fx_sn(4)};
  for (std::uint64_t seed = 1; seed <= 10; ++seed) sets.push_back(random_grid_complex(seed));
  for (const auto& X : sets) {
    INFO(X.name);
    for (auto [v, w] : reachable_pairs(X))
      for (int d = 1;; ++d) {
        auto chains = enumerate_chains(X, v, w, d);
        if (chains.empty()) break;
        for (const auto& c : chains) CHECK(dd_vanishes(X, c));
      }
  }
  // one corner block of the filled 5-cube, where cells of dimension 5 split
  PrecubicalSet d5 = fx_dn(5);
  int b5 = d5.index(std::string(5, '0')), t5 = d5.index(std::string(5, '1'));
  for (int d = 1;; ++d) {
    auto chains = enumerate_chains(d5, b5, t5, d);
    if (chains.empty()) break;
    for (const auto& c : chains) CHECK(dd_vanishes(d5, c));
  }
}

TEST_CASE("block sizes for the frozen examples") {
  PrecubicalSet anti = fx_two_holes_antidiag();
  int v9 = anti.index("9"), v1 = anti.index("1");
  CHECK(enumerate_chains(anti, v9, v1, 0).size() == 6);
  CHECK(enumerate_chains(anti, v9, v1, 1).size() == 4);
  CHECK(enumerate_chains(anti, v9, v1, 2).size() == 1);
  CHECK(enumerate_chains(anti, v9, v1, 3).empty());

  PrecubicalSet diag = fx_two_holes_diag();
  v9 = diag.index("9");
  v1 = diag.index("1");
  CHECK(enumerate_chains(diag, v9, v1, 1).size() == 2);
  CHECK(enumerate_chains(diag, v9, v1, 2).empty());

  PrecubicalSet cube = fx_cube3();
  int b = cube.index("000"), t = cube.index("111");
  CHECK(enumerate_chains(cube, b, t, 0).size() == 6);
  CHECK(enumerate_chains(cube, b, t, 1).size() == 6);
  CHECK(enumerate_chains(cube, b, t, 2).size() == 1);
  CHECK(chain_str(cube, enumerate_chains(cube, b, t, 2)[0]) == "(S)");

  PrecubicalSet ec = fx_empty_cube();
  b = ec.index("000");
  t = ec.index("111");
  CHECK(enumerate_chains(ec, b, t, 1).size() == 6);
  CHECK(enumerate_chains(ec, b, t, 2).empty());

  PrecubicalSet mb = fx_matchbox();
  b = mb.index("000");
  t = mb.index("111");
  CHECK(enumerate_chains(mb, b, t, 1).size() == 5);
}

TEST_CASE("chains factor freely through their cores") {
  // A chain of dim >= 1 decomposes uniquely as path * core * path where the
  // core runs from the first to the last cell of dim >= 2. Counting both
  // sides gives a strong consistency check on the enumeration.
  for (auto X : {fx_two_holes_antidiag(), fx_two_holes_diag(), fx_cube3(),
                 random_grid_complex(42), random_grid_complex(43)}) {
    INFO(X.name);
    int V = X.num_vertices();
    // cores by (src, dst, dim): chains whose first and last cells have dim >= 2
    std::map<std::tuple<int, int, int>, long long> cores;
    for (auto [v, w] : reachable_pairs(X))
      for (int d = 1;; ++d) {
        auto chains = enumerate_chains(X, v, w, d);
        if (chains.empty()) break;
        for (const auto& c : chains)
          if (X.cells[c.cells.front()].dim >= 2 && X.cells[c.cells.back()].dim >= 2)
            ++cores[{v, w, d}];
      }
    auto counts = X.path_counts();
    auto np = [&](int a, int b) { return counts[static_cast<size_t>(a) * V + b]; };
    int top = 0;
    for (const auto& [key, n] : cores) top = std::max(top, std::get<2>(key));
    for (auto [v, w] : reachable_pairs(X))
      for (int d = 1; d <= top + 1; ++d) {
        long long direct = static_cast<long long>(enumerate_chains(X, v, w, d).size());
        long long via_cores = 0;
        for (const auto& [key, n] : cores) {
          auto [cv, cw, cd] = key;
          if (cd == d) via_cores += np(v, cv) * n * np(cw, w);
        }
        CHECK(direct == via_cores);
      }
  }
}

TEST_CASE("ordering of enumerated chains is by length then cell sequence") {
  PrecubicalSet X = fx_two_holes_antidiag();
  auto chains = enumerate_chains(X, X.index("9"), X.index("1"), 1);
  for (size_t i = 1; i < chains.size(); ++i) {
    int la = chain_length(X, chains[i - 1]), lb = chain_length(X, chains[i]);
    CHECK((la < lb || (la == lb && chains[i - 1].cells < chains[i].cells)));
  }
}

TEST_CASE("block complexes over the rationals") {
  RationalField f;
  PrecubicalSet X = fx_two_holes_antidiag();
  auto B = build_block_complex(f, X, X.index("9"), X.index("1"));
  REQUIRE(B.top_degree() == 3);
  CHECK(B.dim_at(1) == 6);
  CHECK(B.dim_at(2) == 4);
  CHECK(B.dim_at(3) == 1);
  CHECK(B.bnd[2].rows == 6);
  CHECK(B.bnd[2].cols == 4);
  // augmentation kills boundaries
  auto e = augmentation(f, B.dim_at(1));
  CHECK(is_zero_matrix(f, mat_mul(f, e, B.bnd[2])));

  // every boundary coefficient is 0, 1 or -1
  for (int d = 2; d <= B.top_degree(); ++d)
    for (int i = 0; i < B.bnd[d].rows; ++i)
      for (int j = 0; j < B.bnd[d].cols; ++j) {
        auto x = B.bnd[d].at(i, j);
        CHECK((f.is_zero(x) || f.eq(x, f.one()) || f.eq(x, f.neg(f.one()))));
      }
}

TEST_CASE("augmentation composes to zero on random grids") {
  RationalField f;
  for (std::uint64_t seed = 7; seed < 11; ++seed) {
    PrecubicalSet X = random_grid_complex(seed);
    for (auto [v, w] : reachable_pairs(X)) {
      auto B = build_block_complex(f, X, v, w);
      if (B.top_degree() >= 2)
        CHECK(is_zero_matrix(f, mat_mul(f, augmentation(f, B.dim_at(1)), B.bnd[2])));
    }
  }
}
