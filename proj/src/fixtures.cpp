#include "dihom/fixtures.hpp"

#include "dihom/tensor.hpp"

#include <stdexcept>

namespace dihom {

namespace {

CellSpec vert(std::string id) { return {std::move(id), {}, {}}; }

CellSpec edge(std::string id, std::string src, std::string dst) {
  return {std::move(id), {std::move(src)}, {std::move(dst)}};
}

CellSpec cell(std::string id, std::vector<std::string> d0, std::vector<std::string> d1) {
  return {std::move(id), std::move(d0), std::move(d1)};
}

// 3x3 vertex grid shared by the two-holes variants:
//   9 -i> 8 -j> 7
//   k     h     l
//   6 -d> 5 -f> 4
//   c     e     g
//   3 -a> 2 -b> 1
std::vector<CellSpec> two_holes_skeleton() {
  std::vector<CellSpec> s;
  for (int v = 1; v <= 9; ++v) s.push_back(vert(std::to_string(v)));
  s.push_back(edge("i", "9", "8"));
  s.push_back(edge("j", "8", "7"));
  s.push_back(edge("k", "9", "6"));
  s.push_back(edge("h", "8", "5"));
  s.push_back(edge("l", "7", "4"));
  s.push_back(edge("d", "6", "5"));
  s.push_back(edge("f", "5", "4"));
  s.push_back(edge("c", "6", "3"));
  s.push_back(edge("e", "5", "2"));
  s.push_back(edge("g", "4", "1"));
  s.push_back(edge("a", "3", "2"));
  s.push_back(edge("b", "2", "1"));
  return s;
}

std::vector<CellSpec> cube3_skeleton() {
  std::vector<CellSpec> s;
  for (const char* v : {"000", "001", "010", "011", "100", "101", "110", "111"})
    s.push_back(vert(v));
  s.push_back(edge("a00", "000", "100"));
  s.push_back(edge("0b0", "000", "010"));
  s.push_back(edge("00c", "000", "001"));
  s.push_back(edge("a10", "010", "110"));
  s.push_back(edge("a01", "001", "101"));
  s.push_back(edge("1b0", "100", "110"));
  s.push_back(edge("0b1", "001", "011"));
  s.push_back(edge("10c", "100", "101"));
  s.push_back(edge("01c", "010", "011"));
  s.push_back(edge("1b1", "101", "111"));
  s.push_back(edge("a11", "011", "111"));
  s.push_back(edge("11c", "110", "111"));
  // six faces; A/A' horizontal, B/B' back and front, C/C' left and right
  s.push_back(cell("A", {"0b0", "a00"}, {"1b0", "a10"}));
  s.push_back(cell("B", {"00c", "a00"}, {"10c", "a01"}));
  s.push_back(cell("C", {"00c", "0b0"}, {"01c", "0b1"}));
  s.push_back(cell("A'", {"0b1", "a01"}, {"1b1", "a11"}));
  s.push_back(cell("B'", {"01c", "a10"}, {"11c", "a11"}));
  s.push_back(cell("C'", {"10c", "1b0"}, {"11c", "1b1"}));
  return s;
}

}  // namespace

PrecubicalSet fx_two_holes_antidiag() {
  auto s = two_holes_skeleton();
  s.push_back(cell("C", {"k", "i"}, {"h", "d"}));
  s.push_back(cell("D", {"e", "f"}, {"g", "b"}));
  return build_pcs("two-holes-antidiag", s);
}

PrecubicalSet fx_two_holes_diag() {
  auto s = two_holes_skeleton();
  s.push_back(cell("E", {"h", "j"}, {"l", "f"}));
  s.push_back(cell("F", {"c", "d"}, {"e", "a"}));
  return build_pcs("two-holes-diag", s);
}

PrecubicalSet fx_cube3() {
  auto s = cube3_skeleton();
  s.push_back(cell("S", {"C", "B", "A"}, {"C'", "B'", "A'"}));
  return build_pcs("cube-3", s);
}

PrecubicalSet fx_empty_cube() { return build_pcs("empty-cube", cube3_skeleton()); }

PrecubicalSet fx_matchbox() {
  auto s = cube3_skeleton();
  std::vector<CellSpec> kept;
  for (auto& c : s)
    if (c.id != "A") kept.push_back(std::move(c));
  return build_pcs("matchbox", kept);
}

PrecubicalSet fx_empty_square() {
  std::vector<CellSpec> s;
  for (const char* v : {"1", "2", "3", "4"}) s.push_back(vert(v));
  s.push_back(edge("42", "4", "2"));
  s.push_back(edge("43", "4", "3"));
  s.push_back(edge("21", "2", "1"));
  s.push_back(edge("31", "3", "1"));
  return build_pcs("empty-square", s);
}

PrecubicalSet fx_square() {
  std::vector<CellSpec> s;
  for (const char* v : {"00", "01", "10", "11"}) s.push_back(vert(v));
  s.push_back(edge("a0", "00", "01"));
  s.push_back(edge("0b", "00", "10"));
  s.push_back(edge("a1", "01", "11"));
  s.push_back(edge("1b", "10", "11"));
  s.push_back(cell("C", {"a0", "0b"}, {"1b", "a1"}));
  return build_pcs("square", s);
}

PrecubicalSet fx_kronecker() {
  std::vector<CellSpec> s;
  s.push_back(vert("1"));
  s.push_back(vert("2"));
  s.push_back(edge("alpha", "2", "1"));
  s.push_back(edge("beta", "2", "1"));
  return build_pcs("kronecker", s);
}

PrecubicalSet fx_line(int m) {
  std::vector<CellSpec> s;
  for (int v = 0; v <= m; ++v) s.push_back(vert("v" + std::to_string(v)));
  for (int e = 1; e <= m; ++e)
    s.push_back(edge("x" + std::to_string(e), "v" + std::to_string(e - 1),
                     "v" + std::to_string(e)));
  return build_pcs("line-" + std::to_string(m), s);
}

namespace {

// cells of the directed n-cube are words over {0,1,*}; the i-th star is the
// i-th face direction
std::vector<CellSpec> cube_word_specs(int n, bool include_top) {
  std::vector<CellSpec> specs;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    std::string word;
    int c = code;
    int stars = 0;
    for (int i = 0; i < n; ++i) {
      int digit = c % 3;
      c /= 3;
      word += digit == 2 ? '*' : ('0' + digit);
      if (digit == 2) ++stars;
    }
    if (!include_top && stars == n) continue;
    CellSpec s;
    s.id = word;
    for (int i = 0; i < n; ++i) {
      if (word[i] != '*') continue;
      std::string lo = word, hi = word;
      lo[i] = '0';
      hi[i] = '1';
      s.d0.push_back(lo);
      s.d1.push_back(hi);
    }
    specs.push_back(std::move(s));
  }
  return specs;
}

}  // namespace

PrecubicalSet fx_dn(int n) {
  if (n < 1) throw std::invalid_argument("d-n needs n >= 1");
  return build_pcs("d-" + std::to_string(n), cube_word_specs(n, true));
}

PrecubicalSet fx_sn(int n) {
  if (n < 1) throw std::invalid_argument("s-n needs n >= 1");
  return build_pcs("s-" + std::to_string(n), cube_word_specs(n + 1, false));
}

std::vector<std::string> red_square_ids() {
  return {"000", "100", "001", "101", "a00", "00c", "10c", "a01"};
}

std::vector<std::string> mv_diag_x1_ids() {
  return {"9", "8", "6", "5", "3", "2", "i", "k", "h", "d", "c", "e", "a", "F"};
}

std::vector<std::string> mv_diag_x2_ids() {
  return {"8", "7", "5", "4", "2", "1", "j", "h", "l", "f", "e", "g", "b", "E"};
}

std::vector<std::string> mv_antidiag_left_x1_ids() {
  return {"9", "8", "6", "5", "3", "2", "i", "k", "h", "d", "c", "e", "a", "C"};
}

std::vector<std::string> mv_antidiag_left_x2_ids() {
  return {"8", "7", "5", "4", "2", "1", "j", "h", "f", "l", "e", "b", "g", "D"};
}

std::vector<std::string> mv_antidiag_center_x1_ids() {
  return {"9", "8", "6", "5", "4", "2", "1", "i", "k", "h", "d", "e", "f", "g", "b", "C", "D"};
}

std::vector<std::string> mv_antidiag_center_x2_ids() {
  return {"8", "7", "6", "5", "4", "3", "2", "j", "h", "l", "f", "d", "e", "c", "a"};
}

PrecubicalSet random_grid_complex(unsigned seed) {
  std::mt19937 rng(seed);
  PrecubicalSet grid = seed % 2 == 0 ? tensor_product(fx_line(3), fx_line(3))
                                     : tensor_product(tensor_product(fx_line(2), fx_line(2)),
                                                      fx_line(2));
  // keep the full 1-skeleton, coin every higher cell, then close downwards
  std::vector<char> keep(grid.num_cells(), 0);
  std::bernoulli_distribution coin(0.5);
  for (int c = 0; c < grid.num_cells(); ++c)
    keep[c] = grid.cells[c].dim <= 1 ? 1 : coin(rng);
  keep = face_closure(grid, keep);
  return restrict_pcs(grid, keep, "grid-" + std::to_string(seed));
}

std::vector<std::string> fixture_names() {
  return {"two-holes-antidiag", "two-holes-diag", "cube-3",      "empty-cube",
          "matchbox",           "empty-square",   "square",      "kronecker",
          "d-2",                "d-3",            "d-4",         "s-1",
          "s-2",                "s-3"};
}

PrecubicalSet fixture_by_name(const std::string& name) {
  if (name == "two-holes-antidiag") return fx_two_holes_antidiag();
  if (name == "two-holes-diag") return fx_two_holes_diag();
  if (name == "cube-3") return fx_cube3();
  if (name == "empty-cube") return fx_empty_cube();
  if (name == "matchbox") return fx_matchbox();
  if (name == "empty-square") return fx_empty_square();
  if (name == "square") return fx_square();
  if (name == "kronecker") return fx_kronecker();
  if (name.rfind("d-", 0) == 0) return fx_dn(std::stoi(name.substr(2)));
  if (name.rfind("s-", 0) == 0) return fx_sn(std::stoi(name.substr(2)));
  std::string all;
  for (const auto& n : fixture_names()) all += (all.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown fixture " + name + "; available: " + all);
}

}  // namespace dihom
