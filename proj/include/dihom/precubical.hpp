#pragma once

// Finite precubical sets. Cells are stored sorted by (dim, id), so the
// vertices occupy indices [0, num_vertices) and each dimension is a
// contiguous index range. A cell of dimension n has n lower and n upper
// faces, indexed 0..n-1; the cubical identity
//   d^k_i(d^l_j(c)) = d^l_{j-1}(d^k_i(c))   for i < j
// is enforced by validate().

#include <json.hpp>

#include <string>
#include <vector>

namespace dihom {

struct Cell {
  std::string id;
  int dim = 0;
  std::vector<int> lo, hi;  // face cell indices, size dim each
};

struct CellSpec {
  std::string id;
  std::vector<std::string> d0, d1;
};

struct PrecubicalSet {
  std::string name;
  std::vector<Cell> cells;        // sorted by (dim, id)
  std::vector<int> dim_offset;    // size max_dim+2; dim d occupies [dim_offset[d], dim_offset[d+1])
  int max_dim = 0;

  int num_cells() const { return static_cast<int>(cells.size()); }
  int num_vertices() const { return dim_offset.size() > 1 ? dim_offset[1] : 0; }
  int dim_begin(int d) const { return d <= max_dim ? dim_offset[d] : num_cells(); }
  int dim_end(int d) const { return d < max_dim ? dim_offset[d + 1] : num_cells(); }
  int count_dim(int d) const { return d > max_dim ? 0 : dim_end(d) - dim_begin(d); }

  int index(const std::string& id) const;           // throws on unknown id
  int find(const std::string& id) const;            // -1 on unknown id
  int face(int cell, int i, int eps) const;         // single face d^eps_i
  int iterated_face(int cell, std::vector<int> I, int eps) const;
  int full_face(int cell, int eps) const;           // vertex at the eps corner

  // Structural checks beyond what construction enforces: cubical identities
  // and acyclicity of the 1-skeleton. Returns human readable problems.
  std::vector<std::string> validate() const;
  void require_valid() const;  // throws std::logic_error on any problem

  bool is_dag() const;
  // reach[v * V + w] iff there is a (possibly empty) path of edges v -> w
  std::vector<char> vertex_reachability() const;
  // counts[v * V + w] = number of edge paths v -> w (1 on the diagonal)
  std::vector<long long> path_counts() const;
};

// Resolves ids, checks well-formedness (duplicate ids, unknown faces, face
// dimensions), sorts. Throws std::invalid_argument on malformed input.
PrecubicalSet build_pcs(std::string name, const std::vector<CellSpec>& specs);

PrecubicalSet parse_pcs(const nlohmann::json& j);
nlohmann::json serialize_pcs(const PrecubicalSet& X);

// Subcomplexes are masks over the ambient cell indices.
std::vector<char> mask_from_ids(const PrecubicalSet& X, const std::vector<std::string>& ids);
std::vector<char> full_mask(const PrecubicalSet& X);
std::vector<char> mask_intersect(const std::vector<char>& a, const std::vector<char>& b);
bool mask_is_closed(const PrecubicalSet& X, const std::vector<char>& mask);
std::vector<char> face_closure(const PrecubicalSet& X, std::vector<char> mask);
// Standalone precubical set on the masked cells (mask must be face closed).
PrecubicalSet restrict_pcs(const PrecubicalSet& X, const std::vector<char>& mask, std::string name);

}  // namespace dihom
