#include "dihom/precubical.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dihom {

int PrecubicalSet::find(const std::string& id) const {
  for (int i = 0; i < num_cells(); ++i)
    if (cells[i].id == id) return i;
  return -1;
}

int PrecubicalSet::index(const std::string& id) const {
  int i = find(id);
  if (i < 0) throw std::invalid_argument("unknown cell id: " + id);
  return i;
}

int PrecubicalSet::face(int cell, int i, int eps) const {
  const Cell& c = cells[cell];
  if (i < 0 || i >= c.dim) throw std::logic_error("face index out of range");
  return eps == 0 ? c.lo[i] : c.hi[i];
}

int PrecubicalSet::iterated_face(int cell, std::vector<int> I, int eps) const {
  // apply in decreasing index order so remaining indices stay valid
  std::sort(I.begin(), I.end(), std::greater<int>());
  int c = cell;
  for (int i : I) c = face(c, i, eps);
  return c;
}

int PrecubicalSet::full_face(int cell, int eps) const {
  std::vector<int> all(cells[cell].dim);
  for (int i = 0; i < cells[cell].dim; ++i) all[i] = i;
  return iterated_face(cell, all, eps);
}

std::vector<std::string> PrecubicalSet::validate() const {
  std::vector<std::string> problems;
  for (int ci = 0; ci < num_cells(); ++ci) {
    const Cell& c = cells[ci];
    for (int j = 1; j < c.dim; ++j)
      for (int i = 0; i < j; ++i)
        for (int l = 0; l <= 1; ++l)
          for (int k = 0; k <= 1; ++k) {
            int lhs = face(face(ci, j, l), i, k);
            int rhs = face(face(ci, i, k), j - 1, l);
            if (lhs != rhs)
              problems.push_back("cubical identity fails on " + c.id + ": d^" +
                                 std::to_string(k) + "_" + std::to_string(i) + " d^" +
                                 std::to_string(l) + "_" + std::to_string(j) + " gives " +
                                 cells[lhs].id + " but d^" + std::to_string(l) + "_" +
                                 std::to_string(j - 1) + " d^" + std::to_string(k) + "_" +
                                 std::to_string(i) + " gives " + cells[rhs].id);
          }
  }
  if (!is_dag()) problems.push_back("1-skeleton has a directed cycle");
  return problems;
}

void PrecubicalSet::require_valid() const {
  auto problems = validate();
  if (!problems.empty()) throw std::logic_error(name + ": " + problems.front());
}

bool PrecubicalSet::is_dag() const {
  int V = num_vertices();
  std::vector<int> indeg(V, 0);
  for (int e = dim_begin(1); e < dim_end(1); ++e) ++indeg[cells[e].hi[0]];
  std::vector<int> queue;
  for (int v = 0; v < V; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++seen;
    for (int e = dim_begin(1); e < dim_end(1); ++e)
      if (cells[e].lo[0] == v && --indeg[cells[e].hi[0]] == 0) queue.push_back(cells[e].hi[0]);
  }
  return seen == V;
}

std::vector<char> PrecubicalSet::vertex_reachability() const {
  int V = num_vertices();
  std::vector<char> reach(static_cast<size_t>(V) * V, 0);
  for (int v = 0; v < V; ++v) {
    std::vector<int> stack{v};
    reach[static_cast<size_t>(v) * V + v] = 1;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int e = dim_begin(1); e < dim_end(1); ++e)
        if (cells[e].lo[0] == u && !reach[static_cast<size_t>(v) * V + cells[e].hi[0]]) {
          reach[static_cast<size_t>(v) * V + cells[e].hi[0]] = 1;
          stack.push_back(cells[e].hi[0]);
        }
    }
  }
  return reach;
}

std::vector<long long> PrecubicalSet::path_counts() const {
  if (!is_dag()) throw std::logic_error(name + ": path counts need an acyclic 1-skeleton");
  int V = num_vertices();
  // topological order via repeated zero-indegree removal
  std::vector<int> indeg(V, 0), topo;
  for (int e = dim_begin(1); e < dim_end(1); ++e) ++indeg[cells[e].hi[0]];
  std::vector<int> queue;
  for (int v = 0; v < V; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    topo.push_back(v);
    for (int e = dim_begin(1); e < dim_end(1); ++e)
      if (cells[e].lo[0] == v && --indeg[cells[e].hi[0]] == 0) queue.push_back(cells[e].hi[0]);
  }
  std::vector<long long> counts(static_cast<size_t>(V) * V, 0);
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    int v = *it;
    counts[static_cast<size_t>(v) * V + v] = 1;
    for (int e = dim_begin(1); e < dim_end(1); ++e)
      if (cells[e].lo[0] == v) {
        int u = cells[e].hi[0];
        for (int w = 0; w < V; ++w)
          counts[static_cast<size_t>(v) * V + w] += counts[static_cast<size_t>(u) * V + w];
      }
  }
  return counts;
}

PrecubicalSet build_pcs(std::string name, const std::vector<CellSpec>& specs) {
  std::vector<CellSpec> sorted = specs;
  std::stable_sort(sorted.begin(), sorted.end(), [](const CellSpec& a, const CellSpec& b) {
    if (a.d0.size() != b.d0.size()) return a.d0.size() < b.d0.size();
    return a.id < b.id;
  });
  std::map<std::string, int> idx;
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i].d0.size() != sorted[i].d1.size())
      throw std::invalid_argument(name + ": cell " + sorted[i].id + " has unequal face counts");
    if (!idx.emplace(sorted[i].id, static_cast<int>(i)).second)
      throw std::invalid_argument(name + ": duplicate cell id " + sorted[i].id);
  }
  PrecubicalSet X;
  X.name = std::move(name);
  X.cells.resize(sorted.size());
  for (size_t i = 0; i < sorted.size(); ++i) {
    Cell& c = X.cells[i];
    c.id = sorted[i].id;
    c.dim = static_cast<int>(sorted[i].d0.size());
    auto resolve = [&](const std::string& fid) {
      auto it = idx.find(fid);
      if (it == idx.end())
        throw std::invalid_argument(X.name + ": cell " + c.id + " has unknown face " + fid);
      if (static_cast<int>(sorted[it->second].d0.size()) != c.dim - 1)
        throw std::invalid_argument(X.name + ": face " + fid + " of " + c.id +
                                    " has wrong dimension");
      return it->second;
    };
    for (const auto& fid : sorted[i].d0) c.lo.push_back(resolve(fid));
    for (const auto& fid : sorted[i].d1) c.hi.push_back(resolve(fid));
    X.max_dim = std::max(X.max_dim, c.dim);
  }
  X.dim_offset.assign(X.max_dim + 2, 0);
  for (const Cell& c : X.cells) ++X.dim_offset[c.dim + 1];
  for (int d = 0; d <= X.max_dim; ++d) X.dim_offset[d + 1] += X.dim_offset[d];
  return X;
}

PrecubicalSet parse_pcs(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("cells") || !j["cells"].is_array())
    throw std::invalid_argument("precubical set json needs a \"cells\" array");
  std::vector<CellSpec> specs;
  for (const auto& cj : j["cells"]) {
    CellSpec s;
    s.id = cj.at("id").get<std::string>();
    if (cj.contains("d0")) s.d0 = cj["d0"].get<std::vector<std::string>>();
    if (cj.contains("d1")) s.d1 = cj["d1"].get<std::vector<std::string>>();
    if (cj.contains("dim") && cj["dim"].get<int>() != static_cast<int>(s.d0.size()))
      throw std::invalid_argument("cell " + s.id + ": dim does not match face count");
    specs.push_back(std::move(s));
  }
  return build_pcs(j.value("name", "unnamed"), specs);
}

nlohmann::json serialize_pcs(const PrecubicalSet& X) {
  nlohmann::json cells = nlohmann::json::array();
  for (const Cell& c : X.cells) {
    nlohmann::json cj{{"id", c.id}, {"dim", c.dim}};
    nlohmann::json d0 = nlohmann::json::array(), d1 = nlohmann::json::array();
    for (int f : c.lo) d0.push_back(X.cells[f].id);
    for (int f : c.hi) d1.push_back(X.cells[f].id);
    cj["d0"] = d0;
    cj["d1"] = d1;
    cells.push_back(std::move(cj));
  }
  return {{"name", X.name}, {"cells", cells}};
}

std::vector<char> mask_from_ids(const PrecubicalSet& X, const std::vector<std::string>& ids) {
  std::vector<char> mask(X.num_cells(), 0);
  for (const auto& id : ids) mask[X.index(id)] = 1;
  return mask;
}

std::vector<char> full_mask(const PrecubicalSet& X) {
  return std::vector<char>(X.num_cells(), 1);
}

std::vector<char> mask_intersect(const std::vector<char>& a, const std::vector<char>& b) {
  if (a.size() != b.size()) throw std::logic_error("mask_intersect: size mismatch");
  std::vector<char> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

bool mask_is_closed(const PrecubicalSet& X, const std::vector<char>& mask) {
  for (int c = 0; c < X.num_cells(); ++c) {
    if (!mask[c]) continue;
    for (int f : X.cells[c].lo)
      if (!mask[f]) return false;
    for (int f : X.cells[c].hi)
      if (!mask[f]) return false;
  }
  return true;
}

std::vector<char> face_closure(const PrecubicalSet& X, std::vector<char> mask) {
  // cells are sorted by dimension, so one descending sweep closes everything
  for (int c = X.num_cells() - 1; c >= 0; --c) {
    if (!mask[c]) continue;
    for (int f : X.cells[c].lo) mask[f] = 1;
    for (int f : X.cells[c].hi) mask[f] = 1;
  }
  return mask;
}

PrecubicalSet restrict_pcs(const PrecubicalSet& X, const std::vector<char>& mask,
                           std::string name) {
  if (!mask_is_closed(X, mask)) throw std::logic_error(name + ": mask is not face closed");
  std::vector<CellSpec> specs;
  for (int c = 0; c < X.num_cells(); ++c) {
    if (!mask[c]) continue;
    CellSpec s;
    s.id = X.cells[c].id;
    for (int f : X.cells[c].lo) s.d0.push_back(X.cells[f].id);
    for (int f : X.cells[c].hi) s.d1.push_back(X.cells[f].id);
    specs.push_back(std::move(s));
  }
  return build_pcs(std::move(name), specs);
}

}  // namespace dihom
