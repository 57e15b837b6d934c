// dihom: directed homology of finite precubical sets.
//
// Commands: check, homology, relative, mv, tensor, kunneth, fq,
// rank-invariants, bisim, examples. Inputs are .pcs JSON files or builtin
// fixture names. Exit codes: 0 success, 1 failed validation or a negative
// verdict (Kunneth mismatch, inexact sequence, non-bisimilar), 2 violated
// precondition (cyclic 1-skeleton, not a relative pair, not a good cover).

#include <CLI11.hpp>
#include <json.hpp>

#include "dihom/field.hpp"
#include "dihom/fixtures.hpp"
#include "dihom/homology.hpp"
#include "dihom/relative.hpp"
#include "dihom/tensor.hpp"

#include <atomic>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace {

using namespace dihom;
using nlohmann::json;

constexpr int kOk = 0, kFail = 1, kPrecondition = 2;

struct precondition_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

PrecubicalSet load_input(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    std::ifstream in(arg);
    if (!in) throw std::invalid_argument("cannot read " + arg);
    return parse_pcs(json::parse(in));
  }
  return fixture_by_name(arg);
}

PrecubicalSet load_checked(const std::string& arg) {
  PrecubicalSet X = load_input(arg);
  if (!X.is_dag())
    throw precondition_error(X.name + ": the 1-skeleton has a directed cycle");
  auto problems = X.validate();
  if (!problems.empty()) {
    std::string all = X.name + " is not a valid precubical set:";
    for (const auto& p : problems) all += "\n  " + p;
    throw std::invalid_argument(all);
  }
  return X;
}

std::vector<std::string> id_list(const std::string& arg) {
  std::vector<std::string> ids;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw std::invalid_argument("cannot read " + arg.substr(1));
    json j = json::parse(in);
    if (j.is_object() && j.contains("ids")) j = j["ids"];
    if (!j.is_array())
      throw std::invalid_argument(arg.substr(1) + ": expected a JSON array of cell ids");
    for (const auto& e : j) ids.push_back(e.get<std::string>());
    return ids;
  }
  std::stringstream ss(arg);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) ids.push_back(tok);
  return ids;
}

// Subcomplex arguments name generating cells; the mask is closed downwards.
std::vector<char> subcomplex_mask(const PrecubicalSet& X, const std::string& arg) {
  return face_closure(X, mask_from_ids(X, id_list(arg)));
}

std::vector<std::pair<int, int>> parse_pairs(const PrecubicalSet& X,
                                             const std::vector<std::string>& args) {
  std::vector<std::pair<int, int>> out;
  for (const auto& a : args) {
    auto ids = id_list(a);
    if (ids.size() != 2) throw std::invalid_argument("--pairs wants v,w; got " + a);
    out.emplace_back(X.index(ids[0]), X.index(ids[1]));
  }
  return out;
}

// Fixed-width worker pool over [0, n); rethrows the first failure.
template <class Fn>
void parallel_for(int n, Fn&& fn) {
  int workers = static_cast<int>(std::thread::hardware_concurrency());
  workers = std::min(std::max(workers, 1), std::max(n, 1));
  std::atomic<int> next{0};
  std::exception_ptr err;
  std::mutex err_mu;
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mu);
          if (!err) err = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (err) std::rethrow_exception(err);
}

template <class Fn>
int with_field(const std::string& spec, Fn&& fn) {
  if (spec == "rational") {
    RationalField f;
    return fn(f);
  }
  if (spec.rfind("fp:", 0) == 0) {
    long long p = std::stoll(spec.substr(3));
    if (!is_prime(p))
      throw std::invalid_argument("--field fp:<p> needs a prime, got " + spec.substr(3));
    PrimeField f(p);
    return fn(f);
  }
  throw std::invalid_argument("--field must be rational or fp:<p>");
}

struct Opts {
  std::string field = "rational";
  int degree = 0;      // 0: unset
  int max_degree = 0;  // 0: unset
  std::vector<std::string> pairs;
  std::string out;
  bool as_json = false, as_table = false, as_dot = false, generators = false;

  std::vector<int> degrees() const {
    if (degree > 0) return {degree};
    std::vector<int> ds;
    for (int d = 1; d <= std::max(max_degree, 1); ++d) ds.push_back(d);
    return ds;
  }
};

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

template <class F>
std::vector<std::string> generator_strings(const F& f, const PrecubicalSet& X,
                                           const HomologyBlock<F>& H, int d) {
  std::vector<std::string> out;
  if (d < 1 || d > H.top_degree()) return out;
  const auto& basis = H.cx.basis[d];
  const Matrix<F>& R = H.pres[d].reps;
  for (int j = 0; j < R.cols; ++j) {
    std::string s;
    for (int i = 0; i < R.rows; ++i) {
      const auto& c = R.at(i, j);
      if (f.is_zero(c)) continue;
      std::string coef = f.str(c);
      if (coef == "1")
        s += (s.empty() ? "" : " + ") + chain_str(X, basis[i]);
      else if (coef == "-1")
        s += (s.empty() ? "-" : " - ") + chain_str(X, basis[i]);
      else
        s += (s.empty() ? "" : " + ") + coef + "*" + chain_str(X, basis[i]);
    }
    out.push_back(s.empty() ? "0" : s);
  }
  return out;
}

// rows: source vertex, columns: target vertex, both sorted by id; "." marks
// blocks that were not computed (unreachable or filtered out)
void print_dim_table(const PrecubicalSet& X, const std::map<std::pair<int, int>, int>& dims,
                     const std::string& title) {
  int V = X.num_vertices();
  size_t w = 1;
  for (int v = 0; v < V; ++v) w = std::max(w, X.cells[v].id.size());
  for (const auto& [vw, d] : dims) w = std::max(w, std::to_string(d).size());
  auto pad = [&](const std::string& s) {
    return std::string(w + 1 - std::min(s.size(), w + 1), ' ') + s;
  };
  std::cout << title << "\n" << pad("");
  for (int c = 0; c < V; ++c) std::cout << pad(X.cells[c].id);
  std::cout << "\n";
  for (int r = 0; r < V; ++r) {
    std::cout << pad(X.cells[r].id);
    for (int c = 0; c < V; ++c) {
      auto it = dims.find({r, c});
      std::cout << pad(it == dims.end() ? "." : std::to_string(it->second));
    }
    std::cout << "\n";
  }
}

template <class F>
int run_homology(const F& f, const PrecubicalSet& X, const Opts& o) {
  std::vector<int> degs = o.degrees();
  int top = degs.back();
  std::vector<std::pair<int, int>> pairs =
      o.pairs.empty() ? reachable_pairs(X) : parse_pairs(X, o.pairs);

  std::vector<std::vector<int>> dims(pairs.size());
  std::vector<std::vector<std::vector<std::string>>> gens(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    auto H = homology_block(f, X, pairs[i].first, pairs[i].second, top);
    for (int d : degs) {
      dims[i].push_back(H.dim_at(d));
      if (o.generators) gens[i].push_back(generator_strings(f, X, H, d));
    }
  });

  if (o.as_json) {
    json blocks = json::array();
    for (size_t i = 0; i < pairs.size(); ++i)
      for (size_t k = 0; k < degs.size(); ++k) {
        json b{{"v", X.cells[pairs[i].first].id},
               {"w", X.cells[pairs[i].second].id},
               {"degree", degs[k]},
               {"dim", dims[i][k]}};
        if (o.generators) b["generators"] = gens[i][k];
        blocks.push_back(std::move(b));
      }
    std::cout << json{{"name", X.name}, {"field", f.name()}, {"blocks", blocks}}.dump(2)
              << "\n";
    return kOk;
  }
  for (size_t k = 0; k < degs.size(); ++k) {
    if (o.as_table) {
      std::map<std::pair<int, int>, int> table;
      for (size_t i = 0; i < pairs.size(); ++i) table[pairs[i]] = dims[i][k];
      print_dim_table(X, table,
                      "HM_" + std::to_string(degs[k]) + "[" + X.name + "] over " + f.name());
      continue;
    }
    for (size_t i = 0; i < pairs.size(); ++i) {
      std::cout << "HM_" << degs[k] << "(" << X.cells[pairs[i].first].id << ","
                << X.cells[pairs[i].second].id << ") = " << dims[i][k] << "\n";
      if (o.generators)
        for (size_t g = 0; g < gens[i][k].size(); ++g)
          std::cout << "  [" << g + 1 << "] " << gens[i][k][g] << "\n";
    }
  }
  return kOk;
}

json report_json(const PrecubicalSet& X, const SequenceReport& r) {
  json rows = json::array();
  for (size_t i = 0; i < r.dims.size(); ++i)
    rows.push_back(json{{"label", r.labels[i]},
                        {"dim", r.dims[i]},
                        {"out_rank", r.out_ranks[i]},
                        {"exact", static_cast<bool>(r.exact_at[i])}});
  return json{{"kind", r.kind},
              {"v", X.cells[r.v].id},
              {"w", X.cells[r.w].id},
              {"top_degree", r.top_degree},
              {"nodes", rows},
              {"exact", r.exact},
              {"alternating_sum", r.alternating_sum},
              {"notes", r.notes}};
}

void print_report(const PrecubicalSet& X, const SequenceReport& r) {
  std::cout << r.kind << " sequence at (" << X.cells[r.v].id << "," << X.cells[r.w].id
            << "): " << (r.exact ? "exact" : "NOT EXACT") << "\n";
  for (int d = r.top_degree; d >= 1; --d) {
    std::cout << "  ";
    for (int s = 0; s < 3; ++s) {
      size_t i = static_cast<size_t>(3 * (r.top_degree - d) + s);
      std::cout << (s ? " -> " : "") << r.labels[i] << " = " << r.dims[i]
                << (r.exact_at[i] ? "" : " !");
    }
    std::cout << "\n";
  }
  for (const auto& n : r.notes) std::cout << "  note: " << n << "\n";
}

template <class F>
int run_sequences(const F& f, const PrecubicalSet& X, const Opts& o, bool mayer,
                  const std::string& y_arg, const std::string& x1_arg,
                  const std::string& x2_arg) {
  std::vector<char> y, m1, m2;
  if (mayer) {
    m1 = subcomplex_mask(X, x1_arg);
    m2 = subcomplex_mask(X, x2_arg);
    auto gc = is_good_cover(X, m1, m2);
    if (!gc.ok) {
      std::cerr << "not a good cover: " << gc.reason << "\n";
      return kPrecondition;
    }
    for (const auto* m : {&m1, &m2}) {
      auto rp = is_relative_pair(X, *m);
      if (!rp.ok) {
        std::cerr << "cover member is not a relative pair: " << rp.reason << "\n";
        return kPrecondition;
      }
    }
  } else {
    y = subcomplex_mask(X, y_arg);
    auto rp = is_relative_pair(X, y);
    if (!rp.ok) {
      std::cerr << "not a relative pair: " << rp.reason << "\n";
      return kPrecondition;
    }
  }

  std::vector<std::pair<int, int>> pairs =
      o.pairs.empty() ? reachable_pairs(X) : parse_pairs(X, o.pairs);
  std::vector<SequenceReport> reports(pairs.size());
  parallel_for(static_cast<int>(pairs.size()), [&](int i) {
    reports[i] = mayer ? verify_les_mv(f, X, m1, m2, pairs[i].first, pairs[i].second)
                       : verify_les_relative(f, X, y, pairs[i].first, pairs[i].second);
  });

  bool all_exact = true;
  for (const auto& r : reports) all_exact = all_exact && r.exact;
  if (o.as_json) {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_json(X, r));
    std::cout << json{{"name", X.name}, {"field", f.name()}, {"reports", out}}.dump(2)
              << "\n";
  } else {
    for (const auto& r : reports) print_report(X, r);
    std::cout << (all_exact ? "all blocks exact" : "EXACTNESS FAILED") << "\n";
  }
  return all_exact ? kOk : kFail;
}

template <class F>
int run_kunneth(const F& f, const PrecubicalSet& A, const PrecubicalSet& B, const Opts& o) {
  int top = o.degree > 0 ? o.degree : std::max(o.max_degree, 2);
  KunnethReport rep = kunneth_check(f, A, B, top);
  if (o.as_json) {
    json entries = json::array();
    for (const auto& e : rep.entries)
      entries.push_back(json{{"vx", e.vx},
                             {"wx", e.wx},
                             {"vy", e.vy},
                             {"wy", e.wy},
                             {"degree", e.degree},
                             {"direct", e.direct},
                             {"formula", e.formula}});
    std::cout << json{{"x", A.name},
                      {"y", B.name},
                      {"blocks_checked", rep.blocks_checked},
                      {"mismatches", rep.mismatches.size()},
                      {"entries", entries}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "kunneth " << A.name << " x " << B.name << ": " << rep.blocks_checked
              << " blocks, degrees 1.." << top << "\n";
    for (const auto& e : rep.entries)
      if (e.direct != e.formula)
        std::cout << "  MISMATCH HM_" << e.degree << "((" << e.vx << "," << e.vy << "),("
                  << e.wx << "," << e.wy << ")): direct " << e.direct << ", formula "
                  << e.formula << "\n";
    std::cout << (rep.all_match() ? "all blocks match" : "MISMATCHES FOUND") << "\n";
  }
  return rep.all_match() ? kOk : kFail;
}

template <class F>
int run_fq(const F& f, const PrecubicalSet& X, const Opts& o) {
  FqGraph fq = build_fq(X);
  std::vector<int> dims;
  if (o.degree > 0) {
    auto rep = to_representation(f, X, o.degree);
    dims = rep.dims;
  }
  auto node_name = [&](int n) {
    return X.cells[fq.nodes[n].first].id + "," + X.cells[fq.nodes[n].second].id;
  };
  if (o.as_dot) {
    std::ostringstream os;
    os << "digraph FQ {\n  rankdir=LR;\n";
    for (size_t n = 0; n < fq.nodes.size(); ++n) {
      os << "  \"" << node_name(static_cast<int>(n)) << "\" [label=\"("
         << node_name(static_cast<int>(n)) << ")";
      if (!dims.empty()) os << "\\ndim " << dims[n];
      os << "\"];\n";
    }
    for (const auto& a : fq.arrows)
      os << "  \"" << node_name(a.src) << "\" -> \"" << node_name(a.tgt) << "\" [label=\""
         << X.cells[a.edge].id << "\"" << (a.left ? " style=dashed" : "") << "];\n";
    os << "}\n";
    write_out(o.out, os.str());
    return kOk;
  }
  if (o.as_json) {
    json nodes = json::array(), arrows = json::array();
    for (size_t n = 0; n < fq.nodes.size(); ++n) {
      json jn{{"v", X.cells[fq.nodes[n].first].id}, {"w", X.cells[fq.nodes[n].second].id}};
      if (!dims.empty()) jn["dim"] = dims[n];
      nodes.push_back(std::move(jn));
    }
    for (const auto& a : fq.arrows)
      arrows.push_back(json{{"src", a.src},
                            {"tgt", a.tgt},
                            {"edge", X.cells[a.edge].id},
                            {"side", a.left ? "left" : "right"}});
    std::cout << json{{"name", X.name}, {"nodes", nodes}, {"arrows", arrows}}.dump(2) << "\n";
    return kOk;
  }
  std::cout << "FQ[" << X.name << "]: " << fq.nodes.size() << " nodes, " << fq.arrows.size()
            << " arrows\n";
  for (size_t n = 0; n < fq.nodes.size(); ++n) {
    std::cout << "  (" << node_name(static_cast<int>(n)) << ")";
    if (!dims.empty()) std::cout << " dim " << dims[n];
    std::cout << "\n";
  }
  for (const auto& a : fq.arrows)
    std::cout << "  (" << node_name(a.src) << ") -" << X.cells[a.edge].id << "-> ("
              << node_name(a.tgt) << ")" << (a.left ? " [left]" : " [right]") << "\n";
  return kOk;
}

template <class F>
int run_rank_invariants(const F& f, const PrecubicalSet& X, const Opts& o,
                        const std::vector<std::string>& intervals) {
  int degree = o.degree > 0 ? o.degree : 1;
  auto rep = to_representation(f, X, degree);
  struct Item {
    std::string text;
    int p, q;
  };
  std::vector<Item> items;
  if (intervals.empty()) {
    for (size_t n = 0; n < rep.fq.nodes.size(); ++n)
      items.push_back({"", static_cast<int>(n), static_cast<int>(n)});
  } else {
    for (const auto& spec : intervals) {
      auto colon = spec.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--interval wants v,w:v',w'; got " + spec);
      auto p = parse_pairs(X, {spec.substr(0, colon)})[0];
      auto q = parse_pairs(X, {spec.substr(colon + 1)})[0];
      int np = rep.fq.find_node(p.first, p.second), nq = rep.fq.find_node(q.first, q.second);
      if (np < 0 || nq < 0)
        throw std::invalid_argument("--interval endpoints must be reachable pairs: " + spec);
      items.push_back({"", np, nq});
    }
  }
  json jout = json::array();
  for (auto& it : items) {
    RankInvariant ri = rank_invariant(f, rep, it.p, it.q);
    auto name = [&](int n) {
      return "(" + X.cells[rep.fq.nodes[n].first].id + "," +
             X.cells[rep.fq.nodes[n].second].id + ")";
    };
    if (o.as_json)
      jout.push_back(json{{"from", name(it.p)},
                          {"to", name(it.q)},
                          {"degree", degree},
                          {"lim", ri.lim},
                          {"colim", ri.colim},
                          {"rank", ri.rank}});
    else
      std::cout << "[" << name(it.p) << "," << name(it.q) << "] degree " << degree
                << ": lim " << ri.lim << ", colim " << ri.colim << ", rank " << ri.rank
                << "\n";
  }
  if (o.as_json) std::cout << jout.dump(2) << "\n";
  return kOk;
}

int run_check(const PrecubicalSet& X, const Opts& o) {
  // load_checked already enforced validity and acyclicity
  auto pairs = reachable_pairs(X);
  if (o.as_json) {
    json counts = json::array();
    for (int d = 0; d <= X.max_dim; ++d) counts.push_back(X.count_dim(d));
    std::cout << json{{"name", X.name},
                      {"valid", true},
                      {"acyclic", true},
                      {"cells_by_dim", counts},
                      {"reachable_pairs", pairs.size()}}
                     .dump(2)
              << "\n";
    return kOk;
  }
  std::cout << X.name << ": valid precubical set, acyclic 1-skeleton\n";
  for (int d = 0; d <= X.max_dim; ++d)
    std::cout << "  dim " << d << ": " << X.count_dim(d) << " cells\n";
  std::cout << "  reachable vertex pairs: " << pairs.size() << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"directed homology bimodules of finite precubical sets"};
  app.require_subcommand(1);
  Opts o;
  std::string in_a, in_b, y_arg, x1_arg, x2_arg;
  std::vector<std::string> intervals;

  auto add_field = [&](CLI::App* c) {
    c->add_option("--field", o.field, "rational (default) or fp:<p>");
  };
  auto add_degrees = [&](CLI::App* c) {
    c->add_option("--degree", o.degree, "single homology degree");
    c->add_option("--max-degree", o.max_degree, "degrees 1..N");
  };
  auto add_pairs = [&](CLI::App* c) {
    c->add_option("--pairs", o.pairs, "restrict to blocks v,w (repeatable)");
  };

  CLI::App* check = app.add_subcommand("check", "validate a precubical set");
  check->add_option("input", in_a)->required();
  check->add_flag("--json", o.as_json);

  CLI::App* hom = app.add_subcommand("homology", "homology bimodule dimensions");
  hom->add_option("input", in_a)->required();
  add_field(hom);
  add_degrees(hom);
  add_pairs(hom);
  hom->add_flag("--json", o.as_json);
  hom->add_flag("--table", o.as_table);
  hom->add_flag("--generators", o.generators, "print class representatives");

  CLI::App* rel = app.add_subcommand("relative", "relative long exact sequence");
  rel->add_option("input", in_a)->required();
  rel->add_option("--y", y_arg, "subcomplex: ids or @file")->required();
  add_field(rel);
  add_pairs(rel);
  rel->add_flag("--json", o.as_json);

  CLI::App* mv = app.add_subcommand("mv", "Mayer-Vietoris sequence of a good cover");
  mv->add_option("input", in_a)->required();
  mv->add_option("--x1", x1_arg, "first cover member: ids or @file")->required();
  mv->add_option("--x2", x2_arg, "second cover member: ids or @file")->required();
  add_field(mv);
  add_pairs(mv);
  mv->add_flag("--json", o.as_json);

  CLI::App* tensor = app.add_subcommand("tensor", "tensor product of two inputs");
  tensor->add_option("x", in_a)->required();
  tensor->add_option("y", in_b)->required();
  tensor->add_option("--out", o.out, "write .pcs here instead of stdout");

  CLI::App* kun = app.add_subcommand("kunneth", "compare HM[X#Y] with the graded formula");
  kun->add_option("x", in_a)->required();
  kun->add_option("y", in_b)->required();
  add_field(kun);
  add_degrees(kun);
  kun->add_flag("--json", o.as_json);

  CLI::App* fq = app.add_subcommand("fq", "quiver of reachable pairs");
  fq->add_option("input", in_a)->required();
  add_field(fq);
  fq->add_option("--degree", o.degree, "annotate nodes with HM dims");
  fq->add_flag("--json", o.as_json);
  fq->add_flag("--dot", o.as_dot);
  fq->add_option("--out", o.out, "write output here instead of stdout");

  CLI::App* ri = app.add_subcommand("rank-invariants", "canonical ranks over FQ intervals");
  ri->add_option("input", in_a)->required();
  add_field(ri);
  ri->add_option("--degree", o.degree, "homology degree (default 1)");
  ri->add_option("--interval", intervals, "v,w:v',w' (repeatable; default singletons)");
  ri->add_flag("--json", o.as_json);

  CLI::App* bi = app.add_subcommand("bisim", "dimension level bisimulation of two inputs");
  bi->add_option("x", in_a)->required();
  bi->add_option("y", in_b)->required();
  add_field(bi);
  bi->add_option("--degree", o.degree, "homology degree (default 1)");

  CLI::App* ex = app.add_subcommand("examples", "list builtin fixtures, or emit one");
  std::string ex_action, ex_name;
  ex->add_option("action", ex_action, "emit");
  ex->add_option("name", ex_name, "fixture name");
  ex->add_option("--out", o.out, "write .pcs here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kFail;
  }

  try {
    if (check->parsed()) return run_check(load_checked(in_a), o);
    if (hom->parsed()) {
      PrecubicalSet X = load_checked(in_a);
      return with_field(o.field, [&](const auto& f) { return run_homology(f, X, o); });
    }
    if (rel->parsed()) {
      PrecubicalSet X = load_checked(in_a);
      return with_field(o.field, [&](const auto& f) {
        return run_sequences(f, X, o, false, y_arg, "", "");
      });
    }
    if (mv->parsed()) {
      PrecubicalSet X = load_checked(in_a);
      return with_field(o.field, [&](const auto& f) {
        return run_sequences(f, X, o, true, "", x1_arg, x2_arg);
      });
    }
    if (tensor->parsed()) {
      PrecubicalSet T = tensor_product(load_checked(in_a), load_checked(in_b));
      T.require_valid();
      write_out(o.out, serialize_pcs(T).dump(2) + "\n");
      return kOk;
    }
    if (kun->parsed()) {
      PrecubicalSet A = load_checked(in_a), B = load_checked(in_b);
      return with_field(o.field, [&](const auto& f) { return run_kunneth(f, A, B, o); });
    }
    if (fq->parsed()) {
      PrecubicalSet X = load_checked(in_a);
      return with_field(o.field, [&](const auto& f) { return run_fq(f, X, o); });
    }
    if (ri->parsed()) {
      PrecubicalSet X = load_checked(in_a);
      return with_field(o.field, [&](const auto& f) {
        return run_rank_invariants(f, X, o, intervals);
      });
    }
    if (bi->parsed()) {
      PrecubicalSet A = load_checked(in_a), B = load_checked(in_b);
      int degree = o.degree > 0 ? o.degree : 1;
      return with_field(o.field, [&](const auto& f) {
        bool ok = dim_bisimulation(to_representation(f, A, degree),
                                   to_representation(f, B, degree));
        std::cout << "dimension level bisimilar at degree " << degree << ": "
                  << (ok ? "yes" : "no") << "\n";
        return ok ? kOk : kFail;
      });
    }
    if (ex->parsed()) {
      if (ex_action.empty()) {
        for (const auto& n : fixture_names()) std::cout << n << "\n";
        return kOk;
      }
      if (ex_action != "emit" || ex_name.empty())
        throw std::invalid_argument("usage: examples [emit <name>]");
      write_out(o.out, serialize_pcs(fixture_by_name(ex_name)).dump(2) + "\n");
      return kOk;
    }
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kFail;
}
