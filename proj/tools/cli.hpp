#pragma once

// arithlab command-line front end. run() is kept separate from main() so the
// tests can drive it in-process.

#include "arithlab/arithlab.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <limits>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace arithlab::cli {

using nlohmann::json;

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Integer as a JSON number when it fits in int64, else as a decimal string.
inline json number(const BigInt &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

inline json numbers(const Vec &v) {
  json a = json::array();
  for (const auto &x : v) a.push_back(number(x));
  return a;
}

inline json structure_json(const ArithStructure &s) { return {{"d", numbers(s.d)}, {"r", numbers(s.r)}}; }

inline json matrix_json(const IntMatrix &m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vec row(m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) row[j] = m(i, j);
    rows.push_back(numbers(row));
  }
  return rows;
}

inline json graph_json(const Multidigraph &g) {
  json rows = json::array();
  for (std::size_t i = 0; i < g.n(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < g.n(); ++j) row.push_back(g.mult(i, j));
    rows.push_back(row);
  }
  json out = {{"n", g.n()}, {"mult", rows}};
  if (!g.labels().empty()) out["labels"] = g.labels();
  return out;
}

inline std::string matrix_text(const IntMatrix &m) {
  std::string s = std::to_string(m.rows()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? " " : "") + m(i, j).str();
    s += "\n";
  }
  return s;
}

struct Options {
  std::string graph, matrix, structures, d, r, box, floor, family, op, part, clique, p, q;
  std::size_t n = 0, u = 0, v = 0;
  long long alpha = 0, cap = 0, f = 0;
  std::string a;
  unsigned threads = 0;
  bool json_out = false, classes = false, count_only = false, minimal = false;
};

namespace detail {

/// A malformed command-line vector is a usage error, not a domain error.
inline Vec option_vec(const std::string &text) {
  try {
    return parse_vec(text);
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
}

inline Multidigraph need_graph(const Options &o) {
  if (o.graph.empty()) throw UsageError("this command needs -g <graph file>");
  return load_graph(o.graph);
}

inline ArithStructure need_structure(const Options &o, std::size_t n) {
  if (o.d.empty() || o.r.empty()) throw UsageError("this command needs -d and -r");
  ArithStructure s{option_vec(o.d), option_vec(o.r)};
  if (s.d.size() != n || s.r.size() != n)
    throw DomainError("structure length does not match the " + std::to_string(n) + " vertices");
  return s;
}

inline Box parse_box(const std::string &text) {
  Box b;
  for (const auto &x : option_vec(text)) {
    if (x < 1 || x > 1000000) throw DomainError("box entries must lie in 1..1000000");
    b.push_back(static_cast<long long>(x));
  }
  return b;
}

/// 1-based vertex id to 0-based index.
inline std::size_t vertex(std::size_t id, std::size_t n, const char *flag) {
  if (id < 1 || id > n) throw UsageError(std::string(flag) + " must name a vertex in 1.." + std::to_string(n));
  return id - 1;
}

inline std::vector<std::size_t> vertex_list(const std::string &text, std::size_t n, const char *flag) {
  std::vector<std::size_t> out;
  for (const auto &x : option_vec(text)) {
    if (x < 1 || x > BigInt(n)) throw UsageError(std::string(flag) + " entries must lie in 1.." + std::to_string(n));
    out.push_back(static_cast<std::size_t>(x) - 1);
  }
  return out;
}

inline IntMatrix matrix_input(const Options &o) {
  if (!o.matrix.empty()) return parse_matrix(read_file(o.matrix));
  if (!o.graph.empty()) return load_graph(o.graph).adjacency();
  throw UsageError("this command needs --matrix <file> or -g <graph file>");
}

inline void print_structures(std::ostream &out, const StructureSet &all) {
  for (const auto &s : all) out << format_structure(s.d, s.r) << '\n';
}

} // namespace detail

inline int cmd_verify(const Options &o, std::ostream &out) {
  auto g = detail::need_graph(o);
  std::vector<ArithStructure> items;
  if (!o.structures.empty()) {
    for (auto &line : parse_structure_file(read_file(o.structures))) items.push_back({line.d, line.r});
  } else {
    items.push_back(detail::need_structure(o, g.n()));
  }
  bool all_ok = true;
  json results = json::array();
  for (const auto &s : items) {
    auto v = verify(g, s);
    all_ok = all_ok && v.ok;
    if (o.json_out)
      results.push_back({{"structure", structure_json(s)}, {"ok", v.ok}, {"diagnostic", v.diagnostic}});
    else if (items.size() == 1)
      out << (v.ok ? "OK" : "FAIL: " + v.diagnostic) << '\n';
    else
      out << (v.ok ? "OK   " : "FAIL ") << format_structure(s.d, s.r) << (v.ok ? "" : "  (" + v.diagnostic + ")")
          << '\n';
  }
  if (o.json_out) out << json{{"ok", all_ok}, {"results", results}}.dump() << '\n';
  return all_ok ? 0 : 1;
}

inline int cmd_classify(const Options &o, std::ostream &out) {
  IntMatrix m;
  if (!o.matrix.empty()) {
    m = parse_matrix(read_file(o.matrix));
  } else {
    auto g = detail::need_graph(o);
    if (o.d.empty()) throw UsageError("classify needs --matrix, or -g with -d");
    Vec d = detail::option_vec(o.d);
    m = laplacian(g, d);
  }
  if (!m.square()) throw DomainError("classify needs a square matrix");
  auto cls = classify(m);
  BigInt det = determinant(m);
  std::optional<FmPolynomial> fm;
  if (is_z_matrix(m) && m.rows() <= 12) fm = fm_coefficients(m);
  bool by_kernel = almost_by_kernel(m);
  if (o.json_out) {
    json j = {{"class", to_string(cls)}, {"det", number(det)}, {"irreducible", is_irreducible(m)},
              {"positive_kernel", by_kernel}};
    if (fm) j["f_M"] = fm->to_string();
    out << j.dump() << '\n';
  } else {
    out << "class: " << to_string(cls) << '\n' << "det: " << det << '\n';
    out << "irreducible: " << (is_irreducible(m) ? "yes" : "no") << '\n';
    out << "positive kernel: " << (by_kernel ? "yes" : "no") << '\n';
    if (fm) out << "f_M: " << fm->to_string() << '\n';
  }
  return 0;
}

inline int cmd_enumerate(const Options &o, std::ostream &out) {
  const unsigned threads = resolve_threads(o.threads);
  StructureSet all;
  std::optional<Multidigraph> g;
  if (o.family == "path" || o.family == "cycle" || o.family == "complete") {
    if (o.n < 2) throw UsageError("--n must be at least 2");
    if (o.family == "path") {
      all = enumerate_path(o.n, threads);
      g = path_graph(o.n);
    } else if (o.family == "cycle") {
      all = enumerate_cycle(o.n, threads);
      g = cycle_graph(o.n);
    } else {
      all = enumerate_complete(o.n, o.cap, threads);
      g = complete_graph(o.n);
    }
  } else if (o.family == "general") {
    g = detail::need_graph(o);
    if (o.box.empty()) throw UsageError("--family general needs --box");
    Box box = detail::parse_box(o.box);
    if (box.size() == 1) box.assign(g->n(), box[0]);
    all = enumerate_bounded(*g, box, threads);
  } else {
    throw UsageError("--family must be path, cycle, complete or general");
  }

  std::vector<std::vector<ArithStructure>> groups;
  if (o.classes) groups = group_classes(*g, all);

  if (o.json_out) {
    json j = {{"total", all.size()}};
    if (!o.count_only) {
      json list = json::array();
      for (const auto &s : all) list.push_back(structure_json(s));
      j["structures"] = list;
    }
    if (o.classes) {
      json cls = json::array();
      for (const auto &grp : groups) {
        json members = json::array();
        for (const auto &s : grp) members.push_back(structure_json(s));
        cls.push_back(members);
      }
      j["classes"] = cls;
    }
    out << j.dump() << '\n';
    return 0;
  }
  if (!o.count_only) {
    if (o.classes) {
      for (std::size_t i = 0; i < groups.size(); ++i) {
        out << "# class " << i + 1 << " (" << groups[i].size() << ")\n";
        for (const auto &s : groups[i]) out << format_structure(s.d, s.r) << '\n';
      }
    } else {
      detail::print_structures(out, all);
    }
  }
  if (o.classes) out << "classes: " << groups.size() << '\n';
  out << "total: " << all.size() << '\n';
  return 0;
}

inline int cmd_transform(const Options &o, std::ostream &out) {
  if (o.op == "blowup") {
    IntMatrix m = detail::matrix_input(o);
    if (o.d.empty() || o.r.empty()) throw UsageError("blowup needs -d and -r");
    if (o.p.empty() || o.q.empty()) throw UsageError("blowup needs --p and --q");
    ArithStructure s{detail::option_vec(o.d), detail::option_vec(o.r)};
    auto res = blowup(m, detail::option_vec(o.p), detail::option_vec(o.q), s);
    if (auto v = verify_matrix(res.matrix, res.s.d, res.s.r); !v) throw DomainError("blowup output fails: " + v.diagnostic);
    if (o.json_out)
      out << json{{"matrix", matrix_json(res.matrix)}, {"structure", structure_json(res.s)}}.dump() << '\n';
    else
      out << matrix_text(res.matrix) << format_structure(res.s.d, res.s.r) << '\n';
    return 0;
  }

  auto g = detail::need_graph(o);
  const std::size_t n = g.n();
  GraphStructure res{g, {}};
  if (o.op == "cone") {
    if (o.f > 0) {
      res = cone_regular(g, o.f);
    } else {
      if (o.a.empty()) throw UsageError("cone needs --f (regular graph) or -d, -r and --a");
      auto s = detail::need_structure(o, n);
      res = cone_general(g, s.d, s.r, parse_bigint(o.a));
    }
  } else {
    auto s = detail::need_structure(o, n);
    if (o.op == "merge") {
      res = merge(g, detail::vertex(o.u, n, "--u"), detail::vertex(o.v, n, "--v"), s);
    } else if (o.op == "split") {
      if (o.part.empty()) throw UsageError("split needs --part");
      res = split(g, detail::vertex(o.u, n, "--u"), detail::vertex_list(o.part, n, "--part"), s);
    } else if (o.op == "clique-star") {
      if (o.clique.empty()) throw UsageError("clique-star needs --clique");
      res = clique_star(g, detail::vertex_list(o.clique, n, "--clique"), s);
    } else if (o.op == "pendant") {
      res = add_pendant(g, detail::vertex(o.u, n, "--u"), s);
    } else if (o.op == "subdivide") {
      res = subdivide_edge(g, detail::vertex(o.u, n, "--u"), detail::vertex(o.v, n, "--v"), s);
    } else {
      throw UsageError("unknown --op '" + o.op + "'");
    }
  }
  if (auto v = verify(res.graph, res.s); !v) throw DomainError("transform output fails: " + v.diagnostic);
  if (o.json_out)
    out << json{{"graph", graph_json(res.graph)}, {"structure", structure_json(res.s)}}.dump() << '\n';
  else
    out << emit_graph(res.graph) << format_structure(res.s.d, res.s.r) << '\n';
  return 0;
}

inline int cmd_critgroup(const Options &o, std::ostream &out) {
  auto g = detail::need_graph(o);
  auto s = detail::need_structure(o, g.n());
  auto grp = critical_group(g, s);
  if (o.json_out)
    out << json{{"invariant_factors", numbers(grp.invariant_factors)}, {"order", number(grp.torsion_order())}}.dump()
        << '\n';
  else
    out << grp.torsion_string() << '\n' << "order: " << grp.torsion_order() << '\n';
  return 0;
}

inline int cmd_count(const Options &o, std::ostream &out) {
  if (o.n < 1) throw UsageError("--n must be at least 1");
  BigInt c;
  const auto n = static_cast<unsigned>(o.n);
  if (o.family == "path")
    c = count_path(n);
  else if (o.family == "cycle")
    c = count_cycle(n);
  else if (o.family == "complete")
    c = o.n < 2 ? BigInt(0) : BigInt(enumerate_complete(o.n, 0, resolve_threads(o.threads)).size());
  else if (o.family == "star")
    c = count_star(o.n);
  else
    throw UsageError("--family must be path, cycle, complete or star");
  if (o.json_out)
    out << json{{"count", number(c)}}.dump() << '\n';
  else
    out << c << '\n';
  return 0;
}

inline int cmd_aalpha(const Options &o, std::ostream &out) {
  IntMatrix b = detail::matrix_input(o);
  if (o.alpha < 0) throw UsageError("--alpha must be non-negative");
  Box box = o.box.empty() ? default_box(b, o.alpha) : detail::parse_box(o.box);
  if (box.size() == 1) box.assign(b.rows(), box[0]);
  Box lower;
  if (!o.floor.empty()) {
    lower = detail::parse_box(o.floor);
    if (lower.size() == 1) lower.assign(b.rows(), lower[0]);
  }
  const unsigned threads = resolve_threads(o.threads);
  auto found = o.minimal ? min_A_geq_alpha(b, o.alpha, box, threads, lower)
                         : enumerate_A_alpha(b, o.alpha, box, threads, lower);
  if (o.json_out) {
    json list = json::array();
    for (const auto &v : found) list.push_back(numbers(v));
    out << json{{"vectors", list}, {"total", found.size()}}.dump() << '\n';
  } else {
    for (const auto &v : found) out << join(v) << '\n';
    out << "total: " << found.size() << '\n';
  }
  return 0;
}

inline int cmd_probe(const Options &o, std::ostream &out) {
  auto g = detail::need_graph(o);
  auto rep = conjecture_probe(g, resolve_threads(o.threads));
  if (o.json_out) {
    out << json{{"family", to_string(rep.family)},
                {"path", number(rep.path_count)},
                {"graph", number(rep.graph_count)},
                {"complete", number(rep.complete_count)},
                {"holds", rep.holds}}
               .dump()
        << '\n';
  } else {
    out << "family: " << to_string(rep.family) << '\n'
        << "|A(P_n)|: " << rep.path_count << '\n'
        << "|A(G)|: " << rep.graph_count << '\n'
        << "|A(K_n)|: " << rep.complete_count << '\n'
        << "sandwich: " << (rep.holds ? "holds" : "fails") << '\n';
  }
  return 0;
}

/// Exit codes: 0 success, 1 domain error or failed check, 2 usage error.
inline int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Arithmetical structures on multidigraphs", "arithlab"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) {
    sub->add_option("-g,--graph", o.graph, "graph file");
    sub->add_option("-d", o.d, "diagonal, comma separated");
    sub->add_option("-r", o.r, "r vector, comma separated");
    sub->add_flag("--json", o.json_out, "JSON output");
    sub->add_option("--threads", o.threads, "worker threads (default ARITHLAB_THREADS or 1)");
  };

  auto *verify_cmd = app.add_subcommand("verify", "check that (d, r) is an arithmetical structure");
  common(verify_cmd);
  verify_cmd->add_option("--structures", o.structures, "structure file, one per line");

  auto *classify_cmd = app.add_subcommand("classify", "classify a Z-matrix");
  common(classify_cmd);
  classify_cmd->add_option("--matrix", o.matrix, "matrix file");

  auto *enum_cmd = app.add_subcommand("enumerate", "list arithmetical structures");
  common(enum_cmd);
  enum_cmd->add_option("--family", o.family, "path, cycle, complete or general")->required();
  enum_cmd->add_option("--n", o.n, "vertex count");
  enum_cmd->add_option("--box", o.box, "per-coordinate bounds for d (general)");
  enum_cmd->add_option("--cap", o.cap, "largest unit-fraction denominator (complete)");
  enum_cmd->add_flag("--classes", o.classes, "group up to graph automorphism");
  enum_cmd->add_flag("--count-only", o.count_only, "print only the totals");

  auto *tr_cmd = app.add_subcommand("transform", "apply a structure-preserving operation");
  common(tr_cmd);
  tr_cmd->add_option("--op", o.op, "merge, split, clique-star, pendant, subdivide, blowup or cone")->required();
  tr_cmd->add_option("--u", o.u, "vertex (1-based)");
  tr_cmd->add_option("--v", o.v, "second vertex (1-based)");
  tr_cmd->add_option("--part", o.part, "split: neighbours moved to w, one per edge");
  tr_cmd->add_option("--clique", o.clique, "clique-star: clique vertices");
  tr_cmd->add_option("--p", o.p, "blowup p vector");
  tr_cmd->add_option("--q", o.q, "blowup q vector");
  tr_cmd->add_option("--matrix", o.matrix, "blowup input matrix");
  tr_cmd->add_option("--f", o.f, "cone of a regular graph: divisor f of n");
  tr_cmd->add_option("--a", o.a, "cone with L(G,d) r = a 1");

  auto *cg_cmd = app.add_subcommand("critgroup", "critical group of (G, d, r)");
  common(cg_cmd);

  auto *count_cmd = app.add_subcommand("count", "closed-form or certified counts");
  common(count_cmd);
  count_cmd->add_option("--family", o.family, "path, cycle, complete or star")->required();
  count_cmd->add_option("--n", o.n, "vertex count (leaves for star)")->required();

  auto *aa_cmd = app.add_subcommand("aalpha", "search A_alpha(B) or min A_{>=alpha}(B)");
  common(aa_cmd);
  aa_cmd->add_option("--matrix", o.matrix, "matrix B file");
  aa_cmd->add_option("--alpha", o.alpha, "target determinant")->required();
  aa_cmd->add_option("--box", o.box, "upper bounds for d");
  aa_cmd->add_option("--floor", o.floor, "lower bounds for d (default 1)");
  aa_cmd->add_flag("--min", o.minimal, "minimal elements of A_{>=alpha}");

  auto *probe_cmd = app.add_subcommand("probe", "compare |A(G)| with |A(P_n)| and |A(K_n)|");
  common(probe_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (verify_cmd->parsed()) return cmd_verify(o, out);
    if (classify_cmd->parsed()) return cmd_classify(o, out);
    if (enum_cmd->parsed()) return cmd_enumerate(o, out);
    if (tr_cmd->parsed()) return cmd_transform(o, out);
    if (cg_cmd->parsed()) return cmd_critgroup(o, out);
    if (count_cmd->parsed()) return cmd_count(o, out);
    if (aa_cmd->parsed()) return cmd_aalpha(o, out);
    if (probe_cmd->parsed()) return cmd_probe(o, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

} // namespace arithlab::cli
