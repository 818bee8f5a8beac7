#pragma once

// Target resolution for the command-line front-end: parses a target string,
// picks a computation method and produces a ResultRecord.

#include <chrono>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "kappa/errors.hpp"
#include "kappa/factored.hpp"
#include "kappa/formulas.hpp"
#include "kappa/graph.hpp"
#include "kappa/graph_io.hpp"
#include "kappa/group.hpp"
#include "kappa/matrix_tree.hpp"
#include "kappa/number_theory.hpp"
#include "kappa/spectra.hpp"

namespace kappa {

enum class Method { automatic, matrix_tree, formula, spectrum, smatrix };
enum class TargetKind { group, graph, expr, clique_replaced, cyclic_divisor };

inline std::string method_name(Method m) {
  switch (m) {
    case Method::automatic: return "auto";
    case Method::matrix_tree: return "matrix-tree";
    case Method::formula: return "formula";
    case Method::spectrum: return "spectrum";
    case Method::smatrix: return "smatrix";
  }
  return "?";
}

inline Method parse_method(const std::string& s) {
  for (Method m : {Method::automatic, Method::matrix_tree, Method::formula, Method::spectrum, Method::smatrix})
    if (method_name(m) == s) return m;
  throw ParseError("unknown method '" + s + "' (auto, matrix-tree, formula, spectrum, smatrix)");
}

inline std::string target_kind_name(TargetKind k) {
  switch (k) {
    case TargetKind::group: return "group";
    case TargetKind::graph: return "graph";
    case TargetKind::expr: return "expr";
    case TargetKind::clique_replaced: return "cr";
    case TargetKind::cyclic_divisor: return "zn";
  }
  return "?";
}

inline TargetKind parse_target_kind(const std::string& s) {
  for (TargetKind k : {TargetKind::group, TargetKind::graph, TargetKind::expr, TargetKind::clique_replaced,
                       TargetKind::cyclic_divisor})
    if (target_kind_name(k) == s) return k;
  throw ParseError("unknown target kind '" + s + "' (group, graph, expr, cr, zn)");
}

inline const char* kCliqueReplacedGrammar =
    "clique-replaced spec grammar: BASE[x1,x2,...]\n"
    "  BASE is path:k | cycle:k | complete:k | divisor:n | an edge-list file path\n"
    "  one positive size per base vertex, e.g. path:3[1,2,1] or divisor:6[2,2,1,1]\n";

/// Parses `BASE[x1,...,xk]`.
inline CliqueReplacedSpec parse_clique_replaced(const std::string& text) {
  const auto open = text.rfind('[');
  if (open == std::string::npos || text.back() != ']')
    throw ParseError("cannot parse clique-replaced spec '" + text + "'\n" + kCliqueReplacedGrammar);
  const std::string base_text = text.substr(0, open);
  const std::string list = text.substr(open + 1, text.size() - open - 2);

  std::vector<std::uint64_t> sizes;
  std::stringstream ss(list);
  std::string field;
  while (std::getline(ss, field, ',')) {
    const auto first = field.find_first_not_of(' ');
    const auto last = field.find_last_not_of(' ');
    if (first == std::string::npos) throw ParseError("empty size in '" + text + "'\n" + kCliqueReplacedGrammar);
    field = field.substr(first, last - first + 1);
    if (field.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad size '" + field + "' in '" + text + "'\n" + kCliqueReplacedGrammar);
    sizes.push_back(std::stoull(field));
  }

  SimpleGraph base;
  const auto colon = base_text.find(':');
  const std::string name = colon == std::string::npos ? "" : base_text.substr(0, colon);
  auto param = [&]() -> std::uint64_t {
    const std::string v = base_text.substr(colon + 1);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("bad base parameter in '" + text + "'\n" + kCliqueReplacedGrammar);
    return std::stoull(v);
  };
  if (name == "path") base = path_graph(param());
  else if (name == "cycle") base = cycle_graph(param());
  else if (name == "complete") base = complete_graph(param());
  else if (name == "divisor") base = divisor_graph(param());
  else base = read_edge_list_file(base_text);
  return CliqueReplacedSpec(std::move(base), std::move(sizes));
}

struct Request {
  TargetKind kind = TargetKind::group;
  std::string target;
  Method method = Method::automatic;
  std::uint64_t factor_bound = 0;  // 0: default bound
};

struct ResultRecord {
  std::string input;
  std::string method;
  FactoredNat kappa;
  std::uint64_t vertices = 0;
  std::uint64_t universal_vertices = 0;
  double elapsed_ms = 0;

  std::string decimal() const { return kappa.value().get_str(); }
};

/// Thrown when the requested method does not apply to the target.
class MethodError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::string join_methods(const std::vector<Method>& ms) {
  std::string out;
  for (Method m : ms) out += (out.empty() ? "" : ", ") + method_name(m);
  return out;
}

/// Universal vertices of a power graph from the group family alone: a cyclic
/// p-group is complete, Z_n otherwise has 1 + phi(n), a generalized
/// quaternion group has 2, and every other group has only the identity.
inline std::optional<std::uint64_t> family_universal_count(const GroupSpec& spec) {
  const auto& a = spec.params;
  std::optional<std::uint64_t> cyclic_order;
  switch (spec.family) {
    case Family::cyclic: cyclic_order = a[0]; break;
    case Family::elementary: if (a[1] == 1) cyclic_order = a[0]; break;
    case Family::dihedral: if (a[0] == 1) cyclic_order = 2; break;
    case Family::quaternion: return 2;
    case Family::cayley_table: return std::nullopt;
    default: break;
  }
  if (!cyclic_order) return 1;
  const std::uint64_t n = *cyclic_order;
  if (n == 1 || nt::prime_power(n)) return n;
  return 1 + nt::euler_phi(n);
}

inline std::optional<FactoredNat> group_formula(const GroupSpec& spec) {
  const auto& a = spec.params;
  switch (spec.family) {
    case Family::cyclic: return kappa_cyclic(a[0]);
    case Family::elementary:
      if (a[1] == 1) return kappa_cyclic(a[0]);
      return kappa_epo(family_epo_counts(spec));
    case Family::dihedral: return kappa_cyclic(a[0]);  // Z_n plus n pendant involutions
    case Family::quaternion: return kappa_quaternion(a[0]);
    case Family::heisenberg: return kappa_heisenberg(a[0]);
    case Family::psl2: return kappa_psl2(a[0], a[1]);
    case Family::frobenius_pq: return kappa_frobenius_pq(a[0], a[1]);
    case Family::extraspecial_exp_p2:
    case Family::cayley_table: return std::nullopt;
  }
  return std::nullopt;
}

inline std::optional<CliqueExpr> group_expr(const GroupSpec& spec) {
  try {
    return family_expr(spec);
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

inline std::uint64_t clique_replaced_universal(const CliqueReplacedSpec& spec) {
  std::uint64_t count = 0;
  for (Vertex v : universal_vertices(spec.base())) count += spec.sizes()[v];
  return count;
}

}  // namespace detail

/// Methods that apply to a target, in `auto` preference order.
inline std::vector<Method> available_methods(const Request& r) {
  switch (r.kind) {
    case TargetKind::group: {
      const GroupSpec spec = parse_group_spec(r.target);
      std::vector<Method> out;
      if (detail::group_formula(spec)) out.push_back(Method::formula);
      if (spec.family != Family::cayley_table && detail::group_expr(spec)) out.push_back(Method::spectrum);
      out.push_back(Method::matrix_tree);
      return out;
    }
    case TargetKind::graph: return {Method::matrix_tree};
    case TargetKind::expr: return {Method::spectrum, Method::matrix_tree};
    case TargetKind::clique_replaced:
    case TargetKind::cyclic_divisor: return {Method::formula, Method::smatrix, Method::matrix_tree};
  }
  return {};
}

inline ResultRecord compute(const Request& r) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Method> methods = available_methods(r);
  Method method = r.method;
  if (method == Method::automatic) method = methods.front();
  if (std::find(methods.begin(), methods.end(), method) == methods.end())
    throw MethodError("method '" + method_name(method) + "' does not apply to " + target_kind_name(r.kind) + " '" +
                      r.target + "'; valid methods: " + detail::join_methods(methods));

  ResultRecord rec;
  rec.input = target_kind_name(r.kind) + " " + r.target;
  rec.method = method_name(method);
  auto bound = [&](std::uint64_t vertices) { return r.factor_bound ? r.factor_bound : default_factor_bound(vertices); };
  auto from_graph = [&](const SimpleGraph& g) {
    rec.vertices = g.size();
    rec.universal_vertices = universal_vertices(g).size();
    rec.kappa = FactoredNat::factor(kappa_matrix_tree(g), bound(g.size()));
  };

  switch (r.kind) {
    case TargetKind::group: {
      const GroupSpec spec = parse_group_spec(r.target);
      if (method == Method::matrix_tree) {
        from_graph(power_graph(build_group(spec)));
      } else if (method == Method::formula) {
        rec.kappa = *detail::group_formula(spec);
        rec.vertices = spec.order();
        rec.universal_vertices = *detail::family_universal_count(spec);
      } else {
        const CliqueExpr e = *detail::group_expr(spec);
        rec.kappa = kappa_from_spectrum(spectrum(e));
        rec.vertices = e.vertex_count();
        rec.universal_vertices = universal_vertex_count(e);
      }
      break;
    }
    case TargetKind::graph:
      from_graph(read_edge_list_file(r.target));
      break;
    case TargetKind::expr: {
      const CliqueExpr e = parse_clique_expr(r.target);
      if (method == Method::matrix_tree) {
        from_graph(expr_to_graph(e));
      } else {
        rec.kappa = kappa_from_spectrum(spectrum(e));
        rec.vertices = e.vertex_count();
        rec.universal_vertices = universal_vertex_count(e);
      }
      break;
    }
    case TargetKind::clique_replaced:
    case TargetKind::cyclic_divisor: {
      std::optional<CliqueReplacedSpec> spec;
      if (r.kind == TargetKind::clique_replaced) {
        spec = parse_clique_replaced(r.target);
      } else {
        if (r.target.empty() || r.target.find_first_not_of("0123456789") != std::string::npos || std::stoull(r.target) == 0)
          throw ParseError("zn target must be a positive integer, got '" + r.target + "'");
        spec = cyclic_divisor_spec(std::stoull(r.target));
      }
      if (method == Method::matrix_tree) {
        from_graph(clique_replaced(*spec));
      } else {
        rec.vertices = spec->n();
        rec.universal_vertices = detail::clique_replaced_universal(*spec);
        if (method == Method::smatrix) rec.kappa = kappa_clique_replaced_smatrix(*spec, SMatrixConvention::quotient, bound(spec->n()));
        else if (r.kind == TargetKind::cyclic_divisor) rec.kappa = kappa_cyclic(spec->n(), bound(spec->n()));
        else rec.kappa = kappa_clique_replaced_formula(*spec, bound(spec->n()));
      }
      break;
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

// ---------------------------------------------------------------------------
// JSON form of a ResultRecord.

inline nlohmann::json to_json(const ResultRecord& r) {
  nlohmann::json factored = nlohmann::json::array();
  for (auto [p, e] : r.kappa.primes()) factored.push_back({p, e});
  return {
      {"input", r.input},
      {"method", r.method},
      {"kappa", r.decimal()},
      {"factored", factored},
      {"residual", r.kappa.residual().get_str()},
      {"vertices", r.vertices},
      {"universal_vertices", r.universal_vertices},
      {"elapsed_ms", r.elapsed_ms},
  };
}

/// Rebuilds a record from its JSON form, checking that the factored list and
/// the decimal string denote the same integer.
inline ResultRecord record_from_json(const nlohmann::json& j) {
  ResultRecord r;
  try {
    r.input = j.at("input").get<std::string>();
    r.method = j.at("method").get<std::string>();
    r.vertices = j.at("vertices").get<std::uint64_t>();
    r.universal_vertices = j.at("universal_vertices").get<std::uint64_t>();
    r.elapsed_ms = j.at("elapsed_ms").get<double>();
    const BigInt decimal(j.at("kappa").get<std::string>());
    const BigInt residual(j.at("residual").get<std::string>());
    FactoredNat f = residual == 0 ? FactoredNat::zero() : FactoredNat::factor(residual, 1);
    for (const auto& pe : j.at("factored"))
      f *= FactoredNat::prime_power(pe.at(0).get<std::uint64_t>(), pe.at(1).get<std::uint64_t>());
    if (f.value() != decimal) throw ValidationError("result record: factored form does not match decimal value");
    r.kappa = f;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("result record: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ParseError("result record: malformed integer");
  }
  return r;
}

}  // namespace kappa
